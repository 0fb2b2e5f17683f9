"""Complex-structure machinery on the exterior algebra.

Two extensions of an orthogonal complex structure J (J^2 = -I) act on forms:

* ``j_pullback``: (J alpha)(v1, ..., vp) = alpha(J v1, ..., J vp),
* ``curly_j``: the derivation (cal-J alpha)(v1, ..., vp) =
  sum_k alpha(v1, ..., J vk, ..., vp).

The square of the derivation has integer spectrum -(p-q)^2 on degree p+q,
which grades each degree into bidegree components; projections are Lagrange
polynomials in the squared derivation, hence exact on the rational backend.
``lambda_p`` denotes the real forms of complex type (p,0)+(0,p), the
0-eigenspace, and bb_j is the complex-structure action (1/p) cal-J on it.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import (
    DegreeMismatchError,
    DegreeUnderflowError,
    InvariantViolationError,
    NotInLambdaPError,
    SpaceMismatchError,
)
from .exterior import (
    FLOAT_TOL,
    Form,
    Space,
    Vector,
    basis_masks,
    inner,
    mask_to_indices,
    wedge,
)


class ComplexStructure:
    """An orthogonal endomorphism J with J^2 = -I on an even-dimensional space.

    ``rows`` is the matrix acting on column vectors of components, so the
    image of the i-th basis vector is column i.
    """

    __slots__ = ("space", "rows", "_pullback_rows", "_lambda_cache", "_misc_cache")

    def __init__(self, space: Space, rows):
        if space.dim % 2:
            raise InvariantViolationError("complex structure needs even dimension")
        rows = tuple(tuple(space.scalar(v) for v in row) for row in rows)
        if len(rows) != space.dim or any(len(r) != space.dim for r in rows):
            raise InvariantViolationError("matrix shape must match the space dimension")
        self.space = space
        self.rows = rows
        self._validate()
        # row i of J is the coefficient list of the pullback of e^i
        self._pullback_rows = tuple(
            tuple((j, v) for j, v in enumerate(row) if v != 0) for row in rows
        )
        self._lambda_cache: dict = {}
        self._misc_cache: dict = {}

    def _validate(self):
        n = self.space.dim
        rows = self.rows
        sq_plus_id = [
            [sum(rows[i][k] * rows[k][j] for k in range(n)) + (1 if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        ortho_defect = [
            [sum(rows[k][i] * rows[k][j] for k in range(n)) - (1 if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        if self.space.backend == "exact":
            bad = any(v != 0 for row in sq_plus_id for v in row) or any(
                v != 0 for row in ortho_defect for v in row
            )
        else:
            bad = any(abs(v) > FLOAT_TOL for row in sq_plus_id for v in row) or any(
                abs(v) > FLOAT_TOL for row in ortho_defect for v in row
            )
        if bad:
            raise InvariantViolationError("matrix is not an orthogonal complex structure")

    @classmethod
    def standard(cls, space: Space) -> "ComplexStructure":
        """J e_{2i-1} = e_{2i}, the block rotation structure."""
        n = space.dim
        one = 1 if space.backend == "exact" else 1.0
        rows = [[0] * n for _ in range(n)]
        for i in range(0, n, 2):
            rows[i][i + 1] = -one
            rows[i + 1][i] = one
        return cls(space, rows)

    @property
    def half_dim(self) -> int:
        return self.space.dim // 2

    def apply(self, v: Vector) -> Vector:
        if v.space != self.space:
            raise SpaceMismatchError(f"{v.space} vs {self.space}")
        n = self.space.dim
        comps = [sum(self.rows[i][j] * v.components[j] for j in range(n)) for i in range(n)]
        return Vector(self.space, comps)

    def basis_image(self, i: int) -> Vector:
        """J e_i as a vector (column i of the matrix), 1-based."""
        return Vector(self.space, [row[i - 1] for row in self.rows])

    def __eq__(self, other):
        return (
            isinstance(other, ComplexStructure)
            and self.space == other.space
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.space, self.rows))

    def __repr__(self):
        return f"ComplexStructure(dim={self.space.dim})"


def _pullback_one_form_mask(j_struct: ComplexStructure, index: int) -> Form:
    """Pullback of the basis 1-form e^index (1-based) under J."""
    row = j_struct._pullback_rows[index - 1]
    return Form(j_struct.space, 1, {1 << col: val for col, val in row})


def j_pullback(j_struct: ComplexStructure, alpha: Form) -> Form:
    """(J alpha)(v1, ..., vp) = alpha(J v1, ..., J vp); an isometry with
    J(J alpha) = (-1)^p alpha."""
    if alpha.space != j_struct.space:
        raise SpaceMismatchError(f"{alpha.space} vs {j_struct.space}")
    if alpha.degree == 0:
        return alpha
    out = alpha.space.zero_form(alpha.degree)
    for mask, coeff in alpha.coeffs.items():
        term = None
        for i in mask_to_indices(mask):
            factor = _pullback_one_form_mask(j_struct, i)
            term = factor if term is None else wedge(term, factor)
        out = out + coeff * term
    return out


def curly_j(j_struct: ComplexStructure, alpha: Form) -> Form:
    """The derivation extension: J is applied to one argument slot at a time."""
    if alpha.space != j_struct.space:
        raise SpaceMismatchError(f"{alpha.space} vs {j_struct.space}")
    space = alpha.space
    if alpha.degree == 0:
        return space.zero_form(0)
    out = space.zero_form(alpha.degree)
    for mask, coeff in alpha.coeffs.items():
        indices = mask_to_indices(mask)
        for r, i in enumerate(indices):
            prefix = mask & ((1 << (i - 1)) - 1)
            suffix = mask ^ prefix ^ (1 << (i - 1))
            pulled = _pullback_one_form_mask(j_struct, i)
            piece = wedge(Form(space, r, {prefix: coeff}), pulled)
            piece = wedge(piece, Form(space, len(indices) - r - 1,
                                      {suffix: 1 if space.backend == "exact" else 1.0}))
            out = out + piece
    return out


def curly_j_squared(j_struct: ComplexStructure, alpha: Form) -> Form:
    return curly_j(j_struct, curly_j(j_struct, alpha))


def bidegree_project(j_struct: ComplexStructure, alpha: Form, p: int, q: int) -> Form:
    """Component of alpha in the -(p-q)^2 eigenspace of the squared derivation.

    Realized as exact Lagrange interpolation in curly_j^2 over the spectrum
    {-(s-2j)^2 : 0 <= j <= s//2} of degree s = p+q; the components over all
    (p, q) with p >= q sum back to alpha and are mutually orthogonal.
    """
    if p < q or q < 0:
        raise DegreeMismatchError("need p >= q >= 0")
    if p + q != alpha.degree:
        raise DegreeMismatchError(f"p+q = {p + q} does not match degree {alpha.degree}")
    s = alpha.degree
    target = -((p - q) ** 2)
    result = alpha
    exact = alpha.space.backend == "exact"
    for j in range(s // 2 + 1):
        ev = -((s - 2 * j) ** 2)
        if ev == target:
            continue
        num = curly_j_squared(j_struct, result) - ev * result
        denom = target - ev
        result = num * (Fraction(1, denom) if exact else 1.0 / denom)
    return result


def lambda_p_project(j_struct: ComplexStructure, alpha: Form) -> Form:
    """Projection onto the real forms of complex type (p,0)+(0,p)."""
    return bidegree_project(j_struct, alpha, alpha.degree, 0)


def in_lambda_p(j_struct: ComplexStructure, alpha: Form, tol: float = FLOAT_TOL) -> bool:
    proj = lambda_p_project(j_struct, alpha)
    if alpha.space.backend == "exact":
        return proj == alpha
    return proj.isclose(alpha, tol)


def bb_j(j_struct: ComplexStructure, alpha: Form) -> Form:
    """The complex-structure action on type-(p,0)+(0,p) forms: (1/p) curly_j.

    Coincides with inserting J into the first argument slot and squares to -1
    on that subspace.
    """
    if alpha.is_zero():
        return alpha
    if alpha.degree == 0:
        raise DegreeUnderflowError("bb_j needs degree >= 1")
    if not in_lambda_p(j_struct, alpha):
        raise NotInLambdaPError("form is not of type (p,0)+(0,p)")
    p = alpha.degree
    scale = Fraction(1, p) if alpha.space.backend == "exact" else 1.0 / p
    return curly_j(j_struct, alpha) * scale


def first_slot_insertion(j_struct: ComplexStructure, alpha: Form) -> Form:
    """(X1, ..., Xp) -> alpha(J X1, X2, ..., Xp), read off on basis tuples.

    Only alternating for forms of type (p,0)+(0,p); used to cross-check bb_j.
    """
    from .exterior import contract

    space = alpha.space
    p = alpha.degree
    out = {}
    for mask in basis_masks(space.dim, p):
        idx = mask_to_indices(mask)
        partial = contract(j_struct.basis_image(idx[0]), alpha)
        for i in idx[1:]:
            partial = contract(space.basis_vector(i), partial)
        val = partial.scalar_value()
        if val != 0:
            out[mask] = val
    return Form(space, p, out)


class LambdaBasis:
    """Deterministic orthogonal basis of a type-(p,0)+(0,p) subspace.

    The increasing-multi-index basis is projected in lexicographic order and
    orthogonalized by exact Gram-Schmidt; vectors are rescaled to primitive
    integer coefficient lists, so expansion coefficients are <f, b>/<b, b>.
    Normalization to unit length is impossible over the rationals, which is
    why the basis is orthogonal rather than orthonormal.
    """

    def __init__(self, j_struct: ComplexStructure, degree: int):
        self.j = j_struct
        self.degree = degree
        space = j_struct.space
        self.forms: list[Form] = []
        for mask in basis_masks(space.dim, degree):
            candidate = lambda_p_project(j_struct, Form(space, degree, {mask: 1}))
            for b in self.forms:
                coeff = Fraction(inner(candidate, b), inner(b, b))
                candidate = candidate - coeff * b
            if not candidate.is_zero():
                self.forms.append(_primitive_integer_form(candidate))
        self.norms_sq = [inner(b, b) for b in self.forms]

    @property
    def dim(self) -> int:
        return len(self.forms)

    def expand(self, alpha: Form) -> list:
        """Coefficients of a member form over the orthogonal basis."""
        return [Fraction(inner(alpha, b), ns) for b, ns in zip(self.forms, self.norms_sq)]

    def reconstruct(self, coords) -> Form:
        out = self.j.space.zero_form(self.degree)
        for c, b in zip(coords, self.forms):
            if c != 0:
                out = out + c * b
        return out


def _primitive_integer_form(alpha: Form) -> Form:
    denom = 1
    for c in alpha.coeffs.values():
        denom = denom * Fraction(c).denominator // gcd(denom, Fraction(c).denominator)
    scaled = {m: int(c * denom) for m, c in alpha.coeffs.items()}
    g = reduce(gcd, (abs(v) for v in scaled.values()), 0)
    if g > 1:
        scaled = {m: v // g for m, v in scaled.items()}
    lead = scaled[min(scaled)]
    if lead < 0:
        scaled = {m: -v for m, v in scaled.items()}
    return Form(alpha.space, alpha.degree, scaled)


def lambda_basis(j_struct: ComplexStructure, degree: int) -> LambdaBasis:
    """Cached orthogonal basis of the (p,0)+(0,p) forms of the given degree."""
    if j_struct.space.backend != "exact":
        raise InvariantViolationError("lambda bases are computed on the exact backend")
    cache = j_struct._lambda_cache
    if degree not in cache:
        cache[degree] = LambdaBasis(j_struct, degree)
    return cache[degree]


def bb_j_matrix(j_struct: ComplexStructure, degree: int) -> list[list[Fraction]]:
    """Matrix of bb_j over the cached orthogonal basis (cached per degree)."""
    key = ("bbj", degree)
    cache = j_struct._misc_cache
    if key not in cache:
        basis = lambda_basis(j_struct, degree)
        cols = [basis.expand(bb_j(j_struct, b)) for b in basis.forms]
        cache[key] = [[cols[j][i] for j in range(basis.dim)] for i in range(basis.dim)]
    return cache[key]
