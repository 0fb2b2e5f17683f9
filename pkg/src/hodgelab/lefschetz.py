"""Lefschetz-type operators and the contraction family P_k.

L is wedging with the fundamental 2-form omega = g(J., .); its metric
adjoint is realized as Lstar(beta) = 1/2 sum_i J e_i -| (e_i -| beta), and a
shipped test pins this against adjoint_wedge(omega, .) so the 1/2 cannot
drift.  P_k contracts k slots of one form against J-rotated slots of the
other; the sum runs over all ordered k-tuples of basis indices (computed
over increasing tuples with the k! multiplicity factored in, which is the
same value).
"""

from __future__ import annotations

from itertools import combinations
from math import factorial

from .errors import ContractionUnderflowError, NotInLambdaPError, SpaceMismatchError
from .exterior import Form, adjoint_wedge, contract, contract_index, inner, wedge
from .hermitian import (
    ComplexStructure,
    bidegree_project,
    in_lambda_p,
    j_pullback,
    lambda_basis,
)
from .linalg import exact_nullspace


class KahlerData:
    """A complex structure together with its fundamental 2-form."""

    __slots__ = ("j", "omega")

    def __init__(self, j_struct: ComplexStructure):
        self.j = j_struct
        self.omega = kahler_form(j_struct)


def kahler_form(j_struct: ComplexStructure) -> Form:
    """omega(X, Y) = <J X, Y>; for the standard structure this is
    sum_i e^{2i-1} ^ e^{2i}."""
    space = j_struct.space
    coeffs = {}
    n = space.dim
    for i in range(1, n + 1):
        col = [row[i - 1] for row in j_struct.rows]
        for j in range(i + 1, n + 1):
            val = col[j - 1]  # omega(e_i, e_j) = (J e_i)_j
            if val != 0:
                coeffs[(1 << (i - 1)) | (1 << (j - 1))] = val
    return Form(space, 2, coeffs)


def lefschetz_l(omega: Form, alpha: Form) -> Form:
    """Exterior multiplication with the fundamental form."""
    return wedge(omega, alpha)


def lefschetz_lstar(j_struct: ComplexStructure, alpha: Form) -> Form:
    """Adjoint of lefschetz_l; returns zero on degrees below 2."""
    if alpha.space != j_struct.space:
        raise SpaceMismatchError(f"{alpha.space} vs {j_struct.space}")
    space = alpha.space
    if alpha.degree < 2:
        return space.zero_form(0)
    out = space.zero_form(alpha.degree - 2)
    for i in range(1, space.dim + 1):
        out = out + contract(j_struct.basis_image(i), contract_index(i, alpha))
    return out / 2


def is_primitive(j_struct: ComplexStructure, alpha: Form, tol: float = 1e-9) -> bool:
    """A form is primitive when the adjoint Lefschetz operator kills it."""
    ls = lefschetz_lstar(j_struct, alpha)
    if alpha.space.backend == "exact":
        return ls.is_zero()
    scale = max(float(alpha.norm_sq()), 1.0)
    return float(ls.norm_sq()) <= tol * tol * scale


def p_k(j_struct: ComplexStructure, alpha: Form, beta: Form, k: int) -> Form:
    """The k-fold contraction pairing of degree r + s - 2k.

    P_0 is the plain wedge; for primitive p-forms P_p(alpha, beta) is the
    scalar p! <alpha, J beta>.  Tuples with a repeated index contribute
    nothing, so the ordered-tuple sum equals k! times the increasing-tuple
    sum computed here.
    """
    if alpha.space != beta.space or alpha.space != j_struct.space:
        raise SpaceMismatchError("operands live on different spaces")
    r, s = alpha.degree, beta.degree
    if k < 0 or k > min(r, s):
        raise ContractionUnderflowError(f"cannot contract {k} slots out of ({r}, {s})")
    space = alpha.space
    if k == 0:
        return wedge(alpha, beta)
    out = space.zero_form(r + s - 2 * k)
    j_images = [j_struct.basis_image(i) for i in range(1, space.dim + 1)]
    for combo in combinations(range(1, space.dim + 1), k):
        left = alpha
        right = beta
        for i in reversed(combo):  # innermost contraction uses the last index
            left = contract_index(i, left)
            if left.is_zero():
                break
            right = contract(j_images[i - 1], right)
            if right.is_zero():
                break
        else:
            out = out + wedge(left, right)
    return factorial(k) * out


def alpha_from_holomorphic(j_struct: ComplexStructure, omega_form: Form) -> Form:
    """The J-invariant 2-form (X, Y) -> <J X -| Omega, Y -| Omega>.

    Requires Omega of type (p,0)+(0,p); the result lands in the (1,1)
    component and satisfies
    P_{p-1}(Omega, J Omega) = 2 (-1)^p (p-1)! alpha_Omega.
    """
    space = omega_form.space
    if omega_form.is_zero():
        return space.zero_form(2)
    if omega_form.degree < 1:
        raise NotInLambdaPError("need a form of degree >= 1")
    if not in_lambda_p(j_struct, omega_form):
        raise NotInLambdaPError("form is not of type (p,0)+(0,p)")
    contractions = [contract_index(i, omega_form) for i in range(1, space.dim + 1)]
    j_contractions = [
        contract(j_struct.basis_image(i), omega_form) for i in range(1, space.dim + 1)
    ]
    coeffs = {}
    for i in range(1, space.dim + 1):
        for j in range(i + 1, space.dim + 1):
            val = inner(j_contractions[i - 1], contractions[j - 1])
            if val != 0:
                coeffs[(1 << (i - 1)) | (1 << (j - 1))] = val
    return Form(space, 2, coeffs)


def primitive_basis(j_struct: ComplexStructure, degree: int):
    """Exact basis of the primitive forms of a given degree (cached).

    Assembled as the nullspace of the adjoint Lefschetz operator on the
    increasing-multi-index basis.
    """
    key = ("primitive", degree)
    cache = j_struct._misc_cache
    if key in cache:
        return cache[key]
    from .exterior import basis_masks

    space = j_struct.space
    masks = basis_masks(space.dim, degree)
    if degree < 2:
        basis = [Form(space, degree, {m: 1}) for m in masks]
        cache[key] = basis
        return basis
    target_masks = basis_masks(space.dim, degree - 2)
    pos = {m: i for i, m in enumerate(target_masks)}
    rows = []
    for t in range(len(target_masks)):
        rows.append([0] * len(masks))
    for col, m in enumerate(masks):
        image = lefschetz_lstar(j_struct, Form(space, degree, {m: 1}))
        for im, c in image.coeffs.items():
            rows[pos[im]][col] = c
    basis = []
    for vec in exact_nullspace(rows, len(masks)):
        coeffs = {m: v for m, v in zip(masks, vec) if v != 0}
        basis.append(Form(space, degree, coeffs))
    cache[key] = basis
    return basis


def lambda_p_primitivity_check(j_struct: ComplexStructure, degree: int) -> bool:
    """Every (p,0)+(0,p) form is primitive; used as a structural self-test."""
    for b in lambda_basis(j_struct, degree).forms:
        if not lefschetz_lstar(j_struct, b).is_zero():
            return False
    return True
