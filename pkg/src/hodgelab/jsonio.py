"""JSON encodings of the library's value types.

Form format (1-based strictly increasing indices):

    {"dim": n, "degree": p, "backend": "exact" | "float",
     "terms": [{"index": [i1, ..., ip], "num": a, "den": b}, ...]}

Float-backend terms carry {"index": [...], "value": x} instead of num/den.
Complex structures are {"dim": 2k, "matrix": row-major} with "standard"
accepted as a shorthand for the matrix; skew endomorphisms are
{"dim": n, "matrix": row-major}.  Frame triples are three {re, im} pairs of
real 1-forms plus the volume form.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import HodgeLabError
from .exterior import Form, Space
from .frames import ComplexForm, FrameTriple
from .harmonic import SkewEndo, SpectralDecomposition
from .hermitian import ComplexStructure


class ParseError(HodgeLabError):
    """Malformed or inconsistent JSON payload."""


def _space_from(obj) -> Space:
    try:
        return Space(int(obj["dim"]), obj.get("backend", "exact"))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad space description: {exc}") from exc


def form_to_dict(form: Form) -> dict:
    terms = []
    for idx, coeff in form.terms():
        entry: dict = {"index": list(idx)}
        if form.space.backend == "exact":
            frac = Fraction(coeff)
            entry["num"] = frac.numerator
            entry["den"] = frac.denominator
        else:
            entry["value"] = float(coeff)
        terms.append(entry)
    return {
        "dim": form.space.dim,
        "degree": form.degree,
        "backend": form.space.backend,
        "terms": terms,
    }


def form_from_dict(obj) -> Form:
    space = _space_from(obj)
    try:
        degree = int(obj["degree"])
        terms = {}
        for entry in obj.get("terms", []):
            idx = tuple(int(i) for i in entry["index"])
            if space.backend == "exact":
                val = Fraction(int(entry["num"]), int(entry.get("den", 1)))
            else:
                val = float(entry["value"])
            terms[idx] = terms.get(idx, 0) + val
        return space.form(degree, terms)
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"bad form description: {exc}") from exc


def _matrix_to_rows(obj, n: int, space: Space):
    flat = obj["matrix"]
    if flat == "standard":
        return None
    if len(flat) == n and all(isinstance(r, (list, tuple)) for r in flat):
        rows = [list(r) for r in flat]
    elif len(flat) == n * n:
        rows = [list(flat[i * n : (i + 1) * n]) for i in range(n)]
    else:
        raise ParseError("matrix payload has the wrong size")
    if space.backend == "exact":
        return [[int(v) if isinstance(v, int) else Fraction(v) for v in row] for row in rows]
    return [[float(v) for v in row] for row in rows]


def complex_structure_to_dict(j: ComplexStructure) -> dict:
    return {
        "dim": j.space.dim,
        "backend": j.space.backend,
        "matrix": [[_num(v) for v in row] for row in j.rows],
    }


def complex_structure_from_dict(obj) -> ComplexStructure:
    space = _space_from(obj)
    try:
        rows = _matrix_to_rows(obj, space.dim, space)
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"bad matrix payload: {exc}") from exc
    if rows is None:
        return ComplexStructure.standard(space)
    return ComplexStructure(space, rows)


def skew_endo_to_dict(a: SkewEndo) -> dict:
    return {
        "dim": a.space.dim,
        "backend": a.space.backend,
        "matrix": [[_num(v) for v in row] for row in a.rows],
    }


def skew_endo_from_dict(obj) -> SkewEndo:
    space = _space_from(obj)
    try:
        rows = _matrix_to_rows(obj, space.dim, space)
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"bad matrix payload: {exc}") from exc
    if rows is None:
        raise ParseError("skew matrices have no standard shorthand")
    return SkewEndo(space, rows)


def _num(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else {"num": v.numerator, "den": v.denominator}
    return v


def spectral_to_dict(d: SpectralDecomposition) -> dict:
    return {
        "dim": d.space.dim,
        "kernel_rank": d.kernel_rank,
        "clusters": [
            {
                "mu": c.mu,
                "multiplicity": c.multiplicity,
                "omega": form_to_dict(c.omega) if c.omega is not None else None,
            }
            for c in d.clusters
        ],
    }


def frame_to_dict(frame: FrameTriple) -> dict:
    return {
        "gammas": [
            {"re": form_to_dict(g.re), "im": form_to_dict(g.im)} for g in frame.gammas
        ],
        "nu": form_to_dict(frame.nu),
    }


def frame_from_dict(obj) -> FrameTriple:
    try:
        gammas = [
            ComplexForm(form_from_dict(g["re"]), form_from_dict(g["im"]))
            for g in obj["gammas"]
        ]
        nu = form_from_dict(obj["nu"]) if "nu" in obj else None
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"bad frame description: {exc}") from exc
    return FrameTriple(gammas, nu)
