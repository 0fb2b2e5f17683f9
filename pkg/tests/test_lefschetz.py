"""Lefschetz-type operators, the contraction pairing family, and alpha_Omega."""

from math import factorial

import pytest

from hodgelab.errors import ContractionUnderflowError, NotInLambdaPError
from hodgelab.exterior import Form, Space, adjoint_wedge, basis_masks, inner, wedge
from hodgelab.hermitian import ComplexStructure, bidegree_project, j_pullback, lambda_basis
from hodgelab.lefschetz import (
    KahlerData,
    alpha_from_holomorphic,
    is_primitive,
    kahler_form,
    lambda_p_primitivity_check,
    lefschetz_l,
    lefschetz_lstar,
    p_k,
    primitive_basis,
)
from hodgelab.rng import SplitMix64, random_form

S4 = Space(4)
J4 = ComplexStructure.standard(S4)
OMEGA4 = kahler_form(J4)
S6 = Space(6)
J6 = ComplexStructure.standard(S6)


def random_lambda(j_struct, degree, rng, terms=3):
    basis = lambda_basis(j_struct, degree).forms
    out = j_struct.space.zero_form(degree)
    for _ in range(terms):
        out = out + rng.small_int() * basis[rng.next_u64() % len(basis)]
    return out


def random_primitive(j_struct, degree, rng, terms=3):
    basis = primitive_basis(j_struct, degree)
    out = j_struct.space.zero_form(degree)
    for _ in range(terms):
        out = out + rng.small_int() * basis[rng.next_u64() % len(basis)]
    return out


def test_kahler_form_structure():
    assert OMEGA4 == S4.form(2, {(1, 2): 1, (3, 4): 1})
    assert inner(OMEGA4, OMEGA4) == 2  # half the dimension
    data = KahlerData(J4)
    assert data.omega == OMEGA4


def test_lefschetz_l_examples():
    one = S4.form(0, {(): 1})
    assert lefschetz_l(OMEGA4, one) == OMEGA4
    assert lefschetz_l(OMEGA4, OMEGA4) == 2 * S4.basis_form(1, 2, 3, 4)
    top = S4.basis_form(1, 2, 3, 4)
    assert lefschetz_l(OMEGA4, top).is_zero()


def test_lefschetz_lstar_examples():
    out = lefschetz_lstar(J4, OMEGA4)
    assert out.degree == 0 and out.scalar_value() == 2
    assert lefschetz_lstar(J4, S4.basis_form(1)).is_zero()
    assert lefschetz_lstar(J4, S4.basis_form(1, 3)).is_zero()


@pytest.mark.parametrize("dim", [4, 6, 8])
def test_lstar_equals_adjoint_wedge_full_basis(dim):
    space = Space(dim)
    j_struct = ComplexStructure.standard(space)
    omega = kahler_form(j_struct)
    for p in range(0, dim + 1):
        for mask in basis_masks(dim, p):
            form = Form(space, p, {mask: 1})
            if p < 2:
                assert lefschetz_lstar(j_struct, form).is_zero()
            else:
                assert lefschetz_lstar(j_struct, form) == adjoint_wedge(omega, form)


def test_is_primitive_examples():
    assert not is_primitive(J4, OMEGA4)
    assert is_primitive(J4, S4.basis_form(1, 3))
    assert is_primitive(J4, S4.basis_form(2))


def test_p_k_examples():
    assert p_k(J4, S4.basis_form(1), S4.basis_form(2), 0) == S4.basis_form(1, 2)
    out = p_k(J4, S4.basis_form(1), S4.basis_form(1), 1)
    assert out.degree == 0 and out.scalar_value() == 0
    with pytest.raises(ContractionUnderflowError):
        p_k(J4, S4.basis_form(1), S4.basis_form(1, 2), 2)


@pytest.mark.parametrize("dim", [4, 6, 8])
def test_p_p_evaluates_inner_product_on_primitive_forms(dim):
    """P_p(alpha, beta) = p! <alpha, J beta> for primitive p-forms."""
    space = Space(dim)
    j_struct = ComplexStructure.standard(space)
    rng = SplitMix64(83 + dim)
    for p in range(1, 4):
        if not primitive_basis(j_struct, p):
            continue
        for _ in range(8):
            a = random_primitive(j_struct, p, rng)
            b = random_primitive(j_struct, p, rng)
            val = p_k(j_struct, a, b, p)
            assert val.degree == 0
            assert val.scalar_value() == factorial(p) * inner(a, j_pullback(j_struct, b))


def test_lambda_forms_are_primitive():
    for j_struct in (J4, J6):
        for p in range(1, j_struct.half_dim + 1):
            assert lambda_p_primitivity_check(j_struct, p)


def test_alpha_from_holomorphic_contraction_table():
    big_omega = S4.form(2, {(1, 3): 1, (2, 4): -1})
    alpha = alpha_from_holomorphic(J4, big_omega)
    # e1 -| Omega = e3, e2 -| Omega = -e4, J e1 = e2,
    # so alpha(e1, e2) = <-e4, -e4> = 1
    assert alpha.coefficient(1, 2) == 1
    assert alpha == OMEGA4


def test_alpha_from_holomorphic_zero_and_membership():
    assert alpha_from_holomorphic(J4, S4.zero_form(2)).is_zero()
    with pytest.raises(NotInLambdaPError):
        alpha_from_holomorphic(J4, OMEGA4)


def test_alpha_form_is_j_invariant_one_one():
    rng = SplitMix64(97)
    for j_struct, degrees in ((J4, (2,)), (J6, (2, 3))):
        for p in degrees:
            for _ in range(6):
                om = random_lambda(j_struct, p, rng)
                alpha = alpha_from_holomorphic(j_struct, om)
                assert j_pullback(j_struct, alpha) == alpha
                assert bidegree_project(j_struct, alpha, 1, 1) == alpha


def test_alpha_pairing_identity():
    """P_{p-1}(Omega, J Omega) = 2 (-1)^p (p-1)! alpha_Omega."""
    rng = SplitMix64(101)
    for j_struct, degrees in ((J4, (2,)), (J6, (2, 3))):
        for p in degrees:
            for _ in range(6):
                om = random_lambda(j_struct, p, rng)
                alpha = alpha_from_holomorphic(j_struct, om)
                lhs = p_k(j_struct, om, j_pullback(j_struct, om), p - 1)
                assert lhs == (2 * (-1) ** p * factorial(p - 1)) * alpha


def test_iterated_lstar_chain_sign():
    """(Lstar)^{p-1}(Omega ^ J Omega) = (-1)^{p(p-1)/2} P_{p-1}(Omega, J Omega).

    The exponent follows from the recursion with primitive factors: the
    k-th step contributes (-1)^{p-k-1}, and the sum over k < p-1 is
    p(p-1)/2 modulo 2.
    """
    rng = SplitMix64(103)
    for j_struct, degrees in ((J4, (2,)), (J6, (2, 3))):
        for p in degrees:
            for _ in range(6):
                om = random_lambda(j_struct, p, rng)
                jom = j_pullback(j_struct, om)
                it = wedge(om, jom)
                for _ in range(p - 1):
                    it = lefschetz_lstar(j_struct, it)
                expected = ((-1) ** (p * (p - 1) // 2)) * p_k(j_struct, om, jom, p - 1)
                assert it == expected


def test_recursion_on_dense_random_forms():
    """Single-step recursion spot check independent of the campaign driver."""
    space = Space(6)
    rng = SplitMix64(107)
    for _ in range(10):
        r = rng.randint(2, 3)
        s = rng.randint(2, 3)
        alpha = random_form(space, r, rng, terms=6)
        beta = random_form(space, s, rng, terms=6)
        k = 0
        lhs = lefschetz_lstar(J6, p_k(J6, alpha, beta, k))
        rhs = (
            p_k(J6, lefschetz_lstar(J6, alpha), beta, k)
            + p_k(J6, alpha, lefschetz_lstar(J6, beta), k)
            + ((-1) ** (r - k - 1)) * p_k(J6, alpha, beta, k + 1)
        )
        assert lhs == rhs
