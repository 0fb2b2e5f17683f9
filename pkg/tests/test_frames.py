"""Complex coframe triples, transitions, star identities, and obstructions."""

import cmath

import numpy as np
import pytest

from hodgelab.errors import (
    FrameRankError,
    InvalidTransitionError,
    NotAValidFrameError,
)
from hodgelab.exterior import Space
from hodgelab.frames import (
    ComplexForm,
    FrameTriple,
    TransitionData,
    cross,
    expand_in_frame,
    frame_residuals,
    obstruction_kernel,
    r_from_coeffs,
    r_matrix,
    real_coefficient_basis,
    star_triple,
    symmetric_skew_split,
    transition_p,
)


def test_standard_frame():
    frame = FrameTriple.standard()
    assert star_triple(frame) == pytest.approx(1.0)
    td = transition_p(frame)
    assert np.allclose(td.p_matrix, np.eye(3))
    assert td.k == pytest.approx(1.0)


def test_cross_examples():
    frame = FrameTriple.standard()
    crossed = cross(frame.gammas)
    s3 = Space(3, "float")
    assert crossed[0].re.isclose(s3.basis_form(2, 3))
    assert crossed[1].re.isclose(-s3.basis_form(1, 3))
    assert crossed[2].re.isclose(s3.basis_form(1, 2))
    # equal first entries kill the third component
    g = frame.gammas
    crossed_dup = cross((g[0], g[0], g[2]))
    assert crossed_dup[2].norm_sq() == pytest.approx(0.0)


def test_r_matrix_hand_example():
    frame = FrameTriple.standard()
    alpha = ComplexForm.from_coords([0.0, 1.0, 0.0])  # e^2
    r = r_matrix(alpha, frame)
    expected = np.array([[0, 0, -1], [0, 0, 0], [1, 0, 0]], dtype=complex)
    assert np.allclose(r, expected)
    assert np.allclose(r, -r.T)


def test_r_matrix_cross_identity():
    for seed in range(25):
        frame = FrameTriple.random(seed)
        rng = np.random.default_rng(seed)
        alpha = ComplexForm.from_coords(rng.normal(size=3) + 1j * rng.normal(size=3))
        r = r_matrix(alpha, frame)
        crossed = cross(frame.gammas)
        for i in range(3):
            acc = r[i, 0] * crossed[0] + r[i, 1] * crossed[1] + r[i, 2] * crossed[2]
            diff = alpha.wedge(frame.gammas[i]) - acc
            assert np.sqrt(diff.norm_sq()) <= 1e-12


def test_r_matrix_zero():
    frame = FrameTriple.standard()
    assert np.allclose(r_matrix(ComplexForm.from_coords([0, 0, 0]), frame), 0)


def test_transition_diag_frame():
    frame = FrameTriple.from_unitary(np.diag([1j, 1, 1]))
    td = transition_p(frame)
    assert np.allclose(td.p_matrix, np.diag([-1, 1, 1]))
    assert td.k**2 == pytest.approx(-1.0)


def test_star_scalar_of_phase_frame():
    thetas = (0.4, -0.9, 1.7)
    frame = FrameTriple.from_unitary(np.diag([cmath.exp(1j * t) for t in thetas]))
    k = star_triple(frame)
    assert k == pytest.approx(cmath.exp(1j * sum(thetas)))


def test_invalid_frames_rejected():
    with pytest.raises(NotAValidFrameError):
        FrameTriple.from_unitary(np.diag([2.0, 1.0, 1.0]))
    with pytest.raises(NotAValidFrameError):
        # dependent rows
        FrameTriple.from_unitary(np.array([[1, 0, 0], [1, 0, 0], [0, 0, 1]], dtype=complex))


def test_frame_residuals_across_random_frames():
    for seed in range(40):
        frame = FrameTriple.random(seed)
        k, residuals = frame_residuals(frame)
        assert max(residuals.values()) <= 1e-9
        td = transition_p(frame)
        p = td.p_matrix
        assert np.max(np.abs(p - p.T)) <= 1e-9
        assert np.max(np.abs(p @ np.conj(p) - np.eye(3))) <= 1e-9
        assert abs(td.k**2 - np.linalg.det(p)) <= 1e-9
        assert abs(abs(td.k) - 1.0) <= 1e-9


def test_transition_data_validation():
    with pytest.raises(InvalidTransitionError):
        TransitionData(np.diag([2.0, 1.0, 1.0]).astype(complex), 1.0)
    with pytest.raises(InvalidTransitionError):
        TransitionData(np.eye(3, dtype=complex), 1j)  # k^2 != det P


def test_real_coefficient_basis_reality():
    for seed in (1, 5, 11):
        frame = FrameTriple.random(seed)
        td = transition_p(frame)
        for a in real_coefficient_basis(td):
            # conj(a) = P a characterizes coefficients of real 1-forms
            assert np.max(np.abs(np.conj(a) - td.p_matrix @ a)) <= 1e-9
            # and indeed the reconstructed 1-form has a vanishing imaginary part
            combo = sum(
                (complex(c) * g for c, g in zip(a, frame.gammas)),
                start=ComplexForm.from_coords([0, 0, 0]),
            )
            assert np.sqrt(combo.im.norm_sq()) <= 1e-9


def test_obstruction_kernel_identity_cases():
    td = TransitionData(np.eye(3, dtype=complex), 1.0 + 0j)
    assert obstruction_kernel(td, restrict_real=True) == 0
    assert obstruction_kernel(td, restrict_real=False) == 3


def test_obstruction_kernel_vanishes_on_random_transitions():
    for seed in range(30):
        td = transition_p(FrameTriple.random(seed))
        assert obstruction_kernel(td, restrict_real=True) == 0


def test_symmetric_skew_split():
    rng = np.random.default_rng(3)
    m = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    s, r = symmetric_skew_split(m)
    assert np.allclose(s, s.T)
    assert np.allclose(r, -r.T)
    assert np.allclose(s + r, m)


def test_expand_in_frame_rank_error():
    frame = FrameTriple.standard()
    broken = object.__new__(FrameTriple)
    broken.gammas = (frame.gammas[0], frame.gammas[0], frame.gammas[2])
    broken.nu = frame.nu
    with pytest.raises(FrameRankError):
        expand_in_frame(ComplexForm.from_coords([1, 0, 0]), broken)


def test_r_from_coeffs_shape():
    r = r_from_coeffs([1, 2, 3])
    assert np.allclose(r, np.array([[0, 3, -2], [-3, 0, 1], [2, -1, 0]]))
