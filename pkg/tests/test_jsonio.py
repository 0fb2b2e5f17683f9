"""Round trips and error handling for the JSON value formats."""

from fractions import Fraction

import pytest

from hodgelab.exterior import Space
from hodgelab.frames import FrameTriple
from hodgelab.harmonic import SkewEndo
from hodgelab.hermitian import ComplexStructure
from hodgelab.jsonio import (
    ParseError,
    complex_structure_from_dict,
    complex_structure_to_dict,
    form_from_dict,
    form_to_dict,
    frame_from_dict,
    frame_to_dict,
    skew_endo_from_dict,
    spectral_to_dict,
)


def test_exact_form_round_trip():
    space = Space(4)
    form = space.form(2, {(1, 3): Fraction(3, 7), (2, 4): -2})
    payload = form_to_dict(form)
    assert payload["backend"] == "exact"
    assert {"index": [1, 3], "num": 3, "den": 7} in payload["terms"]
    assert form_from_dict(payload) == form


def test_float_form_round_trip():
    space = Space(3, "float")
    form = space.form(1, {(2,): 0.25})
    payload = form_to_dict(form)
    assert payload["terms"] == [{"index": [2], "value": 0.25}]
    assert form_from_dict(payload) == form


def test_form_parse_errors():
    with pytest.raises(ParseError):
        form_from_dict({"degree": 1, "terms": []})  # no dim
    with pytest.raises(ParseError):
        form_from_dict({"dim": 3, "degree": 2, "terms": [{"index": [1, 1], "num": 1}]})


def test_complex_structure_standard_shorthand():
    j = complex_structure_from_dict({"dim": 6, "matrix": "standard"})
    assert j == ComplexStructure.standard(Space(6))
    payload = complex_structure_to_dict(j)
    assert complex_structure_from_dict(payload) == j


def test_complex_structure_row_major_flat():
    j4 = ComplexStructure.standard(Space(4))
    flat = [v for row in j4.rows for v in row]
    assert complex_structure_from_dict({"dim": 4, "matrix": flat}) == j4


def test_skew_round_trip():
    a = SkewEndo(Space(4, "float"), [[0, -2, 0, 0], [2, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    payload = {"dim": 4, "backend": "float", "matrix": [list(r) for r in a.rows]}
    assert skew_endo_from_dict(payload).rows == a.rows
    with pytest.raises(ParseError):
        skew_endo_from_dict({"dim": 4, "matrix": "standard"})


def test_spectral_serialization():
    from hodgelab.harmonic import spectral

    a = SkewEndo(Space(4, "float"), [[0, -2, 0, 0], [2, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    payload = spectral_to_dict(spectral(a))
    assert payload["kernel_rank"] == 2
    assert payload["clusters"][0]["mu"] == -4.0
    assert payload["clusters"][1]["omega"] is None


def test_frame_round_trip():
    frame = FrameTriple.random(5)
    payload = frame_to_dict(frame)
    back = frame_from_dict(payload)
    for g1, g2 in zip(frame.gammas, back.gammas):
        assert g1.re.isclose(g2.re) and g1.im.isclose(g2.im)


def test_frame_parse_error():
    with pytest.raises(ParseError):
        frame_from_dict({"gammas": [{"re": {}}]})
