import json

import pytest
from hypothesis import given, strategies as st

from equisurf.cohomology import (
    NotRealizable,
    answer_obj,
    cohomology,
    cohomology_from_invariants,
    to_canonical_json,
    verify_agreement,
    verify_quotient_row,
)
from equisurf.surfaces import Invariants, classify_str, invariants


def test_family_answers_literal():
    assert cohomology(classify_str("Sph(0,0)")).label() == "M3 + S{2,1}M3"
    assert cohomology(classify_str("Sph(1,1)")).label() == "M3 + S{2,1}M3 + S{1,0}HC3^2 + EB^2"
    assert cohomology(classify_str("PolyF(1,0,0)")).label() == "M3 + S{2,1}M3 + EB"
    assert cohomology(classify_str("NEven(1,1)")).label() == "M3 + EB^2"
    assert cohomology(classify_str("NOdd(0,0)")).label() == "M3"
    assert cohomology(classify_str("NOdd(0,2)")).label() == "M3 + S{1,0}HC3^2"
    assert cohomology(classify_str("MFree(0)")).label() == "HS1FREE + S{1,0}HS1FREE"
    assert cohomology(classify_str("MFree(1)")).label() == "S{1,0}HC3^2 + HS1FREE + S{1,0}HS1FREE"
    assert cohomology(classify_str("NFree(2)")).label() == "S{1,0}HC3^2 + HS1FREE"


def test_poly_sph_coincidence():
    a, b = classify_str("PolyF(2,0,0)"), classify_str("Sph(2,0)")
    assert a != b
    assert cohomology(a) == cohomology(b)


def test_corollary_matches_theorem_samples():
    for expr in ["Sph(2,3)", "PolyF(3,1,2)", "NEven(1,4)", "NOdd(2,1)", "MFree(3)", "NFree(4)"]:
        cls = classify_str(expr)
        assert cohomology_from_invariants(invariants(cls)) == cohomology(cls)
        assert verify_agreement(cls)
        assert verify_quotient_row(cls)


def test_not_realizable_messages():
    bad_congruence = Invariants(orientable=True, beta=2, fixed_points=1, euler=0, free=False)
    with pytest.raises(NotRealizable, match="not realizable"):
        cohomology_from_invariants(bad_congruence)

    odd_orientable = Invariants(orientable=True, beta=3, fixed_points=2, euler=-1, free=False)
    with pytest.raises(NotRealizable, match="outside realizable range"):
        cohomology_from_invariants(odd_orientable)

    negative_towers = Invariants(orientable=False, beta=0, fixed_points=2, euler=2, free=False)
    with pytest.raises(NotRealizable, match="outside realizable range"):
        cohomology_from_invariants(negative_towers)

    free_flag_clash = Invariants(orientable=True, beta=4, fixed_points=0, euler=-2, free=False)
    with pytest.raises(NotRealizable, match="not realizable"):
        cohomology_from_invariants(free_flag_clash)


def test_free_answers_from_invariants():
    # free classes are recovered from beta alone
    or_free = Invariants(orientable=True, beta=8, fixed_points=0, euler=-6, free=True)
    assert cohomology_from_invariants(or_free).label() == (
        "S{1,0}HC3^2 + HS1FREE + S{1,0}HS1FREE"
    )
    non_free = Invariants(orientable=False, beta=5, fixed_points=0, euler=-3, free=True)
    assert cohomology_from_invariants(non_free).label() == "S{1,0}HC3 + HS1FREE"


def test_answer_obj_shape():
    obj = answer_obj(classify_str("NEven(0,1)"))
    assert obj["class"] == "N_3[2]"
    assert obj["checks"] == {"congruence": True, "agreement": True, "quotient_row": True}
    assert obj["summands"] == [{"kind": "M3", "shift": [0, 0], "multiplicity": 1}]


def test_canonical_json_round_trip():
    obj = answer_obj(classify_str("PolyF(2,1,1)"))
    text = to_canonical_json(obj)
    assert text.endswith("\n")
    assert to_canonical_json(json.loads(text)) == text


@given(st.integers(0, 4), st.integers(0, 4))
def test_row0_matches_quotient(k, g):
    cls = classify_str(f"Sph({k},{g})")
    assert cohomology(cls).row(0, range(0, 3)) == (1, 2 * g, 1)
    assert verify_quotient_row(cls)
