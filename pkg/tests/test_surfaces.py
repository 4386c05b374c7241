import pytest
from hypothesis import given, strategies as st

from equisurf.surfaces import (
    Family,
    ParseError,
    SemanticError,
    check_congruence,
    classify_str,
    invariants,
    parse_surface,
    quotient_surface,
    surface_name,
    underlying_surface,
)


def test_parse_shorthands():
    assert classify_str("Sph(1,2)").name == "Sph_8[4]"
    assert classify_str("sph(1,2)").name == "Sph_8[4]"  # case-insensitive
    assert classify_str("PolyF(2,1,0)").name == "Poly_{2,6}[8]"
    assert classify_str("NEven(0,1)").name == "N_3[2]"
    assert classify_str("NOdd(0,0)").name == "N_1[1]"
    assert classify_str("MFree(0)").name == "M_1^free"
    assert classify_str("NFree(2)").name == "N_8^free"


def test_parse_surgery_grammar():
    assert classify_str("S21+2R3#M(1)").name == "Sph_7[6]"
    assert classify_str(" S21 + 2 R3 # M(1) ").name == "Sph_7[6]"
    assert classify_str("S21").name == "Sph_0[2]"
    assert classify_str("N1[1]").name == "N_1[1]"
    assert classify_str("N1[1]+1R3#N(2)").name == "N_11[3]"
    assert classify_str("POLY(3)#M(2)").name == "Poly_{3,13}[9]"
    assert classify_str("M1FREE#M(2)").name == "M_7^free"
    assert classify_str("N2FREE#N(1)").name == "N_5^free"


def test_shorthand_equals_surgery():
    pairs = [
        ("Sph(1,2)", "S21+1R3#M(2)"),
        ("NEven(1,2)", "S21+1R3#N(2)"),
        ("NOdd(1,2)", "N1[1]+1R3#N(2)"),
        ("MFree(2)", "M1FREE#M(2)"),
        ("NFree(1)", "N2FREE#N(1)"),
        ("PolyF(2,1,1)", "POLY(2)+1R3#M(1)"),
    ]
    for short, long in pairs:
        assert classify_str(short) == classify_str(long)


def test_parse_errors():
    for bad in ["", "Sph(1", "S21+R3", "Q99", "Sph(1,2,3)", "#M(2)"]:
        with pytest.raises(ParseError):
            classify_str(bad)


def test_semantic_errors():
    with pytest.raises(SemanticError):
        classify_str("NEven(0,0)")  # N(0) is not a surface
    with pytest.raises(SemanticError):
        classify_str("S21#N(0)")
    with pytest.raises(SemanticError):
        classify_str("Sph(-1,0)")  # negative ribbons
    with pytest.raises(SemanticError):
        classify_str("POLY(0)")  # n >= 1
    with pytest.raises(SemanticError):
        classify_str("M1FREE+1R3")  # ribbons would add fixed points to a free action


def test_invariants_literal():
    inv = invariants(classify_str("Sph(1,2)"))
    assert (inv.beta, inv.fixed_points, inv.euler) == (16, 4, -14)
    assert inv.orientable and not inv.free

    inv = invariants(classify_str("NEven(0,1)"))
    assert (inv.beta, inv.fixed_points, inv.euler) == (3, 2, -1)
    assert not inv.orientable

    inv = invariants(classify_str("NOdd(1,0)"))
    assert (inv.beta, inv.fixed_points) == (5, 3)

    inv = invariants(classify_str("MFree(1)"))
    assert (inv.beta, inv.fixed_points, inv.free) == (8, 0, True)

    inv = invariants(classify_str("PolyF(1,0,0)"))
    assert (inv.beta, inv.fixed_points) == (2, 3)


def test_quotients_literal():
    assert surface_name(quotient_surface(classify_str("Sph(1,2)"))) == "M_2"
    assert surface_name(quotient_surface(classify_str("PolyF(2,0,1)"))) == "M_1"
    assert surface_name(quotient_surface(classify_str("NEven(0,1)"))) == "N_1"
    assert surface_name(quotient_surface(classify_str("NOdd(0,2)"))) == "N_3"
    assert surface_name(quotient_surface(classify_str("MFree(0)"))) == "M_1"
    assert surface_name(quotient_surface(classify_str("NFree(0)"))) == "N_2"


def test_underlying_literal():
    assert surface_name(underlying_surface(classify_str("Sph(0,0)"))) == "M_0"
    assert surface_name(underlying_surface(classify_str("NFree(1)"))) == "N_5"
    assert surface_name(underlying_surface(classify_str("N1[1]"))) == "N_1"


families = st.sampled_from(["SPH", "POLY", "NEVEN", "NODD", "MFREE", "NFREE"])


@given(families, st.integers(0, 6), st.integers(0, 6), st.integers(1, 5))
def test_congruence_always_holds(fam, a, b, n):
    if fam == "SPH":
        expr = f"Sph({a},{b})"
    elif fam == "POLY":
        expr = f"PolyF({n},{a},{b})"
    elif fam == "NEVEN":
        expr = f"NEven({a},{b + 1})"
    elif fam == "NODD":
        expr = f"NOdd({a},{b})"
    elif fam == "MFREE":
        expr = f"MFree({a})"
    else:
        expr = f"NFree({a})"
    inv = invariants(classify_str(expr))
    assert check_congruence(inv)
    assert inv.euler == 2 - inv.beta
    assert inv.free == (inv.fixed_points == 0)


@given(families, st.integers(0, 5), st.integers(0, 5), st.integers(1, 4))
def test_surgery_string_round_trips(fam, a, b, n):
    if fam == "SPH":
        expr = f"Sph({a},{b})"
    elif fam == "POLY":
        expr = f"PolyF({n},{a},{b})"
    elif fam == "NEVEN":
        expr = f"NEven({a},{b + 1})"
    elif fam == "NODD":
        expr = f"NOdd({a},{b})"
    elif fam == "MFREE":
        expr = f"MFree({a})"
    else:
        expr = f"NFree({a})"
    cls = classify_str(expr)
    assert classify_str(cls.surgery) == cls


def test_family_enum():
    assert classify_str("Sph(0,0)").family is Family.SPH
    assert classify_str("N1[1]").family is Family.NONOR_ODD
    assert parse_surface("S21").base == "S21"
