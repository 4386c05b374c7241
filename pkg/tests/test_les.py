import pytest

from equisurf.bigraded import DEFAULT_WINDOW, Bidegree, Window
from equisurf.les import (
    CofiberCase,
    failing_cells,
    find_case,
    free_nonor_case,
    free_or_case,
    get_case,
    load_cases,
    nonor_even_balanced_case,
    nonor_even_printed_case,
    nonor_odd_k_case,
    parse_cases,
    poly_n_case,
    resolve_extension,
    solve_differential,
    sph_ribbon_case,
    verify_case,
)
from equisurf.stdmod import ModuleExpr, ShiftedStd, StdKind

W = Window(-6, 6, -6, 6)


def test_packaged_fixture_names():
    names = [c.name for c in load_cases()]
    assert names == [
        "s1_free",
        "eb_cone",
        "n1_bracket",
        "m1_free",
        "m1_hat",
        "n2_hat",
        "n2_free",
        "sph_base",
    ]


def test_all_fixtures_verify():
    for case in load_cases():
        rep = verify_case(case, window=W)
        assert rep.ok, (case.name, rep.detail)
        assert rep.unique
        assert rep.failing_cells == []


def test_eb_cone_differential_ranks():
    case = get_case("eb_cone")
    classes = solve_differential(case, W)
    assert len(classes) == 1
    cls = classes[0]
    # the connecting map is an isomorphism on the cone column below the join
    assert cls.rank(1, 0) == 1
    assert cls.rank(1, -3) == 1
    assert cls.rank(1, 1) == 0
    assert cls.rank(0, 0) == 0


def test_n1_bracket_truncates_both_sides():
    case = get_case("n1_bracket")
    classes = solve_differential(case, W)
    assert len(classes) == 1
    cls = classes[0]
    assert cls.rank(0, -1) == 1
    assert cls.rank(1, 0) == 1
    assert cls.rank(0, 0) == 0
    assert cls.rank(1, 1) == 0
    # middle agrees with the fixed-point module on every window cell
    assert failing_cells(case, cls, W) == []


def test_mutation_drops_are_detected():
    for case in load_cases():
        first, mult = case.middle.terms[0]
        rest = [(s, m) for s, m in case.middle.terms]
        rest[0] = (first, mult - 1) if mult > 1 else None
        mutated_middle = ModuleExpr.of(*[t for t in rest if t])
        mutated = CofiberCase(
            name=case.name + "_mutated",
            third=case.third,
            target=case.target,
            row0=case.row0,
            middle=mutated_middle,
            pattern=case.pattern,
            middle_has_fixed_point=case.middle_has_fixed_point,
        )
        rep = verify_case(mutated, window=W)
        assert not rep.ok, case.name
        assert len(rep.failing_cells) >= 1, case.name


def test_sph_ribbon_grid_samples():
    for k, g in [(0, 0), (1, 0), (0, 2), (2, 1)]:
        rep = verify_case(sph_ribbon_case(k, g), window=W)
        assert rep.ok and rep.unique, (k, g)


def test_free_action_cases():
    for g in (0, 1, 2):
        rep = verify_case(free_or_case(g), window=W)
        assert rep.ok and rep.unique, g
    for r in (0, 1, 3):
        rep = verify_case(free_nonor_case(r), window=W)
        assert rep.ok and rep.unique, r


def test_nonor_odd_forced_differential():
    rep = verify_case(nonor_odd_k_case(1), window=W)
    assert rep.ok
    classes = solve_differential(nonor_odd_k_case(1), W)
    matching = [c for c in classes if c.rank(0, -1) == 1 and c.rank(1, 0) == 1]
    assert len(matching) >= 1


def test_even_family_printed_middle_is_inconsistent():
    # the recorded closed form for this family cannot be completed to an
    # exact sequence: every admissible differential leaves failing cells
    case = nonor_even_printed_case(0, 1)
    rep = verify_case(case, window=W)
    assert not rep.ok
    classes = solve_differential(case, W)
    assert len(classes) >= 1
    for cls in classes:
        assert len(failing_cells(case, cls, W)) >= 1


def test_even_family_balanced_middle_verifies():
    for k, r in [(0, 1), (1, 2)]:
        rep = verify_case(nonor_even_balanced_case(k, r), window=W)
        assert rep.ok, (k, r)
        assert rep.matching_classes == 1
        assert not rep.unique  # two admissible classes; the pattern picks one


def test_free_nonor_corrupted_exponent_fails_row0():
    # dropping one tower from the free nonorientable answer breaks row 0
    case = free_nonor_case(2)
    corrupted = CofiberCase(
        name="free_nonor_bad",
        third=case.third,
        target=case.target,
        row0=(1, 2, 0),  # r + 1 = 3 is the certified value
        middle=case.middle,
        pattern=case.pattern,
    )
    rep = verify_case(corrupted, window=W)
    assert not rep.ok


def test_resolve_extension_splits():
    case = sph_ribbon_case(1, 1)
    res = resolve_extension(case.target, case.third, case.middle_has_fixed_point)
    assert res == case.middle
    case = poly_n_case(2, 0)
    res = resolve_extension(case.target, case.third, case.middle_has_fixed_point)
    assert res == case.middle


def test_resolve_extension_refuses_free_glue():
    case = free_or_case(1)
    assert resolve_extension(case.target, case.third) == "unresolved"
    case = get_case("m1_free")
    assert resolve_extension(case.target, case.third) == "unresolved"


def test_resolve_extension_fixed_point_merge():
    hs1 = ModuleExpr.of(ShiftedStd(StdKind.HS1FREE))
    s21 = ModuleExpr.of(ShiftedStd(StdKind.M3, Bidegree(2, 1)))
    merged = resolve_extension(s21, hs1, middle_has_fixed_point=True)
    assert merged == ModuleExpr.of(ShiftedStd(StdKind.M3))


def test_parse_cases_round_trip():
    text = """
case demo
third HC3@0,0 HC3@1,0x2
target M3@2,1
row0 1 2 1
middle M3@0,0
pattern p==0&q<=-1
end
"""
    (case,) = parse_cases(text)
    assert case.name == "demo"
    assert case.third.total_mult() == 3
    assert case.row0 == (1, 2, 1)
    assert case.pattern == ("p==0&q<=-1",)
    assert not case.middle_has_fixed_point


def test_find_case():
    assert find_case("eb_cone").name == "eb_cone"
    assert find_case("sph_ribbon_k2_g1").name == "sph_ribbon_k2_g1"
    assert find_case("nonor_even_balanced_k0_r1").pattern is not None
    with pytest.raises(KeyError):
        find_case("no_such_case")


def test_default_window_used():
    rep = verify_case(get_case("s1_free"))
    assert rep.ok
    assert DEFAULT_WINDOW.p_min == -8
