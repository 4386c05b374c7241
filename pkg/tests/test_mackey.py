import pytest

from equisurf.mackey import MackeyFunctorC3


def test_constant_z3_all_axioms():
    mf = MackeyFunctorC3.constant_z3()
    checks = mf.verify_axioms()
    assert [label for label, _ in checks] == ["i", "ii", "iii", "iv", "v", "vi"]
    assert all(ok for _, ok in checks)
    assert mf.passes()


def test_free_orbit_all_axioms():
    mf = MackeyFunctorC3.free_orbit_z3()
    assert mf.passes()
    # double coset: restriction then transfer is the orbit sum 1 + t + t^2
    assert mf.m_orbit == 3 and mf.m_point == 1


def test_planted_failure_fails_ii_and_v_only():
    bad = MackeyFunctorC3.axiom_failure_example()
    results = dict(bad.verify_axioms())
    assert results == {
        "i": True,
        "ii": False,
        "iii": True,
        "iv": True,
        "v": False,
        "vi": True,
    }
    assert not bad.passes()


def test_shape_mismatch_rejected():
    with pytest.raises(AssertionError):
        MackeyFunctorC3(
            m_orbit=2,
            m_point=1,
            p_star_up=[[1]],  # wrong shape, needs 2x1
            p_star_down=[[0, 0]],
            t_star=[[1, 0], [0, 1]],
            t_lower=[[1, 0], [0, 1]],
        )
