import pytest

from equisurf.singular import punctured, sing_z3, times_c3


def test_sing_z3_orientable():
    assert sing_z3(("M", 0)) == (1, 0, 1)
    assert sing_z3(("M", 1)) == (1, 2, 1)
    assert sing_z3(("M", 3)) == (1, 6, 1)


def test_sing_z3_nonorientable():
    # over Z/3 the torsion class dies: b_1 = r - 1, b_2 = 0
    assert sing_z3(("N", 1)) == (1, 0, 0)
    assert sing_z3(("N", 2)) == (1, 1, 0)
    assert sing_z3(("N", 5)) == (1, 4, 0)
    with pytest.raises(ValueError):
        sing_z3(("N", 0))


def test_punctured():
    assert punctured(("M", 0)) == (1, 0)
    assert punctured(("M", 2)) == (1, 4)
    assert punctured(("N", 1)) == (1, 1)
    assert punctured(("N", 3)) == (1, 3)


def test_times_c3():
    e = times_c3((1, 2, 1))
    assert e.dim_at(0, 0) == 1
    assert e.dim_at(1, 0) == 2
    assert e.dim_at(2, 0) == 1
    assert e.dim_at(3, 0) == 0
    assert e.dim_at(1, -4) == 2  # towers run through all q
