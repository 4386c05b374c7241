import pytest
from hypothesis import given, strategies as st

from equisurf.bigraded import (
    Bidegree,
    DimFunction,
    F3Matrix,
    Window,
    matrix_rank,
    nullspace,
    parse_window,
    rank_kernel_image,
)


def test_bidegree_arithmetic():
    a = Bidegree(2, 1)
    b = Bidegree(-1, 3)
    assert a + b == Bidegree(1, 4)
    assert a - b == Bidegree(3, -2)
    assert -a == Bidegree(-2, -1)
    assert tuple(a) == (2, 1)
    assert repr(a) == "(2,1)"


def test_window_cells_order():
    w = Window(0, 1, 0, 1)
    assert list(w.cells()) == [(0, 1), (1, 1), (0, 0), (1, 0)]
    assert w.contains(1, 0)
    assert not w.contains(2, 0)


def test_parse_window():
    w = parse_window("-8:8,-3:5")
    assert (w.p_min, w.p_max, w.q_min, w.q_max) == (-8, 8, -3, 5)
    with pytest.raises(ValueError):
        parse_window("nope")
    with pytest.raises(ValueError):
        parse_window("3:1,0:0")


def test_dim_function_shift_and_add():
    f = DimFunction(lambda p, q: 1 if (p, q) == (0, 0) else 0)
    g = f.shifted(Bidegree(2, 1))
    assert g(2, 1) == 1 and g(0, 0) == 0
    h = f + g
    assert h(0, 0) == 1 and h(2, 1) == 1 and h(1, 1) == 0
    assert f.scaled(3)(0, 0) == 3


def test_rref_literal():
    m = F3Matrix([[1, 2, 0], [2, 1, 1], [0, 0, 1]])
    red, pivots = m.rref()
    assert pivots == [0, 2]
    assert m.rank() == 2


def test_kernel_literal():
    # x + 2y = 0 over F3: kernel spanned by (1, 1)
    m = F3Matrix([[1, 2]])
    ker = m.kernel_basis()
    assert len(ker) == 1
    assert [c % 3 for c in m.mul_vec(ker[0])] == [0]


def test_empty_shapes():
    assert F3Matrix([], ncols=4).rank() == 0
    assert len(F3Matrix([], ncols=4).kernel_basis()) == 4
    assert matrix_rank([], 0) == 0
    assert len(nullspace([[0, 0]], 2)) == 2


@given(
    st.integers(0, 5),
    st.integers(0, 5),
    st.data(),
)
def test_rank_nullity(m, n, data):
    rows = [
        [data.draw(st.integers(0, 2)) for _ in range(n)] for _ in range(m)
    ]
    mat = F3Matrix(rows, ncols=n)
    r, ker, img = rank_kernel_image(mat)
    assert r + len(ker) == n
    assert len(img) == r
    for v in ker:
        assert all(c % 3 == 0 for c in mat.mul_vec(v))


@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6))
def test_shift_composition(a1, b1, a2, b2):
    f = DimFunction(lambda p, q: abs(p) + abs(q))
    lhs = f.shifted(Bidegree(a1, b1)).shifted(Bidegree(a2, b2))
    rhs = f.shifted(Bidegree(a1 + a2, b1 + b2))
    for p, q in [(0, 0), (3, -2), (-1, 4)]:
        assert lhs(p, q) == rhs(p, q)
