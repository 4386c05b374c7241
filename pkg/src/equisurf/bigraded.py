"""Bigraded bookkeeping and exact linear algebra over F3.

Everything downstream is graded by pairs (p, q): p is the total dimension of a
representation and q the number of copies of the rotation plane inside it.  A
dimension function assigns a non-negative integer to every bidegree; windows cut
out the finite rectangles we actually tabulate.

Matrices over F3 are dense numpy uint8 arrays with entries in {0, 1, 2}.  Row
reduction is plain Gauss-Jordan; `rank_kernel_image` checks rank + nullity
against the column count on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np


@dataclass(frozen=True)
class Bidegree:
    """A point (p, q) of the grading lattice."""

    p: int
    q: int

    def __add__(self, other: "Bidegree") -> "Bidegree":
        return Bidegree(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "Bidegree") -> "Bidegree":
        return Bidegree(self.p - other.p, self.q - other.q)

    def __neg__(self) -> "Bidegree":
        return Bidegree(-self.p, -self.q)

    def __iter__(self):
        return iter((self.p, self.q))

    def __repr__(self) -> str:
        return f"({self.p},{self.q})"


ZERO_DEG = Bidegree(0, 0)


@dataclass(frozen=True)
class Window:
    """Closed rectangle p_min <= p <= p_max, q_min <= q <= q_max."""

    p_min: int
    p_max: int
    q_min: int
    q_max: int

    def __post_init__(self) -> None:
        assert self.p_min <= self.p_max and self.q_min <= self.q_max

    def contains(self, p: int, q: int) -> bool:
        return self.p_min <= p <= self.p_max and self.q_min <= q <= self.q_max

    def cells(self) -> Iterator[tuple[int, int]]:
        """Iterate cells row-major from the top row (q_max) down."""
        for q in range(self.q_max, self.q_min - 1, -1):
            for p in range(self.p_min, self.p_max + 1):
                yield (p, q)

    @property
    def p_range(self) -> range:
        return range(self.p_min, self.p_max + 1)

    @property
    def q_range(self) -> range:
        return range(self.q_min, self.q_max + 1)


DEFAULT_WINDOW = Window(-8, 8, -8, 8)


def parse_window(text: str) -> Window:
    """Parses "P_MIN:P_MAX,Q_MIN:Q_MAX" (e.g. "-8:8,-8:8") into a Window."""
    try:
        p_part, q_part = text.split(",")
        p_min, p_max = (int(v) for v in p_part.split(":"))
        q_min, q_max = (int(v) for v in q_part.split(":"))
    except ValueError as exc:
        raise ValueError(
            f"bad window {text!r}, expected P_MIN:P_MAX,Q_MIN:Q_MAX"
        ) from exc
    if p_min > p_max or q_min > q_max:
        raise ValueError(f"empty window {text!r}")
    return Window(p_min, p_max, q_min, q_max)


class DimFunction:
    """Total map from bidegrees to non-negative integers.

    Wraps a callable (p, q) -> int; supports pointwise addition and shifting.
    A shift by (a, b) moves the value at (p, q) to (p + a, q + b), i.e. the
    shifted function reads off dims at (p - a, q - b).
    """

    def __init__(self, fn: Callable[[int, int], int]):
        self._fn = fn

    def __call__(self, p: int, q: int) -> int:
        v = self._fn(p, q)
        assert v >= 0, f"negative dimension {v} at ({p},{q})"
        return v

    def shifted(self, by: Bidegree) -> "DimFunction":
        a, b = by.p, by.q
        return DimFunction(lambda p, q: self._fn(p - a, q - b))

    def __add__(self, other: "DimFunction") -> "DimFunction":
        return DimFunction(lambda p, q: self._fn(p, q) + other._fn(p, q))

    def scaled(self, k: int) -> "DimFunction":
        assert k >= 0
        return DimFunction(lambda p, q: k * self._fn(p, q))

    def table(self, window: Window) -> dict[tuple[int, int], int]:
        return {(p, q): self(p, q) for (p, q) in window.cells()}

    @staticmethod
    def zero() -> "DimFunction":
        return DimFunction(lambda p, q: 0)

    @staticmethod
    def from_table(table: dict[tuple[int, int], int]) -> "DimFunction":
        """Dimension function backed by a finite table, zero elsewhere."""
        return DimFunction(lambda p, q: table.get((p, q), 0))


def shift(dims: DimFunction, by: Bidegree) -> DimFunction:
    return dims.shifted(by)


# ---------------------------------------------------------------------------
# F3 linear algebra


def _as_f3(rows) -> np.ndarray:
    a = np.asarray(rows, dtype=np.int64) % 3
    return a.astype(np.uint8)


class F3Matrix:
    """Dense matrix over F3 with row reduction, rank and kernel/image bases."""

    def __init__(self, rows, ncols: int | None = None):
        """Build from a nested sequence (or numpy array) of integers.

        `ncols` disambiguates an empty row list; a matrix with zero rows still
        has a well-defined column count.
        """
        a = _as_f3(rows) if len(rows) else np.zeros((0, ncols or 0), dtype=np.uint8)
        if a.ndim == 1:
            a = a.reshape(1, -1)
        self.a = a
        if ncols is not None and a.shape[1] != ncols:
            assert a.shape[0] == 0
            self.a = np.zeros((0, ncols), dtype=np.uint8)

    @property
    def nrows(self) -> int:
        return self.a.shape[0]

    @property
    def ncols(self) -> int:
        return self.a.shape[1]

    def rref(self) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        m = self.a.astype(np.int64) % 3
        nr, nc = m.shape
        pivot_cols: list[int] = []
        r = 0
        for c in range(nc):
            if r >= nr:
                break
            piv = None
            for i in range(r, nr):
                if m[i, c] % 3 != 0:
                    piv = i
                    break
            if piv is None:
                continue
            m[[r, piv]] = m[[piv, r]]
            inv = 1 if m[r, c] % 3 == 1 else 2  # 2*2 = 4 = 1 mod 3
            m[r] = (m[r] * inv) % 3
            for i in range(nr):
                if i != r and m[i, c] % 3 != 0:
                    m[i] = (m[i] - m[i, c] * m[r]) % 3
            pivot_cols.append(c)
            r += 1
        return m.astype(np.uint8), pivot_cols

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[np.ndarray]:
        """Basis of the right kernel (column vectors as 1-d arrays)."""
        red, pivots = self.rref()
        free_cols = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free_cols:
            v = np.zeros(self.ncols, dtype=np.uint8)
            v[fc] = 1
            for r, pc in enumerate(pivots):
                v[pc] = (-int(red[r, fc])) % 3
            basis.append(v)
        return basis

    def image_basis(self) -> list[np.ndarray]:
        """Basis of the column space: the original pivot columns."""
        _, pivots = self.rref()
        return [self.a[:, c].copy() for c in pivots]

    def mul_vec(self, v) -> np.ndarray:
        v = _as_f3(v).reshape(-1)
        return (self.a.astype(np.int64) @ v.astype(np.int64)) % 3


def rank_kernel_image(m: F3Matrix) -> tuple[int, list[np.ndarray], list[np.ndarray]]:
    """Rank, kernel basis and image basis of an F3 matrix.

    The rank-nullity identity rank + dim(ker) == ncols is asserted on every
    call; it is the engine's running self-check.
    """
    r = m.rank()
    ker = m.kernel_basis()
    img = m.image_basis()
    assert r + len(ker) == m.ncols, "rank-nullity check failed"
    assert len(img) == r
    return r, ker, img


def matrix_rank(rows, ncols: int) -> int:
    """Rank of a matrix given as nested lists (possibly with zero rows)."""
    if ncols == 0:
        return 0
    return F3Matrix(rows, ncols=ncols).rank()


def nullspace(rows, ncols: int) -> list[np.ndarray]:
    """Right-kernel basis for a constraint matrix over F3."""
    if ncols == 0:
        return []
    m = F3Matrix(rows, ncols=ncols)
    r, ker, _ = rank_kernel_image(m)
    return ker
