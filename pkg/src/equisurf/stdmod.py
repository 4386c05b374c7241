"""The four standard bigraded modules and their ring actions.

Everything is a module over the cohomology of a point, written M3 here.  M3 has
a polynomial top cone Z/3[x, y, z]/(y^2) with deg x = (0,1), y = (1,1),
z = (2,1), and a dual bottom cone spanned by classes w/(x^k y^i z^l) with
deg w = (0,-1) and i in {0,1}.  Multiplication: top*top is monomial
multiplication (y^2 = 0); a top monomial n acts on w/m by n*(w/m) = w/(m/n)
when n divides m componentwise and by zero otherwise (in particular x*w = 0);
bottom*bottom = 0.

The other three standard modules:

* HC3      -- cohomology of a free orbit: a single x-invertible column at p = 0,
              y and z act as zero.
* HS1FREE  -- cohomology of a free circle: x-invertible columns at p = 0, 1,
              y maps column 0 isomorphically onto column 1, z acts as zero.
* EB       -- cohomology of the classifying-space piece: generated by
              alpha (2,1) and beta (1,1) with y*beta = 0 and z*beta = y*alpha.
              Its bottom cone consists of the (2,1)-suspended classes
              S(w/(x^k y^i z^l)) with (i,l) != (0,0); the (i,l) = (0,0) ones
              are consumed by the defining differential, so any action landing
              there is zero.

Bottom-cone ring elements annihilate everything infinitely divisible by x
(the HC3/HS1FREE columns and both bottom cones); on top classes they act by
the dual divides-rule.  These conventions reproduce every multiplication
line of the lattice diagrams; see the committed tables under data/.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .bigraded import Bidegree, DimFunction, Window, ZERO_DEG


class StdKind(enum.Enum):
    M3 = "M3"
    HC3 = "HC3"
    HS1FREE = "HS1FREE"
    EB = "EB"


KIND_ORDER = {StdKind.M3: 0, StdKind.HC3: 1, StdKind.HS1FREE: 2, StdKind.EB: 3}


class NotFinitelyGenerated(ValueError):
    """Raised when a presentation is requested for a non-finitely-generated module."""


# ---------------------------------------------------------------------------
# basis elements
#
# Internal keys:
#   M3 top      ('t', a, e, c)   x^a y^e z^c            deg (e+2c, a+e+c)
#   M3 bottom   ('b', k, i, l)   w/(x^k y^i z^l)        deg (-i-2l, -1-k-i-l)
#   HC3         ('c', k)         x^k, k in Z            deg (0, k)
#   HS1FREE     ('c0', k)        x^k                    deg (0, k)
#               ('c1', k)        y x^(k-1)              deg (1, k)
#   EB top      ('a', a, c)      x^a z^c alpha          deg (2+2c, 1+a+c)
#               ('B', a, c)      x^a z^c beta           deg (1+2c, 1+a+c)
#   EB bottom   ('v', k, i, l)   S21(w/(x^k y^i z^l))   deg (2-i-2l, -k-i-l)
#                                with (i, l) != (0, 0)


@dataclass(frozen=True)
class BasisElement:
    kind: StdKind
    key: tuple
    deg: Bidegree
    label: str


def _mono_label(a: int, e: int, c: int) -> str:
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if e:
        parts.append("y")
    if c:
        parts.append("z" if c == 1 else f"z^{c}")
    return "".join(parts) or "1"


def make_elem(kind: StdKind, key: tuple) -> BasisElement:
    tag = key[0]
    if kind is StdKind.M3:
        if tag == "t":
            _, a, e, c = key
            deg = Bidegree(e + 2 * c, a + e + c)
            label = _mono_label(a, e, c)
        else:
            _, k, i, l = key
            deg = Bidegree(-i - 2 * l, -1 - k - i - l)
            m = _mono_label(k, i, l)
            label = "w" if m == "1" else f"w/({m})"
    elif kind is StdKind.HC3:
        _, k = key
        deg = Bidegree(0, k)
        label = _mono_label(k, 0, 0) if k >= 0 else f"x^{k}"
    elif kind is StdKind.HS1FREE:
        if tag == "c0":
            _, k = key
            deg = Bidegree(0, k)
            label = _mono_label(k, 0, 0) if k >= 0 else f"x^{k}"
        else:
            _, k = key
            deg = Bidegree(1, k)
            label = f"y*x^{k - 1}"
    elif kind is StdKind.EB:
        if tag == "a":
            _, a, c = key
            deg = Bidegree(2 + 2 * c, 1 + a + c)
            label = (_mono_label(a, 0, c) + " alpha").replace("1 ", "")
        elif tag == "B":
            _, a, c = key
            deg = Bidegree(1 + 2 * c, 1 + a + c)
            label = (_mono_label(a, 0, c) + " beta").replace("1 ", "")
        else:
            _, k, i, l = key
            assert (i, l) != (0, 0)
            deg = Bidegree(2 - i - 2 * l, -k - i - l)
            label = f"S(w/({_mono_label(k, i, l)}))"
    else:  # pragma: no cover
        raise ValueError(kind)
    return BasisElement(kind, key, deg, label)


# ---------------------------------------------------------------------------
# dimension functions (closed-form region predicates)


def _dim_m3(p: int, q: int) -> int:
    if p >= 0 and p % 2 == 0 and q >= p // 2:
        return 1
    if p >= 1 and p % 2 == 1 and q >= (p + 1) // 2:
        return 1
    if p <= 0 and p % 2 == 0 and q <= p // 2 - 1:
        return 1
    if p <= -1 and p % 2 == 1 and q <= (p - 3) // 2:
        return 1
    return 0


def _dim_hc3(p: int, q: int) -> int:
    return 1 if p == 0 else 0


def _dim_hs1free(p: int, q: int) -> int:
    return 1 if p in (0, 1) else 0


def _ceil_half(p: int) -> int:
    return -((-p) // 2)


def _dim_eb(p: int, q: int) -> int:
    if p >= 1 and q >= _ceil_half(p):
        return 1
    if p <= 1 and q <= (p - 2) // 2:  # floor division
        return 1
    return 0


_DIMS = {
    StdKind.M3: _dim_m3,
    StdKind.HC3: _dim_hc3,
    StdKind.HS1FREE: _dim_hs1free,
    StdKind.EB: _dim_eb,
}


def dim_at(kind: StdKind, p: int, q: int) -> int:
    """Dimension of the unshifted standard module at (p, q)."""
    return _DIMS[kind](p, q)


def cell_basis(kind: StdKind, p: int, q: int) -> list[BasisElement]:
    """The basis of the unshifted standard module at (p, q) (length 0 or 1)."""
    if kind is StdKind.M3:
        if p >= 0 and q >= 0:
            c, e = divmod(p, 2) if p % 2 == 0 else ((p - 1) // 2, 1)
            a = q - e - c
            if a >= 0:
                return [make_elem(kind, ("t", a, e, c))]
        if p <= 0 and q <= -1:
            if p % 2 == 0:
                i, l = 0, -p // 2
            else:
                i, l = 1, (-p - 1) // 2
            k = -1 - q - i - l
            if k >= 0:
                return [make_elem(kind, ("b", k, i, l))]
        return []
    if kind is StdKind.HC3:
        return [make_elem(kind, ("c", q))] if p == 0 else []
    if kind is StdKind.HS1FREE:
        if p == 0:
            return [make_elem(kind, ("c0", q))]
        if p == 1:
            return [make_elem(kind, ("c1", q))]
        return []
    if kind is StdKind.EB:
        if p >= 1 and q >= _ceil_half(p):
            if p % 2 == 0:
                c = (p - 2) // 2
                a = q - 1 - c
                return [make_elem(kind, ("a", a, c))]
            c = (p - 1) // 2
            a = q - 1 - c
            return [make_elem(kind, ("B", a, c))]
        if p <= 1 and q <= (p - 2) // 2:
            if p % 2 == 0:
                i, l = 0, (2 - p) // 2
            else:
                i, l = 1, (1 - p) // 2
            k = -q - i - l
            assert (i, l) != (0, 0) and k >= 0
            return [make_elem(kind, ("v", k, i, l))]
        return []
    raise ValueError(kind)  # pragma: no cover


# ---------------------------------------------------------------------------
# ring action


def act(r: str, b: BasisElement) -> list[tuple[int, BasisElement]]:
    """Multiply a basis element by a ring generator r in {'x', 'y', 'z'}.

    Returns a list of (coefficient, element) pairs with at most one entry; all
    structure constants here are 0 or 1.
    """
    assert r in ("x", "y", "z")
    k = b.key
    kind = b.kind
    out: tuple | None = None
    if kind is StdKind.M3:
        if k[0] == "t":
            _, a, e, c = k
            if r == "x":
                out = ("t", a + 1, e, c)
            elif r == "y":
                out = ("t", a, 1, c) if e == 0 else None
            else:
                out = ("t", a, e, c + 1)
        else:
            _, kk, i, l = k
            if r == "x":
                out = ("b", kk - 1, i, l) if kk >= 1 else None
            elif r == "y":
                out = ("b", kk, 0, l) if i == 1 else None
            else:
                out = ("b", kk, i, l - 1) if l >= 1 else None
    elif kind is StdKind.HC3:
        out = ("c", k[1] + 1) if r == "x" else None
    elif kind is StdKind.HS1FREE:
        if k[0] == "c0":
            if r == "x":
                out = ("c0", k[1] + 1)
            elif r == "y":
                out = ("c1", k[1] + 1)
        else:
            out = ("c1", k[1] + 1) if r == "x" else None
    elif kind is StdKind.EB:
        if k[0] == "a":
            _, a, c = k
            if r == "x":
                out = ("a", a + 1, c)
            elif r == "y":
                out = ("B", a, c + 1)  # y*alpha = z*beta
            else:
                out = ("a", a, c + 1)
        elif k[0] == "B":
            _, a, c = k
            if r == "x":
                out = ("B", a + 1, c)
            elif r == "y":
                out = None
            else:
                out = ("B", a, c + 1)
        else:
            _, kk, i, l = k
            if r == "x":
                out = ("v", kk - 1, i, l) if kk >= 1 else None
            elif r == "y":
                out = ("v", kk, 0, l) if i == 1 and l >= 1 else None
            else:
                out = ("v", kk, i, l - 1) if l >= 1 and (i, l - 1) != (0, 0) else None
    if out is None:
        return []
    return [(1, make_elem(kind, out))]


def act_ring(ring_key: tuple, b: BasisElement) -> list[tuple[int, BasisElement]]:
    """Multiply by an arbitrary basis element of the point module M3.

    `ring_key` is an M3 key ('t', a, e, c) or ('b', k, i, l).  Used when a
    module map is extended from generator images: for M3 the whole bottom cone
    of the domain must be pushed through, and for EB the bottom classes are
    (w/m)*alpha.
    """
    if ring_key[0] == "t":
        _, a, e, c = ring_key
        terms: list[tuple[int, BasisElement]] = [(1, b)]
        for gen, count in (("x", a), ("y", e), ("z", c)):
            for _ in range(count):
                nxt: list[tuple[int, BasisElement]] = []
                for coeff, elt in terms:
                    for c2, e2 in act(gen, elt):
                        nxt.append(((coeff * c2) % 3, e2))
                terms = nxt
        return [(c0, e0) for c0, e0 in terms if c0 % 3]

    _, k, i, l = ring_key
    kind = b.kind
    if kind in (StdKind.HC3, StdKind.HS1FREE):
        return []  # infinitely x-divisible
    if kind is StdKind.M3:
        if b.key[0] == "b":
            return []
        _, a2, e2, c2 = b.key
        if a2 <= k and e2 <= i and c2 <= l:
            return [(1, make_elem(StdKind.M3, ("b", k - a2, i - e2, l - c2)))]
        return []
    if kind is StdKind.EB:
        tag = b.key[0]
        if tag == "v":
            return []
        _, a2, c2 = b.key
        if a2 > k or c2 > l:
            return []
        if tag == "a":
            if (i, l - c2) == (0, 0):
                return []
            return [(1, make_elem(StdKind.EB, ("v", k - a2, i, l - c2)))]
        # beta-type: push through z*beta = y*alpha
        if i == 1:
            return [(1, make_elem(StdKind.EB, ("v", k - a2, 0, l - c2 + 1)))]
        return []
    raise ValueError(kind)  # pragma: no cover


def m3_mul(k1: tuple, k2: tuple) -> tuple | None:
    """Product of two M3 basis elements in the ring; None means zero."""
    if k1[0] == "t" and k2[0] == "t":
        _, a1, e1, c1 = k1
        _, a2, e2, c2 = k2
        if e1 + e2 >= 2:
            return None
        return ("t", a1 + a2, e1 + e2, c1 + c2)
    if k1[0] == "b" and k2[0] == "b":
        return None
    t, bo = (k1, k2) if k1[0] == "t" else (k2, k1)
    _, a, e, c = t
    _, k, i, l = bo
    if a <= k and e <= i and c <= l:
        return ("b", k - a, i - e, l - c)
    return None


# ---------------------------------------------------------------------------
# shifted modules and formal direct sums


@dataclass(frozen=True)
class ShiftedStd:
    """A standard module suspended by `shift`."""

    kind: StdKind
    shift: Bidegree = ZERO_DEG

    def dim_at(self, p: int, q: int) -> int:
        return dim_at(self.kind, p - self.shift.p, q - self.shift.q)

    def cell_basis(self, p: int, q: int) -> list[BasisElement]:
        """Basis at (p, q), reported in unshifted internal coordinates."""
        return cell_basis(self.kind, p - self.shift.p, q - self.shift.q)

    def label(self) -> str:
        if self.shift == ZERO_DEG:
            return self.kind.value
        return f"S{{{self.shift.p},{self.shift.q}}}{self.kind.value}"


def _sort_key(s: ShiftedStd) -> tuple:
    return (KIND_ORDER[s.kind], s.shift.p, s.shift.q)


@dataclass(frozen=True)
class ModuleExpr:
    """Formal direct sum of shifted standard modules with multiplicities.

    Stored canonically: summands sorted by (kind, shift), multiplicities > 0.
    Equality is therefore multiset equality.
    """

    terms: tuple[tuple[ShiftedStd, int], ...] = ()

    @staticmethod
    def of(*parts) -> "ModuleExpr":
        """Build from ShiftedStd, StdKind, or (summand, mult) pairs."""
        acc: dict[ShiftedStd, int] = {}
        for part in parts:
            if isinstance(part, tuple):
                s, m = part
            else:
                s, m = part, 1
            if isinstance(s, StdKind):
                s = ShiftedStd(s)
            assert m >= 0
            if m:
                acc[s] = acc.get(s, 0) + m
        terms = tuple(sorted(acc.items(), key=lambda t: _sort_key(t[0])))
        return ModuleExpr(terms)

    def __add__(self, other: "ModuleExpr") -> "ModuleExpr":
        return ModuleExpr.of(*self.terms, *other.terms)

    def summands(self) -> list[ShiftedStd]:
        """Flat list with multiplicity."""
        out = []
        for s, m in self.terms:
            out.extend([s] * m)
        return out

    def dim_at(self, p: int, q: int) -> int:
        return sum(m * s.dim_at(p, q) for s, m in self.terms)

    def dims(self) -> DimFunction:
        return DimFunction(self.dim_at)

    def dims_window(self, window: Window) -> dict[tuple[int, int], int]:
        return {(p, q): self.dim_at(p, q) for (p, q) in window.cells()}

    def row(self, q: int, p_range: Iterable[int]) -> tuple[int, ...]:
        return tuple(self.dim_at(p, q) for p in p_range)

    def total_mult(self) -> int:
        return sum(m for _, m in self.terms)

    def label(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for s, m in self.terms:
            bits.append(s.label() if m == 1 else f"{s.label()}^{m}")
        return " + ".join(bits)

    def to_obj(self) -> list[dict]:
        return [
            {"kind": s.kind.value, "shift": [s.shift.p, s.shift.q], "multiplicity": m}
            for s, m in self.terms
        ]

    @staticmethod
    def from_obj(obj: list[dict]) -> "ModuleExpr":
        parts = []
        for d in obj:
            s = ShiftedStd(StdKind(d["kind"]), Bidegree(*d["shift"]))
            parts.append((s, int(d["multiplicity"])))
        return ModuleExpr.of(*parts)


ZERO_EXPR = ModuleExpr()


def dims_window(thing, window: Window) -> dict[tuple[int, int], int]:
    """Dimension table of a StdKind / ShiftedStd / ModuleExpr over a window."""
    if isinstance(thing, StdKind):
        thing = ShiftedStd(thing)
    if isinstance(thing, ShiftedStd):
        return {(p, q): thing.dim_at(p, q) for (p, q) in window.cells()}
    return thing.dims_window(window)


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Presentation:
    """Finite presentation over the point module.

    relations: each relation is a tuple of (ring_key, generator_name, coeff)
    triples that sum to zero in the module.
    """

    generators: tuple[tuple[str, Bidegree], ...]
    relations: tuple[tuple[tuple[tuple, str, int], ...], ...]


_Y = ("t", 0, 1, 0)
_Z = ("t", 0, 0, 1)


def presentation(kind: StdKind) -> Presentation:
    if kind is StdKind.M3:
        return Presentation(generators=(("u", Bidegree(0, 0)),), relations=())
    if kind is StdKind.EB:
        return Presentation(
            generators=(("alpha", Bidegree(2, 1)), ("beta", Bidegree(1, 1))),
            relations=(
                ((_Y, "beta", 1),),
                ((_Z, "beta", 1), (_Y, "alpha", 2)),
            ),
        )
    raise NotFinitelyGenerated(
        f"{kind.value} is not finitely generated over the point module"
    )


# ---------------------------------------------------------------------------
# dimension-table text format
#
# Header line:  NAME p_min p_max q_min q_max
# Then one row per q from q_max down to q_min, p increasing left to right,
# one integer per cell.


def format_table(name: str, table: dict[tuple[int, int], int], window: Window) -> str:
    lines = [f"{name} {window.p_min} {window.p_max} {window.q_min} {window.q_max}"]
    for q in range(window.q_max, window.q_min - 1, -1):
        lines.append(" ".join(str(table[(p, q)]) for p in window.p_range))
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> tuple[str, Window, dict[tuple[int, int], int]]:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    name, *nums = lines[0].split()
    p_min, p_max, q_min, q_max = map(int, nums)
    window = Window(p_min, p_max, q_min, q_max)
    table: dict[tuple[int, int], int] = {}
    rows = lines[1:]
    assert len(rows) == q_max - q_min + 1, "row count does not match header"
    for j, row in enumerate(rows):
        q = q_max - j
        vals = list(map(int, row.split()))
        assert len(vals) == p_max - p_min + 1, f"bad row length at q={q}"
        for i, v in enumerate(vals):
            table[(p_min + i, q)] = v
    return name, window, table


def load_packaged_table(
    kind: StdKind | str,
) -> tuple[Window, dict[tuple[int, int], int]]:
    """Load one of the committed dimension tables from package data."""
    from importlib.resources import files

    name = kind.value if isinstance(kind, StdKind) else str(kind)
    text = files("equisurf.data").joinpath(f"{name.lower()}.txt").read_text()
    parsed_name, window, table = parse_table(text)
    assert parsed_name.upper() == name.upper(), f"table {name} holds {parsed_name}"
    return window, table
