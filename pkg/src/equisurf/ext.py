"""Free resolution of EB over the point module, and Ext groups against it.

The start of a minimal free resolution  F2 -> F1 -> F0 -> EB -> 0:

    F0 = <a0 (2,1), b0 (1,1)>      eta: a0 -> alpha, b0 -> beta
    F1 = <a1 (2,2), b1 (3,2)>      d1: a1 -> y b0,  b1 -> z b0 - y a0
    F2 = <a2 (3,3), b2 (4,3)>      d2: a2 -> y a1,  b2 -> z a1 - y b1

d1 d2 = 0 symbolically (y^2 = 0 and the yz/zy terms cancel), and im(d2) =
ker(d1) cell by cell on any window.  Applying Hom(-, N) and taking homology at
F1 computes Ext^1(EB, N); `ext1_detail` exposes every intermediate dimension.

Free modules are tuples of (generator, bidegree); maps between them store, per
column generator, a list of (ring element, row generator, coefficient) with
ring elements given as M3 basis keys.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bigraded import Bidegree, F3Matrix, Window, rank_kernel_image
from .stdmod import (
    BasisElement,
    ModuleExpr,
    ShiftedStd,
    StdKind,
    act_ring,
    cell_basis,
    m3_mul,
    make_elem,
)

FreeModule = tuple[tuple[str, Bidegree], ...]
# map entry: column generator -> ((ring_key, row_generator, coeff), ...)
FreeMap = dict[str, tuple[tuple[tuple, str, int], ...]]

_Y = ("t", 0, 1, 0)
_Z = ("t", 0, 0, 1)
_ONE = ("t", 0, 0, 0)


@dataclass(frozen=True)
class Resolution:
    f0: FreeModule
    f1: FreeModule
    f2: FreeModule
    d1: FreeMap
    d2: FreeMap
    eta: dict[str, BasisElement]


def eb_resolution() -> Resolution:
    f0 = (("a0", Bidegree(2, 1)), ("b0", Bidegree(1, 1)))
    f1 = (("a1", Bidegree(2, 2)), ("b1", Bidegree(3, 2)))
    f2 = (("a2", Bidegree(3, 3)), ("b2", Bidegree(4, 3)))
    d1: FreeMap = {
        "a1": ((_Y, "b0", 1),),
        "b1": ((_Z, "b0", 1), (_Y, "a0", 2)),
    }
    d2: FreeMap = {
        "a2": ((_Y, "a1", 1),),
        "b2": ((_Z, "a1", 1), (_Y, "b1", 2)),
    }
    eta = {
        "a0": make_elem(StdKind.EB, ("a", 0, 0)),
        "b0": make_elem(StdKind.EB, ("B", 0, 0)),
    }
    return Resolution(f0, f1, f2, d1, d2, eta)


def compose_free(g: FreeMap, f: FreeMap) -> dict[str, dict[tuple[tuple, str], int]]:
    """The composite g . f between free modules, collected mod 3.

    Returns column -> {(ring_key, row): coeff}; an all-zero result means the
    composite vanishes identically.
    """
    out: dict[str, dict[tuple[tuple, str], int]] = {}
    for col, entries in f.items():
        acc: dict[tuple[tuple, str], int] = {}
        for r1, mid, c1 in entries:
            for r2, row, c2 in g.get(mid, ()):
                prod = m3_mul(r1, r2)
                if prod is None:
                    continue
                key = (prod, row)
                acc[key] = (acc.get(key, 0) + c1 * c2) % 3
        out[col] = {k: v for k, v in acc.items() if v % 3}
    return out


# ---------------------------------------------------------------------------
# cellwise matrices of free-module maps (used for window exactness)


def free_cell_basis(f: FreeModule, p: int, q: int) -> list[tuple[str, BasisElement]]:
    out = []
    for gen, deg in f:
        for b in cell_basis(StdKind.M3, p - deg.p, q - deg.q):
            out.append((gen, b))
    return out


def free_map_matrix(d: FreeMap, dom: FreeModule, cod: FreeModule, p: int, q: int):
    """Matrix of d at cell (p, q), acting on column vectors."""
    dom_basis = free_cell_basis(dom, p, q)
    cod_basis = free_cell_basis(cod, p, q)
    cod_index = {(g, b.key): i for i, (g, b) in enumerate(cod_basis)}
    rows = [[0] * len(dom_basis) for _ in cod_basis]
    for j, (gen, b) in enumerate(dom_basis):
        for ring_key, row_gen, coeff in d.get(gen, ()):
            prod = m3_mul(b.key, ring_key)
            if prod is None:
                continue
            i = cod_index.get((row_gen, prod))
            assert i is not None, "image leaves the expected cell"
            rows[i][j] = (rows[i][j] + coeff) % 3
    return rows, len(dom_basis), len(cod_basis)


def window_exactness(window: Window) -> list[tuple[int, int]]:
    """Cells of the window where im(d2) != ker(d1) or im(d1) != ker(eta).

    Empty list means the resolution segment is exact over the window.  The
    augmentation is checked too: eta is surjective with kernel im(d1).
    """
    res = eb_resolution()
    assert not any(compose_free(res.d1, res.d2).values()), "d1 . d2 != 0"
    bad = []
    eb = ShiftedStd(StdKind.EB)
    for p, q in window.cells():
        m1, n1dom, n1cod = free_map_matrix(res.d1, res.f1, res.f0, p, q)
        m2, n2dom, _ = free_map_matrix(res.d2, res.f2, res.f1, p, q)
        r1 = F3Matrix(m1, ncols=n1dom).rank() if n1dom else 0
        r2 = F3Matrix(m2, ncols=n2dom).rank() if n2dom else 0
        # exactness at F1: rank d2 == dim ker d1
        if r2 != n1dom - r1:
            bad.append((p, q))
            continue
        # augmentation: eta cellwise surjective with kernel im d1
        f0_basis = free_cell_basis(res.f0, p, q)
        eb_basis = eb.cell_basis(p, q)
        eb_index = {b.key: i for i, b in enumerate(eb_basis)}
        rows = [[0] * len(f0_basis) for _ in eb_basis]
        for j, (gen, b) in enumerate(f0_basis):
            for coeff, elt in act_ring(b.key, res.eta[gen]):
                rows[eb_index[elt.key]][j] = (rows[eb_index[elt.key]][j] + coeff) % 3
        re = F3Matrix(rows, ncols=len(f0_basis)).rank() if f0_basis else 0
        if re != len(eb_basis) or len(f0_basis) - re != r1:
            bad.append((p, q))
    return bad


# ---------------------------------------------------------------------------
# Hom spaces and induced maps


def _as_expr(n) -> ModuleExpr:
    if isinstance(n, StdKind):
        return ModuleExpr.of(ShiftedStd(n))
    if isinstance(n, ShiftedStd):
        return ModuleExpr.of(n)
    return n


def hom_space(
    f: FreeModule, n, shift: Bidegree = Bidegree(0, 0)
) -> list[tuple[str, int, int, BasisElement]]:
    """Basis of module maps F -> Sigma^shift N.

    A map is determined by generator images; the basis vectors are
    (generator, summand position, copy index, target basis element) with the
    target element taken at degree deg(generator) - shift.
    """
    expr = _as_expr(n)
    out = []
    summands = expr.summands()
    for gen, deg in f:
        for si, s in enumerate(summands):
            for b in s.cell_basis(deg.p - shift.p, deg.q - shift.q):
                out.append((gen, si, 0, b))
    return out


def induced_map(
    d: FreeMap,
    f_from: FreeModule,
    f_to: FreeModule,
    n,
    shift: Bidegree = Bidegree(0, 0),
) -> F3Matrix:
    """Matrix of d^* : Hom(f_to, N) -> Hom(f_from, N) on the hom_space bases."""
    expr = _as_expr(n)
    src = hom_space(f_to, expr, shift)
    dst = hom_space(f_from, expr, shift)
    dst_index = {(g, si, b.key): i for i, (g, si, _, b) in enumerate(dst)}
    rows = [[0] * len(src) for _ in dst]
    for j, (g_to, si, _, b) in enumerate(src):
        # the hom sending g_to -> b (in summand si); push through d
        for g_from, _deg in f_from:
            for ring_key, row_gen, coeff in d.get(g_from, ()):
                if row_gen != g_to:
                    continue
                for c2, elt in act_ring(ring_key, b):
                    i = dst_index.get((g_from, si, elt.key))
                    assert i is not None, "induced image leaves the cell basis"
                    rows[i][j] = (rows[i][j] + coeff * c2) % 3
    return F3Matrix(rows, ncols=len(src))


def ext1_detail(n, shift: Bidegree = Bidegree(0, 0)) -> dict:
    """Ext^1(EB, Sigma^shift N) with all intermediate dimensions."""
    if not isinstance(shift, Bidegree):
        shift = Bidegree(*shift)
    res = eb_resolution()
    expr = _as_expr(n)
    h0 = hom_space(res.f0, expr, shift)
    h1 = hom_space(res.f1, expr, shift)
    h2 = hom_space(res.f2, expr, shift)
    d1_star = induced_map(res.d1, res.f1, res.f0, expr, shift)
    d2_star = induced_map(res.d2, res.f2, res.f1, expr, shift)
    r2, ker2, _ = rank_kernel_image(d2_star) if len(h1) else (0, [], [])
    dim_ker = len(ker2) if len(h1) else 0
    r1 = d1_star.rank() if len(h0) and len(h1) else 0
    # im(d1*) sits inside ker(d2*) because d2* d1* = (d1 d2)* = 0
    return {
        "dim_hom_f0": len(h0),
        "dim_hom_f1": len(h1),
        "dim_hom_f2": len(h2),
        "dim_ker_d2_star": dim_ker,
        "dim_im_d1_star": r1,
        "ext1": dim_ker - r1,
    }


def ext1(n, shift: Bidegree = Bidegree(0, 0)) -> int:
    return ext1_detail(n, shift)["ext1"]
