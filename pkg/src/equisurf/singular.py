"""Singular mod-3 cohomology of closed surfaces, and the free-orbit lemma.

Used to anchor the equivariant answers in row q = 0 and to build the
cohomology of a product C3 x Y out of the singular cohomology of Y.
"""

from __future__ import annotations

from .bigraded import Bidegree
from .stdmod import ModuleExpr, ShiftedStd, StdKind


def sing_z3(surf: tuple[str, int]) -> tuple[int, int, int]:
    """Mod-3 Betti numbers (h0, h1, h2) of a closed surface.

    Orientable M_g: (1, 2g, 1).  Nonorientable N_r, r >= 1: (1, r-1, 0) —
    the top class dies mod 3 because the surface is nonorientable and 3 is odd.
    """
    kind, v = surf
    if kind == "M":
        assert v >= 0
        return (1, 2 * v, 1)
    if kind == "N":
        if v < 1:
            raise ValueError("N_0 is not a surface in this convention")
        return (1, v - 1, 0)
    raise ValueError(f"unknown surface kind {kind!r}")


def punctured(surf: tuple[str, int]) -> tuple[int, int]:
    """Betti numbers of a once-punctured closed surface (a wedge of circles)."""
    kind, v = surf
    if kind == "M":
        assert v >= 0
        return (1, 2 * v)
    if kind == "N":
        if v < 1:
            raise ValueError("N_0 is not a surface in this convention")
        return (1, v)
    raise ValueError(f"unknown surface kind {kind!r}")


def times_c3(dims: tuple[int, ...]) -> ModuleExpr:
    """Equivariant cohomology of C3 x Y from the Betti numbers of Y.

    A free orbit worth of each singular class contributes one x-invertible
    column: the answer is the sum over p of (Sigma^{p,0} HC3)^(h_p).
    """
    parts = []
    for p, h in enumerate(dims):
        if h:
            parts.append((ShiftedStd(StdKind.HC3, Bidegree(p, 0)), h))
    return ModuleExpr.of(*parts)
