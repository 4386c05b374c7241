"""Bredon cohomology of every closed C3-surface, two independent ways.

`cohomology` evaluates the classification theorems family by family from the
surgery parameters.  `cohomology_from_invariants` evaluates the corollary that
reads the answer off (orientability, beta, F) alone.  The two must agree on
every realizable class; `verify_agreement` checks exactly that, and
`verify_quotient_row` anchors row q = 0 against the singular cohomology of the
orbit surface.

Answers are formal sums of the four standard modules: writing T for
Sigma^{1,0}HC3 (a "tower"),

    SPH(k, g)        M3 + Sigma^{2,1}M3 + EB^{2k}        + T^{2g}
    POLY(n, k, g)    M3 + Sigma^{2,1}M3 + EB^{3n-2+2k}   + T^{2g}
    NONOR_EVEN(k,r)  M3 + EB^{2k}                        + T^{r-1}
    NONOR_ODD(k,r)   M3 + EB^{2k}                        + T^{r}
    FREE_OR(g)       HS1FREE + Sigma^{1,0}HS1FREE        + T^{2g}
    FREE_NONOR(r)    HS1FREE                             + T^{r}
"""

from __future__ import annotations

import json

from .bigraded import Bidegree
from .singular import sing_z3
from .stdmod import ModuleExpr, ShiftedStd, StdKind
from .surfaces import (
    Family,
    Invariants,
    SemanticError,
    SurfaceClass,
    check_congruence,
    invariants,
    quotient_surface,
)

M3 = ShiftedStd(StdKind.M3)
S21M3 = ShiftedStd(StdKind.M3, Bidegree(2, 1))
HS1 = ShiftedStd(StdKind.HS1FREE)
S10HS1 = ShiftedStd(StdKind.HS1FREE, Bidegree(1, 0))
TOWER = ShiftedStd(StdKind.HC3, Bidegree(1, 0))
EB = ShiftedStd(StdKind.EB)


class NotRealizable(SemanticError):
    """Invariant triples that no closed C3-surface attains."""


def cohomology(cls: SurfaceClass) -> ModuleExpr:
    """Evaluate the classification theorem for one surgery class."""
    f = cls.family
    p = dict(cls.params)
    if f is Family.SPH:
        return ModuleExpr.of(M3, S21M3, (EB, 2 * p["k"]), (TOWER, 2 * p["g"]))
    if f is Family.POLY:
        e = (3 * p["n"] - 2) + 2 * p["k"]
        return ModuleExpr.of(M3, S21M3, (EB, e), (TOWER, 2 * p["g"]))
    if f is Family.NONOR_EVEN:
        return ModuleExpr.of(M3, (EB, 2 * p["k"]), (TOWER, p["r"] - 1))
    if f is Family.NONOR_ODD:
        return ModuleExpr.of(M3, (EB, 2 * p["k"]), (TOWER, p["r"]))
    if f is Family.FREE_OR:
        return ModuleExpr.of(HS1, S10HS1, (TOWER, 2 * p["g"]))
    if f is Family.FREE_NONOR:
        return ModuleExpr.of(HS1, (TOWER, p["r"]))
    raise ValueError(f)  # pragma: no cover


def cohomology_from_invariants(inv: Invariants) -> ModuleExpr:
    """Evaluate the invariant-only corollary.

    Raises NotRealizable with "not realizable" when the congruence
    F = chi (mod 3) fails, and with "invariants outside realizable range" when
    the congruence holds but an exponent would go negative.
    """
    beta, F = inv.beta, inv.fixed_points
    if beta < 0 or F < 0:
        raise NotRealizable("invariants outside realizable range")
    if F == 0 and not inv.free or F > 0 and inv.free:
        raise NotRealizable("not realizable")
    if not check_congruence(inv):
        raise NotRealizable("not realizable")
    if inv.orientable and beta % 2:
        raise NotRealizable("invariants outside realizable range")

    def towers(num: int) -> int:
        assert num % 3 == 0, "congruence should have caught this"
        t = num // 3
        if t < 0:
            raise NotRealizable("invariants outside realizable range")
        return t

    if F == 0:
        t = towers(beta - 2)
        if inv.orientable:
            return ModuleExpr.of(HS1, S10HS1, (TOWER, t))
        return ModuleExpr.of(HS1, (TOWER, t))

    if inv.orientable:
        if F < 2:
            raise NotRealizable("invariants outside realizable range")
        t = towers(beta - 2 * F + 4)
        return ModuleExpr.of(M3, S21M3, (EB, F - 2), (TOWER, t))
    if F % 2 == 0:
        if F < 2:
            raise NotRealizable("invariants outside realizable range")
        t = towers(beta - 2 * F + 1)
        return ModuleExpr.of(M3, (EB, F - 2), (TOWER, t))
    t = towers(beta - 2 * F + 1)
    return ModuleExpr.of(M3, (EB, F - 1), (TOWER, t))


def verify_agreement(cls: SurfaceClass) -> bool:
    """Theorem route and corollary route give the same canonical answer."""
    return cohomology(cls) == cohomology_from_invariants(invariants(cls))


def verify_quotient_row(cls: SurfaceClass) -> bool:
    """Row q = 0 of the answer equals the singular cohomology of the quotient."""
    expr = cohomology(cls)
    expected = sing_z3(quotient_surface(cls))
    got = expr.row(0, range(0, 3))
    if got != expected:
        return False
    # nothing may leak outside p in {0, 1, 2} on row 0
    return all(expr.dim_at(p, 0) == 0 for p in range(-6, 0)) and all(
        expr.dim_at(p, 0) == 0 for p in range(3, 9)
    )


# ---------------------------------------------------------------------------
# canonical JSON


def answer_obj(cls: SurfaceClass) -> dict:
    inv = invariants(cls)
    return {
        "class": cls.name,
        "invariants": inv.to_obj(),
        "summands": cohomology(cls).to_obj(),
        "checks": {
            "congruence": check_congruence(inv),
            "agreement": verify_agreement(cls),
            "quotient_row": verify_quotient_row(cls),
        },
    }


def to_canonical_json(obj) -> str:
    """Fixed serialization: sorted keys, two-space indent, newline-terminated.

    Parsing and re-serializing a canonical document is byte-identical.
    """
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
