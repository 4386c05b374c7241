"""Surgery descriptions of closed surfaces with an order-three symmetry.

Every closed surface with an action of the cyclic group C3 is built from one
of five base pieces by attaching k equivariant ribbon triples and optionally
forming an equivariant connected sum with three copies of a closed surface:

    S21          the rotation sphere (two fixed points)
    N1[1]        the one-fixed-point nonorientable base
    Poly(n)      the polygonal base with 3n fixed points, n >= 1
    M1free       the free torus
    N2free       the free Klein bottle

Descriptor grammar (whitespace-insensitive):

    S21    [+ k R3] [# M(g) | # N(r)]
    N1[1]  [+ k R3] [# N(r)]
    Poly(n)[+ k R3] [# M(g)]
    M1free [# M(g)]
    N2free [# N(r)]

plus the shorthands Sph(k,g), PolyF(n,k,g), NEven(k,r), NOdd(k,r), MFree(g),
NFree(r).  N(0) is rejected everywhere: there is no closed surface N_0 in this
convention.  The free bases admit no ribbons (a ribbon triple would create
fixed tangencies).

Classification lands in six families with canonical names:

    family      surgery                      name
    SPH         S21 + kR3 # M(g)             Sph_{2k+3g}[2k+2]
    POLY        Poly(n) + kR3 # M(g)         Poly_{n, 3n-2+2k+3g}[3n+2k]
    NONOR_EVEN  S21 + kR3 # N(r), r >= 1     N_{4k+3r}[2k+2]
    NONOR_ODD   N1[1] + kR3 # N(r)           N_{1+4k+3r}[1+2k]
    FREE_OR     M1free # M(g)                M_{1+3g}^free
    FREE_NONOR  N2free # N(r)                N_{2+3r}^free

The bracketed number is the count of fixed points F; the subscript is the
genus/crosscap count of the underlying closed surface.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass


class ParseError(ValueError):
    """Malformed descriptor text."""


class SemanticError(ValueError):
    """Well-formed descriptor that names no surface in the calculus."""


class Family(enum.Enum):
    SPH = "SPH"
    POLY = "POLY"
    NONOR_EVEN = "NONOR_EVEN"
    NONOR_ODD = "NONOR_ODD"
    FREE_OR = "FREE_OR"
    FREE_NONOR = "FREE_NONOR"


@dataclass(frozen=True)
class SurgeryExpr:
    """Parsed surgery description, prior to classification."""

    base: str  # 'S21' | 'N1_1' | 'POLY' | 'M1FREE' | 'N2FREE'
    n: int | None = None  # Poly parameter
    ribbons: int = 0
    connect: tuple[str, int] | None = None  # ('M', g) or ('N', r)

    def describe(self) -> str:
        base = {
            "S21": "S21",
            "N1_1": "N1[1]",
            "POLY": f"Poly({self.n})",
            "M1FREE": "M1free",
            "N2FREE": "N2free",
        }[self.base]
        s = base
        if self.ribbons:
            s += f" + {self.ribbons} R3"
        if self.connect:
            s += f" # {self.connect[0]}({self.connect[1]})"
        return s


@dataclass(frozen=True)
class Invariants:
    orientable: bool
    beta: int  # total mod-3 Betti number of H^1 of the underlying surface
    fixed_points: int
    euler: int
    free: bool

    def to_obj(self) -> dict:
        return {
            "orientable": self.orientable,
            "beta": self.beta,
            "fixed_points": self.fixed_points,
            "euler": self.euler,
            "free": self.free,
        }


@dataclass(frozen=True)
class SurfaceClass:
    family: Family
    params: tuple[tuple[str, int], ...]  # ordered (name, value) pairs
    name: str
    surgery: str

    def param(self, key: str) -> int:
        return dict(self.params)[key]

    def to_obj(self) -> dict:
        return {
            "family": self.family.value,
            "params": {k: v for k, v in self.params},
            "name": self.name,
            "surgery": self.surgery,
        }


# ---------------------------------------------------------------------------
# parsing

_SHORTHANDS = [
    (re.compile(r"^SPH\((-?\d+),(-?\d+)\)$", re.I), "SPH"),
    (re.compile(r"^POLYF\((-?\d+),(-?\d+),(-?\d+)\)$", re.I), "POLYF"),
    (re.compile(r"^NEVEN\((-?\d+),(-?\d+)\)$", re.I), "NEVEN"),
    (re.compile(r"^NODD\((-?\d+),(-?\d+)\)$", re.I), "NODD"),
    (re.compile(r"^MFREE\((-?\d+)\)$", re.I), "MFREE"),
    (re.compile(r"^NFREE\((-?\d+)\)$", re.I), "NFREE"),
]

_MAIN = re.compile(
    r"^(?P<base>S21|N1\[1\]|POLY\((?P<n>-?\d+)\)|M1FREE|N2FREE)"
    r"(\+(?P<k>-?\d+)R3)?"
    r"(\#(?P<ckind>M|N)\((?P<cparam>-?\d+)\))?$",
    re.I,
)


def parse_surface(text: str) -> SurgeryExpr:
    """Parse a surgery descriptor; raises ParseError / SemanticError."""
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ParseError("empty descriptor")

    for rx, tag in _SHORTHANDS:
        m = rx.match(compact)
        if not m:
            continue
        vals = list(map(int, m.groups()))
        if tag == "SPH":
            k, g = vals
            return SurgeryExpr("S21", ribbons=k, connect=("M", g) if g else None)
        if tag == "POLYF":
            n, k, g = vals
            return SurgeryExpr("POLY", n=n, ribbons=k, connect=("M", g) if g else None)
        if tag == "NEVEN":
            k, r = vals
            return SurgeryExpr("S21", ribbons=k, connect=("N", r))
        if tag == "NODD":
            k, r = vals
            return SurgeryExpr("N1_1", ribbons=k, connect=("N", r) if r else None)
        if tag == "MFREE":
            (g,) = vals
            return SurgeryExpr("M1FREE", connect=("M", g) if g else None)
        if tag == "NFREE":
            (r,) = vals
            return SurgeryExpr("N2FREE", connect=("N", r) if r else None)

    m = _MAIN.match(compact)
    if not m:
        raise ParseError(f"cannot parse surface descriptor {text!r}")
    base_raw = m.group("base").upper()
    if base_raw.startswith("POLY"):
        base = "POLY"
        n = int(m.group("n"))
    else:
        base = {"S21": "S21", "N1[1]": "N1_1", "M1FREE": "M1FREE", "N2FREE": "N2FREE"}[
            base_raw
        ]
        n = None
    k = int(m.group("k")) if m.group("k") else 0
    connect = None
    if m.group("ckind"):
        connect = (m.group("ckind").upper(), int(m.group("cparam")))
    return SurgeryExpr(base, n=n, ribbons=k, connect=connect)


# ---------------------------------------------------------------------------
# classification


def classify(expr: SurgeryExpr) -> SurfaceClass:
    """Sort a surgery expression into one of the six families."""
    k = expr.ribbons
    if k < 0:
        raise SemanticError("ribbon count must be non-negative")
    if expr.connect is not None:
        ckind, cv = expr.connect
        if cv < 0:
            raise SemanticError("connected-sum parameter must be non-negative")
        if ckind == "N" and cv == 0:
            raise SemanticError("N_0 is not a surface in this convention")

    def need_connect(kind: str) -> int:
        if expr.connect is None:
            return 0
        if expr.connect[0] != kind:
            raise SemanticError(
                f"family mismatch: base {expr.base} does not combine with "
                f"{expr.connect[0]}({expr.connect[1]})"
            )
        return expr.connect[1]

    if expr.base == "S21":
        if expr.connect is not None and expr.connect[0] == "N":
            r = expr.connect[1]
            return SurfaceClass(
                Family.NONOR_EVEN,
                (("k", k), ("r", r)),
                f"N_{4 * k + 3 * r}[{2 * k + 2}]",
                expr.describe(),
            )
        g = need_connect("M")
        return SurfaceClass(
            Family.SPH,
            (("k", k), ("g", g)),
            f"Sph_{2 * k + 3 * g}[{2 * k + 2}]",
            expr.describe(),
        )
    if expr.base == "N1_1":
        r = need_connect("N")
        return SurfaceClass(
            Family.NONOR_ODD,
            (("k", k), ("r", r)),
            f"N_{1 + 4 * k + 3 * r}[{1 + 2 * k}]",
            expr.describe(),
        )
    if expr.base == "POLY":
        n = expr.n or 0
        if n < 1:
            raise SemanticError("Poly(n) requires n >= 1")
        g = need_connect("M")
        genus = (3 * n - 2) + 2 * k + 3 * g
        return SurfaceClass(
            Family.POLY,
            (("n", n), ("k", k), ("g", g)),
            f"Poly_{{{n},{genus}}}[{3 * n + 2 * k}]",
            expr.describe(),
        )
    if expr.base == "M1FREE":
        if k:
            raise SemanticError("free bases admit no ribbon surgery")
        g = need_connect("M")
        return SurfaceClass(
            Family.FREE_OR, (("g", g),), f"M_{1 + 3 * g}^free", expr.describe()
        )
    if expr.base == "N2FREE":
        if k:
            raise SemanticError("free bases admit no ribbon surgery")
        r = need_connect("N")
        return SurfaceClass(
            Family.FREE_NONOR, (("r", r),), f"N_{2 + 3 * r}^free", expr.describe()
        )
    raise SemanticError(f"unknown base {expr.base!r}")  # pragma: no cover


def classify_str(text: str) -> SurfaceClass:
    return classify(parse_surface(text))


# ---------------------------------------------------------------------------
# invariants and derived surfaces


def invariants(cls: SurfaceClass) -> Invariants:
    f = cls.family
    p = dict(cls.params)
    if f is Family.SPH:
        beta = 2 * (2 * p["k"] + 3 * p["g"])
        fixed = 2 * p["k"] + 2
        orient = True
    elif f is Family.POLY:
        beta = 2 * ((3 * p["n"] - 2) + 2 * p["k"] + 3 * p["g"])
        fixed = 3 * p["n"] + 2 * p["k"]
        orient = True
    elif f is Family.NONOR_EVEN:
        beta = 4 * p["k"] + 3 * p["r"]
        fixed = 2 * p["k"] + 2
        orient = False
    elif f is Family.NONOR_ODD:
        beta = 1 + 4 * p["k"] + 3 * p["r"]
        fixed = 1 + 2 * p["k"]
        orient = False
    elif f is Family.FREE_OR:
        beta = 2 * (1 + 3 * p["g"])
        fixed = 0
        orient = True
    else:  # FREE_NONOR
        beta = 2 + 3 * p["r"]
        fixed = 0
        orient = False
    return Invariants(
        orientable=orient,
        beta=beta,
        fixed_points=fixed,
        euler=2 - beta,
        free=(fixed == 0),
    )


def check_congruence(inv: Invariants) -> bool:
    """Fixed points against Euler characteristic: F = chi (mod 3)."""
    return (inv.fixed_points - (2 - inv.beta)) % 3 == 0


def underlying_surface(cls: SurfaceClass) -> tuple[str, int]:
    inv = invariants(cls)
    if inv.orientable:
        assert inv.beta % 2 == 0
        return ("M", inv.beta // 2)
    return ("N", inv.beta)


def quotient_surface(cls: SurfaceClass) -> tuple[str, int]:
    """Orbit surface, via the Euler-characteristic transfer formula.

    chi(X / C3) = (chi(X) + 2F) / 3 for F > 0 and chi(X) / 3 for free actions;
    orientability passes to the quotient.
    """
    inv = invariants(cls)
    chi = inv.euler
    top = chi + 2 * inv.fixed_points if inv.fixed_points else chi
    assert top % 3 == 0, "surgery data violates the quotient Euler count"
    chi_q = top // 3
    if inv.orientable:
        assert (2 - chi_q) % 2 == 0
        return ("M", (2 - chi_q) // 2)
    return ("N", 2 - chi_q)


def surface_name(surf: tuple[str, int]) -> str:
    return f"{surf[0]}_{surf[1]}"
