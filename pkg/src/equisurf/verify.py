"""Verification suites: every claim the library makes, re-checked from scratch.

Each suite returns a JSON-able report with a top-level ``passed`` flag.
``run_suite("all")`` is the one the CLI exposes as ``equisurf verify``.
"""

from __future__ import annotations

import time

from .bigraded import Window
from .cohomology import answer_obj
from .ext import ext1_detail, window_exactness
from .les import load_cases, proof_grid, verify_case
from .mackey import MackeyFunctorC3
from .stdmod import KIND_ORDER, StdKind, dim_at, load_packaged_table
from .surfaces import classify_str

SUITES = ("axioms", "figures", "theorems", "ext", "les", "all")

FIGURE_WINDOW = Window(-8, 8, -8, 8)


def verify_axioms() -> dict:
    """Mackey-functor axiom checks: two honest examples and one planted failure."""
    results = {}
    for name, mf in (
        ("constant_z3", MackeyFunctorC3.constant_z3()),
        ("free_orbit_z3", MackeyFunctorC3.free_orbit_z3()),
    ):
        checks = mf.verify_axioms()
        results[name] = {
            "axioms": {label: ok for label, ok in checks},
            "passed": all(ok for _, ok in checks),
        }
    bad = MackeyFunctorC3.axiom_failure_example()
    bad_checks = dict(bad.verify_axioms())
    results["axiom_failure_example"] = {
        "axioms": bad_checks,
        # the planted example must fail (ii) and (v) and nothing else
        "passed": (
            not bad_checks["ii"]
            and not bad_checks["v"]
            and all(v for k, v in bad_checks.items() if k not in ("ii", "v"))
        ),
    }
    return {
        "passed": all(r["passed"] for r in results.values()),
        "functors": results,
    }


def verify_figures(window: Window = FIGURE_WINDOW) -> dict:
    """Region formulas vs the packaged dimension tables, cell by cell."""
    per_kind = {}
    for kind in KIND_ORDER:
        tw, table = load_packaged_table(kind)
        mismatches = []
        for p in range(max(window.p_min, tw.p_min), min(window.p_max, tw.p_max) + 1):
            for q in range(max(window.q_min, tw.q_min), min(window.q_max, tw.q_max) + 1):
                got = dim_at(kind, p, q)
                want = table[(p, q)]
                if got != want:
                    mismatches.append({"p": p, "q": q, "formula": got, "table": want})
        per_kind[kind.value] = {
            "passed": not mismatches,
            "cells_checked": (min(window.p_max, tw.p_max) - max(window.p_min, tw.p_min) + 1)
            * (min(window.q_max, tw.q_max) - max(window.q_min, tw.q_min) + 1),
            "mismatches": mismatches[:10],
        }
    return {
        "passed": all(r["passed"] for r in per_kind.values()),
        "kinds": per_kind,
    }


def theorem_battery_classes(k_max: int = 4, g_max: int = 4, r_max: int = 4, n_max: int = 4):
    """Every surface expression the main-theorem battery walks through."""
    exprs = []
    for g in range(g_max + 1):
        exprs.append(f"MFree({g})")
    for r in range(r_max + 1):
        exprs.append(f"NFree({r})")
    for k in range(k_max + 1):
        for g in range(g_max + 1):
            exprs.append(f"Sph({k},{g})")
    for n in range(1, n_max + 1):
        for k in range(k_max + 1):
            for g in range(g_max + 1):
                exprs.append(f"PolyF({n},{k},{g})")
    for k in range(k_max + 1):
        for r in range(1, r_max + 1):
            exprs.append(f"NEven({k},{r})")
    for k in range(k_max + 1):
        for r in range(r_max + 1):
            exprs.append(f"NOdd({k},{r})")
    return exprs


def verify_theorems(k_max: int = 4, g_max: int = 4, r_max: int = 4, n_max: int = 4) -> dict:
    """Main-theorem battery: theorem vs invariant-corollary vs quotient row.

    For every class in the grid the three independent encodings must agree:
    the family-by-family answer, the answer reconstructed from (orientability,
    beta, F) alone, and the row-0 profile against the Z/3-singular cohomology
    of the quotient surface.
    """
    exprs = theorem_battery_classes(k_max, g_max, r_max, n_max)
    failures = []
    for expr in exprs:
        cls = classify_str(expr)
        obj = answer_obj(cls)
        checks = obj["checks"]
        if not all(checks.values()):
            failures.append({"expr": expr, "checks": checks})
    return {
        "passed": not failures,
        "classes_checked": len(exprs),
        "failures": failures[:10],
    }


EXT_BATTERY = (
    ("EB", StdKind.EB, (0, 0)),
    ("S21_M3", StdKind.M3, (2, 1)),
    ("S10_HC3", StdKind.HC3, (1, 0)),
)


def verify_ext(window: Window = Window(-6, 8, -6, 8)) -> dict:
    """Resolution exactness plus the Ext^1 battery used by the splitting rules."""
    bad_cells = window_exactness(window)
    targets = {}
    for label, kind, shift in EXT_BATTERY:
        detail = ext1_detail(kind, shift)
        targets[label] = detail
    expected = {
        "EB": {"dim_hom_f1": 2, "dim_ker_d2_star": 1, "dim_im_d1_star": 1, "ext1": 0},
        "S21_M3": {"dim_hom_f1": 2, "dim_ker_d2_star": 1, "dim_im_d1_star": 1, "ext1": 0},
        "S10_HC3": {"dim_hom_f1": 0, "dim_ker_d2_star": 0, "dim_im_d1_star": 0, "ext1": 0},
    }
    battery_ok = all(
        all(targets[label][key] == val for key, val in want.items())
        for label, want in expected.items()
    )
    return {
        "passed": not bad_cells and battery_ok,
        "resolution_bad_cells": bad_cells[:10],
        "targets": targets,
    }


def verify_les(window: Window | None = None, grid_limit: int = 2) -> dict:
    """Replays every packaged fixture and the surgery proof grid."""
    reports = {}
    for case in load_cases():
        rep = verify_case(case, window=window)
        reports[case.name] = {
            "ok": rep.ok,
            "unique": rep.unique,
            "classes": rep.admissible_classes,
            "failing_cells": len(rep.failing_cells),
        }
    grid = {}
    for case in proof_grid(limit=grid_limit):
        rep = verify_case(case, window=window)
        grid[case.name] = {"ok": rep.ok, "classes": rep.admissible_classes}
    return {
        "passed": all(r["ok"] for r in reports.values())
        and all(r["ok"] for r in grid.values()),
        "fixtures": reports,
        "grid_cases": len(grid),
        "grid_failures": {k: v for k, v in grid.items() if not v["ok"]},
    }


def run_suite(suite: str, window: Window | None = None) -> dict:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}, expected one of {SUITES}")
    t0 = time.monotonic()
    if suite == "all":
        sub = {name: run_suite(name, window=window) for name in SUITES if name != "all"}
        return {
            "suite": "all",
            "passed": all(r["passed"] for r in sub.values()),
            "elapsed_s": round(time.monotonic() - t0, 3),
            "suites": sub,
        }
    if suite == "axioms":
        report = verify_axioms()
    elif suite == "figures":
        report = verify_figures(window or FIGURE_WINDOW)
    elif suite == "theorems":
        report = verify_theorems()
    elif suite == "ext":
        report = verify_ext()
    else:
        report = verify_les(window=window)
    report["suite"] = suite
    report["elapsed_s"] = round(time.monotonic() - t0, 3)
    return report
