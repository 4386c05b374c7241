from equisurf.bigraded import Window
from equisurf.render import render_ascii, render_svg
from equisurf.stdmod import ModuleExpr, ShiftedStd, StdKind


def test_ascii_small_grid():
    expr = ModuleExpr.of(ShiftedStd(StdKind.HC3))
    out = render_ascii(expr, Window(-2, 2, -1, 1))
    lines = out.splitlines()
    assert lines[0] == "q=  1 | . . 1 . ."
    assert lines[1] == "q=  0 * . . 1 . ."
    assert lines[2] == "q= -1 | . . 1 . ."
    assert lines[3].startswith("      +")


def test_ascii_marks_ten_plus_with_hash():
    expr = ModuleExpr.of((ShiftedStd(StdKind.HC3), 12))
    out = render_ascii(expr, Window(0, 0, 0, 0))
    assert "#" in out


def test_svg_counts_cells():
    expr = ModuleExpr.of(ShiftedStd(StdKind.HS1FREE))
    svg = render_svg(expr, Window(0, 1, 0, 1))
    assert svg.startswith("<svg")
    assert svg.count("<rect") == 1 + 4  # background plus four unit cells
    assert "</svg>" in svg


def test_svg_writes_multiplicities():
    expr = ModuleExpr.of((ShiftedStd(StdKind.HC3), 3))
    svg = render_svg(expr, Window(0, 0, 0, 0))
    assert ">3</text>" in svg
