"""ASCII and SVG rendering of bigraded dimension tables."""

from __future__ import annotations

from .bigraded import Window
from .stdmod import ModuleExpr


def _as_table(thing, window: Window) -> dict[tuple[int, int], int]:
    if isinstance(thing, ModuleExpr):
        return thing.dims_window(window)
    return thing


def _cell_char(v: int) -> str:
    if v == 0:
        return "."
    if v < 10:
        return str(v)
    return "#"


def render_ascii(thing, window: Window) -> str:
    """Dimension grid, q increasing upward, '.' for zero, digits otherwise.

    The q = 0 row and p = 0 column are marked on the axes.
    """
    table = _as_table(thing, window)
    lines = []
    for q in range(window.q_max, window.q_min - 1, -1):
        cells = "".join(
            _cell_char(table[(p, q)]).rjust(2) for p in window.p_range
        )
        marker = "*" if q == 0 else "|"
        lines.append(f"q={q:>3} {marker}{cells}")
    lines.append("      +" + "-" * (2 * (window.p_max - window.p_min + 1)))
    ruler = [" "] * (2 * (window.p_max - window.p_min + 1))
    for p in window.p_range:
        if p % 4 == 0 or p in (window.p_min, window.p_max):
            s = str(p)
            end = 2 * (p - window.p_min) + 2
            start = max(0, end - len(s))
            for i, ch in enumerate(s[: end - start]):
                ruler[start + i] = ch
    lines.append("   p:  " + "".join(ruler))
    return "\n".join(lines) + "\n"


def render_svg(thing, window: Window, cell: int = 22) -> str:
    """Minimal standalone SVG: one square per nonzero cell plus the axes."""
    table = _as_table(thing, window)
    ncols = window.p_max - window.p_min + 1
    nrows = window.q_max - window.q_min + 1
    pad = 30
    width = ncols * cell + 2 * pad
    height = nrows * cell + 2 * pad

    def x_of(p: int) -> int:
        return pad + (p - window.p_min) * cell

    def y_of(q: int) -> int:
        return pad + (window.q_max - q) * cell

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for (p, q), v in sorted(table.items()):
        if not v:
            continue
        x, y = x_of(p), y_of(q)
        parts.append(
            f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
            f'fill="#9ecae1" stroke="#444"/>'
        )
        if v > 1:
            parts.append(
                f'<text x="{x + cell // 2}" y="{y + cell // 2 + 4}" '
                f'font-size="11" text-anchor="middle">{v}</text>'
            )
    # axes through p = 0 and q = 0 (cell boundaries at the origin corner)
    x0, y0 = x_of(0), y_of(0) + cell
    parts.append(
        f'<line x1="{x0}" y1="{pad}" x2="{x0}" y2="{height - pad}" '
        f'stroke="black" stroke-width="1.5"/>'
    )
    parts.append(
        f'<line x1="{pad}" y1="{y0}" x2="{width - pad}" y2="{y0}" '
        f'stroke="black" stroke-width="1.5"/>'
    )
    for p in window.p_range:
        if p % 4 == 0:
            parts.append(
                f'<text x="{x_of(p) + cell // 2}" y="{height - 8}" '
                f'font-size="10" text-anchor="middle">{p}</text>'
            )
    for q in window.q_range:
        if q % 4 == 0:
            parts.append(
                f'<text x="{pad - 16}" y="{y_of(q) + cell // 2 + 4}" '
                f'font-size="10" text-anchor="middle">{q}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
