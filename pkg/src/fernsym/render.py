"""SVG and JSON views of regions and tilings (decorative only)."""
from __future__ import annotations

from typing import Optional

from .counting import lozenge_cells
from .lattice import UP, Region, cartesian, shared_edge, sort_key, vertices

SCALE = 24.0
# lozenge fill by the direction of the edge its two cells share
_LOZENGE_FILL = {(1, 0): "#e8c170", (0, 1): "#7fa7d6", (1, -1): "#9ccc8f"}


def region_json(r: Region) -> dict:
    cells = [[t.p, t.q, t.orient.letter] for t in r.ordered()]
    center = None if r.center is None else {"cp2": r.center.cp2, "cq2": r.center.cq2}
    return {
        "label": r.label,
        "cells": cells,
        "n_cells": len(cells),
        "center": center,
        "sides": r.meta.get("sides"),
        "balanced": r.balanced,
    }


def _points(vs, ox: float, oy: float) -> str:
    out = []
    for v in vs:
        x, y = cartesian(v)
        out.append(f"{(x - ox) * SCALE:.2f},{(oy - y) * SCALE:.2f}")
    return " ".join(out)


def region_svg(r: Region, tiling: Optional[frozenset] = None) -> str:
    """Cells as outlined triangles; with ``tiling``, lozenges coloured by type."""
    pts = [cartesian(v) for t in r.cells for v in vertices(t)] or [(0.0, 0.0)]
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    ox, oy = min(xs) - 0.5, max(ys) + 0.5
    w, h = (max(xs) - ox + 0.5) * SCALE, (oy - min(ys) + 0.5) * SCALE
    body = []
    for t in r.ordered():
        fill = "#ffffff" if t.orient is UP else "#dddddd"
        body.append(f'<polygon points="{_points(vertices(t), ox, oy)}" '
                    f'fill="{fill}" stroke="#999" stroke-width="0.5"/>')
    if tiling is not None:
        for loz in sorted(tiling, key=lambda lz: sort_key(lozenge_cells(lz)[0])):
            a, b = lozenge_cells(loz)
            v, u = shared_edge(a, b)
            d = (u.p - v.p, u.q - v.q)
            fill = _LOZENGE_FILL.get(d) or _LOZENGE_FILL.get((-d[0], -d[1]), "#ccc")
            outline = [x for x in vertices(a) if x not in (v, u)] + [v] \
                + [x for x in vertices(b) if x not in (v, u)] + [u]
            body.append(f'<polygon points="{_points(outline, ox, oy)}" '
                        f'fill="{fill}" stroke="#333" stroke-width="1"/>')
    if r.center is not None:
        cx, cy = cartesian_half(r.center.cp2, r.center.cq2)
        body.append(f'<circle cx="{(cx - ox) * SCALE:.2f}" cy="{(oy - cy) * SCALE:.2f}" '
                    f'r="2.5" fill="#c00"/>')
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0f}" height="{h:.0f}">\n'
            + "\n".join(body) + "\n</svg>\n")


def cartesian_half(p2: int, q2: int) -> tuple[float, float]:
    """Cartesian position of a point given in doubled lattice coordinates."""
    return ((p2 + q2 / 2.0) / 2.0, q2 * 0.4330127018922193)


__all__ = ["region_json", "region_svg"]
