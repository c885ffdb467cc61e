"""Constructors for every region family used by the workbench.

All hexagons are anchored with their western corner at the lattice origin.
A hexagon with sides (top, ne, se, bottom, sw, nw), clockwise from the top,
is then the intersection of three strips::

    -sw <= q <= nw,    0 <= p <= sw + bottom,    0 <= p + q <= bottom + se

and a unit triangle belongs to it iff all three of its vertices do.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .lattice import (DOWN, UP, Region, SymCenter, Tri, Vertex,
                      is_centrally_symmetric, reflect_cell)


class RegionError(ValueError):
    pass


def _inside(v: Vertex, qlo, qhi, plo, phi, slo, shi) -> bool:
    p, q = v
    s = p + q
    return ((qlo is None or q >= qlo) and (qhi is None or q <= qhi)
            and (plo is None or p >= plo) and (phi is None or p <= phi)
            and (slo is None or s >= slo) and (shi is None or s <= shi))


def strip_cells(qlo=None, qhi=None, plo=None, phi=None, slo=None, shi=None) -> set[Tri]:
    """Cells whose vertices satisfy the given bounds on q, p and p+q.

    At least one bound per coordinate direction must be finite enough to make
    the result finite; callers always pass a bounded polygon.
    """
    # a bounding box in (p, q) follows from any two of the three strips
    q0 = qlo if qlo is not None else (slo - phi if slo is not None and phi is not None else None)
    q1 = qhi if qhi is not None else (shi - plo if shi is not None and plo is not None else None)
    p0 = plo if plo is not None else (slo - qhi if slo is not None and qhi is not None else None)
    p1 = phi if phi is not None else (shi - qlo if shi is not None and qlo is not None else None)
    if None in (q0, q1, p0, p1):
        raise RegionError("unbounded cell strip")
    out = set()
    for q in range(q0, q1):
        for p in range(p0, p1):
            for o in (UP, DOWN):
                t = Tri(p, q, o)
                if all(_inside(v, qlo, qhi, plo, phi, slo, shi) for v in _verts(t)):
                    out.add(t)
    return out


def _verts(t: Tri):
    p, q = t.p, t.q
    if t.orient is UP:
        return (Vertex(p, q), Vertex(p + 1, q), Vertex(p, q + 1))
    return (Vertex(p + 1, q), Vertex(p, q + 1), Vertex(p + 1, q + 1))


# ---------------------------------------------------------------- hexagons

def hexagon_sides_ok(sides: Sequence[int]) -> bool:
    t, ne, se, b, sw, nw = sides
    return sw + b == ne + t and se + ne == sw + nw


def hexagon_cells(sides: Sequence[int]) -> set[Tri]:
    if any(s < 0 for s in sides):
        raise RegionError(f"negative hexagon side in {tuple(sides)}")
    if not hexagon_sides_ok(sides):
        raise RegionError(f"hexagon sides {tuple(sides)} do not close up")
    t, ne, se, b, sw, nw = sides
    return strip_cells(qlo=-sw, qhi=nw, plo=0, phi=sw + b, slo=0, shi=b + se)


def hexagon_center(sides: Sequence[int]) -> SymCenter:
    t, ne, se, b, sw, nw = sides
    # midpoint of the western corner (0,0) and the eastern corner
    return SymCenter(sw + b, se - sw)


def build_hexagon(x: int, y: int, z: int) -> Region:
    if min(x, y, z) < 0:
        raise RegionError("hexagon sides must be non-negative")
    if x == y == z == 0:
        raise RegionError("hexagon sides must not all be zero")
    sides = (x, y, z, x, y, z)
    return Region(frozenset(hexagon_cells(sides)), hexagon_center(sides),
                  f"hex:x={x},y={y},z={z}", {"sides": list(sides)})


# ------------------------------------------------------------------- ferns

@dataclass(frozen=True)
class FernSpec:
    lobes: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "lobes", tuple(int(a) for a in self.lobes))
        if any(a < 0 for a in self.lobes):
            raise RegionError("lobe sizes must be non-negative")

    @property
    def o(self) -> int:
        return sum(self.lobes[0::2])

    @property
    def e(self) -> int:
        return sum(self.lobes[1::2])

    @property
    def width(self) -> int:
        return sum(self.lobes)

    def mirrored(self) -> "FernSpec":
        """Lobe list of this fern's image under a half-turn."""
        rev = tuple(reversed(self.lobes))
        return FernSpec(rev if len(rev) % 2 == 0 else (0,) + rev)


def up_lobe(base: Vertex, a: int) -> set[Tri]:
    if a == 0:
        return set()
    p0, q0 = base
    return strip_cells(qlo=q0, plo=p0, shi=p0 + q0 + a)


def down_lobe(base: Vertex, a: int) -> set[Tri]:
    if a == 0:
        return set()
    p0, q0 = base
    return strip_cells(qhi=q0, phi=p0 + a, slo=p0 + q0)


def build_fern(f: FernSpec, base: Vertex = Vertex(0, 0), first_up: bool = True) -> set[Tri]:
    """Cells of the fern whose leftmost point is ``base``.

    Zero lobes add no cells but still flip the alternation.
    """
    cells: set[Tri] = set()
    p, q = base
    is_up = first_up
    for a in f.lobes:
        cells |= up_lobe(Vertex(p, q), a) if is_up else down_lobe(Vertex(p, q), a)
        p += a
        is_up = not is_up
    return cells


def fern_system(base: Vertex, ferns: Sequence[FernSpec], gaps: Sequence[int]) -> list[set[Tri]]:
    """Cells of each fern in a left-to-right system; gaps separate ferns."""
    out = []
    p, q = base
    for i, f in enumerate(ferns):
        if i:
            p += gaps[i - 1]
        out.append(build_fern(f, Vertex(p, q)))
        p += f.width
    return out


def _fern_base(x: int, y: int, z: int) -> Vertex:
    """Base point of the first fern: the auxiliary hexagon's center, moved half
    a unit onto the lattice when x, y, z do not share a parity."""
    px, py, pz = x % 2, y % 2, z % 2
    if px == py == pz:
        return Vertex((x + y) // 2, (z - y) // 2)
    if py == pz:  # x is the odd one out: half a unit to the left
        return Vertex((x + y - 1) // 2, (z - y) // 2)
    if px == py:  # z: half a unit in direction -2pi/3
        return Vertex((x + y) // 2, (z - y - 1) // 2)
    # y: half a unit in direction 2pi/3
    return Vertex((x + y - 1) // 2, (z - y + 1) // 2)


def auxiliary_contour(x: int, y: int, z: int) -> list[Vertex]:
    """Corners of the auxiliary contour, walked from the western corner.

    For x >= 0 this is the x,y,z hexagon; for x = -1 it is the self-crossing
    contour (z along e2, one unit back along -e1, y along e1-e2, z along -e2,
    one unit along e1, y along e2-e1).
    """
    steps = [((0, 1), z), ((-1, 0), -x), ((1, -1), y),
             ((0, -1), z), ((1, 0), -x), ((-1, 1), y)]
    pts = [Vertex(0, 0)]
    for (dp, dq), n in steps:
        last = pts[-1]
        pts.append(Vertex(last.p + dp * n, last.q + dq * n))
    if pts[-1] != pts[0]:
        raise RegionError("auxiliary contour does not close")
    return pts[:-1]


def auxiliary_center(x: int, y: int, z: int) -> SymCenter:
    pts = auxiliary_contour(x, y, z)
    sp = sum(v.p for v in pts)
    sq = sum(v.q for v in pts)
    # the contour is centrally symmetric, so the vertex mean is its center
    return SymCenter(sp // 3, sq // 3)


def _finish(h_sides, removed_parts, label, meta) -> Region:
    hex_cells = hexagon_cells(h_sides)
    removed: set[Tri] = set()
    for part in removed_parts:
        if part & removed:
            raise RegionError("ferns overlap")
        removed |= part
    if not removed <= hex_cells:
        raise RegionError("fern exceeds hexagon")
    cells = frozenset(hex_cells - removed)
    center = hexagon_center(h_sides)
    r = Region(cells, center, label, dict(meta, sides=list(h_sides),
                                          removed=len(removed)))
    if not is_centrally_symmetric(r):
        r = r.with_center(None)
    return r


def build_fern_cored(x: int, y: int, z: int, fern: FernSpec | Sequence[int]) -> Region:
    if not isinstance(fern, FernSpec):
        fern = FernSpec(tuple(fern))
    if min(x, y, z) < 0:
        raise RegionError("x, y, z must be non-negative")
    o, e = fern.o, fern.e
    sides = (x + e, y + o, z + e, x + o, y + e, z + o)
    base = _fern_base(x, y, z)
    label = f"fc:x={x},y={y},z={z},a={','.join(map(str, fern.lobes))}"
    return _finish(sides, [build_fern(fern, base)], label,
                   {"family": "fc", "base": list(base)})


def build_multi_fern(x: int, y: int, z: int, gaps: Sequence[int],
                     ferns: Sequence[FernSpec | Sequence[int]]) -> Region:
    ferns = [f if isinstance(f, FernSpec) else FernSpec(tuple(f)) for f in ferns]
    gaps = list(gaps)
    if len(gaps) != max(len(ferns) - 1, 0):
        raise RegionError("need exactly one gap between consecutive ferns")
    if any(g < 0 for g in gaps):
        raise RegionError("gaps must be non-negative")
    if x < -1 or min(y, z) < 0:
        raise RegionError("need x >= -1 and y, z >= 0")
    if x == -1 and (y % 2 == 0 or z % 2 == 0):
        raise RegionError("x = -1 requires odd y and z")
    u = sum(f.o for f in ferns)
    d = sum(f.e for f in ferns)
    g = sum(gaps)
    sides = (x + d + g, y + u, z + d, x + u + g, y + d, z + u)
    if min(sides) < 0:
        raise RegionError("negative hexagon side")
    base = _fern_base(x, y, z)
    parts = fern_system(base, ferns, gaps)
    label = (f"mf:x={x},y={y},z={z},g={','.join(map(str, gaps))},"
             + ",".join("f=" + ",".join(map(str, f.lobes)) for f in ferns))
    return _finish(sides, parts, label, {"family": "mf", "base": list(base)})


def build_fern_cored_prime(x: int, y: int, z: int, half: FernSpec | Sequence[int]) -> Region:
    """Hexagon with sides x+a+1, y+a, z+a (twice) minus the fern at the
    auxiliary center and its image under the half-turn about the hexagon's
    center."""
    if not isinstance(half, FernSpec):
        half = FernSpec(tuple(half))
    if x < -1 or min(y, z) < 0:
        raise RegionError("need x >= -1 and y, z >= 0")
    if not (x % 2 == y % 2 == z % 2):
        raise RegionError("x, y, z must have the same parity")
    a = half.width
    sides = (x + a + 1, y + a, z + a, x + a + 1, y + a, z + a)
    c = auxiliary_center(x, y, z)
    base = Vertex(c.cp2 // 2, c.cq2 // 2)
    first = build_fern(half, base)
    hc = hexagon_center(sides)
    second = {reflect_cell(t, hc) for t in first}
    label = f"fcp:x={x},y={y},z={z},a={','.join(map(str, half.lobes))}"
    return _finish(sides, [first, second], label,
                   {"family": "fcp", "base": list(base)})


# ------------------------------------------------------ trapezoids / S(b)

def trapezoid_frame(m: int, n: int) -> set[Tri]:
    """Trapezoid with top m, sides n, bottom m+n; bottom-left corner at 0."""
    return strip_cells(qlo=0, qhi=n, plo=0, shi=m + n)


def _check_positions(m: int, n: int, positions: Sequence[int]) -> list[int]:
    pos = [int(x) for x in positions]
    if m < 0 or n < 0:
        raise RegionError("trapezoid sides must be non-negative")
    if len(pos) != n:
        raise RegionError(f"need exactly {n} removed positions, got {len(pos)}")
    if len(set(pos)) != len(pos):
        raise RegionError("duplicate removed position")
    if any(x < 1 or x > m + n for x in pos):
        raise RegionError(f"removed position out of range 1..{m + n}")
    if pos != sorted(pos):
        raise RegionError("removed positions must be ascending")
    return pos


def build_trapezoid(m: int, n: int, positions: Sequence[int]) -> Region:
    pos = _check_positions(m, n, positions)
    cells = trapezoid_frame(m, n) - {Tri(x - 1, 0, UP) for x in pos}
    return Region(frozenset(cells), None,
                  f"t:m={m},n={n},pos={','.join(map(str, pos))}",
                  {"family": "t", "m": m, "n": n, "positions": pos})


def semihexagon_params(b: Sequence[int]) -> tuple[int, int, list[int]]:
    """(m, n, removed positions) of the trapezoid equal to S(b)."""
    if any(v < 0 for v in b):
        raise RegionError("b entries must be non-negative")
    pos, at = [], 0
    for i, run in enumerate(b):
        if i % 2 == 0:
            pos.extend(range(at + 1, at + run + 1))
        at += run
    n = len(pos)
    return at - n, n, pos


def build_semihexagon(b: Sequence[int]) -> Region:
    m, n, pos = semihexagon_params(b)
    r = build_trapezoid(m, n, pos)
    return Region(r.cells, None, f"s:b={','.join(map(str, b))}",
                  {"family": "s", "m": m, "n": n, "positions": pos})


def forced_triangles(positions: Sequence[int]) -> set[Tri]:
    """Cells above each maximal run of removed bottom positions.

    Each run of length L leaves a size-L up-triangle with its base removed,
    which has a single tiling and is always tiled internally.
    """
    pos = sorted(positions)
    out: set[Tri] = set()
    i = 0
    while i < len(pos):
        j = i
        while j + 1 < len(pos) and pos[j + 1] == pos[j] + 1:
            j += 1
        start, length = pos[i] - 1, j - i + 1
        tri = up_lobe(Vertex(start, 0), length)
        out |= tri - {Tri(start + k, 0, UP) for k in range(length)}
        i = j + 1
    return out


# ------------------------------------------------------ declarative specs

@dataclass(frozen=True)
class RegionSpec:
    family: str
    params: dict = field(default_factory=dict, hash=False, compare=False)

    def build(self) -> Region:
        p = self.params
        f = self.family
        if f == "hex":
            return build_hexagon(p["x"], p["y"], p["z"])
        if f == "s":
            return build_semihexagon(p.get("b", []))
        if f == "t":
            return build_trapezoid(p["m"], p["n"], p.get("pos", []))
        if f == "fc":
            return build_fern_cored(p["x"], p["y"], p["z"], FernSpec(tuple(p.get("a", ()))))
        if f == "fcp":
            return build_fern_cored_prime(p["x"], p["y"], p["z"], FernSpec(tuple(p.get("a", ()))))
        if f == "mf":
            return build_multi_fern(p["x"], p["y"], p["z"], p.get("g", []),
                                    [FernSpec(tuple(a)) for a in p.get("f", [])])
        raise RegionError(f"unknown region family {f!r}")


def reduce_forced(cells: Iterable[Tri]) -> set[Tri]:
    """Repeatedly delete lozenges forced by a cell with a single neighbour."""
    from .lattice import cell_neighbors

    live = set(cells)
    stack = list(live)
    while stack:
        t = stack.pop()
        if t not in live:
            continue
        nb = [u for u in cell_neighbors(t) if u in live]
        if len(nb) == 1:
            u = nb[0]
            live.discard(t)
            live.discard(u)
            for w in cell_neighbors(u) + cell_neighbors(t):
                if w in live:
                    stack.append(w)
    return live
