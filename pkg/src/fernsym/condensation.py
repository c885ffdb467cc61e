"""Checks of the symmetric Kuo identities, the recurrences they give for
fern-cored hexagons, and the structure of the base cases.

Graph vertices are unit triangles, so "deleting vertices of the dual graph"
is just deleting cells from a region.  A small stand-alone matcher on
:class:`DualGraph` is kept as an independent route for the symmetric counts.
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .counting import count_symmetric_tilings, count_tilings
from .formulas import trapezoid_count
from .lattice import (DOWN, UP, Region, SymCenter, Tri, Vertex, cell_neighbors,
                      is_centrally_symmetric, reflect_cell, sort_key, vertices)
from .regions import (FernSpec, RegionError, build_fern_cored,
                      build_fern_cored_prime, reduce_forced, trapezoid_frame)


class SurgeryError(ValueError):
    pass


# ------------------------------------------------------------------ reports

@dataclass
class VerificationReport:
    instance_id: str
    kind: str
    params: dict
    counts: dict = field(default_factory=dict)
    lhs: object = None
    rhs: object = None
    passed: bool = False
    millis: float = 0.0
    note: str = ""
    skipped: bool = False
    family: str = ""
    cells: int = 0
    # False for conjectures and printed readings: a failure is reported,
    # not treated as an error
    asserted: bool = True

    @property
    def residual(self):
        if self.lhs is None or self.rhs is None:
            return None
        return self.lhs - self.rhs

    @property
    def counterexample(self) -> bool:
        return not self.skipped and not self.passed

    def to_dict(self, timings: bool = True) -> dict:
        d = asdict(self)
        d["counts"] = {k: str(v) for k, v in self.counts.items()}
        for key in ("lhs", "rhs"):
            d[key] = None if d[key] is None else str(d[key])
        res = self.residual
        d["residual"] = None if res is None else str(res)
        if timings:
            d["millis"] = round(self.millis, 3)
        else:
            del d["millis"]
        return d


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.millis = (time.perf_counter() - t0) * 1000.0
        return rep
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# ---------------------------------------------------------------- dual graph

@dataclass(frozen=True)
class DualGraph:
    """Bipartite graph with a colour-swapping involution ``sigma``."""

    vertices: frozenset
    edges: frozenset          # frozensets of two vertices
    sigma: dict
    color: dict

    @classmethod
    def from_region(cls, r: Region) -> "DualGraph":
        if r.center is None:
            raise SurgeryError("region has no center")
        edges = set()
        for t in r.cells:
            for u in r.neighbors_in(t):
                edges.add(frozenset((t, u)))
        sigma = {t: reflect_cell(t, r.center) for t in r.cells}
        color = {t: int(t.orient) for t in r.cells}
        return cls(frozenset(r.cells), frozenset(edges), sigma, color)

    def without(self, removed: Iterable) -> "DualGraph":
        rem = set(removed)
        keep = self.vertices - rem
        return DualGraph(keep, frozenset(e for e in self.edges if not (e & rem)),
                         {v: self.sigma[v] for v in keep},
                         {v: self.color[v] for v in keep})

    def check(self) -> None:
        for v in self.vertices:
            w = self.sigma.get(v)
            if w not in self.vertices or self.sigma[w] != v:
                raise SurgeryError("sigma is not an involution on the vertex set")
            if self.color[w] == self.color[v]:
                raise SurgeryError("sigma must swap colours")
        for e in self.edges:
            a, b = tuple(e)
            if self.color[a] == self.color[b]:
                raise SurgeryError("graph is not bipartite")
            if frozenset((self.sigma[a], self.sigma[b])) not in self.edges:
                raise SurgeryError("sigma does not preserve edges")


def count_symmetric_matchings(g: DualGraph) -> int:
    """Perfect matchings fixed by ``sigma``, by orbit backtracking."""
    adj: dict = {v: [] for v in g.vertices}
    for e in g.edges:
        a, b = tuple(e)
        adj[a].append(b)
        adj[b].append(a)
    # sweeping lattice cells row by row keeps the frontier (and memo) small
    key = sort_key if all(isinstance(v, Tri) for v in g.vertices) else repr
    order = {v: i for i, v in enumerate(sorted(g.vertices, key=key))}
    for v in adj:
        adj[v].sort(key=order.get)
    memo: dict = {}

    def rec(free: frozenset) -> int:
        if not free:
            return 1
        hit = memo.get(free)
        if hit is not None:
            return hit
        v = min(free, key=order.get)
        sv = g.sigma[v]
        total = 0
        for u in adj[v]:
            if u not in free:
                continue
            su = g.sigma[u]
            if su == v:          # the edge is its own image
                total += rec(free - {v, u})
            elif sv in free and su in free and sv != u:
                total += rec(free - {v, u, sv, su})
        memo[free] = total
        return total

    return rec(frozenset(g.vertices))


# ---------------------------------------------------------------- faces

def _complement_parts(r: Region) -> tuple[set, set]:
    """(outer, holes): cells outside the region touching it, split by whether
    they connect to infinity."""
    ps = [t.p for t in r.cells]
    qs = [t.q for t in r.cells]
    lo_p, hi_p, lo_q, hi_q = min(ps) - 2, max(ps) + 2, min(qs) - 2, max(qs) + 2

    def inbox(t):
        return lo_p <= t.p <= hi_p and lo_q <= t.q <= hi_q

    start = Tri(lo_p, lo_q, UP)
    outer = {start}
    stack = [start]
    while stack:
        t = stack.pop()
        for u in cell_neighbors(t):
            if inbox(u) and u not in r.cells and u not in outer:
                outer.add(u)
                stack.append(u)
    holes = set()
    for p in range(lo_p, hi_p + 1):
        for q in range(lo_q, hi_q + 1):
            for o in (UP, DOWN):
                t = Tri(p, q, o)
                if t not in r.cells and t not in outer:
                    holes.add(t)
    return outer, holes


def hole_components(r: Region) -> list[frozenset]:
    """Holes grouped by shared vertices, each given as its set of lattice
    vertices.  Lobes of one fern touch at points, so they form one face."""
    _, holes = _complement_parts(r)
    comps = []
    left = set(holes)
    while left:
        seed = left.pop()
        comp = {seed}
        verts = set(vertices(seed))
        changed = True
        while changed:
            changed = False
            for t in list(left):
                if verts & set(vertices(t)):
                    left.discard(t)
                    comp.add(t)
                    verts |= set(vertices(t))
                    changed = True
        comps.append(frozenset(verts))
    return comps


def _face_of_point(r: Region, v: Vertex) -> frozenset:
    for comp in hole_components(r):
        if v in comp:
            return comp
    return frozenset({v})


def outer_cells(r: Region) -> dict[Tri, str]:
    """Cells with an edge on the outer boundary, tagged by the side it faces."""
    outer, _ = _complement_parts(r)
    out = {}
    for t in r.cells:
        p, q = t.p, t.q
        if t.orient is UP:
            sides = (("bottom", Tri(p, q - 1, DOWN)), ("nw", Tri(p - 1, q, DOWN)),
                     ("ne", Tri(p, q, DOWN)))
        else:
            sides = (("top", Tri(p, q + 1, UP)), ("sw", Tri(p, q, UP)),
                     ("se", Tri(p + 1, q, UP)))
        for name, u in sides:
            if u in outer:
                out[t] = name
                break
    return out


def _ccw_sorted(cells: Sequence[Tri], c: SymCenter) -> list[Tri]:
    import functools

    def vec(t):
        o = int(t.orient)
        dp = 2 * (3 * t.p + 1 + o) - 3 * c.cp2
        dq = 2 * (3 * t.q + 1 + o) - 3 * c.cq2
        return 2 * dp + dq, dq

    def half(v):
        x, y = v
        return 0 if (y > 0 or (y == 0 and x > 0)) else 1

    def cmp(a, b):
        va, vb = vec(a), vec(b)
        ha, hb = half(va), half(vb)
        if ha != hb:
            return ha - hb
        cross = va[0] * vb[1] - va[1] * vb[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return sorted(cells, key=functools.cmp_to_key(cmp))


# ---------------------------------------------------------------- surgeries

@dataclass(frozen=True)
class SurgerySpec:
    """Cells a1, b1, c1 on the outer face and d1 on the inner face; the
    partners are their images under the half-turn.  ``mode`` is "central"
    (d pair on one face containing the center) or "adjacent" (d1, d2 on two
    mirror-image faces that share an edge)."""

    a1: Tri
    b1: Tri
    c1: Tri
    d1: Tri
    mode: str = "central"

    def pairs(self, c: SymCenter) -> dict[str, tuple[Tri, Tri]]:
        return {k: (t, reflect_cell(t, c)) for k, t in
                (("a", self.a1), ("b", self.b1), ("c", self.c1), ("d", self.d1))}


def _inner_faces(r: Region, mode: str) -> tuple[frozenset, frozenset]:
    c = r.center
    if mode == "central":
        if not c.is_lattice_point:
            raise SurgeryError("central mode needs the center at a lattice point")
        f = _face_of_point(r, Vertex(c.cp2 // 2, c.cq2 // 2))
        return f, f
    if mode != "adjacent":
        raise SurgeryError(f"unknown mode {mode!r}")
    if c.is_lattice_point:
        raise SurgeryError("adjacent mode needs the center at an edge midpoint")
    # endpoints of the unit segment centred at c
    step = {"e1": (1, 0), "e2": (0, 1), "e1-e2": (1, -1)}[c.edge_direction]
    w1 = Vertex((c.cp2 - step[0]) // 2, (c.cq2 - step[1]) // 2)
    w2 = Vertex(w1.p + step[0], w1.q + step[1])
    f1, f2 = _face_of_point(r, w1), _face_of_point(r, w2)
    if f1 == f2:
        raise SurgeryError("the two faces at the center coincide")
    return f1, f2


def _on_face(t: Tri, face: frozenset) -> bool:
    return bool(set(vertices(t)) & face)


def validate_surgery(r: Region, s: SurgerySpec) -> None:
    if r.center is None or not is_centrally_symmetric(r):
        raise SurgeryError("region must be centrally symmetric about its center")
    c = r.center
    pairs = s.pairs(c)
    eight = [t for pr in pairs.values() for t in pr]
    if len(set(eight)) != 8:
        raise SurgeryError("surgery cells must be eight distinct cells")
    missing = [t for t in eight if t not in r.cells]
    if missing:
        raise SurgeryError(f"cell {missing[0]!r} is not in the region")
    rim = outer_cells(r)
    for name in "abc":
        if pairs[name][0] not in rim:
            raise SurgeryError(f"{name}1 is not on the outer face")
    a1, b1, c1 = s.a1, s.b1, s.c1
    if not (a1.orient != b1.orient and b1.orient != c1.orient):
        raise SurgeryError("a, b, c must alternate in colour")
    ring = [a1, b1, c1, pairs["a"][1], pairs["b"][1], pairs["c"][1]]
    got = _ccw_sorted(ring, c)
    i = got.index(a1)
    rot = got[i:] + got[:i]
    rev = [rot[0]] + rot[1:][::-1]
    if rot != ring and rev != ring:
        raise SurgeryError("a1, b1, c1, a2, b2, c2 are not in cyclic order")
    f1, f2 = _inner_faces(r, s.mode)
    d1, d2 = pairs["d"]
    if not (_on_face(d1, f1) and _on_face(d2, f2)):
        raise SurgeryError("d1 must lie on the inner face" if s.mode == "central"
                           else "d1, d2 must lie on the two faces at the center")


SymCounter = Callable[[Region], int]


def _graph_counter(r: Region) -> int:
    return count_symmetric_matchings(DualGraph.from_region(r))


@_timed
def kuo_identity_check(r: Region, s: SurgerySpec, counter: Optional[SymCounter] = None,
                       instance_id: str = "") -> VerificationReport:
    """Symmetric condensation identity:
    M(G) M(G-abcd) = M(G-ab) M(G-cd) + M(G-ac) M(G-bd) + M(G-ad) M(G-bc),
    all counts of centrally symmetric matchings."""
    validate_surgery(r, s)
    count = counter or count_symmetric_tilings
    pairs = s.pairs(r.center)

    def m(names: str) -> int:
        return count(r.without([t for n in names for t in pairs[n]]))

    counts = {k: m(k) for k in ("", "abcd", "ab", "cd", "ac", "bd", "ad", "bc")}
    lhs = counts[""] * counts["abcd"]
    rhs = (counts["ab"] * counts["cd"] + counts["ac"] * counts["bd"]
           + counts["ad"] * counts["bc"])
    return VerificationReport(
        instance_id or f"kuo:{r.label}:{s.mode}", "kuo",
        {"region": r.label, "mode": s.mode,
         "cells": [repr(t) for t in (s.a1, s.b1, s.c1, s.d1)]},
        {("G" + ("_" + k if k else "")): v for k, v in counts.items()},
        lhs, rhs, lhs == rhs)


def surgery_presets(r: Region, mode: str = "central", limit: int = 10) -> list[SurgerySpec]:
    """Valid surgeries: a1 is the leftmost up cell on the bottom side, b1 runs
    along the south-east side, c1 along the north-east side, d1 next to the
    inner face.  Up to ``limit`` of them, in a fixed order."""
    if r.center is None:
        raise SurgeryError("region has no center")
    rim = outer_cells(r)
    bottom = sorted((t for t, sd in rim.items() if sd == "bottom"), key=sort_key)
    se = sorted((t for t, sd in rim.items() if sd == "se"), key=sort_key)
    ne = sorted((t for t, sd in rim.items() if sd == "ne"), key=sort_key, reverse=True)
    if not bottom or not se or not ne:
        raise SurgeryError("region lacks a bottom, south-east or north-east side")
    f1, _ = _inner_faces(r, mode)
    ds = sorted((t for t in r.cells if _on_face(t, f1)), key=sort_key)
    out = []
    a1 = bottom[0]
    for i in range(max(len(se), len(ne), len(ds))):
        s = SurgerySpec(a1, se[i % len(se)], ne[(2 * i) % len(ne)], ds[(3 * i) % len(ds)], mode)
        try:
            validate_surgery(r, s)
        except SurgeryError:
            continue
        if s not in out:
            out.append(s)
        if len(out) >= limit:
            break
    if not out:
        raise SurgeryError("no valid placement found")
    return out


# ---------------------------------------------------------------- recurrences

def _bump(half: Sequence[int]) -> list[int]:
    half = list(half) or [0]
    half[0] += 1
    return half


def _full(half: Sequence[int]) -> list[int]:
    return list(half) + list(half)[::-1]


def _recurrence(build, x, y, z, half, first_plain: bool, kind: str) -> VerificationReport:
    # an empty half fern is the single zero lobe, so its bump is a unit lobe
    h0, h1 = list(half) or [0], _bump(half)
    regions = {
        "R(x,y,z)": build(x, y, z, h0),
        "R(x-2,y-2,z-2)+": build(x - 2, y - 2, z - 2, h1),
        "R(x,y,z-2)": build(x, y, z - 2, h0),
        "R(x-2,y-2,z)+": build(x - 2, y - 2, z, h1),
        "R(x-2,y,z)": build(x - 2, y, z, h0),
        "R(x,y-2,z-2)+": build(x, y - 2, z - 2, h1),
        "R(x-2,y,z-2)+": build(x - 2, y, z - 2, h1),
        "R(x,y-2,z)": build(x, y - 2, z, h0),
    }
    counts = {}
    for name, reg in regions.items():
        counts["Msym " + name] = count_symmetric_tilings(reg)
    if first_plain:
        for name in ("R(x,y,z-2)", "R(x-2,y-2,z)+"):
            counts["M " + name] = count_tilings(regions[name])
    c = counts
    t1 = ("M " if first_plain else "Msym ")
    lhs = c["Msym R(x,y,z)"] * c["Msym R(x-2,y-2,z-2)+"]
    rhs = (c[t1 + "R(x,y,z-2)"] * c[t1 + "R(x-2,y-2,z)+"]
           + c["Msym R(x-2,y,z)"] * c["Msym R(x,y-2,z-2)+"]
           + c["Msym R(x-2,y,z-2)+"] * c["Msym R(x,y-2,z)"])
    params = {"x": x, "y": y, "z": z, "half": h0, "first_term": "M" if first_plain else "Msym"}
    return VerificationReport(f"{kind}:{x},{y},{z}:{','.join(map(str, h0))}:{params['first_term']}",
                              kind, params, counts, lhs, rhs, lhs == rhs)


@_timed
def recurrence_check_fc(x: int, y: int, z: int, half: Sequence[int],
                        first_plain: bool = False) -> VerificationReport:
    """Eight-region recurrence for FC(a, reversed a); ``+`` marks a_1 + 1.

    By default every term counts symmetric tilings, as the condensation
    identity gives.  ``first_plain=True`` uses plain counts in the first
    right-hand product instead.
    """
    if min(x, y, z) < 2 or x % 2 or y % 2 or z % 2:
        raise SurgeryError("need even x, y, z >= 2")

    def build(a, b, c, h):
        return build_fern_cored(a, b, c, _full(h))

    return _recurrence(build, x, y, z, half, first_plain, "recurrence_fc")


@_timed
def recurrence_check_fc_prime(x: int, y: int, z: int, half: Sequence[int],
                              first_plain: bool = False) -> VerificationReport:
    if x < 1 or min(y, z) < 2 or not (x % 2 == y % 2 == z % 2):
        raise SurgeryError("need x >= 1, y, z >= 2, all of one parity")
    return _recurrence(build_fern_cored_prime, x, y, z, half, first_plain,
                       "recurrence_fcp")


# ---------------------------------------------------------------- base cases

BASE_KINDS = ("FC_x0", "FC_z0", "FCp_xm1", "FCp_x0", "FCp_z0", "FCp_z1")


def base_case_region(kind: str, y_or_x: int, other: int, half: Sequence[int]) -> Region:
    """The base-case region of ``kind``; the two free side parameters are
    given in (x, y, z) order with the fixed one left out."""
    fixed = {"FC_x0": ("x", 0), "FC_z0": ("z", 0), "FCp_xm1": ("x", -1),
             "FCp_x0": ("x", 0), "FCp_z0": ("z", 0), "FCp_z1": ("z", 1)}
    if kind not in fixed:
        raise SurgeryError(f"unknown base case {kind!r}")
    name, val = fixed[kind]
    if name == "x":
        x, y, z = val, y_or_x, other
    else:
        x, y, z = y_or_x, other, val
    if kind.startswith("FC_"):
        if x % 2 or y % 2 or z % 2:
            raise SurgeryError("FC base cases need even x, y, z")
        return build_fern_cored(x, y, z, _full(half))
    return build_fern_cored_prime(x, y, z, list(half))


def _lozenge_used(r: Region, t: Tri, u: Tri) -> bool:
    c = r.center
    orbit = {t, u, reflect_cell(t, c), reflect_cell(u, c)}
    if len(orbit) == 3:
        return False
    return count_symmetric_tilings(r.without(orbit)) > 0


def internally_tiled_parts(r: Region) -> list[frozenset]:
    """Split the region along every edge that no symmetric tiling crosses
    with a lozenge.  Returns the parts, largest first."""
    parent = {t: t for t in r.cells}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    for t in r.cells:
        if t.orient is not UP:
            continue
        for u in r.neighbors_in(t):
            if _lozenge_used(r, t, u):
                parent[find(t)] = find(u)
    groups: dict = {}
    for t in r.cells:
        groups.setdefault(find(t), set()).add(t)
    return sorted((frozenset(g) for g in groups.values()),
                  key=lambda g: (-len(g), [sort_key(t) for t in sorted(g, key=sort_key)]))


# The twelve lattice symmetries, acting on vertices.
def _rot(v: Vertex) -> Vertex:
    return Vertex(-v.q, v.p + v.q)


def _refl(v: Vertex) -> Vertex:
    return Vertex(v.q, v.p)


def _cell_from_vertices(vs) -> Tri:
    vs = set(vs)
    a = min(v.p for v in vs)
    b = min(v.q for v in vs)
    return Tri(a, b, UP if Vertex(a, b) in vs else DOWN)


def lattice_symmetries():
    maps = []
    for flip in (False, True):
        for k in range(6):
            def g(v, k=k, flip=flip):
                if flip:
                    v = _refl(v)
                for _ in range(k):
                    v = _rot(v)
                return v
            maps.append(g)
    return maps


@dataclass(frozen=True)
class TrapezoidMatch:
    m: int
    n: int
    positions: tuple
    symmetry: int
    filler: int          # cells of the trapezoid outside the subregion


def recognize_trapezoid(cells: Iterable[Tri]) -> Optional[TrapezoidMatch]:
    """Find a lattice symmetry and a trapezoid T_{m,n}(positions) containing
    the image of ``cells`` whose extra cells are all forced (they are
    removed by repeatedly matching single-neighbour cells).  The match with
    the fewest extra cells wins."""
    cells = list(cells)
    best = None
    for idx, g in enumerate(lattice_symmetries()):
        img = {_cell_from_vertices(g(v) for v in vertices(t)) for t in cells}
        q0 = min(t.q for t in img)
        n = max(t.q for t in img) + 1 - q0
        top = [t for t in img if t.q == q0 + n - 1 and t.orient is UP]
        if not top:
            continue
        p0 = min(t.p for t in top)
        m = max(t.p for t in top) - p0
        shifted = {Tri(t.p - p0, t.q - q0, t.orient) for t in img}
        fr = trapezoid_frame(m, n)
        if not shifted <= fr:
            continue
        removed = sorted(t.p + 1 for t in fr - shifted if t.q == 0 and t.orient is UP)
        if len(removed) != n:
            continue
        t_cells = fr - {Tri(x - 1, 0, UP) for x in removed}
        extra = t_cells - shifted
        if reduce_forced(t_cells) != reduce_forced(shifted):
            continue
        cand = TrapezoidMatch(m, n, tuple(removed), idx, len(extra))
        if best is None or cand.filler < best.filler:
            best = cand
    return best


@_timed
def base_case_check(kind: str, a: int, b: int, half: Sequence[int]) -> VerificationReport:
    """Symmetric tilings of a base-case region versus tilings of its shaded
    part R.

    R is found as the largest part left after cutting every edge that no
    symmetric tiling crosses.  The check asserts that exactly two large parts
    exist (R and its mirror image, everything else forced), that
    M_sym(region) = M(R), and that R completes to a trapezoid with the same
    count by the trapezoid product formula.  For ``FCp_xm1`` the lozenge
    across the center must also occur in every tiling of the region.
    """
    r = base_case_region(kind, a, b, half)
    params = {"kind": kind, "a": a, "b": b, "half": list(half)}
    rid = f"base:{kind}:{a},{b}:{','.join(map(str, half))}"
    parts = internally_tiled_parts(r)
    large = [p for p in parts if len(p) > 2]
    notes = []
    counts = {"Msym": count_symmetric_tilings(r)}
    if not large:
        # everything forced: R is empty
        counts["M(R)"] = 1
        counts["trapezoid"] = 1
        ok = counts["Msym"] == 1
        return VerificationReport(rid, "base_case", params, counts,
                                  counts["Msym"], 1, ok, note="R empty")
    ok = True
    if len(large) != 2 or {reflect_cell(t, r.center) for t in large[0]} != set(large[1]):
        ok = False
        notes.append(f"expected two mirror-image parts, got sizes {[len(p) for p in large]}")
    R = max(large[:2], key=lambda p: (max(t.q for t in p), -min(t.p for t in p)))
    counts["M(R)"] = count_tilings(Region(R))
    match = recognize_trapezoid(R)
    if match is None:
        ok = False
        notes.append("R is not a trapezoid")
        counts["trapezoid"] = -1
    else:
        counts["trapezoid"] = trapezoid_count(match.m, match.n, list(match.positions))
        params["trapezoid"] = {"m": match.m, "n": match.n, "positions": list(match.positions)}
    ok = ok and counts["Msym"] == counts["M(R)"] == counts["trapezoid"]
    if kind == "FCp_xm1":
        forced = central_lozenge_forced(r)
        counts["central lozenge forced"] = int(forced)
        ok = ok and forced
    return VerificationReport(rid, "base_case", params, counts, counts["Msym"],
                              counts["M(R)"], ok, note="; ".join(notes))


def central_lozenge(r: Region) -> tuple[Tri, Tri]:
    """The two cells sharing the unit segment centred at the region's center."""
    c = r.center
    if c is None or c.is_lattice_point:
        raise SurgeryError("center is not an edge midpoint")
    for t in r.cells:
        u = reflect_cell(t, c)
        if u in r.cells and u in cell_neighbors(t):
            return tuple(sorted((t, u), key=sort_key))
    raise SurgeryError("no lozenge straddles the center")


def central_lozenge_forced(r: Region) -> bool:
    """True iff every tiling (symmetric or not) uses the central lozenge."""
    pair = central_lozenge(r)
    total = count_tilings(r)
    return total > 0 and count_tilings(r.without(pair)) == total


__all__ = [
    "SurgeryError", "VerificationReport", "DualGraph", "count_symmetric_matchings",
    "SurgerySpec", "validate_surgery", "kuo_identity_check", "surgery_presets",
    "recurrence_check_fc", "recurrence_check_fc_prime", "BASE_KINDS",
    "base_case_region", "base_case_check", "internally_tiled_parts",
    "recognize_trapezoid", "TrapezoidMatch", "central_lozenge", "central_lozenge_forced",
    "hole_components", "outer_cells", "FernSpec", "RegionError",
]
