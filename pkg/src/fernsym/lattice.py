"""Triangular lattice geometry.

Points are integer combinations ``p*e1 + q*e2`` of two unit vectors at 60
degrees (``e1`` horizontal).  A unit triangle is addressed by the lattice
point ``(p, q)`` plus an orientation:

    Up(p, q)   has vertices (p, q), (p+1, q), (p, q+1)
    Down(p, q) has vertices (p+1, q), (p, q+1), (p+1, q+1)

so both cells with the same ``(p, q)`` live in the horizontal strip between
the lattice lines ``q`` and ``q + 1``.  Everything here is exact integer
arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, NamedTuple, Optional


class Orient(IntEnum):
    UP = 0
    DOWN = 1

    @property
    def letter(self) -> str:
        return "U" if self is Orient.UP else "D"


UP = Orient.UP
DOWN = Orient.DOWN


class Vertex(NamedTuple):
    p: int
    q: int


class Tri(NamedTuple):
    p: int
    q: int
    orient: Orient

    def __repr__(self) -> str:
        name = "Up" if self.orient is UP else "Down"
        return f"{name}({self.p},{self.q})"


def up(p: int, q: int) -> Tri:
    return Tri(p, q, UP)


def down(p: int, q: int) -> Tri:
    return Tri(p, q, DOWN)


@dataclass(frozen=True)
class SymCenter:
    """A point with doubled coordinates: the real point is (cp2/2, cq2/2)."""

    cp2: int
    cq2: int

    @property
    def is_lattice_point(self) -> bool:
        return self.cp2 % 2 == 0 and self.cq2 % 2 == 0

    @property
    def edge_direction(self) -> Optional[str]:
        """Direction of the lattice edge whose midpoint this is, if any."""
        odd = (self.cp2 % 2, self.cq2 % 2)
        return {(1, 0): "e1", (0, 1): "e2", (1, 1): "e1-e2"}.get(odd)

    def as_tuple(self) -> tuple[int, int]:
        return (self.cp2, self.cq2)


def vertices(t: Tri) -> tuple[Vertex, Vertex, Vertex]:
    p, q = t.p, t.q
    if t.orient is UP:
        return Vertex(p, q), Vertex(p + 1, q), Vertex(p, q + 1)
    return Vertex(p + 1, q), Vertex(p, q + 1), Vertex(p + 1, q + 1)


def sort_key(t: Tri) -> tuple[int, int]:
    """Row-major order on tripled centroids.

    Central reflection negates both centroid coordinates, so it reverses this
    order exactly; the symmetric counter relies on that.
    """
    o = int(t.orient)
    return (3 * t.q + 1 + o, 3 * t.p + 1 + o)


def column_key(t: Tri) -> tuple[int, int]:
    o = int(t.orient)
    return (3 * t.p + 1 + o, 3 * t.q + 1 + o)


def cell_neighbors(t: Tri) -> list[Tri]:
    """The three edge-adjacent cells, ordered by :func:`sort_key`."""
    p, q = t.p, t.q
    if t.orient is UP:
        out = [Tri(p, q - 1, DOWN), Tri(p - 1, q, DOWN), Tri(p, q, DOWN)]
    else:
        out = [Tri(p, q, UP), Tri(p + 1, q, UP), Tri(p, q + 1, UP)]
    return sorted(out, key=sort_key)


def are_adjacent(a: Tri, b: Tri) -> bool:
    if a.orient is b.orient:
        return False
    return len(set(vertices(a)) & set(vertices(b))) == 2


def shared_edge(a: Tri, b: Tri) -> tuple[Vertex, Vertex]:
    common = sorted(set(vertices(a)) & set(vertices(b)))
    if len(common) != 2:
        raise ValueError(f"{a!r} and {b!r} do not share an edge")
    return common[0], common[1]


def reflect_vertex(v: Vertex, c: SymCenter) -> Vertex:
    return Vertex(c.cp2 - v.p, c.cq2 - v.q)


def reflect_cell(t: Tri, c: SymCenter) -> Tri:
    """Rotate ``t`` by 180 degrees about ``c``; orientation always flips."""
    return Tri(c.cp2 - t.p - 1, c.cq2 - t.q - 1, DOWN if t.orient is UP else UP)


def lozenge_center(a: Tri, b: Tri) -> SymCenter:
    """Doubled midpoint of the edge shared by two adjacent cells."""
    v, w = shared_edge(a, b)
    return SymCenter(v.p + w.p, v.q + w.q)


def cartesian(v: Vertex) -> tuple[float, float]:
    """Only for rendering."""
    return (v.p + v.q / 2.0, v.q * 0.8660254037844386)


@dataclass(frozen=True)
class Region:
    """A finite set of unit triangles, optionally with a declared center."""

    cells: frozenset
    center: Optional[SymCenter] = None
    label: str = ""
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, t: object) -> bool:
        return t in self.cells

    @property
    def n_up(self) -> int:
        return sum(1 for t in self.cells if t.orient is UP)

    @property
    def n_down(self) -> int:
        return len(self.cells) - self.n_up

    @property
    def balanced(self) -> bool:
        return self.n_up == self.n_down

    def ordered(self, key=sort_key) -> list[Tri]:
        return sorted(self.cells, key=key)

    def without(self, removed: Iterable[Tri], label: str = "") -> "Region":
        return Region(self.cells - frozenset(removed), self.center,
                      label or self.label, dict(self.meta))

    def with_center(self, center: Optional[SymCenter]) -> "Region":
        return Region(self.cells, center, self.label, dict(self.meta))

    def neighbors_in(self, t: Tri) -> list[Tri]:
        return [u for u in cell_neighbors(t) if u in self.cells]


def is_centrally_symmetric(r: Region) -> bool:
    if r.center is None:
        raise ValueError("no center declared")
    c = r.center
    return all(reflect_cell(t, c) in r.cells for t in r.cells)


def region_from_cells(cells: Iterable[Tri], center: Optional[SymCenter] = None,
                      label: str = "") -> Region:
    return Region(frozenset(cells), center, label)
