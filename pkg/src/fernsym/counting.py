"""Exact tiling counts.

Three independent routes:

* :func:`count_tilings` -- memoized recursive elimination in row-major cell
  order.  The lowest uncovered cell is always matched next, so the memo key is
  (index, bitmask of already-covered cells ahead of it).
* :func:`count_matchings_dual` -- forward profile DP over the dual graph,
  sweeping columns instead of rows.
* :func:`count_symmetric_tilings` -- the same elimination run on the quotient
  of the dual graph by the central half-turn (see ``quotient_graph``).

Counts are plain Python ints.
"""
from __future__ import annotations

import sys
from collections import defaultdict
from typing import Iterator, Sequence

from .lattice import (Region, SymCenter, Tri, cell_neighbors, column_key,
                      is_centrally_symmetric, reflect_cell, sort_key)


class CountError(ValueError):
    pass


class EnumerationTooLarge(CountError):
    pass


# ------------------------------------------------------------ graph setup

def _forward_offsets(order: Sequence[Tri]) -> list[tuple[int, ...]]:
    index = {t: i for i, t in enumerate(order)}
    fwd = []
    for i, t in enumerate(order):
        offs = []
        for u in cell_neighbors(t):
            j = index.get(u)
            if j is not None and j > i:
                offs.append(j - i)
        fwd.append(tuple(sorted(offs)))
    return fwd


def quotient_graph(r: Region) -> tuple[list[Tri], list[tuple[int, ...]]]:
    """Half of the region plus the glued edges of the half-turn quotient.

    ``half`` is the set of cells that precede the center in :func:`sort_key`
    order; the half-turn reverses that order, so it swaps ``half`` with the
    rest.  Centrally symmetric tilings correspond one-to-one to perfect
    matchings of the quotient, where a lozenge crossing the cut from ``u`` to
    ``v`` becomes an edge between ``u`` and the mirror of ``v``.  A lozenge
    fixed by the half-turn becomes a loop (offset 0) that covers ``u`` alone.
    Parallel edges are kept: they are distinct lozenge orbits.
    """
    c = r.center
    half = sorted((t for t in r.cells if sort_key(t) < sort_key(reflect_cell(t, c))),
                  key=sort_key)
    index = {t: i for i, t in enumerate(half)}
    fwd: list[list[int]] = [[] for _ in half]
    seen_cross = set()
    for i, t in enumerate(half):
        for u in cell_neighbors(t):
            if u not in r.cells:
                continue
            j = index.get(u)
            if j is not None:
                if j > i:
                    fwd[i].append(j - i)
                continue
            # u lies in the mirrored half: glue to the mirror of u
            w = reflect_cell(u, c)
            k = index[w]
            orbit = frozenset({frozenset({t, u}), frozenset({reflect_cell(t, c), w})})
            if orbit in seen_cross:
                continue
            seen_cross.add(orbit)
            lo, hi = min(i, k), max(i, k)
            fwd[lo].append(hi - lo)
    return half, [tuple(sorted(f)) for f in fwd]


# -------------------------------------------------------- elimination core

def _eliminate(fwd: Sequence[Sequence[int]]) -> int:
    n = len(fwd)
    memo: dict = {}
    limit = sys.getrecursionlimit()
    if limit < 4 * n + 100:
        sys.setrecursionlimit(4 * n + 100)

    def solve(i: int, mask: int) -> int:
        while mask & 1:
            i += 1
            mask >>= 1
        if i >= n:
            return 1 if mask == 0 else 0
        key = (i, mask)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        rest = mask >> 1
        for d in fwd[i]:
            if d == 0:
                total += solve(i + 1, rest)
            elif not (mask >> d) & 1:
                total += solve(i + 1, rest | (1 << (d - 1)))
        memo[key] = total
        return total

    return solve(0, 0)


def _profile_dp(fwd: Sequence[Sequence[int]]) -> int:
    states = {0: 1}
    for i in range(len(fwd)):
        nxt: dict = defaultdict(int)
        offs = fwd[i]
        for mask, c in states.items():
            if mask & 1:
                nxt[mask >> 1] += c
                continue
            for d in offs:
                if d == 0:
                    nxt[mask >> 1] += c
                elif not (mask >> d) & 1:
                    nxt[(mask | (1 << d)) >> 1] += c
        states = nxt
        if not states:
            return 0
    return states.get(0, 0)


# ----------------------------------------------------------- public counts

def count_tilings(r: Region) -> int:
    if not r.cells:
        return 1
    if not r.balanced:
        return 0
    return _eliminate(_forward_offsets(r.ordered(sort_key)))


def count_matchings_dual(r: Region) -> int:
    if not r.cells:
        return 1
    if not r.balanced:
        return 0
    return _profile_dp(_forward_offsets(r.ordered(column_key)))


def _require_symmetric(r: Region) -> SymCenter:
    if r.center is None:
        raise CountError("no center declared")
    if not is_centrally_symmetric(r):
        raise CountError("region is not centrally symmetric about its center")
    return r.center


def count_symmetric_tilings(r: Region) -> int:
    _require_symmetric(r)
    if not r.cells:
        return 1
    if not r.balanced:
        return 0
    _, fwd = quotient_graph(r)
    return _eliminate(fwd)


def count_symmetric_dp(r: Region) -> int:
    """Symmetric count through the forward profile DP (cross-check route)."""
    _require_symmetric(r)
    if not r.cells:
        return 1
    if not r.balanced:
        return 0
    _, fwd = quotient_graph(r)
    return _profile_dp(fwd)


# ------------------------------------------------------------ enumeration

Lozenge = frozenset  # frozenset of two adjacent cells


def iter_tilings(r: Region) -> Iterator[frozenset]:
    cells = r.cells

    def rec(uncovered: frozenset, chosen: list):
        if not uncovered:
            yield frozenset(chosen)
            return
        t = min(uncovered, key=sort_key)
        for u in cell_neighbors(t):
            if u in uncovered:
                chosen.append(frozenset((t, u)))
                yield from rec(uncovered - {t, u}, chosen)
                chosen.pop()

    if not r.balanced:
        return
    yield from rec(frozenset(cells), [])


def enumerate_tilings(r: Region, limit: int = 10000) -> list[frozenset]:
    """All tilings as sets of lozenges, in a deterministic order."""
    n = count_tilings(r)
    if n > limit:
        raise EnumerationTooLarge(f"enumeration too large: {n} tilings > limit {limit}")
    return list(iter_tilings(r))


def reflect_tiling(tiling: frozenset, c: SymCenter) -> frozenset:
    return frozenset(frozenset(reflect_cell(t, c) for t in loz) for loz in tiling)


def lozenge_cells(loz: frozenset) -> tuple[Tri, Tri]:
    a, b = sorted(loz, key=lambda t: t.orient)
    return a, b  # (up, down)
