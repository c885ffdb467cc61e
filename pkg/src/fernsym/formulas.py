"""Closed-form product formulas, evaluated in exact rationals."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .regions import FernSpec, RegionError, _check_positions


class FormulaError(ValueError):
    pass


_H_LOCK = threading.Lock()
_H_TABLE = [1]  # _H_TABLE[n] = h(n) = 0! 1! ... (n-1)!


def hyperfactorial(n: int) -> int:
    """h(n) = 0! * 1! * ... * (n-1)!, with h(0) = 1."""
    if n < 0:
        raise FormulaError(f"hyperfactorial of negative {n}")
    table = _H_TABLE
    if n < len(table):
        return table[n]
    with _H_LOCK:
        while len(_H_TABLE) <= n:
            k = len(_H_TABLE)
            _H_TABLE.append(_H_TABLE[-1] * factorial(k - 1))
        return _H_TABLE[n]


h = hyperfactorial


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise FormulaError(f"{what} is not an integer: {value}")
    return value.numerator


def macmahon(x: int, y: int, z: int) -> int:
    if min(x, y, z) < 0:
        raise FormulaError("box sides must be non-negative")
    num = den = 1
    for i in range(1, x + 1):
        for j in range(1, y + 1):
            for k in range(1, z + 1):
                num *= i + j + k - 1
                den *= i + j + k - 2
    return _as_int(Fraction(num, den), "MacMahon product")


def s_value(b: Sequence[int]) -> int:
    """Tilings of the semihexagon S(b) via the hyperfactorial product.

    An even-length list loses its last entry first (the trailing intact run
    only adds forced lozenges).
    """
    b = [int(v) for v in b]
    if any(v < 0 for v in b):
        raise FormulaError("s() arguments must be non-negative")
    if len(b) % 2 == 0:
        b = b[:-1]
    if not b:
        return 1
    num = den = 1
    n = len(b)
    for i in range(n):
        run = 0
        for j in range(i, n):
            run += b[j]
            if (j - i) % 2 == 0:
                num *= h(run)
            else:
                den *= h(run)
    den *= h(sum(b[0::2]))
    return _as_int(Fraction(num, den), f"s{tuple(b)}")


def trapezoid_count(m: int, n: int, positions: Sequence[int]) -> int:
    pos = _check_positions(m, n, positions)
    num = den = 1
    for j in range(len(pos)):
        for i in range(j):
            num *= pos[j] - pos[i]
            den *= j - i
    return _as_int(Fraction(num, den), "trapezoid product")


# ----------------------------------------------------------- fern formulas

def _prefix(vals: Sequence[int]) -> list[int]:
    out, acc = [], 0
    for v in vals:
        acc += v
        out.append(acc)
    return out


def _alternating_blocks(r: Sequence[int], up_shift: int, down_shift: int) -> Fraction:
    """prod over odd i of h(up+r_i)/h(down+r_i), over even 1<i<k of the inverse."""
    k = len(r)
    val = Fraction(1)
    for i in range(1, k + 1):
        ri = r[i - 1]
        if i % 2 == 1:
            val *= Fraction(h(up_shift + ri), h(down_shift + ri))
        elif i < k:
            val *= Fraction(h(down_shift + ri), h(up_shift + ri))
    return val


def _check_even(x: int, y: int, z: int) -> None:
    if min(x, y, z) < 0 or x % 2 or y % 2 or z % 2:
        raise FormulaError("x, y, z must be even and non-negative")


def _check_lobes(lobes: Sequence[int]) -> list[int]:
    lobes = [int(a) for a in lobes]
    if any(a < 0 for a in lobes):
        raise FormulaError("lobe sizes must be non-negative")
    return lobes


def theorem1_rhs(x: int, y: int, z: int, half: Sequence[int]) -> Fraction:
    """Product side of the centrally symmetric ratio for FC_{x,y,z}(a, rev a)."""
    _check_even(x, y, z)
    half = _check_lobes(half)
    if not half:
        return Fraction(1)
    full = half + half[::-1]
    a = sum(half)
    xy, xz = (x + y) // 2, (x + z) // 2
    val = Fraction(s_value(full)) * Fraction(h(xz + a), h(xy + a))
    return val * _alternating_blocks(_prefix(full), xy, xz)


def theorem2_lists(half: Sequence[int]) -> tuple[list[int], list[int]]:
    """(argument list of s, lobe list of the hyperfactorial blocks).

    The blocks use a_{k+1} = a_k + 1 followed by a_{k-1}, ..., a_1.  The
    s-argument printed as s(a_1..a_{k-1}, a_k+1, a_k, ..., a_1) is evaluated
    on that same list: the printed placement of the +1 disagrees with the
    brute-force counts (see tests).
    """
    k = len(half)
    blocks = half + [half[-1] + 1] + half[:-1][::-1]
    assert len(blocks) == 2 * k
    return blocks, blocks


def theorem2_s_printed(half: Sequence[int]) -> list[int]:
    return half[:-1] + [half[-1] + 1] + half[::-1]


def theorem2_rhs(x: int, y: int, z: int, half: Sequence[int],
                printed: bool = False) -> Fraction:
    """Product side for FC'_{x,y,z}(a, rev a).

    A half fern of even length gets a trailing zero lobe first; without it
    the product misses the counts whenever y != z.  ``printed=True`` skips
    the padding.
    """
    if x < -1 or min(y, z) < 0:
        raise FormulaError("need x >= -1 and y, z >= 0")
    if not (x % 2 == y % 2 == z % 2):
        raise FormulaError("x, y, z must have the same parity")
    half = _check_lobes(half)
    if not half:
        return Fraction(1)
    if len(half) % 2 == 0 and not printed:
        half = half + [0]
    s_args, blocks = theorem2_lists(half)
    a = sum(half)
    xy, xz = (x + y) // 2, (x + z) // 2
    val = Fraction(s_value(s_args)) * Fraction(h(xz + a), h(xy + a))
    return val * _alternating_blocks(_prefix(blocks), xy, xz)


def _pad_even(lobes: Sequence[int]) -> list[int]:
    lobes = _check_lobes(lobes)
    return lobes + [0] if len(lobes) % 2 else lobes


def _floor_ceil(v: int) -> tuple[int, int]:
    return v // 2, -((-v) // 2)


def conjecture1_lists(gaps: Sequence[int], ferns: Sequence[Sequence[int]]) -> list[int]:
    """Lobe sizes of the system left to right, each gap folded into the next lobe."""
    ferns = [_pad_even(f) for f in ferns]
    if len(gaps) != max(len(ferns) - 1, 0):
        raise FormulaError("need one gap between consecutive ferns")
    out = list(ferns[0]) if ferns else []
    for g, f in zip(gaps, ferns[1:]):
        out.append(g + f[0])
        out.extend(f[1:])
    return out


def conjecture1_rhs(x: int, y: int, z: int, gaps: Sequence[int],
                    ferns: Sequence[Sequence[int]], printed: bool = False) -> Fraction:
    """Ratio of M for the multi-fern region to M with each fern collapsed to
    one up-lobe of the same total width.

    In the even-index product the factor with r_k - r_i is taken as
    h(ceil((x+z)/2)+..)/h(ceil((x+y)/2)+..), the orientation under which the
    single-fern case reproduces the known two-lobe-normalized formula.
    ``printed=True`` keeps the published orientation instead.
    """
    if min(x, y, z) < 0 or any(g < 0 for g in gaps):
        raise FormulaError("parameters must be non-negative")
    lobes = conjecture1_lists(gaps, ferns)
    if not lobes:
        return Fraction(1)
    r = _prefix(lobes)
    k = len(r)
    fxy, cxy = _floor_ceil(x + y)
    fxz, cxz = _floor_ceil(x + z)
    val = Fraction(s_value(lobes) * s_value(lobes[1:]))
    rk = r[-1]
    for i in range(1, k + 1):
        ri = r[i - 1]
        if i % 2 == 1:
            val *= Fraction(h(fxy + ri), h(fxz + ri))
            val *= Fraction(h(cxy + rk - ri), h(cxz + rk - ri))
        elif i < k:
            val *= Fraction(h(fxz + ri), h(fxy + ri))
            if printed:
                val *= Fraction(h(cxy + rk - ri), h(cxz + rk - ri))
            else:
                val *= Fraction(h(cxz + rk - ri), h(cxy + rk - ri))
    return val


def singlefern_rhs(x: int, y: int, z: int, lobes: Sequence[int], printed: bool = False) -> Fraction:
    """M(FC(a)) / M(FC(a_1+...+a_k)).

    By default this is the one-fern case of :func:`conjecture1_rhs`.  With
    ``printed=True`` the second product uses a_1+...+a_{2i+1} in its first
    factor and keeps the published orientation of its second factor.
    """
    lobes = _pad_even(lobes)
    if not printed:
        return conjecture1_rhs(x, y, z, [], [lobes])
    k = len(lobes)
    r = _prefix(lobes)
    rk = r[-1] if r else 0
    fxy, cxy = _floor_ceil(x + y)
    fxz, cxz = _floor_ceil(x + z)
    val = Fraction(s_value(lobes[:-1]) * s_value(lobes[1:]))
    for i in range(1, k + 1, 2):
        ri = r[i - 1]
        val *= Fraction(h(fxy + ri), h(fxz + ri)) * Fraction(h(cxy + rk - ri), h(cxz + rk - ri))
    for i in range(2, k, 2):
        nxt, ri = r[i], r[i - 1]
        val *= Fraction(h(fxz + nxt), h(fxy + nxt)) * Fraction(h(cxy + rk - ri), h(cxz + rk - ri))
    return val


def fv_ratio_rhs(x: int, y: int, z: int, lobes: Sequence[int]) -> Fraction:
    """M(FC(a)) / M(FC(o, e)): the single-fern ratio with the two-lobe
    normalizer, i.e. singlefern_rhs / twolobe_rhs."""
    return singlefern_rhs(x, y, z, lobes) / twolobe_rhs(x, y, z, lobes)


def twolobe_rhs(x: int, y: int, z: int, lobes: Sequence[int]) -> Fraction:
    """M(FC(o, e)) / M(FC(o + e)) where o, e are the odd/even lobe sums."""
    lobes = _check_lobes(lobes)
    o, e = sum(lobes[0::2]), sum(lobes[1::2])
    fxy, cxy = _floor_ceil(x + y)
    fxz, cxz = _floor_ceil(x + z)
    return (Fraction(h(fxy + o), h(fxz + o)) * Fraction(h(cxy + e), h(cxz + e)))


def conjecture2_lists(gaps: Sequence[int], ferns: Sequence[Sequence[int]]) -> list[int]:
    """The full left-to-right lobe list of the symmetric system, gaps folded in.

    ``gaps`` is g_1..g_n: g_1..g_{n-1} between the left ferns, g_n in the
    middle, mirrored on the right.
    """
    ferns = [_pad_even(f) for f in ferns]
    n = len(ferns)
    if len(gaps) != n:
        raise FormulaError("need n gaps g_1..g_n for n ferns")
    left = conjecture1_lists(list(gaps[:-1]), ferns) if n else []
    out = list(left)
    for j in range(n - 1, -1, -1):
        rev = ferns[j][::-1]
        out.append(gaps[j] + rev[0])
        out.extend(rev[1:])
    return out


def conjecture2_rhs(x: int, y: int, z: int, gaps: Sequence[int],
                    ferns: Sequence[Sequence[int]]) -> Fraction:
    if min(x, y, z) < 0 or any(g < 0 for g in gaps):
        raise FormulaError("parameters must be non-negative")
    if not (x % 2 == y % 2 == z % 2):
        raise FormulaError("x, y, z must have the same parity")
    lobes = conjecture2_lists(gaps, ferns)
    if not lobes:
        return Fraction(1)
    xy, xz = (x + y) // 2, (x + z) // 2
    return Fraction(s_value(lobes)) * _alternating_blocks(_prefix(lobes), xy, xz)


# ----------------------------------------------------------- lobe geometry

@dataclass(frozen=True)
class LobeGeometry:
    r: tuple
    k: int


def lobe_geometry(gaps: Sequence[int], ferns: Sequence[Sequence[int]],
                  origin: str = "aux") -> LobeGeometry:
    """Distances from the origin to the right end of every lobe.

    ``origin`` is ``"aux"`` (first fern's base, one gap per fern boundary) or
    ``"left"`` (leftmost point of a system given as a plain left-to-right list
    of ferns and gaps).  Both measure along the same line, so they only differ
    in validation.
    """
    if origin not in ("aux", "left"):
        raise FormulaError(f"unknown origin {origin!r}")
    ferns = [list(f) for f in ferns]
    if len(gaps) != max(len(ferns) - 1, 0):
        raise FormulaError("need one gap between consecutive ferns")
    out, acc = [], 0
    for i, f in enumerate(ferns):
        if i:
            acc += gaps[i - 1]
        for a in f:
            acc += a
            out.append(acc)
    return LobeGeometry(tuple(out), len(out))


def fern_of(lobes: Sequence[int]) -> FernSpec:
    return FernSpec(tuple(lobes))


__all__ = [
    "FormulaError", "hyperfactorial", "macmahon", "s_value", "trapezoid_count",
    "theorem1_rhs", "theorem2_rhs", "conjecture1_rhs", "conjecture2_rhs",
    "singlefern_rhs", "twolobe_rhs", "fv_ratio_rhs", "lobe_geometry", "LobeGeometry", "RegionError",
]
