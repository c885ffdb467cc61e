"""Verification sweeps: instance generation, budgeted execution and reports.

A sweep is a list of :class:`Task` objects, each independent and picklable,
so they can be farmed out to worker processes.  Every task yields one or more
:class:`VerificationReport` rows; the merged report is sorted by instance id.
Rows with ``asserted=False`` (conjectures and printed readings known to
differ) never make a sweep fail, but their failures are listed as
counterexamples.
"""
from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Optional, Sequence

from . import formulas as fm
from .condensation import (BASE_KINDS, SurgeryError, VerificationReport, base_case_check,
                           base_case_region, kuo_identity_check, recurrence_check_fc,
                           recurrence_check_fc_prime, surgery_presets)
from .counting import count_matchings_dual, count_symmetric_tilings, count_tilings
from .lattice import Region
from .regions import (RegionError, RegionSpec, build_fern_cored, build_fern_cored_prime,
                      build_hexagon, build_multi_fern, build_semihexagon, build_trapezoid)
from .specstr import format_spec

SCHEMA = 1
BUDGET_ENV = "FERNSYM_BUDGET"
DEFAULT_BUDGET = 5000

THEOREM_FAMILIES = ("macmahon", "semihex", "trapezoid", "theorem1", "theorem2",
                    "kuo", "recurrence", "basecase")
CONJECTURE_FAMILIES = ("conjecture1", "conjecture2")
FAMILIES = THEOREM_FAMILIES + CONJECTURE_FAMILIES

# per-family defaults: (x range, y range, z range, lobes_sum_max, gaps_max, max)
_DEFAULTS = {
    "macmahon": (range(0, 5), range(0, 5), range(0, 5), 0, 0, 4),
    "semihex": (None, None, None, 8, 0, 5),
    "trapezoid": (None, None, None, 0, 0, 7),
    "theorem1": (range(0, 5), range(0, 5), range(0, 5), 3, 0, 3),
    "theorem2": (range(-1, 4), range(0, 6), range(0, 6), 3, 0, 3),
    "conjecture1": (range(0, 4), range(0, 4), range(0, 4), 2, 2, 3),
    "conjecture2": (range(0, 3), range(0, 3), range(0, 3), 2, 2, 2),
    "kuo": (range(-1, 3), range(1, 4), range(1, 4), 1, 0, 2),
    "recurrence": (range(1, 5), range(2, 5), range(2, 5), 1, 0, 2),
    "basecase": (range(0, 4), range(0, 4), range(0, 4), 2, 0, 2),
}


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return DEFAULT_BUDGET
    try:
        v = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if v <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return v


@dataclass
class SweepConfig:
    """What to sweep.  ``None`` ranges fall back to the family defaults.

    ``max`` means: the box size for macmahon, the list length for semihex,
    m + n for trapezoid, the list length for lobe lists elsewhere and the
    number of surgeries per region and mode for kuo.
    """
    family: str
    x: Optional[Sequence[int]] = None
    y: Optional[Sequence[int]] = None
    z: Optional[Sequence[int]] = None
    lobes_sum_max: Optional[int] = None
    gaps_max: Optional[int] = None
    max: Optional[int] = None
    budget: int = field(default_factory=default_budget)
    jobs: int = 1
    figures: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        dx, dy, dz, ds, dg, dm = _DEFAULTS[self.family]
        # families without x, y, z ranges keep empty lists
        self.x = list(self.x if self.x is not None else dx or [])
        self.y = list(self.y if self.y is not None else dy or [])
        self.z = list(self.z if self.z is not None else dz or [])
        if dx is not None and not (self.x and self.y and self.z):
            raise ValueError("parameter ranges must be non-empty")
        self.lobes_sum_max = ds if self.lobes_sum_max is None else self.lobes_sum_max
        self.gaps_max = dg if self.gaps_max is None else self.gaps_max
        self.max = dm if self.max is None else self.max
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if min(self.lobes_sum_max, self.gaps_max, self.max) < 0:
            raise ValueError("bounds must be non-negative")


@dataclass(frozen=True)
class Task:
    family: str
    check: str
    params: tuple  # sorted (key, value) pairs, values hashable
    budget: int

    @property
    def kwargs(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.params}

    @property
    def instance_id(self) -> str:
        body = ";".join(f"{k}={_fmt(v)}" for k, v in self.params)
        return f"{self.family}:{self.check}:{body}"


def _fmt(v) -> str:
    if isinstance(v, tuple):
        return "(" + ",".join(_fmt(u) for u in v) + ")"
    return str(v)


def _freeze(v):
    if isinstance(v, (list, tuple)):
        return tuple(_freeze(u) for u in v)
    return v


def _task(family: str, check: str, budget: int, **params) -> Task:
    return Task(family, check, tuple(sorted((k, _freeze(v)) for k, v in params.items())), budget)


# ------------------------------------------------------------ list generators

def lobe_lists(total_max: int, length_max: int, total_min: int = 1) -> list[list[int]]:
    """Non-negative lists with a positive last entry and total in range."""
    out = []
    for k in range(1, length_max + 1):
        for t in product(range(total_max + 1), repeat=k):
            if t[-1] > 0 and total_min <= sum(t) <= total_max:
                out.append(list(t))
    return out


def b_lists(total_max: int, length_max: int) -> list[list[int]]:
    out = []
    for k in range(1, length_max + 1):
        out.extend(list(t) for t in product(range(total_max + 1), repeat=k) if sum(t) <= total_max)
    return out


# ----------------------------------------------------------------- generation

def _same_parity(x, y, z) -> bool:
    return x % 2 == y % 2 == z % 2


def instances(cfg: SweepConfig) -> list[Task]:
    gen = _GENERATORS[cfg.family]
    tasks = gen(cfg)
    seen, out = set(), []
    for t in tasks:
        if t.instance_id not in seen:
            seen.add(t.instance_id)
            out.append(t)
    return sorted(out, key=lambda t: t.instance_id)


def _gen_macmahon(cfg):
    n = cfg.max
    xs = [v for v in cfg.x if 0 <= v <= n]
    ys = [v for v in cfg.y if 0 <= v <= n]
    zs = [v for v in cfg.z if 0 <= v <= n]
    return [_task("macmahon", "count", cfg.budget, x=x, y=y, z=z) for x, y, z in product(xs, ys, zs)]


def _gen_semihex(cfg):
    return [_task("semihex", "count", cfg.budget, b=b) for b in b_lists(cfg.lobes_sum_max, cfg.max)]


def _gen_trapezoid(cfg):
    out = []
    for s in range(0, cfg.max + 1):
        for n in range(0, s + 1):
            m = s - n
            for mask in range(1 << s):
                pos = [i + 1 for i in range(s) if mask >> i & 1]
                if len(pos) == n:
                    out.append(_task("trapezoid", "count", cfg.budget, m=m, n=n, pos=pos))
    return out


def _halves(cfg):
    return lobe_lists(cfg.lobes_sum_max, cfg.max)


def _gen_theorem1(cfg):
    out = []
    for x, y, z in product(cfg.x, cfg.y, cfg.z):
        if min(x, y, z) < 0 or x % 2 or y % 2 or z % 2:
            continue
        for half in _halves(cfg):
            out.append(_task("theorem1", "ratio", cfg.budget, x=x, y=y, z=z, half=half))
    return out


def _gen_theorem2(cfg):
    out = []
    for x, y, z in product(cfg.x, cfg.y, cfg.z):
        if x < -1 or min(y, z) < 0 or not _same_parity(x, y, z):
            continue
        for half in _halves(cfg):
            out.append(_task("theorem2", "ratio", cfg.budget, x=x, y=y, z=z, half=half))
    return out


def _gen_conjecture1(cfg):
    out = []
    singles = lobe_lists(cfg.lobes_sum_max, cfg.max)
    pairs = [(f1, f2) for f1 in lobe_lists(cfg.lobes_sum_max, min(cfg.max, 2))
             for f2 in lobe_lists(cfg.lobes_sum_max, min(cfg.max, 2))
             if sum(f1) + sum(f2) <= cfg.lobes_sum_max]
    for x, y, z in product(cfg.x, cfg.y, cfg.z):
        if min(x, y, z) < 0:
            continue
        for lobes in singles:
            out.append(_task("conjecture1", "n1", cfg.budget, x=x, y=y, z=z, lobes=lobes))
        for (f1, f2), g in product(pairs, range(cfg.gaps_max + 1)):
            out.append(_task("conjecture1", "n2", cfg.budget, x=x, y=y, z=z,
                             ferns=[f1, f2], gaps=[g]))
    return out


def _gen_conjecture2(cfg):
    out = []
    short = lobe_lists(cfg.lobes_sum_max, min(cfg.max, 2))
    systems = [[f] for f in short]
    systems += [[f1, f2] for f1 in short for f2 in short
                if sum(f1) + sum(f2) <= cfg.lobes_sum_max]
    for x, y, z in product(cfg.x, cfg.y, cfg.z):
        if min(x, y, z) < 0 or not _same_parity(x, y, z):
            continue
        for ferns in systems:
            for gaps in product(range(cfg.gaps_max + 1), repeat=len(ferns)):
                out.append(_task("conjecture2", "ratio", cfg.budget, x=x, y=y, z=z,
                                 ferns=ferns, gaps=list(gaps)))
    return out


def _kuo_regions(cfg) -> list[str]:
    specs = []
    halves = [[]] + lobe_lists(cfg.lobes_sum_max, 2)
    for x, y, z in product(cfg.x, cfg.y, cfg.z):
        if min(x, y, z) >= 0 and x % 2 == y % 2 == z % 2 == 0 and max(x, y, z) > 0:
            for h in halves:
                specs.append(format_spec(RegionSpec("fc", {"x": x, "y": y, "z": z, "a": h + h[::-1]})))
        if x >= -1 and min(y, z) >= 0 and _same_parity(x, y, z) and (x >= 0 or min(y, z) >= 1):
            for h in halves[1:]:
                specs.append(format_spec(RegionSpec("fcp", {"x": x, "y": y, "z": z, "a": h})))
    return specs


def _gen_kuo(cfg):
    from .specstr import parse_spec

    out = []
    for spec in _kuo_regions(cfg):
        try:
            r = parse_spec(spec).build()
        except RegionError:
            continue
        if r.center is None or len(r) > cfg.budget:
            continue
        for mode in ("central", "adjacent"):
            try:
                presets = surgery_presets(r, mode, limit=cfg.max)
            except SurgeryError:
                continue
            for i in range(len(presets)):
                out.append(_task("kuo", mode, cfg.budget, region=spec, index=i))
    return out


def _gen_recurrence(cfg):
    out = []
    halves = [[]] + lobe_lists(cfg.lobes_sum_max, cfg.max)
    for x, y, z in product(cfg.x, cfg.y, cfg.z):
        for h in halves:
            if min(x, y, z) >= 2 and x % 2 == y % 2 == z % 2 == 0:
                for reading in ("msym", "printed"):
                    out.append(_task("recurrence", "fc-" + reading, cfg.budget, x=x, y=y, z=z, half=h))
            if x >= 1 and min(y, z) >= 2 and _same_parity(x, y, z):
                for reading in ("msym", "printed"):
                    out.append(_task("recurrence", "fcp-" + reading, cfg.budget, x=x, y=y, z=z, half=h))
    return out


FIGURE_BASE_CASES = (
    ("FC_x0", 2, 4, [4, 1]),
    ("FC_z0", 4, 4, [4, 1]),
    ("FCp_xm1", 3, 3, [4, 1]),
    ("FCp_x0", 4, 2, [4, 1]),
    ("FCp_z0", 4, 6, [3, 1]),
    ("FCp_z1", 3, 3, [4, 1]),
)


def _gen_basecase(cfg):
    out = []
    halves = lobe_lists(cfg.lobes_sum_max, cfg.max)
    for kind in BASE_KINDS:
        for a, b in product(cfg.y, cfg.z):
            for h in halves:
                try:
                    base_case_region(kind, a, b, h)
                except (SurgeryError, RegionError):
                    continue
                out.append(_task("basecase", kind, cfg.budget, a=a, b=b, half=h))
    if cfg.figures:
        for kind, a, b, h in FIGURE_BASE_CASES:
            out.append(_task("basecase", kind, max(cfg.budget, 10000), a=a, b=b, half=h))
    return out


_GENERATORS: dict[str, Callable[[SweepConfig], list]] = {
    "macmahon": _gen_macmahon, "semihex": _gen_semihex, "trapezoid": _gen_trapezoid,
    "theorem1": _gen_theorem1, "theorem2": _gen_theorem2,
    "conjecture1": _gen_conjecture1, "conjecture2": _gen_conjecture2,
    "kuo": _gen_kuo, "recurrence": _gen_recurrence, "basecase": _gen_basecase,
}


# ------------------------------------------------------------------ execution

class Skip(Exception):
    pass


def _within(budget: int, *regions: Region) -> int:
    big = max((len(r) for r in regions), default=0)
    if big > budget:
        raise Skip(f"budget: region of {big} cells exceeds {budget}")
    return big


def _ratio(num: int, den: int, what: str) -> Fraction:
    if den == 0:
        raise Skip(f"normalizer has no {what} (ratio 0/0)" if num == 0 else f"normalizer has no {what}")
    return Fraction(num, den)


def _row(task: Task, kind: str, lhs, rhs, passed: bool, cells: int, counts=None,
         asserted: bool = True, note: str = "", suffix: str = "") -> VerificationReport:
    return VerificationReport(task.instance_id + suffix, kind, task.kwargs, dict(counts or {}),
                              lhs, rhs, passed, note=note, family=task.family, cells=cells,
                              asserted=asserted)


def _run_count(task: Task, region: Region, formula: int) -> list[VerificationReport]:
    cells = _within(task.budget, region)
    m, dual = count_tilings(region), count_matchings_dual(region)
    counts = {"M": m, "M_dual": dual}
    return [_row(task, task.family, m, formula, m == formula == dual, cells, counts)]


def _run_macmahon(task):
    k = task.kwargs
    x, y, z = k["x"], k["y"], k["z"]
    # the empty box: build_hexagon rejects it, but it has one (empty) tiling
    r = build_hexagon(x, y, z) if max(x, y, z) > 0 else Region(frozenset(), label="hex:x=0,y=0,z=0")
    return _run_count(task, r, fm.macmahon(x, y, z))


def _run_semihex(task):
    b = task.kwargs["b"]
    return _run_count(task, build_semihexagon(b), fm.s_value(b))


def _run_trapezoid(task):
    k = task.kwargs
    return _run_count(task, build_trapezoid(k["m"], k["n"], k["pos"]),
                      fm.trapezoid_count(k["m"], k["n"], k["pos"]))


def _symmetric_pair(task, num: Region, den: Region):
    cells = _within(task.budget, num, den)
    c = {"Msym": count_symmetric_tilings(num), "Msym0": count_symmetric_tilings(den),
         "M": count_tilings(num), "M0": count_tilings(den)}
    return cells, c


def _run_theorem1(task):
    k = task.kwargs
    x, y, z, half = k["x"], k["y"], k["z"], k["half"]
    a = sum(half)
    num = build_fern_cored(x, y, z, half + half[::-1])
    den = build_fern_cored(x, y, z, [a, a])
    cells, c = _symmetric_pair(task, num, den)
    lhs = _ratio(c["Msym"], c["Msym0"], "symmetric tiling")
    rhs = fm.theorem1_rhs(x, y, z, half)
    sqrt_ok = lhs * lhs == _ratio(c["M"], c["M0"], "tiling")
    c["sqrt identity"] = int(sqrt_ok)
    note = "" if sqrt_ok else "square-root identity fails"
    return [_row(task, "theorem1", lhs, rhs, lhs == rhs and sqrt_ok, cells, c, note=note)]


def _run_theorem2(task):
    k = task.kwargs
    x, y, z, half = k["x"], k["y"], k["z"], k["half"]
    num = build_fern_cored_prime(x, y, z, half)
    den = build_fern_cored_prime(x, y, z, [sum(half)])
    cells = _within(task.budget, num, den)
    c = {"Msym": count_symmetric_tilings(num), "Msym0": count_symmetric_tilings(den)}
    lhs = _ratio(c["Msym"], c["Msym0"], "symmetric tiling")
    rows = [_row(task, "theorem2", lhs, fm.theorem2_rhs(x, y, z, half),
                 lhs == fm.theorem2_rhs(x, y, z, half), cells, c)]
    if len(half) % 2 == 0:
        printed = fm.theorem2_rhs(x, y, z, half, printed=True)
        rows.append(_row(task, "theorem2:unpadded", lhs, printed, lhs == printed, cells, c,
                         asserted=False, note="even-length half without the zero lobe",
                         suffix=":unpadded"))
    return rows


def _two_lobe(f: Sequence[int]) -> list[int]:
    return [sum(f[0::2]), sum(f[1::2])]


def _run_conjecture1(task):
    k = task.kwargs
    x, y, z = k["x"], k["y"], k["z"]
    rows = []
    if task.check == "n1":
        lobes = k["lobes"]
        num = build_fern_cored(x, y, z, lobes)
        two = build_fern_cored(x, y, z, _two_lobe(lobes))
        one = build_fern_cored(x, y, z, [sum(lobes)])
        cells = _within(task.budget, num, two, one)
        c = {"M": count_tilings(num), "M_two_lobe": count_tilings(two), "M_one_lobe": count_tilings(one)}
        fv = _ratio(c["M"], c["M_two_lobe"], "tiling")
        rows.append(_row(task, "conjecture1:n1-two-lobe", fv, fm.fv_ratio_rhs(x, y, z, lobes),
                         fv == fm.fv_ratio_rhs(x, y, z, lobes), cells, c,
                         note="proved single-fern case", suffix=":two-lobe"))
        lit = _ratio(c["M"], c["M_one_lobe"], "tiling")
        rhs = fm.singlefern_rhs(x, y, z, lobes)
        rows.append(_row(task, "conjecture1:n1-one-lobe", lit, rhs, lit == rhs, cells, c,
                         asserted=False, suffix=":one-lobe"))
        return rows
    ferns, gaps = k["ferns"], k["gaps"]
    num = build_multi_fern(x, y, z, gaps, ferns)
    one = build_multi_fern(x, y, z, gaps, [[sum(f)] for f in ferns])
    two = build_multi_fern(x, y, z, gaps, [_two_lobe(f) for f in ferns])
    cells = _within(task.budget, num, one, two)
    c = {"M": count_tilings(num), "M_one_lobe": count_tilings(one), "M_two_lobe": count_tilings(two)}
    rhs = fm.conjecture1_rhs(x, y, z, gaps, ferns)
    lit = _ratio(c["M"], c["M_one_lobe"], "tiling")
    rows.append(_row(task, "conjecture1:n2-one-lobe", lit, rhs, lit == rhs, cells, c,
                     asserted=False, suffix=":one-lobe"))
    tl = _ratio(c["M"], c["M_two_lobe"], "tiling")
    rhs2 = rhs / fm.conjecture1_rhs(x, y, z, gaps, [_two_lobe(f) for f in ferns])
    rows.append(_row(task, "conjecture1:n2-two-lobe", tl, rhs2, tl == rhs2, cells, c,
                     asserted=False, suffix=":two-lobe"))
    return rows


def _pad(f: Sequence[int]) -> list[int]:
    return list(f) + [0] if len(f) % 2 else list(f)


def symmetric_system(gaps: Sequence[int], ferns: Sequence[Sequence[int]]):
    """(gaps, ferns) of the left-to-right system a1..an, rev an..rev a1."""
    ferns = [_pad(f) for f in ferns]
    fs = ferns + [f[::-1] for f in ferns[::-1]]
    inner = list(gaps[:-1])
    return inner + [gaps[-1]] + inner[::-1], fs


def _run_conjecture2(task):
    k = task.kwargs
    x, y, z, ferns, gaps = k["x"], k["y"], k["z"], [_pad(f) for f in k["ferns"]], k["gaps"]
    gs, fs = symmetric_system(gaps, ferns)
    fs0 = [[sum(f)] for f in ferns] + [[0, sum(f)] for f in ferns[::-1]]
    num = build_multi_fern(x, y, z, gs, fs)
    den = build_multi_fern(x, y, z, gs, fs0)
    if num.center is None or den.center is None:
        raise Skip("system is not centrally symmetric")
    cells, c = _symmetric_pair(task, num, den)
    lhs = _ratio(c["Msym"], c["Msym0"], "symmetric tiling")
    mid = _ratio(c["M"], c["M0"], "tiling")
    rhs = fm.conjecture2_rhs(x, y, z, gaps, ferns)
    rhs0 = fm.conjecture2_rhs(x, y, z, gaps, [[sum(f), 0] for f in ferns])
    return [
        _row(task, "conjecture2:product", lhs, rhs, lhs == rhs, cells, c, asserted=False,
             suffix=":product"),
        _row(task, "conjecture2:square-root", lhs * lhs, mid, lhs * lhs == mid, cells, c,
             asserted=False, suffix=":square-root"),
        _row(task, "conjecture2:normalized", lhs, rhs / rhs0, lhs == rhs / rhs0, cells, c,
             asserted=False, note="product divided by its value at the normalizer",
             suffix=":normalized"),
    ]


def _run_kuo(task):
    from .specstr import parse_spec

    k = task.kwargs
    r = parse_spec(k["region"]).build()
    cells = _within(task.budget, r)
    s = surgery_presets(r, task.check, limit=k["index"] + 1)[k["index"]]
    rep = kuo_identity_check(r, s, instance_id=task.instance_id)
    rep.family, rep.cells, rep.kind = "kuo", cells, "kuo:" + task.check
    rep.params = dict(k, **rep.params)
    return [rep]


def _run_recurrence(task):
    k = task.kwargs
    shape, reading = task.check.split("-")
    fn = recurrence_check_fc if shape == "fc" else recurrence_check_fc_prime
    build = build_fern_cored if shape == "fc" else build_fern_cored_prime
    h = k["half"] or [0]
    probe = build(k["x"], k["y"], k["z"], h + h[::-1] if shape == "fc" else h)
    cells = _within(task.budget, probe)
    rep = fn(k["x"], k["y"], k["z"], k["half"], first_plain=(reading == "printed"))
    rep.instance_id, rep.family, rep.cells = task.instance_id, "recurrence", cells
    rep.kind = "recurrence:" + task.check
    rep.asserted = reading == "msym"
    return [rep]


def _run_basecase(task):
    k = task.kwargs
    r = base_case_region(task.check, k["a"], k["b"], k["half"])
    cells = _within(task.budget, r)
    rep = base_case_check(task.check, k["a"], k["b"], k["half"])
    rep.instance_id, rep.family, rep.cells = task.instance_id, "basecase", cells
    rep.kind = "basecase:" + task.check
    return [rep]


_RUNNERS = {
    "macmahon": _run_macmahon, "semihex": _run_semihex, "trapezoid": _run_trapezoid,
    "theorem1": _run_theorem1, "theorem2": _run_theorem2,
    "conjecture1": _run_conjecture1, "conjecture2": _run_conjecture2,
    "kuo": _run_kuo, "recurrence": _run_recurrence, "basecase": _run_basecase,
}


def run_instance(task: Task) -> list[VerificationReport]:
    """Run one task.  Budget overruns and infeasible specs become skipped rows."""
    t0 = time.perf_counter()
    try:
        rows = _RUNNERS[task.family](task)
    except Skip as e:
        rows = [_skipped(task, str(e))]
    except (RegionError, SurgeryError, fm.FormulaError) as e:
        rows = [_skipped(task, f"infeasible: {e}")]
    ms = (time.perf_counter() - t0) * 1000.0
    for r in rows:
        r.millis = ms / len(rows)
    return rows


def _skipped(task: Task, reason: str) -> VerificationReport:
    return VerificationReport(task.instance_id, task.family, task.kwargs, note=reason,
                              skipped=True, family=task.family,
                              asserted=task.family in THEOREM_FAMILIES)


# -------------------------------------------------------------------- reports

@dataclass
class SweepReport:
    family: str
    config: dict
    rows: list

    @property
    def failures(self) -> list:
        return [r for r in self.rows if r.asserted and r.counterexample]

    @property
    def counterexamples(self) -> list:
        return [r for r in self.rows if not r.asserted and r.counterexample]

    @property
    def skipped(self) -> list:
        return [r for r in self.rows if r.skipped]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def summary(self) -> dict:
        checked = [r for r in self.rows if not r.skipped]
        return {
            "instances": len(self.rows),
            "checked": len(checked),
            "passed": sum(r.passed for r in checked),
            "failed_asserted": len(self.failures),
            "counterexamples": len(self.counterexamples),
            "skipped": len(self.skipped),
        }

    def to_json(self, timings: bool = False) -> str:
        """Deterministic JSON; per-row timings only when asked for."""
        doc = {
            "schema": SCHEMA,
            "family": self.family,
            "config": self.config,
            "summary": self.summary(),
            "ok": self.ok,
            "failures": [r.instance_id for r in self.failures],
            "counterexamples": [r.instance_id for r in self.counterexamples],
            "results": [_json_row(r, timings) for r in self.rows],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["instance_id", "family", "params", "lhs", "rhs", "equal", "cells", "millis"])
        for r in self.rows:
            equal = "skipped" if r.skipped else str(r.passed).lower()
            w.writerow([r.instance_id, r.family, json.dumps(r.params, sort_keys=True),
                        "" if r.lhs is None else str(r.lhs), "" if r.rhs is None else str(r.rhs),
                        equal, r.cells, f"{r.millis:.1f}"])
        return buf.getvalue()


def _json_row(r: VerificationReport, timings: bool) -> dict:
    d = r.to_dict(timings=timings)
    d["counterexample"] = (not r.asserted) and r.counterexample
    return d


def run_sweep(cfg: SweepConfig, progress: Optional[Callable[[int, int], None]] = None) -> SweepReport:
    tasks = instances(cfg)
    rows: list = []
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            for i, out in enumerate(pool.map(run_instance, tasks, chunksize=4)):
                rows.extend(out)
                if progress:
                    progress(i + 1, len(tasks))
    else:
        for i, t in enumerate(tasks):
            rows.extend(run_instance(t))
            if progress:
                progress(i + 1, len(tasks))
    rows.sort(key=lambda r: r.instance_id)
    config = {
        "x": cfg.x, "y": cfg.y, "z": cfg.z, "lobes_sum_max": cfg.lobes_sum_max,
        "gaps_max": cfg.gaps_max, "max": cfg.max, "budget": cfg.budget, "figures": cfg.figures,
    }
    return SweepReport(cfg.family, config, rows)


__all__ = ["SweepConfig", "SweepReport", "Task", "FAMILIES", "THEOREM_FAMILIES",
           "CONJECTURE_FAMILIES", "SCHEMA", "BUDGET_ENV", "instances", "run_instance",
           "run_sweep", "lobe_lists", "b_lists", "symmetric_system", "default_budget"]
