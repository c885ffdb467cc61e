import pytest

from fernsym.condensation import (BASE_KINDS, DualGraph, SurgeryError, SurgerySpec,
                                  base_case_check, base_case_region, central_lozenge,
                                  central_lozenge_forced, count_symmetric_matchings,
                                  internally_tiled_parts, kuo_identity_check, outer_cells,
                                  recognize_trapezoid, recurrence_check_fc,
                                  recurrence_check_fc_prime, surgery_presets, validate_surgery)
from fernsym.counting import count_symmetric_tilings, count_tilings, enumerate_tilings
from fernsym.formulas import trapezoid_count
from fernsym.regions import build_fern_cored, build_fern_cored_prime, build_hexagon, build_trapezoid

import oracles


def _graph_counter(r):
    return count_symmetric_matchings(DualGraph.from_region(r))


# ---------------------------------------------------------------- dual graph

@pytest.mark.parametrize("r", [build_hexagon(2, 2, 2), build_fern_cored(2, 2, 2, [1, 1]),
                               build_fern_cored_prime(1, 1, 1, [1])], ids=lambda r: r.label)
def test_orbit_matcher_matches_oracle(r):
    cells = oracles.as_vertex_sets(r)
    assert count_symmetric_matchings(DualGraph.from_region(r)) == \
        oracles.count_symmetric(cells, r.center.cp2, r.center.cq2)


def test_dual_graph_is_bipartite_and_symmetric():
    g = DualGraph.from_region(build_hexagon(2, 2, 2))
    g.check()
    for a, b in g.edges:
        assert g.color[a] != g.color[b]


def test_outer_cells_sides():
    sides = set(outer_cells(build_hexagon(2, 2, 2)).values())
    assert sides == {"bottom", "top", "nw", "ne", "sw", "se"}


# ---------------------------------------------------------------------- kuo

@pytest.mark.parametrize("r,mode", [
    (build_fern_cored(2, 2, 2, [1, 1]), "central"),
    (build_fern_cored(2, 2, 4, [1, 2, 2, 1]), "central"),
    (build_hexagon(2, 2, 2), "central"),
    (build_fern_cored_prime(1, 3, 3, [1]), "adjacent"),
    (build_fern_cored_prime(-1, 3, 3, [1, 1]), "adjacent"),
    (build_fern_cored_prime(2, 2, 2, [1]), "adjacent"),
], ids=lambda v: getattr(v, "label", v))
def test_kuo_identity_holds(r, mode):
    presets = surgery_presets(r, mode, limit=3)
    assert presets
    for s in presets:
        rep = kuo_identity_check(r, s)
        assert rep.passed and rep.residual == 0
        assert set(rep.counts) == {"G", "G_abcd", "G_ab", "G_cd", "G_ac", "G_bd", "G_ad", "G_bc"}


def test_kuo_graph_counter_agrees():
    r = build_fern_cored(2, 2, 2, [1, 1])
    s = surgery_presets(r, "central", limit=1)[0]
    a = kuo_identity_check(r, s)
    b = kuo_identity_check(r, s, counter=_graph_counter)
    assert a.counts == b.counts and b.passed


def test_surgery_validation_rejects_bad_choices():
    r = build_fern_cored(2, 2, 2, [1, 1])
    s = surgery_presets(r, "central", limit=1)[0]
    # same colour for a and b breaks alternation
    bad = SurgerySpec(s.a1, s.a1, s.c1, s.d1, "central")
    with pytest.raises(SurgeryError):
        validate_surgery(r, bad)
    # d must touch the inner face
    inner_less = SurgerySpec(s.a1, s.b1, s.c1, s.c1, "central")
    with pytest.raises(SurgeryError):
        validate_surgery(r, inner_less)
    with pytest.raises(SurgeryError):
        surgery_presets(build_trapezoid(2, 2, [1, 3]))


# -------------------------------------------------------------- recurrences

@pytest.mark.parametrize("x,y,z,half", [(2, 2, 2, [0, 1]), (4, 2, 2, [1, 1]), (2, 2, 2, []),
                                        (2, 4, 2, [1]), (2, 2, 4, [2])])
def test_recurrence_fc(x, y, z, half):
    rep = recurrence_check_fc(x, y, z, half)
    assert rep.passed, rep.counts


@pytest.mark.parametrize("x,y,z,half", [(1, 3, 3, [1]), (3, 3, 3, [1, 1]), (2, 2, 2, [1]),
                                        (1, 3, 3, [])])
def test_recurrence_fc_prime(x, y, z, half):
    assert recurrence_check_fc_prime(x, y, z, half).passed


def test_recurrence_printed_first_term_fails():
    assert not recurrence_check_fc(2, 2, 2, [1], first_plain=True).passed


def test_recurrence_domain():
    with pytest.raises(SurgeryError):
        recurrence_check_fc(1, 2, 2, [1])
    with pytest.raises(SurgeryError):
        recurrence_check_fc_prime(1, 1, 1, [])


# --------------------------------------------------------------- base cases

SMALL_BASE_CASES = [
    ("FC_x0", 2, 2, [1]), ("FC_x0", 0, 2, [1, 1]), ("FC_x0", 2, 0, [2, 1]),
    ("FC_z0", 2, 2, [1]), ("FC_z0", 0, 2, [1, 1]), ("FC_z0", 2, 0, [2, 1]),
    ("FCp_xm1", 1, 3, [1]), ("FCp_xm1", 3, 1, [1, 1]), ("FCp_xm1", 1, 1, [2, 1]),
    ("FCp_x0", 2, 2, [1]), ("FCp_x0", 0, 2, [1, 1]), ("FCp_x0", 2, 0, [2, 1]),
    ("FCp_z0", 2, 2, [1]), ("FCp_z0", 0, 2, [1, 1]), ("FCp_z0", 2, 0, [2, 1]),
    ("FCp_z1", 1, 3, [1]), ("FCp_z1", 3, 1, [1, 1]), ("FCp_z1", 1, 1, [2, 1]),
]


def test_small_base_cases_cover_all_kinds():
    assert {k for k, *_ in SMALL_BASE_CASES} == set(BASE_KINDS)


@pytest.mark.parametrize("kind,a,b,half", SMALL_BASE_CASES)
def test_base_cases_small(kind, a, b, half):
    rep = base_case_check(kind, a, b, half)
    assert rep.passed, rep.note
    assert rep.counts["Msym"] == rep.counts["M(R)"] == rep.counts["trapezoid"]


def test_base_case_rejects_wrong_parity():
    with pytest.raises(SurgeryError):
        base_case_region("FC_x0", 1, 2, [1])
    with pytest.raises(SurgeryError):
        base_case_region("nope", 1, 2, [1])


def test_internally_tiled_parts_of_fc_x0():
    r = base_case_region("FC_x0", 2, 2, [1])
    parts = internally_tiled_parts(r)
    assert sum(len(p) for p in parts) == len(r)


def test_recognize_trapezoid_round_trip():
    t = build_trapezoid(2, 3, [1, 3, 4])
    m = recognize_trapezoid(t.cells)
    assert m is not None
    assert trapezoid_count(m.m, m.n, list(m.positions)) == count_tilings(t)


def test_central_lozenge_forced_small():
    r = build_fern_cored_prime(-1, 1, 1, [1])
    pair = central_lozenge(r)
    assert central_lozenge_forced(r)
    for t in enumerate_tilings(r):
        assert frozenset(pair) in t
    with pytest.raises(SurgeryError):
        central_lozenge(build_hexagon(2, 2, 2))


def test_symmetric_count_of_base_region_equals_part():
    r = base_case_region("FC_x0", 2, 4, [1])
    rep = base_case_check("FC_x0", 2, 4, [1])
    assert rep.counts["Msym"] == count_symmetric_tilings(r)
