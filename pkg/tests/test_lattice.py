import pytest
from hypothesis import given
from hypothesis import strategies as st

from fernsym.lattice import (DOWN, UP, Region, SymCenter, Tri, Vertex, are_adjacent, cartesian,
                             cell_neighbors, down, is_centrally_symmetric, lozenge_center,
                             reflect_cell, reflect_vertex, region_from_cells, shared_edge,
                             sort_key, up, vertices)

from oracles import cell_vertices

coords = st.integers(-20, 20)
cells = st.builds(Tri, coords, coords, st.sampled_from([UP, DOWN]))
centers = st.builds(SymCenter, st.integers(-30, 30), st.integers(-30, 30))


def test_vertices_match_definition():
    assert set(vertices(up(0, 0))) == {(0, 0), (1, 0), (0, 1)}
    assert set(vertices(down(0, 0))) == {(1, 0), (0, 1), (1, 1)}


def test_reflect_about_lattice_point():
    # rotating (0,0),(1,0),(0,1) about (1,1) gives (2,2),(1,2),(2,1)
    assert reflect_cell(up(0, 0), SymCenter(2, 2)) == down(1, 1)


def test_reflect_about_edge_midpoint_gives_lozenge_partner():
    assert reflect_cell(up(0, 0), SymCenter(1, 1)) == down(0, 0)
    assert lozenge_center(up(0, 0), down(0, 0)) == SymCenter(1, 1)


@given(cells, centers)
def test_reflect_involution_and_flip(t, c):
    r = reflect_cell(t, c)
    assert r.orient != t.orient
    assert reflect_cell(r, c) == t


@given(cells, centers)
def test_reflect_cell_agrees_with_vertex_reflection(t, c):
    imgs = {reflect_vertex(v, c) for v in vertices(t)}
    assert imgs == set(vertices(reflect_cell(t, c)))


@given(cells)
def test_neighbors_share_an_edge(t):
    nbs = cell_neighbors(t)
    assert len(nbs) == 3 and len(set(nbs)) == 3
    mine = cell_vertices(t.p, t.q, t.orient is UP)
    for u in nbs:
        theirs = cell_vertices(u.p, u.q, u.orient is UP)
        assert len(mine & theirs) == 2
        assert are_adjacent(t, u) and are_adjacent(u, t)
        assert len(shared_edge(t, u)) == 2


def test_shared_edge_rejects_non_neighbors():
    with pytest.raises(ValueError):
        shared_edge(up(0, 0), up(1, 0))


def test_center_kinds():
    assert SymCenter(2, 4).is_lattice_point
    assert SymCenter(2, 4).edge_direction is None
    assert {SymCenter(1, 0).edge_direction, SymCenter(0, 1).edge_direction,
            SymCenter(1, 1).edge_direction} == {"e1", "e2", "e1-e2"}


def test_region_balance_and_symmetry():
    r = region_from_cells([up(0, 0), down(0, 0)], SymCenter(1, 1))
    assert r.n_up == r.n_down == 1 and r.balanced
    assert is_centrally_symmetric(r)
    assert not is_centrally_symmetric(Region(frozenset({up(0, 0), down(0, 0)}), SymCenter(2, 2)))
    assert not is_centrally_symmetric(Region(frozenset({up(0, 0)}), SymCenter(1, 1)))
    with pytest.raises(ValueError, match="no center declared"):
        is_centrally_symmetric(Region(frozenset({up(0, 0)})))


def test_sort_key_orders_bottom_row_first():
    assert sort_key(up(5, 0)) < sort_key(up(0, 1))


def test_cartesian_of_e2():
    x, y = cartesian(Vertex(0, 1))
    assert x == pytest.approx(0.5) and y == pytest.approx(3 ** 0.5 / 2)
