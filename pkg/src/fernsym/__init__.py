"""Exact lozenge tiling counts for fern-cored hexagons.

The package builds regions on the triangular lattice, counts their tilings
(all of them, or only those invariant under a half-turn), evaluates the
closed-form product formulas for these counts and checks the two against
each other.
"""
from .counting import (count_matchings_dual, count_symmetric_tilings, count_tilings,
                       enumerate_tilings)
from .lattice import DOWN, UP, Region, SymCenter, Tri, Vertex, reflect_cell
from .regions import (FernSpec, RegionError, RegionSpec, build_fern_cored,
                      build_fern_cored_prime, build_hexagon, build_multi_fern,
                      build_semihexagon, build_trapezoid)
from .specstr import format_spec, parse_spec

__version__ = "0.1.0"

__all__ = [
    "DOWN", "UP", "Region", "SymCenter", "Tri", "Vertex", "reflect_cell",
    "FernSpec", "RegionError", "RegionSpec", "build_hexagon", "build_fern_cored",
    "build_fern_cored_prime", "build_multi_fern", "build_semihexagon", "build_trapezoid",
    "count_tilings", "count_matchings_dual", "count_symmetric_tilings", "enumerate_tilings",
    "parse_spec", "format_spec",
]
