from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fernsym import formulas as fm
from fernsym.counting import count_symmetric_tilings, count_tilings
from fernsym.regions import (build_fern_cored, build_fern_cored_prime, build_semihexagon,
                             build_trapezoid)

import oracles

even = st.integers(0, 3).map(lambda v: 2 * v)
lobes = st.lists(st.integers(0, 4), min_size=1, max_size=5)


def test_hyperfactorial():
    assert [fm.h(n) for n in range(6)] == [1, 1, 1, 2, 12, 288]
    with pytest.raises(fm.FormulaError):
        fm.h(-1)


@pytest.mark.parametrize("x,y,z", [(1, 1, 1), (2, 2, 2), (0, 3, 2), (1, 2, 3), (2, 2, 3)])
def test_macmahon_against_plane_partitions(x, y, z):
    assert fm.macmahon(x, y, z) == oracles.plane_partitions(x, y, z)


def test_macmahon_examples():
    assert fm.macmahon(1, 1, 1) == 2 and fm.macmahon(2, 2, 2) == 20
    assert all(fm.macmahon(0, y, z) == 1 for y in range(4) for z in range(4))


def test_s_examples():
    assert fm.s_value([5]) == 1
    assert fm.s_value([1, 1, 1]) == 2
    assert all(fm.s_value([a, a]) == 1 for a in range(6))


@pytest.mark.parametrize("b", [[1, 1, 1], [2, 1, 2], [1, 2, 1, 1], [0, 2, 1], [2, 2, 2]])
def test_s_against_brute_force(b):
    cells = oracles.as_vertex_sets(build_semihexagon(b))
    assert fm.s_value(b) == oracles.count(cells)


def test_trapezoid_examples():
    assert fm.trapezoid_count(1, 2, [1, 3]) == 2
    assert fm.trapezoid_count(5, 1, [3]) == 1
    assert fm.trapezoid_count(2, 2, [1, 4]) == 3
    assert fm.trapezoid_count(2, 2, [1, 4]) == oracles.count(
        oracles.as_vertex_sets(build_trapezoid(2, 2, [1, 4])))


@given(lobes)
def test_s_collapse_and_integrality(b):
    v = fm.s_value(b)
    assert isinstance(v, int) and v >= 1
    if len(b) % 2 == 0:
        assert v == fm.s_value(b[:-1])


# ------------------------------------------------------------------ theorems

def test_theorem1_example_from_counts():
    num = count_symmetric_tilings(build_fern_cored(2, 2, 2, [1, 1, 1, 1]))
    den = count_symmetric_tilings(build_fern_cored(2, 2, 2, [2, 2]))
    assert fm.theorem1_rhs(2, 2, 2, [1, 1]) == Fraction(num, den)


def test_theorem1_sqrt_identity_padded_case():
    # half (1, 0, 1) has odd length: the full fern (1,0,1,1,0,1) pads to itself
    full, norm = [1, 0, 1, 1, 0, 1], [2, 2]
    rs = Fraction(count_symmetric_tilings(build_fern_cored(4, 2, 2, full)),
                  count_symmetric_tilings(build_fern_cored(4, 2, 2, norm)))
    rm = Fraction(count_tilings(build_fern_cored(4, 2, 2, full)),
                  count_tilings(build_fern_cored(4, 2, 2, norm)))
    assert rs * rs == rm
    assert rs == fm.theorem1_rhs(4, 2, 2, [1, 0, 1])


@given(even, even, even, st.integers(0, 6))
def test_theorem1_k1_is_one(x, y, z, a):
    assert fm.theorem1_rhs(x, y, z, [a]) == 1


def test_theorem1_zero_lobes_and_parity():
    assert fm.theorem1_rhs(2, 2, 2, [0, 0]) == 1
    with pytest.raises(fm.FormulaError):
        fm.theorem1_rhs(1, 2, 2, [1])


@given(st.integers(-1, 5), st.integers(0, 5), st.integers(0, 5), st.integers(0, 6))
def test_theorem2_k1_is_one(x, y, z, a):
    if not (x % 2 == y % 2 == z % 2):
        with pytest.raises(fm.FormulaError):
            fm.theorem2_rhs(x, y, z, [a])
        return
    assert fm.theorem2_rhs(x, y, z, [a]) == 1


def test_theorem2_zero_lobes():
    assert fm.theorem2_rhs(1, 1, 3, [0, 0]) == 1
    assert fm.theorem2_rhs(0, 2, 4, [0, 0, 0]) == 1


@pytest.mark.parametrize("x,y,z,half", [(-1, 1, 1, [1, 1]), (0, 2, 0, [1, 1]), (1, 1, 3, [1, 2]),
                                        (-1, 3, 1, [2, 1]), (0, 0, 2, [1, 0, 1])])
def test_theorem2_against_counts(x, y, z, half):
    num = count_symmetric_tilings(build_fern_cored_prime(x, y, z, half))
    den = count_symmetric_tilings(build_fern_cored_prime(x, y, z, [sum(half)]))
    assert fm.theorem2_rhs(x, y, z, half) == Fraction(num, den)


def test_theorem2_unpadded_reading_differs():
    num = count_symmetric_tilings(build_fern_cored_prime(1, 1, 3, [1, 2]))
    den = count_symmetric_tilings(build_fern_cored_prime(1, 1, 3, [3]))
    assert fm.theorem2_rhs(1, 1, 3, [1, 2], printed=True) != Fraction(num, den)


# --------------------------------------------------------------- conjectures

@pytest.mark.parametrize("x,y,z,lob", [(1, 1, 1, [1, 1]), (0, 1, 2, [2, 1]), (2, 1, 0, [1, 0, 1]),
                                       (1, 2, 3, [1, 2]), (2, 2, 1, [1, 1, 1])])
def test_two_lobe_normalized_single_fern(x, y, z, lob):
    num = count_tilings(build_fern_cored(x, y, z, lob))
    two = count_tilings(build_fern_cored(x, y, z, [sum(lob[0::2]), sum(lob[1::2])]))
    assert fm.fv_ratio_rhs(x, y, z, lob) == Fraction(num, two)


def test_single_lobe_normalizer_counterexample():
    # reported discrepancy: the two-lobe to one-lobe ratio is 2 here
    ratio = Fraction(count_tilings(build_fern_cored(1, 1, 1, [1, 1])),
                     count_tilings(build_fern_cored(1, 1, 1, [2])))
    assert ratio == 2
    assert fm.twolobe_rhs(1, 1, 1, [1, 1]) == 1


def test_singlefern_is_conjecture1_with_one_fern():
    for lob in ([1, 2], [1, 2, 6, 3], [2, 0, 1]):
        assert fm.singlefern_rhs(2, 3, 1, lob) == fm.conjecture1_rhs(2, 3, 1, [], [lob])


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 6))
def test_single_lobe_formulas_are_one_when_y_equals_z(x, y, a):
    assert fm.singlefern_rhs(x, y, y, [a]) == 1
    assert fm.twolobe_rhs(x, y, y, [a]) == 1


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), st.integers(0, 6))
def test_single_lobe_quotient_is_one(x, y, z, a):
    assert fm.fv_ratio_rhs(x, y, z, [a]) == 1


def test_single_lobe_formula_not_normalized_when_y_differs_from_z():
    # FC(4) is its own normalizer, yet the product is 240 (reported discrepancy)
    assert fm.singlefern_rhs(2, 3, 1, [4]) == 240


def test_printed_orientation_differs_somewhere():
    diffs = [lob for lob in ([1, 1, 1, 1], [1, 2, 1, 2], [2, 1, 1, 1])
             if fm.conjecture1_rhs(1, 0, 3, [], [lob]) != fm.conjecture1_rhs(1, 0, 3, [], [lob], printed=True)]
    assert diffs


def test_conjecture2_reduces_to_theorem1_when_y_equals_z():
    for x, y in ((0, 0), (2, 2), (2, 4), (4, 0)):
        for half in ([1, 1], [1, 2], [2, 1]):
            assert fm.conjecture2_rhs(x, y, y, [0], [half]) == fm.theorem1_rhs(x, y, y, half)


def test_conjecture2_zero_lobes():
    assert fm.conjecture2_rhs(2, 2, 2, [1], [[0, 0]]) == 1


def test_lobe_geometry():
    assert fm.lobe_geometry([], [[1, 2, 6, 3]]).r == (1, 3, 9, 12)
    assert fm.lobe_geometry([2], [[1], [1]], origin="left").r == (1, 4)
    assert fm.lobe_geometry([], []).r == ()
