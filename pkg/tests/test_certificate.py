from fractions import Fraction as F
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quickcluster.certificate import (
    ALPHA_PROBABILITY,
    ALPHA_TRIANGLE,
    L_VERTICES,
    LT_VERTICES,
    Mode,
    check_omega_symmetries,
    delta,
    f_minus,
    f_plus,
    h,
    omega,
    phi,
    product_sum,
    psi,
    reproduce_table2,
    verify_condition1,
    verify_condition2_probability,
)
from quickcluster.certificate import grid
from quickcluster.certificate.checks import breakpoint_triples
from quickcluster.certificate.reference import BREAKPOINT_TABLE, TIGHT_SLICE_CASES

PROB, TRI = Mode.PROBABILITY, Mode.TRIANGLE
units = st.fractions(min_value=0, max_value=1, max_denominator=1400)
triples = st.tuples(units, units, units)
modes = st.sampled_from(list(Mode))


def test_h_examples():
    assert h(F(7, 20)) == 0
    assert h(F(63, 100)) == 1
    assert h(F(49, 100)) == F(1, 2)
    assert h(0) == 0 and h(1) == 1


def test_h_rejects_out_of_range():
    with pytest.raises(ValueError):
        h(F(11, 10))


def test_f_examples():
    assert f_minus(0.42, PROB) == F(21, 50)
    assert f_minus(0.42, TRI) == F(1, 4)
    assert f_minus(1, PROB) == f_minus(1, TRI) == 1


@given(units, units)
def test_h_nondecreasing(a, b):
    lo, hi = sorted((a, b))
    assert h(lo) <= h(hi)


def test_h_pieces_meet_at_breakpoints():
    for w in (F(7, 20), F(63, 100)):
        assert F(25, 7) * w - F(5, 4) == h(w)


@given(units, modes)
def test_f_sums_to_one(w, mode):
    assert f_plus(w, mode) + f_minus(w, mode) == 1


def test_delta_examples():
    assert delta(0, F(1, 2), mode=PROB, alpha=3) == -1
    assert delta(1, F(7, 20), mode=TRI, alpha=F(8, 5)) == F(-69, 100)
    assert delta(0, F(383, 1000), mode=TRI, alpha=F(8, 5)) == F(-28311, 140000)


@given(units)
def test_delta_probability_closed_forms(w):
    assert delta(0, w, mode=PROB, alpha=3) == 2 * w * (1 - w) - 3 * w
    assert delta(1, w, mode=PROB, alpha=3) == 2 * w * (1 - w) - 3 * (1 - w)


def test_phi_examples():
    assert phi((1, 0, 0), mode=PROB) == 3
    assert phi((0, F(7, 20), F(7, 20)), mode=TRI) == F(7, 10)
    for mode in Mode:
        assert phi((0, 0, 0), mode=mode) == 0


def test_psi_examples():
    assert psi((1, 1, 0), (1, 0, 0), mode=PROB) == 1
    assert psi((0, 0, 0), (0, F(7, 20), F(7, 20)), mode=TRI) == F(7, 10)
    for mode in Mode:
        for x in L_VERTICES:
            assert psi(x, (1, 1, 1), mode=mode) == 0


def test_omega_examples():
    assert omega((0, 0, 0), (0, F(7, 20), F(7, 20)), mode=TRI, alpha=F(8, 5)) == F(-21, 50)
    assert omega((1, 1, 0), (0, 0, 0), mode=TRI, alpha=F(8, 5)) == F(-16, 5)
    assert omega((1, 1, 0), (1, 0, 0), mode=PROB, alpha=3) == 0
    assert omega((1, 1, 0), (1, 0, 0), mode=PROB, alpha=F(29, 10)) == F(1, 10)


def three_products(w):
    a, b, c = w
    return a * (1 - b) * (1 - c) + (1 - a) * b * (1 - c) + (1 - a) * (1 - b) * c


@given(triples)
def test_probability_phi_identity(w):
    assert phi(w, mode=PROB) == 3 * three_products(w)
    assert product_sum(w) == three_products(w)


@given(triples, st.sampled_from(L_VERTICES))
def test_psi_dominates_product_sum(w, x):
    assert psi(x, w, mode=PROB) >= three_products(w)


@given(triples, st.sampled_from(L_VERTICES), modes)
def test_phi_psi_nonnegative(w, x, mode):
    assert phi(w, mode=mode) >= 0
    assert psi(x, w, mode=mode) >= 0


@given(triples, st.sampled_from(L_VERTICES), modes, st.fractions(0, 5), st.fractions(0, 5))
def test_omega_antitone_in_alpha(w, x, mode, a1, a2):
    lo, hi = sorted((a1, a2))
    if psi(x, w, mode=mode) > 0 and lo < hi:
        assert omega(x, w, mode=mode, alpha=hi) < omega(x, w, mode=mode, alpha=lo)


@settings(max_examples=200)
@given(st.sampled_from([20, 100, 140, 1400]), modes, st.sampled_from(L_VERTICES), st.data())
def test_grid_matches_fraction_evaluator(d, mode, x, data):
    ks = [data.draw(st.lists(st.integers(0, d), min_size=5, max_size=5)) for _ in range(3)]
    alpha = data.draw(st.sampled_from([ALPHA_PROBABILITY, ALPHA_TRIANGLE, F(29, 10), F(7, 3)]))
    num, den = grid.omega_numerators(x, [np.array(k) for k in ks], d, mode, alpha)
    for t in range(5):
        w = tuple(F(ks[c][t], d) for c in range(3))
        assert F(int(num[t]), den) == omega(x, w, mode=mode, alpha=alpha)


def test_grid_switches_to_object_arrays_when_needed():
    assert grid._dtype(100, PROB) is np.int64
    assert grid._dtype(10**6, TRI, F(29, 10)) is object
    num, den = grid.omega_numerators((1, 1, 0), [np.array([10**6]), np.array([0]), np.array([0])], 10**6, TRI, F(8, 5))
    assert F(int(num[0]), den) == omega((1, 1, 0), (1, 0, 0), mode=TRI, alpha=F(8, 5))


def test_condition1_probability_passes():
    rep = verify_condition1(PROB, 3, 1000)
    assert rep.passed and rep.worst_value == 0


def test_condition1_triangle_passes_with_interval_bounds():
    rep = verify_condition1(TRI, F(8, 5), 1000)
    assert rep.passed and rep.worst_value == 0
    assert rep.worst_witness.startswith("x=0 w=0 ")
    assert len(rep.rows) == 4 and not rep.mismatches


def test_condition1_alpha_one_fails_at_quarter():
    # delta(0, w) = w - 2 w^2 at alpha = 1, maximized at w = 1/4
    rep = verify_condition1(PROB, 1, 1000)
    assert not rep.passed
    assert rep.worst_witness == "x=0 w=1/4 delta=1/8"
    assert "witness x=0 w=1/4 delta=1/8" in rep.to_text()


def test_condition1_rejects_coarse_grid():
    with pytest.raises(ValueError):
        verify_condition1(PROB, 3, 10)


def test_condition2_examples():
    rep = verify_condition2_probability(3, 50)
    assert rep.passed and rep.checked_points == 5 * 51**3
    assert "phi identity mismatches: 0 of 663255" in rep.notes
    assert verify_condition2_probability(4, 50).passed
    bad = verify_condition2_probability(F(29, 10), 50)
    assert not bad.passed
    assert bad.worst_witness == "w=(1,0,0) x=(1,1,0) omega=1/10"


def test_breakpoint_enumeration_matches_table_rows():
    assert set(breakpoint_triples()) == set(BREAKPOINT_TABLE)
    assert len(BREAKPOINT_TABLE) == 28


def test_breakpoint_table_reproduction():
    rep = reproduce_table2()
    assert rep.passed and rep.summary == "table2: 112/112 match"
    assert rep.checked_points == 112


@pytest.mark.parametrize(
    "w, x, value",
    [
        ((0, F(63, 100), F(63, 100)), (0, 0, 0), F(-319, 250)),
        ((1, 1, F(7, 20)), (1, 1, 0), F(0)),
        ((F(7, 20), F(7, 20), F(63, 100)), (0, 1, 1), F(-131, 500)),
    ],
)
def test_breakpoint_table_rows(w, x, value):
    assert omega(x, w, mode=TRI, alpha=ALPHA_TRIANGLE) == value
    assert BREAKPOINT_TABLE[tuple(F(v) for v in w)][x] == value


@pytest.mark.parametrize(
    "x, w, value",
    [
        ((0, 0, 0), (F(241, 1000), F(7, 20), F(591, 1000)), F(-719, 140000)),
        ((1, 1, 0), (0, F(7, 20), F(7, 20)), F(-5, 2)),
        ((0, 1, 1), (F(37, 100), F(63, 100), 1), F(-1443, 7000)),
    ],
)
def test_tight_slice_examples(x, w, value):
    assert omega(x, w, mode=TRI, alpha=ALPHA_TRIANGLE) == value


def test_tight_slice_table_shape():
    assert len(TIGHT_SLICE_CASES) == 12
    for cases in TIGHT_SLICE_CASES.values():
        assert [c[0] for c in cases] == list(LT_VERTICES)


def mid_cell_polynomial(a, b):
    # omega on cell I2 x I2 x I3, x = (0,1,1), with w = (a, b, a + b)
    return (
        F(125, 7) * a * a * b - F(375, 28) * a * a + F(125, 7) * a * b * b - F(2425, 98) * a * b
        + F(183, 16) * a - F(375, 28) * b * b + F(7237, 560) * b - F(153, 40)
    )


@given(st.fractions(F(7, 20), F(63, 100), max_denominator=1000), st.fractions(F(7, 20), F(63, 100), max_denominator=1000))
def test_mid_cell_matches_closed_polynomial(a, b):
    if a + b >= F(63, 100) and a + b <= 1:
        assert omega((0, 1, 1), (a, b, a + b), mode=TRI, alpha=ALPHA_TRIANGLE) == mid_cell_polynomial(a, b)


def test_mid_cell_interior_exceeds_published_edge_maximum():
    # the published maximum is the largest value along a = 7/20 only
    stated = dict((c[0], c[2]) for c in TIGHT_SLICE_CASES[(2, 2, 3)])[(0, 1, 1)]
    a, b = F(129, 350), F(16, 35)
    inside = omega((0, 1, 1), (a, b, a + b), mode=TRI, alpha=ALPHA_TRIANGLE)
    assert inside == F(-263, 54880) == mid_cell_polynomial(a, b)
    assert stated < inside < 0
    edge = max(mid_cell_polynomial(F(7, 20), F(k, 1400)) for k in range(392, 883))
    assert edge <= stated


def test_symmetries_small_sample():
    rep = check_omega_symmetries(300, seed=5)
    assert rep.passed and rep.worst_value == 0 and rep.checked_points == 600


@given(units, modes, st.sampled_from([(0, 0, 0), (1, 1, 1)]))
def test_constant_triples_are_fixed_points(w, mode, x):
    base = omega(x, (w, w, w), mode=mode, alpha=ALPHA_TRIANGLE)
    assert omega(x, (w, w, w), mode=mode, alpha=ALPHA_TRIANGLE) == base


@given(triples, st.tuples(*[st.sampled_from([0, 1])] * 3), modes)
def test_cyclic_and_swap_invariance(w, x, mode):
    base = omega(x, w, mode=mode, alpha=ALPHA_TRIANGLE)
    for perm in ((2, 0, 1), (1, 2, 0), (1, 0, 2)):
        assert omega(tuple(x[p] for p in perm), tuple(w[p] for p in perm), mode=mode, alpha=ALPHA_TRIANGLE) == base


def test_report_text_and_tsv():
    rep = reproduce_table2()
    text = rep.to_text()
    assert text.splitlines()[0] == "table2: 112/112 match"
    assert "verdict = pass" in text
    tsv = rep.to_tsv().splitlines()
    assert tsv[0].split("\t") == ["w", "x", "published", "computed"]
    assert len(tsv) == 113


def test_every_lt_vertex_is_in_l():
    assert set(LT_VERTICES) <= set(L_VERTICES)
    assert all(sum(x) != 1 for x in L_VERTICES) and len(set(product([0, 1], repeat=3)) - set(L_VERTICES)) == 3
