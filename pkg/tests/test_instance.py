from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quickcluster.instance import (
    Clustering,
    InstanceError,
    Regime,
    RegimeError,
    WeightedInstance,
    clustering_cost,
    labeling_from_clustering,
    lp_objective_integral,
    pair_index,
    parse_clustering,
    parse_instance,
    parse_scalar,
    serialize_clustering,
    serialize_instance,
)

from conftest import clusterings, general_instances, probability_instances

TWO = "wcc v1\nn 2\nregime probability\n0 1 3/10 7/10\n"


def two_vertex():
    return parse_instance(TWO)


def all_similar(n=3):
    return WeightedInstance.from_w_minus(n, lambda i, j: 0)


def test_parse_transcribes_fields():
    inst = two_vertex()
    assert inst.n == 2 and inst.regime is Regime.PROBABILITY
    assert inst.weight(0, 1) == (Fraction(3, 10), Fraction(7, 10))
    assert inst.weight(1, 0) == inst.weight(0, 1)


def test_probability_violation_message():
    with pytest.raises(RegimeError, match=r"probability constraint violated at \(0,1\): sum 9/10"):
        parse_instance(TWO.replace("7/10", "6/10"))


def test_triangle_violation_names_triple():
    text = "wcc v1\nn 3\nregime probability-triangle\n0 1 0.8 0.2\n1 2 0.8 0.2\n0 2 0.1 0.9\n"
    with pytest.raises(RegimeError, match=r"triple \(0,1,2\)"):
        parse_instance(text)


@pytest.mark.parametrize(
    "text, message",
    [
        ("wcc v2\nn 1\nregime general\n", "expected 'wcc v1'"),
        ("wcc v1\nn x\nregime general\n", "nonnegative integer"),
        ("wcc v1\nn 2\nregime weird\n", "unknown regime"),
        ("wcc v1\nn 2\nregime general\n0 1 1\n", "expected '<i> <j>"),
        ("wcc v1\nn 2\nregime general\n1 0 1 1\n", "needs 0 <= i < j"),
        ("wcc v1\nn 2\nregime general\n0 1 1 1\n0 1 1 1\n", "duplicate pair"),
        ("wcc v1\nn 3\nregime general\n0 1 1 1\n0 2 1 1\n", r"missing pair \(1,2\)"),
        ("wcc v1\nn 2\nregime general\n0 1 -1 1\n", "negative weight"),
        ("wcc v1\nn 2\nregime general\n0 1 1/0 1\n", "zero denominator"),
        ("wcc v1\nn 2\nregime general\n0 1 1e3 1\n", "1e3"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(InstanceError, match=message):
        parse_instance(text)


def test_comments_and_blank_lines_are_ignored():
    text = "# leading\nwcc v1\n\nn 2  # two vertices\nregime probability\n0 1 3/10 7/10 # pair\n"
    assert parse_instance(text) == two_vertex()


def test_decimals_parse_exactly():
    assert parse_scalar("0.35") == Fraction(7, 20)
    assert parse_scalar(".5") == Fraction(1, 2)
    assert parse_scalar("3.") == 3
    assert parse_scalar("1/3") == Fraction(1, 3)


def test_serialize_is_canonical():
    shuffled = "wcc v1\nn 3\nregime general\n1 2 1 2\n0 2 3 4\n0 1 5 6\n"
    assert serialize_instance(parse_instance(shuffled)) == (
        b"wcc v1\nn 3\nregime general\n0 1 5 6\n0 2 3 4\n1 2 1 2\n"
    )
    assert serialize_instance(two_vertex()).decode() == TWO


def test_serialize_empty_is_header_only():
    empty = WeightedInstance(0, (), (), Regime.GENERAL)
    assert serialize_instance(empty) == b"wcc v1\nn 0\nregime general\n"


def test_serialize_keeps_thirds_exact():
    inst = WeightedInstance(2, (Fraction(1, 3),), (Fraction(2, 3),), Regime.PROBABILITY)
    assert b"0 1 1/3 2/3" in serialize_instance(inst)


@given(st.one_of(probability_instances(), general_instances()))
def test_round_trip(inst):
    again = parse_instance(serialize_instance(inst))
    assert again == inst
    assert again.w_plus == inst.w_plus and again.w_minus == inst.w_minus


def test_cost_single_pair():
    inst = two_vertex()
    assert clustering_cost(inst, Clustering((0, 0))) == Fraction(7, 10)
    assert clustering_cost(inst, Clustering((0, 1))) == Fraction(3, 10)
    assert clustering_cost(all_similar(), Clustering((0, 0, 0))) == 0


def test_cost_rejects_wrong_length():
    with pytest.raises(ValueError):
        clustering_cost(two_vertex(), Clustering((0, 0, 0)))


def test_lp_objective_examples():
    inst = two_vertex()
    assert lp_objective_integral(inst, labeling_from_clustering(Clustering((0, 0)))) == Fraction(7, 10)
    assert lp_objective_integral(all_similar(), {p: 1 for p in combinations(range(3), 2)}) == 3
    half = WeightedInstance(2, (Fraction(1, 2),), (Fraction(1, 2),), Regime.PROBABILITY)
    assert lp_objective_integral(half, {(0, 1): Fraction(1, 2)}) == Fraction(1, 2)


def test_lp_objective_rejects_bad_labeling():
    with pytest.raises(ValueError):
        lp_objective_integral(two_vertex(), {})
    with pytest.raises(ValueError):
        lp_objective_integral(two_vertex(), {(0, 1): 2})


def test_labeling_examples():
    assert labeling_from_clustering(Clustering.from_clusters(3, [[0, 1], [2]])) == {(0, 1): 0, (0, 2): 1, (1, 2): 1}
    assert set(labeling_from_clustering(Clustering((0,) * 4)).values()) == {0}
    assert set(labeling_from_clustering(Clustering(tuple(range(4)))).values()) == {1}


@settings(max_examples=50)
@given(probability_instances(max_n=6), st.data())
def test_cost_matches_lp_objective(inst, data):
    c = data.draw(clusterings(inst.n))
    assert clustering_cost(inst, c) == lp_objective_integral(inst, labeling_from_clustering(c))


@given(st.integers(0, 8).flatmap(clusterings))
def test_labeling_is_a_pseudometric(c):
    x = labeling_from_clustering(c)

    def get(i, j):
        return x[(min(i, j), max(i, j))]

    for i, j, k in permutations(range(len(c)), 3):
        assert get(i, k) <= get(i, j) + get(j, k)


@given(general_instances(max_n=6), st.data())
def test_cost_ignores_cluster_names(inst, data):
    c = data.draw(clusterings(inst.n))
    perm = data.draw(st.permutations(range(max(inst.n, 1))))
    renamed = Clustering(tuple(perm[lab] for lab in c.labels))
    assert renamed == c
    raw_cost = sum(
        (q if perm[c.labels[i]] == perm[c.labels[j]] else p)
        for (i, j), p, q in zip(inst.pairs(), inst.w_plus, inst.w_minus)
    )
    assert clustering_cost(inst, renamed) == raw_cost == clustering_cost(inst, c)


def test_clustering_canonical_labels():
    assert Clustering((5, 5, 2, 9, 2)).labels == (0, 0, 1, 2, 1)
    assert Clustering.from_clusters(4, [[3], [0, 2], [1]]).clusters() == [[0, 2], [1], [3]]
    with pytest.raises(ValueError):
        Clustering.from_clusters(3, [[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        Clustering.from_clusters(3, [[0, 1]])


def test_clustering_text_round_trip():
    c = Clustering((0, 1, 0, 2))
    assert serialize_clustering(c) == b"0 0\n1 1\n2 0\n3 2\n"
    assert parse_clustering(serialize_clustering(c), 4) == c
    with pytest.raises(ValueError):
        parse_clustering("0 0\n2 1\n")
    with pytest.raises(ValueError):
        parse_clustering("0 0\n", 2)


def test_pair_index_is_lexicographic():
    n = 6
    assert [pair_index(i, j, n) for i, j in combinations(range(n), 2)] == list(range(15))
    assert pair_index(4, 1, n) == pair_index(1, 4, n)
    with pytest.raises(IndexError):
        pair_index(2, 2, n)


def test_general_regime_accepts_any_nonnegative_weights():
    inst = WeightedInstance(2, (Fraction(5),), (Fraction(7, 3),), "general")
    assert inst.regime is Regime.GENERAL
    with pytest.raises(InstanceError):
        WeightedInstance(2, (Fraction(-1),), (0,), "general")
