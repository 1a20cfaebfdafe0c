from fractions import Fraction

from hypothesis import strategies as st

from quickcluster.instance import Clustering, Regime, WeightedInstance, n_pairs


def all_partitions(items):
    """Every set partition of ``items``; independent of the library's search."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in all_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


def brute_force_opt(inst):
    best = None
    for part in all_partitions(list(range(inst.n))):
        c = Clustering.from_clusters(inst.n, part)
        cost = sum(
            (q if c.same(i, j) else p)
            for (i, j), p, q in zip(inst.pairs(), inst.w_plus, inst.w_minus)
        )
        best = cost if best is None else min(best, cost)
    return Fraction(best or 0)


unit_fractions = st.integers(0, 20).map(lambda k: Fraction(k, 20))


@st.composite
def probability_instances(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    wm = draw(st.lists(unit_fractions, min_size=n_pairs(n), max_size=n_pairs(n)))
    return WeightedInstance(n, tuple(1 - w for w in wm), tuple(wm), Regime.PROBABILITY)


@st.composite
def general_instances(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    weights = st.lists(
        st.fractions(min_value=0, max_value=5, max_denominator=12), min_size=n_pairs(n), max_size=n_pairs(n)
    )
    return WeightedInstance(n, tuple(draw(weights)), tuple(draw(weights)), Regime.GENERAL)


@st.composite
def clusterings(draw, n):
    return Clustering(tuple(draw(st.lists(st.integers(0, max(n - 1, 0)), min_size=n, max_size=n))))
