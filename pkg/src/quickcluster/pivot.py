"""Randomized pivot clustering, the combinatorial baseline, and the brute-force optimum."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .certificate.functions import Mode, f_plus
from .instance import Clustering, Regime, WeightedInstance, n_pairs, pair_index
from .rng import VariateStream

__all__ = [
    "ModeError",
    "Step",
    "RunTrace",
    "CostDecomposition",
    "DEFAULT_MAX_EXACT_N",
    "check_mode",
    "join_probabilities",
    "quick_cluster",
    "ailon_pivot",
    "exact_optimal",
    "decompose_costs",
]

DEFAULT_MAX_EXACT_N = 13


class ModeError(ValueError):
    """The instance regime does not license the requested mode."""


@dataclass(frozen=True)
class Step:
    pivot: int
    joined: tuple[int, ...]
    remaining_before: tuple[int, ...]

    @property
    def removed(self) -> tuple[int, ...]:
        return tuple(sorted((self.pivot,) + self.joined))


@dataclass(frozen=True)
class RunTrace:
    n: int
    steps: tuple[Step, ...]

    def clustering(self) -> Clustering:
        return Clustering.from_clusters(self.n, (s.removed for s in self.steps))

    @property
    def membership_tests(self) -> int:
        return sum(len(s.remaining_before) - 1 for s in self.steps)

    def validate(self) -> None:
        """Raise ``ValueError`` unless the steps describe one complete run."""
        remaining = tuple(range(self.n))
        for t, step in enumerate(self.steps):
            if step.remaining_before != remaining:
                raise ValueError(f"step {t}: remaining set does not follow from earlier steps")
            removed = set(step.removed)
            if step.pivot not in remaining or not removed <= set(remaining) or len(removed) != len(step.joined) + 1:
                raise ValueError(f"step {t}: pivot and joined vertices must be distinct remaining vertices")
            remaining = tuple(v for v in remaining if v not in removed)
        if remaining:
            raise ValueError(f"incomplete trace: vertices {list(remaining)} never clustered")

    def to_text(self) -> str:
        def ids(vs):
            return ",".join(map(str, vs)) or "-"

        lines = ["trace v1", f"n {self.n}"]
        for t, s in enumerate(self.steps):
            lines.append(f"step {t} pivot {s.pivot} joined {ids(s.joined)} remaining {ids(s.remaining_before)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RunTrace":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0] != "trace v1" or len(lines) < 2 or not lines[1].startswith("n "):
            raise ValueError("not a 'trace v1' document")
        n = int(lines[1].split()[1])

        def ids(field: str):
            return () if field == "-" else tuple(int(v) for v in field.split(","))

        steps = []
        for ln in lines[2:]:
            parts = ln.split()
            if len(parts) != 8 or parts[0] != "step" or parts[2] != "pivot" or parts[4] != "joined" or parts[6] != "remaining":
                raise ValueError(f"malformed trace line {ln!r}")
            steps.append(Step(int(parts[3]), ids(parts[5]), ids(parts[7])))
        return cls(n, tuple(steps))


@dataclass(frozen=True)
class CostDecomposition:
    controlled: Fraction
    uncontrolled: Fraction

    @property
    def total(self) -> Fraction:
        return self.controlled + self.uncontrolled


def check_mode(inst: WeightedInstance, mode: Mode | str) -> Mode:
    mode = Mode(mode)
    if mode is Mode.PROBABILITY and not inst.regime.has_probability:
        raise ModeError("probability mode needs an instance in the probability or probability-triangle regime")
    if mode is Mode.TRIANGLE and inst.regime is not Regime.PROBABILITY_TRIANGLE:
        raise ModeError("triangle mode needs an instance in the probability-triangle regime")
    return mode


def join_probabilities(inst: WeightedInstance, mode: Mode | str) -> tuple[Fraction, ...]:
    """``f+`` for every pair, in lexicographic pair order."""
    return tuple(f_plus(w, mode) for w in inst.w_minus)


def _pivot_run(n: int, joins: Callable[[int, int, VariateStream], bool], stream: VariateStream) -> RunTrace:
    remaining = list(range(n))
    steps = []
    while remaining:
        pivot = remaining[stream.index(len(remaining))]
        joined = tuple(u for u in remaining if u != pivot and joins(pivot, u, stream))
        steps.append(Step(pivot, joined, tuple(remaining)))
        gone = set(joined)
        gone.add(pivot)
        remaining = [u for u in remaining if u not in gone]
    return RunTrace(n, tuple(steps))


def quick_cluster(
    inst: WeightedInstance,
    mode: Mode | str,
    seed: int,
    *,
    fplus: Sequence[Fraction] | None = None,
) -> tuple[Clustering, RunTrace]:
    """One seeded run of the randomized pivot algorithm.

    Each step draws the pivot uniformly from the remaining vertices (ascending
    order), then tests every other remaining vertex in ascending order; vertex
    ``u`` joins when its variate is strictly below ``f+(w-(u, pivot))``.
    ``fplus`` may carry precomputed :func:`join_probabilities`.
    """
    mode = check_mode(inst, mode)
    if fplus is None:
        fplus = join_probabilities(inst, mode)
    n = inst.n

    def joins(p: int, u: int, stream: VariateStream) -> bool:
        return stream.below(stream.raw(), fplus[pair_index(p, u, n)])

    trace = _pivot_run(n, joins, VariateStream(seed))
    return trace.clustering(), trace


def ailon_pivot(inst: WeightedInstance, seed: int, *, return_trace: bool = False):
    """Combinatorial pivot baseline: ``u`` joins the pivot's cluster iff ``w+ >= w-``.

    Only pivot choices consume variates.
    """
    if not inst.regime.has_probability:
        raise ModeError("the baseline pivot rule needs a probability-regime instance")
    n = inst.n

    def joins(p: int, u: int, stream: VariateStream) -> bool:
        k = pair_index(p, u, n)
        return inst.w_plus[k] >= inst.w_minus[k]

    trace = _pivot_run(n, joins, VariateStream(seed))
    return (trace.clustering(), trace) if return_trace else trace.clustering()


def exact_optimal(inst: WeightedInstance, max_n: int = DEFAULT_MAX_EXACT_N) -> tuple[Clustering, Fraction]:
    """Minimum-cost clustering by enumerating restricted-growth strings.

    Branch and bound on exact integer costs (weights scaled by the common
    denominator). Among optimal clusterings the lexicographically smallest
    label sequence is returned.
    """
    n = inst.n
    if n > max_n:
        raise ValueError(f"exact optimum limited to n <= {max_n} (got n = {n})")
    if n_pairs(n) == 0:
        return Clustering((0,) * n), Fraction(0)
    den = 1
    for v in inst.w_plus + inst.w_minus:
        den = math.lcm(den, v.denominator)
    plus = [[0] * n for _ in range(n)]
    minus = [[0] * n for _ in range(n)]
    for (i, j), p, q in zip(inst.pairs(), inst.w_plus, inst.w_minus):
        plus[i][j] = plus[j][i] = int(p * den)
        minus[i][j] = minus[j][i] = int(q * den)
    separate = [sum(plus[u][v] for u in range(v)) for v in range(n)]
    floor_after = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        floor_after[v] = floor_after[v + 1] + sum(min(plus[u][v], minus[u][v]) for u in range(v))

    labels = [0] * n
    best_cost = None
    best_labels: list[int] = []

    def search(v: int, k: int, cost: int) -> None:
        nonlocal best_cost, best_labels
        if best_cost is not None and cost + floor_after[v] >= best_cost:
            return
        if v == n:
            best_cost, best_labels = cost, labels[:]
            return
        shift = [0] * k
        for u in range(v):
            shift[labels[u]] += minus[u][v] - plus[u][v]
        for c in range(k + 1):
            labels[v] = c
            search(v + 1, max(k, c + 1), cost + separate[v] + (shift[c] if c < k else 0))

    search(0, 0, 0)
    return Clustering(tuple(best_labels)), Fraction(best_cost, den)


def decompose_costs(inst: WeightedInstance, trace: RunTrace) -> CostDecomposition:
    """Split a run's cost into controlled and uncontrolled parts.

    A pair is controlled when one of its two vertices is the pivot at the last
    step in which both are still unclustered.
    """
    if trace.n != inst.n:
        raise ValueError("trace and instance disagree on the vertex count")
    trace.validate()
    step_of = [0] * inst.n
    for t, s in enumerate(trace.steps):
        for v in s.removed:
            step_of[v] = t
    controlled = uncontrolled = Fraction(0)
    for (i, j), p, q in zip(inst.pairs(), inst.w_plus, inst.w_minus):
        ti, tj = step_of[i], step_of[j]
        cost = q if ti == tj else p
        if trace.steps[min(ti, tj)].pivot in (i, j):
            controlled += cost
        else:
            uncontrolled += cost
    return CostDecomposition(controlled, uncontrolled)
