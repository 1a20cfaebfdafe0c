"""Instance generators, Monte Carlo ratio studies and the membership-test scaling benchmark."""
from __future__ import annotations

import enum
import math
import statistics
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .certificate.functions import ALPHA_PROBABILITY, ALPHA_TRIANGLE, H_HI, H_LO, Mode, f_minus
from .instance import Regime, RegimeError, WeightedInstance, clustering_cost, format_scalar, n_pairs
from .pivot import DEFAULT_MAX_EXACT_N, decompose_costs, exact_optimal, join_probabilities, quick_cluster
from .rng import VariateStream

__all__ = [
    "Family",
    "GeneratorConfig",
    "gen_probability_instance",
    "gen_triangle_instance",
    "generate",
    "InstanceRecord",
    "RatioReport",
    "ratio_experiment",
    "measure_instance",
    "oracle_run",
    "WeightOracle",
    "ScalingReport",
    "scaling_benchmark",
]

WEIGHT_DENOMINATOR = 1000
_U64 = 2**64


class Family(str, enum.Enum):
    UNIFORM_PROBABILITY = "uniform-probability"
    METRIC_TRIANGLE = "metric-triangle"


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    seed: int
    family: Family = Family.UNIFORM_PROBABILITY


def _generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed) % _U64))


def gen_probability_instance(cfg: GeneratorConfig) -> WeightedInstance:
    """``w-`` uniform on ``{0, 1/1000, ..., 1}`` per pair, ``w+ = 1 - w-``."""
    if Family(cfg.family) is not Family.UNIFORM_PROBABILITY:
        raise ValueError("gen_probability_instance needs the uniform-probability family")
    ks = _generator(cfg.seed).integers(0, WEIGHT_DENOMINATOR + 1, size=n_pairs(cfg.n))
    wm = tuple(Fraction(int(k), WEIGHT_DENOMINATOR) for k in ks)
    return WeightedInstance(cfg.n, tuple(1 - w for w in wm), wm, Regime.PROBABILITY)


def gen_triangle_instance(cfg: GeneratorConfig) -> WeightedInstance:
    """Points on the 1000 x 1000 unit-square grid; ``w-`` is Manhattan distance capped at 1."""
    if Family(cfg.family) is not Family.METRIC_TRIANGLE:
        raise ValueError("gen_triangle_instance needs the metric-triangle family")
    pts = _generator(cfg.seed).integers(0, WEIGHT_DENOMINATOR + 1, size=(cfg.n, 2))
    wm = []
    for i in range(cfg.n):
        for j in range(i + 1, cfg.n):
            dist = int(abs(pts[i, 0] - pts[j, 0]) + abs(pts[i, 1] - pts[j, 1]))
            wm.append(Fraction(min(dist, WEIGHT_DENOMINATOR), WEIGHT_DENOMINATOR))
    try:
        return WeightedInstance(cfg.n, tuple(1 - w for w in wm), tuple(wm), Regime.PROBABILITY_TRIANGLE)
    except RegimeError as exc:
        raise RuntimeError(f"metric generator produced an invalid instance: {exc}") from exc


def generate(cfg: GeneratorConfig) -> WeightedInstance:
    if Family(cfg.family) is Family.METRIC_TRIANGLE:
        return gen_triangle_instance(cfg)
    return gen_probability_instance(cfg)


FAMILY_FOR_MODE = {Mode.PROBABILITY: Family.UNIFORM_PROBABILITY, Mode.TRIANGLE: Family.METRIC_TRIANGLE}
ALPHA_FOR_MODE = {Mode.PROBABILITY: ALPHA_PROBABILITY, Mode.TRIANGLE: ALPHA_TRIANGLE}


@dataclass
class InstanceRecord:
    seed: int
    opt_cost: Fraction
    mean_cost: Fraction
    std_error: float
    trials: int
    mean_controlled: Fraction
    mean_uncontrolled: Fraction
    min_cost: Fraction
    dominance_violations: int

    @property
    def exact_zero_opt(self) -> bool:
        return self.opt_cost == 0

    @property
    def empirical_ratio(self) -> float | None:
        return None if self.exact_zero_opt else float(self.mean_cost / self.opt_cost)

    def within_bound(self, alpha: Fraction, k: float = 3.0) -> bool:
        """``mean <= alpha * opt + k * stderr``; the left side is exact."""
        return self.mean_cost - Fraction(alpha) * self.opt_cost <= k * self.std_error


@dataclass
class RatioReport:
    mode: Mode
    alpha: Fraction
    n: int
    records: list[InstanceRecord] = field(default_factory=list)

    @property
    def all_within_bound(self) -> bool:
        return all(r.within_bound(self.alpha) for r in self.records)

    def to_text(self) -> str:
        lines = [
            f"# ratio experiment: mode={self.mode.value} alpha={format_scalar(self.alpha)} n={self.n} instances={len(self.records)}",
            "# opt and bound columns are exact; mean/stderr/ratio columns are decimal summaries",
            "seed\topt\tmean_cost(decimal)\tstderr(decimal)\tratio(decimal)\tcontrolled(decimal)\tuncontrolled(decimal)\ttrials\twithin_bound",
        ]
        for r in self.records:
            ratio = "exact-zero-opt" if r.exact_zero_opt else f"{r.empirical_ratio:.4f}"
            lines.append(
                f"{r.seed}\t{format_scalar(r.opt_cost)}\t{float(r.mean_cost):.6f}\t{r.std_error:.6f}\t{ratio}\t"
                f"{float(r.mean_controlled):.6f}\t{float(r.mean_uncontrolled):.6f}\t{r.trials}\t{r.within_bound(self.alpha)}"
            )
        lines.append(f"verdict = {'pass' if self.all_within_bound else 'fail'}")
        return "\n".join(lines) + "\n"


def ratio_experiment(
    instances: int,
    n: int,
    trials: int,
    mode: Mode | str,
    base_seed: int,
    max_exact_n: int = DEFAULT_MAX_EXACT_N,
) -> RatioReport:
    """Empirical mean cost of the pivot algorithm against the exact optimum.

    Instance ``i`` is generated from seed ``base_seed + i``; its trial ``t``
    runs with seed ``base_seed + i * trials + t``.
    """
    mode = Mode(mode)
    if n > max_exact_n:
        raise ValueError(f"n = {n} exceeds the exact-optimum guard {max_exact_n}")
    if trials < 100:
        raise ValueError("at least 100 trials per instance")
    report = RatioReport(mode, ALPHA_FOR_MODE[mode], n)
    for i in range(instances):
        seed = (base_seed + i) % _U64
        inst = generate(GeneratorConfig(n, seed, FAMILY_FOR_MODE[mode]))
        record = measure_instance(inst, mode, trials, base_seed + i * trials, max_exact_n)
        record.seed = seed
        report.records.append(record)
    return report


def measure_instance(
    inst: WeightedInstance,
    mode: Mode | str,
    trials: int,
    first_seed: int,
    max_exact_n: int = DEFAULT_MAX_EXACT_N,
) -> InstanceRecord:
    """Run ``trials`` seeded pivot runs (seeds ``first_seed + t``) and compare with the optimum."""
    mode = Mode(mode)
    if trials < 2:
        raise ValueError("need at least two trials for a standard error")
    _, opt = exact_optimal(inst, max_exact_n)
    fplus = join_probabilities(inst, mode)
    costs, ctrl, unctrl = [], Fraction(0), Fraction(0)
    for t in range(trials):
        clustering, trace = quick_cluster(inst, mode, (first_seed + t) % _U64, fplus=fplus)
        cost = clustering_cost(inst, clustering)
        split = decompose_costs(inst, trace)
        costs.append(cost)
        ctrl += split.controlled
        unctrl += split.uncontrolled
    floats = [float(c) for c in costs]
    return InstanceRecord(
        seed=first_seed,
        opt_cost=opt,
        mean_cost=sum(costs, Fraction(0)) / trials,
        std_error=statistics.stdev(floats) / math.sqrt(trials),
        trials=trials,
        mean_controlled=ctrl / trials,
        mean_uncontrolled=unctrl / trials,
        min_cost=min(costs),
        dominance_violations=sum(1 for c in costs if c < opt),
    )


def _mix64(z: np.ndarray) -> np.ndarray:
    # splitmix64 finalizer; uint64 arithmetic wraps mod 2**64
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


class WeightOracle:
    """Seeded pure function from a vertex pair to ``w-`` in ``{0, ..., 999}/1000``.

    Weights are never stored, so lookups cost O(1) at any ``n``. ``constant``
    pins every pair to one ``w-`` value instead.
    """

    def __init__(self, seed: int, constant=None):
        self.seed = int(seed) % _U64
        self.constant = None if constant is None else Fraction(constant)

    def numerators(self, i, j) -> np.ndarray:
        i = np.asarray(i, dtype=np.uint64)
        j = np.asarray(j, dtype=np.uint64)
        lo, hi = np.minimum(i, j), np.maximum(i, j)
        with np.errstate(over="ignore"):
            key = (lo << np.uint64(32)) | hi
            z = key + np.uint64(self.seed) * np.uint64(0x9E3779B97F4A7C15)
            return (_mix64(z) % np.uint64(WEIGHT_DENOMINATOR)).astype(np.int64)

    def minus(self, i: int, j: int) -> Fraction:
        if self.constant is not None:
            return self.constant
        return Fraction(int(self.numerators(i, j)), WEIGHT_DENOMINATOR)

    def plus(self, i: int, j: int) -> Fraction:
        return 1 - self.minus(i, j)

    def join_probability(self, pivot: int, others: np.ndarray, mode: Mode) -> np.ndarray:
        """Float ``f+`` of every ``(pivot, u)`` pair."""
        if self.constant is not None:
            return np.full(len(others), float(1 - f_minus(self.constant, mode)))
        w = self.numerators(np.full(len(others), pivot), others) / WEIGHT_DENOMINATOR
        if mode is Mode.TRIANGLE:
            fm = np.clip((25 / 7) * w - 5 / 4, 0.0, 1.0)
            fm[w <= float(H_LO)] = 0.0
            fm[w >= float(H_HI)] = 1.0
        else:
            fm = w
        return 1.0 - fm

    def materialize(self, n: int, regime: Regime = Regime.PROBABILITY) -> WeightedInstance:
        wm = [self.minus(i, j) for i in range(n) for j in range(i + 1, n)]
        return WeightedInstance(n, tuple(1 - w for w in wm), tuple(wm), regime)


def oracle_run(n: int, oracle: WeightOracle, mode: Mode | str, seed: int) -> tuple[np.ndarray, int]:
    """Float fast path of the pivot algorithm; returns ``(labels, membership tests)``.

    Consumes the variate stream exactly as :func:`quick_cluster` does.
    """
    mode = Mode(mode)
    stream = VariateStream(seed)
    labels = np.full(n, -1, dtype=np.int64)
    remaining = np.arange(n, dtype=np.int64)
    tests = 0
    cluster = 0
    while len(remaining):
        idx = stream.index(len(remaining))
        pivot = int(remaining[idx])
        others = np.delete(remaining, idx)
        tests += len(others)
        if len(others):
            u = stream.raw(len(others)).astype(np.float64) * (1.0 / 2**53)
            join = u < oracle.join_probability(pivot, others, mode)
        else:
            join = np.zeros(0, dtype=bool)
        labels[pivot] = cluster
        labels[others[join]] = cluster
        remaining = others[~join]
        cluster += 1
    return labels, tests


@dataclass
class ScalingReport:
    mode: Mode
    trials: int
    sizes: list[int]
    mean_tests: list[float]
    mean_seconds: list[float]

    @property
    def doubling_ratios(self) -> dict[int, float]:
        """``M(2n) / M(n)`` for every ``n`` whose double was also measured."""
        by_n = dict(zip(self.sizes, self.mean_tests))
        return {n: by_n[2 * n] / by_n[n] for n in self.sizes if 2 * n in by_n and by_n[n] > 0}

    def to_text(self) -> str:
        lines = [
            f"# scaling benchmark: mode={self.mode.value} trials={self.trials}",
            "# work = membership tests (pivot, candidate) under O(1) oracle weight access;",
            "# reading explicit weights alone would be quadratic, so this counts algorithmic work only",
            "n\tmean_tests(decimal)\tmean_seconds(decimal)\tdoubling_ratio(decimal)",
        ]
        ratios = self.doubling_ratios
        for n, m, s in zip(self.sizes, self.mean_tests, self.mean_seconds):
            r = f"{ratios[n]:.4f}" if n in ratios else "-"
            lines.append(f"{n}\t{m:.2f}\t{s:.6f}\t{r}")
        return "\n".join(lines) + "\n"


def scaling_benchmark(
    sizes: list[int],
    mode: Mode | str,
    trials: int,
    seed: int,
    oracle: WeightOracle | None = None,
) -> ScalingReport:
    """Mean membership-test count ``M(n)`` and wall time per size; trial ``t`` uses seed ``seed + t``."""
    mode = Mode(mode)
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be ascending")
    oracle = oracle or WeightOracle(seed)
    tests, seconds = [], []
    for n in sizes:
        counts, elapsed = [], []
        for t in range(trials):
            start = time.perf_counter()
            _, m = oracle_run(n, oracle, mode, (seed + t) % _U64)
            elapsed.append(time.perf_counter() - start)
            counts.append(m)
        tests.append(statistics.fmean(counts))
        seconds.append(statistics.fmean(elapsed))
    return ScalingReport(mode, trials, list(sizes), tests, seconds)
