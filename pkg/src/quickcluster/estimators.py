"""scikit-learn style wrappers around the pivot algorithms.

``fit`` accepts a :class:`WeightedInstance` or a square matrix of difference
weights ``w-`` (probability constraints assumed, ``w+ = 1 - w-``).
"""
from __future__ import annotations

import numbers
from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_is_fitted

from .certificate.functions import Mode
from .instance import Regime, WeightedInstance, clustering_cost
from .pivot import DEFAULT_MAX_EXACT_N, ailon_pivot, decompose_costs, exact_optimal, quick_cluster

__all__ = ["check_instance", "check_seed", "QuickCluster", "AilonPivot", "ExactCorrelationClustering"]


def check_instance(X, regime: Regime | str | None = None) -> WeightedInstance:
    """Validate ``X`` and return it as a :class:`WeightedInstance`.

    A matrix must be square and symmetric with entries in ``[0, 1]``; its
    diagonal is ignored. Floats are read through their shortest decimal form,
    so ``0.35`` becomes ``7/20``. ``regime`` defaults to probability for
    matrices; for instances it is a minimum requirement.
    """
    if isinstance(X, WeightedInstance):
        if regime is not None:
            need = Regime(regime)
            if need is Regime.PROBABILITY_TRIANGLE and X.regime is not need:
                raise ValueError(f"expected a {need.value} instance, got {X.regime.value}")
            if need.has_probability and not X.regime.has_probability:
                raise ValueError(f"expected a {need.value} instance, got {X.regime.value}")
        return X
    arr = np.asarray(X, dtype=object)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix of difference weights, got shape {arr.shape}")
    n = arr.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            if _frac(arr[i, j]) != _frac(arr[j, i]):
                raise ValueError(f"weight matrix is not symmetric at ({i},{j})")
    return WeightedInstance.from_w_minus(n, lambda i, j: _frac(arr[i, j]), Regime(regime or Regime.PROBABILITY))


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (float, np.floating)):
        if not np.isfinite(value):
            raise ValueError("weights must be finite")
        return Fraction(repr(float(value)))
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(int(value)) if isinstance(value, numbers.Integral) else Fraction(value)


def check_seed(random_state) -> int:
    """Turn ``random_state`` into an unsigned 64-bit seed.

    ``None`` draws fresh OS entropy, so pass an integer for reproducible runs.
    """
    if random_state is None:
        return int(np.random.SeedSequence().generate_state(1, np.uint64)[0])
    if isinstance(random_state, numbers.Integral):
        seed = int(random_state)
        if not 0 <= seed < 2**64:
            raise ValueError("random_state must fit in an unsigned 64-bit integer")
        return seed
    if isinstance(random_state, np.random.Generator):
        return int(random_state.integers(0, 2**64, dtype=np.uint64))
    if isinstance(random_state, np.random.RandomState):
        return int(random_state.randint(0, 2**63, dtype=np.int64))
    raise ValueError(f"cannot use {random_state!r} as a seed")


class _PivotEstimator(ClusterMixin, BaseEstimator):
    def _store(self, inst: WeightedInstance, clustering, trace=None):
        self.instance_ = inst
        self.clustering_ = clustering
        self.labels_ = np.asarray(clustering.labels, dtype=np.int64)
        self.n_clusters_ = clustering.n_clusters
        self.cost_ = clustering_cost(inst, clustering)
        if trace is not None:
            self.trace_ = trace
            self.decomposition_ = decompose_costs(inst, trace)
        return self

    def score(self, X=None, y=None) -> float:
        """Negative clustering cost of the fitted partition (higher is better)."""
        check_is_fitted(self, "clustering_")
        inst = self.instance_ if X is None else check_instance(X)
        return -float(clustering_cost(inst, self.clustering_))


class QuickCluster(_PivotEstimator):
    """Randomized pivot clustering with ``f-`` set by ``mode``.

    Parameters
    ----------
    mode : {"probability", "triangle"}
        ``"probability"`` uses ``f- = w-``; ``"triangle"`` applies the
        piecewise-linear rounding ``h`` and needs triangle-consistent weights.
    random_state : int, numpy Generator or None
        Seed for the run. Identical seeds give identical clusterings.

    Attributes
    ----------
    labels_, clustering_, n_clusters_, cost_ (exact Fraction),
    trace_ (RunTrace), decomposition_ (controlled / uncontrolled split),
    seed_ (the integer seed actually used).
    """

    def __init__(self, mode="probability", random_state=None):
        self.mode = mode
        self.random_state = random_state

    def fit(self, X, y=None):
        mode = Mode(self.mode)
        regime = Regime.PROBABILITY_TRIANGLE if mode is Mode.TRIANGLE else Regime.PROBABILITY
        inst = check_instance(X, regime)
        self.seed_ = check_seed(self.random_state)
        clustering, trace = quick_cluster(inst, mode, self.seed_)
        return self._store(inst, clustering, trace)


class AilonPivot(_PivotEstimator):
    """Pivot baseline that keeps a vertex with the pivot iff ``w+ >= w-``."""

    def __init__(self, random_state=None):
        self.random_state = random_state

    def fit(self, X, y=None):
        inst = check_instance(X, Regime.PROBABILITY)
        self.seed_ = check_seed(self.random_state)
        clustering, trace = ailon_pivot(inst, self.seed_, return_trace=True)
        return self._store(inst, clustering, trace)


class ExactCorrelationClustering(_PivotEstimator):
    """Exhaustive minimum-cost clustering for small instances (``n <= max_n``)."""

    def __init__(self, max_n: int = DEFAULT_MAX_EXACT_N):
        self.max_n = max_n

    def fit(self, X, y=None):
        inst = check_instance(X, None if isinstance(X, WeightedInstance) else Regime.PROBABILITY)
        clustering, _ = exact_optimal(inst, self.max_n)
        return self._store(inst, clustering)
