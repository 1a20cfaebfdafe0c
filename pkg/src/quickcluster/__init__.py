"""Pivot-based weighted correlation clustering with exact cost accounting."""
from .certificate import Mode
from .estimators import AilonPivot, ExactCorrelationClustering, QuickCluster, check_instance, check_seed
from .instance import (
    Clustering,
    InstanceError,
    Regime,
    RegimeError,
    WeightedInstance,
    clustering_cost,
    labeling_from_clustering,
    lp_objective_integral,
    parse_clustering,
    parse_instance,
    serialize_clustering,
    serialize_instance,
)
from .pivot import ModeError, RunTrace, ailon_pivot, decompose_costs, exact_optimal, quick_cluster

__all__ = [
    "AilonPivot",
    "Clustering",
    "ExactCorrelationClustering",
    "InstanceError",
    "Mode",
    "ModeError",
    "QuickCluster",
    "Regime",
    "RegimeError",
    "RunTrace",
    "WeightedInstance",
    "ailon_pivot",
    "check_instance",
    "check_seed",
    "clustering_cost",
    "decompose_costs",
    "exact_optimal",
    "labeling_from_clustering",
    "lp_objective_integral",
    "parse_clustering",
    "parse_instance",
    "quick_cluster",
    "serialize_clustering",
    "serialize_instance",
]
