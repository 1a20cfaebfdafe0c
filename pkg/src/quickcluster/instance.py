"""Weighted correlation clustering instances, clusterings and exact costs.

Every weight is a :class:`fractions.Fraction`. Nothing in this module ever
rounds, so costs compare by exact equality.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Regime",
    "InstanceError",
    "RegimeError",
    "WeightedInstance",
    "Clustering",
    "parse_scalar",
    "format_scalar",
    "parse_instance",
    "serialize_instance",
    "clustering_cost",
    "lp_objective_integral",
    "labeling_from_clustering",
    "parse_clustering",
    "serialize_clustering",
]


class Regime(str, enum.Enum):
    GENERAL = "general"
    PROBABILITY = "probability"
    PROBABILITY_TRIANGLE = "probability-triangle"

    @property
    def has_probability(self) -> bool:
        return self is not Regime.GENERAL


class InstanceError(ValueError):
    """Malformed instance text or inconsistent instance data."""


class RegimeError(InstanceError):
    """An instance violates the constraints of its declared regime."""


_SCALAR_RE = re.compile(r"^-?(\d+(/\d+)?|\d+\.\d*|\.\d+)$")


def parse_scalar(text: str) -> Fraction:
    """Parse ``p/q``, an integer, or a finite decimal into an exact Fraction.

    >>> parse_scalar("0.35")
    Fraction(7, 20)
    """
    text = text.strip()
    if not _SCALAR_RE.match(text):
        raise InstanceError(f"not a rational or decimal literal: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise InstanceError(f"zero denominator in {text!r}") from None


def format_scalar(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, float):
        # shortest round-trip decimal, so 0.3 means 3/10
        return Fraction(repr(value))
    return Fraction(value)


def n_pairs(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(i: int, j: int, n: int) -> int:
    """Position of unordered pair ``{i, j}`` in lexicographic pair order."""
    if i == j:
        raise IndexError("a pair needs two distinct vertices")
    if i > j:
        i, j = j, i
    if i < 0 or j >= n:
        raise IndexError(f"pair ({i},{j}) out of range for n={n}")
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class WeightedInstance:
    """A complete weighted graph ``(V, w+, w-)`` with a declared regime.

    Weights are held in lexicographic pair order ``(0,1), (0,2), ..., (n-2,n-1)``.
    Construction validates nonnegativity and the regime's constraints.
    """

    n: int
    w_plus: tuple[Fraction, ...]
    w_minus: tuple[Fraction, ...]
    regime: Regime = Regime.GENERAL

    def __post_init__(self):
        if self.n < 0:
            raise InstanceError("vertex count must be nonnegative")
        object.__setattr__(self, "regime", Regime(self.regime))
        object.__setattr__(self, "w_plus", tuple(_as_fraction(v) for v in self.w_plus))
        object.__setattr__(self, "w_minus", tuple(_as_fraction(v) for v in self.w_minus))
        m = n_pairs(self.n)
        if len(self.w_plus) != m or len(self.w_minus) != m:
            raise InstanceError(f"expected {m} pair weights for n={self.n}")
        self.validate()

    @classmethod
    def from_pairs(
        cls,
        n: int,
        weights: Mapping[tuple[int, int], tuple[object, object]],
        regime: Regime | str = Regime.GENERAL,
    ) -> "WeightedInstance":
        """Build from ``{(i, j): (w_plus, w_minus)}``; every pair must be present."""
        wp: list = [None] * n_pairs(n)
        wm: list = [None] * n_pairs(n)
        for (i, j), (p, q) in weights.items():
            k = pair_index(i, j, n)
            if wp[k] is not None:
                raise InstanceError(f"duplicate pair ({min(i, j)},{max(i, j)})")
            wp[k], wm[k] = p, q
        for k, (i, j) in enumerate(combinations(range(n), 2)):
            if wp[k] is None:
                raise InstanceError(f"missing pair ({i},{j})")
        return cls(n, tuple(wp), tuple(wm), Regime(regime))

    @classmethod
    def from_w_minus(
        cls,
        n: int,
        w_minus: Callable[[int, int], object] | Sequence[Sequence[object]],
        regime: Regime | str = Regime.PROBABILITY,
    ) -> "WeightedInstance":
        """Probability-regime constructor: ``w+ = 1 - w-`` for every pair."""
        get = w_minus if callable(w_minus) else (lambda i, j: w_minus[i][j])
        wm = [_as_fraction(get(i, j)) for i, j in combinations(range(n), 2)]
        return cls(n, tuple(1 - v for v in wm), tuple(wm), Regime(regime))

    def pairs(self) -> Iterator[tuple[int, int]]:
        return combinations(range(self.n), 2)

    def weight(self, i: int, j: int) -> tuple[Fraction, Fraction]:
        """``(w_plus, w_minus)`` of the unordered pair; symmetric in ``i, j``."""
        k = pair_index(i, j, self.n)
        return self.w_plus[k], self.w_minus[k]

    def minus(self, i: int, j: int) -> Fraction:
        return self.w_minus[pair_index(i, j, self.n)]

    def plus(self, i: int, j: int) -> Fraction:
        return self.w_plus[pair_index(i, j, self.n)]

    def validate(self) -> None:
        for (i, j), p, q in zip(self.pairs(), self.w_plus, self.w_minus):
            if p < 0 or q < 0:
                raise InstanceError(f"negative weight at ({i},{j})")
            if self.regime.has_probability and p + q != 1:
                raise RegimeError(
                    f"probability constraint violated at ({i},{j}): sum {format_scalar(p + q)}"
                )
        if self.regime is Regime.PROBABILITY_TRIANGLE:
            bad = find_triangle_violation(self)
            if bad is not None:
                (i, j, k), (a, b) = bad
                raise RegimeError(
                    f"triangle constraint violated at triple ({i},{j},{k}): "
                    f"w-({a[0]},{a[1]}) = {format_scalar(self.minus(*a))} exceeds "
                    f"the sum over the other two pairs {format_scalar(b)}"
                )


def find_triangle_violation(inst: WeightedInstance):
    """First triple whose difference weights break ``w-ik <= w-ij + w-jk``, else None."""
    for i, j, k in combinations(range(inst.n), 3):
        sides = {(i, j): inst.minus(i, j), (j, k): inst.minus(j, k), (i, k): inst.minus(i, k)}
        total = sum(sides.values())
        for pair, value in sides.items():
            rest = total - value
            if value > rest:
                return (i, j, k), (pair, rest)
    return None


@dataclass(frozen=True)
class Clustering:
    """Per-vertex cluster labels, canonicalized by first appearance."""

    labels: tuple[int, ...] = field(default=())

    def __post_init__(self):
        remap: dict = {}
        canon = tuple(remap.setdefault(lab, len(remap)) for lab in self.labels)
        object.__setattr__(self, "labels", canon)

    @classmethod
    def from_clusters(cls, n: int, clusters: Iterable[Iterable[int]]) -> "Clustering":
        labels = [-1] * n
        for c, members in enumerate(clusters):
            for v in members:
                if labels[v] != -1:
                    raise ValueError(f"vertex {v} appears in two clusters")
                labels[v] = c
        if -1 in labels:
            raise ValueError(f"vertex {labels.index(-1)} is not clustered")
        return cls(tuple(labels))

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def n_clusters(self) -> int:
        return max(self.labels) + 1 if self.labels else 0

    def clusters(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n_clusters)]
        for v, c in enumerate(self.labels):
            out[c].append(v)
        return out

    def same(self, i: int, j: int) -> bool:
        return self.labels[i] == self.labels[j]


def clustering_cost(inst: WeightedInstance, c: Clustering) -> Fraction:
    """Sum of ``w-`` over co-clustered pairs plus ``w+`` over separated pairs."""
    if len(c) != inst.n:
        raise ValueError(f"clustering has {len(c)} labels, instance has {inst.n} vertices")
    labels = c.labels
    total = Fraction(0)
    for (i, j), p, q in zip(inst.pairs(), inst.w_plus, inst.w_minus):
        total += q if labels[i] == labels[j] else p
    return total


def labeling_from_clustering(c: Clustering) -> dict[tuple[int, int], int]:
    """Integral LP labeling: ``x[i, j] = 0`` iff ``i`` and ``j`` share a cluster.

    Keys are ordered pairs ``i < j``; use :func:`x_value` for symmetric lookup.
    """
    labels = c.labels
    return {(i, j): int(labels[i] != labels[j]) for i, j in combinations(range(len(labels)), 2)}


def x_value(x: Mapping[tuple[int, int], object], i: int, j: int):
    return x[(i, j)] if i < j else x[(j, i)]


def lp_objective_integral(inst: WeightedInstance, x: Mapping[tuple[int, int], object]) -> Fraction:
    """LP objective ``sum (1 - x_ij) w-_ij + x_ij w+_ij`` at a given labeling."""
    total = Fraction(0)
    for (i, j), p, q in zip(inst.pairs(), inst.w_plus, inst.w_minus):
        try:
            v = _as_fraction(x_value(x, i, j))
        except KeyError:
            raise ValueError(f"labeling has no value for pair ({i},{j})") from None
        if not 0 <= v <= 1:
            raise ValueError(f"x({i},{j}) = {v} outside [0, 1]")
        total += (1 - v) * q + v * p
    return total


# -- wcc v1 text format -------------------------------------------------------

_HEADER = "wcc v1"


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_instance(text: bytes | str) -> WeightedInstance:
    """Parse a ``wcc v1`` document.

    Raises :class:`InstanceError` on malformed, duplicate or missing pair
    lines and :class:`RegimeError` when the declared regime is violated.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [(no, _strip_comment(raw)) for no, raw in enumerate(text.splitlines(), 1)]
    lines = [(no, s) for no, s in lines if s]

    def header(idx: int, key: str) -> str:
        if idx >= len(lines):
            raise InstanceError(f"missing '{key}' header")
        no, s = lines[idx]
        parts = s.split()
        if key == _HEADER:
            if s.split() != _HEADER.split():
                raise InstanceError(f"line {no}: expected '{_HEADER}', got {s!r}")
            return ""
        if len(parts) != 2 or parts[0] != key:
            raise InstanceError(f"line {no}: expected '{key} <value>', got {s!r}")
        return parts[1]

    header(0, _HEADER)
    n_text = header(1, "n")
    if not n_text.isdigit():
        raise InstanceError(f"vertex count must be a nonnegative integer, got {n_text!r}")
    n = int(n_text)
    regime_text = header(2, "regime")
    try:
        regime = Regime(regime_text)
    except ValueError:
        raise InstanceError(f"unknown regime {regime_text!r}") from None

    weights: dict[tuple[int, int], tuple[Fraction, Fraction]] = {}
    for no, s in lines[3:]:
        parts = s.split()
        if len(parts) != 4 or not parts[0].isdigit() or not parts[1].isdigit():
            raise InstanceError(f"line {no}: expected '<i> <j> <w_plus> <w_minus>', got {s!r}")
        i, j = int(parts[0]), int(parts[1])
        if not i < j < n:
            raise InstanceError(f"line {no}: pair ({i},{j}) needs 0 <= i < j < {n}")
        if (i, j) in weights:
            raise InstanceError(f"line {no}: duplicate pair ({i},{j})")
        try:
            p, q = parse_scalar(parts[2]), parse_scalar(parts[3])
        except InstanceError as exc:
            raise InstanceError(f"line {no}: {exc}") from None
        if p < 0 or q < 0:
            raise InstanceError(f"line {no}: negative weight at ({i},{j})")
        weights[(i, j)] = (p, q)
    return WeightedInstance.from_pairs(n, weights, regime)


def serialize_instance(inst: WeightedInstance) -> bytes:
    """Canonical ``wcc v1`` text: pairs in lexicographic order, exact ``p/q`` weights."""
    out = [_HEADER, f"n {inst.n}", f"regime {inst.regime.value}"]
    for (i, j), p, q in zip(inst.pairs(), inst.w_plus, inst.w_minus):
        out.append(f"{i} {j} {format_scalar(p)} {format_scalar(q)}")
    return ("\n".join(out) + "\n").encode("utf-8")


def serialize_clustering(c: Clustering) -> bytes:
    return "".join(f"{v} {lab}\n" for v, lab in enumerate(c.labels)).encode("utf-8")


def parse_clustering(text: bytes | str, n: int | None = None) -> Clustering:
    """Parse ``<vertex> <cluster_id>`` lines listed in ascending vertex order."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    labels = []
    for no, raw in enumerate(text.splitlines(), 1):
        s = _strip_comment(raw)
        if not s:
            continue
        parts = s.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise ValueError(f"line {no}: expected '<vertex> <cluster_id>', got {s!r}")
        v, lab = int(parts[0]), int(parts[1])
        if v != len(labels):
            raise ValueError(f"line {no}: expected vertex {len(labels)}, got {v}")
        labels.append(lab)
    if n is not None and len(labels) != n:
        raise ValueError(f"clustering lists {len(labels)} vertices, instance has {n}")
    return Clustering(tuple(labels))
