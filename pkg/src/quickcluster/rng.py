"""Seeded variate stream shared by every randomized routine.

Each variate is one raw 64-bit PCG64 output truncated to 53 bits, so its
value ``u / 2**53`` is an exact dyadic rational in ``[0, 1)``.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

__all__ = ["VariateStream", "UNIT_BITS"]

UNIT_BITS = 53
_UNIT = 1 << UNIT_BITS


class VariateStream:
    def __init__(self, seed: int):
        seed = int(seed)
        if not 0 <= seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        self.seed = seed
        self._bits = np.random.PCG64(seed)

    def raw(self, size: int | None = None):
        """Next 53-bit integer variate(s)."""
        if size is None:
            return int(self._bits.random_raw()) >> 11
        return self._bits.random_raw(size) >> np.uint64(11)

    def index(self, m: int) -> int:
        """Uniform index into a sequence of length ``m`` (consumes one variate)."""
        if m <= 0:
            raise ValueError("cannot pick from an empty sequence")
        return (self.raw() * m) >> UNIT_BITS

    @staticmethod
    def below(u: int, p: Fraction) -> bool:
        """Exact test ``u / 2**53 < p``."""
        return u * p.denominator < p.numerator * _UNIT

    @staticmethod
    def as_float(u) -> float:
        return u * (1.0 / _UNIT)
