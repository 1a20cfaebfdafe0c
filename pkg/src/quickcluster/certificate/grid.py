"""Vectorized exact evaluation of omega on rational grids.

A grid weight ``k/d`` is carried as an integer numerator over a common
denominator ``D`` (``d`` in probability mode, ``28 d`` in triangle mode, the
least denominator that also represents ``h(k/d)``). Omega then becomes an
integer numerator over ``q D^3`` for ``alpha = p/q``. Arrays are ``int64``
when a worst-case bound proves no overflow and Python-int object arrays
otherwise, so results are exact either way.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .functions import OTHERS, Mode

__all__ = ["scale", "omega_numerators", "phi_psi_numerators", "product_sum_numerators", "fraction_at"]

_INT64_LIMIT = 2**62


def common_denominator(d: int, mode: Mode | str) -> int:
    return 28 * d if Mode(mode) is Mode.TRIANGLE else d


def _dtype(d: int, mode, alpha: Fraction = Fraction(1)):
    big_d = common_denominator(d, mode)
    bound = 9 * big_d**3 * (abs(alpha.numerator) + alpha.denominator)
    return np.int64 if bound < _INT64_LIMIT else object


def scale(k, d: int, mode: Mode | str, dtype=np.int64):
    """Integer numerators ``(w-, w+, f-, f+)`` over the common denominator for ``w- = k/d``."""
    k = np.asarray(k).astype(dtype)
    if np.any(k < 0) or np.any(k > d):
        raise ValueError("grid numerators must lie in [0, d]")
    if Mode(mode) is Mode.TRIANGLE:
        big_d = 28 * d
        wm = 28 * k
        mid = 100 * k - 35 * d
        # I1: k/d <= 7/20, I3: k/d >= 63/100
        fm = np.where(20 * k <= 7 * d, 0, np.where(100 * k >= 63 * d, big_d, mid)).astype(dtype)
    else:
        big_d = d
        wm = k
        fm = k
    return wm, big_d - wm, fm, big_d - fm


def phi_psi_numerators(x, ks, d: int, mode: Mode | str, dtype=np.int64):
    """Numerators of phi and psi over ``D^3`` for x-vertex ``x`` and grid triples ``ks``."""
    scaled = [scale(k, d, mode, dtype) for k in ks]
    big_d = common_denominator(d, mode)
    phi = 0
    psi = 0
    for p, (a, b) in enumerate(OTHERS):
        wm, wp = scaled[p][0], scaled[p][1]
        fm_a, fp_a = scaled[a][2], scaled[a][3]
        fm_b, fp_b = scaled[b][2], scaled[b][3]
        phi = phi + fp_a * fp_b * wm + (fp_a * fm_b + fm_a * fp_b) * wp
        touched = big_d * big_d - fm_a * fm_b
        psi = psi + touched * (wp if x[p] else wm)
    return phi, psi


def omega_numerators(x, ks, d: int, mode: Mode | str, alpha: Fraction):
    """Omega on a grid as ``(numerators, denominator)``; value = numerator / denominator."""
    alpha = Fraction(alpha)
    dtype = _dtype(d, mode, alpha)
    phi, psi = phi_psi_numerators(x, ks, d, mode, dtype)
    big_d = common_denominator(d, mode)
    num = alpha.denominator * phi - alpha.numerator * psi
    return num, alpha.denominator * big_d**3


def product_sum_numerators(ks, d: int, dtype=np.int64):
    """``w-ij w+jk w+ki + w+ij w-jk w+ki + w+ij w+jk w-ki`` over ``d^3`` (probability weights)."""
    k0, k1, k2 = (np.asarray(k).astype(dtype) for k in ks)
    return k0 * (d - k1) * (d - k2) + (d - k0) * k1 * (d - k2) + (d - k0) * (d - k1) * k2


def fraction_at(num, denom: int) -> Fraction:
    return Fraction(int(num), int(denom))
