"""Exact evaluation of the rounding function and the certificate functions.

Triples are ordered ``(ij, jk, ki)``. The uncontrolled-cost term of pair
``ij`` is driven by the pivot's decisions on the two other pairs ``ki`` and
``jk``; ``OTHERS`` records that pairing for each slot.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from typing import Sequence

__all__ = [
    "Mode",
    "H_LO",
    "H_HI",
    "H_SLOPE",
    "H_INTERCEPT",
    "ALPHA_PROBABILITY",
    "ALPHA_TRIANGLE",
    "L_VERTICES",
    "LT_VERTICES",
    "h",
    "f_minus",
    "f_plus",
    "delta",
    "phi",
    "psi",
    "omega",
    "product_sum",
]


class Mode(str, enum.Enum):
    """How a difference weight becomes a rejection probability ``f-``."""

    PROBABILITY = "probability"
    TRIANGLE = "triangle"


H_LO = Fraction(7, 20)
H_HI = Fraction(63, 100)
H_SLOPE = Fraction(25, 7)
H_INTERCEPT = Fraction(-5, 4)

ALPHA_PROBABILITY = Fraction(3)
ALPHA_TRIANGLE = Fraction(8, 5)

# vertices of the triangle-inequality polytope in (x_ij, x_jk, x_ki)
L_VERTICES = ((0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1))
# the subset that remains after the cyclic and swap symmetries of omega
LT_VERTICES = ((0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 1, 1))

# for slot p of (ij, jk, ki): the slots of the pivot pairs that decide it
OTHERS = ((2, 1), (0, 2), (1, 0))


def _unit(w, name: str = "w") -> Fraction:
    # floats are read as their shortest decimal, so 0.42 means 21/50
    w = Fraction(repr(w)) if isinstance(w, float) else Fraction(w)
    if not 0 <= w <= 1:
        raise ValueError(f"{name} = {w} outside [0, 1]")
    return w


def h(w) -> Fraction:
    """Piecewise-linear rounding: 0 up to 7/20, linear to 1 at 63/100, then 1."""
    w = _unit(w)
    if w <= H_LO:
        return Fraction(0)
    if w >= H_HI:
        return Fraction(1)
    return H_SLOPE * w + H_INTERCEPT


def f_minus(w, mode: Mode | str) -> Fraction:
    if Mode(mode) is Mode.TRIANGLE:
        return h(w)
    return _unit(w)


def f_plus(w, mode: Mode | str) -> Fraction:
    return 1 - f_minus(w, mode)


def delta(x, w_minus, w_plus=None, mode: Mode | str = Mode.PROBABILITY, alpha=ALPHA_PROBABILITY) -> Fraction:
    """Controlled-cost excess of one pair over ``alpha`` times its LP share.

    ``w_plus`` defaults to ``1 - w_minus``.
    """
    x = _unit(x, "x")
    wm = _unit(w_minus, "w_minus")
    wp = 1 - wm if w_plus is None else Fraction(w_plus)
    fm = f_minus(wm, mode)
    fp = 1 - fm
    return (fp * wm + fm * wp) - Fraction(alpha) * ((1 - x) * wm + x * wp)


def _triple(w_minus: Sequence, w_plus: Sequence | None):
    wm = tuple(_unit(v, "w_minus") for v in w_minus)
    if len(wm) != 3:
        raise ValueError("a weight triple has exactly three entries")
    wp = tuple(1 - v for v in wm) if w_plus is None else tuple(Fraction(v) for v in w_plus)
    return wm, wp


def phi(w_minus: Sequence, w_plus: Sequence | None = None, mode: Mode | str = Mode.PROBABILITY) -> Fraction:
    """Expected uncontrolled cost of a triple per unit pivot probability."""
    wm, wp = _triple(w_minus, w_plus)
    fm = [f_minus(v, mode) for v in wm]
    fp = [1 - v for v in fm]
    total = Fraction(0)
    for p, (a, b) in enumerate(OTHERS):
        total += fp[a] * fp[b] * wm[p] + (fp[a] * fm[b] + fm[a] * fp[b]) * wp[p]
    return total


def psi(x: Sequence, w_minus: Sequence, w_plus: Sequence | None = None, mode: Mode | str = Mode.PROBABILITY) -> Fraction:
    """LP cost of a triple weighted by the probability that a third pivot decides it."""
    wm, wp = _triple(w_minus, w_plus)
    xs = tuple(_unit(v, "x") for v in x)
    fm = [f_minus(v, mode) for v in wm]
    fp = [1 - v for v in fm]
    total = Fraction(0)
    for p, (a, b) in enumerate(OTHERS):
        touched = fp[a] * fp[b] + fp[a] * fm[b] + fm[a] * fp[b]
        total += touched * (xs[p] * wp[p] + (1 - xs[p]) * wm[p])
    return total


def omega(x: Sequence, w_minus: Sequence, w_plus: Sequence | None = None,
          mode: Mode | str = Mode.PROBABILITY, alpha=ALPHA_PROBABILITY) -> Fraction:
    return phi(w_minus, w_plus, mode) - Fraction(alpha) * psi(x, w_minus, w_plus, mode)


def product_sum(w_minus: Sequence, w_plus: Sequence | None = None) -> Fraction:
    """``w-ij w+jk w+ki + w+ij w-jk w+ki + w+ij w+jk w-ki``."""
    wm, wp = _triple(w_minus, w_plus)
    return wm[0] * wp[1] * wp[2] + wp[0] * wm[1] * wp[2] + wp[0] * wp[1] * wm[2]
