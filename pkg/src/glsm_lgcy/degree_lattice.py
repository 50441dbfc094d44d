"""Degrees (beta_x, beta_y, beta_z, beta_a), their pairings, and the
summation lattice of the I-function."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence, Union

from .model_chambers import VARIABLES, WEIGHTS, ChamberChar, character_index

Epsilon = Union[Fraction, int, str]


class Degree(tuple):
    """A 4-tuple of rationals with denominators dividing 3."""

    def __new__(cls, *values):
        if len(values) == 1 and not isinstance(values[0], (int, Fraction, str)):
            values = tuple(values[0])
        vals = tuple(Fraction(v) for v in values)
        if len(vals) != 4:
            raise ValueError("a degree has 4 entries")
        if any((3 * v).denominator != 1 for v in vals):
            raise ValueError(f"degree entries must lie in (1/3)Z: {vals}")
        return super().__new__(cls, vals)

    @property
    def bx(self) -> Fraction:
        return self[0]

    @property
    def by(self) -> Fraction:
        return self[1]

    @property
    def bz(self) -> Fraction:
        return self[2]

    @property
    def ba(self) -> Fraction:
        return self[3]

    def of(self, v: str) -> Fraction:
        return self[("x", "y", "z", "a").index(v)]

    def replace(self, v: str, value) -> "Degree":
        vals = list(self)
        vals[("x", "y", "z", "a").index(v)] = Fraction(value)
        return Degree(vals)

    def __add__(self, other) -> "Degree":
        return Degree(a + b for a, b in zip(self, other))

    def __sub__(self, other) -> "Degree":
        return Degree(a - b for a, b in zip(self, other))

    def to_json(self) -> list[str]:
        return [str(v) for v in self]

    def __repr__(self) -> str:
        return "Degree(" + ", ".join(str(v) for v in self) + ")"


def beta_rho(rho: int | str | Sequence[int], beta: Sequence[Fraction], m: int) -> Fraction:
    """Degree of L_rho: pairing of rho's weights with (beta, m - 2)."""
    w = rho if isinstance(rho, (tuple, list)) else WEIGHTS[character_index(rho)]
    vec = tuple(Fraction(b) for b in beta) + (Fraction(m - 2),)
    return sum((Fraction(c) * b for c, b in zip(w, vec)), Fraction(0))


def extremal_degree(theta: ChamberChar, m: int) -> Degree:
    return Degree(
        [Fraction(m - 2, 3) if theta.is_subscript(v) else Fraction(0) for v in VARIABLES]
        + [Fraction(0)]
    )


def beta_theta(beta: Sequence[Fraction], m: int, theta: ChamberChar) -> Fraction:
    """Pairing with the lift of theta to G x C*_R."""
    lift = theta.lift
    return sum((l * Fraction(b) for l, b in zip(lift[:4], beta)), Fraction(0)) + lift[4] * (m - 2)


def passes_effectiveness(beta: Sequence[Fraction], m: int, theta: ChamberChar) -> bool:
    """Necessary conditions for (beta, m) to be effective."""
    beta = Degree(beta)
    if beta.ba < 0:
        return False
    for v in VARIABLES:
        b = beta.of(v)
        if theta.is_subscript(v):
            if b > Fraction(m - 2, 3):
                return False
        elif b < 0:
            return False
    bt = beta_theta(beta, m, theta)
    return bt.denominator == 1 and bt >= 0


def _parse_epsilon(eps: Epsilon):
    if isinstance(eps, str):
        s = eps.strip().lower()
        if s in ("0+", "0", "zero"):
            return "0+"
        if s in ("inf", "infinity", "∞", "+inf"):
            return "inf"
        eps = Fraction(s)
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    return eps


def is_unstable_tuple(beta: Sequence[Fraction], m: int, eps: Epsilon, theta: ChamberChar) -> bool:
    """(beta, m) fails epsilon-stability: deg(omega_log ⊗ L^eps) = -2 + m + eps*beta_theta <= 0.

    At m = 2 this forces beta_theta = 0, i.e. the extremal degree.
    """
    beta = Degree(beta)
    e = _parse_epsilon(eps)
    if m >= 3:
        return False
    if m == 2:
        return beta == extremal_degree(theta, 2)
    bt = beta_theta(beta, m, theta)
    if e == "0+":
        return True
    if e == "inf":
        return bt == 0
    return e * bt <= 2 - m


def _thirds_upto(limit: Fraction, step: Fraction):
    """k = 0, 1, ... with k*step <= limit."""
    if step <= 0:
        raise ValueError("step must be positive")
    return range(0, math.floor(limit / step) + 1)


def enumerate_ifunction_degrees(theta: ChamberChar, cutoff) -> list[Degree]:
    """Summation lattice of I^theta with beta_theta(beta, 1) <= cutoff.

    superscript v: beta_v in Z>=0; subscript v: beta_v in (1/3)Z<0 minus Z;
    beta_a in (1/3)Z>=0.  Every coordinate contributes a nonnegative amount to
    beta_theta, so each range is bounded separately.
    """
    cutoff = Fraction(cutoff)
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    ranges = []
    for i, v in enumerate(VARIABLES):
        e = theta.exponents[i]
        if e > 0:
            ranges.append([Fraction(n) for n in _thirds_upto(cutoff, Fraction(e))])
        else:
            # contribution |e| (k - 1) / 3 for beta_v = -k/3
            ks = [k + 1 for k in _thirds_upto(cutoff, Fraction(-e, 3)) if (k + 1) % 3]
            ranges.append([Fraction(-k, 3) for k in ks])
    ranges.append([Fraction(j, 3) for j in _thirds_upto(cutoff, Fraction(theta.exponents[3], 3))])
    out = []
    for vals in itertools.product(*ranges):
        beta = Degree(vals)
        if beta_theta(beta, 1, theta) <= cutoff:
            out.append(beta)
    out.sort(key=lambda b: (beta_theta(b, 1, theta), tuple(b)))
    return out
