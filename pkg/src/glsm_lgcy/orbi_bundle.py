"""Line bundles on P(3,1) and the Euler-factor products that make up the
I-function coefficients."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number

from .coh_ring import ONE, AmbientClass, NilPoly, SectorLabel, nil_inv, nil_mul
from .degree_lattice import Degree, beta_rho
from .errors import ZeroHbar
from .model_chambers import COORD_NAMES, VARIABLES, ChamberChar, toric_divisor


def _check_thirds(b: Fraction) -> Fraction:
    b = Fraction(b)
    if (3 * b).denominator != 1:
        raise ValueError(f"degree {b} is not in (1/3)Z")
    return b


@dataclass(frozen=True)
class OrbiLineBundle:
    """O(3*degree) on P(3,1), with deg O(n) = n/3."""

    degree: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "degree", _check_thirds(self.degree))

    @property
    def monodromy(self) -> Fraction:
        return self.degree - math.floor(self.degree)

    @property
    def h0(self) -> int:
        return h0_dim(self.degree)

    @property
    def h1(self) -> int:
        return h1_dim(self.degree)


def h0_dim(b) -> int:
    b = _check_thirds(b)
    return math.floor(b) + 1 if b >= 0 else 0


def h1_dim(b) -> int:
    b = _check_thirds(b)
    return 0 if b >= -1 else -math.floor(b) - 1


def _exact(h):
    if isinstance(h, bool) or not isinstance(h, Number):
        raise TypeError(f"hbar must be a number, got {h!r}")
    if h == 0:
        raise ZeroHbar("hbar must be nonzero")
    return Fraction(h) if isinstance(h, int) else h


def euler_denominator_factor(b, D: NilPoly, hbar) -> NilPoly:
    """prod_{nu=0}^{ceil(b)-1} (D + (b - nu) hbar)."""
    b = _check_thirds(b)
    hbar = _exact(hbar)
    out = ONE
    for nu in range(0, math.ceil(b)):
        out = nil_mul(out, D + (b - nu) * hbar)
    return out


def euler_numerator_factor(b, D: NilPoly, hbar) -> NilPoly:
    """prod_{nu=floor(b)+1}^{-1} (D + (b - nu) hbar)."""
    b = _check_thirds(b)
    hbar = _exact(hbar)
    out = ONE
    for nu in range(math.floor(b) + 1, 0):
        out = nil_mul(out, D + (b - nu) * hbar)
    return out


def divisor_poly(rho, theta: ChamberChar) -> NilPoly:
    d = toric_divisor(rho, theta)
    return sum((NilPoly.gen(v, d[v]) for v in VARIABLES if d[v]), NilPoly.scalar(0))


def a_factor(beta: Degree, v: str, theta: ChamberChar) -> NilPoly:
    """A_v = H_v when v is superscript, 0 <= beta_v < beta_a and beta_v - beta_a in Z."""
    if theta.is_subscript(v):
        return ONE
    bv, ba = beta.of(v), beta.ba
    if 0 <= bv < ba and (bv - ba).denominator == 1:
        return NilPoly.gen(v)
    return ONE


def i_coefficient_poly(beta, theta: ChamberChar, hbar) -> NilPoly:
    beta = Degree(beta)
    hbar = _exact(hbar)
    num, den = ONE, ONE
    for rho in range(len(COORD_NAMES)):
        b = beta_rho(rho, beta, 1)
        D = divisor_poly(rho, theta)
        if b < -1:
            num = nil_mul(num, euler_numerator_factor(b, D, hbar))
        elif b >= 0:
            den = nil_mul(den, euler_denominator_factor(b, D, hbar))
    for v in VARIABLES:
        num = nil_mul(num, a_factor(beta, v, theta))
    return nil_mul(num, nil_inv(den))


def i_coefficient(beta, theta: ChamberChar, hbar) -> AmbientClass:
    """Coefficient of q^(beta - beta_0) in I^theta, placed on the sector <-beta>."""
    beta = Degree(beta)
    return AmbientClass.single(SectorLabel.of_degree(beta, -1), i_coefficient_poly(beta, theta, hbar))


def hbar_weight(beta, theta: ChamberChar) -> int:
    """Net number of hbar-linear factors: numerators + A-factors - denominators."""
    beta = Degree(beta)
    w = 0
    for rho in range(len(COORD_NAMES)):
        b = beta_rho(rho, beta, 1)
        if b < -1:
            w += -math.floor(b) - 1
        elif b >= 0:
            w -= math.ceil(b)
    w += sum(1 for v in VARIABLES if a_factor(beta, v, theta) != ONE)
    return w
