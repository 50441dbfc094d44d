"""Gamma and digamma on complex arguments, their first-order (dual number)
extension, and the Gamma-ratio forms of the I-function factors.

Gamma uses the Lanczos approximation (g = 7, 9 terms) with reflection for
Re(s) < 1/2.  Digamma uses upward recurrence to |s| >= 12 followed by the
Bernoulli asymptotic series, with reflection for Re(s) < 1/2.  Both give about
14-15 significant digits away from poles.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .coh_ring import DualNum, NilPoly, SectorLabel, frac_part, nil_mul
from .degree_lattice import Degree
from .errors import PoleArgument, ZeroHbar
from .model_chambers import VARIABLES, ChamberChar

EULER_GAMMA = 0.57721566490153286060651209008240243

_LANCZOS_G = 7
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
# B_{2k} / (2k) for k = 1..8
_PSI_ASYMPTOTIC = (
    1 / 12,
    -1 / 120,
    1 / 252,
    -1 / 240,
    1 / 132,
    -691 / 32760,
    1 / 12,
    -3617 / 8160,
)


def _nonpositive_integer(s: complex) -> int | None:
    """Return n if s == -n for an integer n >= 0, else None."""
    if s.imag != 0:
        return None
    r = round(s.real)
    if r <= 0 and abs(s.real - r) <= 1e-13 * max(1.0, abs(r)):
        return -r
    return None


def gamma(s: complex) -> complex:
    s = complex(s)
    if _nonpositive_integer(s) is not None:
        raise PoleArgument(f"Gamma has a pole at {s}")
    if s.real < 0.5:
        return cmath.pi / (cmath.sin(cmath.pi * s) * gamma(1 - s))
    z = s - 1
    acc = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * acc


def rgamma(s: complex) -> complex:
    """1/Gamma(s), zero at the poles."""
    s = complex(s)
    if _nonpositive_integer(s) is not None:
        return 0j
    return 1 / gamma(s)


def digamma(s: complex) -> complex:
    s = complex(s)
    if _nonpositive_integer(s) is not None:
        raise PoleArgument(f"digamma has a pole at {s}")
    if s.real < 0.5:
        return digamma(1 - s) - cmath.pi / cmath.tan(cmath.pi * s)
    acc = 0j
    while abs(s) < 12:
        acc -= 1 / s
        s += 1
    inv2 = 1 / (s * s)
    series = 0j
    p = inv2
    for c in _PSI_ASYMPTOTIC:
        series += c * p
        p *= inv2
    return acc + cmath.log(s) - 1 / (2 * s) - series


def gamma_dual(s: complex, b: complex = 1) -> DualNum:
    """Gamma(s + b*eps) = Gamma(s) + Gamma(s) psi(s) b eps."""
    g = gamma(s)
    return DualNum(g, g * digamma(s) * b)


def rgamma_dual(s: complex, b: complex = 1) -> DualNum:
    """1/Gamma(s + b*eps), including the poles of Gamma where the value is 0
    and the derivative of 1/Gamma at -n is (-1)^n n!."""
    s = complex(s)
    n = _nonpositive_integer(s)
    if n is not None:
        return DualNum(0j, (-1) ** n * math.factorial(n) * b)
    g = gamma(s)
    return DualNum(1 / g, -digamma(s) / g * b)


def h_constant(frac_a) -> float:
    """psi(1 - <beta_a>) - psi(1) in closed form (Gauss digamma theorem)."""
    f = Fraction(frac_a)
    if f == 0:
        return 0.0
    root = math.pi / (2 * math.sqrt(3))
    if f == Fraction(1, 3):
        return root - 1.5 * math.log(3)
    if f == Fraction(2, 3):
        return -root - 1.5 * math.log(3)
    raise ValueError("argument must be 0, 1/3 or 2/3")


def phi_factor(frac_a, dual: complex = 1) -> DualNum:
    """Gamma(1 + h - <beta_a>) Gamma(1 + h)^2 / Gamma(1 + 3h) at h = dual*eps."""
    f = float(Fraction(frac_a))
    return gamma_dual(1 - f, dual) * gamma_dual(1, dual) ** 2 / gamma_dual(1, 3 * dual)


def gamma_factor_super(bv, ba, dual: complex = 1) -> DualNum:
    """Superscript-variable factor of I^{theta,Giv} without q, as a dual number
    in h = H_v/hbar:

        Gamma(1 + 3h + 3 beta_v) / [Gamma(1 + h + beta_v - beta_a) Gamma(1 + h + beta_v)^2]
        * Phi(<beta_a>)

    The middle Gamma may sit on a pole (beta_a an integer above beta_v); the
    reciprocal then vanishes to first order, which reproduces A_v = H_v.
    """
    bv, ba = Fraction(bv), Fraction(ba)
    if bv.denominator != 1 or bv < 0:
        raise ValueError("superscript degrees are nonnegative integers")
    num = gamma_dual(1 + 3 * float(bv), 3 * dual)
    den = rgamma_dual(1 + float(bv - ba), dual) * rgamma_dual(1 + float(bv), dual) ** 2
    return num * den * phi_factor(frac_part(ba), dual)


def gamma_factor_sub(bv, ba) -> complex:
    """(-1)^(3 beta_v) [Gamma(<bv - ba>)/Gamma(bv - ba + 1)] [Gamma(<bv>)/Gamma(bv + 1)]^2
    / Gamma(-3 bv)."""
    bv, ba = Fraction(bv), Fraction(ba)
    if bv.denominator == 1 or bv >= 0:
        raise ValueError("subscript degrees are negative non-integers")
    d = frac_part(bv - ba)
    if d == 0:
        raise PoleArgument("beta_v - beta_a is an integer")
    sign = -1 if (3 * bv) % 2 else 1
    r1 = gamma(float(d)) / gamma(float(bv - ba + 1))
    r2 = gamma(float(frac_part(bv))) / gamma(float(bv + 1))
    return sign * r1 * r2 * r2 / gamma(float(-3 * bv))


def gamma_factor_a(ba) -> complex:
    return rgamma(1 + 3 * float(Fraction(ba)))


def hbar_power_super(bv, ba) -> int:
    bv, ba = Fraction(bv), Fraction(ba)
    return int(bv - math.ceil(bv - ba))


def hbar_power_sub(bv, ba) -> int:
    bv, ba = Fraction(bv), Fraction(ba)
    return int(2 * math.floor(-bv) + math.floor(ba - bv) + 3 * bv + 1)


def givental_sign(beta) -> int:
    s = sum(3 * Fraction(b) for b in list(beta)[:3])
    return -1 if s % 2 else 1


def gamma_form_coefficient(beta, theta: ChamberChar, hbar) -> NilPoly | None:
    """Coefficient of I^theta at beta rebuilt from Gamma ratios.

    Returns the plain (unsigned) coefficient as a NilPoly on the sector
    <-beta>, or None when a subscript variable has beta_v - beta_a in Z (a
    broad sector, where the Gamma form is singular and the class reduces to 0).
    """
    beta = Degree(beta)
    if hbar == 0:
        raise ZeroHbar("hbar must be nonzero")
    hbar = complex(hbar)
    ba = beta.ba
    out = NilPoly.scalar(complex(gamma_factor_a(ba)))
    w = -int(3 * ba)
    for v in VARIABLES:
        bv = beta.of(v)
        if theta.is_subscript(v):
            if frac_part(bv - ba) == 0:
                return None
            out = out * gamma_factor_sub(bv, ba)
            w += hbar_power_sub(bv, ba)
        else:
            out = nil_mul(out, gamma_factor_super(bv, ba).to_nil(v, 1 / hbar))
            w += hbar_power_super(bv, ba)
    return out * (hbar**w * givental_sign(beta))


def sector_of(beta) -> SectorLabel:
    return SectorLabel.of_degree(beta, -1)
