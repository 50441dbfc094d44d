"""Analytic continuation of the Givental I-function across a wall.

Moving a variable v from superscript to subscript, the sum over beta_v in
Z>=0 is rewritten as a Mellin-Barnes integral and closed on the other side.
Writing h = H_v/hbar and R(s) = Gamma(1+3s)/[Gamma(1+s-beta_a) Gamma(1+s)^2],
the continuation of sum_n q^(n+h) R_h(n) Phi(h) is

    -2 pi i sum_{beta_v} Res_{s=beta_v} q^s R(s) / (e^{2 pi i (s-h)} - 1) * Phi(h)

over beta_v in (1/3)Z<0 minus Z with beta_v - beta_a not in Z.  The overall
minus sign comes from the orientation of the contour (closing to the right
is clockwise); it is checked against direct quadrature in
``mellin_barnes_oracle``.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .coh_ring import AmbientClass, DualNum, NilPoly, frac_part, nil_mul
from .degree_lattice import Degree, enumerate_ifunction_degrees
from .errors import NotAdjacent, OutOfRegion, VanishingTerm, ZeroQ
from .gamma_kit import (
    gamma,
    gamma_factor_a,
    gamma_factor_sub,
    gamma_factor_super,
    h_constant,
    hbar_power_sub,
    hbar_power_super,
    phi_factor,
    rgamma,
    sector_of,
)
from .i_series import NO_LOG, ISeries, build_givental, log_factor
from .model_chambers import VARIABLES, ChamberChar
from .state_space import (
    iso_permutation,
    reduce_to_state,
    state_basis,
    state_iso,
    state_to_ambient,
)

TWO_PI_I = 2j * math.pi
THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class ConnectionCoeffs:
    """Continued factor = (c0 + c1 h) * I_v(beta), h = H_v/hbar."""

    frac_bx: Fraction
    frac_ba: Fraction
    c0: complex
    c1: complex


def connection_coeffs(frac_bx, frac_ba) -> ConnectionCoeffs:
    fx, fa = frac_part(Fraction(frac_bx)), frac_part(Fraction(frac_ba))
    if fx == 0 or frac_part(fx - fa) == 0:
        raise VanishingTerm(f"no continued term for <beta_v>={fx}, <beta_a>={fa}")
    e = cmath.exp(TWO_PI_I * float(fx))
    k0 = 1 / (e - 1)
    k1 = TWO_PI_I * e / (e - 1) ** 2
    g = gamma(1 - float(fa))
    pref = TWO_PI_I / (3 * gamma(float(frac_part(fx - fa))) * gamma(float(fx)) ** 2)
    return ConnectionCoeffs(fx, fa, pref * g * k0, pref * (g * k1 + g * h_constant(fa) * k0))


def kernel_dual(bx) -> DualNum:
    """1/(e^{2 pi i (bx - h)} - 1) as a dual number in h."""
    arg = DualNum(TWO_PI_I * float(bx), -TWO_PI_I)
    return 1 / (arg.exp() - 1)


def _r_function(s: complex, ba: float) -> complex:
    return gamma(1 + 3 * s) * rgamma(1 + s - ba) * rgamma(1 + s) ** 2


def numeric_residue(bx, ba, radius: float = 0.1, points: int = 64) -> complex:
    """Residue of R(s) at s = bx by the trapezoid rule on a circle."""
    c = float(bx)
    acc = 0j
    for k in range(points):
        w = cmath.exp(TWO_PI_I * k / points)
        acc += _r_function(c + radius * w, float(ba)) * w
    return acc * radius / points


def continued_factor(bx, ba) -> DualNum:
    """The continued v-factor at a fractional degree, from the theta side:
    -2 pi i Res R(s) * kernel(h) * Phi(h), without q^beta_v."""
    bx, ba = Fraction(bx), Fraction(ba)
    if bx.denominator == 1 or bx >= 0:
        raise ValueError("continued degrees are negative non-integers")
    if frac_part(bx - ba) == 0:
        raise VanishingTerm("the residue is cancelled by a zero of 1/Gamma")
    res = numeric_residue(bx, ba)
    return kernel_dual(bx) * phi_factor(frac_part(ba)) * (-TWO_PI_I * res)


def _continued_poly(beta: Degree, theta: ChamberChar, v: str, hbar) -> NilPoly:
    """Continued Givental coefficient at beta (v-entry fractional), on theta's
    sector for beta with beta_v replaced by 0.  L-free part."""
    hbar = complex(hbar)
    ba = beta.ba
    out = NilPoly.scalar(complex(gamma_factor_a(ba)))
    w = -int(3 * ba)
    for u in VARIABLES:
        bu = beta.of(u)
        if u == v:
            out = nil_mul(out, continued_factor(bu, ba).to_nil(u, 1 / hbar))
            w += hbar_power_super(0, ba)
        elif theta.is_subscript(u):
            out = out * gamma_factor_sub(bu, ba)
            w += hbar_power_sub(bu, ba)
        else:
            out = nil_mul(out, gamma_factor_super(bu, ba).to_nil(u, 1 / hbar))
            w += hbar_power_super(bu, ba)
    return out * hbar**w


def _check_move(theta: ChamberChar, v: str) -> ChamberChar:
    if v not in VARIABLES or theta.is_subscript(v):
        raise NotAdjacent(f"{v} is not a superscript variable of {theta.name}")
    return theta.moved(v)


def _transport(cls: AmbientClass, theta: ChamberChar, theta2: ChamberChar) -> AmbientClass:
    return state_to_ambient(state_iso(theta, theta2, reduce_to_state(cls, theta)))


def continue_series(series: ISeries, v: str) -> ISeries:
    """Continue a Givental series of theta in v; classes are moved to theta'
    by ``state_iso`` and terms are keyed by the theta' degrees."""
    if not series.givental:
        raise ValueError("continuation acts on the Givental form")
    theta = series.chamber
    theta2 = _check_move(theta, v)
    out = ISeries(theta2, series.hbar, series.cutoff, True, series.shift)
    logs = log_factor(theta2, series.hbar)
    for beta in enumerate_ifunction_degrees(theta2, series.cutoff):
        if frac_part(beta.of(v) - beta.ba) == 0:
            continue
        if any(theta.is_subscript(u) and frac_part(beta.of(u) - beta.ba) == 0 for u in VARIABLES):
            # broad sector: the class reduces to zero on either side
            out.terms[tuple(beta)] = {NO_LOG: AmbientClass()}
            continue
        poly = _continued_poly(beta, theta, v, series.hbar)
        sector = sector_of(beta.replace(v, 0))
        logpoly = {}
        for pw, f in logs.items():
            cls = AmbientClass.single(sector, nil_mul(poly, f))
            logpoly[pw] = _transport(cls, theta, theta2)
        out.terms[tuple(beta)] = logpoly
    return out


def _moved_variable(theta: ChamberChar, theta2: ChamberChar) -> str:
    diff = [u for u in VARIABLES if theta.is_subscript(u) != theta2.is_subscript(u)]
    if len(diff) != 1 or theta.is_subscript(diff[0]):
        raise NotAdjacent(f"{theta.name} -> {theta2.name} is not a single superscript-to-subscript move")
    return diff[0]


def lgcy_matrix(theta: ChamberChar, theta2: ChamberChar, hbar) -> np.ndarray:
    """U on the theta' basis with (continued I^theta) = U (I^theta').

    Columns are images of theta' basis slots.  On an a-untwisted pair of
    slots (v-entry 1_zeta, 1_zeta^2) the block is
        [[c0(2/3),        hbar c0(1/3)],
         [c1(2/3)/hbar,   c1(1/3)     ]]
    (arguments are <beta_v>); an a-twisted slot is scaled by c0.
    """
    if theta == theta2:
        return np.eye(10, dtype=complex)
    v = _moved_variable(theta, theta2)
    i = VARIABLES.index(v)
    hbar = complex(hbar)
    basis = state_basis(theta2)
    index = {(b.sector, b.monomial): k for k, b in enumerate(basis)}
    u = np.zeros((10, 10), dtype=complex)
    for j, b in enumerate(basis):
        m = list(b.sector.m)
        ma = m[3]
        if ma == 0:
            fx = 1 - m[i]  # <beta_v> of the degrees landing on this slot
            k = hbar_power_super(0, 0) - hbar_power_sub(fx - 1, 0)
            cc = connection_coeffs(fx, 0)
            for mv, coeff in ((THIRD, cc.c0), (2 * THIRD, cc.c1 / hbar)):
                m2 = list(m)
                m2[i] = mv
                row = index[(type(b.sector)(tuple(m2)), b.monomial)]
                u[row, j] += hbar**k * coeff
        else:
            cc = connection_coeffs(ma, 1 - ma)
            u[j, j] = cc.c0
    return u


def _state_vec(cls: AmbientClass, theta: ChamberChar) -> np.ndarray:
    return np.array([complex(c) for c in reduce_to_state(cls, theta).coeffs])


@dataclass
class TermComparison:
    degree: Degree
    lpowers: tuple[int, int, int]
    continued: np.ndarray
    predicted: np.ndarray
    rel_error: float


def term_match(theta: ChamberChar, v: str, hbar, cutoff) -> list[TermComparison]:
    """Compare every continued term with U applied to the direct theta' term."""
    theta2 = _check_move(theta, v)
    cont = continue_series(build_givental(theta, hbar, cutoff), v)
    direct = build_givental(theta2, hbar, cutoff)
    u = lgcy_matrix(theta, theta2, hbar)
    out = []
    for exponent, logpoly in cont.terms.items():
        beta = Degree(exponent)
        for pw in sorted(set(logpoly) | set(direct.terms[exponent])):
            c = _state_vec(logpoly.get(pw, AmbientClass()), theta2)
            d = _state_vec(direct.terms[exponent].get(pw, AmbientClass()), theta2)
            p = u @ d
            scale = max(np.linalg.norm(c), np.linalg.norm(p))
            err = float(np.linalg.norm(c - p) / scale) if scale else 0.0
            out.append(TermComparison(beta, pw, c, p, err))
    return out


@dataclass
class LgcyMatrix:
    source: ChamberChar
    target: ChamberChar
    hbar: complex
    cutoff: Fraction
    matrix: np.ndarray
    residual: float

    @property
    def condition_number(self) -> float:
        return float(np.linalg.cond(self.matrix))


def extract_lgcy_matrix(theta: ChamberChar, theta2: ChamberChar, cutoff, hbar) -> LgcyMatrix:
    """Fit U from the series data alone: least squares of (continued) =
    U (direct) over every term and power of log q.  Raises if the direct terms do not span."""
    if theta == theta2:
        return LgcyMatrix(theta, theta2, complex(hbar), Fraction(cutoff), np.eye(10, dtype=complex), 0.0)
    v = _moved_variable(theta, theta2)
    cont = continue_series(build_givental(theta, hbar, cutoff), v)
    direct = build_givental(theta2, hbar, cutoff)
    rows_c, rows_d = [], []
    for exponent, logpoly in cont.terms.items():
        dterm = direct.terms[exponent]
        for pw in set(logpoly) | set(dterm):
            d = _state_vec(dterm.get(pw, AmbientClass()), theta2)
            c = _state_vec(logpoly.get(pw, AmbientClass()), theta2)
            n = np.linalg.norm(d)
            if n == 0:
                continue
            rows_c.append(c / n)
            rows_d.append(d / n)
    dmat, cmat = np.array(rows_d), np.array(rows_c)
    if np.linalg.matrix_rank(dmat, tol=1e-10) < 10:
        raise ValueError("direct terms do not span the state space; raise the cutoff")
    ut, *_ = np.linalg.lstsq(dmat, cmat, rcond=None)
    resid = float(np.linalg.norm(dmat @ ut - cmat) / np.linalg.norm(cmat))
    return LgcyMatrix(theta, theta2, complex(hbar), Fraction(cutoff), ut.T, resid)


def permutation_matrix(theta: ChamberChar, theta2: ChamberChar) -> np.ndarray:
    p = np.zeros((10, 10))
    for i, j in enumerate(iso_permutation(theta, theta2)):
        p[j, i] = 1
    return p


def compose_chain(chambers, hbar) -> np.ndarray:
    """Product of the wall-crossing matrices along a chain, on the last basis."""
    last = chambers[-1]
    total = np.eye(10, dtype=complex)
    for a, b in zip(chambers, chambers[1:]):
        p = permutation_matrix(b, last)
        total = total @ (p @ lgcy_matrix(a, b, hbar) @ p.T)
    return total


def degrees_of(theta: ChamberChar) -> list[int]:
    return [b.degree for b in state_basis(theta)]


def is_degree_block_diagonal(matrix: np.ndarray, theta: ChamberChar, tol: float = 1e-12) -> bool:
    degs = degrees_of(theta)
    scale = np.abs(matrix).max()
    return all(
        abs(matrix[i, j]) <= tol * scale
        for i in range(10)
        for j in range(10)
        if degs[i] != degs[j]
    )


def is_hbar_homogeneous(theta: ChamberChar, theta2: ChamberChar, hbar, lam=2.0) -> bool:
    """U(lam hbar)_ij = lam^((deg_j - deg_i)/2) U(hbar)_ij: the map is graded
    once hbar is given degree 2."""
    degs = np.array(degrees_of(theta2))
    u1 = lgcy_matrix(theta, theta2, hbar)
    u2 = lgcy_matrix(theta, theta2, lam * complex(hbar))
    weight = lam ** ((degs[None, :] - degs[:, None]) / 2)
    return bool(np.allclose(u2, weight * u1, rtol=1e-12, atol=1e-14))


def _precision() -> int:
    return int(os.environ.get("GLSM_PRECISION", "20"))


def mellin_barnes_oracle(q: complex, frac_ba, n_terms: int = 40) -> tuple[complex, complex]:
    """Quadrature of

        J(q) = int q^s / (e^{2 pi i s} - 1) * Gamma(1+3s) / [Gamma(1+s-ba) Gamma(1+s)^2] ds

    upward along Re s = -1/6, and the matching residue sum.

    For |q| > 1/27 the contour closes to the left and J = 2 pi i sum of
    residues at s in (1/3)Z<0; these are summed from the connection
    coefficients, -(c0/Gamma(1-<ba>)) I_v(beta) q^beta per pole.  For
    |q| < 1/27 it closes to the right and J = -sum_n q^n R(n).  The upper half
    of the contour is bent off the vertical line, into the half plane where
    the integrand decays exponentially (on the vertical line it only decays
    like a power).
    """
    q = complex(q)
    ba = Fraction(frac_ba)
    if q == 0:
        raise ZeroQ("q = 0")
    if abs(q) >= 27:
        raise OutOfRegion("|q| >= 27")
    if q.imag == 0 and q.real < 0:
        raise OutOfRegion("q on the negative real axis")
    left = abs(q) > 1 / 27
    with mpmath.workdps(_precision()):
        mq = mpmath.mpc(q)
        mba = mpmath.mpf(ba.numerator) / ba.denominator
        logq = mpmath.log(mq)

        def f(s):
            return (
                mpmath.exp(s * logq)
                / (mpmath.exp(2j * mpmath.pi * s) - 1)
                * mpmath.gamma(1 + 3 * s)
                * mpmath.rgamma(1 + s - mba)
                * mpmath.rgamma(1 + s) ** 2
            )

        c = mpmath.mpf(-1) / 6
        # along the ray s = c + r e^{i phi}, |(27 q)^s| ~ exp(r (cos phi log|27q| - sin phi arg q));
        # take half the largest angle from the real axis that keeps this decaying
        log27, arg = math.log(27 * abs(q)), cmath.phase(q)
        if left:
            angle = math.pi - min(math.pi / 4, math.atan2(log27, max(-arg, 0.0)) / 2)
        else:
            angle = min(math.pi / 4, math.atan2(-log27, max(-arg, 0.0)) / 2)
        d = mpmath.expj(angle)
        lower = mpmath.quad(lambda t: f(c + 1j * t) * 1j, [-mpmath.inf, -10, 0])
        upper = mpmath.quad(lambda r: f(c + r * d) * d, [0, 5, mpmath.inf])
        quad = complex(lower + upper)
    if left:
        total = 0j
        k = 0
        count = 0
        while count < n_terms:
            k += 1
            bx = Fraction(-k, 3)
            if k % 3 == 0:
                continue
            count += 1
            if frac_part(bx - ba) == 0:
                continue
            cc = connection_coeffs(frac_part(bx), frac_part(ba))
            total += -(cc.c0 / gamma(1 - float(frac_part(ba)))) * gamma_factor_sub(bx, ba) * cmath.exp(float(bx) * cmath.log(q))
        return quad, total
    # R(n) by its term ratio, which stays finite long after Gamma(1+3n) overflows
    total, term = 0j, complex(rgamma(1 - float(ba)))
    for n in range(n_terms + 1):
        total -= term
        term *= q * (3 * n + 1) * (3 * n + 2) * (3 * n + 3) / ((n + 1 - float(ba)) * (n + 1) ** 2)
    return quad, total


__all__ = [
    "ConnectionCoeffs",
    "LgcyMatrix",
    "compose_chain",
    "connection_coeffs",
    "continue_series",
    "extract_lgcy_matrix",
    "is_degree_block_diagonal",
    "is_hbar_homogeneous",
    "kernel_dual",
    "lgcy_matrix",
    "mellin_barnes_oracle",
    "term_match",
]
