"""Truncated I-functions I^theta(q, hbar) and their small Givental form."""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .coh_ring import AmbientClass, NilPoly
from .degree_lattice import Degree, enumerate_ifunction_degrees, extremal_degree
from .errors import BranchAmbiguity, ZeroHbar, ZeroQ
from .gamma_kit import givental_sign
from .model_chambers import VARIABLES, ChamberChar
from .orbi_bundle import i_coefficient
from .state_space import reduce_to_state

Exponent = tuple[Fraction, Fraction, Fraction, Fraction]
LPowers = tuple[int, int, int]
NO_LOG: LPowers = (0, 0, 0)


@dataclass
class ISeries:
    """Sparse truncated series.

    ``terms`` maps the exponent of (q_x, q_y, q_z, q_a) to a log-polynomial,
    itself a map from powers of (L_x, L_y, L_z) to ambient classes, with
    L_v = log q_v.  ``shift`` is the degree of the zero exponent, so a term
    with exponent e comes from the degree e + shift.
    """

    chamber: ChamberChar
    hbar: complex | Fraction
    cutoff: Fraction
    givental: bool
    shift: Degree
    terms: dict[Exponent, dict[LPowers, AmbientClass]] = field(default_factory=dict)

    def degree_of(self, exponent: Sequence[Fraction]) -> Degree:
        return Degree(exponent) + self.shift

    def exponent_of(self, beta: Sequence[Fraction]) -> Exponent:
        return tuple(Degree(beta) - self.shift)

    def coefficient(self, beta, lpowers: LPowers = NO_LOG) -> AmbientClass:
        return self.terms.get(self.exponent_of(beta), {}).get(lpowers, AmbientClass())

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ISeries):
            return NotImplemented
        return (
            self.chamber == other.chamber
            and self.hbar == other.hbar
            and self.cutoff == other.cutoff
            and self.givental == other.givental
            and self.shift == other.shift
            and self.terms == other.terms
        )


def _check_hbar(hbar):
    if hbar == 0:
        raise ZeroHbar("hbar must be nonzero")
    return Fraction(hbar) if isinstance(hbar, int) else hbar


def build_i_series(theta: ChamberChar, hbar, cutoff) -> ISeries:
    hbar = _check_hbar(hbar)
    shift = extremal_degree(theta, 1)
    series = ISeries(theta, hbar, Fraction(cutoff), False, shift)
    for beta in enumerate_ifunction_degrees(theta, cutoff):
        series.terms[tuple(beta - shift)] = {NO_LOG: i_coefficient(beta, theta, hbar)}
    return series


def log_factor(theta: ChamberChar, hbar) -> dict[LPowers, NilPoly]:
    """prod over superscript v of q_v^(H_v/hbar) = 1 + (L_v/hbar) H_v, by L-power."""
    out: dict[LPowers, NilPoly] = {NO_LOG: NilPoly.scalar(1)}
    for i, v in enumerate(VARIABLES):
        if theta.is_subscript(v):
            continue
        nxt: dict[LPowers, NilPoly] = {}
        for pw, poly in out.items():
            nxt[pw] = poly
            bumped = tuple(p + (1 if j == i else 0) for j, p in enumerate(pw))
            nxt[bumped] = poly * NilPoly.gen(v, 1 / hbar)
        out = nxt
    return out


def build_givental(theta: ChamberChar, hbar, cutoff) -> ISeries:
    """sum_beta q^(beta + H/hbar) (-1)^(3 beta_x + 3 beta_y + 3 beta_z) I_beta.

    Exponents are the unshifted degrees beta, and classes stay on <-beta>:
    this is the convention under which the wall-crossing identity is
    homogeneous in hbar.
    """
    hbar = _check_hbar(hbar)
    zero = Degree(0, 0, 0, 0)
    series = ISeries(theta, hbar, Fraction(cutoff), True, zero)
    logs = log_factor(theta, hbar)
    for beta in enumerate_ifunction_degrees(theta, cutoff):
        base = i_coefficient(beta, theta, hbar) * givental_sign(beta)
        logpoly = {pw: base.map_polys(lambda p, f=f: p * f) for pw, f in logs.items()}
        series.terms[tuple(beta)] = {pw: c for pw, c in logpoly.items() if not c.is_zero()} or {
            NO_LOG: AmbientClass()
        }
    return series


def leading_coefficient(series: ISeries) -> AmbientClass:
    return series.terms[(Fraction(0),) * 4][NO_LOG]


def _power(q: complex, e: Fraction, log_q: complex | None) -> complex:
    if q == 0:
        if e < 0:
            raise ZeroQ("negative power of a vanishing Novikov variable")
        return 1.0 if e == 0 else 0.0
    return cmath.exp(e * log_q)


def evaluate(series: ISeries, q: Sequence[complex]) -> tuple[complex, ...]:
    """Sum the series at q on the principal branch; returns the state vector."""
    if len(q) != 4:
        raise ValueError("q has 4 entries")
    q = [complex(v) for v in q]
    logs: list[complex | None] = []
    for v in q:
        if v.imag == 0 and v.real < 0:
            raise BranchAmbiguity("q on the negative real axis")
        logs.append(cmath.log(v) if v != 0 else None)
    total = [0j] * 10
    for exponent, logpoly in series.terms.items():
        factor = 1.0 + 0j
        for i in range(4):
            factor *= _power(q[i], exponent[i], logs[i])
        if factor == 0:
            continue
        for pw, cls in logpoly.items():
            lf = factor
            for i in range(3):
                if pw[i]:
                    if logs[i] is None:
                        raise ZeroQ("log of a vanishing Novikov variable")
                    lf *= logs[i] ** pw[i]
            state = reduce_to_state(cls, series.chamber)
            for k, c in enumerate(state.coeffs):
                total[k] += lf * complex(c)
    return tuple(total)


def strip_logs(series: ISeries) -> dict[Exponent, AmbientClass]:
    return {e: lp.get(NO_LOG, AmbientClass()) for e, lp in series.terms.items()}


__all__ = [
    "ISeries",
    "build_givental",
    "build_i_series",
    "evaluate",
    "leading_coefficient",
    "log_factor",
]
