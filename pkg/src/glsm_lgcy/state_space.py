"""Narrow inertia sectors, ages, and the graded 10-dimensional state space.

A sector is labeled by m = (m_x, m_y, m_z, m_a), the group element with
t_v = exp(2 pi i m_v).  For a chamber theta the sectors meeting Z(theta) are:

* superscript v: m_v = 0 (the sector m_v = m_a != 0 exists in X(theta) but
  misses Z(theta));
* subscript v: any m_v, narrow iff m_v is not in {0, m_a}.

Untwisted-by-a sectors (m_a = 0) carry the classes H_v for superscript v;
a-twisted sectors are finite sets of points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .coh_ring import (
    VAR_BIT,
    AmbientClass,
    NilPoly,
    SectorLabel,
    StateClass,
    frac_part,
    monomial_vars,
)
from .errors import UnknownSector
from .model_chambers import VARIABLES, WEIGHTS, ChamberChar

THIRDS = (Fraction(0), Fraction(1, 3), Fraction(2, 3))
ZETA = {Fraction(0): "1", Fraction(1, 3): "ζ", Fraction(2, 3): "ζ²"}


def sector_age(sector: SectorLabel) -> Fraction:
    """Sum of rotation numbers of the element on the 13 coordinate lines.

    The four orbit directions have eigenvalue 1 at a fixed point and contribute
    nothing, so this equals the age on the tangent space of X(theta).
    """
    m = sector.m
    return sum(
        (frac_part(sum(w[i] * m[i] for i in range(4))) for w in WEIGHTS), Fraction(0)
    )


def locus_dim(theta: ChamberChar, sector: SectorLabel) -> int:
    return len(theta.superscript_vars) if sector.m[3] == 0 else 0


def meets_z(theta: ChamberChar, sector: SectorLabel) -> bool:
    return all(sector.m[VARIABLES.index(v)] == 0 for v in theta.superscript_vars)


def is_narrow(theta: ChamberChar, sector: SectorLabel) -> bool:
    ma = sector.m[3]
    return all(sector.m[VARIABLES.index(v)] not in (0, ma) for v in theta.subscript_vars)


def shifted_degree(theta: ChamberChar, sector: SectorLabel, monomial: int) -> int:
    dim_z = len(theta.superscript_vars)
    deg = 2 * sector_age(sector) + 2 * (dim_z - 3) + 2 * bin(monomial).count("1")
    assert deg.denominator == 1
    return int(deg)


def basis_label(theta: ChamberChar, sector: SectorLabel, monomial: int) -> str:
    slots = []
    for i, v in enumerate(VARIABLES):
        if theta.is_subscript(v):
            slots.append("1_" + ZETA[sector.m[i]])
        else:
            slots.append(f"H_{v}" if monomial & VAR_BIT[v] else "1")
    return "(" + "⊗".join(slots) + ")_" + ZETA[sector.m[3]]


@dataclass(frozen=True)
class BasisElement:
    sector: SectorLabel
    monomial: int
    degree: int
    label: str


@dataclass(frozen=True)
class SectorRecord:
    element: tuple[int, ...]
    sector: SectorLabel
    age: Fraction
    narrow: bool
    locus_dim: int
    n_points: int | None
    basis_slots: tuple[tuple[int, int], ...]

    def element_str(self) -> str:
        names = {0: "1", 1: "ζ", 2: "ζ²"}
        return "(" + ",".join(names[e] for e in self.element) + ")"


def _sectors_of(theta: ChamberChar):
    """All sectors meeting Z(theta), indexed by (subscript m's, m_a)."""
    subs = [VARIABLES.index(v) for v in theta.subscript_vars]
    for vals in itertools.product(THIRDS, repeat=len(subs) + 1):
        m = [Fraction(0)] * 4
        for i, val in zip(subs, vals):
            m[i] = val
        m[3] = vals[-1]
        yield tuple(int(3 * v) for v in vals), SectorLabel(tuple(m))


def _slots(theta: ChamberChar, sector: SectorLabel) -> list[int]:
    if sector.m[3] != 0:
        return [0]
    sup = [VAR_BIT[v] for v in theta.superscript_vars]
    return [sum(c) for r in range(len(sup) + 1) for c in itertools.combinations(sup, r)]


@lru_cache(maxsize=None)
def _enumerate(theta: ChamberChar, include_broad: bool) -> tuple[SectorRecord, ...]:
    out = []
    for element, sector in _sectors_of(theta):
        narrow = is_narrow(theta, sector)
        if not narrow and not include_broad:
            continue
        dim = locus_dim(theta, sector)
        slots = tuple((mono, shifted_degree(theta, sector, mono)) for mono in _slots(theta, sector))
        out.append(
            SectorRecord(
                element=element,
                sector=sector,
                age=sector_age(sector),
                narrow=narrow,
                locus_dim=dim,
                n_points=3 ** len(theta.superscript_vars) if sector.m[3] != 0 else None,
                basis_slots=slots if narrow else (),
            )
        )
    return tuple(out)


def enumerate_sectors(theta: ChamberChar, include_broad: bool = False) -> list[SectorRecord]:
    """Narrow sectors meeting Z(theta), with ages and basis slots.

    ``element`` lists the exponents of zeta on the subscript variables and on
    a, matching the presentation of X(theta) as a quotient by (mu_3)^k.
    """
    return list(_enumerate(theta, include_broad))


@lru_cache(maxsize=None)
def _basis(theta: ChamberChar) -> tuple[BasisElement, ...]:
    els = []
    for rec in _enumerate(theta, False):
        for mono, deg in rec.basis_slots:
            els.append(BasisElement(rec.sector, mono, deg, basis_label(theta, rec.sector, mono)))
    els.sort(key=lambda b: (b.degree, b.label))
    return tuple(els)


def state_basis(theta: ChamberChar) -> list[BasisElement]:
    return list(_basis(theta))


@lru_cache(maxsize=None)
def _slot_index(theta: ChamberChar) -> dict[tuple[SectorLabel, int], int]:
    return {(b.sector, b.monomial): i for i, b in enumerate(_basis(theta))}


def unit_class(theta: ChamberChar) -> BasisElement:
    """1_theta: trivial a-twist, 1 on superscripts, 1_zeta on subscripts."""
    m = [Fraction(0)] * 4
    for v in theta.subscript_vars:
        m[VARIABLES.index(v)] = Fraction(1, 3)
    return _basis(theta)[_slot_index(theta)[(SectorLabel(tuple(m)), 0)]]


def degree_histogram(theta: ChamberChar) -> tuple[int, int, int, int]:
    degs = [b.degree for b in _basis(theta)]
    return tuple(degs.count(d) for d in (0, 2, 4, 6))


def reduce_to_state(c: AmbientClass, theta: ChamberChar) -> StateClass:
    index = _slot_index(theta)
    out: list = [0] * 10
    sub_mask = sum(VAR_BIT[v] for v in theta.subscript_vars)
    for sector, poly in c.items():
        m = sector.m
        ma = m[3]
        misses_z = False
        for v in theta.superscript_vars:
            mv = m[VARIABLES.index(v)]
            if mv == 0:
                continue
            if mv != ma:
                raise UnknownSector(f"{sector} is not a sector of {theta.name}")
            misses_z = True
        if misses_z:
            continue
        poly = poly.kill(sub_mask)
        if ma != 0:
            poly = poly.kill(7)
        if not is_narrow(theta, sector):
            if any(mono != 0 for mono, _ in poly.terms()):
                raise UnknownSector(f"broad sector {sector} carries H-classes")
            continue
        for mono, coeff in poly.terms():
            out[index[(sector, mono)]] += coeff
    return StateClass(theta, tuple(out))


def state_to_ambient(s: StateClass) -> AmbientClass:
    parts: dict[SectorLabel, NilPoly] = {}
    for b, c in zip(_basis(s.chamber), s.coeffs):
        p = NilPoly.from_dict({b.monomial: c})
        parts[b.sector] = parts[b.sector] + p if b.sector in parts else p
    return AmbientClass(parts)


def basis_vector(theta: ChamberChar, i: int) -> StateClass:
    return StateClass(theta, tuple(1 if j == i else 0 for j in range(10)))


def _move(theta: ChamberChar, v: str, sector: SectorLabel, mono: int):
    """Image of one basis slot when v changes side (theta is the source)."""
    i = VARIABLES.index(v)
    m = list(sector.m)
    ma = m[3]
    bit = VAR_BIT[v]
    if not theta.is_subscript(v):
        if ma == 0:
            m[i] = Fraction(2, 3) if mono & bit else Fraction(1, 3)
            mono &= ~bit
        else:
            m[i] = 1 - ma
    else:
        if ma == 0 and m[i] == Fraction(2, 3):
            mono |= bit
        m[i] = Fraction(0)
    return SectorLabel(tuple(m)), mono


def iso_permutation(theta: ChamberChar, theta2: ChamberChar) -> list[int]:
    """perm[i] = index in the theta2 basis of the image of basis element i."""
    moves = [v for v in VARIABLES if theta.is_subscript(v) != theta2.is_subscript(v)]
    index2 = _slot_index(theta2)
    perm = []
    for b in _basis(theta):
        cur, sector, mono = theta, b.sector, b.monomial
        for v in moves:
            sector, mono = _move(cur, v, sector, mono)
            cur = cur.moved(v)
        perm.append(index2[(sector, mono)])
    return perm


def state_iso(theta: ChamberChar, theta2: ChamberChar, c: StateClass) -> StateClass:
    """Transport along single-variable moves.

    Moving v from superscript to subscript sends the v-entry 1 to 1_zeta and
    H_v to 1_zeta^2 on a-untwisted sectors.  On a-twisted sectors the only
    narrow v-entry is m_v = 1 - m_a, which is where the point classes go.
    """
    if c.chamber != theta:
        raise ValueError("class does not live on the source chamber")
    perm = iso_permutation(theta, theta2)
    out: list = [0] * 10
    for i, coeff in enumerate(c.coeffs):
        out[perm[i]] = coeff
    return StateClass(theta2, tuple(out))


def poincare_pairing(theta: ChamberChar) -> list[list[Fraction]]:
    """Pairing matrix with the convention value 1/3 on dual pairs.

    The dual of a slot is the inverse sector with the complementary
    superscript monomial.  Only perfectness and degree compatibility
    (deg + deg' = 6) are meaningful; the normalization is a convention.
    """
    basis = _basis(theta)
    index = _slot_index(theta)
    full = sum(VAR_BIT[v] for v in theta.superscript_vars)
    mat = [[Fraction(0)] * 10 for _ in range(10)]
    for i, b in enumerate(basis):
        dual_mono = full & ~b.monomial if b.sector.m[3] == 0 else 0
        j = index[(b.sector.inverse(), dual_mono)]
        mat[i][j] = Fraction(1, 3)
    return mat


__all__ = [
    "BasisElement",
    "SectorRecord",
    "degree_histogram",
    "enumerate_sectors",
    "is_narrow",
    "monomial_vars",
    "poincare_pairing",
    "reduce_to_state",
    "sector_age",
    "state_basis",
    "state_iso",
    "state_to_ambient",
    "unit_class",
]
