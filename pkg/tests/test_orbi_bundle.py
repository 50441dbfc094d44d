import math
from fractions import Fraction as F

import pytest

from glsm_lgcy.coh_ring import NilPoly, SectorLabel
from glsm_lgcy.degree_lattice import Degree, enumerate_ifunction_degrees
from glsm_lgcy.errors import ZeroHbar
from glsm_lgcy.model_chambers import THETA
from glsm_lgcy.orbi_bundle import (
    OrbiLineBundle,
    euler_denominator_factor,
    euler_numerator_factor,
    h0_dim,
    h1_dim,
    hbar_weight,
    i_coefficient,
    i_coefficient_poly,
)
from glsm_lgcy.state_space import reduce_to_state

T = THETA
Hx = NilPoly.gen("x")

# (x, y, z, a, R) weights typed in from the torus action, for the scalar oracle
WEIGHTS = (
    [(1, 0, 0, -1, 0)] + [(1, 0, 0, 0, 0)] * 2
    + [(0, 1, 0, -1, 0)] + [(0, 1, 0, 0, 0)] * 2
    + [(0, 0, 1, -1, 0)] + [(0, 0, 1, 0, 0)] * 2
    + [(0, 0, 0, 3, 0), (-3, 0, 0, 0, 1), (0, -3, 0, 0, 1), (0, 0, -3, 0, 1)]
)


def test_h0_h1_examples():
    assert h0_dim(F(5, 3)) == 2 and h0_dim(0) == 1 and h0_dim(F(-1, 3)) == 0
    assert h1_dim(F(-4, 3)) == 1 and h1_dim(F(-2, 3)) == 0 and h1_dim(-3) == 2
    assert OrbiLineBundle(F(5, 3)).monodromy == F(2, 3)
    with pytest.raises(ValueError):
        h0_dim(F(1, 2))


def test_euler_factor_examples():
    assert euler_denominator_factor(0, Hx, 1) == NilPoly.scalar(1)
    assert euler_denominator_factor(1, NilPoly(), 1) == NilPoly.scalar(1)
    assert euler_denominator_factor(F(5, 3), Hx, 1) == F(10, 9) + F(7, 3) * Hx
    assert euler_numerator_factor(F(-2, 3), Hx, 1) == NilPoly.scalar(1)
    assert euler_numerator_factor(F(-4, 3), NilPoly(), 1) == NilPoly.scalar(F(-1, 3))
    assert euler_numerator_factor(F(-7, 3), NilPoly(), 2) == NilPoly.scalar(F(16, 9))
    with pytest.raises(ZeroHbar):
        euler_numerator_factor(F(-7, 3), NilPoly(), 0)


def test_i_coefficient_examples():
    t = T["xya_z"]
    c = i_coefficient(Degree(0, 0, F(-1, 3), 0), t, 5)
    assert c == type(c).single(SectorLabel((0, 0, F(1, 3), 0)), NilPoly.scalar(1))
    # theta^xyza at beta_a = 1/3: the p-rows have degree -1 (empty products)
    # and L_a^3 has degree 1, so the coefficient is 1/hbar on <-beta>
    c = i_coefficient(Degree(0, 0, 0, F(1, 3)), T["xyza"], 1)
    assert c == type(c).single(SectorLabel((0, 0, 0, F(2, 3))), NilPoly.scalar(1))
    assert i_coefficient(Degree(0, 0, 0, F(1, 3)), T["xyza"], 2).items().__iter__().__next__()[1][0] == F(1, 2)
    # A-factor trigger: beta_v = 0 < beta_a = 1 gives H_x H_y H_z
    p = i_coefficient_poly(Degree(0, 0, 0, 1), T["xyza"], 1)
    assert all(p[m] == 0 for m in range(7)) and p[7] != 0


def scalar_oracle(beta, hbar):
    """Product over the 13 coordinates with all H set to zero."""
    num, den = F(1), F(1)
    for w in WEIGHTS:
        b = sum(F(c) * x for c, x in zip(w, list(beta) + [-1]))
        if b >= 0:
            for nu in range(math.ceil(b)):
                den *= (b - nu) * hbar
        else:
            for nu in range(math.floor(b) + 1, 0):
                num *= (b - nu) * hbar
    return num / den


@pytest.mark.parametrize("name", list(T))
def test_scalar_part_matches_direct_loop(name):
    t = T[name]
    for hbar in (F(1), F(-3, 2)):
        for beta in enumerate_ifunction_degrees(t, 3):
            p = i_coefficient_poly(beta, t, hbar)
            a_trigger = any(
                not t.is_subscript(v) and 0 <= beta.of(v) < beta.ba and (beta.of(v) - beta.ba).denominator == 1
                for v in "xyz"
            )
            assert p[0] == (0 if a_trigger else scalar_oracle(beta, hbar))


@pytest.mark.parametrize("name", list(T))
def test_hbar_homogeneity(name):
    t = T[name]
    for lam in (F(2), F(-1, 3)):
        for beta in enumerate_ifunction_degrees(t, 3):
            w = hbar_weight(beta, t)
            p1 = i_coefficient_poly(beta, t, 1)
            p2 = i_coefficient_poly(beta, t, lam)
            assert p2 == p1.scale_generators(1 / lam) * lam ** w


def test_broad_degrees_reduce_to_zero():
    t = T["xya_z"]
    for beta in enumerate_ifunction_degrees(t, 3):
        if (beta.bz - beta.ba).denominator == 1:
            assert reduce_to_state(i_coefficient(beta, t, 1), t).is_zero()
