from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from glsm_lgcy.coh_ring import (
    ONE,
    AmbientClass,
    DualNum,
    NilPoly,
    SectorLabel,
    nil_inv,
    nil_mul,
)
from glsm_lgcy.errors import UnknownSector, ZeroScalarPart
from glsm_lgcy.model_chambers import THETA
from glsm_lgcy.state_space import reduce_to_state, state_basis, state_to_ambient

Hx, Hy, Hz = NilPoly.gen("x"), NilPoly.gen("y"), NilPoly.gen("z")
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
nilpolys = st.lists(rationals, min_size=8, max_size=8).map(lambda c: NilPoly(tuple(c)))
units = st.tuples(rationals.filter(bool), st.lists(rationals, min_size=7, max_size=7)).map(
    lambda t: NilPoly((t[0], *t[1]))
)


def test_mul_examples():
    assert nil_mul(1 + Hx, 1 + Hx) == 1 + 2 * Hx
    assert nil_mul(Hx, Hy) == NilPoly.from_dict({3: 1})
    assert nil_mul(nil_mul(Hx, Hy), Hz) == NilPoly.from_dict({7: 1})
    assert nil_mul(2 + Hx, 3 + Hy) == 6 + 3 * Hx + 2 * Hy + NilPoly.from_dict({3: 1})


def test_inv_examples():
    assert nil_inv(1 + Hx) == 1 - Hx
    assert nil_inv(NilPoly.scalar(2)) == NilPoly.scalar(Fraction(1, 2))
    assert nil_inv(1 + Hx + Hy) == 1 - Hx - Hy + 2 * NilPoly.from_dict({3: 1})
    with pytest.raises(ZeroScalarPart):
        nil_inv(Hx)


@given(nilpolys, nilpolys, nilpolys)
def test_ring_axioms(a, b, c):
    assert nil_mul(nil_mul(a, b), c) == nil_mul(a, nil_mul(b, c))
    assert nil_mul(a, b) == nil_mul(b, a)
    assert nil_mul(a, b + c) == nil_mul(a, b) + nil_mul(a, c)
    assert nil_mul(ONE, a) == a


@given(units)
def test_inverse_two_sided(u):
    v = nil_inv(u)
    assert nil_mul(u, v) == ONE and nil_mul(v, u) == ONE


@given(nilpolys)
def test_generators_square_to_zero(a):
    for h in (Hx, Hy, Hz):
        assert nil_mul(nil_mul(a, h), h) == NilPoly()


def test_sector_labels():
    s = SectorLabel.of_degree((Fraction(-1, 3), 0, Fraction(2, 3), Fraction(4, 3)))
    assert s.m == (Fraction(1, 3), 0, Fraction(1, 3), Fraction(2, 3))
    assert s.inverse().m == (Fraction(2, 3), 0, Fraction(2, 3), Fraction(1, 3))
    with pytest.raises(ValueError):
        SectorLabel((Fraction(1, 2), 0, 0, 0))


def test_reduce_examples():
    t = THETA["xya_z"]
    sec = SectorLabel((0, 0, Fraction(1, 3), 0))
    labels = [b.label for b in state_basis(t)]
    one = reduce_to_state(AmbientClass.single(sec, ONE), t)
    assert labels[one.coeffs.index(1)] == "(1⊗1⊗1_ζ)_1"
    hx = reduce_to_state(AmbientClass.single(sec, Hx), t)
    assert labels[hx.coeffs.index(1)] == "(H_x⊗1⊗1_ζ)_1"
    # a-twisted sector of theta^xya_z: nine points, H dies
    pts = SectorLabel((0, 0, Fraction(2, 3), Fraction(1, 3)))
    assert reduce_to_state(AmbientClass.single(pts, Hx), t).is_zero()
    assert not reduce_to_state(AmbientClass.single(pts, ONE), t).is_zero()


def test_reduce_broad_and_unknown():
    t = THETA["xya_z"]
    broad = SectorLabel((0, 0, 0, 0))
    assert reduce_to_state(AmbientClass.single(broad, ONE), t).is_zero()
    with pytest.raises(UnknownSector):
        reduce_to_state(AmbientClass.single(SectorLabel((Fraction(1, 3), 0, Fraction(1, 3), 0)), ONE), t)


@pytest.mark.parametrize("name", list(THETA))
def test_reduce_linear_idempotent_and_spanning(name):
    t = THETA[name]
    basis = state_basis(t)
    for i, b in enumerate(basis):
        cls = AmbientClass.single(b.sector, NilPoly.from_dict({b.monomial: 1}))
        s = reduce_to_state(cls, t)
        assert s.coeffs == tuple(1 if j == i else 0 for j in range(10))
        assert reduce_to_state(state_to_ambient(s), t) == s
    a = AmbientClass.single(basis[1].sector, NilPoly.from_dict({basis[1].monomial: 3}))
    b = AmbientClass.single(basis[4].sector, NilPoly.from_dict({basis[4].monomial: -2}))
    assert reduce_to_state(a + b, t) == reduce_to_state(a, t) + reduce_to_state(b, t)


def test_dual_numbers():
    d = DualNum(2, 3)
    assert (d * d).a == 4 and (d * d).b == 12
    assert (1 / d).b == pytest.approx(-3 / 4)
    e = DualNum(0.3j, 1.5).exp()
    assert e.b == pytest.approx(1.5 * e.a)
    assert d.to_nil("y", 2) == 2 + 6 * Hy
