from fractions import Fraction as F

import pytest

from glsm_lgcy.coh_ring import AmbientClass, NilPoly, SectorLabel
from glsm_lgcy.degree_lattice import Degree, enumerate_ifunction_degrees, extremal_degree
from glsm_lgcy.errors import BranchAmbiguity, ZeroHbar, ZeroQ
from glsm_lgcy.gamma_kit import givental_sign
from glsm_lgcy.i_series import (
    NO_LOG,
    ISeries,
    build_givental,
    build_i_series,
    evaluate,
    leading_coefficient,
    strip_logs,
)
from glsm_lgcy.model_chambers import THETA, VARIABLES
from glsm_lgcy.orbi_bundle import i_coefficient
from glsm_lgcy.state_space import reduce_to_state, unit_class, state_basis
from glsm_lgcy.wall_crossing import mellin_barnes_oracle

T = THETA


def unit_sector(theta):
    return unit_class(theta).sector


def test_cutoff_zero_is_unit():
    s = build_i_series(T["xya_z"], 1, 0)
    assert len(s) == 1
    assert leading_coefficient(s) == AmbientClass.single(unit_sector(T["xya_z"]), NilPoly.scalar(1))


def test_first_a_term_of_untwisted_chamber():
    s = build_i_series(T["xyza"], 3, 1)
    c = s.coefficient(Degree(0, 0, 0, F(1, 3)))
    assert c == AmbientClass.single(SectorLabel((0, 0, 0, F(2, 3))), NilPoly.scalar(F(1, 3)))


@pytest.mark.parametrize("name", list(T))
def test_leading_terms(name):
    t = T[name]
    unit = AmbientClass.single(unit_sector(t), NilPoly.scalar(1))
    assert leading_coefficient(build_i_series(t, 1, 1)) == unit
    sign = givental_sign(extremal_degree(t, 1))
    assert sign == (-1) ** len(t.subscript_vars)
    g = build_givental(t, 1, 1)
    assert g.terms[tuple(extremal_degree(t, 1))][NO_LOG] == unit * sign


def test_givental_log_factors():
    g = build_givental(T["xyza"], 2, 3)
    beta = Degree(1, 0, 0, 0)
    logpoly = g.terms[tuple(beta)]
    assert len(logpoly) == 8
    base = i_coefficient(beta, T["xyza"], 2) * -1
    assert logpoly[NO_LOG] == base
    # the L_y coefficient is base * H_y / hbar
    assert logpoly[(0, 1, 0)] == base.map_polys(lambda p: p * NilPoly.gen("y", F(1, 2)))


@pytest.mark.parametrize("name", list(T))
def test_givental_without_logs_matches_plain(name):
    t = T[name]
    plain = build_i_series(t, 1, 3)
    giv = build_givental(t, 1, 3)
    for exponent, cls in strip_logs(giv).items():
        beta = Degree(exponent)
        assert cls * givental_sign(beta) == plain.coefficient(beta)


@pytest.mark.parametrize("name", list(T))
def test_series_structure(name):
    t = T[name]
    for hbar in (1, 2 + 1j):
        plain = build_i_series(t, hbar, 3)
        giv = build_givental(t, hbar, 3)
        assert len(plain) == len(giv) == len(enumerate_ifunction_degrees(t, 3))
        for exponent, logpoly in plain.terms.items():
            assert set(logpoly) == {NO_LOG}
            for i, v in enumerate(VARIABLES):
                if t.is_subscript(v):
                    assert exponent[i] <= 0
        for logpoly in giv.terms.values():
            for pw, cls in logpoly.items():
                reduce_to_state(cls, t)
                assert all(not p or not t.is_subscript(v) for p, v in zip(pw, VARIABLES))


def test_zero_hbar():
    with pytest.raises(ZeroHbar):
        build_i_series(T["xyza"], 0, 1)


def test_evaluate_single_and_limits():
    t = T["xya_z"]
    s = build_i_series(t, 1, 0)
    v = evaluate(s, (0.3, 0.1j, 2, 0.5))
    i = state_basis(t).index(unit_class(t))
    assert v[i] == 1 and sum(abs(c) for c in v) == 1
    two = build_i_series(T["xyza"], 1, 1)
    assert evaluate(two, (0, 0, 0, 0)) == evaluate(build_i_series(T["xyza"], 1, 0), (0, 0, 0, 0))
    with pytest.raises(BranchAmbiguity):
        evaluate(two, (-1, 0.1, 0.1, 0.1))
    with pytest.raises(ZeroQ):
        evaluate(build_givental(T["xyza"], 1, 1), (0, 0.1, 0.1, 0.1))
    with pytest.raises(ZeroQ):
        evaluate(build_i_series(t, 1, 1), (0.1, 0.1, 0, 0.1))


def x_slice(n_max):
    """theta^xyza terms with only beta_x nonzero, as an ISeries."""
    t = T["xyza"]
    s = ISeries(t, 1, F(3 * n_max), False, Degree(0, 0, 0, 0))
    for n in range(n_max + 1):
        s.terms[(F(n), F(0), F(0), F(0))] = {NO_LOG: i_coefficient(Degree(n, 0, 0, 0), t, 1)}
    return s


def test_partial_sums_settle_inside_the_disc():
    # the q_x series has radius 1/27
    q = (0.02j, 0, 0, 0)
    for n in (25, 30):
        a = evaluate(x_slice(n), q)[0]
        b = evaluate(x_slice(n + 5), q)[0]
        assert abs(a - b) < 1e-6


def test_x_slice_against_mellin_barnes():
    # scalar part of I^xyza along q_x is F(-q_x), F(q) = sum q^n (3n)!/n!^3,
    # and the quadrature closed to the right gives -F(q)
    qx = 0.02j
    series = evaluate(x_slice(40), (qx, 0, 0, 0))[0]
    quad, partial = mellin_barnes_oracle(-qx, F(0), 40)
    assert abs(series + quad) < 1e-10
    assert abs(series + partial) < 1e-12
