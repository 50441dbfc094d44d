"""One test per acceptance criterion.  Each prints its verdict line, and the
measured numbers are shown on failure."""

from glsm_lgcy import acceptance as acc


def _check(result, report):
    report(result.summary())
    print(result.summary())
    for line in result.lines:
        print("   ", line)
    assert result.passed, "\n".join(result.lines)


def test_01_state_space_dimensions(report):
    _check(acc.check_state_dimensions(), report)


def test_02_age_table(report):
    _check(acc.check_age_table(), report)


def test_03_orbifold_riemann_roch(report):
    _check(acc.check_riemann_roch(), report)


def test_04_toric_divisors(report):
    _check(acc.check_divisor_table(), report)


def test_05_extended_gamma(report):
    _check(acc.check_extended_gamma(acc.DEFAULT_SEED), report)


def test_06_h_constants(report):
    _check(acc.check_h_constants(), report)


def test_07_gamma_factor_vs_euler_gamma(report):
    _check(acc.check_gamma_vs_euler(), report)


def test_08_leading_term(report):
    _check(acc.check_leading_term(), report)


def test_09_lgcy_term_match_and_matrices(report):
    _check(acc.check_lgcy(), report)


def test_10_mellin_barnes(report):
    _check(acc.check_mellin_barnes(), report)


def test_11_predicates(report):
    _check(acc.check_predicates(acc.DEFAULT_SEED), report)
