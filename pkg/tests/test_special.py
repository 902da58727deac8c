import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from lerchkit.errors import DomainError, PoleError
from lerchkit.lerch import phi
from lerchkit.numeric import as_complex, cauchy_derivative
from lerchkit.polylog import polylog, polylog_sderiv
from lerchkit.special import (
    CONSTANT_DIGITS,
    CONSTANTS,
    EULER_GAMMA,
    bernoulli_numbers,
    beta,
    digamma,
    gamma,
    hurwitz_zeta,
    log_gamma,
    stieltjes,
)

# frozen oracle values (mpmath, 30 digits)
DIGAMMA_37_02 = 1.1690579181182169679 + 0.06193003598269765809j
GAMMA1 = -0.072815845483676724861
GAMMA0_HALF = 1.9635100260214234794  # gamma + 2 log 2
LOG_6_SQRT3_OVER_PI = 1.1963357277127096724
BETA_035_040 = 4.6088487336198331453

cplx = st.complex_numbers(max_magnitude=6, allow_nan=False, allow_infinity=False)


# -- constants ------------------------------------------------------------------------


def test_constant_digits_are_long_enough():
    for name, digits in CONSTANT_DIGITS.items():
        assert len(digits.replace(".", "").lstrip("0")) >= 20, name


def test_catalan_by_series():
    assert abs(float(oracles.catalan_series()) - CONSTANTS.catalan_K) < 1e-15


def test_apery_by_series():
    assert abs(float(oracles.zeta3_series()) - CONSTANTS.apery_zeta3) < 1e-15


def test_euler_gamma_by_limit():
    assert abs(float(oracles.euler_gamma_limit()) - CONSTANTS.euler_gamma) < 1e-15
    assert abs(stieltjes(0, 1).real - CONSTANTS.euler_gamma) < 1e-12


def test_glaisher_by_zeta_prime():
    assert abs(float(oracles.glaisher_from_zeta_prime()) - CONSTANTS.glaisher_A) < 1e-15
    # and through this package: log A = 1/12 - zeta'(-1)
    zeta_prime = cauchy_derivative(lambda s: hurwitz_zeta(s, 1), -1, 1)
    assert abs(math.exp(1 / 12 - zeta_prime.real) - CONSTANTS.glaisher_A) < 1e-12


def test_elementary_constants():
    assert CONSTANTS.pi == math.pi
    assert CONSTANTS.log2 == math.log(2)
    assert abs(CONSTANTS.log3 - math.log(3)) < 1e-16


# -- gamma family ------------------------------------------------------------------


def test_gamma_values():
    assert abs(gamma(0.5) - math.sqrt(math.pi)) < 1e-14
    assert abs(gamma(5) - 24) < 1e-12


def test_beta_matches_quadrature_oracle():
    assert abs(beta(0.35, 0.4) - BETA_035_040) < 1e-12


def test_gamma_poles():
    for z in (0, -1, -7):
        with pytest.raises(PoleError):
            gamma(z)
        with pytest.raises(PoleError):
            digamma(z)
        with pytest.raises(PoleError):
            log_gamma(z)


def test_log_gamma_real_on_positive_axis():
    for x in (0.1, 1.5, 7.3, 40):
        lg = log_gamma(x)
        assert lg.imag == 0
        assert abs(lg.real - math.lgamma(x)) < 1e-13 * max(1, abs(math.lgamma(x)))


def test_log_gamma_is_continuous_branch():
    import mpmath
    for z in (-3.5 + 0.1j, -3.5 - 0.1j, 2 + 30j, -10.2 + 4j):
        assert abs(log_gamma(z) - complex(mpmath.loggamma(z))) < 1e-12 * max(1, abs(log_gamma(z)))


def test_digamma_values():
    assert abs(digamma(1) + EULER_GAMMA) < 1e-14
    assert abs(digamma(0.5) + EULER_GAMMA + 2 * math.log(2)) < 1e-14
    assert abs(digamma(3.7 + 0.2j) - DIGAMMA_37_02) < 1e-14


@settings(max_examples=100, deadline=None)
@given(cplx)
def test_reflection(z):
    if abs(z.imag) < 1e-3:
        return
    lhs = gamma(z) * gamma(1 - z) * cmath.sin(math.pi * z) / math.pi
    assert abs(lhs - 1) < 1e-10


def test_reflection_fixed_sample():
    rng = np.random.default_rng(3)
    for _ in range(100):
        z = complex(rng.uniform(-5, 5), rng.uniform(0.05, 3) * rng.choice([-1, 1]))
        lhs = gamma(z) * gamma(1 - z) * cmath.sin(math.pi * z) / math.pi
        assert abs(lhs - 1) < 1e-10


@settings(max_examples=100, deadline=None)
@given(cplx)
def test_recurrences(z):
    if abs(z.imag) < 1e-3 and z.real <= 0.5:
        return
    g = gamma(z)
    assert abs(gamma(z + 1) - z * g) <= 1e-12 * max(1, abs(z * g))
    assert abs(digamma(z + 1) - digamma(z) - 1 / z) <= 1e-12 * max(1, abs(1 / z))


# -- Hurwitz zeta -----------------------------------------------------------------------


def test_hurwitz_values():
    assert abs(hurwitz_zeta(2, 1) - math.pi**2 / 6) < 1e-14
    assert abs(hurwitz_zeta(-1, 1) + 1 / 12) < 1e-15
    assert abs(hurwitz_zeta(3, 1) - float(oracles.zeta3_series())) < 1e-14


def test_hurwitz_bernoulli_closed_form():
    a = 0.3 + 0.2j
    assert abs(hurwitz_zeta(-1, a) + (a * a - a + 1 / 6) / 2) < 1e-15


def test_hurwitz_errors():
    with pytest.raises(PoleError):
        hurwitz_zeta(1, 0.5)
    with pytest.raises(PoleError):
        hurwitz_zeta(2, -3)


def test_bernoulli_numbers():
    b = bernoulli_numbers()
    assert b[1] == -0.5 and b[2] * 6 == 1 and b[3] == 0 and b[12] * 2730 == -691


@settings(max_examples=80, deadline=None)
@given(st.floats(-4, 6), st.floats(-3, 3), st.floats(0.2, 4), st.floats(-1, 1))
def test_hurwitz_shift(sr, si, ar, ai):
    s, a = complex(sr, si), complex(ar, ai)
    if abs(s - 1) < 1e-3:
        return
    diff = hurwitz_zeta(s, a) - hurwitz_zeta(s, a + 1)
    expect = cmath.exp(-s * cmath.log(a))
    assert abs(diff - expect) <= 1e-10 * max(1, abs(expect), abs(hurwitz_zeta(s, a)))


@settings(max_examples=60, deadline=None)
@given(st.floats(1.05, 8), st.floats(-5, 5))
def test_half_argument_multiplication(sr, si):
    s = complex(sr, si)
    lhs = hurwitz_zeta(s, 0.5)
    rhs = (2**s - 1) * hurwitz_zeta(s, 1)
    assert abs(lhs - rhs) <= 1e-10 * max(1, abs(lhs))


@pytest.mark.parametrize("s,a", [(2.5, 0.3), (-2.3 + 1j, 1.7), (0.5 + 10j, 2 - 0.5j), (-3.6, 0.9)])
def test_hurwitz_against_mpmath(s, a):
    import mpmath
    ref = complex(mpmath.zeta(s, a))
    assert abs(hurwitz_zeta(s, a) - ref) <= 1e-11 * max(1, abs(ref))


# -- Stieltjes ----------------------------------------------------------------------------


def test_stieltjes_values():
    assert abs(stieltjes(0, 1) - EULER_GAMMA) < 1e-12
    oracle = float(oracles.stieltjes1_limit())
    assert abs(oracle - GAMMA1) < 1e-14
    assert abs(stieltjes(1, 1) - GAMMA1) < 1e-12
    assert abs(stieltjes(0, 0.5) - GAMMA0_HALF) < 1e-12


def test_stieltjes_general_argument():
    import mpmath
    for n in (1, 2):
        for a in (0.3, 2.7):
            assert abs(stieltjes(n, a) - float(mpmath.stieltjes(n, a))) < 1e-11


def test_stieltjes_complex_argument_consistency():
    # gamma_0(a) = -psi(a) holds for complex a as well
    a = 0.8 + 0.4j
    assert abs(stieltjes(0, a) + digamma(a)) < 1e-12


def test_stieltjes_rejects_order():
    with pytest.raises(DomainError):
        stieltjes(3, 1)


# -- polylogarithm ---------------------------------------------------------------------------


def test_polylog_values():
    assert abs(polylog(1, 0.5) - math.log(2)) < 1e-14
    assert abs(polylog(2, 1) - math.pi**2 / 6) < 1e-14
    assert abs(polylog(0, 0.25) - 1 / 3) < 1e-15


@settings(max_examples=50, deadline=None)
@given(st.floats(0.05, 0.9), st.floats(-math.pi, math.pi), st.floats(-3, 4), st.floats(-1, 1))
def test_polylog_wiring(r, t, sr, si):
    z, s = as_complex(cmath.rect(r, t)), complex(sr, si)
    assert polylog(s, z) == z * phi(z, s, 1).value


def test_polylog_sderiv_log_form():
    w3, w23 = cmath.exp(1j * math.pi / 3), cmath.exp(2j * math.pi / 3)
    total = polylog_sderiv(0, w3) + polylog_sderiv(0, -w23)
    assert abs(total - LOG_6_SQRT3_OVER_PI) < 1e-12


def test_polylog_sderiv_finite_difference():
    h = 1e-5
    fd = (polylog(1 + h, 0.5) - polylog(1 - h, 0.5)) / (2 * h)
    assert abs(polylog_sderiv(1, 0.5, 1) - fd) < 1e-7


def test_polylog_sderiv_at_zero():
    assert polylog_sderiv(0, 0, 1) == 0


@pytest.mark.parametrize("value", [
    lambda: hurwitz_zeta(2, 1), lambda: hurwitz_zeta(-2.5, 0.7), lambda: hurwitz_zeta(-2, 0.7),
    lambda: gamma(0.5), lambda: digamma(2), lambda: log_gamma(3), lambda: beta(0.3, 0.4),
    lambda: stieltjes(1, 1), lambda: polylog(2, 0.5), lambda: polylog_sderiv(0, 0.5),
    lambda: phi(1, 2, 1).value, lambda: phi(0.5, 0, 0.3).value, lambda: phi(-1, -2, 0.4).value,
])
def test_public_functions_return_builtin_complex(value):
    assert type(value()) is complex
