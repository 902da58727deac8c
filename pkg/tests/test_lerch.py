import cmath
import math
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from lerchkit.errors import DivergenceError, DomainError, NoConvergenceError, PoleError
from lerchkit.lerch import (
    Domain,
    LerchPoint,
    Strategy,
    closed_form_coefficients,
    phi,
    phi_sderiv,
)
from lerchkit.numeric import EvalOptions
from lerchkit.polylog import polylog
from lerchkit.special import hurwitz_zeta

# brute-force partial sum (200 terms, tail < 1e-25)
PHI_DISK = 0.66791526031994653202 + 0.069120226233962508687j
# Phi(-e^(0.6i), -2, 0.75) from sum n z^n and sum n^2 z^n
PHI_MINUS2 = -0.12963334324595517085 - 0.0022667452515283414802j
K_OVER_PI = 0.29156090403081878014


def test_geometric():
    assert phi(0.5, 0, 0.3).value == pytest.approx(2.0, abs=1e-14)


def test_origin_keeps_first_term():
    assert phi(0, 2 + 3j, 4).value == pytest.approx(4 ** (-2 - 3j), rel=1e-15)


def test_alternating_harmonic():
    assert abs(phi(-1, 1, 1).value - math.log(2)) < 1e-12


def test_disk_reference_value():
    value, bound = oracles.brute_phi(0.3 + 0.4j, 2.5, 1.2)
    assert abs(value - PHI_DISK) < 1e-15 and bound < 1e-20
    for strategy in (Strategy.DIRECT, Strategy.HERMITE):
        assert abs(phi(0.3 + 0.4j, 2.5, 1.2, strategy=strategy).value - PHI_DISK) < 1e-12


def test_closed_form_reference_value():
    z = -cmath.exp(0.6j)
    assert abs(oracles.closed_form_phi_minus2(z, 0.75) - PHI_MINUS2) < 1e-15
    zm = oracles.mp.mpc(z)
    abel = oracles.abel_sum(lambda n: zm**n * (0.75 + n) ** 2)
    assert abs(abel - PHI_MINUS2) < 1e-12
    res = phi(z, -2, 0.75)
    assert res.strategy is Strategy.CLOSED_FORM
    assert abs(res.value - PHI_MINUS2) < 1e-13


def test_closed_form_table_small_orders():
    # Phi(z, 0, v) = w, Phi(z, -1, v) = v w + z w^2 = (v - 1) w + w^2
    assert closed_form_coefficients(0) == ((), (1,))
    assert closed_form_coefficients(1) == ((), (-1, 1), (1,))


@pytest.mark.parametrize("m", range(0, 13))
def test_closed_form_matches_mpmath(m):
    z, v = 0.3 - 0.8j, 0.6 + 0.1j
    got = phi(z, -m, v, strategy=Strategy.CLOSED_FORM).value
    ref = oracles.lerchphi(z, -m, v)
    assert abs(got - ref) <= 1e-12 * max(1, abs(ref))


def test_closed_form_outside_disk():
    z = 2.5 + 1j
    assert abs(phi(z, -3, 0.4).value - oracles.lerchphi(z, -3, 0.4)) < 1e-12 * abs(oracles.lerchphi(z, -3, 0.4))


def test_domain_classification():
    assert LerchPoint.of(0.5, 1, 1).domain is Domain.INSIDE_DISK
    assert LerchPoint.of(-1, 1, 1).domain is Domain.UNIT_CIRCLE
    assert LerchPoint.of(-1, -2, 1).domain is Domain.NONPOS_INT_S
    assert LerchPoint.of(1, 2, 1).domain is Domain.GENERAL
    assert LerchPoint.of(2, 0.5, 1).domain is Domain.GENERAL
    assert LerchPoint.of(1j, -1 + 1e-13, 1).domain is Domain.NONPOS_INT_S


def test_errors():
    with pytest.raises(PoleError):
        phi(0.5, 1, -2)
    with pytest.raises(DivergenceError):
        phi(1, 1, 1)
    with pytest.raises(DivergenceError):
        phi(1, 0.5 + 3j, 1)
    with pytest.raises(DomainError):
        phi(2, 0.5, 1)


def test_strategy_failure_names_strategy():
    opts = EvalOptions(max_terms=16)
    with pytest.raises(NoConvergenceError) as info:
        phi(0.999, 2, 1, opts, strategy=Strategy.DIRECT)
    assert "DirectSeries" in str(info.value)


def test_v_shift_is_reported():
    res = phi(1j, -2.3, -0.4 + 0.2j)
    assert res.strategy is Strategy.V_SHIFT and res.base_strategy is Strategy.HERMITE
    assert abs(res.value - oracles.lerchphi(1j, -2.3, -0.4 + 0.2j)) < 1e-12


def test_hurwitz_at_z_one():
    res = phi(1, 2.5, 0.3)
    assert res.strategy is Strategy.HURWITZ
    assert res.value == pytest.approx(hurwitz_zeta(2.5, 0.3), rel=1e-15)


@pytest.mark.parametrize("q", [2, 3, 4, 6])
@pytest.mark.parametrize("s", [0.5, 1.5, 2, -0.5, -1.7, 0.25 + 0.3j, -3.2 + 1j])
def test_unit_circle_against_mpmath(q, s):
    z = cmath.exp(2j * math.pi / q)
    ref = oracles.lerchphi(z, s, 0.7)
    assert abs(phi(z, s, 0.7).value - ref) <= 1e-11 * max(1, abs(ref))


def test_random_points_against_mpmath():
    rng = np.random.default_rng(11)
    for _ in range(60):
        if rng.uniform() < 0.5:
            z = cmath.rect(rng.uniform(0, 0.99), rng.uniform(-3, 3))
        else:
            z = cmath.exp(1j * rng.uniform(-3.1, 3.1))
        s = complex(rng.uniform(-4, 4), rng.uniform(-2, 2))
        v = complex(rng.uniform(0.1, 4), rng.uniform(-1, 1))
        ref = oracles.lerchphi(z, s, v)
        assert abs(phi(z, s, v).value - ref) <= 1e-10 * max(1, abs(ref))


def test_err_estimate_within_tolerance():
    opts = EvalOptions()
    for args in [(0.5, 2, 1), (-1, 0.5, 0.3), (0.2j, -1.5, 2), (cmath.exp(1j), -0.4, 1.2)]:
        res = phi(*args, opts)
        assert res.err_estimate <= opts.tolerance(res.value)


def test_strategy_agreement_in_disk():
    rng = np.random.default_rng(2024)
    for _ in range(200):
        z = cmath.rect(0.9 * math.sqrt(rng.uniform()), rng.uniform(-math.pi, math.pi))
        s = complex(rng.uniform(-3, 4), rng.uniform(-1, 1))
        v = complex(rng.uniform(0.2, 5), rng.uniform(-1, 1))
        direct = phi(z, s, v, strategy=Strategy.DIRECT).value
        hermite = phi(z, s, v, strategy=Strategy.HERMITE).value
        assert abs(direct - hermite) <= 1e-10 * max(1, abs(direct))
        m = round(s.real)
        if m <= 0:
            b = phi(z, m, v, strategy=Strategy.CLOSED_FORM).value
            try:
                a = phi(z, m, v, strategy=Strategy.DIRECT).value
            except NoConvergenceError as exc:
                # heavy cancellation: the direct series is not applicable here
                assert "roundoff" in str(exc)
                continue
            assert abs(a - b) <= 1e-10 * max(1, abs(a))


def test_accelerated_and_hermite_agree_on_circle():
    rng = np.random.default_rng(5)
    for _ in range(40):
        z = cmath.exp(1j * rng.uniform(-3, 3))
        s = complex(rng.uniform(0.2, 4), rng.uniform(-1, 1))
        v = complex(rng.uniform(0.5, 4), rng.uniform(-0.5, 0.5))
        a = phi(z, s, v, strategy=Strategy.ACCELERATED).value
        b = phi(z, s, v, strategy=Strategy.HERMITE).value
        assert abs(a - b) <= 1e-10 * max(1, abs(a))


points = st.tuples(
    st.floats(0, 0.9), st.floats(-math.pi, math.pi),
    st.floats(-3, 4), st.floats(-1, 1),
    st.floats(0.2, 5), st.floats(-1, 1),
)


@settings(max_examples=80, deadline=None)
@given(points)
def test_recurrence(p):
    r, t, sr, si, vr, vi = p
    z, s, v = cmath.rect(r, t), complex(sr, si), complex(vr, vi)
    lhs = phi(z, s, v).value
    rhs = z * phi(z, s, v + 1).value + cmath.exp(-s * cmath.log(v))
    assert abs(lhs - rhs) <= 1e-10 * max(1, abs(lhs))


@settings(max_examples=60, deadline=None)
@given(points)
def test_polylog_consistency(p):
    r, t, sr, si, _, _ = p
    z, s = cmath.rect(r, t), complex(sr, si)
    if abs(z) < sys.float_info.min:  # subnormal z is flushed to 0 on input
        return
    assert abs(phi(z, s, 1).value - polylog(s, z) / z) <= 1e-12 * max(1, abs(phi(z, s, 1).value))


@settings(max_examples=40, deadline=None)
@given(st.floats(1.1, 6), st.floats(-3, 3), st.floats(0.2, 5))
def test_hurwitz_consistency(sr, si, a):
    s = complex(sr, si)
    ref = oracles.lerchphi(1, s, a)
    assert abs(phi(1, s, a).value - ref) <= 1e-10 * max(1, abs(ref))


# -- s-derivatives -----------------------------------------------------------------


def test_sderiv_single_term():
    for s0 in (0.3, -2 + 1j, 4):
        expect = -math.log(2) * 2 ** (-s0)
        assert abs(phi_sderiv(0, s0, 2, 1) - expect) < 1e-13


def test_sderiv_catalan():
    assert abs(phi_sderiv(-1, -1, 0.5, 1) - K_OVER_PI) < 1e-12


def test_sderiv_finite_difference():
    h = 1e-5
    fd = (phi(-1, h, 0.3).value - phi(-1, -h, 0.3).value) / (2 * h)
    assert abs(phi_sderiv(-1, 0, 0.3, 1) - fd) < 1e-7


def test_sderiv_second_order_against_mpmath():
    z, s0, v = -cmath.exp(0.4j), 1, 0.8
    assert abs(phi_sderiv(z, s0, v, 2) - oracles.lerchphi_sderiv(z, s0, v, 2)) < 1e-10


def test_sderiv_shrinks_radius_at_z_one():
    got = phi_sderiv(1, 1.2, 1, 1)
    ref = oracles.lerchphi_sderiv(1, 1.2, 1)
    assert abs(got - ref) < 1e-9
    with pytest.raises(DivergenceError):
        phi_sderiv(1, 0.9, 1, 1)


def test_sderiv_rejects_order():
    with pytest.raises(DomainError):
        phi_sderiv(0.5, 1, 1, 3)


def test_sderiv_against_central_differences():
    rng = np.random.default_rng(77)
    h = 1e-5
    for _ in range(50):
        z = cmath.rect(rng.uniform(0, 1), rng.uniform(-3, 3))
        s0 = complex(rng.uniform(-3, 3), rng.uniform(-1, 1))
        v = complex(rng.uniform(0.3, 4), rng.uniform(-0.5, 0.5))
        fd = (phi(z, s0 + h, v).value - phi(z, s0 - h, v).value) / (2 * h)
        got = phi_sderiv(z, s0, v, 1)
        assert abs(got - fd) <= 1e-6 * max(1, abs(got))


def test_parallel_calls_agree():
    args = [(cmath.exp(0.3j * k), -1.5 + 0.1 * k, 0.5 + 0.2 * k) for k in range(1, 17)]
    serial = [phi(*a).value for a in args]
    with ThreadPoolExecutor(4) as pool:
        threaded = list(pool.map(lambda a: phi(*a).value, args))
    assert serial == threaded
