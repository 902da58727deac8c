"""The Hurwitz-Lerch zeta function Phi(z, s, v) = sum_{n>=0} z^n (v + n)^(-s).

:func:`phi` dispatches between several evaluation strategies:

* direct summation with a rigorous tail bound inside the unit disk;
* a closed form for non-positive integer ``s``: ``Phi(z, -m, v)`` is
  ``(z d/dz + v)^m`` applied to ``1/(1 - z)``, a polynomial in
  ``w = 1/(1 - z)`` whose coefficients are polynomials in ``v``;
* Levin acceleration of the series on the unit circle (``Re s > 0``);
* an Abel-Plana (Hermite-type) integral, valid for ``|z| <= 1``,
  ``z != 1``, ``Re v > 0`` and every complex ``s``;
* Euler-Maclaurin Hurwitz zeta at ``z = 1``.

Arguments with small or negative ``Re v`` are moved into the integral's
domain with ``Phi(z, s, v) = z Phi(z, s, v + 1) + v^(-s)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import DivergenceError, DomainError, NoConvergenceError, PoleError
from .numeric import (
    DEFAULT_OPTIONS,
    EPS,
    EvalOptions,
    as_complex,
    cauchy_derivative,
    levin_sum,
    quad_semi_infinite,
)
from .special import hurwitz_zeta

DOMAIN_EPS = 1e-12
CLOSED_FORM_MAX_ORDER = 12


class Strategy(str, Enum):
    DIRECT = "DirectSeries"
    ACCELERATED = "AcceleratedSeries"
    CLOSED_FORM = "ClosedFormNonPosIntS"
    HERMITE = "HermiteIntegral"
    V_SHIFT = "VShiftRecurrence"
    HURWITZ = "HurwitzZeta"

    def __str__(self):
        return self.value


class Domain(str, Enum):
    INSIDE_DISK = "INSIDE_DISK"
    UNIT_CIRCLE = "UNIT_CIRCLE"
    NONPOS_INT_S = "NONPOS_INT_S"
    GENERAL = "GENERAL"


def _nonpositive_int(x: complex):
    """Return ``-x`` as an int when ``x`` is within DOMAIN_EPS of 0, -1, -2, ..."""
    m = round(x.real)
    if m <= 0 and abs(x - m) <= DOMAIN_EPS:
        return -m
    return None


@dataclass(frozen=True)
class LerchPoint:
    z: complex
    s: complex
    v: complex

    @classmethod
    def of(cls, z, s, v):
        return cls(as_complex(z), as_complex(s), as_complex(v))

    @property
    def domain(self) -> Domain:
        if _nonpositive_int(self.s) is not None:
            return Domain.NONPOS_INT_S
        r = abs(self.z)
        if r < 1 - DOMAIN_EPS:
            return Domain.INSIDE_DISK
        if abs(r - 1) <= DOMAIN_EPS and self.z != 1:
            return Domain.UNIT_CIRCLE
        return Domain.GENERAL


@dataclass(frozen=True)
class LerchResult:
    value: complex
    err_estimate: float
    strategy: Strategy
    base_strategy: Strategy | None = None  # set when the v-shift wraps another strategy


# -- strategies ---------------------------------------------------------------


def _log_terms(z: complex, s: complex, v: complex, n: np.ndarray) -> np.ndarray:
    """``log(z^n (v + n)^(-s))`` with principal logarithms."""
    return n * cmath.log(z) - s * np.log(v + n)


def _direct(z, s, v, opts):
    """Partial sums inside the disk.

    Returns ``(value, err, reason)``; ``value`` is ``None`` when the
    tolerance cannot be met and ``reason`` says why.

    The tail bound: for ``n >= N`` with ``Re(v + N) > 0`` each term is at
    most ``|z|^n |v+n|^(-Re s) exp(|Im s| |arg(v+N)|)`` and consecutive
    bounds shrink by at most ``q = |z| (1 + 1/|v+N|)^max(0, -Re s)``.
    """
    r = abs(z)
    log_r = math.log(r)
    n = 64
    while n <= opts.max_terms:
        vn = v + n
        if vn.real > 0:
            q = r * (1 + 1 / abs(vn)) ** max(0.0, -s.real)
            if q < 1:
                log_tail = (n * log_r - s.real * math.log(abs(vn))
                            + abs(s.imag) * abs(cmath.phase(vn)) - math.log1p(-q))
                tail = math.exp(log_tail) if log_tail < 700 else math.inf
                idx = np.arange(n)
                with np.errstate(all="ignore"):
                    terms = np.exp(_log_terms(z, s, v, idx))
                value = complex(terms.sum())
                err = tail + 4 * EPS * float(np.abs(terms).sum())
                if err <= opts.tolerance(value):
                    return value, err, None
                if tail <= opts.tolerance(value):
                    return None, err, "cancellation roundoff exceeds tolerance"
        n *= 2
    return None, math.inf, "tail bound not met within max_terms"


@lru_cache(maxsize=None)
def closed_form_coefficients(m: int) -> tuple:
    """Integer table ``C[k][j]`` with ``Phi(z, -m, v) = sum_k (sum_j C[k][j] v^j) w^k``.

    ``w = 1/(1 - z)`` and ``k`` runs over ``0..m+1`` (``C[0]`` is empty).
    Built by applying ``z d/dz + v``, which maps ``w^k`` to
    ``k w^(k+1) + (v - k) w^k``.
    """
    table = [[], [1]]  # m = 0: w^1
    for _ in range(m):
        new = [[0] * (len(table) + 1) for _ in range(len(table) + 1)]
        for k, poly in enumerate(table):
            for j, c in enumerate(poly):
                if c == 0:
                    continue
                new[k + 1][j] += k * c
                new[k][j + 1] += c
                new[k][j] -= k * c
        table = new
    out = []
    for row in table:
        while row and row[-1] == 0:
            row = row[:-1]
        out.append(tuple(row))
    return tuple(out)


def _closed_form(z, m, v):
    if z == 1:
        raise DivergenceError("Phi(1, -m, v) diverges")
    w = 1 / (1 - z)
    value = 0j
    scale = 0.0
    wk = 1 + 0j
    for row in closed_form_coefficients(m):
        coef = 0j
        for c in reversed(row):
            coef = coef * v + c
        value += coef * wk
        scale += abs(coef * wk)
        wk *= w
    return value, 8 * EPS * scale


def _accelerated(z, s, v, opts):
    value, err, _ = levin_sum(lambda n: np.exp(_log_terms(z, s, v, n)), opts)
    return value, err


def _hermite(z, s, v, opts):
    """Abel-Plana representation (requires ``Re v > 0``, ``|z| <= 1``, ``z != 1``).

    ``Phi = v^(-s)/2 + I1 + I2`` where, with ``L = log z`` and
    ``lam = -L``,

    ``I1 = (1/lam) int_0^inf exp(-w) (v + w/lam)^(-s) dw`` (the
    ``int_0^inf z^x (v+x)^(-s) dx`` term with the ray rotated onto
    ``arg x = -arg lam``), and

    ``I2 = i int_0^inf [z^(it) (v+it)^(-s) - z^(-it) (v-it)^(-s)] / (e^(2 pi t) - 1) dt``.
    """
    L = cmath.log(z)
    lam = -L

    def first(w):
        return np.exp(-w - s * np.log(v + w / lam))

    def second(u):
        t = u / (2 * math.pi)
        up = np.exp(1j * t * L - u - s * np.log(v + 1j * t))
        down = np.exp(-1j * t * L - u - s * np.log(v - 1j * t))
        return 1j * (up - down) / (-np.expm1(-u)) / (2 * math.pi)

    try:
        q1 = quad_semi_infinite(first, opts)
        q2 = quad_semi_infinite(second, opts)
    except NoConvergenceError as exc:
        raise NoConvergenceError(f"HermiteIntegral: {exc}", best=exc.best,
                                 err_estimate=exc.err_estimate,
                                 strategy=Strategy.HERMITE) from exc
    head = cmath.exp(-s * cmath.log(v))
    value = 0.5 * head + q1.value / lam + q2.value
    err = q1.err_estimate / abs(lam) + q2.err_estimate + 8 * EPS * abs(head)
    return value, err


def _shift(z, s, v, opts, inner):
    """Apply the recurrence until ``Re v >= 1`` and evaluate with ``inner``."""
    k = max(0, math.ceil(1 - v.real))
    idx = np.arange(k)
    head = complex(np.exp(_log_terms(z, s, v, idx)).sum()) if k else 0j
    value, err = inner(z, s, v + k, opts)
    zk = z ** k
    return head + zk * value, abs(zk) * err + 4 * EPS * abs(head), k > 0


# -- public API -----------------------------------------------------------------


def _check(z, s, v):
    if _nonpositive_int(v) is not None:
        raise PoleError(f"Phi has poles at v = 0, -1, -2, ...; got v = {v!r}")
    if z == 1 and s.real <= 1:
        raise DivergenceError("Phi(1, s, v) diverges for Re s <= 1")


def phi(z, s, v, opts: EvalOptions = DEFAULT_OPTIONS, strategy: Strategy | str | None = None) -> LerchResult:
    """Evaluate the Hurwitz-Lerch zeta function ``Phi(z, s, v)``.

    Parameters
    ----------
    z, s, v : complex
        Arguments. ``v`` must not be a non-positive integer; ``z = 1``
        requires ``Re s > 1``; ``|z| > 1`` is supported only for
        non-positive integer ``s``.
    opts : EvalOptions
        Tolerances and work limits.
    strategy : Strategy, optional
        Force a particular strategy instead of automatic dispatch (used to
        cross-check strategies against each other).

    Raises
    ------
    PoleError, DivergenceError, DomainError
        Arguments outside the supported domain.
    NoConvergenceError
        The selected strategy could not reach the tolerance.
    """
    z, s, v = as_complex(z), as_complex(s), as_complex(v)
    _check(z, s, v)
    if strategy is not None:
        return _forced(z, s, v, opts, Strategy(strategy))
    if z == 0:
        return LerchResult(cmath.exp(-s * cmath.log(v)), 0.0, Strategy.DIRECT)
    if z == 1:
        return LerchResult(hurwitz_zeta(s, v, opts), opts.tolerance(1.0), Strategy.HURWITZ)

    r = abs(z)
    m = _nonpositive_int(s)
    if r < 1 - DOMAIN_EPS:
        value, err, _ = _direct(z, s, v, opts)
        if value is not None:
            return LerchResult(value, err, Strategy.DIRECT)
    if m is not None and m <= CLOSED_FORM_MAX_ORDER:
        value, err = _closed_form(z, m, v)
        return LerchResult(value, err, Strategy.CLOSED_FORM)
    if r > 1 + DOMAIN_EPS:
        raise DomainError("|z| > 1 is supported only for non-positive integer s")
    if abs(r - 1) <= DOMAIN_EPS and s.real > 0:
        try:
            value, err = _accelerated(z, s, v, opts)
            return LerchResult(value, err, Strategy.ACCELERATED)
        except NoConvergenceError:
            pass
    return _hermite_result(z, s, v, opts)


def _hermite_result(z, s, v, opts):
    value, err, shifted = _shift(z, s, v, opts, _hermite)
    if shifted:
        return LerchResult(value, err, Strategy.V_SHIFT, Strategy.HERMITE)
    return LerchResult(value, err, Strategy.HERMITE)


def _forced(z, s, v, opts, strategy):
    if strategy is Strategy.DIRECT:
        if z == 0:
            return LerchResult(cmath.exp(-s * cmath.log(v)), 0.0, strategy)
        if abs(z) >= 1 - DOMAIN_EPS:
            raise DomainError("direct series needs |z| < 1")
        value, err, reason = _direct(z, s, v, opts)
        if value is None:
            raise NoConvergenceError(f"DirectSeries: {reason}", err_estimate=err, strategy=strategy)
        return LerchResult(value, err, strategy)
    if strategy is Strategy.CLOSED_FORM:
        m = _nonpositive_int(s)
        if m is None:
            raise DomainError("closed form needs s = 0, -1, -2, ...")
        value, err = _closed_form(z, m, v)
        return LerchResult(value, err, strategy)
    if abs(z) > 1 + DOMAIN_EPS or z == 1:
        raise DomainError(f"{strategy} needs |z| <= 1 and z != 1")
    if strategy is Strategy.ACCELERATED:
        value, err = _accelerated(z, s, v, opts)
        return LerchResult(value, err, strategy)
    if strategy in (Strategy.HERMITE, Strategy.V_SHIFT):
        if z == 0:
            return LerchResult(cmath.exp(-s * cmath.log(v)), 0.0, strategy)
        return _hermite_result(z, s, v, opts)
    if strategy is Strategy.HURWITZ:
        raise DomainError("HurwitzZeta applies only at z = 1")
    raise DomainError(f"unknown strategy {strategy}")


def phi_sderiv(z, s0, v, order: int, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """``d^order/ds^order Phi(z, s, v)`` at ``s = s0`` (order 1 or 2).

    Differentiates on a circle about ``s0``. At ``z = 1`` the circle is
    shrunk so it stays in ``Re s > 1`` (a :class:`DivergenceError` is
    raised if that is impossible) and the pole ``1/(s - 1)`` is subtracted
    before differentiating, then added back exactly.
    """
    if order not in (1, 2):
        raise DomainError("order must be 1 or 2")
    z, s0, v = as_complex(z), as_complex(s0), as_complex(v)
    if z != 1:
        return cauchy_derivative(lambda s: phi(z, s, v, opts).value, s0, order, opts)
    gap = s0.real - 1
    if gap <= 0:
        raise DivergenceError("Phi(1, s, v) is undefined for Re s <= 1")
    radius = min(opts.deriv_radius, 0.5 * gap)
    regular = cauchy_derivative(lambda s: phi(z, s, v, opts).value - 1 / (s - 1),
                                s0, order, opts, radius=radius)
    # d^k/ds^k 1/(s-1) = (-1)^k k! / (s-1)^(k+1)
    return regular + (-1) ** order * math.factorial(order) / (s0 - 1) ** (order + 1)
