"""Registry of the identity cases.

Every case is written exactly as the identity is stated, with principal
branches for all logarithms and non-integer powers. Left and right sides
are callables ``side(params, opts) -> complex``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from ..lerch import phi, phi_sderiv
from ..numeric import EvalOptions, clog, cpow, minus_one_pow, quad_semi_infinite
from ..polylog import polylog, polylog_sderiv
from ..special import CONSTANTS, digamma, gamma, hurwitz_zeta, stieltjes
from .domains import ComplexDisk, ComplexRect, IntRange, NearInteger, Param, RealInterval

import numpy as np

PI = math.pi
I = 1j
W3 = minus_one_pow(1, 3)  # (-1)^(1/3)
W23 = minus_one_pow(2, 3)  # (-1)^(2/3)
SQRT3 = math.sqrt(3)
POLE_MARGIN = 1e-3


class TolClass(str, Enum):
    TIGHT = "TIGHT"
    STANDARD = "STANDARD"
    LOOSE = "LOOSE"

    @property
    def bound(self) -> float:
        return {"TIGHT": 1e-10, "STANDARD": 1e-8, "LOOSE": 1e-6}[self.value]


class Status(str, Enum):
    ACTIVE = "ACTIVE"
    QUARANTINED = "QUARANTINED"


Side = Callable[[dict, EvalOptions], complex]


@dataclass(frozen=True)
class IdentityCase:
    """One identity: parameter domains, both sides and how to judge them.

    ``log_form`` marks identities whose right side is a principal logarithm;
    a discrepancy of ``2 pi i`` times an integer is then resolved by
    comparing exponentials. ``product`` marks product identities, compared
    in logarithmic form when either side is huge. ``real_params`` replaces
    some domains for the opt-in real-``m`` regime.
    """

    id: str
    title: str
    params: tuple
    lhs: Side
    rhs: Side
    golden: dict
    tol_class: TolClass = TolClass.STANDARD
    status: Status = Status.ACTIVE
    quarantine_note: str | None = None
    admissible: Callable[[dict], bool] | None = None
    log_form: bool = False
    product: bool = False
    real_params: tuple | None = None
    note: str | None = None
    feature: str | None = None  # row label in the formula table

    @property
    def tolerance(self) -> float:
        return self.tol_class.bound

    def param_names(self) -> tuple:
        return tuple(p.name for p in self.params)


# -- shared pieces ------------------------------------------------------------


def sec(x):
    return 1 / cmath.cos(x)


def _phi(z, s, v, opts):
    return phi(z, s, v, opts).value


def _clear(values, margin=POLE_MARGIN) -> bool:
    return all(abs(x) > margin for x in values)


def _theta(j, n):
    return PI * j / (2 * n + 1)


def _root_sum(n, s, v, opts, order=1):
    """``sum_j (-1)^j e^(i pi j/(2n+1)) Phi^(order)(-e^(2 i pi j/(2n+1)), s, v)``."""
    total = 0j
    for j in range(2 * n + 1):
        t = _theta(j, n)
        total += (-1) ** j * cmath.exp(I * t) * phi_sderiv(-cmath.exp(2 * I * t), s, v, order, opts)
    return total


def _alt_root_sum(n, a, opts, order):
    """``sum_j (-1)^(j(1/(2n+1)+1)) Phi^(order)(-e^(2 i pi j/(2n+1)), 1, a)``."""
    total = 0j
    for j in range(2 * n + 1):
        weight = minus_one_pow(j * (2 * n + 2), 2 * n + 1)
        total += weight * phi_sderiv(-cmath.exp(2 * I * _theta(j, n)), 1, a, order, opts)
    return total


def _exp_phi_product(p, opts):
    """``prod_j exp((-1)^(j-n) e^(i pi j/(2n+1)) Phi'(-e^(2 i pi j/(2n+1)), 0, x) / (2n+1))``."""
    n, x = p["n"], p["x"]
    total = 0j
    for j in range(2 * n + 1):
        t = _theta(j, n)
        total += (-1) ** (j - n) * cmath.exp(I * t) * phi_sderiv(-cmath.exp(2 * I * t), 0, x, 1, opts)
    return cmath.exp(total / (2 * n + 1))


# -- I01 / I02 / I03: the main sum and its relatives ---------------------------


def i01_v(alpha):
    return (1 - I * clog(cmath.exp(I * alpha))) / 2


def i01_lhs(p, opts):
    k, m, n = p["k"], p["m"], p["n"]
    v = i01_v(p["alpha"])
    total = 0j
    for j in range(2 * n + 1):
        t = _theta(j, n) + m
        total += (-1) ** j * cmath.exp(I * t) * _phi(-cmath.exp(2 * I * t), -k, v, opts)
    return total


def i01_rhs(p, opts):
    k, m, n = p["k"], p["m"], p["n"]
    log_a = clog(cmath.exp(I * p["alpha"]))
    N = 2 * n + 1
    v = (2 * n - I * log_a + 1) / (4 * n + 2)
    return (cpow(I, -k) * (-1) ** n * N * cpow(I * N, k) * cmath.exp(I * m * N)
            * _phi(-cmath.exp(2 * I * m * N), -k, v, opts))


def i01_ok(p):
    n, m = p["n"], p["m"]
    angles = [_theta(j, n) + m for j in range(2 * n + 1)] + [(2 * n + 1) * m]
    return _clear([cmath.cos(t) for t in angles])


def i02_lhs(p, opts):
    k, a, m, n = p["k"], p["a"], p["m"], p["n"]
    total = 0j
    for j in range(2 * n + 1):
        weight = minus_one_pow(j * (2 * n + 2), 2 * n + 1)
        total += weight * _phi(-cmath.exp(I * (2 * _theta(j, n) + m)), -k, a, opts)
    return total


def i02_rhs(p, opts):
    k, a, m, n = p["k"], p["a"], p["m"], p["n"]
    N = 2 * n + 1
    return ((-1) ** n * cpow(N, k + 1) * cmath.exp(I * m * n)
            * _phi(-cmath.exp(I * m * N), -k, (a + n) / N, opts))


def i02_ok(p):
    n, m = p["n"], p["m"]
    angles = [_theta(j, n) + m / 2 for j in range(2 * n + 1)] + [(2 * n + 1) * m / 2]
    return _clear([cmath.cos(t) for t in angles])


def i03_lhs(p, opts):
    n, m = p["n"], p["m"]
    return sum((-1) ** j * sec(_theta(j, n) + m) for j in range(2 * n + 1))


def i03_rhs(p, opts):
    n, m = p["n"], p["m"]
    return (-1) ** n * (2 * n + 1) * sec(2 * m * n + m)


# -- I04 / I05: functional equations ------------------------------------------


def i04_lhs(p, opts):
    return _phi(p["z"], p["s"], p["a"], opts)


def i04_rhs(p, opts):
    z, s, a = p["z"], p["s"], p["a"]
    return (cpow(3, 1 - s) * z * _phi(z**3, s, (a + 1) / 3, opts)
            - W23 * _phi(-W3 * z, s, a, opts)
            + W3 * _phi(W23 * z, s, a, opts))


def i05_lhs(p, opts):
    return _phi(-p["z"], p["s"], p["a"], opts)


def i05_rhs(p, opts):
    z, s, a = p["z"], p["s"], p["a"]

    def r(k):
        return minus_one_pow(k, 5)

    return (cpow(5, 1 - s) * z**2 * _phi(-z**5, s, (a + 2) / 5, opts)
            + r(3) * _phi(r(1) * z, s, a, opts)
            + r(1) * _phi(-r(2) * z, s, a, opts)
            - r(2) * (r(2) * _phi(r(3) * z, s, a, opts) + _phi(-r(4) * z, s, a, opts)))


# -- I06 / I07 / I21 / I22: cube-root-of-unity evaluations ---------------------


def i06_lhs(p, opts):
    a = p["a"]
    return W3 * phi_sderiv(W23, 0, a, 1, opts) - W23 * phi_sderiv(-W3, 0, a, 1, opts)


def i06_rhs(p, opts):
    a = p["a"]
    return clog(2 * PI * cpow(3, 0.5 - a) * gamma(a) / gamma((a + 1) / 3) ** 3)


def i07_lhs(p, opts):
    a = p["a"]
    return W3 * phi_sderiv(-W23, 0, a, 1, opts) - W23 * phi_sderiv(W3, 0, a, 1, opts)


def i07_rhs(p, opts):
    a = p["a"]
    ratio = cpow(gamma((a - 2) / 2) / gamma((a - 1) / 2), 1 / 3)
    denom = cpow((a - 2) * cmath.sqrt(a - 1), 2 / 3) * gamma((a - 2) / 6)
    return 3 * clog(SQRT3 * ratio * gamma((a + 1) / 6) / denom) + math.log(2)


def i07_ok(p):
    a = p["a"]
    return abs(a - 1) > 0.05 and abs(a - 2) > 0.05


def i21_lhs(p, opts):
    a = p["a"]
    return W23 * phi_sderiv(W3, 0, a, 1, opts) - W3 * phi_sderiv(-W23, 0, a, 1, opts)


def i21_rhs(p, opts):
    a = p["a"]
    return clog(12 * SQRT3 * gamma((a + 1) / 2) * gamma((a + 4) / 6) ** 3
                / (gamma(a / 2) * gamma((a + 1) / 6) ** 3))


def i22_lhs(p, opts):
    a = p["a"]
    return (1 - I * SQRT3) * _phi(W3, 1, a, opts) + (1 + I * SQRT3) * _phi(-W23, 1, a, opts)


def i22_rhs(p, opts):
    a = p["a"]
    return -digamma(a / 2) - digamma((a + 1) / 6) + digamma((a + 1) / 2) + digamma((a + 4) / 6)


# -- I08 - I11, I23, I30: trigonometric products ------------------------------


def i08_lhs(p, opts):
    m, r, n = p["m"], p["r"], p["n"]
    out = 1 + 0j
    for j in range(2 * n + 1):
        num = cmath.cos((m + 2 * j * PI / (1 + 2 * n) + r) / 2) + cmath.sin((m - r) / 2)
        den = cmath.cos((m + 2 * m * n + 2 * j * PI + r + 2 * n * r) / (2 + 4 * n)) - cmath.sin((m - r) / 2)
        out *= (num / den) ** ((-1) ** j)
    return out


def i08_rhs(p, opts):
    m, r, n = p["m"], p["r"], p["n"]
    base = -cmath.sin((m * (2 + 4 * n) + PI) / 4) / (
        cmath.tan((PI + 2 * r + 4 * n * r) / 4) * cmath.sin(m * (0.5 + n) - PI / 4))
    return base ** ((-1) ** n)


def i08_ok(p):
    m, r, n = p["m"], p["r"], p["n"]
    vals = []
    for j in range(2 * n + 1):
        vals.append(cmath.cos((m + 2 * j * PI / (1 + 2 * n) + r) / 2) + cmath.sin((m - r) / 2))
        vals.append(cmath.cos((m + 2 * m * n + 2 * j * PI + r + 2 * n * r) / (2 + 4 * n)) - cmath.sin((m - r) / 2))
    vals += [cmath.sin((m * (2 + 4 * n) + PI) / 4), cmath.sin(m * (0.5 + n) - PI / 4),
             cmath.sin((PI + 2 * r + 4 * n * r) / 4), cmath.cos((PI + 2 * r + 4 * n * r) / 4)]
    return _clear(vals)


def _i09_ratio(u, w):
    return ((-1 + cmath.sin(u)) * (1 + cmath.sin(w))) / ((1 + cmath.sin(u)) * (-1 + cmath.sin(w)))


def i09_lhs(p, opts):
    x, b, n = p["x"], p["b"], p["n"]
    out = 1 + 0j
    for j in range(2 * n + 1):
        t = _theta(j, n)
        e = cmath.exp(-2 * (-1) ** j * sec(t + x) * sec(t + x / b) * cmath.sin((b - 1) * x / (2 * b))
                      * cmath.sin((2 * t + x + x / b) / 2))
        out *= e * cpow(_i09_ratio(t + x, t + x / b), (-1) ** j / 2)
    return out


def i09_rhs(p, opts):
    x, b, n = p["x"], p["b"], p["n"]
    X = x + 2 * n * x
    e = cmath.exp(2 * (-1) ** n * (1 + 2 * n) * (cmath.cos(X) - cmath.cos(X / b))
                  / (cmath.cos((b - 1) * X / b) + cmath.cos((1 + b) * X / b)))
    return e * cpow(_i09_ratio(X, X / b), (-1) ** n / 2)


def i09_ok(p):
    x, b, n = p["x"], p["b"], p["n"]
    X = (2 * n + 1) * x
    vals = [cmath.cos(X), cmath.cos(X / b), cmath.cos((b - 1) * X / b) + cmath.cos((1 + b) * X / b)]
    for j in range(2 * n + 1):
        t = _theta(j, n)
        vals += [cmath.cos(t + x), cmath.cos(t + x / b)]
    return _clear(vals)


def _i10_ratio(u):
    return ((cmath.sin(u / 2) + 1) ** 3 * (cmath.sin(u) - 1)) / ((cmath.sin(u / 2) - 1) ** 3 * (cmath.sin(u) + 1))


def i10_lhs(p, opts):
    x, n = p["x"], p["n"]
    out = 1 + 0j
    for j in range(2 * n + 1):
        t = _theta(j, n)
        head = (2 / (cmath.sin(t + x / 4) + 1) - 1) ** ((-1) ** j)
        ratio = ((cmath.sin(t + x / 2) + 1) ** 3 * (cmath.sin(t + x) - 1)) / (
            (cmath.sin(t + x / 2) - 1) ** 3 * (cmath.sin(t + x) + 1))
        out *= head * cpow(ratio, (-1) ** j / 2)
    return out


def i10_rhs(p, opts):
    x, n = p["x"], p["n"]
    X = (2 * n + 1) * x
    return (2 / (cmath.sin(X / 4) + 1) - 1) ** ((-1) ** n) * cpow(_i10_ratio(X), (-1) ** n / 2)


def i10_ok(p):
    x, n = p["x"], p["n"]
    X = (2 * n + 1) * x
    vals = [cmath.cos(X), cmath.cos(X / 2), 2 / (cmath.sin(X / 4) + 1) - 1]
    for j in range(2 * n + 1):
        t = _theta(j, n)
        vals += [cmath.cos(t + x), cmath.cos(t + x / 2), 2 / (cmath.sin(t + x / 4) + 1) - 1]
    return _clear(vals)


def i11_lhs(p, opts):
    x, n = p["x"], p["n"]
    out = 1 + 0j
    for j in range(2 * n + 1):
        t = _theta(j, n)
        e = I * PI * (-1) ** j / 2
        first = ((cmath.sin(t - x) - 1) * (cmath.sin(t - x / 2) + 1)) / (
            (cmath.sin(t - x) + 1) * (cmath.sin(t - x / 2) - 1))
        second = ((cmath.sin(t + x / 2) + 1) * (cmath.sin(t + x) - 1)) / (
            (cmath.sin(t + x / 2) - 1) * (cmath.sin(t + x) + 1))
        out *= cpow(first, e) * cpow(second, e) * cmath.exp(
            (-1) ** j * (-sec(t - x) + sec(t - x / 2) + sec(t + x / 2) - sec(t + x)))
    return out


def i11_rhs(p, opts):
    x, n = p["x"], p["n"]
    X = (2 * n + 1) * x
    e = I * PI * (-1) ** n / 2
    A = ((cmath.sin(X / 2) + 1) * (cmath.sin(X) - 1)) / ((cmath.sin(X / 2) - 1) * (cmath.sin(X) + 1))
    return cpow(A, e) * cpow(1 / A, e) * cmath.exp(
        2 * (-1) ** n * (2 * n + 1) * (cmath.cos(X / 2) - 1) * (sec(X / 2) + 2) * sec(X))


def i11_ok(p):
    x, n = p["x"], p["n"]
    X = (2 * n + 1) * x
    vals = [cmath.cos(X), cmath.cos(X / 2)]
    for j in range(2 * n + 1):
        t = _theta(j, n)
        vals += [cmath.cos(t + x), cmath.cos(t - x), cmath.cos(t + x / 2), cmath.cos(t - x / 2)]
    return _clear(vals)


def i23_lhs(p, opts):
    x, n = p["x"], p["n"]
    out = 1 + 0j
    for j in range(2 * n + 1):
        t = _theta(j, n)
        sign = cmath.exp(I * PI * j)
        A = ((cmath.sin(t + x / 2) + 1) * (cmath.sin(t + x) - 1)) / (
            (cmath.sin(t + x / 2) - 1) * (cmath.sin(t + x) + 1))
        B = 2 * sign * (sec(t + x / 2) - sec(t + x))
        out *= A ** ((-1) ** j * (2 * n + 1)) * (cmath.cos(B) - I * cmath.sin(B))
    return out


def i23_rhs(p, opts):
    x, n = p["x"], p["n"]
    X = (2 * n + 1) * x
    C = 4 * cmath.exp(I * PI * n) * (2 * n + 1) * cmath.sin(X / 4) ** 2 * (sec(X / 2) + 2) * sec(X)
    base = (1 / cmath.sin((2 * X + PI) / 4)) * sec((X + PI) / 4) * (cmath.cos(3 * X / 4) - cmath.sin(X / 4))
    return 2.0 ** (-2 * (-1) ** n * (2 * n + 1)) * (I * cmath.sin(C) + cmath.cos(C)) * base ** (2 * (-1) ** n * (2 * n + 1))


def i23_ok(p):
    x, n = p["x"], p["n"]
    X = (2 * n + 1) * x
    vals = [cmath.cos(X), cmath.cos(X / 2), cmath.sin((2 * X + PI) / 4), cmath.cos((X + PI) / 4),
            cmath.cos(3 * X / 4) - cmath.sin(X / 4)]
    for j in range(2 * n + 1):
        t = _theta(j, n)
        vals += [cmath.cos(t + x), cmath.cos(t + x / 2)]
    return _clear(vals)


def i30_lhs(p, opts):
    m, n = p["m"], p["n"]
    out = 1 + 0j
    for j in range(2 * n + 1):
        out *= (1 - 2 / (1 + sec(j * PI / (1 + 2 * n)) * cmath.sin(m))) ** ((-1) ** j)
    return out


def i30_rhs(p, opts):
    m, n = p["m"], p["n"]
    return -(cmath.sin(m / 2 + m * n - PI / 4) / cmath.sin(m / 2 + m * n + PI / 4)) ** (2 * (-1) ** n)


def i30_ok(p):
    m, n = p["m"], p["n"]
    vals = [cmath.sin(m / 2 + m * n - PI / 4), cmath.sin(m / 2 + m * n + PI / 4)]
    for j in range(2 * n + 1):
        q = sec(j * PI / (1 + 2 * n)) * cmath.sin(m)
        vals += [1 + q, q - 1]
    return _clear(vals)


# -- I12, I27, I31: gamma-ratio products ---------------------------------------


def i12_rhs(p, opts):
    n, x = p["n"], p["x"]
    return 1 / math.sqrt(2 * (1 + 2 * n)) * gamma((n + x) / (2 + 4 * n)) / gamma((1 + 3 * n + x) / (2 + 4 * n))


def i27_lhs(p, opts):
    n = p["n"]
    total = 0j
    for j in range(2 * n + 1):
        t = _theta(j, n)
        total += (-1) ** (j - n) * cmath.exp(-I * t) * polylog_sderiv(0, -cmath.exp(2 * I * t), 1, opts)
    return cmath.exp(total / (2 * n + 1))


def i27_rhs(p, opts):
    n = p["n"]
    return math.sqrt(4 * n + 2) * gamma((3 * n + 2) / (4 * n + 2)) / gamma((n + 1) / (4 * n + 2))


def i31_integral(n, x, opts):
    """``int_0^inf t^((n+x)/(4n+2) - 1) / (1+t)^((3n+x+1)/(4n+2)) dt`` by quadrature."""
    a = (n + x) / (4 * n + 2)
    b = (3 * n + x + 1) / (4 * n + 2)

    def f(t):
        return np.exp((a - 1) * np.log(t) - b * np.log1p(t))

    return quad_semi_infinite(f, opts).value


def i31_rhs(p, opts):
    n, x = p["n"], p["x"]
    return i31_integral(n, x, opts) / (math.sqrt(2 * PI) * math.sqrt(2 * n + 1))


# -- I13 - I16: constants ---------------------------------------------------------


def i13_rhs(p, opts):
    n = p["n"]
    return PI / 4 * (-1) ** n * (-2 * clog(I * (2 * n + 1)) + I * PI + 2 * CONSTANTS.euler_gamma
                                  + clog(64 * PI**6 / gamma(0.25) ** 8))


def i14_rhs(p, opts):
    n = p["n"]
    return CONSTANTS.catalan_K / PI * (-1) ** n * (2 * n + 1) ** 2


def i15_rhs(p, opts):
    n = p["n"]
    A = CONSTANTS.glaisher_A
    return (-1) ** n * (2 * n + 1) ** 2 / 8 * clog(A**24 / (4 * 2 ** (2 / 3) * math.e**2 * (2 * n + 1) ** 2))


def i16_rhs(p, opts):
    n = p["n"]
    return 7 * (-1) ** n * (2 * n + 1) ** 3 / (4 * PI**2) * CONSTANTS.apery_zeta3


# -- I17 - I20: polylogarithm forms -------------------------------------------


def i17_lhs(p, opts):
    k, m, n = p["k"], p["m"], p["n"]
    total = 0j
    for j in range(2 * n + 1):
        t = _theta(j, n)
        total += (-1) ** j * cmath.exp(I * t) * _phi(-cmath.exp(2 * I * (t + m)), k, n + 1, opts)
    return total


def i17_rhs(p, opts):
    k, m, n = p["k"], p["m"], p["n"]
    N = 2 * n + 1
    return -(-1) ** n * cpow(N, 1 - k) * cmath.exp(-2 * I * m * (n + 1)) * polylog(k, -cmath.exp(2 * I * m * N), opts)


def i17_ok(p):
    n, m = p["n"], p["m"]
    # keep the arguments of Phi and Li away from z = 1
    zs = [-cmath.exp(2 * I * (_theta(j, n) + m)) for j in range(2 * n + 1)]
    zs.append(-cmath.exp(2 * I * m * (2 * n + 1)))
    return _clear([z - 1 for z in zs])


def _li_pair(order_s):
    def lhs(p, opts):
        return polylog_sderiv(order_s, W3, 1, opts) + polylog_sderiv(order_s, -W23, 1, opts)
    return lhs


def i18_rhs(p, opts):
    return math.log(6 * SQRT3 / PI)


def i19_rhs(p, opts):
    return clog(36 * 2 ** (2 / 3) * 3**0.25 * math.e**2 / CONSTANTS.glaisher_A**24)


def i20_rhs(p, opts):
    return CONSTANTS.log2 * CONSTANTS.log3


# -- I24: finite trigonometric sum --------------------------------------------


def i24_lhs(p, opts):
    m, n = p["m"], p["n"]
    N = 1 + 2 * n
    total = 0j
    for j in range(2 * n + 1):
        c = cmath.cos(2 * m) + cmath.cos(2 * j * PI / N)
        total += (cmath.exp(I * j * (1 + 1 / N) * PI) / c**2
                  * ((1 + n) * c - I * cmath.sin(2 * j * PI / N)))
    return total


def i24_rhs(p, opts):
    m, n = p["m"], p["n"]
    # the denominator argument is m(1+2)n as printed
    return ((-1) ** n * (1 + 2 * n) ** 2 * cmath.sin(2 * m * (1 + n))
            / (2 * (cmath.sin(2 * m) * cmath.cos(m * (1 + 2) * n) ** 2)))


def i24_ok(p):
    m, n = p["m"], p["n"]
    N = 1 + 2 * n
    vals = [cmath.sin(2 * m), cmath.cos(m * 3 * n), cmath.cos(m * N)]
    vals += [cmath.cos(2 * m) + cmath.cos(2 * j * PI / N) for j in range(N)]
    return _clear(vals)


# -- I25 / I26: Stieltjes constants ---------------------------------------------


def _pq(n, a):
    return (a + n) / (4 * n + 2), (a + 3 * n + 1) / (4 * n + 2)


def i25_lhs(p, opts):
    return _alt_root_sum(p["n"], p["a"], opts, 1)


def i25_rhs(p, opts):
    n, a = p["n"], p["a"]
    P, Q = _pq(n, a)
    return (-1) ** n / 2 * (-stieltjes(1, P, opts) + stieltjes(1, Q, opts)
                            + math.log(4 * n + 2) * (digamma(P) - digamma(Q)))


def i26_lhs(p, opts):
    return _alt_root_sum(p["n"], p["a"], opts, 2)


def i26_rhs(p, opts):
    n, a = p["n"], p["a"]
    P, Q = _pq(n, a)
    g1 = stieltjes(1, P, opts) - stieltjes(1, Q, opts)
    g2 = stieltjes(2, P, opts) - stieltjes(2, Q, opts)
    logs = math.log(2 * n + 1) * math.log(8 * n + 4) + math.log(2) ** 2
    return (-1) ** n / 2 * (g2 + 2 * math.log(4 * n + 2) * g1 - logs * (digamma(P) - digamma(Q)))


# -- I28 / I29 --------------------------------------------------------------------


def i28_lhs(p, opts):
    n = p["n"]
    total = 0j
    for j in range(2 * n + 1):
        t = _theta(j, n)
        total += (-1) ** j * cmath.exp(-I * t) * clog(1 + cmath.exp(2 * I * t))
    return total


def i28_rhs(p, opts):
    n = p["n"]
    return -(-1) ** n / 2 * (digamma((n + 1) / (4 * n + 2)) - digamma((3 * n + 2) / (4 * n + 2)))


def i29_lhs(p, opts):
    k, n = p["k"], p["n"]
    total = 0j
    for j in range(2 * n + 1):
        t = _theta(j, n)
        total += (-1) ** j * cmath.exp(-I * t) * polylog(-k, -cmath.exp(2 * I * t), opts)
    return total


def i29_rhs(p, opts):
    k, n = p["k"], p["n"]
    N = 2 * n + 1
    zeta_diff = hurwitz_zeta(-k, (n + 1) / (4 * n + 2), opts) - hurwitz_zeta(-k, (3 * n + 2) / (4 * n + 2), opts)
    return I * cpow(I / 2, -k) * (-1) ** n * cpow(I * N, k + 1) * zeta_diff


def i29_ok(p):
    return abs(p["k"] + 1) > 0.05


# -- registry ---------------------------------------------------------------------

_N4 = Param("n", IntRange(0, 4))
_N3 = Param("n", IntRange(0, 3))
_M_COMPLEX = Param("m", ComplexRect((-1.5, 1.5), (0.05, 1.0)))
_M_REAL = Param("m", RealInterval(-1.5, 1.5))
_A_COMPLEX = Param("a", ComplexRect((0.3, 3.0), (-0.5, 0.5)))
_X = Param("x", RealInterval(0.2, 3.0))

CASES: tuple = (
    IdentityCase(
        "I01-main-functional-sum", "Alternating root-of-unity sum of Phi at shifted angles",
        (Param("k", IntRange(-3, 3)), Param("alpha", RealInterval(-0.5, 3.0)), _M_COMPLEX, _N4),
        i01_lhs, i01_rhs, {"k": 1, "alpha": 0.7, "m": 0.3 + 0.4j, "n": 2},
        admissible=i01_ok, real_params=(_M_REAL,),
        note="a = exp(i alpha); real m is an opt-in regime reported separately"),
    IdentityCase(
        "I02-alternate-functional-sum", "Functional equation in the alternate parameterization",
        (Param("k", IntRange(-3, 3)), _A_COMPLEX, _M_COMPLEX, _N4),
        i02_lhs, i02_rhs, {"k": 1, "a": 0.8 + 0.2j, "m": 0.3 + 0.4j, "n": 2},
        admissible=i02_ok, real_params=(_M_REAL,)),
    IdentityCase(
        "I03-degenerate-secant", "Alternating secant sum (k = 0 specialization)",
        (Param("n", IntRange(0, 6)), Param("m", RealInterval(-1.5, 1.5))),
        i03_lhs, i03_rhs, {"n": 1, "m": 0.3}, tol_class=TolClass.TIGHT, admissible=i01_ok),
    IdentityCase(
        "I04-functional-eq-n1", "Three-term functional equation in z",
        (Param("z", ComplexDisk(0, 0.9)), Param("s", NearInteger((-2, -1, 0, 1, 2), 0.3)), _A_COMPLEX),
        i04_lhs, i04_rhs, {"z": 0.5 + 0.3j, "s": 1.3 + 0.2j, "a": 0.7}),
    IdentityCase(
        "I05-functional-eq-n2", "Five-term functional equation in z",
        (Param("z", ComplexDisk(0, 0.9)), Param("s", NearInteger((-2, -1, 0, 1, 2), 0.3)), _A_COMPLEX),
        i05_lhs, i05_rhs, {"z": 0.5 + 0.3j, "s": 1.3 + 0.2j, "a": 0.7}),
    IdentityCase(
        "I06-log-gamma-cube-root", "Phi' at cube roots of unity as a log-gamma combination",
        (Param("a", RealInterval(0.2, 5.0)),), i06_lhs, i06_rhs, {"a": 0.7},
        log_form=True, feature="Log-gamma"),
    IdentityCase(
        "I07-log-gamma-minus-one", "Phi' at the conjugate cube roots as a log-gamma combination",
        (Param("a", RealInterval(0.3, 6.0)),), i07_lhs, i07_rhs, {"a": 3.3},
        admissible=i07_ok, log_form=True,
        note="for a < 2 the two sides differ by exactly 2 pi i and are compared through exp"),
    IdentityCase(
        "I08-cos-sin-product", "Finite product of cosine and sine ratios",
        (Param("m", RealInterval(-1.2, 1.2)), Param("r", RealInterval(-1.2, 1.2)), _N3),
        i08_lhs, i08_rhs, {"m": 0.3, "r": 0.1, "n": 1}, admissible=i08_ok, product=True),
    IdentityCase(
        "I09-trig-exp-product", "Product of trigonometric ratios and exponentials with parameter b",
        (Param("x", RealInterval(-1.0, 1.0)), Param("b", RealInterval(1.2, 3.0)), _N3),
        i09_lhs, i09_rhs, {"x": 0.2, "b": 1.7, "n": 1}, admissible=i09_ok, product=True),
    IdentityCase(
        "I10-sine-ratio-product", "Finite product of sine ratios",
        (Param("x", RealInterval(-1.0, 1.0)), _N3),
        i10_lhs, i10_rhs, {"x": 0.2, "n": 1}, admissible=i10_ok, product=True),
    IdentityCase(
        "I11-sine-secant-product", "Product of sine ratios and secant exponentials (k = 1, a = -1)",
        (Param("x", RealInterval(-1.0, 1.0)), _N3),
        i11_lhs, i11_rhs, {"x": 0.2, "n": 1}, admissible=i11_ok, product=True),
    IdentityCase(
        "I12-gamma-ratio-product", "Product of exponentials of Phi' as a gamma ratio",
        (_N3, _X), _exp_phi_product, i12_rhs, {"n": 1, "x": 0.6}, product=True),
    IdentityCase(
        "I13-euler-gamma-quarter", "Phi' sum at s = 1 via Euler's constant and Gamma(1/4)",
        (_N4,), lambda p, o: _root_sum(p["n"], 1, 0.5, o), i13_rhs, {"n": 1},
        note="log(i(2n+1)) taken on the principal branch"),
    IdentityCase(
        "I14-catalan", "Phi' sum at s = -1, v = 1/2 via Catalan's constant",
        (_N4,), lambda p, o: _root_sum(p["n"], -1, 0.5, o), i14_rhs, {"n": 0},
        feature="Catalan's constant, K"),
    IdentityCase(
        "I15-glaisher", "Phi' sum at s = -1, v = n + 1 via Glaisher's constant",
        (_N4,), lambda p, o: _root_sum(p["n"], -1, p["n"] + 1, o), i15_rhs, {"n": 1},
        feature="Glaisher's constant, A"),
    IdentityCase(
        "I16-apery", "Phi' sum at s = -2, v = n + 1 via zeta(3)",
        (_N4,), lambda p, o: _root_sum(p["n"], -2, p["n"] + 1, o), i16_rhs, {"n": 1},
        feature="Apéry's constant, ζ(3)"),
    IdentityCase(
        "I17-polylog-sum", "Root-of-unity sum of Phi as a polylogarithm",
        (Param("k", ComplexRect((-2.0, 3.0), (-0.5, 0.5))), _M_COMPLEX, _N3),
        i17_lhs, i17_rhs, {"k": 2, "m": 0.3 + 0.4j, "n": 1},
        admissible=i17_ok, real_params=(_M_REAL,)),
    IdentityCase(
        "I18-polylog0-log", "Li_0' at two sixth roots of unity",
        (), _li_pair(0), i18_rhs, {}, log_form=True, feature="Logarithm"),
    IdentityCase(
        "I19-polylog-1-glaisher", "Li_{-1}' at two sixth roots of unity via Glaisher's constant",
        (), _li_pair(-1), i19_rhs, {}, log_form=True, feature="Glaisher's constant, A"),
    IdentityCase(
        "I20-polylog1-log2-log3", "Li_1' at two sixth roots of unity as log 2 log 3",
        (), _li_pair(1), i20_rhs, {}, feature="Product Logarithm",
        note="second term read as Li_1'(-(-1)^(2/3)); the printed stray first argument is dropped"),
    IdentityCase(
        "I21-log-gamma-half", "Phi' at cube roots of unity with Gamma((a+1)/2)",
        (Param("a", RealInterval(0.2, 5.0)),), i21_lhs, i21_rhs, {"a": 0.7},
        log_form=True, feature="Log-gamma"),
    IdentityCase(
        "I22-digamma", "Phi at s = 1 and cube roots of unity via digamma",
        (_A_COMPLEX,), i22_lhs, i22_rhs, {"a": 0.7}),
    IdentityCase(
        "I23-exp-trig-product", "Product with k = 1, a = exp(i(2n+1))",
        (Param("x", RealInterval(-1.0, 1.0)), _N3),
        i23_lhs, i23_rhs, {"x": 0.2, "n": 1}, admissible=i23_ok, product=True),
    IdentityCase(
        "I24-trig-ratio-sum", "Finite sum of ratios of trigonometric functions",
        (Param("m", RealInterval(0.05, 1.5)), _N3),
        i24_lhs, i24_rhs, {"m": 0.3, "n": 2}, admissible=i24_ok, status=Status.QUARANTINED,
        quarantine_note="denominator prints cos^2(m(1+2)n); m(1+2n) is the likely intent"),
    IdentityCase(
        "I25-stieltjes-1", "Phi' sum at s = 1 via the first Stieltjes constant",
        (_N3, _A_COMPLEX), i25_lhs, i25_rhs, {"n": 1, "a": 0.7}),
    IdentityCase(
        "I26-stieltjes-2", "Phi'' sum at s = 1 via the first and second Stieltjes constants",
        (_N3, _A_COMPLEX), i26_lhs, i26_rhs, {"n": 1, "a": 0.7},
        note="grouping of the log(2n+1), log(8n+4), log^2 2 factors taken as printed"),
    IdentityCase(
        "I27-gamma-product", "Product of exponentials of Li_0' as a gamma ratio",
        (_N4,), i27_lhs, i27_rhs, {"n": 1}, product=True, feature="Gamma function"),
    IdentityCase(
        "I28-log-digamma", "Finite sum of logarithms via digamma",
        (_N4,), i28_lhs, i28_rhs, {"n": 1}),
    IdentityCase(
        "I29-polylog-hurwitz", "Root-of-unity sum of polylogarithms via Hurwitz zeta",
        (Param("k", ComplexRect((-2.0, 3.0), (-0.5, 0.5))), _N3),
        i29_lhs, i29_rhs, {"k": 1, "n": 1}, admissible=i29_ok,
        note="the sign factor is read as (-1)^j"),
    IdentityCase(
        "I30-euler-product", "Finite trigonometric Euler product",
        (Param("m", RealInterval(-1.5, 1.5)), _N4),
        i30_lhs, i30_rhs, {"m": 0.3, "n": 1}, admissible=i30_ok, product=True,
        feature="Euler product form"),
    IdentityCase(
        "I31-definite-integral", "Product of exponentials of Phi' as a definite integral",
        (_N3, _X), _exp_phi_product, i31_rhs, {"n": 1, "x": 0.6}, product=True,
        feature="Definite integral"),
)


def list_cases() -> tuple:
    return CASES
