"""Gamma, digamma, Hurwitz zeta, generalized Stieltjes constants and the
mathematical constants used on the right-hand sides of the identities."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError, NoConvergenceError, PoleError
from .numeric import DEFAULT_OPTIONS, EvalOptions, as_complex, cauchy_derivative, quad_semi_infinite

# -- constants --------------------------------------------------------------

CONSTANT_DIGITS = {
    "euler_gamma": "0.577215664901532860606512090082",
    "catalan_K": "0.915965594177219015054603514932",
    "glaisher_A": "1.28242712910062263687534256887",
    "apery_zeta3": "1.20205690315959428539973816151",
    "pi": "3.14159265358979323846264338328",
    "log2": "0.693147180559945309417232121458",
    "log3": "1.09861228866810969139524523692",
}


@dataclass(frozen=True)
class ConstantsTable:
    euler_gamma: float
    catalan_K: float
    glaisher_A: float
    apery_zeta3: float
    pi: float
    log2: float
    log3: float


CONSTANTS = ConstantsTable(**{k: float(v) for k, v in CONSTANT_DIGITS.items()})

EULER_GAMMA = CONSTANTS.euler_gamma


# -- Bernoulli numbers ------------------------------------------------------


@lru_cache(maxsize=None)
def bernoulli_numbers(count: int = 64) -> tuple:
    """Exact ``B_0 .. B_{count-1}`` (with ``B_1 = -1/2``) as Fractions."""
    b = [Fraction(1)]
    for m in range(1, count):
        b.append(-sum(math.comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return tuple(b)


_B = bernoulli_numbers()
# B_{2j} / (2j)! for the Euler-Maclaurin tail
_EM_COEFFS = np.array([float(_B[2 * j] / math.factorial(2 * j)) for j in range(1, 31)])
# B_{2k} / (2k (2k-1)) for Stirling's series
_STIRLING = [float(_B[2 * k] / (2 * k * (2 * k - 1))) for k in range(1, 16)]
# B_{2k} / (2k) for the digamma asymptotic series
_PSI_ASYM = [float(_B[2 * k] / (2 * k)) for k in range(1, 16)]


def bernoulli_polynomial(n: int, x) -> complex:
    x = as_complex(x)
    return sum(math.comb(n, k) * float(_B[k]) * x ** (n - k) for k in range(n + 1))


def _nonpositive_integer(z: complex, eps: float = 1e-12) -> bool:
    return abs(z.imag) <= eps and z.real <= eps and abs(z.real - round(z.real)) <= eps


# -- gamma family -----------------------------------------------------------

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma(z) -> complex:
    """Complex gamma function (Lanczos, g = 7, with reflection).

    Raises
    ------
    PoleError
        At the non-positive integers.
    """
    z = as_complex(z)
    if _nonpositive_integer(z, 0.0):
        raise PoleError(f"gamma has a pole at {z.real:g}")
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * gamma(1 - z))
    z -= 1
    x = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        x += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * x


def log_gamma(z) -> complex:
    """Principal log-gamma: analytic off ``(-inf, 0]`` and real for ``z > 0``.

    Uses the upward recurrence ``log G(z) = log G(z + N) - sum log(z + k)``
    with principal logarithms followed by Stirling's series, which keeps
    the result on the standard branch rather than ``log(gamma(z))``.
    """
    z = as_complex(z)
    if _nonpositive_integer(z, 0.0):
        raise PoleError(f"log_gamma has a pole at {z.real:g}")
    shift = 0j
    w = z
    while w.real < 10 or abs(w) < 10:
        shift += cmath.log(w)
        w += 1
    inv = 1 / w
    inv2 = inv * inv
    series = 0j
    p = inv
    for c in _STIRLING[:12]:
        series += c * p
        p *= inv2
    out = (w - 0.5) * cmath.log(w) - w + 0.5 * math.log(2 * math.pi) + series - shift
    if z.imag == 0 and z.real > 0:
        out = complex(out.real, 0.0)
    return out


def digamma(z) -> complex:
    """psi(z) by upward recurrence to ``Re z >= 8`` plus the asymptotic series."""
    z = as_complex(z)
    if _nonpositive_integer(z, 0.0):
        raise PoleError(f"digamma has a pole at {z.real:g}")
    acc = 0j
    w = z
    while w.real < 8 or abs(w) < 8:
        acc -= 1 / w
        w += 1
    inv2 = 1 / (w * w)
    series = 0j
    p = inv2
    for c in _PSI_ASYM[:12]:
        series += c * p
        p *= inv2
    out = acc + cmath.log(w) - 0.5 / w - series
    if z.imag == 0:
        out = complex(out.real, 0.0)
    return out


def beta(x, y) -> complex:
    return gamma(x) * gamma(y) / gamma(as_complex(x) + as_complex(y))


# -- Hurwitz zeta -----------------------------------------------------------


def hurwitz_zeta(s, a, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Hurwitz zeta ``sum_{n>=0} (a + n)^(-s)`` continued to all ``s != 1``.

    Euler-Maclaurin summation: ``N`` direct terms, the integral of the tail
    and Bernoulli corrections at ``b = a + N``. At exact non-positive
    integers ``s = -m`` the Bernoulli-polynomial closed form
    ``-B_{m+1}(a) / (m + 1)`` is used instead, and for other ``Re s < 0``
    the Hermite integral (see :func:`_hurwitz_hermite`), both avoiding
    cancellation. Powers use the principal branch.
    """
    s = as_complex(s)
    a = as_complex(a)
    if s == 1:
        raise PoleError("hurwitz_zeta has a pole at s = 1")
    if _nonpositive_integer(a, 0.0):
        raise PoleError(f"hurwitz_zeta undefined for a = {a.real:g}")
    if s.imag == 0 and s.real <= 0 and s.real == round(s.real):
        m = int(-s.real)
        return -bernoulli_polynomial(m + 1, a) / (m + 1)
    if s.real < 0 and a.real > 0:
        # the direct terms of Euler-Maclaurin would cancel badly here
        try:
            return _hurwitz_hermite(s, a, opts)
        except NoConvergenceError:
            pass
    target = max(10.0, abs(s))
    n = max(0, math.ceil(target - a.real))
    k = a + np.arange(n)
    direct = complex(np.sum(np.exp(-s * np.log(k)))) if n else 0j
    b = a + n
    log_b = cmath.log(b)
    b_pow = cmath.exp(-s * log_b)  # b^(-s)
    total = direct + b * b_pow / (s - 1) + 0.5 * b_pow
    inv_b2 = 1 / (b * b)
    rising = s  # s (s+1) ... (s+2j-2)
    term_pow = b_pow / b  # b^(-s-2j+1) at j = 1
    prev = math.inf
    for j, c in enumerate(_EM_COEFFS, start=1):
        term = c * rising * term_pow
        total += term
        mag = abs(term)
        if mag <= 1e-17 * abs(total) or mag > prev:
            break
        prev = mag
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        term_pow *= inv_b2
    return complex(total)


def _hurwitz_hermite(s: complex, a: complex, opts: EvalOptions) -> complex:
    """``a^(-s)/2 + a^(1-s)/(s-1) + i int_0^inf [(a+it)^(-s) - (a-it)^(-s)] / (e^(2 pi t) - 1) dt``.

    Valid for ``Re a > 0``; integrated in ``u = 2 pi t``.
    """

    def f(u):
        t = u / (2 * math.pi)
        up = np.exp(-s * np.log(a + 1j * t) - u)
        down = np.exp(-s * np.log(a - 1j * t) - u)
        return 1j * (up - down) / (-np.expm1(-u)) / (2 * math.pi)

    q = quad_semi_infinite(f, opts)
    log_a = cmath.log(a)
    return complex(0.5 * cmath.exp(-s * log_a) + cmath.exp((1 - s) * log_a) / (s - 1) + q.value)


def stieltjes(n: int, a=1.0, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Generalized Stieltjes constant ``gamma_n(a)``, ``n`` in {0, 1, 2}.

    Normalized by the Laurent expansion
    ``zeta(s, a) = 1/(s-1) + sum_n (-1)^n gamma_n(a) (s-1)^n / n!``,
    so ``gamma_0(1)`` is Euler's constant. Computed as
    ``(-1)^n g^(n)(1)`` with ``g(s) = zeta(s, a) - 1/(s-1)`` differentiated
    on a circle about ``s = 1``.
    """
    if n not in (0, 1, 2):
        raise DomainError("only orders 0, 1 and 2 are supported")
    a = as_complex(a)

    def regular_part(s):
        return hurwitz_zeta(s, a, opts) - 1 / (s - 1)

    out = (-1) ** n * cauchy_derivative(regular_part, 1.0, n, opts)
    return complex(out.real, 0.0) if a.imag == 0 and a.real > 0 else out
