"""Numerical building blocks: branch conventions, double-exponential quadrature,
Levin-type series acceleration and contour-circle differentiation.

Every routine here works in IEEE double precision on Python ``complex``
scalars (or numpy ``complex128`` arrays where vectorisation pays off).
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass
from itertools import islice
from typing import Callable, Iterable

import numpy as np

from .errors import DomainError, NoConvergenceError

EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class EvalOptions:
    """Tolerances and work limits shared by every evaluation.

    Parameters
    ----------
    abs_tol, rel_tol : float
        Target absolute and relative error. A result is accepted once its
        error estimate is below ``max(abs_tol, rel_tol * |value|)``.
    max_terms : int
        Cap on the number of series terms any summation may use.
    quad_levels : int
        Number of step-halving refinements the quadrature may perform.
    deriv_radius : float
        Radius of the circle used by :func:`cauchy_derivative`.
    deriv_nodes : int
        Trapezoid nodes on that circle (the estimate uses twice as many).
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_terms: int = 20000
    quad_levels: int = 8
    deriv_radius: float = 0.25
    deriv_nodes: int = 16

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise DomainError("abs_tol must be positive")
        if not self.rel_tol >= 0:
            raise DomainError("rel_tol must be non-negative")
        if self.max_terms < 16:
            raise DomainError("max_terms must be at least 16")
        if self.quad_levels < 3:
            raise DomainError("quad_levels must be at least 3")
        if not 0 < self.deriv_radius < 1:
            raise DomainError("deriv_radius must lie in (0, 1)")
        if self.deriv_nodes < 8 or self.deriv_nodes % 2:
            raise DomainError("deriv_nodes must be even and at least 8")

    def tolerance(self, value) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))


DEFAULT_OPTIONS = EvalOptions()


@dataclass(frozen=True)
class QuadResult:
    value: complex
    err_estimate: float
    evaluations: int
    converged: bool


# -- branch conventions -----------------------------------------------------


_TINY = sys.float_info.min  # smallest normal double


def as_complex(x) -> complex:
    """Coerce to ``complex``, rejecting NaN/Inf and normalising ``-0.0``.

    The imaginary part ``-0.0`` is replaced by ``+0.0`` so that every
    logarithm taken downstream lands on the principal branch with
    ``arg`` in ``(-pi, pi]`` (``cmath`` would otherwise return ``-pi`` on
    the negative real axis). Subnormal parts are flushed to zero: they
    carry no precision and make some ``cmath`` calls raise spurious
    ``OverflowError``.
    """
    z = complex(x)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z!r}")
    re_, im = z.real, z.imag
    if abs(re_) < _TINY:
        re_ = 0.0
    if abs(im) < _TINY:
        im = 0.0
    return complex(re_, im)


def clog(z) -> complex:
    """Principal logarithm, ``Im log z`` in ``(-pi, pi]``."""
    z = as_complex(z)
    if z == 0:
        raise DomainError("log(0)")
    return cmath.log(z)


def cpow(base, exponent) -> complex:
    """Principal power ``exp(exponent * log(base))``."""
    base = as_complex(base)
    exponent = as_complex(exponent)
    if base == 0:
        if exponent == 0:
            return 1 + 0j
        if exponent.real > 0:
            return 0j
        raise DomainError("0 raised to a power with non-positive real part")
    return cmath.exp(exponent * cmath.log(base))


def minus_one_pow(p, q=1) -> complex:
    """``(-1)**(p/q)`` on the principal branch, i.e. ``exp(i*pi*p/q)``."""
    return cmath.exp(1j * math.pi * p / q)


def rel_residual(lhs, rhs) -> float:
    """``|lhs - rhs| / max(1, |lhs|, |rhs|)``."""
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


# -- quadrature -------------------------------------------------------------

_XMAX = 6.0  # exp(pi/2*sinh(6)) ~ 1e137; larger x only feeds under/overflow
_H0 = 0.5
_NEGLIGIBLE = 1e-18


def _exp_sinh(x):
    t = np.exp(0.5 * math.pi * np.sinh(x))
    return t, t * 0.5 * math.pi * np.cosh(x)


def _midpoints(level: int, lo: float, hi: float) -> np.ndarray:
    h = _H0 / 2**level
    k = np.arange(1, int(round((hi - lo) / h)), 2)
    return lo + k * h


def _evaluate(f, x):
    t, w = _exp_sinh(x)
    with np.errstate(all="ignore"):
        g = np.asarray(f(t), dtype=complex) * w
    return g


def quad_semi_infinite(f: Callable[[np.ndarray], np.ndarray],
                       opts: EvalOptions = DEFAULT_OPTIONS) -> QuadResult:
    """Integrate ``f`` over ``[0, inf)`` with exp-sinh quadrature.

    The substitution ``t = exp(pi/2 * sinh(x))`` makes the transformed
    integrand decay double-exponentially at both ends, so algebraic
    endpoint behaviour such as ``t**(alpha - 1)`` near 0 and algebraic or
    exponential decay at infinity need no special treatment.

    ``f`` receives a 1-D float array of abscissae and must return an array
    of the same shape (real or complex). Overflow far out in the tails is
    tolerated as long as the integrand is already negligible there.

    Raises
    ------
    DomainError
        If the integrand produces NaN or Inf where it is not negligible.
    NoConvergenceError
        If ``opts.quad_levels`` refinements do not meet the tolerance; the
        exception carries the best estimate.
    """
    n_half = int(_XMAX / _H0)
    x = np.arange(-n_half, n_half + 1) * _H0
    g = _evaluate(f, x)
    finite = np.isfinite(g)
    if not finite[n_half]:
        raise DomainError("integrand returned NaN or Inf")
    lo = n_half
    while lo > 0 and finite[lo - 1]:
        lo -= 1
    hi = n_half
    while hi < x.size - 1 and finite[hi + 1]:
        hi += 1
    mag = np.abs(g[lo:hi + 1])
    peak = float(mag.max())
    if (lo > 0 and mag[0] > _NEGLIGIBLE * peak) or \
            (hi < x.size - 1 and mag[-1] > _NEGLIGIBLE * peak):
        raise DomainError("integrand returned NaN or Inf")
    # refine only where the coarse integrand is significant
    sig = np.flatnonzero(mag > _NEGLIGIBLE * peak)
    if sig.size == 0:
        return QuadResult(0j, 0.0, x.size, True)
    x_lo = x[lo + max(sig[0] - 1, 0)]
    x_hi = x[lo + min(sig[-1] + 1, mag.size - 1)]

    total = complex(g[lo:hi + 1].sum())
    value = total * _H0
    evaluations = x.size
    err = math.inf
    for level in range(1, opts.quad_levels + 1):
        xm = _midpoints(level, x_lo, x_hi)
        gm = _evaluate(f, xm)
        evaluations += xm.size
        if not np.all(np.isfinite(gm)):
            raise DomainError("integrand returned NaN or Inf")
        total += complex(gm.sum())
        prev, value = value, total * _H0 / 2**level
        err = abs(value - prev)
        if level >= 2 and err <= opts.tolerance(value):
            return QuadResult(value, err, evaluations, True)
    raise NoConvergenceError(
        f"exp-sinh quadrature did not converge in {opts.quad_levels} levels "
        f"(estimate {value!r}, err {err:.2e})",
        best=value, err_estimate=err, strategy="quadrature")


# -- series acceleration ----------------------------------------------------

_LEVIN_MAX_ORDER = 60


def _levin_u(partial: np.ndarray, terms: np.ndarray) -> complex:
    """Levin u-transform of order ``k = len(partial) - 1`` (beta = 1)."""
    k = partial.size - 1
    j = np.arange(k + 1)
    omega = (j + 1.0) * terms
    binom = np.array([math.comb(k, i) for i in range(k + 1)], dtype=float)
    c = (-1.0) ** j * binom * ((j + 1.0) / (k + 1.0)) ** (k - 1)
    return complex(np.sum(c * partial / omega) / np.sum(c / omega))


def _take_terms(terms, start: int, stop: int) -> np.ndarray:
    if callable(terms):
        with np.errstate(all="ignore"):
            a = np.asarray(terms(np.arange(start, stop)), dtype=complex)
    else:
        a = np.array([complex(x) for x in islice(terms, stop - start)], dtype=complex)
    if not np.all(np.isfinite(a)):
        raise DomainError("series term is NaN or Inf")
    return a


def _direct_geometric(terms, head, opts):
    """Plain summation for clearly geometrically convergent series."""
    a = head
    while True:
        tail = a[-8:]
        if np.any(tail[:-1] == 0):
            return None
        rho = float(np.max(np.abs(tail[1:] / tail[:-1])))
        if rho > 0.9:
            return None
        bound = abs(a[-1]) * rho / (1 - rho)
        total = complex(a.sum())
        if bound <= 0.1 * opts.tolerance(total):
            return total, bound, a.size
        if a.size >= opts.max_terms:
            return None
        a = np.concatenate([a, _take_terms(terms, a.size, min(2 * a.size, opts.max_terms))])


def levin_sum(terms, opts: EvalOptions = DEFAULT_OPTIONS):
    """Sum a slowly or conditionally convergent series.

    ``terms`` is either an iterable of complex numbers (consumed lazily) or
    a vectorised callable mapping an integer index array to term values.

    When consecutive terms rotate by a small angle ``theta`` (ratio near a
    point of the unit circle close to 1), blocks of ``K ~ pi/theta`` terms
    are summed first so the blocked series alternates; the Levin
    u-transform loses most of its accuracy in double precision otherwise.

    Returns ``(value, err_estimate, terms_used)``. The error estimate is the
    larger of the last two differences between consecutive transform
    orders.
    """
    if not callable(terms):
        terms = iter(terms)
    head = _take_terms(terms, 0, 32)
    if head.size < 32:
        return complex(head.sum()), 0.0, head.size
    direct = _direct_geometric(terms, head, opts)
    if direct is not None:
        return direct
    block = 1
    if head[-2] != 0 and head[-1] != 0:
        theta = abs(cmath.phase(head[-1] / head[-2]))
        if 1e-3 < theta < math.pi / 2:
            block = max(1, round(math.pi / theta))
    n_blocks = min(_LEVIN_MAX_ORDER + 1, opts.max_terms // block)
    if n_blocks < 8:
        raise NoConvergenceError("max_terms too small for the series rotation",
                                 strategy="AcceleratedSeries")
    need = n_blocks * block
    if need > head.size:
        raw = np.concatenate([head, _take_terms(terms, head.size, need)])
    else:
        raw = head[:need]
    n_blocks = raw.size // block
    a = raw[:n_blocks * block].reshape(n_blocks, block).sum(axis=1)
    partial = np.cumsum(a)
    zeros = np.flatnonzero(a == 0)
    if zeros.size:
        if np.all(a[zeros[0]:] == 0):
            return complex(partial[zeros[0]]), 0.0, int(zeros[0]) * block
        raise NoConvergenceError("zero term inside a non-terminating series",
                                 strategy="AcceleratedSeries")
    history = []
    best, best_err = complex(partial[-1]), math.inf
    for k in range(1, a.size):
        with np.errstate(all="ignore"):
            est = _levin_u(partial[:k + 1], a[:k + 1])
        if not cmath.isfinite(est):
            continue
        history.append(est)
        if len(history) >= 3:
            err = max(abs(history[-1] - history[-2]), abs(history[-2] - history[-3]))
            if err < best_err:
                best, best_err = est, err
            if err <= opts.tolerance(est):
                return est, err, (k + 1) * block
    raise NoConvergenceError(
        f"Levin transform stagnated (best {best!r}, err {best_err:.2e})",
        best=best, err_estimate=best_err, strategy="AcceleratedSeries")


def accelerate_alternating(terms, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Abel/analytic sum of an alternating-like series.

    ``terms`` is an iterable of complex numbers (consumed lazily, may be
    infinite) or a vectorised callable of the term index.

    >>> round(accelerate_alternating((-1) ** n / (n + 1) for n in range(10**6)).real, 10)
    0.6931471806
    """
    return levin_sum(terms, opts)[0]


# -- contour-circle differentiation ----------------------------------------


def cauchy_derivative(f: Callable[[complex], complex], s0, order: int,
                      opts: EvalOptions = DEFAULT_OPTIONS, radius=None) -> complex:
    """Derivative of an analytic ``f`` at ``s0`` from values on a circle.

    Applies the trapezoid rule to Cauchy's integral formula on the circle of
    radius ``radius`` (default ``opts.deriv_radius``). The rule is run with
    ``2 * deriv_nodes`` nodes and compared against the embedded
    ``deriv_nodes`` subset; disagreement beyond tolerance raises.

    ``order`` may be 0 (the circle mean, useful at removable
    singularities), 1 or 2.
    """
    if order not in (0, 1, 2):
        raise DomainError("order must be 0, 1 or 2")
    s0 = as_complex(s0)
    r = opts.deriv_radius if radius is None else float(radius)
    if not r > 0:
        raise DomainError("radius must be positive")
    n = 2 * opts.deriv_nodes
    roots = np.exp(2j * math.pi * np.arange(n) / n)
    values = np.array([f(s0 + r * w) for w in roots], dtype=complex)
    if not np.all(np.isfinite(values)):
        raise DomainError("function is not finite on the differentiation circle")
    scale = math.factorial(order) / r**order
    twiddle = roots ** (-order)
    fine = complex(scale * np.mean(values * twiddle))
    coarse = complex(scale * np.mean(values[::2] * twiddle[::2]))
    err = abs(fine - coarse)
    noise = 1e3 * EPS * float(np.max(np.abs(values))) * scale
    if err > max(opts.tolerance(fine), noise):
        raise NoConvergenceError(
            f"circle rule unresolved at {n} nodes (err {err:.2e})",
            best=fine, err_estimate=err, strategy="cauchy")
    return fine
