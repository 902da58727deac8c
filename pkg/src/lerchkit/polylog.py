"""Polylogarithm via ``Li_s(z) = z Phi(z, s, 1)``."""

from __future__ import annotations

from .lerch import phi, phi_sderiv
from .numeric import DEFAULT_OPTIONS, EvalOptions, as_complex


def polylog(s, z, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """``Li_s(z) = sum_{n>=1} z^n / n^s`` continued through :func:`phi`."""
    z = as_complex(z)
    if z == 0:
        return 0j
    return z * phi(z, s, 1.0, opts).value


def polylog_sderiv(s0, z, order: int = 1, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """``d^order/ds^order Li_s(z)`` at ``s = s0``."""
    z = as_complex(z)
    if z == 0:
        return 0j
    return z * phi_sderiv(z, s0, 1.0, order, opts)
