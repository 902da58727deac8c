"""Hurwitz-Lerch zeta function, companion special functions and a registry
of numerically checked identities."""

from .errors import DivergenceError, DomainError, LerchkitError, NoConvergenceError, PoleError
from .lerch import Domain, LerchPoint, LerchResult, Strategy, phi, phi_sderiv
from .numeric import DEFAULT_OPTIONS, EvalOptions, QuadResult
from .polylog import polylog, polylog_sderiv
from .special import CONSTANTS, beta, digamma, gamma, hurwitz_zeta, log_gamma, stieltjes

__all__ = [
    "CONSTANTS", "DEFAULT_OPTIONS", "DivergenceError", "Domain", "DomainError", "EvalOptions",
    "LerchPoint", "LerchResult", "LerchkitError", "NoConvergenceError", "PoleError", "QuadResult",
    "Strategy", "beta", "digamma", "gamma", "hurwitz_zeta", "log_gamma", "phi", "phi_sderiv",
    "polylog", "polylog_sderiv", "stieltjes",
]
