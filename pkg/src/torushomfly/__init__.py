"""Superpolynomials of torus knots from Hilbert schemes of points on y^n = x^k."""

__version__ = "0.1.0"

from .semigroup import Semigroup, make_semigroup
from .gamma_modules import GammaModule, enumerate_ideals_by_colength, enumerate_normalized_semimodules
from .polyalg import LaurentPoly, QSeries, RatFunc
from .series import Superpoly, superpoly

__all__ = [
    "Semigroup", "make_semigroup", "GammaModule", "enumerate_ideals_by_colength",
    "enumerate_normalized_semimodules", "LaurentPoly", "QSeries", "RatFunc",
    "Superpoly", "superpoly",
]
