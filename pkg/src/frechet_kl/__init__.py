"""Frechet extreme-value distributions and the Kullback-Leibler divergence between them."""

from .divergence import (
    KlResult,
    boxed_formula_as_printed,
    derivation_closed_forms,
    kl_closed_form,
    kl_generalized_quadrature,
    kl_monte_carlo,
    kl_quadrature,
)
from .frechet import Frechet, GeneralizedFrechet
from .quadrature import (
    IntegrandDomain,
    QuadratureError,
    QuadratureResult,
    integrate_adaptive,
    verify_derivation_integrals,
)
from .specfun import EULER_GAMMA, gamma, ln_gamma

__version__ = "0.1.0"
