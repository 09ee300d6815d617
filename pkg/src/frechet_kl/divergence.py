"""
Kullback-Leibler divergence between Frechet laws.

For one-parameter laws with shapes ``a1`` (reference ``p``) and ``a2``
(approximation ``q``) the divergence has the closed form::

    D(p || q) = ln(a1/a2) + (a2 - a1)/a1 * gamma_E - 1 + Gamma(1 + a2/a1)

It follows from splitting ``ln(p/q)`` into four elementary integrals (see
:func:`frechet_kl.quadrature.verify_derivation_integrals`). The quadrature
and Monte Carlo estimators below evaluate the defining integral
``int p ln(p/q)`` directly and serve as independent checks.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .frechet import Frechet, GeneralizedFrechet
from .quadrature import IntegrandDomain, integrate_adaptive
from .specfun import EULER_GAMMA, gamma

__all__ = [
    "KlResult",
    "kl_closed_form",
    "kl_quadrature",
    "kl_monte_carlo",
    "kl_generalized_quadrature",
    "boxed_formula_as_printed",
    "derivation_closed_forms",
]

CLOSED_FORM = "closed-form"
QUADRATURE = "quadrature"
MONTE_CARLO = "monte-carlo"

# see quadrature._RTOL_FLOOR; lets very large divergences converge
_KL_RTOL = 1e-14


@dataclass(frozen=True)
class KlResult:
    """A divergence value with the method that produced it.

    ``error_estimate`` is 0 for the closed form, the quadrature error bound,
    or the Monte Carlo standard error. ``detail`` is the sample size or the
    number of integrand evaluations.
    """

    value: float
    method: str
    error_estimate: float = 0.0
    detail: Optional[int] = None

    @property
    def is_finite(self):
        return math.isfinite(self.value)


def _shape(d):
    return d if isinstance(d, Frechet) else Frechet(d)


def kl_closed_form(p, q):
    """Closed-form ``D(p || q)`` for one-parameter Frechet laws.

    ``p`` and ``q`` are :class:`Frechet` instances or bare shape values.

    >>> kl_closed_form(2.0, 2.0).value
    0.0
    """
    a1, a2 = _shape(p).alpha, _shape(q).alpha
    r = a2 / a1
    value = math.log(a1 / a2) + (r - 1.0) * EULER_GAMMA - 1.0 + gamma(1.0 + r)
    return KlResult(value, CLOSED_FORM, 0.0)


def boxed_formula_as_printed(p, q):
    """The expression ``ln(a1/a2) + (a2-a1)/a1 * gamma_E - 1 + Gamma((a1+a2)/2)``.

    Kept only for comparison. It is not a divergence: for ``a1 == a2`` it
    equals ``Gamma(a1) - 1``, which vanishes only at shapes 1 and 2, and it
    can be negative.
    """
    a1, a2 = _shape(p).alpha, _shape(q).alpha
    return math.log(a1 / a2) + (a2 - a1) / a1 * EULER_GAMMA - 1.0 + gamma(0.5 * (a1 + a2))


def derivation_closed_forms(alpha1, alpha2):
    """Closed forms of the four integrals returned by ``verify_derivation_integrals``."""
    a1, a2 = _shape(alpha1).alpha, _shape(alpha2).alpha
    return (
        1.0 / a1,
        EULER_GAMMA / a1**2,
        gamma(2.0) / a1,
        gamma((a1 + a2) / a1) / a1,
    )


def _kl_integrand(p, q):
    def integrand(x):
        dens = p.pdf(x)
        with np.errstate(invalid="ignore"):
            out = dens * (p.logpdf(x) - q.logpdf(x))
        # 0 * log(0/0) contributes nothing
        return np.where(dens > 0, out, 0.0)

    return integrand


def kl_quadrature(p, q, tol=1e-10):
    """``int p ln(p/q)`` by adaptive quadrature under the cdf substitution of ``p``.

    Raises :class:`~frechet_kl.quadrature.QuadratureError` on non-convergence.
    """
    p, q = _shape(p), _shape(q)
    with np.errstate(over="ignore", under="ignore", divide="ignore"):
        res = integrate_adaptive(
            _kl_integrand(p, q), IntegrandDomain.cdf(p.alpha), tol, rtol=_KL_RTOL
        )
    return KlResult(res.value, QUADRATURE, res.abs_error_estimate, res.evaluations)


def kl_monte_carlo(p, q, n, rng=None):
    """Sample-mean estimate of ``E_p[ln p(X) - ln q(X)]`` from ``n`` draws of ``p``.

    ``error_estimate`` is the sample standard deviation over ``sqrt(n)``.
    ``rng`` is a numpy Generator or a seed.
    """
    if n < 2:
        raise ValueError(f"need at least 2 samples, got {n}")
    p, q = _shape(p), _shape(q)
    x = p.sample(n, rng)
    with np.errstate(over="ignore", under="ignore"):
        log_ratio = p.logpdf(x) - q.logpdf(x)
    se = float(np.std(log_ratio, ddof=1)) / math.sqrt(n)
    return KlResult(float(np.mean(log_ratio)), MONTE_CARLO, se, int(n))


def kl_generalized_quadrature(p, q, tol=1e-10):
    """``D(p || q)`` for location-scale Frechet laws, by quadrature.

    If ``p.m < q.m`` then ``p`` puts mass where ``q`` has none and the result
    is ``inf`` (with zero error estimate).
    """
    if not isinstance(p, GeneralizedFrechet) or not isinstance(q, GeneralizedFrechet):
        raise TypeError("kl_generalized_quadrature expects GeneralizedFrechet laws")
    if p.m < q.m:
        return KlResult(math.inf, QUADRATURE, 0.0, 0)
    base = _kl_integrand(p, q)

    def integrand(y):
        # y is the standardized variable of p
        return p.s * base(p.m + p.s * y)

    with np.errstate(over="ignore", under="ignore", divide="ignore"):
        res = integrate_adaptive(integrand, IntegrandDomain.cdf(p.alpha), tol, rtol=_KL_RTOL)
    return KlResult(res.value, QUADRATURE, res.abs_error_estimate, res.evaluations)
