"""
The Frechet (type II extreme-value) distribution.

The one-parameter law has density::

    f(x; alpha) = alpha * x**(-alpha - 1) * exp(-x**(-alpha)),   x > 0

and distribution function ``F(x) = exp(-x**(-alpha))``. The three-parameter
law adds a scale ``s > 0`` and a location ``m`` (support ``x > m``)::

    g(x; alpha, s, m) = f((x - m) / s; alpha) / s

Moments of order ``k`` exist only for ``k < alpha``; outside that range the
moment and shape-statistic methods return ``inf`` rather than raising.
"""

import functools
import math
from dataclasses import dataclass

import numpy as np

from .specfun import gamma, ln_gamma, ln_gamma1m_excess, zeta

__all__ = ["Frechet", "GeneralizedFrechet", "open_uniforms"]

# below this value of k/alpha the log-moments are expanded in series
_SERIES_LIMIT = 0.25
# above this alpha central moments come from a power series in 1/alpha
_ASYMPTOTIC_ALPHA = 50.0
_ASYMPTOTIC_ORDER = 24


def open_uniforms(rng, n):
    """Draw ``n`` uniforms strictly inside (0, 1).

    Uses 53-bit integers offset by one half, so neither endpoint can occur.
    ``rng`` is a :class:`numpy.random.Generator` or anything accepted by
    :func:`numpy.random.default_rng`.
    """
    rng = np.random.default_rng(rng)
    return (rng.integers(0, 2**53, size=int(n), dtype=np.int64) + 0.5) / 2.0**53


def _scalar_or_array(arr, like):
    return arr.item() if np.ndim(like) == 0 else arr


@dataclass(frozen=True)
class Frechet:
    """One-parameter Frechet law with shape ``alpha > 0``.

    Examples
    --------
    >>> d = Frechet(2.0)
    >>> d.cdf(1.0)  # doctest: +ELLIPSIS
    0.367879441171...
    >>> d.raw_moment(2)
    inf
    """

    alpha: float

    def __post_init__(self):
        alpha = float(self.alpha)
        if not (alpha > 0.0 and math.isfinite(alpha)):
            raise ValueError(f"shape alpha must be finite and > 0, got {self.alpha!r}")
        object.__setattr__(self, "alpha", alpha)

    # -- density and distribution function ---------------------------------

    def logpdf(self, x):
        """Log density; ``-inf`` for ``x <= 0``."""
        x = np.asarray(x, dtype=float)
        a = self.alpha
        out = np.full(x.shape, -np.inf)
        pos = x > 0
        with np.errstate(over="ignore", divide="ignore"):
            lx = np.log(x[pos])
            out[pos] = math.log(a) - (a + 1.0) * lx - np.exp(-a * lx)
        return _scalar_or_array(out, x)

    def pdf(self, x):
        """Density ``alpha * x**(-alpha-1) * exp(-x**(-alpha))``; zero for ``x <= 0``."""
        x = np.asarray(x, dtype=float)
        a = self.alpha
        out = np.zeros(x.shape)
        pos = x > 0
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            xp = x[pos]
            t = xp ** -a
            out[pos] = a * t / xp * np.exp(-t)
        # 0 * inf at x -> 0+ where t overflows; the density tends to zero there
        out[np.isnan(out)] = 0.0
        return _scalar_or_array(out, x)

    def cdf(self, x):
        """Distribution function ``exp(-x**(-alpha))``; zero for ``x <= 0``."""
        x = np.asarray(x, dtype=float)
        out = np.zeros(x.shape)
        pos = x > 0
        with np.errstate(over="ignore"):
            out[pos] = np.exp(-(x[pos] ** -self.alpha))
        return _scalar_or_array(out, x)

    def quantile(self, u):
        """Inverse distribution function ``(-ln u)**(-1/alpha)`` for ``0 < u < 1``.

        May overflow to ``inf`` for ``u`` very close to 1 when alpha is small.
        """
        u = np.asarray(u, dtype=float)
        if np.any(~((u > 0.0) & (u < 1.0))):
            raise ValueError("quantile requires 0 < u < 1")
        with np.errstate(over="ignore", divide="ignore"):
            out = (-np.log(u)) ** (-1.0 / self.alpha)
        return _scalar_or_array(np.asarray(out, dtype=float), u)

    def sample(self, n, rng=None):
        """Draw ``n`` variates by inverse-transform sampling."""
        if n < 0:
            raise ValueError(f"sample size must be >= 0, got {n}")
        return np.asarray(self.quantile(open_uniforms(rng, n)), dtype=float).reshape(-1)

    # -- moments -------------------------------------------------------------

    def raw_moment(self, k):
        """``E[X**k] = Gamma(1 - k/alpha)`` for ``1 <= k < alpha``, else ``inf``."""
        k = _moment_order(k, 1)
        if k >= self.alpha:
            return math.inf
        return gamma(1.0 - k / self.alpha)

    def _log_moment_excess(self, j):
        # ln(mu_j / mu_1**j); zero for j in {0, 1}
        if j <= 1:
            return 0.0
        h = 1.0 / self.alpha
        if j * h <= _SERIES_LIMIT:
            # the gamma*z terms cancel exactly between mu_j and mu_1**j
            return ln_gamma1m_excess(j * h) - j * ln_gamma1m_excess(h)
        return ln_gamma(1.0 - j * h) - j * ln_gamma(1.0 - h)

    def _central_ratio(self, k):
        # E[(X - mu_1)**k] / mu_1**k via the binomial expansion in raw moments.
        if self.alpha >= _ASYMPTOTIC_ALPHA:
            return _central_ratio_series(k, 1.0 / self.alpha)
        # sum_j C(k,j) (-1)**(k-j) = 0, so exp(D_j) may be replaced by
        # expm1(D_j), which removes the leading cancellation.
        terms = [
            math.comb(k, j) * (-1) ** (k - j) * math.expm1(self._log_moment_excess(j))
            for j in range(2, k + 1)
        ]
        return math.fsum(terms)

    def central_moment(self, k):
        """``E[(X - mu_1)**k]`` for ``2 <= k < alpha``, else ``inf``."""
        k = _moment_order(k, 2)
        if k >= self.alpha:
            return math.inf
        return self._central_ratio(k) * self.raw_moment(1) ** k

    def reduced_central_moment(self, k):
        """Central moment of order ``k`` over ``variance**(k/2)``; ``inf`` if ``k >= alpha``."""
        k = _moment_order(k, 2)
        if k >= self.alpha:
            return math.inf
        if k == 2:
            return 1.0
        return self._central_ratio(k) / self._central_ratio(2) ** (0.5 * k)

    def mean(self):
        return self.raw_moment(1)

    def variance(self):
        return self.central_moment(2)

    def skewness(self):
        """Skewness; ``inf`` for ``alpha <= 3``."""
        if self.alpha <= 3.0:
            return math.inf
        return self.reduced_central_moment(3)

    def excess_kurtosis(self):
        """Excess kurtosis (kurtosis - 3); ``inf`` for ``alpha <= 4``.

        Evaluated as ``-6 + (mu4 - 4 mu3 mu1 + 3 mu2**2) / (mu2 - mu1**2)**2``,
        which equals the usual ``mu4c / mu2c**2 - 3``.
        """
        if self.alpha <= 4.0:
            return math.inf
        if self.alpha >= _ASYMPTOTIC_ALPHA:
            return self._central_ratio(4) / self._central_ratio(2) ** 2 - 3.0
        e2 = math.expm1(self._log_moment_excess(2))
        e3 = math.expm1(self._log_moment_excess(3))
        e4 = math.expm1(self._log_moment_excess(4))
        # numerator / mu1**4 with every ratio written as 1 + e_j
        num = math.fsum([e4, -4.0 * e3, 6.0 * e2, 3.0 * e2 * e2])
        return -6.0 + num / (e2 * e2)


def _stirling2(p, k):
    # Stirling numbers of the second kind, S(p, k)
    row = [1] + [0] * k
    for _ in range(p):
        row = [0] + [j * row[j] + row[j - 1] for j in range(1, k + 1)]
    return row[k]


def _central_ratio_series(k, h):
    return float(np.polynomial.polynomial.polyval(h, _central_series_coef(k)))


@functools.lru_cache(maxsize=None)
def _central_series_coef(k):
    """Coefficients in ``h = 1/alpha`` of ``E[(X - mu_1)**k] / mu_1**k``.

    With ``D(j) = ln(mu_j / mu_1**j) = sum_n zeta(n) h**n (j**n - j) / n`` the
    ratio is the k-th forward difference of ``exp(D(j))`` at ``j = 0``. Expanding
    ``exp(D)`` in powers of h with polynomial-in-j coefficients, the difference
    of ``j**p`` is ``k! S(p, k)``, so no cancellation between moments occurs.
    """
    N = _ASYMPTOTIC_ORDER
    # D[m, p]: coefficient of h**m j**p
    D = np.zeros((N + 1, N + 1))
    for n in range(2, N + 1):
        c = zeta(n) / n
        D[n, n] += c
        D[n, 1] -= c
    # exp(D) = sum_r D**r / r!, D is O(h**2) so r <= N // 2 suffices
    total = np.zeros_like(D)
    total[0, 0] = 1.0
    term = total.copy()
    for r in range(1, N // 2 + 1):
        term = _truncated_mul(term, D, N) / r
        total += term
    diff = np.array([math.factorial(k) * _stirling2(p, k) for p in range(N + 1)], dtype=float)
    return tuple(total @ diff)


def _truncated_mul(a, b, N):
    out = np.zeros((N + 1, N + 1))
    for m in range(N + 1):
        for p in range(N + 1):
            if a[m, p] != 0.0:
                out[m:, p:] += a[m, p] * b[: N + 1 - m, : N + 1 - p]
    return out


def _moment_order(k, lowest):
    if int(k) != k or k < lowest:
        raise ValueError(f"moment order must be an integer >= {lowest}, got {k!r}")
    return int(k)


@dataclass(frozen=True)
class GeneralizedFrechet:
    """Frechet law with shape ``alpha``, scale ``s > 0`` and location ``m``.

    Support is ``(m, inf)``; ``GeneralizedFrechet(a, 1, 0)`` coincides with
    ``Frechet(a)``.
    """

    alpha: float
    s: float = 1.0
    m: float = 0.0

    def __post_init__(self):
        s, m = float(self.s), float(self.m)
        if not (s > 0.0 and math.isfinite(s)):
            raise ValueError(f"scale s must be finite and > 0, got {self.s!r}")
        if not math.isfinite(m):
            raise ValueError(f"location m must be finite, got {self.m!r}")
        object.__setattr__(self, "alpha", self.standard.alpha)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "m", m)

    @property
    def standard(self):
        """The standardized one-parameter law."""
        return Frechet(self.alpha)

    def _standardize(self, x):
        return (np.asarray(x, dtype=float) - self.m) / self.s

    def pdf(self, x):
        y = self._standardize(x)
        return _scalar_or_array(np.asarray(self.standard.pdf(y)) / self.s, y)

    def logpdf(self, x):
        y = self._standardize(x)
        return _scalar_or_array(np.asarray(self.standard.logpdf(y)) - math.log(self.s), y)

    def cdf(self, x):
        return self.standard.cdf(self._standardize(x))

    def quantile(self, u):
        y = np.asarray(self.standard.quantile(u))
        return _scalar_or_array(self.m + self.s * y, y)

    def sample(self, n, rng=None):
        return self.m + self.s * self.standard.sample(n, rng)
