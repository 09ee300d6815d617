"""Gamma, log-Gamma and the Euler-Mascheroni constant.

Only strictly positive real arguments are supported; every formula in this
package evaluates the Gamma function on ``(0, inf)``.
"""

import math

__all__ = ["EULER_GAMMA", "gamma", "ln_gamma", "zeta", "ln_gamma1m", "ln_gamma1m_excess"]

#: Euler-Mascheroni constant, -Gamma'(1).
EULER_GAMMA = 0.5772156649015329

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
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
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def _check_domain(x):
    x = float(x)
    if not x > 0.0:
        # also catches nan
        raise ValueError(f"Gamma argument must be > 0, got {x!r}")
    return x


def _lanczos_sum(z):
    # z = x - 1
    acc = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc += c / (z + i)
    return acc


def gamma(x):
    """Gamma function for ``x > 0``.

    Lanczos approximation (g=7, 9 terms); arguments below 0.5 are shifted
    up with ``Gamma(x) = Gamma(x + 1) / x``. Integer arguments return the
    correctly rounded factorial. Returns ``inf`` once the result overflows a
    double (x > ~171.6).

    Raises
    ------
    ValueError
        If ``x <= 0`` or ``x`` is nan.
    """
    x = _check_domain(x)
    if x == math.inf:
        return math.inf
    if x < 0.5:
        return gamma(x + 1.0) / x
    if x.is_integer() and x <= 171.0:
        return float(math.factorial(int(x) - 1))
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    # split the power so that t**(z+0.5) * exp(-t) does not overflow early
    try:
        half = t ** (0.5 * (z + 0.5))
    except OverflowError:
        return math.inf
    return _SQRT_2PI * half * math.exp(-t) * half * _lanczos_sum(z)


def ln_gamma(x):
    """Natural log of the Gamma function for ``x > 0``."""
    x = _check_domain(x)
    if x == math.inf:
        return math.inf
    if x < 0.5:
        return ln_gamma(x + 1.0) - math.log(x)
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * math.log(t) - t + math.log(_lanczos_sum(z))


# Euler-Maclaurin tail coefficients B_{2m} / (2m)!
_EM_COEF = (
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
)


def zeta(n):
    """Riemann zeta at an integer ``n >= 2``."""
    if int(n) != n or n < 2:
        raise ValueError(f"zeta is only provided for integers n >= 2, got {n!r}")
    n = int(n)
    N = 10
    head = math.fsum(k ** -float(n) for k in range(1, N))
    tail = N ** (1.0 - n) / (n - 1) + 0.5 * N ** -float(n)
    rising = float(n)  # n (n+1) ... (n + 2m - 2)
    power = N ** (-n - 1.0)
    for m, c in enumerate(_EM_COEF, start=1):
        tail += c * rising * power
        rising *= (n + 2 * m - 1) * (n + 2 * m)
        power /= N * N
    return head + tail


_ZETA_TABLE = tuple(zeta(n) for n in range(2, 64))


def ln_gamma1m(z):
    """``ln Gamma(1 - z)`` for ``|z| <= 0.25``, accurate relative to ``z``.

    Uses the Taylor series ``gamma*z + sum_{n>=2} zeta(n) z**n / n``, which
    keeps full relative precision as ``z -> 0`` where the Lanczos form loses
    it to cancellation.
    """
    z = float(z)
    if abs(z) > 0.25:
        raise ValueError(f"series only used for |z| <= 0.25, got {z!r}")
    return EULER_GAMMA * z + ln_gamma1m_excess(z)


def ln_gamma1m_excess(z):
    """``ln Gamma(1 - z) - EULER_GAMMA * z`` for ``|z| <= 0.25``.

    The quadratic and higher part of the series, computed without ever
    forming the linear term.
    """
    z = float(z)
    if abs(z) > 0.25:
        raise ValueError(f"series only used for |z| <= 0.25, got {z!r}")
    if z == 0.0:
        return 0.0
    terms = []
    zn = z
    for n, zt in enumerate(_ZETA_TABLE, start=2):
        zn *= z
        term = zt * zn / n
        terms.append(term)
        if abs(term) < 1e-18 * abs(terms[0]):
            break
    return math.fsum(terms)
