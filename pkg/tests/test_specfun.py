import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from frechet_kl.quadrature import IntegrandDomain, integrate_adaptive
from frechet_kl.specfun import EULER_GAMMA, gamma, ln_gamma, ln_gamma1m, ln_gamma1m_excess, zeta


@pytest.mark.parametrize("x, expected", [(1.0, 1.0), (5.0, 24.0), (0.5, 1.7724538509055160)])
def test_gamma_examples(x, expected):
    assert gamma(x) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("x, expected", [(1.0, 0.0), (2.0, 0.0), (0.5, 0.5723649429247001)])
def test_ln_gamma_examples(x, expected):
    assert ln_gamma(x) == pytest.approx(expected, abs=1e-15)


def test_euler_constant_literal():
    assert abs(EULER_GAMMA - 0.5772156649015329) <= 1e-15
    assert EULER_GAMMA == pytest.approx(float(mpmath.euler), abs=1e-16)


def test_gamma_relative_accuracy_on_0_30():
    xs = np.concatenate([np.geomspace(1e-8, 1.0, 400), np.linspace(1.0, 30.0, 2000)])
    worst = max(abs(gamma(x) / float(mpmath.gamma(x)) - 1.0) for x in xs)
    assert worst <= 1e-13


def test_ln_gamma_absolute_accuracy_on_0_100():
    xs = np.concatenate([np.geomspace(1e-8, 1.0, 200), np.linspace(1.0, 100.0, 2000)])
    worst = max(abs(ln_gamma(x) - float(mpmath.loggamma(x))) for x in xs)
    assert worst <= 1e-12


@pytest.mark.parametrize("n", range(1, 13))
def test_gamma_factorials(n):
    assert gamma(n) == pytest.approx(math.factorial(n - 1), rel=1e-12)


@given(st.floats(0.1, 20.0))
def test_gamma_recurrence(x):
    assert abs(gamma(x + 1) - x * gamma(x)) / gamma(x + 1) <= 1e-12


@given(st.floats(1e-3, 170.0))
def test_exp_ln_gamma_matches_gamma(x):
    assert math.exp(ln_gamma(x)) == pytest.approx(gamma(x), rel=1e-12)


def test_gamma_overflow_is_inf():
    assert gamma(172.0) == math.inf
    assert gamma(500.5) == math.inf
    assert math.isfinite(gamma(171.5))


@pytest.mark.parametrize("bad", [0.0, -1.0, -0.5, float("nan")])
def test_domain_errors(bad):
    with pytest.raises(ValueError):
        gamma(bad)
    with pytest.raises(ValueError):
        ln_gamma(bad)


def test_zeta_values():
    for n in range(2, 40):
        assert zeta(n) == pytest.approx(float(mpmath.zeta(n)), rel=2e-16)
    with pytest.raises(ValueError):
        zeta(1)


@pytest.mark.parametrize("z", [-0.25, -1e-3, 1e-9, 1e-4, 0.1, 0.25])
def test_ln_gamma1m_series(z):
    ref = mpmath.loggamma(1 - mpmath.mpf(z))
    assert ln_gamma1m(z) == pytest.approx(float(ref), rel=1e-14)
    assert ln_gamma1m_excess(z) == pytest.approx(float(ref - mpmath.euler * z), rel=1e-13)


def test_euler_constant_by_quadrature():
    # gamma = -int_0^inf ln(t) exp(-t) dt
    res = integrate_adaptive(lambda t: np.log(t) * np.exp(-t), IntegrandDomain.exponential(1.0), 1e-10)
    assert res.value == pytest.approx(-EULER_GAMMA, abs=1e-8)
