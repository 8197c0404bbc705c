"""Tests for the gamma-family and error-function primitives."""

import math

import numpy as np
import pytest

from mlpade import DomainError, PoleError
from mlpade.special import erfc, erfcx, gamma, is_nonpositive_integer, rgamma

SQRT_PI = math.sqrt(math.pi)

# oracle: integral of the Gaussian tail, mpmath.erfc(1) at 60 digits
ERFC_1 = 0.15729920705028513
# oracle: mpmath exp(2500)*erfc(50) at 60 digits
ERFCX_50 = 0.011281536265323773


def test_gamma_half_integers():
    assert gamma(0.5) == pytest.approx(SQRT_PI, rel=1e-15)
    assert gamma(1.5) == pytest.approx(SQRT_PI / 2.0, rel=1e-15)
    assert gamma(1.0) == 1.0


@pytest.mark.parametrize("x", [0.0, -1.0, -2.0, -170.0])
def test_gamma_pole_raises(x):
    with pytest.raises(PoleError):
        gamma(x)


def test_gamma_pole_test_is_exact():
    # nearby non-integers must not trip the pole detector
    assert math.isfinite(gamma(-1.0 + 1e-13))
    assert math.isfinite(gamma(1e-300))


def test_rgamma_at_poles_is_exact_zero():
    assert rgamma(0.0) == 0.0
    assert rgamma(-1.0) == 0.0
    assert rgamma(-7.0) == 0.0
    assert rgamma(2.0) == 1.0


def test_is_nonpositive_integer():
    assert is_nonpositive_integer(0.0)
    assert is_nonpositive_integer(-3.0)
    assert not is_nonpositive_integer(1.0)
    assert not is_nonpositive_integer(-0.5)
    assert not is_nonpositive_integer(float("nan"))
    assert not is_nonpositive_integer(float("-inf"))


def test_erfc_values():
    assert erfc(0.0) == 1.0
    assert erfc(30.0) < 1e-300
    assert erfc(1.0) == pytest.approx(ERFC_1, rel=1e-12)


def test_erfcx_values():
    assert erfcx(0.0) == 1.0
    assert erfcx(50.0) == pytest.approx(ERFCX_50, rel=1e-12)
    # no-overflow product identity where both factors are representable
    assert erfcx(1.0) == pytest.approx(math.e * erfc(1.0), rel=1e-13)


def test_erfcx_rejects_negative():
    with pytest.raises(DomainError):
        erfcx(-1e-6)


def test_gamma_rgamma_roundtrip():
    for x in np.linspace(0.05, 160.0, 1200):
        assert gamma(x) * rgamma(x) == pytest.approx(1.0, rel=1e-12)


def test_gamma_recurrence():
    for x in np.linspace(0.1, 100.0, 700):
        assert gamma(x + 1.0) == pytest.approx(x * gamma(x), rel=1e-12)


def test_rgamma_reflection():
    # -1/Gamma(-a) = Gamma(1+a) sin(pi a)/pi, the identity behind the
    # diagonal-case asymptotic coefficient
    for a in np.linspace(0.01, 0.99, 99):
        lhs = -rgamma(-a)
        rhs = gamma(1.0 + a) * math.sin(math.pi * a) / math.pi
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_erfcx_strictly_decreasing():
    xs = np.linspace(0.0, 700.0, 10_000)
    vals = np.array([erfcx(x) for x in xs])
    assert vals[0] == 1.0
    assert np.all(vals > 0.0)
    assert np.all(vals <= 1.0)
    assert np.all(np.diff(vals) < 0.0)
