"""Tests for the high-accuracy reference evaluator."""

import math

import numpy as np
import pytest

from mlpade import (
    DomainError,
    NonConvergenceError,
    OracleConfig,
    classify,
    ml_asymptotic,
    ml_closed_form,
    ml_oracle,
    ml_taylor,
)
from mlpade.special import erfcx, rgamma

# values frozen from an independent 60-digit mpmath series summation
FROZEN = {
    (0.3, 0.7, 1.0): 0.31378877553687531,
    (0.7, 1.3, 10.0): 0.067866176036478593,
    (0.9, 2.0, 15.0): 0.069028077051786624,
    (0.45, 0.9, 8.0): 0.063000129425177368,
    (0.6, 0.6, 7.0): 0.0059423373032661807,
    (1.0, 1.5, 12.0): 0.049297538391518155,
}

CLOSED_FORM_PAIRS = [(0.5, 1.5), (0.5, 1.0), (0.5, 0.5), (1.0, 2.0), (1.0, 1.0)]


def test_config_validation():
    with pytest.raises(DomainError):
        OracleConfig(taylor_cutoff=10.0, asym_cutoff=5.0)
    with pytest.raises(DomainError):
        OracleConfig(max_terms=3)
    with pytest.raises(DomainError):
        OracleConfig(term_tol=1e-3)
    OracleConfig()  # defaults are valid


def test_taylor_at_origin():
    assert ml_taylor(classify(0.5, 1.5), 0.0) == pytest.approx(
        2.0 / math.sqrt(math.pi), rel=1e-15
    )
    assert ml_taylor(classify(0.3, 0.9), 0.0) == rgamma(0.9)
    assert ml_taylor(classify(1.0, 1.0), 1.0) == pytest.approx(
        math.exp(-1.0), rel=1e-14
    )


def test_taylor_rejects_negative_argument():
    with pytest.raises(DomainError):
        ml_taylor(classify(0.5, 1.5), -1.0)


def test_taylor_nonconvergence_when_budget_too_small():
    # at alpha=0.3, x=5 the terms peak near k ~ 700, past the default budget
    with pytest.raises(NonConvergenceError):
        ml_taylor(classify(0.3, 0.7), 5.0)


def test_frozen_oracle_values():
    for (a, b, x), want in FROZEN.items():
        got = ml_oracle(classify(a, b), x)
        assert got == pytest.approx(want, rel=1e-10), (a, b, x)


def test_oracle_at_zero():
    for a, b in [(0.3, 0.8), (0.5, 1.5), (0.9, 0.9), (1.0, 3.0)]:
        assert ml_oracle(classify(a, b), 0.0) == rgamma(b)


def test_closed_forms():
    x = 1.7
    assert ml_closed_form(classify(0.5, 1.0), x) == erfcx(x)
    assert ml_closed_form(classify(0.5, 1.5), x) == pytest.approx(
        (1.0 - erfcx(x)) / x, rel=1e-15
    )
    assert ml_closed_form(classify(0.5, 0.5), x) == pytest.approx(
        1.0 / math.sqrt(math.pi) - x * erfcx(x), rel=1e-12
    )
    assert ml_closed_form(classify(1.0, 2.0), x) == pytest.approx(
        (1.0 - math.exp(-x)) / x, rel=1e-15
    )
    assert ml_closed_form(classify(1.0, 1.0), x) == math.exp(-x)
    assert ml_closed_form(classify(0.3, 0.7), x) is None


def test_closed_forms_at_zero_equal_rgamma_beta():
    for a, b in CLOSED_FORM_PAIRS:
        assert ml_closed_form(classify(a, b), 0.0) == rgamma(b)


def test_taylor_matches_closed_form_small_x():
    for a, b in CLOSED_FORM_PAIRS:
        params = classify(a, b)
        for x in np.linspace(0.0, 2.0, 81):
            series = ml_taylor(params, float(x))
            closed = ml_closed_form(params, float(x))
            assert abs(series - closed) <= 1e-10, (a, b, x)


def test_asymptotic_matches_closed_form():
    # (1/2, 3/2) at x = 1e4: leading term 1/(Gamma(1) x)
    p = classify(0.5, 1.5)
    got = ml_asymptotic(p, 1e4)
    want = ml_closed_form(p, 1e4)
    assert got == pytest.approx(want, rel=1e-6)
    assert got == pytest.approx(1e-4, rel=1e-3)

    # (1/2, 1) at x = 100 against erfcx
    p = classify(0.5, 1.0)
    assert ml_asymptotic(p, 100.0) == pytest.approx(erfcx(100.0), rel=1e-6)


def test_asymptotic_diagonal_pole_kills_first_term():
    # for alpha=beta=1/2 the k=1 coefficient is rgamma(0)=0, so the series
    # starts at the x^-2 term with coefficient -rgamma(-1/2) = 1/(2 sqrt(pi))
    p = classify(0.5, 0.5)
    x = 80.0
    got = ml_asymptotic(p, x)
    lead = -rgamma(-0.5) / (x * x)
    assert got == pytest.approx(lead, rel=1e-3)
    assert got == pytest.approx(ml_closed_form(p, x), rel=1e-10)


def test_asymptotic_requires_positive_x():
    with pytest.raises(DomainError):
        ml_asymptotic(classify(0.5, 1.5), 0.0)


def test_oracle_positive_and_nonincreasing():
    for a, b in [(0.3, 0.8), (0.55, 1.4), (0.8, 0.8), (1.0, 2.5)]:
        params = classify(a, b)
        vals = [ml_oracle(params, float(x)) for x in np.geomspace(1e-3, 1e3, 1000)]
        arr = np.array(vals)
        assert np.all(arr > 0.0), (a, b)
        assert np.all(np.diff(arr) <= 1e-15), (a, b)


def test_oracle_recurrence_identity():
    # E_{a,b}(-x) = -x E_{a,a+b}(-x) + 1/Gamma(b)
    for a, b in [(0.35, 0.9), (0.6, 1.1), (0.85, 0.85), (1.0, 1.7)]:
        left = classify(a, b)
        right = classify(a, a + b)
        for x in np.geomspace(1e-3, 1e3, 200):
            lhs = ml_oracle(left, float(x))
            rhs = -x * ml_oracle(right, float(x)) + rgamma(b)
            assert abs(lhs - rhs) <= 1e-9, (a, b, x)


def test_oracle_mid_range_continuity():
    # no visible jump across the Taylor/asymptotic crossovers
    params = classify(0.75, 1.2)
    xs = np.geomspace(1.0, 60.0, 600)
    vals = np.array([ml_oracle(params, float(x)) for x in xs])
    ratios = vals[1:] / vals[:-1]
    assert np.all(ratios > 0.8) and np.all(ratios < 1.0 + 1e-12)
