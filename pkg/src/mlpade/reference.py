"""High-accuracy reference evaluator for E_{alpha,beta}(-x) on [0, inf).

Strategy, per argument range:

* closed form (erfcx / exp based) for the parameter pairs that admit one;
* alternating Taylor series for small x, summed with compensated
  accumulation, escalating to arbitrary-precision coefficients once the
  series' internal cancellation would eat double precision;
* the algebraic asymptotic series for large x, truncated at its
  smallest-magnitude term.  The term magnitudes oscillate through the
  sin factor of the reflection formula, so truncation tracks the smooth
  envelope Gamma(1 + alpha*k - beta) / (pi * x^k) instead of the raw
  magnitudes.  Empirically the truncated tail is at machine-precision
  level once x**(1/alpha) >= 40, for all alpha in (0, 1].

Accuracy target: absolute error <= 1e-10 up to the asymptotic cutoff,
relative error <= 1e-6 beyond it.
"""

import math
from dataclasses import dataclass

import mpmath

from .errors import DomainError, NonConvergenceError
from .params import MLParams, Regime
from .special import erfcx, rgamma

__all__ = [
    "OracleConfig",
    "DEFAULT_CONFIG",
    "ml_taylor",
    "ml_asymptotic",
    "ml_closed_form",
    "ml_oracle",
]

_LN_PI = math.log(math.pi)
_LN_TINY = -745.0
# x**(1/alpha) above which the optimally truncated asymptotic series is
# accurate to ~1e-15 relative (validated against high-precision Taylor sums).
_ASYM_CERT_EXPONENT = 40.0
# peak log-term above which the float Taylor path loses too many digits
_FLOAT_LOSS_LIMIT = 7.0


@dataclass(frozen=True)
class OracleConfig:
    """Crossover thresholds and term budget for the reference evaluator."""

    taylor_cutoff: float = 5.0
    asym_cutoff: float = 30.0
    max_terms: int = 400
    term_tol: float = 1e-17

    def __post_init__(self):
        if not (0.0 < self.taylor_cutoff <= self.asym_cutoff):
            raise DomainError("need 0 < taylor_cutoff <= asym_cutoff")
        if self.max_terms < 10:
            raise DomainError("max_terms must be >= 10")
        if not (0.0 < self.term_tol <= 1e-6):
            raise DomainError("term_tol must lie in (0, 1e-6]")


DEFAULT_CONFIG = OracleConfig()


def _peak_log_term(alpha: float, beta: float, x: float) -> tuple[float, int]:
    """Peak natural-log magnitude of the Taylor terms x^k/Gamma(alpha*k+beta)
    and the index where it occurs."""
    if x <= 1.0:
        return 0.0, 0
    lnx = math.log(x)
    kpeak = max(0.0, (x ** (1.0 / alpha) - beta) / alpha)
    best = 0.0
    for k in (kpeak * 0.5, kpeak * 0.9, kpeak, kpeak * 1.1):
        best = max(best, k * lnx - math.lgamma(alpha * k + beta))
    return best, int(kpeak) + 1


def _neumaier(s: float, c: float, t: float) -> tuple[float, float]:
    tot = s + t
    if abs(s) >= abs(t):
        c += (s - tot) + t
    else:
        c += (t - tot) + s
    return tot, c


def _taylor_float(alpha, beta, x, term_tol, max_terms, kpeak):
    lnx = math.log(x) if x > 0.0 else -math.inf
    s, c = rgamma(beta), 0.0
    prev_mag = abs(s)
    growing = False
    for k in range(1, max_terms + 1):
        lt = k * lnx
        if lt < 700.0:
            mag = math.pow(x, k) * abs(rgamma(alpha * k + beta))
        else:
            mag = math.exp(min(700.0, lt - math.lgamma(alpha * k + beta)))
        t = mag if k % 2 == 0 else -mag
        s, c = _neumaier(s, c, t)
        growing = mag > prev_mag
        prev_mag = mag
        if mag < term_tol * abs(s + c):
            return s + c
        if t == 0.0 and k > kpeak:
            return s + c
    if growing:
        raise NonConvergenceError(
            f"Taylor series still growing after {max_terms} terms "
            f"(alpha={alpha}, beta={beta}, x={x})"
        )
    return s + c


# per-(alpha, beta) cache of arbitrary-precision series coefficients
_COEFF_CACHE: dict[tuple[float, float], tuple[int, list]] = {}


def _taylor_coeffs(alpha: float, beta: float, n: int, digits: int) -> list:
    if len(_COEFF_CACHE) > 32:
        _COEFF_CACHE.clear()
    dps_have, coeffs = _COEFF_CACHE.get((alpha, beta), (0, []))
    if digits > dps_have:
        dps_have = digits + 20
        coeffs = []
    if n > len(coeffs):
        with mpmath.workdps(dps_have):
            am, bm = mpmath.mpf(alpha), mpmath.mpf(beta)
            for k in range(len(coeffs), n):
                coeffs.append(mpmath.rgamma(am * k + bm))
    _COEFF_CACHE[(alpha, beta)] = (dps_have, coeffs)
    return coeffs


def _taylor_mp(alpha, beta, x, max_terms, kpeak, peak_log):
    digits = max(35, int(peak_log / math.log(10)) + 35)
    with mpmath.workdps(digits):
        xm = mpmath.mpf(x)
        stop = mpmath.mpf(10) ** (-digits + 8)
        s = mpmath.mpf(0)
        pw = mpmath.mpf(1)
        # past the peak the terms decay slower than they grew, so the
        # working budget extends beyond max_terms until the tail is below
        # the precision floor (small alpha needs many post-peak terms)
        budget = max(max_terms, 2 * kpeak + 100)
        cap = 500_000
        k = 0
        while True:
            coeffs = _taylor_coeffs(alpha, beta, budget + 1, digits)
            while k <= budget:
                t = pw * coeffs[k]
                s += t
                if k > kpeak and abs(t) < stop * (abs(s) + 1):
                    return float(s)
                pw *= -xm
                k += 1
            if budget >= cap:
                raise NonConvergenceError(
                    f"Taylor series tail not negligible after {budget} terms "
                    f"(alpha={alpha}, beta={beta}, x={x})"
                )
            budget = min(cap, 2 * budget)


def _taylor_sum(alpha, beta, x, term_tol, max_terms):
    peak_log, kpeak = _peak_log_term(alpha, beta, x)
    if kpeak >= max_terms:
        raise NonConvergenceError(
            f"Taylor terms peak near k={kpeak}, beyond the budget of "
            f"{max_terms} terms (alpha={alpha}, beta={beta}, x={x})"
        )
    if peak_log <= _FLOAT_LOSS_LIMIT:
        return _taylor_float(alpha, beta, x, term_tol, max_terms, kpeak)
    return _taylor_mp(alpha, beta, x, max_terms, kpeak, peak_log)


def ml_taylor(params: MLParams, x: float, cfg: OracleConfig = DEFAULT_CONFIG) -> float:
    """Taylor sum of E_{alpha,beta}(-x); intended for x <= cfg.taylor_cutoff.

    Raises NonConvergenceError if cfg.max_terms is exhausted while the
    terms are still growing.
    """
    if x < 0.0 or not math.isfinite(x):
        raise DomainError(f"ml_taylor requires finite x >= 0, got {x!r}")
    return _taylor_sum(params.alpha, params.beta, x, cfg.term_tol, cfg.max_terms)


def ml_asymptotic(params: MLParams, x: float, n_terms: int = 400) -> float:
    """Algebraic large-x series -sum_{k>=1} (-x)^{-k} / Gamma(beta - alpha*k),
    truncated at the smallest term of its magnitude envelope.
    """
    if x <= 0.0:
        raise DomainError(f"ml_asymptotic requires x > 0, got {x!r}")
    alpha, beta = params.alpha, params.beta
    lnx = math.log(x)
    s, c = 0.0, 0.0
    prev_env = math.inf
    for k in range(1, n_terms + 1):
        z = beta - alpha * k
        if z >= 0.5:
            env = -math.lgamma(z) - k * lnx
        else:
            env = math.lgamma(1.0 - z) - _LN_PI - k * lnx
        if env > prev_env + 1e-9:
            break  # optimal truncation: envelope starts growing
        prev_env = env
        tot = s + c
        if env < _LN_TINY or (tot != 0.0 and env < math.log(abs(tot)) - 42.0):
            break
        rg = rgamma(z)
        if rg == 0.0:
            continue
        if not math.isfinite(rg):
            break
        t = math.pow(x, -k) * rg
        if k % 2 == 0:
            t = -t
        s, c = _neumaier(s, c, t)
    return s + c


def ml_closed_form(params: MLParams, x: float) -> float | None:
    """Exact value for the parameter pairs with an erfcx/exp closed form,
    else None."""
    if x < 0.0 or not math.isfinite(x):
        raise DomainError(f"ml_closed_form requires finite x >= 0, got {x!r}")
    a, b = params.alpha, params.beta
    if params.regime is Regime.PURE_EXPONENTIAL:
        return math.exp(-x)
    if a == 0.5:
        if b == 1.0:
            return erfcx(x)
        if b == 1.5:
            return rgamma(1.5) if x == 0.0 else (1.0 - erfcx(x)) / x
        if b == 0.5:
            return rgamma(0.5) - x * erfcx(x)
    if a == 1.0 and b == 2.0:
        return 1.0 if x == 0.0 else (1.0 - math.exp(-x)) / x
    return None


def ml_oracle(params: MLParams, x: float, cfg: OracleConfig = DEFAULT_CONFIG) -> float:
    """Reference value of E_{alpha,beta}(-x), dispatching closed form,
    Taylor, or asymptotic evaluation by argument range."""
    cf = ml_closed_form(params, x)
    if cf is not None:
        return cf
    if x == 0.0:
        return rgamma(params.beta)
    alpha = params.alpha
    # certified asymptotic region: x**(1/alpha) large enough that the
    # optimally truncated tail is negligible
    if x >= cfg.asym_cutoff or math.log(x) / alpha >= math.log(_ASYM_CERT_EXPONENT):
        return ml_asymptotic(params, x, max(cfg.max_terms, 400))
    if x <= cfg.taylor_cutoff:
        return ml_taylor(params, x, cfg)
    if alpha < 0.1:
        raise NonConvergenceError(
            f"no trusted evaluation in the mid range for alpha={alpha} < 0.1"
        )
    # mid range: Taylor with raised term budget and escalated precision
    _, kpeak = _peak_log_term(alpha, params.beta, x)
    budget = max(cfg.max_terms, 3 * kpeak + 200)
    return _taylor_sum(alpha, params.beta, x, cfg.term_tol, budget)
