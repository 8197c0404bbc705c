"""Inverse of the degree-2 approximants on (0, 1/Gamma(beta)].

Rather than transcribing the four regime-specific inverse formulas, the
inverse solves the quadratic obtained from the unified rational form

    d2*X^2 + (d1 - n1/y)*X + (1 - n0/y) = 0

with the cancellation-safe quadratic formula: the larger-magnitude root is
evaluated with the sign-matched numerator and the other recovered from the
product of roots, so the small root near the y = 1/Gamma(beta) boundary
keeps full precision.
"""

import math

from .errors import BranchError, DomainError
from .pade import RationalApprox, build_approx, eval_approx
from .params import MLParams, Regime
from .special import rgamma

__all__ = ["inv_domain", "inv_pade", "inv_pade_from_approx"]

_DISC_CLAMP = -1e-12


def inv_domain(params: MLParams) -> tuple[float, float]:
    """Half-open domain (lo, hi] of the inverse: lo = 0, hi = 1/Gamma(beta)."""
    return 0.0, rgamma(params.beta)


def inv_pade_from_approx(approx: RationalApprox, y: float) -> float:
    """Nonnegative solution X of approx(X) = y."""
    if approx.regime is Regime.PURE_EXPONENTIAL:
        if not 0.0 < y <= 1.0:
            raise DomainError(f"y={y!r} outside (0, 1]")
        return -math.log(y)
    n0 = approx.n0
    if not 0.0 < y <= n0:
        raise DomainError(f"y={y!r} outside (0, {n0!r}]")
    a = approx.d2
    b = approx.d1 - approx.n1 / y
    c = 1.0 - n0 / y
    if y == n0:
        # exact boundary: X = 0 is a root since c vanishes identically
        return 0.0
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        if disc < _DISC_CLAMP:
            raise BranchError(
                f"negative discriminant {disc!r} beyond rounding tolerance"
            )
        disc = 0.0
    sq = math.sqrt(disc)
    q = -0.5 * (b + sq) if b >= 0.0 else -0.5 * (b - sq)
    if q == 0.0:
        return 0.0  # double root at the origin
    r1 = q / a
    r2 = c / q
    if r1 >= 0.0 and r2 >= 0.0:
        raise BranchError(
            f"both roots nonnegative at y={y!r}; the approximant is not "
            "monotone there and the inverse branch is ambiguous"
        )
    return r2 if r2 >= 0.0 else r1


def inv_pade(params: MLParams, y: float) -> float:
    """Inverse approximant -L_{alpha,beta}(y) for y in (0, 1/Gamma(beta)]."""
    return inv_pade_from_approx(build_approx(params), y)
