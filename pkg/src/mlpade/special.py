"""Gamma-family and error-function primitives with explicit pole semantics.

Everything downstream routes reciprocal-gamma factors through :func:`rgamma`
so that parameter combinations hitting poles of Gamma produce an exact zero
instead of an overflow or NaN.
"""

import math

from scipy import special as _sc

from .errors import DomainError, PoleError

__all__ = ["gamma", "rgamma", "erfc", "erfcx", "is_nonpositive_integer"]


def is_nonpositive_integer(x: float) -> bool:
    """Exact binary test: x is one of 0, -1, -2, ..."""
    return math.isfinite(x) and x <= 0.0 and x == math.floor(x)


def gamma(x: float) -> float:
    """Gamma function. Raises PoleError at nonpositive integers."""
    if is_nonpositive_integer(x):
        raise PoleError(f"gamma pole at x={x!r}")
    return float(_sc.gamma(x))


def rgamma(x: float) -> float:
    """Reciprocal gamma 1/Gamma(x); entire, exactly 0 at nonpositive integers."""
    if is_nonpositive_integer(x):
        return 0.0
    return float(_sc.rgamma(x))


def erfc(x: float) -> float:
    """Complementary error function."""
    return float(_sc.erfc(x))


def erfcx(x: float) -> float:
    """Scaled complementary error function exp(x^2)*erfc(x), overflow-free.

    Restricted to x >= 0, which is all the Mittag-Leffler closed forms need.
    """
    if x < 0.0:
        raise DomainError(f"erfcx requires x >= 0, got {x!r}")
    return float(_sc.erfcx(x))
