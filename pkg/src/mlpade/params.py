"""Parameter validation and regime classification for E_{alpha,beta}(-x).

The approximation construction splits into five mutually exclusive regimes
inside the complete-monotonicity region {0 < alpha <= 1, beta >= alpha}.
"""

import enum
import math
from dataclasses import dataclass

from .errors import ParameterDomainError

__all__ = ["Regime", "MLParams", "classify"]


class Regime(enum.Enum):
    GENERAL_SUB = "general"           # 0 < alpha < 1, beta > alpha, beta != 1
    BETA_ONE = "beta_one"             # 0 < alpha < 1, beta = 1
    DIAGONAL = "diagonal"             # 0 < alpha = beta < 1
    ALPHA_ONE = "alpha_one"           # alpha = 1, beta > 1
    PURE_EXPONENTIAL = "exponential"  # alpha = beta = 1


@dataclass(frozen=True)
class MLParams:
    alpha: float
    beta: float
    regime: Regime


def classify(alpha: float, beta: float) -> MLParams:
    """Validate (alpha, beta) and assign its unique regime tag.

    Raises ParameterDomainError outside {0 < alpha <= 1, beta >= alpha}.
    """
    alpha = float(alpha)
    beta = float(beta)
    if not (math.isfinite(alpha) and math.isfinite(beta)):
        raise ParameterDomainError(f"non-finite parameters ({alpha!r}, {beta!r})")
    if not (0.0 < alpha <= 1.0 and beta >= alpha):
        raise ParameterDomainError(
            f"(alpha={alpha!r}, beta={beta!r}) outside the region "
            "0 < alpha <= 1, beta >= alpha"
        )
    if alpha == 1.0:
        regime = Regime.PURE_EXPONENTIAL if beta == 1.0 else Regime.ALPHA_ONE
    elif beta == alpha:
        regime = Regime.DIAGONAL
    elif beta == 1.0:
        regime = Regime.BETA_ONE
    else:
        regime = Regime.GENERAL_SUB
    return MLParams(alpha, beta, regime)
