#!/usr/bin/env python3
"""
Student t Distribution Helpers

Two-tailed significance from the regularized incomplete beta function, and
the matching quantile found by root finding on that same function, so that
quantile and p-value are exact inverses of each other.
"""

import logging
import math

from scipy.optimize import brentq
from scipy.special import betainc

from models.errors import ValidationError


logger = logging.getLogger(__name__)


def _check_df(df: int):
    if isinstance(df, bool) or not isinstance(df, int) or df < 1:
        raise ValidationError(f"degrees of freedom must be a positive integer, got {df!r}", field="df")


def student_t_two_tailed_p(t: float, df: int) -> float:
    """
    P(|T| >= |t|) for Student's t with df degrees of freedom

    Uses P = I_x(df/2, 1/2) with x = df / (df + t^2), the regularized
    incomplete beta function.

    Args:
        t: t statistic (any sign; +/-inf gives 0, nan gives nan)
        df: Degrees of freedom, >= 1

    Returns:
        Two-tailed probability in [0, 1]
    """
    _check_df(df)
    t = float(t)
    if math.isnan(t):
        return math.nan
    if t == 0.0:
        return 1.0
    if math.isinf(t):
        return 0.0
    x = df / (df + t * t)
    return float(betainc(df / 2.0, 0.5, x))


def t_quantile_two_tailed(level: float, df: int) -> float:
    """
    Critical value t such that P(|T| >= t) = 1 - level

    Args:
        level: Confidence level in (0, 1)
        df: Degrees of freedom, >= 1

    Returns:
        Positive t quantile (the (1 + level) / 2 quantile of Student's t)

    Raises:
        ValidationError: level outside (0, 1)
    """
    _check_df(df)
    level = float(level)
    if not 0.0 < level < 1.0:
        raise ValidationError(f"confidence level must be in (0, 1), got {level}", field="level")

    target = 1.0 - level

    def excess(t: float) -> float:
        return student_t_two_tailed_p(t, df) - target

    upper = 1.0
    while excess(upper) > 0.0:
        upper *= 2.0
        if upper > 1e12:
            raise ValidationError(f"cannot bracket t quantile for level={level}, df={df}", field="level")

    quantile = brentq(excess, 0.0, upper, xtol=1e-12, maxiter=200)
    logger.debug(f"t quantile level={level} df={df}: {quantile:.9f}")
    return quantile
