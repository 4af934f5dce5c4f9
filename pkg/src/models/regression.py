#!/usr/bin/env python3
"""
Linear Model

Fitted or published simple regression FP = b0 + b1 * counter, with the
diagnostics a statistics package prints in its "Summary of the model" and
"Coefficients" tables.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class ModelSource(str, Enum):
    """Where a model's numbers come from"""

    FIT = "fit"        # computed by fit_simple_ols; all invariants hold exactly
    PUBLISHED = "published"  # printed 3-decimal constants; invariants hold only to print precision


@dataclass(frozen=True)
class LinearModel:
    """
    Simple linear regression y = intercept + slope * x

    Attributes:
        n: Sample size
        intercept, se_intercept: b0 and its standard error
        slope, se_slope: b1 and its standard error
        r: Correlation coefficient
        r2: Coefficient of determination
        r2_adj: Adjusted R squared
        se_est: Standard error of the estimate
        beta_std: Standardized slope (equals r for one predictor)
        t_intercept, t_slope: t statistics
        p_intercept, p_slope: Two-tailed significance with n - 2 degrees of freedom
        predictor_name: Display name of x (e.g. CILF)
        response_name: Display name of y
        x_mean, sxx: Mean of x and centered sum of squares, needed for intervals
        degenerate: True when y is constant (slope and r forced to 0)
        source: ModelSource.FIT or ModelSource.PUBLISHED
    """

    n: int
    intercept: float
    se_intercept: float
    slope: float
    se_slope: float
    r: float
    r2: float
    r2_adj: float
    se_est: float
    beta_std: float
    t_intercept: float
    t_slope: float
    p_intercept: float
    p_slope: float
    predictor_name: str = "x"
    response_name: str = "FP"
    x_mean: Optional[float] = None
    sxx: Optional[float] = None
    degenerate: bool = False
    source: ModelSource = ModelSource.FIT

    # Coefficient aliases
    @property
    def b0(self) -> float:
        return self.intercept

    @property
    def b1(self) -> float:
        return self.slope

    @property
    def can_compute_interval(self) -> bool:
        return self.x_mean is not None and self.sxx is not None and self.sxx > 0 and self.n > 2

    def equation(self, decimals: int = 3) -> str:
        """e.g. "FP = 130.327 + 15.902 * CILF" """
        sign = "-" if self.slope < 0 else "+"
        return (
            f"{self.response_name} = {self.intercept:.{decimals}f} {sign} "
            f"{abs(self.slope):.{decimals}f} * {self.predictor_name}"
        )

    def __repr__(self) -> str:
        return (
            f"LinearModel({self.equation()}, n={self.n}, r={self.r:.3f}, "
            f"source={self.source.value})"
        )
