#!/usr/bin/env python3
"""
Simple Ordinary Least Squares

Closed-form fit of y = b0 + b1 * x with the full diagnostic set: R, R
squared, adjusted R squared, standard error of the estimate, coefficient
standard errors, t statistics and two-tailed significance. Sums are
centered (two-pass); internal values are never rounded.
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from models.errors import DegeneratePredictorError, InsufficientDataError, ValidationError
from models.regression import LinearModel, ModelSource
from regression.student_t import student_t_two_tailed_p


logger = logging.getLogger(__name__)

Point = Tuple[float, float]

MIN_POINTS = 3


def _ratio(numerator: float, denominator: float) -> float:
    """numerator / denominator with x/0 = +/-inf and 0/0 = nan"""
    if denominator == 0.0:
        return math.copysign(math.inf, numerator) if numerator != 0.0 else math.nan
    return numerator / denominator


def _as_arrays(points: Sequence[Point]) -> Tuple[np.ndarray, np.ndarray]:
    data = np.asarray(points, dtype=float)
    if data.size == 0:
        return np.empty(0), np.empty(0)
    if data.ndim != 2 or data.shape[1] != 2:
        raise ValidationError("points must be a sequence of (x, y) pairs", field="points")
    if not np.all(np.isfinite(data)):
        raise ValidationError("points must be finite numbers", field="points")
    return data[:, 0], data[:, 1]


def adjusted_r2_for_n(r2: float, n: int) -> float:
    """1 - (1 - R^2)(n - 1)/(n - 2) for a one-predictor model"""
    if n < MIN_POINTS:
        raise InsufficientDataError(f"adjusted R squared needs n >= {MIN_POINTS}, got {n}", field="n")
    return 1.0 - (1.0 - r2) * (n - 1) / (n - 2)


def fit_simple_ols(
    points: Sequence[Point],
    predictor_name: str = "x",
    response_name: str = "FP",
) -> LinearModel:
    """
    Fit y = b0 + b1 * x by least squares

    Args:
        points: (x, y) pairs, at least three, x not constant
        predictor_name: Display name of x
        response_name: Display name of y

    Returns:
        LinearModel with source=FIT. Constant y yields a model flagged
        degenerate with slope 0, r 0 and se_est 0.

    Raises:
        InsufficientDataError: fewer than three points
        DegeneratePredictorError: every x is equal
    """
    x, y = _as_arrays(points)
    n = int(x.size)
    if n < MIN_POINTS:
        raise InsufficientDataError(f"need at least {MIN_POINTS} points to fit, got {n}", field="points")
    if np.ptp(x) == 0.0:
        raise DegeneratePredictorError(f"predictor {predictor_name} is constant ({x[0]:g})", field="x")

    x_mean = float(x.mean())
    y_mean = float(y.mean())
    dx = x - x_mean
    dy = y - y_mean
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    sxy = float(dx @ dy)
    df = n - 2

    degenerate = np.ptp(y) == 0.0
    if degenerate:
        logger.warning(f"Response {response_name} is constant over {n} points; model is degenerate")
        slope = 0.0
        r = 0.0
        beta_std = 0.0
        sse = 0.0
    else:
        slope = sxy / sxx
        r = max(-1.0, min(1.0, sxy / math.sqrt(sxx * syy)))
        beta_std = slope * math.sqrt(sxx / syy)
        residual = dy - slope * dx
        sse = float(residual @ residual)

    intercept = y_mean - slope * x_mean
    r2 = r * r
    se_est = math.sqrt(sse / df)
    se_slope = se_est / math.sqrt(sxx)
    se_intercept = se_est * math.sqrt(1.0 / n + x_mean * x_mean / sxx)

    if degenerate:
        t_intercept = t_slope = p_intercept = p_slope = math.nan
    else:
        t_intercept = _ratio(intercept, se_intercept)
        t_slope = _ratio(slope, se_slope)
        p_intercept = student_t_two_tailed_p(t_intercept, df)
        p_slope = student_t_two_tailed_p(t_slope, df)

    model = LinearModel(
        n=n,
        intercept=intercept,
        se_intercept=se_intercept,
        slope=slope,
        se_slope=se_slope,
        r=r,
        r2=r2,
        r2_adj=adjusted_r2_for_n(r2, n),
        se_est=se_est,
        beta_std=beta_std,
        t_intercept=t_intercept,
        t_slope=t_slope,
        p_intercept=p_intercept,
        p_slope=p_slope,
        predictor_name=predictor_name,
        response_name=response_name,
        x_mean=x_mean,
        sxx=sxx,
        degenerate=bool(degenerate),
        source=ModelSource.FIT,
    )
    logger.debug(f"Fitted {model!r}")
    return model


def predict(model: LinearModel, x: float) -> float:
    """b0 + b1 * x"""
    return model.intercept + model.slope * float(x)


def residuals(model: LinearModel, points: Sequence[Point]) -> List[float]:
    """y - predict(x) for each point, in input order"""
    x, y = _as_arrays(points)
    return [float(value) for value in y - (model.intercept + model.slope * x)]


def _fmt(value: Optional[float], decimals: int = 3) -> str:
    if value is None or not math.isfinite(value):
        return "-"
    text = f"{value:.{decimals}f}"
    # never print "-0.000"
    return text[1:] if text.startswith("-") and float(text) == 0.0 else text


def _table(rows: List[List[str]]) -> List[str]:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows]


def model_summary(model: LinearModel) -> str:
    """
    Text report with the "Summary of the model" and "Coefficients" tables

    Values are rounded for display only: 3 decimals, 4 for the standard
    error of the estimate.
    """
    summary = _table([
        ["Model", "R", "R squared", "R squared corrected", "Typical error of the estimation"],
        ["1", _fmt(model.r), _fmt(model.r2), _fmt(model.r2_adj), _fmt(model.se_est, 4)],
    ])
    coefficients = _table([
        ["Model", "", "B", "Typical error", "Beta", "t", "Sig."],
        ["1", "(Constant)", _fmt(model.intercept), _fmt(model.se_intercept), "",
         _fmt(model.t_intercept), _fmt(model.p_intercept)],
        ["", model.predictor_name, _fmt(model.slope), _fmt(model.se_slope), _fmt(model.beta_std),
         _fmt(model.t_slope), _fmt(model.p_slope)],
    ])

    lines = ["Summary of the model"]
    lines.extend(summary)
    lines.append(f"a Prediction variables: (Constant), {model.predictor_name}")
    lines.append("")
    lines.append("Coefficients")
    lines.extend(coefficients)
    lines.append(f"a Dependent variable: {model.response_name}")
    return "\n".join(lines) + "\n"
