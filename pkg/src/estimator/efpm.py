#!/usr/bin/env python3
"""
Early Function Point Method (EFPM) Estimator

Maps whichever early counters are known (ILFs, ILFs + EIFs, EIs + EOs + EQs)
to an FP estimate through calibrated simple regressions. The published
calibration over 60 IFPUG 4.1 measurements is built in; any measurement
dataset can be used to recalibrate.
"""

import logging
import math
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from dataset.measurements import embedded_dataset
from models.errors import ValidationError
from models.estimate import PREDICTORS, CalibratedModelSet, Estimate, EstimationInput, Predictor
from models.measurement import Dataset
from models.regression import LinearModel, ModelSource
from regression.ols import fit_simple_ols, predict
from regression.student_t import student_t_two_tailed_p, t_quantile_two_tailed


logger = logging.getLogger(__name__)


# Published calibration, printed to 3 decimals (4 for se_est):
# intercept, se_intercept, t_intercept, slope, se_slope, t_slope, r, r2, r2_adj, se_est
PUBLISHED_CONSTANTS: Dict[Predictor, Tuple[float, ...]] = {
    Predictor.CILF: (130.327, 15.755, 8.272, 15.902, 1.307, 12.162, 0.848, 0.718, 0.713, 69.0822),
    Predictor.CILFEIF: (66.905, 22.156, 3.020, 13.035, 1.178, 11.067, 0.824, 0.679, 0.673, 73.7912),
    Predictor.CEIEOEQ: (50.784, 13.521, 3.756, 6.289, 0.320, 19.658, 0.932, 0.869, 0.867, 47.0237),
}

PUBLISHED_SAMPLE_SIZE = 60


def fit_models(ds: Dataset) -> CalibratedModelSet:
    """
    Fit FP against each early counter over a measurement dataset

    Raises:
        InsufficientDataError / DegeneratePredictorError: from fit_simple_ols
    """
    models = {
        predictor: fit_simple_ols(ds.points(predictor.value), predictor_name=predictor.label)
        for predictor in PREDICTORS
    }
    logger.info(f"Calibrated {len(models)} models over {len(ds)} measurements")
    return CalibratedModelSet(
        model_cilf=models[Predictor.CILF],
        model_cilfeif=models[Predictor.CILFEIF],
        model_ceieoeq=models[Predictor.CEIEOEQ],
    )


def _published_model(predictor: Predictor, refit: LinearModel) -> LinearModel:
    (intercept, se_intercept, t_intercept, slope, se_slope, t_slope,
     r, r2, r2_adj, se_est) = PUBLISHED_CONSTANTS[predictor]
    df = PUBLISHED_SAMPLE_SIZE - 2
    return LinearModel(
        n=PUBLISHED_SAMPLE_SIZE,
        intercept=intercept,
        se_intercept=se_intercept,
        slope=slope,
        se_slope=se_slope,
        r=r,
        r2=r2,
        r2_adj=r2_adj,
        se_est=se_est,
        beta_std=r,
        t_intercept=t_intercept,
        t_slope=t_slope,
        p_intercept=student_t_two_tailed_p(t_intercept, df),
        p_slope=student_t_two_tailed_p(t_slope, df),
        predictor_name=predictor.label,
        response_name="FP",
        # not published; derived from the embedded measurements
        x_mean=refit.x_mean,
        sxx=refit.sxx,
        source=ModelSource.PUBLISHED,
    )


@lru_cache(maxsize=1)
def paper_models() -> CalibratedModelSet:
    """
    The three published regression functions

    Coefficients and fit statistics are the printed constants; n, mean of x
    and Sxx (needed for prediction intervals) come from refitting the
    embedded dataset.
    """
    refit = fit_models(embedded_dataset())
    return CalibratedModelSet(
        model_cilf=_published_model(Predictor.CILF, refit.model_cilf),
        model_cilfeif=_published_model(Predictor.CILFEIF, refit.model_cilfeif),
        model_ceieoeq=_published_model(Predictor.CEIEOEQ, refit.model_ceieoeq),
    )


def prediction_interval(model: LinearModel, x: float, level: float) -> Tuple[float, float]:
    """
    Prediction interval for a single new observation at x

    predict(x) +/- t_{(1+level)/2, n-2} * se_est * sqrt(1 + 1/n + (x - x_mean)^2 / Sxx)

    Args:
        model: Model carrying n, se_est, x_mean and Sxx
        x: Counter value
        level: Confidence level in (0, 1)

    Returns:
        (low, high); a single point when se_est is 0

    Raises:
        ValidationError: level outside (0, 1) or model lacks fit statistics
    """
    level = float(level)
    if not 0.0 < level < 1.0:
        raise ValidationError(f"confidence level must be in (0, 1), got {level}", field="level")
    if not model.can_compute_interval:
        raise ValidationError(
            f"model for {model.predictor_name} carries no x mean / Sxx; cannot compute an interval",
            field="model",
        )

    center = predict(model, x)
    if model.se_est == 0.0:
        return center, center

    quantile = t_quantile_two_tailed(level, model.n - 2)
    half_width = quantile * model.se_est * math.sqrt(
        1.0 + 1.0 / model.n + (float(x) - model.x_mean) ** 2 / model.sxx
    )
    return center - half_width, center + half_width


def _ranking_key(estimate: Estimate) -> Tuple[float, int]:
    return (estimate.r2, estimate.model_used.preference)


def estimate(
    estimation_input: EstimationInput,
    models: Optional[CalibratedModelSet] = None,
    level: Optional[float] = None,
) -> List[Estimate]:
    """
    One FP estimate per counter present in the input

    Args:
        estimation_input: Known early counters
        models: Calibrated models (defaults to paper_models())
        level: Optional confidence level; attaches a prediction interval

    Returns:
        Estimates ordered by descending model R squared, ties broken
        CEIEOEQ > CILFEIF > CILF

    Raises:
        ValidationError: no counter present, or level outside (0, 1)
    """
    models = models or paper_models()
    present = estimation_input.present()
    if not present:
        raise ValidationError("at least one counter (cilf, cilfeif, ceieoeq) is required", field="input")

    estimates: List[Estimate] = []
    for predictor, value in present.items():
        model = models.model_for(predictor)
        predicted = predict(model, value)
        interval = None
        if level is not None:
            low, high = prediction_interval(model, value, level)
            if low < high:
                interval = (low, high)
            else:
                logger.warning(f"Prediction interval for {predictor.label} collapsed to a point; omitted")
        estimates.append(Estimate(
            predicted_fp=predicted,
            model_used=predictor,
            x=float(value),
            r2=model.r2,
            interval=interval,
            level=level if interval is not None else None,
        ))

    estimates.sort(key=_ranking_key, reverse=True)
    return estimates


def best_estimate(estimates: Sequence[Estimate]) -> Estimate:
    """
    Estimate whose model has the highest R squared

    Ties go to the fixed predictor order CEIEOEQ > CILFEIF > CILF.

    Raises:
        ValidationError: estimates is empty
    """
    if not estimates:
        raise ValidationError("no estimates to choose from", field="estimates")
    return max(estimates, key=_ranking_key)
