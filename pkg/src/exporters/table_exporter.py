#!/usr/bin/env python3
"""
Regression Data Table Exporter

Tab-separated x, y, fitted, residual rows so a figure can be redrawn in any
external tool.
"""

import logging
from typing import Sequence, Tuple

from models.regression import LinearModel
from regression.ols import predict


logger = logging.getLogger(__name__)

COLUMNS = ("x", "y", "fitted", "residual")


def _number(value: float) -> str:
    # repr round-trips exactly and always uses a dot decimal
    return repr(float(value) + 0.0)


def data_table(points: Sequence[Tuple[float, float]], model: LinearModel) -> str:
    """
    TSV table of the points against a model

    Args:
        points: (x, y) pairs in the order they should appear
        model: Model supplying the fitted values

    Returns:
        Header row plus one row per point, LF line endings
    """
    lines = ["\t".join(COLUMNS)]
    for x, y in points:
        fitted = predict(model, x)
        lines.append("\t".join(_number(value) for value in (x, y, fitted, float(y) - fitted)))
    logger.debug(f"Tabulated {len(lines) - 1} points against {model.predictor_name}")
    return "\n".join(lines) + "\n"
