#!/usr/bin/env python3
"""
Early Estimation Types

Inputs and outputs of the Early Function Point Method (EFPM): which counters
are known, which calibrated models map them to FP, and the resulting estimates.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, Optional, Tuple

from models.errors import ValidationError, require_count
from models.regression import LinearModel


class Predictor(str, Enum):
    """Early counters usable as regression predictors"""

    CILF = "cilf"
    CILFEIF = "cilfeif"
    CEIEOEQ = "ceieoeq"

    @property
    def label(self) -> str:
        return self.value.upper()

    @property
    def preference(self) -> int:
        """Tie-break rank: higher wins (CEIEOEQ > CILFEIF > CILF)"""
        return _PREFERENCE[self]


_PREFERENCE = {Predictor.CILF: 0, Predictor.CILFEIF: 1, Predictor.CEIEOEQ: 2}

# Declaration order used for iteration and display
PREDICTORS: Tuple[Predictor, ...] = (Predictor.CILF, Predictor.CILFEIF, Predictor.CEIEOEQ)


@dataclass(frozen=True)
class CalibratedModelSet:
    """One regression model per early counter"""

    model_cilf: LinearModel
    model_cilfeif: LinearModel
    model_ceieoeq: LinearModel

    def model_for(self, predictor: Predictor) -> LinearModel:
        return getattr(self, f"model_{predictor.value}")

    def items(self) -> Iterator[Tuple[Predictor, LinearModel]]:
        for predictor in PREDICTORS:
            yield predictor, self.model_for(predictor)


@dataclass(frozen=True)
class EstimationInput:
    """
    Early counters known for a project; any subset may be present

    At least one counter must be given, and cilfeif >= cilf when both are.
    """

    cilf: Optional[int] = None
    cilfeif: Optional[int] = None
    ceieoeq: Optional[int] = None

    def __post_init__(self):
        for predictor in PREDICTORS:
            value = getattr(self, predictor.value)
            if value is None:
                continue
            require_count(value, predictor.value, 0)
        if not self.present():
            raise ValidationError("at least one counter (cilf, cilfeif, ceieoeq) is required", field="input")
        if self.cilf is not None and self.cilfeif is not None and self.cilfeif < self.cilf:
            raise ValidationError("cilfeif must be >= cilf", field="cilfeif")

    def present(self) -> Dict[Predictor, int]:
        """Counters that were supplied, in predictor declaration order"""
        return {
            predictor: getattr(self, predictor.value)
            for predictor in PREDICTORS
            if getattr(self, predictor.value) is not None
        }


@dataclass(frozen=True)
class Estimate:
    """
    An FP estimate produced from one counter

    Attributes:
        predicted_fp: Expected FP (not rounded)
        model_used: Predictor whose model produced the estimate
        x: Counter value fed to the model
        r2: R squared of that model
        interval: Optional (low, high) prediction interval
        level: Confidence level of the interval
    """

    predicted_fp: float
    model_used: Predictor
    x: float
    r2: float
    interval: Optional[Tuple[float, float]] = None
    level: Optional[float] = None

    def __post_init__(self):
        if self.interval is not None:
            low, high = self.interval
            if not low < high:
                raise ValidationError("interval low must be < high", field="interval")
            if not low <= self.predicted_fp <= high:
                raise ValidationError("interval must contain predicted_fp", field="interval")
            if self.level is None:
                raise ValidationError("interval requires a confidence level", field="level")

    def as_dict(self) -> dict:
        data = {
            "model": self.model_used.label,
            "x": self.x,
            "predicted_fp": self.predicted_fp,
            "r2": self.r2,
        }
        if self.interval is not None:
            data["interval"] = {"low": self.interval[0], "high": self.interval[1], "level": self.level}
        return data
