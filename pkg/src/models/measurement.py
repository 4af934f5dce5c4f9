#!/usr/bin/env python3
"""
Measurement Records

One row per function-point measurement: the measured (unadjusted) FP and the
three early counters observed on the same specification.
"""

import math
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Tuple

from models.errors import ValidationError, require_count


@dataclass(frozen=True)
class MeasurementRecord:
    """
    A single measurement of a project by one rater

    Attributes:
        project_id: Project identifier (>= 1)
        fp: Unadjusted function points
        cilf: Number of ILFs
        cilfeif: Number of ILFs + EIFs
        ceieoeq: Number of EIs + EOs + EQs
    """

    project_id: int
    fp: float
    cilf: int
    cilfeif: int
    ceieoeq: int

    def __post_init__(self):
        require_count(self.project_id, "project_id", 1)
        fp = float(self.fp)
        if not math.isfinite(fp) or fp < 0:
            raise ValidationError(f"fp must be a non-negative number, got {self.fp!r}", field="fp")
        object.__setattr__(self, 'fp', fp)
        for name in ("cilf", "cilfeif", "ceieoeq"):
            require_count(getattr(self, name), name, 0)
        if self.cilfeif < self.cilf:
            raise ValidationError("cilfeif < cilf", field="cilfeif")

    def counter(self, predictor: str) -> int:
        """Counter value by lower-case predictor name (cilf, cilfeif, ceieoeq)"""
        if predictor not in ("cilf", "cilfeif", "ceieoeq"):
            raise ValidationError(f"unknown predictor '{predictor}'", field="predictor")
        return getattr(self, predictor)


@dataclass(frozen=True)
class Dataset:
    """Ordered, immutable collection of measurement records"""

    records: Tuple[MeasurementRecord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'records', tuple(self.records))

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[MeasurementRecord]:
        return iter(self.records)

    def points(self, predictor: str) -> List[Tuple[float, float]]:
        """
        (counter, fp) pairs for regression, in record order

        Args:
            predictor: cilf, cilfeif or ceieoeq

        Returns:
            List of (x, y) tuples
        """
        return [(float(record.counter(predictor)), record.fp) for record in self.records]

    def by_project(self) -> Dict[int, List[MeasurementRecord]]:
        """Group records by project id, preserving record order inside each group"""
        groups: Dict[int, List[MeasurementRecord]] = {}
        for record in self.records:
            groups.setdefault(record.project_id, []).append(record)
        return groups

    @classmethod
    def from_rows(cls, rows: Iterable[Tuple[int, float, int, int, int]]) -> 'Dataset':
        return cls(tuple(MeasurementRecord(*row) for row in rows))


@dataclass(frozen=True)
class ConsistencyStat:
    """
    Agreement between the two measurements of one project

    Attributes:
        project_id: Project identifier
        fp_first: FP of the first record in dataset order
        fp_second: FP of the second record in dataset order
        rel_diff: |fp1 - fp2| / mean(fp1, fp2)
    """

    project_id: int
    fp_first: float
    fp_second: float
    rel_diff: float
