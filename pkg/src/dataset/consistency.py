#!/usr/bin/env python3
"""
Inter-rater Consistency

Every project is measured twice by different raters. The relative difference
|fp1 - fp2| / mean(fp1, fp2) summarises how far the two counts drift apart.
"""

import logging
import math
from typing import List, Tuple

from models.errors import ValidationError
from models.measurement import ConsistencyStat, Dataset


logger = logging.getLogger(__name__)


def relative_difference(fp_first: float, fp_second: float) -> float:
    """Symmetric relative difference; 0 when both measurements agree (including 0/0)"""
    if fp_first == fp_second:
        return 0.0
    return abs(fp_first - fp_second) / ((fp_first + fp_second) / 2.0)


def consistency_stats(ds: Dataset) -> Tuple[List[ConsistencyStat], float]:
    """
    Per-project relative differences and their arithmetic mean

    Records are paired by project id only; the result does not depend on
    record order beyond which measurement is reported first.

    Args:
        ds: Dataset where every project id appears exactly twice

    Returns:
        (stats ordered by project id, mean rel_diff over projects)

    Raises:
        ValidationError: a project id appears once or more than twice, or ds is empty
    """
    groups = ds.by_project()
    if not groups:
        raise ValidationError("dataset has no measurements", field="records")

    stats: List[ConsistencyStat] = []
    for project_id in sorted(groups):
        records = groups[project_id]
        if len(records) != 2:
            raise ValidationError(
                f"project {project_id} has {len(records)} measurement(s), expected exactly 2",
                field="project_id",
            )
        first, second = records
        stats.append(ConsistencyStat(
            project_id=project_id,
            fp_first=first.fp,
            fp_second=second.fp,
            rel_diff=relative_difference(first.fp, second.fp),
        ))

    mean = math.fsum(stat.rel_diff for stat in stats) / len(stats)
    logger.debug(f"Consistency over {len(stats)} projects: mean rel_diff={mean:.5f}")
    return stats, mean
