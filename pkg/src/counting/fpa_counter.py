#!/usr/bin/env python3
"""
IFPUG 4.1 Function Point Counter

Classifies data and transactional functions into Low/Average/High, weights
them, and aggregates a project into its unadjusted FP total plus the three
early counters (CILF, CILFEIF, CEIEOEQ).

Everything here is a pure function over immutable values.
"""

import logging
from bisect import bisect_right
from collections import Counter
from typing import Dict, Tuple

from models.errors import ValidationError, require_count
from models.functions import (
    ComplexityLevel,
    CountedFunction,
    DataFunction,
    FunctionKind,
    FunctionPointCount,
    KindTotal,
    Project,
)


logger = logging.getLogger(__name__)

L, A, H = ComplexityLevel.LOW, ComplexityLevel.AVERAGE, ComplexityLevel.HIGH

# Shared complexity matrix of all three IFPUG tables: rows are the
# RET/FTR band (lowest first), columns the DET band.
COMPLEXITY_MATRIX = (
    (L, L, A),
    (L, A, H),
    (A, H, H),
)

# Lower bound of the 2nd and 3rd band of each axis.
# ILF/EIF: RET 1 | 2-5 | 6+,  DET 1-19 | 20-50 | 51+
DATA_RET_BANDS = (2, 6)
DATA_DET_BANDS = (20, 51)
# EI: FTR 0-1 | 2 | 3+,  DET 1-4 | 5-15 | 16+
EI_FTR_BANDS = (2, 3)
EI_DET_BANDS = (5, 16)
# EO/EQ: FTR 0-1 | 2-3 | 4+,  DET 1-5 | 6-19 | 20+
EO_EQ_FTR_BANDS = (2, 4)
EO_EQ_DET_BANDS = (6, 20)

TRANSACTION_BANDS: Dict[FunctionKind, Tuple[Tuple[int, int], Tuple[int, int]]] = {
    FunctionKind.EI: (EI_FTR_BANDS, EI_DET_BANDS),
    FunctionKind.EO: (EO_EQ_FTR_BANDS, EO_EQ_DET_BANDS),
    FunctionKind.EQ: (EO_EQ_FTR_BANDS, EO_EQ_DET_BANDS),
}

# Function points per kind, indexed Low / Average / High
WEIGHTS: Dict[FunctionKind, Tuple[int, int, int]] = {
    FunctionKind.ILF: (7, 10, 15),
    FunctionKind.EIF: (5, 7, 10),
    FunctionKind.EI: (3, 4, 6),
    FunctionKind.EO: (4, 5, 7),
    FunctionKind.EQ: (3, 4, 6),
}

MIN_WEIGHT = min(min(row) for row in WEIGHTS.values())
MAX_WEIGHT = max(max(row) for row in WEIGHTS.values())


def _lookup(row_value: int, row_bands: Tuple[int, int], det_value: int, det_bands: Tuple[int, int]) -> ComplexityLevel:
    return COMPLEXITY_MATRIX[bisect_right(row_bands, row_value)][bisect_right(det_bands, det_value)]


def classify_data_function(kind: FunctionKind, rets: int, dets: int) -> ComplexityLevel:
    """
    Complexity of an ILF or EIF (both use the same table)

    Args:
        kind: FunctionKind.ILF or FunctionKind.EIF
        rets: Record element types, >= 1
        dets: Data element types, >= 1

    Returns:
        ComplexityLevel

    Raises:
        ValidationError: kind is transactional, or a count is out of range
    """
    if kind not in (FunctionKind.ILF, FunctionKind.EIF):
        raise ValidationError(f"{kind!r} is not a data function kind", field="kind")
    require_count(rets, "rets", 1)
    require_count(dets, "dets", 1)
    return _lookup(rets, DATA_RET_BANDS, dets, DATA_DET_BANDS)


def classify_transactional_function(kind: FunctionKind, ftrs: int, dets: int) -> ComplexityLevel:
    """
    Complexity of an EI, EO or EQ

    EI has its own table; EO and EQ share one.

    Args:
        kind: FunctionKind.EI, EO or EQ
        ftrs: File types referenced, >= 0
        dets: Data element types, >= 1

    Returns:
        ComplexityLevel

    Raises:
        ValidationError: kind is a data kind, or a count is out of range
    """
    bands = TRANSACTION_BANDS.get(kind)
    if bands is None:
        raise ValidationError(f"{kind!r} is not a transactional function kind", field="kind")
    require_count(ftrs, "ftrs", 0)
    require_count(dets, "dets", 1)
    ftr_bands, det_bands = bands
    return _lookup(ftrs, ftr_bands, dets, det_bands)


def weight_of(kind: FunctionKind, level: ComplexityLevel) -> int:
    """Unadjusted function points for a function of this kind and complexity"""
    return WEIGHTS[FunctionKind(kind)][ComplexityLevel(level) - 1]


def classify(function: CountedFunction) -> ComplexityLevel:
    """Complexity of an already-validated counted function"""
    if isinstance(function, DataFunction):
        return classify_data_function(function.kind, function.rets, function.dets)
    return classify_transactional_function(function.kind, function.ftrs, function.dets)


def derive_counters(project: Project) -> Tuple[int, int, int]:
    """
    Early counters of a project

    Returns:
        (cilf, cilfeif, ceieoeq): number of ILFs, ILFs + EIFs, EIs + EOs + EQs
    """
    cilf = sum(1 for function in project.data_functions if function.kind is FunctionKind.ILF)
    cilfeif = len(project.data_functions)
    ceieoeq = len(project.transactional_functions)
    return cilf, cilfeif, ceieoeq


def complexity_breakdown(project: Project) -> Dict[FunctionKind, Dict[ComplexityLevel, int]]:
    """
    Number of functions per kind and complexity level (the counting worksheet)

    Every kind and level is present in the result, zero when unused.
    """
    tally = Counter((function.kind, classify(function)) for function in project.functions())
    return {
        kind: {level: tally[(kind, level)] for level in ComplexityLevel}
        for kind in FunctionKind
    }


def count_project(project: Project) -> FunctionPointCount:
    """
    Classify, weight and sum every function of a project

    Args:
        project: Project to count

    Returns:
        FunctionPointCount with per-kind totals and the early counters
    """
    counts: Counter = Counter()
    subtotals: Counter = Counter()

    for function in project.functions():
        level = classify(function)
        counts[function.kind] += 1
        subtotals[function.kind] += weight_of(function.kind, level)

    per_kind = {kind: KindTotal(count=counts[kind], subtotal=subtotals[kind]) for kind in FunctionKind}
    cilf, cilfeif, ceieoeq = derive_counters(project)
    total = sum(subtotals.values())

    logger.debug(f"Counted project '{project.name}': {len(project)} functions, {total} UFP")

    return FunctionPointCount(
        total_ufp=total,
        per_kind=per_kind,
        cilf=cilf,
        cilfeif=cilfeif,
        ceieoeq=ceieoeq,
    )
