#!/usr/bin/env python3
"""
Function Point Domain Types

IFPUG 4.1 function kinds, complexity levels, counted functions and the
project-level count they aggregate into. All values are immutable.
"""

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Dict, Iterator, Tuple, Union

from models.errors import ValidationError, require_count


class FunctionKind(str, Enum):
    """The five IFPUG function types"""

    ILF = "ILF"
    EIF = "EIF"
    EI = "EI"
    EO = "EO"
    EQ = "EQ"

    @property
    def is_data(self) -> bool:
        return self in DATA_KINDS

    @property
    def is_transactional(self) -> bool:
        return self in TRANSACTIONAL_KINDS

    @property
    def keyword(self) -> str:
        """Lower-case keyword used by the .fps format"""
        return self.value.lower()

    @classmethod
    def from_keyword(cls, keyword: str) -> 'FunctionKind':
        try:
            return cls(keyword.upper())
        except ValueError:
            raise ValidationError(f"unknown function kind '{keyword}'", field="kind") from None


DATA_KINDS = frozenset({FunctionKind.ILF, FunctionKind.EIF})
TRANSACTIONAL_KINDS = frozenset({FunctionKind.EI, FunctionKind.EO, FunctionKind.EQ})


class ComplexityLevel(IntEnum):
    """Complexity band, ordered Low < Average < High"""

    LOW = 1
    AVERAGE = 2
    HIGH = 3

    @property
    def label(self) -> str:
        return self.name.capitalize()


# Names are written between double quotes, one declaration per line
_FORBIDDEN_NAME_CHARS = frozenset('"\r\n')


def _require_name(name: str):
    if not isinstance(name, str) or not name:
        raise ValidationError("function name must be non-empty text", field="name")
    if _FORBIDDEN_NAME_CHARS.intersection(name):
        raise ValidationError(f"function name may not contain quotes or line breaks: {name!r}", field="name")


@dataclass(frozen=True)
class DataFunction:
    """An ILF or EIF with its RET and DET counts"""

    name: str
    kind: FunctionKind
    rets: int
    dets: int

    def __post_init__(self):
        _require_name(self.name)
        if self.kind not in DATA_KINDS:
            raise ValidationError(f"{self.kind} is not a data function kind", field="kind")
        require_count(self.rets, "rets", 1)
        require_count(self.dets, "dets", 1)


@dataclass(frozen=True)
class TransactionalFunction:
    """An EI, EO or EQ with its FTR and DET counts"""

    name: str
    kind: FunctionKind
    ftrs: int
    dets: int

    def __post_init__(self):
        _require_name(self.name)
        if self.kind not in TRANSACTIONAL_KINDS:
            raise ValidationError(f"{self.kind} is not a transactional function kind", field="kind")
        require_count(self.ftrs, "ftrs", 0)
        require_count(self.dets, "dets", 1)


CountedFunction = Union[DataFunction, TransactionalFunction]


@dataclass(frozen=True)
class Project:
    """
    A named set of pre-identified functions ready to be counted

    Function names are unique across both lists. Lists are stored as tuples
    so a Project can be shared freely between threads.
    """

    name: str
    data_functions: Tuple[DataFunction, ...] = ()
    transactional_functions: Tuple[TransactionalFunction, ...] = ()

    def __post_init__(self):
        if not isinstance(self.name, str):
            raise ValidationError("project name must be text", field="name")
        if _FORBIDDEN_NAME_CHARS.intersection(self.name):
            raise ValidationError("project name may not contain quotes or line breaks", field="name")
        object.__setattr__(self, 'data_functions', tuple(self.data_functions))
        object.__setattr__(self, 'transactional_functions', tuple(self.transactional_functions))

        for function in self.data_functions:
            if not isinstance(function, DataFunction):
                raise ValidationError(f"not a data function: {function!r}", field="data_functions")
        for function in self.transactional_functions:
            if not isinstance(function, TransactionalFunction):
                raise ValidationError(
                    f"not a transactional function: {function!r}", field="transactional_functions"
                )

        seen = set()
        for function in self.functions():
            if function.name in seen:
                raise ValidationError(f"duplicate function name '{function.name}'", field="name")
            seen.add(function.name)

    def functions(self) -> Iterator[CountedFunction]:
        """Iterate data functions first, then transactional functions"""
        yield from self.data_functions
        yield from self.transactional_functions

    def __len__(self) -> int:
        return len(self.data_functions) + len(self.transactional_functions)


@dataclass(frozen=True)
class KindTotal:
    """Number of functions of one kind and the FP they contribute"""

    count: int = 0
    subtotal: int = 0


@dataclass(frozen=True)
class FunctionPointCount:
    """
    Result of counting a project

    Attributes:
        total_ufp: Unadjusted function points
        per_kind: KindTotal for every FunctionKind (zero entries included)
        cilf: Number of ILFs
        cilfeif: Number of ILFs + EIFs
        ceieoeq: Number of EIs + EOs + EQs
    """

    total_ufp: int
    per_kind: Dict[FunctionKind, KindTotal] = field(default_factory=dict)
    cilf: int = 0
    cilfeif: int = 0
    ceieoeq: int = 0

    def __post_init__(self):
        if self.total_ufp != sum(total.subtotal for total in self.per_kind.values()):
            raise ValidationError("total_ufp must equal the sum of per-kind subtotals", field="total_ufp")
        if min(self.cilf, self.cilfeif, self.ceieoeq) < 0:
            raise ValidationError("counters must be non-negative", field="cilf")
        if self.cilfeif < self.cilf:
            raise ValidationError("cilfeif must be >= cilf", field="cilfeif")

    @property
    def counters(self) -> Tuple[int, int, int]:
        return (self.cilf, self.cilfeif, self.ceieoeq)

    def as_dict(self) -> dict:
        """Plain mapping for JSON output"""
        return {
            "total_ufp": self.total_ufp,
            "per_kind": {
                kind.value: {"count": total.count, "subtotal": total.subtotal}
                for kind, total in self.per_kind.items()
            },
            "cilf": self.cilf,
            "cilfeif": self.cilfeif,
            "ceieoeq": self.ceieoeq,
        }
