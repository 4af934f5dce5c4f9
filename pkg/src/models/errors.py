#!/usr/bin/env python3
"""
Error hierarchy for the EFPM workbench

Every failure the workbench reports on purpose derives from EfpmError so the
CLI can tell "your input is wrong" (exit status 1) apart from a crash.
"""

from typing import List, Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from models.diagnostics import ParseError


class EfpmError(Exception):
    """Base class for expected, user-facing failures"""


class ValidationError(EfpmError, ValueError):
    """
    A value violates a domain invariant

    Attributes:
        field: Name of the offending field or argument (None if not attributable)
    """

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field


def require_count(value: int, name: str, minimum: int):
    """
    Check an integer count against its lower bound

    Raises:
        ValidationError: value is not an int (bool excluded) or is below minimum
    """
    # bool is an int subclass but never a valid count
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{name} must be an integer, got {value!r}", field=name)
    if value < minimum:
        raise ValidationError(f"{name} must be >= {minimum}, got {value}", field=name)


class InsufficientDataError(ValidationError):
    """Too few points to fit a model"""


class DegeneratePredictorError(ValidationError):
    """Predictor values are all equal, so no slope can be estimated"""


class ConfigError(EfpmError):
    """Settings file or environment holds an unusable value"""


class ParseFailure(EfpmError):
    """
    One or more positioned parse errors were found in a source text

    All errors of the source are collected before this is raised, so callers
    can report them together.

    Attributes:
        errors: Positioned diagnostics in source order
        source_name: Optional file name used when rendering diagnostics
    """

    def __init__(self, errors: List['ParseError'], source_name: Optional[str] = None):
        self.errors = list(errors)
        self.source_name = source_name
        noun = "error" if len(self.errors) == 1 else "errors"
        super().__init__(f"{len(self.errors)} parse {noun}")

    def render(self, source_name: Optional[str] = None) -> List[str]:
        """
        Render every error as a compiler-style diagnostic line

        Args:
            source_name: File name to prefix (falls back to self.source_name)

        Returns:
            One line per error: "<file>:<line>:<column>: error: <message> [<text>]"
        """
        name = source_name or self.source_name or "<input>"
        return [error.format(name) for error in self.errors]
