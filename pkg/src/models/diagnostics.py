#!/usr/bin/env python3
"""
Positioned diagnostics shared by the .fps parser and the dataset CSV loader
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class ParseError:
    """
    One defect found in a source text

    Attributes:
        line: 1-based physical line of the defect
        column: 1-based column where the offending text starts
        message: Human-readable description
        offending_text: The token or line fragment at fault
    """

    line: int
    column: int
    message: str
    offending_text: str = ""

    def format(self, source_name: str = "<input>") -> str:
        """Render as "<file>:<line>:<column>: error: <message> [<text>]" """
        text = f" [{self.offending_text}]" if self.offending_text else ""
        return f"{source_name}:{self.line}:{self.column}: error: {self.message}{text}"
