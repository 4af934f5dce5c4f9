#!/usr/bin/env python3
"""
Project Specification (.fps) Parser

Line-oriented declarative format for pre-identified functions:

    # comment
    project "Billing"
    ilf "Customers" rets=2 dets=25
    eif "Rates" rets=1 dets=4
    ei  "Add customer" ftrs=1 dets=12
    eo  "Monthly invoice" ftrs=3 dets=21
    eq  "Customer lookup" ftrs=1 dets=6

One declaration per line, blank lines and '#' comments ignored, attributes in
any order. Parsing never stops at the first defect: every malformed line is
reported with its line and column, then ParseFailure is raised with all of them.
"""

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from models.diagnostics import ParseError
from models.errors import ParseFailure
from models.functions import (
    DataFunction,
    FunctionKind,
    Project,
    TransactionalFunction,
)


logger = logging.getLogger(__name__)


_TOKEN = re.compile(r'''
      (?P<space>[ \t]+)
    | (?P<comment>\#.*)
    | (?P<string>"[^"]*")
    | (?P<unterminated>"[^"]*)
    | (?P<word>[^\s"=\#]+(?:=[^\s"\#]*)?)
    | (?P<other>.)
''', re.VERBOSE)

_INTEGER = re.compile(r'[+-]?[0-9]+')

PROJECT_KEYWORD = "project"

# Required attributes per kind, in canonical output order, with their minimum value
ATTRIBUTES: Dict[FunctionKind, Tuple[Tuple[str, int], ...]] = {
    FunctionKind.ILF: (("rets", 1), ("dets", 1)),
    FunctionKind.EIF: (("rets", 1), ("dets", 1)),
    FunctionKind.EI: (("ftrs", 0), ("dets", 1)),
    FunctionKind.EO: (("ftrs", 0), ("dets", 1)),
    FunctionKind.EQ: (("ftrs", 0), ("dets", 1)),
}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    column: int


def _tokenize(line: str, line_no: int, errors: List[ParseError]) -> List[_Token]:
    tokens: List[_Token] = []
    for match in _TOKEN.finditer(line):
        kind = match.lastgroup
        column = match.start() + 1
        text = match.group()
        if kind in ("space", "comment"):
            continue
        if kind == "unterminated":
            errors.append(ParseError(line_no, column, "unterminated quoted name", text))
            return []
        if kind == "other":
            errors.append(ParseError(line_no, column, f"unexpected character '{text}'", text))
            return []
        tokens.append(_Token(kind, text, column))
    return tokens


class _LineParser:
    """Accumulates declarations and errors over the lines of one source"""

    def __init__(self):
        self.errors: List[ParseError] = []
        self.project_name: Optional[str] = None
        self.header_seen = False
        self.first_declaration = True
        self.header_error_reported = False
        self.data_functions: List[DataFunction] = []
        self.transactional_functions: List[TransactionalFunction] = []
        self._names: Dict[str, int] = {}

    def error(self, line_no: int, column: int, message: str, text: str = ""):
        self.errors.append(ParseError(line_no, column, message, text))

    def feed(self, line_no: int, line: str):
        before = len(self.errors)
        tokens = _tokenize(line, line_no, self.errors)
        if len(self.errors) > before:
            # a defective first line already explains itself
            if self.first_declaration:
                self.first_declaration = False
                self.header_error_reported = True
            return
        if not tokens:
            return

        keyword = tokens[0]
        is_header = keyword.kind == "word" and keyword.text == PROJECT_KEYWORD

        if self.first_declaration:
            self.first_declaration = False
            if not is_header:
                self.header_error_reported = True
                self.error(line_no, 1, f"missing project header: expected '{PROJECT_KEYWORD} \"<name>\"' "
                                       f"as the first declaration", keyword.text)
        if is_header:
            self._header(line_no, tokens)
        else:
            self._function(line_no, tokens)

    def _quoted_name(self, line_no: int, tokens: List[_Token], what: str) -> Optional[str]:
        if len(tokens) < 2 or tokens[1].kind != "string":
            after = tokens[0]
            column = tokens[1].column if len(tokens) > 1 else after.column + len(after.text)
            text = tokens[1].text if len(tokens) > 1 else ""
            self.error(line_no, column, f"expected quoted {what} name after '{after.text}'", text)
            return None
        name = tokens[1].text[1:-1]
        # only a bare CR survives line splitting; names are single-line
        if "\r" in name:
            self.error(line_no, tokens[1].column + 1 + name.index("\r"),
                       f"carriage return inside quoted {what} name", tokens[1].text)
            return None
        return name

    def _header(self, line_no: int, tokens: List[_Token]):
        if self.header_seen:
            self.error(line_no, tokens[0].column, "duplicate project header", tokens[0].text)
            return
        self.header_seen = True
        name = self._quoted_name(line_no, tokens, "project")
        if name is None:
            return
        for extra in tokens[2:]:
            self.error(line_no, extra.column, "unexpected text after project name", extra.text)
        self.project_name = name

    def _function(self, line_no: int, tokens: List[_Token]):
        keyword = tokens[0]
        if keyword.kind != "word" or keyword.text.upper() not in FunctionKind.__members__ or keyword.text != keyword.text.lower():
            self.error(line_no, keyword.column,
                       f"unknown keyword '{keyword.text}' (expected project, ilf, eif, ei, eo or eq)",
                       keyword.text)
            return
        kind = FunctionKind(keyword.text.upper())

        name = self._quoted_name(line_no, tokens, "function")
        if name is None:
            return
        name_token = tokens[1]
        ok = True
        if not name:
            self.error(line_no, name_token.column, "function name must not be empty", name_token.text)
            ok = False
        elif name in self._names:
            self.error(line_no, name_token.column,
                       f"duplicate function name '{name}' (first declared on line {self._names[name]})",
                       name_token.text)
            ok = False
        else:
            self._names[name] = line_no

        values = self._attributes(line_no, kind, tokens[2:], end_column=_end_column(tokens))
        if values is None or not ok:
            return

        if kind in (FunctionKind.ILF, FunctionKind.EIF):
            self.data_functions.append(DataFunction(name, kind, values["rets"], values["dets"]))
        else:
            self.transactional_functions.append(TransactionalFunction(name, kind, values["ftrs"], values["dets"]))

    def _attributes(self, line_no: int, kind: FunctionKind, tokens: List[_Token],
                    end_column: int) -> Optional[Dict[str, int]]:
        expected = dict(ATTRIBUTES[kind])
        values: Dict[str, int] = {}
        ok = True

        for token in tokens:
            if token.kind != "word" or "=" not in token.text:
                self.error(line_no, token.column, "expected attribute of the form name=<int>", token.text)
                ok = False
                continue
            key, _, raw = token.text.partition("=")
            if key not in expected:
                allowed = " and ".join(expected)
                self.error(line_no, token.column,
                           f"attribute '{key}' is not valid for {kind.keyword} (expected {allowed})", token.text)
                ok = False
                continue
            if key in values:
                self.error(line_no, token.column, f"duplicate attribute '{key}'", token.text)
                ok = False
                continue
            if not _INTEGER.fullmatch(raw):
                self.error(line_no, token.column, f"attribute '{key}' must be an integer, got '{raw}'", token.text)
                ok = False
                values[key] = 0
                continue
            value = int(raw)
            if value < expected[key]:
                self.error(line_no, token.column,
                           f"{key} must be >= {expected[key]}, got {value}", token.text)
                ok = False
            values[key] = value

        for key in expected:
            if key not in values:
                self.error(line_no, end_column, f"missing attribute '{key}'", "")
                ok = False

        return values if ok else None

    def finish(self) -> Project:
        if not self.header_seen and not self.header_error_reported:
            self.error(1, 1, f"missing project header: expected '{PROJECT_KEYWORD} \"<name>\"'")
        if self.errors:
            raise ParseFailure(sorted(self.errors, key=lambda e: (e.line, e.column)))
        return Project(
            name=self.project_name or "",
            data_functions=tuple(self.data_functions),
            transactional_functions=tuple(self.transactional_functions),
        )


def _end_column(tokens: List[_Token]) -> int:
    """Column just past the last token, where a missing attribute would go"""
    last = tokens[-1]
    return last.column + len(last.text)


def parse_spec(source: str) -> Project:
    """
    Parse .fps text into a Project

    Accepts LF or CRLF line endings and an optional UTF-8 byte order mark.

    Args:
        source: Specification text

    Returns:
        Project satisfying all domain invariants

    Raises:
        ParseFailure: with every positioned ParseError found in the source
    """
    if source.startswith("\ufeff"):
        source = source[1:]

    parser = _LineParser()
    lines = source.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for line_no, line in enumerate(lines, start=1):
        parser.feed(line_no, line.rstrip("\r"))

    try:
        project = parser.finish()
    except ParseFailure as failure:
        logger.debug(f"Specification rejected with {len(failure.errors)} error(s)")
        raise
    logger.debug(f"Parsed project '{project.name}' with {len(project)} functions")
    return project


def render_spec(project: Project) -> str:
    """
    Canonical .fps text for a project

    Header first, then data functions, then transactional functions, each in
    input order; single spaces between tokens; LF line endings.
    """
    lines = [f'{PROJECT_KEYWORD} "{project.name}"']
    for function in project.data_functions:
        lines.append(f'{function.kind.keyword} "{function.name}" rets={function.rets} dets={function.dets}')
    for function in project.transactional_functions:
        lines.append(f'{function.kind.keyword} "{function.name}" ftrs={function.ftrs} dets={function.dets}')
    return "\n".join(lines) + "\n"


def load_spec(path: Union[str, Path]) -> Project:
    """
    Read and parse a .fps file

    Raises:
        ParseFailure: on invalid UTF-8 or any grammar error (source_name set to path)
        OSError: if the file cannot be read
    """
    path = Path(path)
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data[:e.start].count(b"\n") + 1
        column = e.start - (data.rfind(b"\n", 0, e.start) + 1) + 1
        raise ParseFailure([ParseError(line, column, "file is not valid UTF-8")], source_name=str(path)) from None

    try:
        return parse_spec(text)
    except ParseFailure as failure:
        failure.source_name = str(path)
        raise
