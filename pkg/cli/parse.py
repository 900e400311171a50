#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
cli/parse.py — the braid input language.

    # comments run to the end of a line
    n=4
    ties={1 2}
    t2 s3'
    e1 s1

The header `n=<int>` comes first, an optional `ties={...}` line second, and
every later line holds whitespace-separated letters: s<i>, s<i>', t<i>, e<i>.
Tie letters are pushed into the partition by normalize(). Errors carry the
1-based line and column of the offending token.

Several braids may share one text when separated by a line holding `---`
(the counterexample format of two-sided checks).
"""

from __future__ import annotations

import re
from typing import List, Optional, Tuple

from tiedlinks.braids import Letter, TiedSingularBraid, normalize, parse_letter
from tiedlinks.errors import DomainError, ParseError
from tiedlinks.partitions import SetPartition, parse_partition, trivial


_HEADER = re.compile(r"^n\s*=\s*(\S+)$")
_TOKEN = re.compile(r"\S+")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _lines(text: str) -> List[Tuple[int, str]]:
    """(line number, content) of the non-blank lines; `;` also ends a line."""
    out: List[Tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if body.strip():
            out.append((lineno, body))
    if len(out) == 1 and ";" in out[0][1]:
        lineno, body = out[0]
        out = [(lineno, part) for part in body.split(";") if part.strip()]
    return out


def _parse_header(lineno: int, body: str) -> int:
    m = _HEADER.match(body.strip())
    col = len(body) - len(body.lstrip()) + 1
    if not m:
        raise ParseError("expected header 'n=<int>'", lineno, col, body.strip())
    value = m.group(1)
    if not value.isdigit() or int(value) < 1:
        raise ParseError(f"strand count must be a positive integer, got {value!r}", lineno, body.index(value) + 1, value)
    return int(value)


def _parse_ties(lineno: int, body: str, n: int) -> SetPartition:
    stripped = body.strip()
    col = body.index("ties") + 1
    _, _, rhs = stripped.partition("=")
    try:
        return parse_partition(rhs, n)
    except DomainError as e:
        raise ParseError(f"malformed partition: {e.message}", lineno, col, stripped) from None


def _parse_letters(rows: List[Tuple[int, str]], n: Optional[int]) -> List[Tuple[Letter, int, int, str]]:
    letters = []
    for lineno, body in rows:
        for m in _TOKEN.finditer(body):
            token = m.group(0)
            try:
                letter = parse_letter(token)
            except ValueError as e:
                raise ParseError(str(e), lineno, m.start() + 1, token) from None
            if n is not None and letter.index >= n:
                raise ParseError(f"index {letter.index} out of range for n={n}", lineno, m.start() + 1, token)
            letters.append((letter, lineno, m.start() + 1, token))
    return letters


def parse_input(text: str, infer_n: bool = False) -> TiedSingularBraid:
    """
    Parse one braid. With infer_n, a missing header is allowed and n is one
    more than the largest letter index (inline `--word` input).
    """
    rows = _lines(text)
    if not rows:
        if infer_n:
            return normalize([], 1)
        raise ParseError("empty input", 1, 1)
    n: Optional[int] = None
    lineno, body = rows[0]
    if body.strip().startswith("n") and "=" in body:
        n = _parse_header(lineno, body)
        rows = rows[1:]
    elif not infer_n:
        _parse_header(lineno, body)

    ties: Optional[SetPartition] = None
    ties_row: Optional[Tuple[int, str]] = None
    if rows and rows[0][1].strip().startswith("ties"):
        ties_row = rows[0]
        rows = rows[1:]

    letters = _parse_letters(rows, n)
    if n is None:
        n = max([1] + [l.index + 1 for l, *_ in letters])
    if ties_row is not None:
        ties = _parse_ties(ties_row[0], ties_row[1], n)
    return normalize([l for l, *_ in letters], n, ties=ties or trivial(n))


def parse_inputs(text: str, infer_n: bool = False) -> List[TiedSingularBraid]:
    """Braids separated by `---` lines."""
    chunks: List[List[str]] = [[]]
    for line in text.splitlines():
        if line.strip() == "---":
            chunks.append([])
        else:
            chunks[-1].append(line)
    out: List[TiedSingularBraid] = []
    offset = 0
    for chunk in chunks:
        try:
            out.append(parse_input("\n".join(chunk), infer_n=infer_n))
        except ParseError as e:
            raise ParseError(e.message.rsplit(" (line", 1)[0], e.line + offset, e.column, e.token) from None
        offset += len(chunk) + 1
    return out
