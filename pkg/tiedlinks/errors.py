#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
tiedlinks/errors.py — exception hierarchy shared by the engine and the CLI.

Every error is a RuntimeError subclass carrying the fields a caller needs to
report it without string parsing. The CLI maps them onto exit codes:

    DomainError, ParseError, ValidationError  → 2 (input error)
    MoveRejected, CheckFailure                → 1 (assertion failure)
"""

from __future__ import annotations

from typing import Optional


class TiedLinksError(RuntimeError):
    """Base class; `where` names the operation that refused the input."""

    exit_code = 2

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where
        self.message = message


class DomainError(TiedLinksError):
    pass


class ParseError(TiedLinksError):
    def __init__(self, message: str, line: int, column: int, token: str = ""):
        super().__init__("parse", f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
        self.token = token


class MoveRejected(TiedLinksError):
    exit_code = 1


class CheckFailure(TiedLinksError):
    exit_code = 1

    def __init__(self, where: str, message: str, counterexample: Optional[str] = None):
        super().__init__(where, message if not counterexample else f"{message} [counterexample: {counterexample}]")
        self.counterexample = counterexample


class ValidationError(TiedLinksError):
    def __init__(self, where: str, message: str, schema_path: str = "", instance_path: str = ""):
        RuntimeError.__init__(self, f"{where}: {message} (at $.{instance_path}; rule {schema_path})")
        self.where = where
        self.message = message
        self.schema_path = schema_path
        self.instance_path = instance_path
