#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
tiedlinks/validators.py — JSON Schema validation of config and job YAML.

Features
--------
- Load & cache Draft 2020-12 schemas written as YAML under ./schemas
- Two modes:
    • lint_*()    → list of (instance_pointer, message) problems (non-throwing)
    • assert_*()  → raise ValidationError on the first problem
- Optional default injection (schema "default" → instance), opt-in per call
- validate_jobs_dir() sweeps a directory of job batches into a DirReport

Conventions
-----------
- schemas/config.schema.yaml   the optional tiedlinks.yaml config file
- schemas/job.schema.yaml      batch files of JobSpecs (`python -m cli --job`)
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml
from jsonschema import Draft202012Validator, validators
from jsonschema import exceptions as js_ex

from .errors import ValidationError


SCHEMAS_DIR = Path(__file__).resolve().parents[1] / "schemas"

DEFAULT_CONFIG_SCHEMA = "config.schema.yaml"
DEFAULT_JOB_SCHEMA = "job.schema.yaml"


# --------------------------- Helpers ------------------------------

def _extend_with_default(validator_class):
    """Validator class that writes schema defaults into the instance."""
    validate_props = validator_class.VALIDATORS["properties"]

    def set_defaults(validator, properties, instance, schema):
        if isinstance(instance, dict):
            for prop, subschema in (properties or {}).items():
                if "default" in subschema and prop not in instance:
                    instance[prop] = subschema["default"]
        yield from validate_props(validator, properties, instance, schema)

    return validators.extend(validator_class, {"properties": set_defaults})


def _format_error(err: js_ex.ValidationError) -> Tuple[str, str]:
    inst = "/".join(str(x) for x in err.path) if err.path else "(root)"
    sch = "/".join(str(x) for x in err.schema_path)
    return inst, sch


def _load_yaml(path: Path) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)


# --------------------------- Schema cache -------------------------

@dataclass
class _CompiledSchema:
    path: Path
    validator: Draft202012Validator


class SchemaRegistry:
    """Compile each schema file once per (name, apply_defaults)."""

    def __init__(self, schemas_dir: Optional[str] = None):
        self.schemas_dir = Path(schemas_dir) if schemas_dir else SCHEMAS_DIR
        self._cache: Dict[str, _CompiledSchema] = {}
        self._plain_cls = Draft202012Validator
        self._defaults_cls = _extend_with_default(Draft202012Validator)

    def _compile(self, name: str, apply_defaults: bool) -> _CompiledSchema:
        path = (self.schemas_dir / name).resolve()
        if not path.exists():
            raise FileNotFoundError(f"Schema not found: {path}")
        raw = _load_yaml(path)
        cls = self._defaults_cls if apply_defaults else self._plain_cls
        return _CompiledSchema(path=path, validator=cls(raw))

    def get(self, name: str, apply_defaults: bool = False) -> _CompiledSchema:
        key = f"{name}::defaults={bool(apply_defaults)}"
        compiled = self._cache.get(key)
        if compiled is None:
            compiled = self._compile(name, apply_defaults)
            self._cache[key] = compiled
        return compiled


_REGISTRY = SchemaRegistry()


# --------------------------- Public API ---------------------------

def lint_instance(
    instance: Any,
    schema_file: str,
    registry: Optional[SchemaRegistry] = None,
    apply_defaults: bool = False,
) -> List[Tuple[str, str]]:
    compiled = (registry or _REGISTRY).get(schema_file, apply_defaults=apply_defaults)
    errs = sorted(compiled.validator.iter_errors(instance), key=lambda e: list(map(str, e.path)))
    return [(_format_error(e)[0], e.message) for e in errs]


def assert_instance(
    instance: Any,
    schema_file: str,
    where: str = "instance",
    registry: Optional[SchemaRegistry] = None,
    apply_defaults: bool = False,
) -> None:
    compiled = (registry or _REGISTRY).get(schema_file, apply_defaults=apply_defaults)
    for e in compiled.validator.iter_errors(instance):
        inst_ptr, sch_ptr = _format_error(e)
        raise ValidationError(where=where, message=e.message, schema_path=sch_ptr, instance_path=inst_ptr)


def lint_config(cfg: Dict[str, Any], registry: Optional[SchemaRegistry] = None):
    return lint_instance(cfg, DEFAULT_CONFIG_SCHEMA, registry=registry)


def assert_config(cfg: Dict[str, Any], where: str = "config", registry: Optional[SchemaRegistry] = None):
    return assert_instance(cfg, DEFAULT_CONFIG_SCHEMA, where=where, registry=registry)


def lint_job(batch: Dict[str, Any], registry: Optional[SchemaRegistry] = None, apply_defaults: bool = False):
    return lint_instance(batch, DEFAULT_JOB_SCHEMA, registry=registry, apply_defaults=apply_defaults)


def assert_job(
    batch: Dict[str, Any],
    where: str = "job",
    registry: Optional[SchemaRegistry] = None,
    apply_defaults: bool = False,
):
    return assert_instance(batch, DEFAULT_JOB_SCHEMA, where=where, registry=registry, apply_defaults=apply_defaults)


# ---- Directory helper ----

@dataclass
class DirReport:
    total: int
    valid: int
    invalid: int
    files: List[Dict[str, Any]]  # [{path, valid, problems:[(ptr,msg),...]}]


def validate_jobs_dir(jobs_dir: str = "jobs", registry: Optional[SchemaRegistry] = None) -> DirReport:
    """Validate every *.yaml batch in a directory against job.schema.yaml."""
    base = Path(jobs_dir)
    files: List[Dict[str, Any]] = []
    valid = 0
    for p in sorted(list(base.glob("*.yaml")) + list(base.glob("*.yml"))):
        try:
            doc = _load_yaml(p)
        except yaml.YAMLError as e:
            files.append({"path": str(p), "valid": False, "problems": [("(root)", f"YAML parse error: {e}")]})
            continue
        problems = lint_job(doc, registry=registry)
        ok = not problems
        valid += ok
        files.append({"path": str(p), "valid": ok, "problems": problems})
    return DirReport(total=len(files), valid=valid, invalid=len(files) - valid, files=files)
