#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
cli/runner.py — command-line surface of the tiedlinks engine.

Usage
-----
# Invariant values of one braid (file in the input language, or inline)
python3 -m cli eval --braid jobs/trefoil.braid --inv all
python3 -m cli eval --word "n=2; t1" --inv phi --subst x=y

# Component count / sc-partition of the closure
python3 -m cli closure-partition --braid jobs/example_ex2.braid

# Compare two links, or the singular pair S, S′ built from two knot braids
python3 -m cli compare --word "n=2; s1 s1 s1" --word "n=3; s1 s2' s1 s2'"
python3 -m cli compare --singular-pair "n=2; s1 s1 s1" "n=3; s1 s2' s1 s2'" --inv phi

# Harnesses and self-tests (seeded; the seed is printed in every report)
python3 -m cli check markov --inv all --trials 100 --seed 7
python3 -m cli check all --json
python3 -m cli selftest

# A YAML batch of jobs (schemas/job.schema.yaml)
python3 -m cli --job jobs/acceptance.yaml

Exit codes
----------
0 success · 1 assertion failure (failed check, rejected move, unmet
expectation) · 2 input error (parse, schema, domain)
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import yaml

from tiedlinks.braids import LetterKind, TiedSingularBraid, build_singular_pair, closure_partition, format_word, single_block
from tiedlinks.btalgebra import PRESENTATIONS, dim_selftest
from tiedlinks.checks import Report
from tiedlinks.coeffs import FIELDS, check_field_axioms
from tiedlinks.coeffs import configure as configure_fields
from tiedlinks.config import load_config
from tiedlinks.errors import DomainError, TiedLinksError
from tiedlinks.hecke import check_specialization, hecke_markov_check, hecke_skein_check, homflypt, to_field
from tiedlinks.invariants import (
    ALL_KINDS,
    InvariantKind,
    InvariantResult,
    apply_substitution,
    check_anchors,
    check_clasp,
    check_classical,
    check_gamma_bar_markov,
    check_homogeneity,
    check_markov,
    check_relations,
    check_rule_two,
    check_singular_pair,
    check_skein,
    check_tie_comparison,
    check_tie_transport,
    invariant_value,
)
from tiedlinks.trace import check_trace_rules
from tiedlinks.trace import configure as configure_trace
from tiedlinks.validators import assert_job

from .parse import parse_input

# Optional pretty console
try:
    from rich.console import Console
    from rich.table import Table

    RICH = True
    console = Console()
except Exception:
    RICH = False
    console = None  # type: ignore


COMMANDS = ("eval", "components", "closure-partition", "check", "selftest", "compare")
HARNESSES = (
    "markov",
    "skein",
    "homogeneity",
    "trace",
    "singular-pair",
    "classical",
    "specialization",
    "rule-two",
    "gamma-bar",
    "clasp",
    "tie-transport",
    "tie-comparison",
    "relations",
    "all",
)

# A = closure(σ₁³), B = closure((σ₁σ₂⁻¹)²)
DEFAULT_PAIR = ("n=2\ns1 s1 s1", "n=3\ns1 s2' s1 s2'")
RELATION_KINDS = [InvariantKind.PHI, InvariantKind.PHI_PRIME]


# --------------------------- Job specification ---------------------------

@dataclass
class JobSpec:
    command: str
    kinds: List[InvariantKind] = field(default_factory=lambda: [InvariantKind.PHI])
    inputs: List[str] = field(default_factory=list)
    labels: List[str] = field(default_factory=list)
    singular_pair: Optional[Tuple[str, str]] = None
    harness: Optional[str] = None
    subst: Optional[str] = None
    oracle: bool = False
    seed: Optional[int] = None
    trials: Optional[int] = None
    max_n: Optional[int] = None
    max_len: Optional[int] = None
    fmt: str = "text"
    id: Optional[str] = None
    expect: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise DomainError("job", f"unknown command {self.command!r}")
        if self.command == "check" and self.harness not in HARNESSES:
            raise DomainError("job", f"check needs a harness, one of {', '.join(HARNESSES)}")
        if self.command in ("eval", "components", "closure-partition") and not self.inputs:
            raise DomainError("job", f"{self.command} needs --braid or --word")
        if self.command == "compare" and self.singular_pair is None and len(self.inputs) != 2:
            raise DomainError("job", "compare needs exactly two inputs or --singular-pair")
        if not self.labels:
            self.labels = [f"input{i + 1}" for i in range(len(self.inputs))]


@dataclass
class RunResult:
    command: str
    records: List[Dict[str, Any]] = field(default_factory=list)
    reports: List[Report] = field(default_factory=list)
    ok: bool = True
    job_id: Optional[str] = None


# --------------------------- Commands ---------------------------

def _parse_all(job: JobSpec) -> List[TiedSingularBraid]:
    return [parse_input(text, infer_n=True) for text in job.inputs]


def _evaluate(b: TiedSingularBraid, kind: InvariantKind, subst: Optional[str]) -> InvariantResult:
    res = invariant_value(b, kind)
    return apply_substitution(res, subst) if subst else res


def _oracle_check(b: TiedSingularBraid, kind: InvariantKind, cfg: Dict[str, Any]) -> Dict[str, Any]:
    if any(l.kind is LetterKind.TAU for l in b.word):
        raise DomainError("oracle", "the Homflypt oracle takes classical braids only")
    P = to_field(homflypt(b.word, b.n), kind, cfg)
    ok = invariant_value(single_block(b), kind).value == P
    return {"name": f"oracle[{kind.value}]", "pass": ok, "homflypt": str(P)}


def _run_eval(job: JobSpec, cfg: Dict[str, Any]) -> RunResult:
    out = RunResult(command="eval")
    for label, b in zip(job.labels, _parse_all(job)):
        for kind in job.kinds:
            res = _evaluate(b, kind, job.subst)
            rec = {
                "command": "eval",
                "inputs": [format_word(b)],
                "kind": kind.value,
                "value": res.render(),
                "metadata": {"input": label, **res.metadata()},
                "checks": [],
            }
            if job.oracle and kind in (InvariantKind.PHI, InvariantKind.PHI_PRIME):
                chk = _oracle_check(b, kind, cfg)
                rec["checks"].append(chk)
                out.ok = out.ok and chk["pass"]
            out.records.append(rec)
    return out


def _run_components(job: JobSpec, partition: bool) -> RunResult:
    out = RunResult(command=job.command)
    for label, b in zip(job.labels, _parse_all(job)):
        k, J = closure_partition(b)
        value = f"k={k}, J={J}" if partition else str(k)
        out.records.append(
            {
                "command": job.command,
                "inputs": [format_word(b)],
                "kind": None,
                "value": value,
                "metadata": {"input": label, "strands": b.n, "components": k, "sc_partition": str(J)},
                "checks": [],
            }
        )
    return out


def _compare_pair(job: JobSpec) -> Tuple[TiedSingularBraid, TiedSingularBraid, List[str]]:
    if job.singular_pair is not None:
        A, B = (parse_input(t, infer_n=True) for t in job.singular_pair)
        S, Sp = build_singular_pair(A, B)
        return S, Sp, ["S", "S'"]
    lhs, rhs = _parse_all(job)
    return lhs, rhs, list(job.labels)


def _run_compare(job: JobSpec) -> RunResult:
    lhs, rhs, labels = _compare_pair(job)
    out = RunResult(command="compare")
    for kind in job.kinds:
        left, right = _evaluate(lhs, kind, job.subst), _evaluate(rhs, kind, job.subst)
        sb_left = _evaluate(single_block(lhs), kind, job.subst)
        sb_right = _evaluate(single_block(rhs), kind, job.subst)
        equal = left.value == right.value
        sb_equal = sb_left.value == sb_right.value
        out.records.append(
            {
                "command": "compare",
                "inputs": [format_word(lhs), format_word(rhs)],
                "kind": kind.value,
                "value": [left.render(), right.render()],
                "metadata": {
                    "labels": labels,
                    "equal": equal,
                    "single_block": [sb_left.render(), sb_right.render()],
                    "single_block_equal": sb_equal,
                    "subst": job.subst,
                    "components": [left.components, right.components],
                },
                "checks": [],
            }
        )
    return out


def _budgets(job: JobSpec) -> Dict[str, Any]:
    return {"trials": job.trials, "seed": job.seed, "max_n": job.max_n, "max_len": job.max_len}


def _trace_reports(job: JobSpec, cfg: Dict[str, Any]) -> List[Report]:
    trials = job.trials if job.trials is not None else cfg["trace_trials"]
    seed = job.seed if job.seed is not None else cfg["seed"]
    top = job.max_n or cfg["max_n"]
    # the budget is spread over n = 2..top and both presentations, rounding up
    cases = max(1, 2 * (top - 1))
    per = max(1, -(-trials // cases))
    return [check_trace_rules(n, per, pres, seed) for pres in PRESENTATIONS.values() for n in range(2, top + 1)]


def _harness_reports(name: str, job: JobSpec, cfg: Dict[str, Any]) -> List[Report]:
    b = _budgets(job)
    per_kind: Dict[str, Callable[[InvariantKind], Report]] = {
        "markov": lambda k: check_markov(k, cfg=cfg, **b),
        "skein": lambda k: check_skein(k, trials=job.trials, seed=job.seed, max_n=job.max_n, max_len=job.max_len, cfg=cfg),
        "homogeneity": lambda k: check_homogeneity(k, cfg=cfg, **b),
    }
    if name in per_kind:
        return [per_kind[name](k) for k in job.kinds]
    if name == "trace":
        return _trace_reports(job, cfg)
    if name == "singular-pair":
        texts = job.singular_pair or DEFAULT_PAIR
        A, B = (parse_input(t, infer_n=True) for t in texts)
        return [check_singular_pair(A, B)]
    if name == "specialization":
        return [
            check_specialization(cfg=cfg, **b),
            hecke_skein_check(**b),
            hecke_markov_check(**b),
        ]
    simple: Dict[str, Callable[[], Report]] = {
        "classical": lambda: check_classical(cfg=cfg, **b),
        "rule-two": lambda: check_rule_two(cfg=cfg, **b),
        "gamma-bar": lambda: check_gamma_bar_markov(cfg=cfg, **b),
        "clasp": lambda: check_clasp(cfg=cfg, **b),
        "tie-transport": lambda: check_tie_transport(cfg=cfg, **b),
        "tie-comparison": lambda: check_tie_comparison(cfg=cfg, **b),
        "relations": lambda: check_relations(cfg=cfg, kinds=[k for k in job.kinds if k.tied] or RELATION_KINDS, **b),
    }
    if name in simple:
        return [simple[name]()]
    if name == "all":
        reports = [check_anchors()]
        for h in HARNESSES:
            if h != "all":
                reports.extend(_harness_reports(h, job, cfg))
        return reports
    raise DomainError("check", f"unknown harness {name!r}")


def _reports_result(command: str, reports: List[Report], kind: Optional[str]) -> RunResult:
    out = RunResult(command=command, reports=reports)
    for rep in reports:
        out.records.append(
            {
                "command": command,
                "inputs": [],
                "kind": kind,
                "value": None,
                "metadata": {"report": rep.name, "seed": rep.seed, "trials": rep.trials, "ok": rep.ok, "notes": rep.notes},
                "checks": [c.to_dict() for c in rep.checks],
            }
        )
        out.ok = out.ok and rep.ok
    return out


def _run_selftest(job: JobSpec, cfg: Dict[str, Any]) -> RunResult:
    top = job.max_n or cfg["dim_max_n"]
    seed = job.seed if job.seed is not None else cfg["seed"]
    reports = [dim_selftest(n, pres, seed=seed) for pres in PRESENTATIONS.values() for n in range(1, top + 1)]
    reports.extend(_trace_reports(job, cfg))
    reports.extend(check_field_axioms(F, cfg["field_trials"], seed) for F in FIELDS.values())
    reports.append(check_anchors())
    return _reports_result("selftest", reports, None)


def run(job: JobSpec, cfg: Optional[Dict[str, Any]] = None) -> RunResult:
    cfg = cfg or load_config()
    configure_fields(cfg)
    configure_trace(cfg)
    if job.command == "eval":
        res = _run_eval(job, cfg)
    elif job.command in ("components", "closure-partition"):
        res = _run_components(job, partition=job.command == "closure-partition")
    elif job.command == "compare":
        res = _run_compare(job)
    elif job.command == "check":
        kind = job.kinds[0].value if len(job.kinds) == 1 else "all"
        res = _reports_result("check", _harness_reports(job.harness or "all", job, cfg), kind)
    else:
        res = _run_selftest(job, cfg)
    res.job_id = job.id
    return res


# --------------------------- Rendering ---------------------------

def _check_line(c: Dict[str, Any]) -> str:
    status = "PASS" if c["pass"] else ("REPORTED" if c.get("reported_only") else "FAIL")
    if c.get("reported_only") and c["pass"]:
        status = "PASS (reported)"
    tail = f"  trials={c['trials']} failed={c['failed']}" if "trials" in c else ""
    line = f"  [{status}] {c['name']}{tail}"
    if c.get("counterexample") is not None and not c["pass"]:
        line += "\n      counterexample: " + c["counterexample"].replace("\n", "\n                      ")
    return line


def render_report(result: RunResult, fmt: str = "text") -> str:
    """Deterministic text or JSON; JSON is one object, or an array when there are several."""
    if fmt == "json":
        payload: Any = result.records[0] if len(result.records) == 1 else result.records
        return json.dumps(payload, indent=2, ensure_ascii=False)

    lines: List[str] = []
    if result.job_id:
        lines.append(f"== job {result.job_id} ==")
    for rec in result.records:
        cmd = rec["command"]
        if cmd == "eval":
            md = rec["metadata"]
            lines.append(f"{rec['kind']}: {rec['value']}")
            lines.append(
                f"  strands={md['strands']} components={md['components']} "
                f"sc-partition={md['sc_partition']} singularities={md['singularities']}"
            )
            lines.extend(_check_line(c) for c in rec["checks"])
        elif cmd in ("components", "closure-partition"):
            lines.append(rec["value"])
        elif cmd == "compare":
            md = rec["metadata"]
            left, right = md["labels"]
            verdict = "equal" if md["equal"] else "unequal"
            lines.append(f"{rec['kind']}: {verdict}")
            lines.append(f"  {left}: {rec['value'][0]}")
            lines.append(f"  {right}: {rec['value'][1]}")
            sb = "equal" if md["single_block_equal"] else "unequal"
            lines.append(f"  single-block: {sb}")
        else:
            md = rec["metadata"]
            lines.append(f"{md['report']}  seed={md['seed']} trials={md['trials']}  {'OK' if md['ok'] else 'FAILED'}")
            lines.extend(_check_line(c) for c in rec["checks"])
            lines.extend(f"  note: {n}" for n in md["notes"])
    return "\n".join(lines)


def _rich_tables(result: RunResult) -> List[Any]:
    if result.command == "compare":
        tbl = Table(title="Compare", show_lines=False)
        tbl.add_column("Kind", style="bold")
        labels = result.records[0]["metadata"]["labels"] if result.records else ["lhs", "rhs"]
        tbl.add_column(labels[0])
        tbl.add_column(labels[1])
        tbl.add_column("Equal", justify="center")
        tbl.add_column("Single block", justify="center")
        for rec in result.records:
            md = rec["metadata"]
            tbl.add_row(
                rec["kind"],
                rec["value"][0],
                rec["value"][1],
                "✅" if md["equal"] else "❌",
                "✅" if md["single_block_equal"] else "❌",
            )
        return [tbl]
    if result.command == "eval":
        tbl = Table(title="Invariants", show_lines=False)
        for col in ("Input", "Kind", "Value", "k", "J", "m"):
            tbl.add_column(col)
        for rec in result.records:
            md = rec["metadata"]
            tbl.add_row(
                md["input"], rec["kind"], rec["value"], str(md["components"]), md["sc_partition"], str(md["singularities"])
            )
        return [tbl]
    tables = []
    for rec in result.records:
        md = rec["metadata"]
        if "report" not in md:
            continue
        tbl = Table(title=f"{md['report']} (seed={md['seed']})", show_lines=False)
        tbl.add_column("Check", style="bold")
        tbl.add_column("Status", justify="center")
        tbl.add_column("Trials", justify="right")
        tbl.add_column("Counterexample", style="dim")
        for c in rec["checks"]:
            status = "✅" if c["pass"] else ("⚠" if c.get("reported_only") else "❌")
            tbl.add_row(c["name"], status, str(c.get("trials", 1)), "" if c["pass"] else (c.get("counterexample") or ""))
        tables.append(tbl)
    return tables


def print_report(result: RunResult, fmt: str) -> None:
    if fmt == "text" and RICH and result.command in ("compare", "eval", "check", "selftest"):
        for tbl in _rich_tables(result):
            console.print(tbl)  # type: ignore
        for rec in result.records:
            for n in rec["metadata"].get("notes", []) or []:
                console.print(f"[dim]note:[/dim] {n}")  # type: ignore
        return
    print(render_report(result, fmt))


# --------------------------- Batch jobs ---------------------------

def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise DomainError("input", f"cannot read {path}: {e}") from e


def load_jobs(path: Path) -> List[JobSpec]:
    with open(path, "r", encoding="utf-8") as f:
        batch = yaml.safe_load(f)
    assert_job(batch, where=str(path))
    defaults = batch.get("defaults") or {}
    specs: List[JobSpec] = []
    for item in batch["jobs"]:
        merged = {**defaults, **item}
        inputs: List[str] = []
        labels: List[str] = []
        for key in ("word", "words"):
            vals = merged.get(key)
            for text in [vals] if isinstance(vals, str) else (vals or []):
                inputs.append(text)
                labels.append(f"word{len(inputs)}")
        for key in ("braid", "braids"):
            vals = merged.get(key)
            for rel in [vals] if isinstance(vals, str) else (vals or []):
                inputs.append(_read_text(path.parent / rel))
                labels.append(rel)
        pair = merged.get("singular_pair")
        specs.append(
            JobSpec(
                command=merged["command"],
                kinds=InvariantKind.parse(merged.get("inv", "phi")),
                inputs=inputs,
                labels=labels,
                singular_pair=tuple(pair) if pair else None,  # type: ignore[arg-type]
                harness=merged.get("harness"),
                subst=merged.get("subst"),
                oracle=bool(merged.get("oracle", False)),
                seed=merged.get("seed"),
                trials=merged.get("trials"),
                max_n=merged.get("max_n"),
                max_len=merged.get("max_len"),
                fmt=merged.get("format", "text"),
                id=merged["id"],
                expect=merged.get("expect") or {},
            )
        )
    return specs


def unmet_expectations(job: JobSpec, result: RunResult) -> List[str]:
    problems: List[str] = []
    exp = job.expect
    if "value" in exp:
        got = result.records[0]["value"] if result.records else None
        if got != exp["value"]:
            problems.append(f"value {got!r} != expected {exp['value']!r}")
    if "equal" in exp:
        got_eq = all(r["metadata"].get("equal") for r in result.records)
        if got_eq != exp["equal"]:
            problems.append(f"equal={got_eq} != expected {exp['equal']}")
    if "ok" in exp and result.ok != exp["ok"]:
        problems.append(f"ok={result.ok} != expected {exp['ok']}")
    return problems


def run_batch(path: Path, cfg: Dict[str, Any], fmt: Optional[str] = None) -> int:
    specs = load_jobs(path)
    code = 0
    collected: List[Dict[str, Any]] = []
    for job in specs:
        result = run(job, cfg)
        problems = unmet_expectations(job, result)
        if job.expect:
            if "ok" not in job.expect and not result.ok:
                problems.append("checks failed")
        elif not result.ok:
            problems.append("checks failed")
        if problems:
            code = 1
            for p in problems:
                print(f"[job {job.id}] FAIL: {p}", file=sys.stderr)
        out_fmt = fmt or job.fmt
        if out_fmt == "json":
            collected.extend({"job": job.id, **r} for r in result.records)
        else:
            print_report(result, "text")
    if collected:
        print(json.dumps(collected, indent=2, ensure_ascii=False))
    return code


# --------------------------- Entry point ---------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="python -m cli", description="Tied singular link invariants Φ, Ψ, Φ′, Ψ′")
    ap.add_argument("command", nargs="?", choices=COMMANDS, help="what to run")
    ap.add_argument("harness", nargs="?", choices=HARNESSES, help="harness name for `check`")
    ap.add_argument("--inv", default="phi", choices=[k.value for k in ALL_KINDS] + ["all"], help="invariant kind(s)")
    ap.add_argument("--braid", action="append", default=[], metavar="FILE", help="braid file (repeatable)")
    ap.add_argument("--word", action="append", default=[], metavar="STRING", help="inline braid, lines split by ';'")
    ap.add_argument("--singular-pair", nargs=2, metavar=("A", "B"), help="two knot braids; compare S against S′")
    ap.add_argument("--subst", default=None, metavar="x=EXPR", help="substitute x or y before rendering/comparing")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--oracle", action="store_true", help="cross-check single-block Φ/Φ′ against Homflypt")
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--trials", type=int, default=None)
    ap.add_argument("--max-n", type=int, default=None)
    ap.add_argument("--max-len", type=int, default=None)
    ap.add_argument("--config", default=None, help="YAML config (else $TIEDLINKS_CONFIG, else built-in defaults)")
    ap.add_argument("--job", default=None, metavar="FILE", help="YAML batch of jobs")
    return ap


def _spec_from_args(args: argparse.Namespace) -> JobSpec:
    inputs = [_read_text(Path(p)) for p in args.braid] + list(args.word)
    labels = list(args.braid) + [f"word{i + 1}" for i in range(len(args.word))]
    return JobSpec(
        command=args.command,
        kinds=InvariantKind.parse(args.inv),
        inputs=inputs,
        labels=labels,
        singular_pair=tuple(args.singular_pair) if args.singular_pair else None,  # type: ignore[arg-type]
        harness=args.harness,
        subst=args.subst,
        oracle=args.oracle,
        seed=args.seed,
        trials=args.trials,
        max_n=args.max_n,
        max_len=args.max_len,
        fmt="json" if args.json else "text",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = load_config(args.config, seed=args.seed, max_n=args.max_n, max_len=args.max_len)
        if args.job:
            job_path = Path(args.job)
            if not job_path.exists():
                print(f"error: job file not found: {job_path}", file=sys.stderr)
                return 2
            return run_batch(job_path, cfg, "json" if args.json else None)
        if not args.command:
            ap.print_usage(sys.stderr)
            print("error: a command or --job is required", file=sys.stderr)
            return 2
        job = _spec_from_args(args)
        result = run(job, cfg)
    except TiedLinksError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except ZeroDivisionError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except yaml.YAMLError as e:
        print(f"error: failed to parse YAML: {e}", file=sys.stderr)
        return 2

    print_report(result, job.fmt)
    return 0 if result.ok else 1


if __name__ == "__main__":
    sys.exit(main())
