"""Command-line surface: `python -m cli <command>`."""

from .parse import parse_input, parse_inputs
from .runner import JobSpec, RunResult, main, render_report, run

__all__ = ["JobSpec", "RunResult", "main", "parse_input", "parse_inputs", "render_report", "run"]
