"""Claim catalog and evaluation engine.

Importing this package registers every cataloged checker; `catalog()` lists
them, `run_checker` / `run_all` evaluate them over an index range.
"""

from . import catalog_gaps, catalog_floor, catalog_parts, catalog_twins  # noqa: F401
from .engine import EvalContext, RunOpts, run_all, run_checker, run_many
from .types import (CheckReport, CheckerSpec, Counts, Kind, Outcome, Triple,
                    Verdict, registry)


def catalog() -> list[CheckerSpec]:
    """The full checker catalog, sorted by id; stable across runs."""
    return [registry()[k] for k in sorted(registry())]


__all__ = [
    "CheckReport", "CheckerSpec", "Counts", "EvalContext", "Kind", "Outcome",
    "RunOpts", "Triple", "Verdict", "catalog", "registry",
    "run_all", "run_checker", "run_many",
]
