"""Executable checks of the GSWNC results over a curated ring catalog."""

from .catalog import Catalog, default_catalog
from .checks import REGISTRY, CheckResult, Instance, resolve_ids, run_all, run_check
from .report import SCHEMA_VERSION, canonical_json, render, report

__all__ = [
    "Catalog",
    "CheckResult",
    "Instance",
    "REGISTRY",
    "SCHEMA_VERSION",
    "canonical_json",
    "default_catalog",
    "render",
    "report",
    "resolve_ids",
    "run_all",
    "run_check",
]
