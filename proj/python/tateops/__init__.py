"""Tate cohomology of finite groups with its power operations (p = 2 chain engines, symbolic any p)."""

from ._core import (
    Group,
    Ring,
    TateClass,
    productive,
    resolution_json,
    suite_names,
    symbolic_q,
    symbolic_total,
    verify,
)

__all__ = [
    "Group",
    "Ring",
    "TateClass",
    "productive",
    "resolution_json",
    "suite_names",
    "symbolic_q",
    "symbolic_total",
    "verify",
]
