"""Cayley graphs of right groups G x R_k: construction, planarity, verification."""

from ._core import (
    CapExceeded,
    RgpError,
    catalog,
    cayley_digraph,
    decide,
    group_elements,
    min_genus,
    planarity,
    run_cli,
    to_dot,
)

__all__ = [
    "CapExceeded",
    "RgpError",
    "catalog",
    "cayley_digraph",
    "decide",
    "group_elements",
    "min_genus",
    "planarity",
    "run_cli",
    "to_dot",
]
