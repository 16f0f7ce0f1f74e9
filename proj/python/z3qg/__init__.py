"""Exact computations in Z3-graded quantum matrix algebras."""

from ._z3qg import (
    ParseError,
    Presentation,
    RewriteLimitError,
    check_names,
    load,
    map_names,
    parse_presentation,
    preset_names,
    report_json,
    verify,
    verify_all,
)

__all__ = [
    "ParseError",
    "Presentation",
    "RewriteLimitError",
    "check_names",
    "load",
    "map_names",
    "normalize",
    "parse_presentation",
    "preset_names",
    "report_json",
    "verify",
    "verify_all",
]


def normalize(expr: str, preset: str = "Mq2") -> str:
    """Normal form of `expr` in the named preset."""
    return load(preset).normalize(expr)
