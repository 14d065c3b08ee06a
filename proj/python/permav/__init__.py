"""Insertion-encoding automata and exact generating functions for finitely
based permutation classes."""

from ._permav import (  # noqa: F401
    Automaton,
    GuardError,
    InvalidArgumentError,
    NotRegularError,
    ParseError,
    avoids,
    build,
    check_regular,
    compare,
    contains,
    decode,
    encode,
    gf,
    oracle_counts,
    run_cli,
    standardize,
    survey,
    symmetry,
)

__all__ = [
    "Automaton",
    "GuardError",
    "InvalidArgumentError",
    "NotRegularError",
    "ParseError",
    "avoids",
    "build",
    "check_regular",
    "compare",
    "contains",
    "decode",
    "encode",
    "gf",
    "oracle_counts",
    "run_cli",
    "standardize",
    "survey",
    "symmetry",
]
