"""Exact Riordan-array and lower-triangular matrix algebra.

Thin python facade over the C++ core. Everything computes in exact rational
arithmetic; polynomials cross the boundary as canonical literal strings.
"""

from ._core import (
    MathError,
    ParseError,
    Poly,
    RiordanArray,
    Series,
    Triangle,
    bernoulli_numbers,
    euler_numbers,
    gauss_binomial,
    gbt,
    list_identities,
    list_sequence_families,
    pair_check,
    run_all,
    run_identity,
    sequence_family,
)

__all__ = [
    "MathError",
    "ParseError",
    "Poly",
    "RiordanArray",
    "Series",
    "Triangle",
    "bernoulli_numbers",
    "euler_numbers",
    "gauss_binomial",
    "gbt",
    "list_identities",
    "list_sequence_families",
    "pair_check",
    "run_all",
    "run_identity",
    "sequence_family",
]

__version__ = "0.1.0"
