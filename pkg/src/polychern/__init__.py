"""Chern and Euler intersection numbers on planar polygon spaces.

Exact rational arithmetic throughout.  The cocycle algebra lives in
:mod:`polychern.algebra`, the class representatives in
:mod:`polychern.classes`, and an independent triangle-count oracle in
:mod:`polychern.oracle`.
"""
from __future__ import annotations

from .algebra import (
    Cocycle,
    Factor,
    Ring,
    cup,
    cup_all,
    evaluate_top,
    format_cocycle,
    parse_cocycle,
)
from .classes import (
    MonomialSpec,
    chern_monomial,
    chern_monomial_cocycle,
    chern_rep,
    chern_table,
    euler_class,
    euler_pair,
    euler_power_top,
    parse_monomial,
)
from .errors import (
    BadDegree,
    NonGeneric,
    NonTransversal,
    PolychernError,
)
from .lengths import (
    LengthVector,
    SymbolicLengths,
    chamber_signature,
    is_generic,
    parse_lengths,
    perturb,
    resolve_lengths,
)
from .oracle import chern_general_triangles, euler_power_triangles, list_triangles

__version__ = "0.1.0"

__all__ = [
    "BadDegree", "Cocycle", "Factor", "LengthVector", "MonomialSpec", "NonGeneric",
    "NonTransversal", "PolychernError", "Ring", "SymbolicLengths", "chamber_signature",
    "chern_general_triangles", "chern_monomial", "chern_monomial_cocycle", "chern_rep",
    "chern_table", "cup", "cup_all", "euler_class", "euler_pair", "euler_power_top",
    "euler_power_triangles", "evaluate_top", "format_cocycle", "is_generic",
    "list_triangles", "parse_cocycle", "parse_lengths", "parse_monomial", "perturb",
    "resolve_lengths",
]
