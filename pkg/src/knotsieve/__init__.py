"""Desk-scale verification pipeline for bracket-trivial knot diagrams.

Enumerates knot diagrams up to a crossing bound from algebraic tangles
and 4-valent planar scaffolds, sieves them by determinant and Kauffman
bracket, and confirms the survivors are unknots by Reidemeister search.
"""

from .laurent import DELTA, LaurentPoly
from .cyclotomic import Cyclotomic8, eval_zeta8
from .bracket import (
    BracketPair,
    bracket_add,
    bracket_mirror,
    bracket_mul,
    bracket_rotate90,
    bracket_transpose,
    closure_bracket,
    conn_compose,
)

from .tangles import TangleRecord, enumerate_tangles
from .polyhedra import PolyhedronRecord, enumerate_polyhedra
from .diagrams import (
    FilledDiagram,
    component_count,
    determinant,
    enumerate_diagrams,
    expand_to_pd,
    is_candidate,
    jones_from_bracket,
    state_sum_bracket,
)
from .simplify import SimplifyOutcome, simplify

__all__ = [
    "TangleRecord",
    "enumerate_tangles",
    "PolyhedronRecord",
    "enumerate_polyhedra",
    "FilledDiagram",
    "component_count",
    "determinant",
    "enumerate_diagrams",
    "expand_to_pd",
    "is_candidate",
    "jones_from_bracket",
    "state_sum_bracket",
    "SimplifyOutcome",
    "simplify",
    "DELTA",
    "LaurentPoly",
    "Cyclotomic8",
    "eval_zeta8",
    "BracketPair",
    "bracket_add",
    "bracket_mul",
    "bracket_transpose",
    "bracket_rotate90",
    "bracket_mirror",
    "closure_bracket",
    "conn_compose",
]
