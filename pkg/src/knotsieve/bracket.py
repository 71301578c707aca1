"""Bracket pairs in the (0-tangle, infinity-tangle) basis, and the
endpoint-connectivity bookkeeping that tracks internal loops.

A tangle, as a skein element, is p*[0] + q*[infinity]; the pair (p, q)
composes under tangle addition, multiplication and quarter-turn rotation
by the closed formulas below, so brackets of arbitrarily nested algebraic
tangles cost a handful of polynomial multiplications each.
"""

from __future__ import annotations

from .laurent import DELTA, LaurentPoly, A, A_INV, ONE, ZERO

# Connectivity kinds: which perfect matching of {NW, NE, SE, SW} the
# tangle's strands realize.
CONN_H = "H"  # NW-NE and SW-SE, the 0-tangle pattern
CONN_V = "V"  # NW-SW and NE-SE, the infinity-tangle pattern
CONN_X = "X"  # NW-SE and NE-SW


class BracketPair:
    """Coordinates (p, q) of a tangle in the free 0/infinity basis."""

    __slots__ = ("p", "q")

    def __init__(self, p: LaurentPoly, q: LaurentPoly):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("BracketPair is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, BracketPair)
            and self.p == other.p
            and self.q == other.q
        )

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return f"({self.p!r}, {self.q!r})"


ZERO_TANGLE = BracketPair(ONE, ZERO)
INF_TANGLE = BracketPair(ZERO, ONE)
POS_CROSSING = BracketPair(A, A_INV)   # [+1] = A[0] + A^-1[inf]
NEG_CROSSING = BracketPair(A_INV, A)   # [-1] = A^-1[0] + A[inf]


def bracket_add(t1: BracketPair, t2: BracketPair) -> BracketPair:
    """Side-by-side tangle addition.

    The unique bilinear extension of 0+0=0, 0+inf=inf, inf+0=inf and
    inf+inf = inf with one free loop.
    """
    p1, q1, p2, q2 = t1.p, t1.q, t2.p, t2.q
    return BracketPair(p1 * p2, p1 * q2 + q1 * p2 + DELTA * (q1 * q2))


def bracket_transpose(t: BracketPair) -> BracketPair:
    """Reflection across the NW-SE diagonal (a ball rotation): swaps the
    basis tangles and fixes A."""
    return BracketPair(t.q, t.p)


def bracket_mul(t1: BracketPair, t2: BracketPair) -> BracketPair:
    """Tangle multiplication: addition of the NW-SE reflection of t1."""
    return bracket_add(bracket_transpose(t1), t2)


def bracket_rotate90(t: BracketPair) -> BracketPair:
    """Quarter-turn of the disk: swaps the basis tangles, fixes A."""
    return BracketPair(t.q, t.p)


def bracket_mirror(t: BracketPair) -> BracketPair:
    """Bracket of the mirror-image tangle (all crossings switched)."""
    return BracketPair(t.p.invert_variable(), t.q.invert_variable())


def closure_bracket(t: BracketPair) -> LaurentPoly:
    """Reduced bracket (unknot -> 1) of the numerator closure, which
    joins NW-NE and SW-SE: [0] closes to two circles, [inf] to one."""
    return t.p * DELTA + t.q


def twist_bracket(n: int, vertical: bool = False) -> BracketPair:
    """Bracket of the integral n-twist (horizontal by default)."""
    step = POS_CROSSING if n > 0 else NEG_CROSSING
    if vertical:
        # vertical stacking is addition conjugated by a quarter turn
        t = INF_TANGLE
        for _ in range(abs(n)):
            t = bracket_rotate90(
                bracket_add(bracket_rotate90(t), bracket_rotate90(step))
            )
        return t
    t = ZERO_TANGLE
    for _ in range(abs(n)):
        t = bracket_add(t, step)
    return t


# -- connectivity ----------------------------------------------------

_TRANSPOSE = {CONN_H: CONN_V, CONN_V: CONN_H, CONN_X: CONN_X}

# (left, right) -> (result, loops created) for horizontal addition
_ADD_TABLE = {
    (CONN_H, CONN_H): (CONN_H, 0),
    (CONN_H, CONN_V): (CONN_V, 0),
    (CONN_H, CONN_X): (CONN_X, 0),
    (CONN_V, CONN_H): (CONN_V, 0),
    (CONN_V, CONN_V): (CONN_V, 1),
    (CONN_V, CONN_X): (CONN_V, 0),
    (CONN_X, CONN_H): (CONN_X, 0),
    (CONN_X, CONN_V): (CONN_V, 0),
    (CONN_X, CONN_X): (CONN_H, 0),
}


def conn_compose(op: str, c1: str, c2: str | None = None):
    """Compose endpoint matchings; returns (kind, loops created).

    Addition closes a loop exactly when both operands are V; the other
    two operations reduce to it.
    """
    if op == "add":
        return _ADD_TABLE[(c1, c2)]
    if op == "mul":
        return _ADD_TABLE[(_TRANSPOSE[c1], c2)]
    if op == "rotate90":
        if c2 is not None:
            raise ValueError("rotate90 is unary")
        return (_TRANSPOSE[c1], 0)
    raise ValueError(f"unknown op {op!r}")


def twist_conn(n: int, vertical: bool = False) -> str:
    """Connectivity of an integral twist: parity decides."""
    if n % 2 == 0:
        return CONN_V if vertical else CONN_H
    return CONN_X
