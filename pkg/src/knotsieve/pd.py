"""Planar diagram (PD) codes and crossing-level bracket state sums.

A :class:`PDCode` records each crossing as a 4-tuple of arc labels in
counterclockwise cyclic order.  The entries at positions 0 and 2 are
the under-strand; positions 1 and 3 the over-strand.  For closed
diagrams every arc label appears exactly twice across the crossing
list.  Tangle codes additionally expose four boundary arcs (NW, NE,
SE, SW), each of which appears once in the crossing list.

The crossing-level Kauffman bracket here is the 2^n state sum over
A/B smoothings, used as an oracle against the compositional bracket.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bracket import BracketPair
from .laurent import DELTA, ONE, A, A_INV, LaurentPoly


@dataclass(frozen=True)
class PDCode:
    """Closed planar diagram code; crossings are CCW 4-tuples of arcs."""

    crossings: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        counts = {}
        for quad in self.crossings:
            for a in quad:
                counts[a] = counts.get(a, 0) + 1
        bad = sorted(a for a, k in counts.items() if k != 2)
        if bad:
            raise ValueError(f"arc labels not paired: {bad}")

    @property
    def n(self) -> int:
        return len(self.crossings)

    def to_text(self) -> str:
        return "\n".join(
            "X " + " ".join(str(a) for a in quad) for quad in self.crossings
        )

    @classmethod
    def from_text(cls, text: str) -> "PDCode":
        quads = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] != "X" or len(parts) != 5:
                raise ValueError(f"bad PD line: {line!r}")
            quads.append(tuple(int(p) for p in parts[1:]))
        return cls(tuple(quads))


class _Arcs:
    """Union-find over arc labels, used when smoothing crossings."""

    def __init__(self):
        self.parent = {}
        self.loops = 0

    def find(self, a):
        p = self.parent.setdefault(a, a)
        while p != self.parent[p]:
            self.parent[p] = self.parent[self.parent[p]]
            p = self.parent[p]
        self.parent[a] = p
        return p

    def join(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            self.loops += 1
        else:
            self.parent[ra] = rb


def _smoothing_pairs(quad, use_a):
    """Arc pairings for the A- or B-smoothing of one crossing.

    With the under-strand at positions 0/2, the A-smoothing joins the
    regions swept counterclockwise from the under-strand: (0,1)(2,3);
    the B-smoothing joins (0,3)(1,2).
    """
    a0, a1, a2, a3 = quad
    if use_a:
        return (a0, a1), (a2, a3)
    return (a0, a3), (a1, a2)


def bracket_state_sum(pd: PDCode) -> LaurentPoly:
    """Kauffman bracket of a closed diagram by brute-force state sum."""
    n = pd.n
    total = LaurentPoly.zero()
    for state in range(1 << n):
        arcs = _Arcs()
        exponent = 0
        for i, quad in enumerate(pd.crossings):
            use_a = not (state >> i) & 1
            exponent += 1 if use_a else -1
            for x, y in _smoothing_pairs(quad, use_a):
                arcs.join(x, y)
        # each closed loop is a component whose final join was redundant
        loops = arcs.loops
        term = LaurentPoly.term(1, exponent)
        for _ in range(loops - 1):
            term = term * DELTA
        total = total + term
    return total


@dataclass(frozen=True)
class TanglePD:
    """PD code of a 4-ended tangle; boundary arcs are NW, NE, SE, SW."""

    crossings: tuple[tuple[int, int, int, int], ...]
    boundary: tuple[int, int, int, int]

    def __post_init__(self):
        counts = {}
        for quad in self.crossings:
            for a in quad:
                counts[a] = counts.get(a, 0) + 1
        for a in self.boundary:
            counts[a] = counts.get(a, 0) + 1
        bad = sorted(a for a, k in counts.items() if k != 2)
        if bad:
            raise ValueError(f"arc labels not paired: {bad}")

    @property
    def n(self) -> int:
        return len(self.crossings)


def tangle_bracket_state_sum(t: TanglePD) -> BracketPair:
    """Bracket pair of a tangle code by brute-force state sum.

    Each smoothing state leaves a planar pairing of the four boundary
    arcs: NW-SW / NE-SE contributes to the 0-tangle coefficient, and
    NW-NE / SW-SE to the infinity-tangle coefficient.
    """
    nw, ne, se, sw = t.boundary
    p = LaurentPoly.zero()
    q = LaurentPoly.zero()
    for state in range(1 << t.n):
        arcs = _Arcs()
        exponent = 0
        for i, quad in enumerate(t.crossings):
            use_a = not (state >> i) & 1
            exponent += 1 if use_a else -1
            for x, y in _smoothing_pairs(quad, use_a):
                arcs.join(x, y)
        loops = arcs.loops
        term = LaurentPoly.term(1, exponent)
        for _ in range(loops):
            term = term * DELTA
        if arcs.find(nw) == arcs.find(ne) and arcs.find(sw) == arcs.find(se):
            p = p + term
        elif arcs.find(nw) == arcs.find(sw) and arcs.find(ne) == arcs.find(se):
            q = q + term
        else:
            raise AssertionError("non-planar boundary pairing")
    return BracketPair(p, q)


class _Builder:
    def __init__(self):
        self.next_arc = 0
        self.crossings = []

    def arc(self):
        self.next_arc += 1
        return self.next_arc

    def crossing(self, positive):
        """One crossing with fresh boundary arcs (nw, ne, se, sw).

        A positive (right-handed in the twist sense) crossing carries
        the NW-SE strand over; negative carries NE-SW over.
        """
        nw, ne, se, sw = self.arc(), self.arc(), self.arc(), self.arc()
        if positive:
            self.crossings.append((ne, nw, sw, se))
        else:
            self.crossings.append((nw, sw, se, ne))
        return nw, ne, se, sw

    def glue(self, a, b):
        """Identify arcs a and b across all crossings built so far."""
        if a == b:
            raise ValueError("gluing an arc to itself")
        self.crossings = [
            tuple(a if x == b else x for x in quad) for quad in self.crossings
        ]


def _build_form(b: _Builder, form, vertical_axis=False):
    """Recursively expand a spine form; returns (nw, ne, se, sw)."""
    if isinstance(form, int):
        return _build_twist(b, form, vertical_axis)
    kind, children = form
    horizontal = kind == "H"
    parts = [
        _build_form(b, ch, vertical_axis=horizontal)
        if not isinstance(ch, int)
        else _build_twist(b, ch, vertical=not horizontal)
        for ch in children
    ]
    out = parts[0]
    for nxt in parts[1:]:
        if horizontal:
            b.glue(out[1], nxt[0])  # ne <- nw
            b.glue(out[2], nxt[3])  # se <- sw
            out = (out[0], nxt[1], nxt[2], out[3])
        else:
            b.glue(out[3], nxt[0])  # sw <- nw
            b.glue(out[2], nxt[1])  # se <- ne
            out = (out[0], out[1], nxt[2], nxt[3])
    return out


def _build_twist(b: _Builder, n, vertical):
    if n == 0:
        raise ValueError("zero twist leaf")
    positive = n > 0
    out = b.crossing(positive)
    for _ in range(abs(n) - 1):
        nxt = b.crossing(positive)
        if vertical:
            b.glue(out[3], nxt[0])
            b.glue(out[2], nxt[1])
            out = (out[0], out[1], nxt[2], nxt[3])
        else:
            b.glue(out[1], nxt[0])
            b.glue(out[2], nxt[3])
            out = (out[0], nxt[1], nxt[2], out[3])
    return out


def form_to_tangle_pd(form) -> TanglePD:
    """Expand a tangle spine form into an explicit tangle PD code."""
    b = _Builder()
    nw, ne, se, sw = _build_form(b, form)
    return TanglePD(tuple(b.crossings), (nw, ne, se, sw))


def numerator_closure(t: TanglePD) -> PDCode:
    """Close NW-NE and SW-SE, yielding a closed diagram."""
    nw, ne, se, sw = t.boundary
    crossings = t.crossings
    for a, c in ((nw, ne), (sw, se)):
        crossings = tuple(
            tuple(a if x == c else x for x in quad) for quad in crossings
        )
    return PDCode(crossings)


def writhe(pd: PDCode) -> int:
    """Signed crossing sum under a traversal orientation.

    Each strand enters a crossing at some position and leaves at the
    opposite one; with the under-strand at positions 0/2 and quads in
    counterclockwise order, a crossing is positive when the over strand
    comes in one counterclockwise step after the under strand.
    """
    occ = {}
    for ci, quad in enumerate(pd.crossings):
        for pos, a in enumerate(quad):
            occ.setdefault(a, []).append((ci, pos))
    incoming = {}
    visited = set()
    for ci0 in range(pd.n):
        for pos0 in range(4):
            if (ci0, pos0) in visited:
                continue
            ci, pos = ci0, pos0
            while (ci, pos) not in visited:
                visited.add((ci, pos))
                out_pos = (pos + 2) % 4
                visited.add((ci, out_pos))
                incoming[(ci, pos)] = True
                arc = pd.crossings[ci][out_pos]
                a, b = occ[arc]
                ci, pos = b if (a == (ci, out_pos)) else a
    total = 0
    for ci in range(pd.n):
        unders = [p for p in (0, 2) if incoming.get((ci, p))]
        overs = [p for p in (1, 3) if incoming.get((ci, p))]
        if len(unders) != 1 or len(overs) != 1:
            raise ValueError("diagram is not a single oriented traversal")
        total += 1 if (unders[0] - overs[0]) % 4 == 1 else -1
    return total
