"""Knot diagrams assembled from tangles: closures and polyhedron fills.

A FilledDiagram is either the numerator closure of one tangle or a
Conway polyhedron with a tangle inserted at every vertex.  Brackets are
computed by a tangle-level state sum: each vertex is resolved into the
0- or infinity-tangle with weight p or q, and each of the 2^v resolved
pictures contributes its weight product times DELTA^(loops-1).  The
determinant sieve evaluates the same sum in Z[zeta8], where DELTA
vanishes and only single-loop states survive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import isqrt

from .bracket import CONN_H, CONN_V, CONN_X, closure_bracket
from .cyclotomic import Cyclotomic8, eval_zeta8
from .laurent import DELTA, LaurentPoly
from .polyhedra import PolyhedronRecord
from .tangles import TangleRecord

_CONN_TRANSPOSE = {CONN_H: CONN_V, CONN_V: CONN_H, CONN_X: CONN_X}


@dataclass(frozen=True)
class Closure:
    tangle: TangleRecord


@dataclass(frozen=True)
class Fill:
    polyhedron: PolyhedronRecord
    assignment: tuple  # per-vertex (TangleRecord, orientation 0 | 90)


@dataclass(frozen=True)
class FilledDiagram:
    source: Closure | Fill
    crossings: int

    @staticmethod
    def closure(tangle: TangleRecord) -> "FilledDiagram":
        return FilledDiagram(Closure(tangle), tangle.crossings)

    @staticmethod
    def fill(polyhedron: PolyhedronRecord, assignment) -> "FilledDiagram":
        assignment = tuple(assignment)
        if len(assignment) != polyhedron.vertex_count:
            raise ValueError("one tangle per vertex required")
        if any(orient not in (0, 90) for _, orient in assignment):
            raise ValueError("orientation must be 0 or 90")
        total = sum(rec.crossings for rec, _ in assignment)
        return FilledDiagram(Fill(polyhedron, assignment), total)


def _vertex_conn(rec: TangleRecord, orient: int) -> str:
    return rec.conn if orient == 0 else _CONN_TRANSPOSE[rec.conn]


def _vertex_pq(rec: TangleRecord, orient: int):
    br = rec.bracket
    return (br.p, br.q) if orient == 0 else (br.q, br.p)


def _pairings(rotation):
    """The three dart matchings of one vertex, keyed by connectivity:
    rotation order is the corner order NW, NE, SE, SW."""
    d0, d1, d2, d3 = rotation
    return {
        CONN_H: ((d0, d1), (d2, d3)),
        CONN_V: ((d0, d3), (d1, d2)),
        CONN_X: ((d0, d2), (d1, d3)),
    }


def _count_loops(vertex_pairs, edge_pairing, ndarts):
    nxt = [0] * ndarts
    for pairs in vertex_pairs:
        for a, b in pairs:
            nxt[a] = b
            nxt[b] = a
    seen = [False] * ndarts
    loops = 0
    for d0 in range(ndarts):
        if seen[d0]:
            continue
        loops += 1
        d = d0
        while not seen[d]:
            # mark the entry and exit darts: the reverse traversal of
            # the same curve must not count again
            seen[d] = True
            seen[nxt[d]] = True
            d = edge_pairing[nxt[d]]
    return loops


def component_count(d: FilledDiagram) -> int:
    """Closed curves of the diagram when every tangle is replaced by
    its endpoint connectivity."""
    if isinstance(d.source, Closure):
        return 2 if d.source.tangle.conn == CONN_H else 1
    fill = d.source
    emb = fill.polyhedron.embedding
    vertex_pairs = []
    for vtx, (rec, orient) in enumerate(fill.assignment):
        conn = _vertex_conn(rec, orient)
        vertex_pairs.append(_pairings(emb.rotation[vtx])[conn])
    return _count_loops(
        vertex_pairs, emb.dart_pairing, 4 * emb.vertex_count
    )


def state_sum_bracket(d: FilledDiagram, ring: str = "laurent"):
    """Reduced (unknot-normalized) Kauffman bracket of the diagram, in
    Z[A, A^-1] ("laurent") or Z[zeta8] ("cyclotomic8")."""
    if ring not in ("laurent", "cyclotomic8"):
        raise ValueError(f"unknown ring {ring!r}")
    cyc = ring == "cyclotomic8"
    if isinstance(d.source, Closure):
        br = closure_bracket(d.source.tangle.bracket)
        return eval_zeta8(br) if cyc else br

    fill = d.source
    emb = fill.polyhedron.embedding
    v = emb.vertex_count
    if cyc:
        delta = eval_zeta8(DELTA)
        one = Cyclotomic8(1)
        total = Cyclotomic8()
    else:
        delta = DELTA
        one = LaurentPoly.one()
        total = LaurentPoly.zero()
    deltapow = [one]
    for _ in range(v + 1):
        deltapow.append(deltapow[-1] * delta)

    weights = []
    shapes = []
    for vtx, (rec, orient) in enumerate(fill.assignment):
        p, q = _vertex_pq(rec, orient)
        if cyc:
            p, q = eval_zeta8(p), eval_zeta8(q)
        weights.append((p, q))
        pairs = _pairings(emb.rotation[vtx])
        shapes.append((pairs[CONN_H], pairs[CONN_V]))

    ndarts = 4 * v
    for choice in itertools.product((0, 1), repeat=v):
        w = one
        skip = False
        for vtx, pick in enumerate(choice):
            coeff = weights[vtx][pick]
            if cyc and coeff.is_zero():
                skip = True
                break
            if not cyc and coeff.is_zero():
                skip = True
                break
            w = w * coeff
        if skip:
            continue
        loops = _count_loops(
            [shapes[vtx][pick] for vtx, pick in enumerate(choice)],
            emb.dart_pairing,
            ndarts,
        )
        if cyc and loops > 1:
            continue  # DELTA evaluates to zero at zeta8
        total = total + w * deltapow[loops - 1]
    return total


def determinant(d: FilledDiagram) -> int:
    """|V(-1)|: the bracket's norm at A = zeta8 is the squared
    determinant (the writhe correction is a unit there)."""
    z = state_sum_bracket(d, "cyclotomic8")
    n = z.norm_squared()
    r = isqrt(n)
    if r * r != n:
        raise ValueError(f"norm {n} is not a perfect square")
    return r


def is_candidate(d: FilledDiagram):
    """(True, bracket) iff the diagram passes the determinant gate and
    its full bracket is a unit monomial; (False, None) otherwise."""
    if determinant(d) != 1:
        return False, None
    br = state_sum_bracket(d, "laurent")
    if br.is_unit_monomial():
        return True, br
    return False, None


def jones_from_bracket(bracket: LaurentPoly, writhe: int) -> LaurentPoly:
    """V = (-A)^(-3w) * <D>, in the variable A (t = A^-4)."""
    out = bracket.shift(-3 * writhe)
    return out.scale(-1) if writhe % 2 else out


@dataclass(frozen=True)
class CandidateReport:
    diagram: FilledDiagram
    bracket: LaurentPoly
    det: int
    status: str  # "Confirmed" | "Unresolved"
    moves: int

    def to_json(self) -> dict:
        return {
            "src": "closure" if isinstance(self.diagram.source, Closure) else "fill",
            "poly": (
                None
                if isinstance(self.diagram.source, Closure)
                else self.diagram.source.polyhedron.canonical_code.hex()
            ),
            "tangles": [t for t in _tangle_exprs(self.diagram)],
            "orient": _orients(self.diagram),
            "c": self.diagram.crossings,
            "det": self.det,
            "candidate": True,
            "bracket": self.bracket.to_json(),
            "status": self.status,
            "moves": self.moves,
        }


def _tangle_exprs(d: FilledDiagram):
    from .tangles import expr_to_text

    if isinstance(d.source, Closure):
        return [expr_to_text(d.source.tangle.expr)]
    return [expr_to_text(rec.expr) for rec, _ in d.source.assignment]


def _orients(d: FilledDiagram):
    if isinstance(d.source, Closure):
        return [0]
    return [orient for _, orient in d.source.assignment]


def enumerate_diagrams(c: int, polyhedra, tangles):
    """Every Fill with exactly c crossings (trivializable insertions,
    both orientations per vertex) and every Closure of a c-crossing
    tangle, keeping only single-component diagrams.  Deterministic
    order: polyhedra in input order, compositions lexicographically,
    tangle pool order per slot, orientation bits last; closures after
    fills, in tangle pool order."""
    if c < 1:
        raise ValueError("c must be >= 1")
    by_c = {}
    for rec in tangles:
        by_c.setdefault(rec.crossings, []).append(rec)

    def compositions(total, parts):
        if parts == 1:
            if total >= 1:
                yield (total,)
            return
        for first in range(1, total - parts + 2):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for poly in polyhedra:
        v = poly.vertex_count
        if v > c:
            continue
        for comp in compositions(c, v):
            pools = []
            ok = True
            for ci in comp:
                pool = [r for r in by_c.get(ci, []) if r.trivializable]
                if not pool:
                    ok = False
                    break
                pools.append(pool)
            if not ok:
                continue
            for recs in itertools.product(*pools):
                for orients in itertools.product((0, 90), repeat=v):
                    d = FilledDiagram.fill(poly, tuple(zip(recs, orients)))
                    if component_count(d) == 1:
                        yield d
    for rec in by_c.get(c, []):
        d = FilledDiagram.closure(rec)
        if component_count(d) == 1:
            yield d


# ---------------------------------------------------------------------
# PD expansion
# ---------------------------------------------------------------------

def expand_to_pd(d: FilledDiagram):
    """Explicit crossing-level PD code of the diagram."""
    from .pd import PDCode, form_to_tangle_pd, numerator_closure
    from .tangles import expr_to_form

    if isinstance(d.source, Closure):
        form = expr_to_form(d.source.tangle.expr)
        return numerator_closure(form_to_tangle_pd(form))

    fill = d.source
    emb = fill.polyhedron.embedding
    crossings = []
    next_arc = 0
    # one arc per polyhedron edge
    edge_arc = {}
    for dart in range(4 * emb.vertex_count):
        mate = emb.dart_pairing[dart]
        if dart < mate:
            edge_arc[dart] = next_arc
            edge_arc[mate] = next_arc
            next_arc += 1
    for vtx, (rec, orient) in enumerate(fill.assignment):
        form = expr_to_form(rec.expr)
        tpd = form_to_tangle_pd(form)
        # internal arcs get fresh labels; boundary arcs map to darts
        nw, ne, se, sw = tpd.boundary
        d0, d1, d2, d3 = emb.rotation[vtx]
        if orient == 0:
            corner_dart = {nw: d0, ne: d1, se: d2, sw: d3}
        else:
            # tangle rotated a quarter turn clockwise: NW lands on NE
            corner_dart = {nw: d1, ne: d2, se: d3, sw: d0}
        remap = {}

        def arc_label(a):
            nonlocal next_arc
            if a in corner_dart:
                return edge_arc[corner_dart[a]]
            if a not in remap:
                remap[a] = next_arc
                next_arc += 1
            return remap[a]

        for quad in tpd.crossings:
            crossings.append(tuple(arc_label(a) for a in quad))
    return PDCode(tuple(crossings))
