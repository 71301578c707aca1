"""Reidemeister-move simplification of planar diagram codes.

The search is monotone best-first: states are diagrams ordered by
crossing count, crossing-removing R1/R2 moves are applied greedily,
and crossing-preserving R3 moves are explored up to a node budget.
Reaching the 0-crossing diagram confirms the unknot; exhausting the
budget yields Unresolved.  Every move is an isotopy, so Confirmed
outcomes are sound regardless of the budget.

Faces are read off the rotation system (each crossing's 4-tuple is a
counterclockwise cyclic order): monogons admit R1, bigons with a
coherent over/under pattern admit R2, and triangles with a strand
passing over or under both others admit R3.

Tangle codes (four boundary arcs) are handled by the same machinery;
faces touching the boundary are simply never completed by the trace,
which is exactly the set of faces no move may use.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .pd import PDCode, TanglePD


@dataclass(frozen=True)
class SimplifyOutcome:
    status: str  # "Confirmed" | "Unresolved"
    final_crossings: int
    trace: tuple[str, ...]
    nodes_explored: int


# A state is a tuple of crossing quads plus an optional boundary quad.
# Quads keep the under-strand at positions 0 and 2.


def _ports(state):
    """arc label -> list of (crossing index, port)."""
    ports = {}
    for i, quad in enumerate(state):
        for p, a in enumerate(quad):
            ports.setdefault(a, []).append((i, p))
    return ports


def _faces(state, boundary):
    """Interior faces as lists of (crossing, arrive_port) corners."""
    ports = _ports(state)
    boundary_arcs = set(boundary or ())
    seen = set()
    faces = []
    for start in ((i, p) for i in range(len(state)) for p in range(4)):
        if start in seen:
            continue
        face = []
        dart = start
        ok = True
        while True:
            face.append(dart)
            i, p = dart
            leave = state[i][(p + 1) % 4]
            if leave in boundary_arcs and len(ports[leave]) == 1:
                ok = False
                break
            ends = ports[leave]
            (j, q) = ends[0] if ends[0] != (i, (p + 1) % 4) else ends[1]
            dart = (j, q)
            if dart == start:
                break
            if dart in seen or len(face) > len(state) * 4:
                ok = False
                break
        if ok:
            seen.update(face)
            faces.append(face)
        else:
            seen.add(start)
    return faces


def _relabel(state, mapping):
    return tuple(
        tuple(mapping.get(a, a) for a in quad) for quad in state
    )


def _join(state, pairs, removed, keep=frozenset()):
    """Remove crossings and identify arc pairs, dropping free loops.

    Labels in `keep` (boundary arcs) survive relabeling so that a
    tangle's boundary tuple stays valid across moves.
    """
    parent = {}

    def find(a):
        parent.setdefault(a, a)
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra in keep and rb not in keep:
                ra, rb = rb, ra
            parent[ra] = rb
    mapping = {a: find(a) for a in parent}
    kept = tuple(q for i, q in enumerate(state) if i not in removed)
    return _relabel(kept, mapping)


def _r1_result(state, face, keep=frozenset()):
    (i, p), = face
    quad = state[i]
    u, v = quad[(p + 2) % 4], quad[(p + 3) % 4]
    return _join(state, [(u, v)] if u != v else [], {i}, keep)


def _r2_applicable(state, face):
    (i, p), (j, s) = face
    if i == j:
        return False
    # alpha is the leave-arc at corner i, at port p+1 there and port s at j
    return (p + 1) % 2 == s % 2


def _r2_result(state, face, keep=frozenset()):
    (i, p), (j, s) = face
    qi, qj = state[i], state[j]
    u_alpha, u_beta = qi[(p + 3) % 4], qi[(p + 2) % 4]
    v_alpha, v_beta = qj[(s + 2) % 4], qj[(s + 3) % 4]
    pairs = [(a, b) for a, b in ((u_alpha, v_alpha), (u_beta, v_beta)) if a != b]
    return _join(state, pairs, {i, j}, keep)


def _r3_results(state, face):
    """All R3 slides available on a triangular face."""
    corners = face
    if len({i for i, _ in corners}) != 3:
        return
    fresh = max(a for quad in state for a in quad) + 1
    for t in range(3):
        # slide the strand of the arc leaving corner (t) into corner (t+1)
        (j, q), (i, p), (k, r) = corners[t], corners[(t + 1) % 3], corners[(t + 2) % 3]
        q = (q + 1) % 4  # port of the sliding arc g at j (its leave port)
        # g arrives at i at port p; slidable iff same parity at both ends
        if q % 2 != p % 2:
            continue
        qi, qj, qk = state[i], state[j], state[k]
        a_i, b_i = qi[(p + 2) % 4], qi[(p + 3) % 4]
        a_j, b_j = qj[(q + 2) % 4], qj[(q + 1) % 4]
        r_in = r  # e_ki arrives at k at port r
        c1, c2 = qk[(r_in + 2) % 4], qk[(r_in + 3) % 4]
        f, n1, n2 = fresh, fresh + 1, fresh + 2
        new_k = list(qk)
        new_k[r_in] = b_i
        new_k[(r_in + 1) % 4] = b_j
        new_k[(r_in + 2) % 4] = n1
        new_k[(r_in + 3) % 4] = n2
        x1 = (a_j, c1, f, n1)
        if p % 2 == 1:  # sliding strand is over
            x1 = (c1, f, n1, a_j)
        x2 = (f, c2, a_i, n2)
        if p % 2 == 1:
            x2 = (c2, a_i, n2, f)
        out = list(state)
        out[k] = tuple(new_k)
        rest = tuple(q2 for m, q2 in enumerate(out) if m not in (i, j))
        yield rest + (x1, x2)


def _r2_up_results(state, face):
    """R2 moves that poke one face arc across another (adds 2 crossings).

    Not used by the monotone `simplify` search; the tangle reducibility
    oracle explores these with a small crossing-count slack, which is
    what realizes flypes as Reidemeister sequences.
    """
    fresh = max(a for quad in state for a in quad) + 1
    k = len(face)
    for t in range(k):
        for u in range(k):
            if t == u:
                continue
            it, pt = face[t]
            it1, pt1 = face[(t + 1) % k]
            iu, pu = face[u]
            iu1, pu1 = face[(u + 1) % k]
            alpha = state[it][(pt + 1) % 4]
            beta = state[iu][(pu + 1) % 4]
            if alpha == beta:
                continue
            a1, a2, b1, b2, m, mid = range(fresh, fresh + 6)

            def subst(i, pos, new, st):
                quad = list(st[i])
                quad[pos] = new
                return st[:i] + (tuple(quad),) + st[i + 1:]

            base = state
            base = subst(it, (pt + 1) % 4, a1, base)
            base = subst(it1, pt1, a2, base)
            base = subst(iu1, pu1, b1, base)
            base = subst(iu, (pu + 1) % 4, b2, base)
            for alpha_over in (False, True):
                if alpha_over:
                    x = (mid, a1, b1, m)
                    y = (b2, a2, mid, m)
                else:
                    x = (m, mid, a1, b1)
                    y = (a2, mid, m, b2)
                yield base + (x, y)


def _greedy_reduce(state, boundary):
    """Apply crossing-removing R1/R2 moves until none applies."""
    moves = []
    keep = frozenset(boundary or ())
    while True:
        for face in _faces(state, boundary):
            if len(face) == 1:
                state = _r1_result(state, face, keep)
                moves.append("R1")
                break
            if len(face) == 2 and _r2_applicable(state, face):
                state = _r2_result(state, face, keep)
                moves.append("R2")
                break
        else:
            return state, moves


def canonical_key(state):
    """Canonical encoding up to arc relabeling and plane reflection."""
    if not state:
        return ()
    ports = _ports(state)
    best = None
    for start in range(len(state)):
        for p0 in range(4):
            for direction in (1, -1):
                code = _trace_code(state, ports, start, p0, direction)
                if best is None or code < best:
                    best = code
    return best


def _trace_code(state, ports, start, p0, direction):
    labels = {}
    visited = set()
    queue = [(start, p0)]
    code = []
    while queue:
        i, p = queue.pop(0)
        if i in visited:
            continue
        visited.add(i)
        entry = []
        for step in range(4):
            pos = (p + direction * step) % 4
            a = state[i][pos]
            if a not in labels:
                labels[a] = len(labels) + 1
                for (j, q) in ports[a]:
                    if j != i and j not in visited:
                        queue.append((j, q))
            entry.append(labels[a])
        code.append((tuple(entry), p % 2))
    code.append(len(visited))
    return tuple(code)


def _search(state, boundary, node_budget, stop_at_zero=True, target=None, slack=0):
    state, moves0 = _greedy_reduce(state, boundary)
    ceiling = len(state) + slack
    seen = {canonical_key(state)}
    heap = [(len(state), 0, state, tuple(moves0))]
    counter = 0
    best = (len(state), tuple(moves0))
    nodes = 0

    keep = frozenset(boundary or ())

    def push(nxt, trace, label, reduce=True):
        nonlocal counter
        if reduce:
            nxt, extra = _greedy_reduce(nxt, boundary)
            label_seq = (label,) + tuple(extra)
        else:
            label_seq = (label,)
        key = canonical_key(nxt)
        if key in seen:
            return
        seen.add(key)
        counter += 1
        heapq.heappush(heap, (len(nxt), counter, nxt, trace + label_seq))

    while heap and nodes < node_budget:
        n, _, cur, trace = heapq.heappop(heap)
        nodes += 1
        if n < best[0]:
            best = (n, trace)
        if stop_at_zero and n == 0:
            return 0, trace, nodes
        if target is not None and n <= target:
            return n, trace, nodes
        for face in _faces(cur, boundary):
            if slack:
                # non-monotone: single moves, no greedy collapse
                if len(face) == 1:
                    push(_r1_result(cur, face, keep), trace, "R1", reduce=False)
                elif len(face) == 2 and _r2_applicable(cur, face):
                    push(_r2_result(cur, face, keep), trace, "R2", reduce=False)
                elif len(face) == 3:
                    for nxt in _r3_results(cur, face):
                        push(nxt, trace, "R3", reduce=False)
                if n + 2 <= ceiling:
                    for nxt in _r2_up_results(cur, face):
                        push(nxt, trace, "R2+", reduce=False)
            elif len(face) == 3:
                for nxt in _r3_results(cur, face):
                    push(nxt, trace, "R3")
    return best[0], best[1], nodes


def simplify(pd: PDCode, node_budget: int = 100_000) -> SimplifyOutcome:
    """Best-first Reidemeister search for an unknot confirmation."""
    if node_budget <= 0:
        raise ValueError("node_budget must be positive")
    final, trace, nodes = _search(pd.crossings, None, node_budget)
    status = "Confirmed" if final == 0 else "Unresolved"
    return SimplifyOutcome(status, final, tuple(trace), nodes)


def min_tangle_crossings(
    t: TanglePD, node_budget: int = 20_000, slack: int = 2, target: int = 0
) -> int:
    """Fewest crossings reachable by interior R-moves on a tangle code.

    With a crossing-count slack the search also explores R2 insertions,
    which lets it find flype-style reductions; it stops early once
    `target` crossings or fewer are reached.
    """
    final, _, _ = _search(
        t.crossings, t.boundary, node_budget,
        stop_at_zero=False, target=target, slack=slack,
    )
    return final
