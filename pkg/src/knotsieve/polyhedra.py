"""Conway polyhedra: 4-regular simple planar graphs without thin cuts.

Generation is exhaustive: an orderly row-by-row search produces every
connected 4-regular simple graph up to isomorphism (one canonical
labeling per class), a planarity prune keeps the tree small, and the
structural filters (no 2-edge-cut, bigon-free embedding) select the
polyhedra.  Embeddings are planar rotation systems over darts; the
canonical embedding code is the least breadth-first dart-relabeling
trace over all starting darts and both global orientations.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx


# ---------------------------------------------------------------------
# orderly generation of connected 4-regular simple graphs
# ---------------------------------------------------------------------

def _back_string(adj, inv, p):
    """Back-adjacency of inv[p] to inv[0..p-1] as an integer (earlier
    labels in higher bits)."""
    s = 0
    r = adj[inv[p]]
    for q in range(p):
        s = (s << 1) | ((r >> inv[q]) & 1)
    return s


def _is_canonical(adj, m):
    """True iff the identity labeling of the partial graph on vertices
    0..m is its lexicographically maximal back-adjacency sequence.
    Back-strings reference earlier labels only, so the relabeling
    search compares position by position with early cutoff."""
    ident = list(range(m + 1))
    target = [_back_string(adj, ident, p) for p in range(m + 1)]

    def search(inv, used, pos):
        # returns True if some completion strictly beats the identity
        if pos > m:
            return False
        for u in range(m + 1):
            if (used >> u) & 1:
                continue
            inv[pos] = u
            b = _back_string(adj, inv, pos)
            if b > target[pos]:
                return True
            if b == target[pos]:
                if search(inv, used | (1 << u), pos + 1):
                    return True
        return False

    return not search([0] * (m + 1), 0, 0)


def quartic_graphs(n: int, planar_only: bool = True):
    """All connected 4-regular simple graphs on n vertices, one per
    isomorphism class, as tuples of neighbor bitmasks.

    Orderly generation: vertices are added one at a time with their
    back-edges; a partial graph is extended only when its labeling is
    the canonical (lex-max) one, so exactly one representative of each
    class completes.  With planar_only, non-planar partials are pruned
    (safe: planarity is subgraph-monotone)."""
    if n < 5:
        return []
    adj = [0] * n
    deg = [0] * n
    out = []

    def planar_ok(m):
        g = nx.Graph()
        g.add_nodes_from(range(m + 1))
        for i in range(m + 1):
            for j in range(i + 1, m + 1):
                if (adj[i] >> j) & 1:
                    g.add_edge(i, j)
        return nx.check_planarity(g, counterexample=False)[0]

    def feasible(m):
        # every deficit must be fillable by the remaining vertices
        future = n - 1 - m
        total = 0
        for u in range(m + 1):
            d = 4 - deg[u]
            if d > future:
                return False
            total += d
        return total <= 4 * future

    def add_vertex(m):
        if m == n:
            out.append(tuple(adj))
            return
        # in a canonical labeling every later vertex has a back-edge
        import itertools

        avail = [u for u in range(m) if deg[u] < 4]
        for d in range(min(4, len(avail)), 0, -1):
            for combo in itertools.combinations(avail, d):
                for u in combo:
                    adj[u] |= 1 << m
                    adj[m] |= 1 << u
                    deg[u] += 1
                deg[m] = d
                if (
                    feasible(m)
                    and _is_canonical(adj, m)
                    and (not planar_only or planar_ok(m))
                ):
                    add_vertex(m + 1)
                for u in combo:
                    adj[u] &= ~(1 << m)
                    adj[m] &= ~(1 << u)
                    deg[u] -= 1
                deg[m] = 0

    add_vertex(1)
    return [rows for rows in out if all(bin(r).count("1") == 4 for r in rows)]


# ---------------------------------------------------------------------
# planar embeddings over darts
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class PlanarEmbedding:
    vertex_count: int
    rotation: tuple  # per-vertex 4-tuple of darts, cyclic order
    dart_pairing: tuple  # dart -> reversed dart

    def dart_vertex(self, d: int) -> int:
        return d // 4

    def validate(self) -> None:
        v = self.vertex_count
        if len(self.rotation) != v:
            raise ValueError("rotation size mismatch")
        darts = [d for r in self.rotation for d in r]
        if sorted(darts) != list(range(4 * v)):
            raise ValueError("darts must be 0..4v-1, each once")
        p = self.dart_pairing
        if len(p) != 4 * v or any(p[p[d]] != d or p[d] == d for d in range(4 * v)):
            raise ValueError("pairing must be a fixed-point-free involution")
        f = len(faces(self))
        if v - 2 * v + f != 2:
            raise ValueError("embedding is not spherical")


@dataclass(frozen=True)
class PolyhedronRecord:
    embedding: PlanarEmbedding
    canonical_code: bytes
    vertex_count: int

    def to_json(self) -> dict:
        e = self.embedding
        return {
            "v": self.vertex_count,
            "rotation": [list(r) for r in e.rotation],
            "pairing": list(e.dart_pairing),
            "code": self.canonical_code.hex(),
        }

    @staticmethod
    def from_json(obj: dict) -> "PolyhedronRecord":
        emb = PlanarEmbedding(
            vertex_count=obj["v"],
            rotation=tuple(tuple(r) for r in obj["rotation"]),
            dart_pairing=tuple(obj["pairing"]),
        )
        return PolyhedronRecord(
            embedding=emb,
            canonical_code=bytes.fromhex(obj["code"]),
            vertex_count=obj["v"],
        )


def _rot_next(e: PlanarEmbedding, d: int, step: int = 1) -> int:
    r = e.rotation[d // 4]
    i = r.index(d)
    return r[(i + step) % 4]


def faces(e: PlanarEmbedding) -> list:
    """Face sizes from the next-dart-after-reverse traversal."""
    seen = set()
    sizes = []
    for d0 in range(4 * e.vertex_count):
        if d0 in seen:
            continue
        d = d0
        size = 0
        while d not in seen:
            seen.add(d)
            d = _rot_next(e, e.dart_pairing[d])
            size += 1
        sizes.append(size)
    return sizes


def embedding_graph(e: PlanarEmbedding) -> nx.MultiGraph:
    g = nx.MultiGraph()
    g.add_nodes_from(range(e.vertex_count))
    for d in range(4 * e.vertex_count):
        if d < e.dart_pairing[d]:
            g.add_edge(d // 4, e.dart_pairing[d] // 4)
    return g


def has_two_edge_cut(e: PlanarEmbedding) -> bool:
    """True iff some pair of edges disconnects the graph (thin)."""
    g = nx.Graph(embedding_graph(e))
    return nx.edge_connectivity(g) < 3


def canonical_embedding_code(e: PlanarEmbedding) -> bytes:
    """Least BFS dart-relabeling trace over all starting darts and both
    orientations; invariant under sphere homeomorphism and reflection."""
    v = e.vertex_count
    best = None
    for d0 in range(4 * v):
        for step in (1, -1):
            label = {}
            order = []
            trace = []
            queue = [d0]
            while queue:
                d = queue.pop(0)
                vert = d // 4
                if vert in label:
                    continue
                label[vert] = len(order)
                order.append(d)
                cur = d
                for _ in range(4):
                    rd = e.dart_pairing[cur]
                    nv = rd // 4
                    if nv not in label:
                        queue.append(rd)
                    cur = _rot_next(e, cur, step)
            for d in order:
                cur = d
                row = []
                for _ in range(4):
                    nv = e.dart_pairing[cur] // 4
                    row.append(label.get(nv, 255))
                    cur = _rot_next(e, cur, step)
                trace.extend(row)
            code = bytes(trace)
            if best is None or code < best:
                best = code
    return best


def embed_rows(rows) -> PlanarEmbedding:
    """Planar rotation system for a 4-regular graph given as neighbor
    bitmasks; raises if the graph is not planar."""
    n = len(rows)
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for i, r in enumerate(rows):
        j = 0
        while r:
            if r & 1:
                g.add_edge(i, j)
            r >>= 1
            j += 1
    ok, emb = nx.check_planarity(g)
    if not ok:
        raise ValueError("graph is not planar")
    dart_of = {}
    rotation = []
    for vtx in range(n):
        nbrs = list(emb.neighbors_cw_order(vtx))
        if len(nbrs) != 4:
            raise ValueError("graph is not 4-regular")
        base = 4 * vtx
        rotation.append(tuple(range(base, base + 4)))
        for k, u in enumerate(nbrs):
            dart_of[(vtx, u)] = base + k
    pairing = [None] * (4 * n)
    for (a, b), d in dart_of.items():
        pairing[d] = dart_of[(b, a)]
    return PlanarEmbedding(n, tuple(rotation), tuple(pairing))


def enumerate_polyhedra(max_vertices: int):
    """Stream PolyhedronRecords (one per graph class) for every vertex
    count 6..max_vertices, ordered by (vertex_count, canonical_code)."""
    for v in range(6, max_vertices + 1):
        batch = []
        for rows in quartic_graphs(v):
            emb = embed_rows(rows)
            if any(s == 2 for s in faces(emb)):
                continue
            if has_two_edge_cut(emb):
                continue
            batch.append(
                PolyhedronRecord(
                    embedding=emb,
                    canonical_code=canonical_embedding_code(emb),
                    vertex_count=v,
                )
            )
        batch.sort(key=lambda r: r.canonical_code)
        yield from batch
