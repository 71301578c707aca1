"""Algebraic tangle expressions, normal forms, and enumeration.

Tangles are built from integral twists by addition and quarter-turn
rotation.  Internally a tangle is kept as an alternating spine tree:

    form := ("H", children) | ("V", children)

where children of an H spine are ints (horizontal twists) or V nodes,
and children of a V spine are ints (vertical twists) or H nodes.  A
single crossing is both a horizontal and a vertical 1-twist, so |1|
leaves are always written as bare ints taking the spine's own axis and
merge with their integral neighbors.

Equivalence for counting is the dihedral symmetry of the square plus
mirror, together with the crossing-slide (flype) rewrites; the canonical
key of a class is the lexicographically least serialization over the
closure under those moves.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bracket import (
    CONN_H,
    CONN_V,
    CONN_X,
    BracketPair,
    bracket_add,
    bracket_rotate90,
    twist_bracket,
    twist_conn,
)
from .laurent import LaurentPoly


# ---------------------------------------------------------------------
# expression grammar:  expr := signed-int | (e + e) | (e * e) | r(e)
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class Twist:
    n: int
    vertical: bool = False

    def __post_init__(self):
        if self.n == 0:
            raise ValueError("zero twist")


@dataclass(frozen=True)
class Add:
    left: "TangleExpr"
    right: "TangleExpr"


@dataclass(frozen=True)
class Mul:
    left: "TangleExpr"
    right: "TangleExpr"


@dataclass(frozen=True)
class Rot:
    child: "TangleExpr"


TangleExpr = Twist | Add | Mul | Rot


def parse_expr(text: str) -> TangleExpr:
    """Parse the tangle text grammar; a bare integer is a horizontal twist."""
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def parse() -> TangleExpr:
        nonlocal pos
        skip_ws()
        if pos >= len(text):
            raise ValueError("unexpected end of tangle expression")
        ch = text[pos]
        if ch == "r":
            if not text.startswith("r(", pos):
                raise ValueError(f"expected 'r(' at {pos}")
            pos += 2
            inner = parse()
            skip_ws()
            if pos >= len(text) or text[pos] != ")":
                raise ValueError(f"expected ')' at {pos}")
            pos += 1
            return Rot(inner)
        if ch == "(":
            pos += 1
            left = parse()
            skip_ws()
            op = text[pos]
            if op not in "+*":
                raise ValueError(f"expected '+' or '*' at {pos}")
            pos += 1
            right = parse()
            skip_ws()
            if pos >= len(text) or text[pos] != ")":
                raise ValueError(f"expected ')' at {pos}")
            pos += 1
            return Add(left, right) if op == "+" else Mul(left, right)
        # signed integer
        start = pos
        if ch in "+-":
            pos += 1
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start or not text[start:pos].lstrip("+-"):
            raise ValueError(f"expected integer at {start}")
        return Twist(int(text[start:pos]))

    result = parse()
    skip_ws()
    if pos != len(text):
        raise ValueError(f"trailing input at {pos}: {text[pos:]!r}")
    return result


def expr_to_text(e: TangleExpr) -> str:
    if isinstance(e, Twist):
        if e.vertical:
            return f"r({-e.n})"
        return str(e.n)
    if isinstance(e, Add):
        return f"({expr_to_text(e.left)} + {expr_to_text(e.right)})"
    if isinstance(e, Mul):
        return f"({expr_to_text(e.left)} * {expr_to_text(e.right)})"
    return f"r({expr_to_text(e.child)})"


def expr_crossings(e: TangleExpr) -> int:
    if isinstance(e, Twist):
        return abs(e.n)
    if isinstance(e, (Add, Mul)):
        return expr_crossings(e.left) + expr_crossings(e.right)
    return expr_crossings(e.child)


def expr_bracket(e: TangleExpr) -> BracketPair:
    if isinstance(e, Twist):
        return twist_bracket(e.n, e.vertical)
    if isinstance(e, Add):
        return bracket_add(expr_bracket(e.left), expr_bracket(e.right))
    if isinstance(e, Mul):
        t1 = expr_bracket(e.left)
        return bracket_add(BracketPair(t1.q, t1.p), expr_bracket(e.right))
    return bracket_rotate90(expr_bracket(e.child))


def expr_conn(e: TangleExpr):
    """(connectivity, internal loop count) of an expression."""
    from .bracket import conn_compose

    if isinstance(e, Twist):
        return twist_conn(e.n, e.vertical), 0
    if isinstance(e, Add):
        c1, l1 = expr_conn(e.left)
        c2, l2 = expr_conn(e.right)
        c, l = conn_compose("add", c1, c2)
        return c, l + l1 + l2
    if isinstance(e, Mul):
        c1, l1 = expr_conn(e.left)
        c2, l2 = expr_conn(e.right)
        c, l = conn_compose("mul", c1, c2)
        return c, l + l1 + l2
    c1, l1 = expr_conn(e.child)
    c, l = conn_compose("rotate90", c1)
    return c, l + l1


# ---------------------------------------------------------------------
# spine normal forms
# ---------------------------------------------------------------------

H, V = "H", "V"


def _other(kind):
    return V if kind == H else H


def _normalize_children(kind, items):
    """Flatten, demote |1| singleton nodes to bare ints, merge adjacent
    ints.  Returns a tuple of children or None when everything cancels.
    Items may be ints or (kind', children) nodes."""
    flat = []
    for it in items:
        if isinstance(it, int):
            flat.append(it)
        else:
            k, ch = it
            if k == kind:
                flat.extend(ch)  # same-kind node: splice its children
            elif len(ch) == 1 and isinstance(ch[0], int) and abs(ch[0]) == 1:
                flat.append(ch[0])  # a lone crossing is axis-free
            else:
                flat.append((k, tuple(ch)))
    out = []
    for it in flat:
        if isinstance(it, int) and out and isinstance(out[-1], int):
            s = out[-1] + it
            out.pop()
            if s != 0:
                out.append(s)
            continue
        if isinstance(it, int) and it == 0:
            continue
        out.append(it)
    # re-merge around removed zeros
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            if isinstance(out[i], int) and isinstance(out[i + 1], int):
                s = out[i] + out[i + 1]
                rest = out[: i] + ([s] if s else []) + out[i + 2:]
                out = rest
                changed = True
                break
    if not out:
        return None
    return tuple(out)


def make_form(kind, items):
    """Build a normalized form of the given spine kind."""
    ch = _normalize_children(kind, items)
    if ch is None:
        return None
    if len(ch) == 1 and not isinstance(ch[0], int):
        return ch[0]
    return (kind, ch)


# -- symmetry moves ---------------------------------------------------

def _map_form(form, kind_map, sign, rev_h, rev_v):
    kind, ch = form
    new_kind = kind_map(kind)
    out = []
    for it in ch:
        if isinstance(it, int):
            out.append(sign * it)
        else:
            out.append(_map_form(it, kind_map, sign, rev_h, rev_v))
    if (kind == H and rev_h) or (kind == V and rev_v):
        out.reverse()
    return (new_kind, tuple(out))


def form_mirror(form):
    """Switch every crossing."""
    return _map_form(form, lambda k: k, -1, False, False)


def form_rotate(form):
    """Quarter-turn: swap axes and switch crossings."""
    return _map_form(form, _other, -1, False, True)


def form_rev(form):
    """Half-turn in the plane of the diagram."""
    return _map_form(form, lambda k: k, 1, True, True)


def form_flip_h(form):
    """Flip about the horizontal in-plane axis (crossings preserved)."""
    return _map_form(form, lambda k: k, 1, False, True)


def form_is_rational(form) -> bool:
    """True if the spine denotes a rational (two-bridge) tangle: at most
    one child of each node is itself a node, recursively."""
    if isinstance(form, int):
        return True
    _, ch = form
    nodes = [c for c in ch if not isinstance(c, int)]
    if len(nodes) > 1:
        return False
    return all(form_is_rational(n) for n in nodes)


def _flype_variants(form):
    """Crossing-slide (flype) rewrites: a single crossing peels off a
    twist and slides across an adjacent sub-tangle, flipping the
    sub-tangle about the spine's axis."""
    kind, ch = form
    flip = form_flip_h if kind == H else (lambda f: form_rev(form_flip_h(f)))
    rational_only = MOVES.get("flype_rational_only")
    results = []

    def emit(children):
        f = make_form(kind, children)
        if f is not None:
            results.append(f)

    for i in range(len(ch) - 1):
        a, b = ch[i], ch[i + 1]
        if isinstance(a, int) and not isinstance(b, int):
            if rational_only and not form_is_rational(b):
                continue
            s = 1 if a > 0 else -1
            rest = ((a - s,) if a != s else ()) + (flip(b), s)
            emit(ch[:i] + rest + ch[i + 2:])
        if isinstance(b, int) and not isinstance(a, int):
            if rational_only and not form_is_rational(a):
                continue
            s = 1 if b > 0 else -1
            rest = (s, flip(a)) + ((b - s,) if b != s else ())
            emit(ch[:i] + rest + ch[i + 2:])
    if MOVES.get("flype_nested"):
        for i, it in enumerate(ch):
            if not isinstance(it, int):
                for sub in _flype_variants(it):
                    emit(ch[:i] + (sub,) + ch[i + 1:])
    return results


#: toggles for the equivalence closure, frozen by count calibration
MOVES = {
    "mirror": True,
    "rotate": True,
    "rev": True,
    "flip": True,
    "flype": True,
    "flype_nested": True,
    "flype_rational_only": False,
}


def orbit(form):
    """All forms reachable from ``form`` under the enabled moves."""
    seen = {form}
    frontier = [form]
    while frontier:
        f = frontier.pop()
        nxt = []
        if MOVES["mirror"]:
            nxt.append(form_mirror(f))
        if MOVES["rotate"]:
            nxt.append(form_rotate(f))
        if MOVES["rev"]:
            nxt.append(form_rev(f))
        if MOVES["flip"]:
            nxt.append(form_flip_h(f))
        if MOVES["flype"]:
            nxt.extend(_flype_variants(f))
        for g in nxt:
            if g not in seen:
                seen.add(g)
                frontier.append(g)
    return seen


def serialize_form(form) -> str:
    kind, ch = form
    parts = []
    for it in ch:
        parts.append(str(it) if isinstance(it, int) else serialize_form(it))
    return kind + "[" + ",".join(parts) + "]"


def canonical_form(form):
    return min(orbit(form), key=serialize_form)


def form_key(form) -> bytes:
    return serialize_form(canonical_form(form)).encode()


# -- form evaluation --------------------------------------------------

def _fold_conn(kind, conns):
    """Connectivity and loop count of a spine from its children's conns."""
    from .bracket import conn_compose

    loops = 0
    if kind == H:
        acc = conns[0]
        for c in conns[1:]:
            acc, l = conn_compose("add", acc, c)
            loops += l
        return acc, loops
    # a V spine is the rotated addition of the rotated children
    acc, _ = conn_compose("rotate90", conns[0])
    for c in conns[1:]:
        rc, _ = conn_compose("rotate90", c)
        acc, l = conn_compose("add", acc, rc)
        loops += l
    acc, _ = conn_compose("rotate90", acc)
    return acc, loops


def form_conn(form):
    """(connectivity, loops) of a normal form."""
    kind, ch = form
    conns = []
    for it in ch:
        if isinstance(it, int):
            conns.append(twist_conn(it, vertical=(kind == V)))
        else:
            c, l = form_conn(it)
            if l:
                return c, l
            conns.append(c)
    return _fold_conn(kind, conns)


def form_bracket(form) -> BracketPair:
    kind, ch = form
    brs = []
    for it in ch:
        if isinstance(it, int):
            brs.append(twist_bracket(it, vertical=(kind == V)))
        else:
            brs.append(form_bracket(it))
    if kind == H:
        acc = brs[0]
        for b in brs[1:]:
            acc = bracket_add(acc, b)
        return acc
    acc = bracket_rotate90(brs[0])
    for b in brs[1:]:
        acc = bracket_add(acc, bracket_rotate90(b))
    return bracket_rotate90(acc)


def form_crossings(form) -> int:
    kind, ch = form
    total = 0
    for it in ch:
        total += abs(it) if isinstance(it, int) else form_crossings(it)
    return total


def form_to_expr(form) -> TangleExpr:
    """Expression in the + / r() grammar evaluating to this form."""
    kind, ch = form

    def child_expr(it, child_vertical):
        if isinstance(it, int):
            return Twist(it, vertical=child_vertical)
        return form_to_expr(it)

    if kind == H:
        acc = child_expr(ch[0], False)
        for it in ch[1:]:
            acc = Add(acc, child_expr(it, False))
        return acc
    # V spine: rotate, add the rotated children, rotate back
    acc = Rot(child_expr(ch[0], True))
    for it in ch[1:]:
        acc = Add(acc, Rot(child_expr(it, True)))
    return Rot(acc)


def expr_to_form(e: TangleExpr):
    """Normal form of an expression (flatten, merge, push rotations down)."""
    if isinstance(e, Twist):
        if abs(e.n) == 1:
            return (H, (e.n,))
        return (V, (e.n,)) if e.vertical else (H, (e.n,))
    if isinstance(e, Rot):
        f = expr_to_form(e.child)
        return form_rotate(f)
    if isinstance(e, Mul):
        left = form_rotate(expr_to_form(e.left))
        right = expr_to_form(e.right)
    else:
        left = expr_to_form(e.left)
        right = expr_to_form(e.right)

    def listify(f):
        kind, ch = f
        if kind == H:
            return ch
        if len(ch) == 1 and isinstance(ch[0], int):
            return (f,) if abs(ch[0]) != 1 else (ch[0],)
        return (f,)

    f = make_form(H, listify(left) + listify(right))
    if f is None:
        raise ValueError("expression reduces to the empty tangle")
    return f


def canonical_key(e: TangleExpr) -> bytes:
    """Canonical byte-string key of the expression's equivalence class."""
    return form_key(expr_to_form(e))


# ---------------------------------------------------------------------
# fraction and reduction keys
# ---------------------------------------------------------------------

#: the infinite slope (the 0-tangle's reciprocal); compares after Fractions
INF = "inf"


def _recip(f):
    if f == INF:
        return Fraction(0)
    if f == 0:
        return INF
    return 1 / f


def form_fraction(form):
    """Conway fraction of the spine; INF for the infinity tangle slope.

    An H spine sums its children's fractions; a V spine sums the
    reciprocals and reciprocates, so a vertical n-twist is 1/n."""
    if isinstance(form, int):
        return Fraction(form)
    kind, ch = form
    if kind == H:
        total = Fraction(0)
        inf = False
        for c in ch:
            f = Fraction(c) if isinstance(c, int) else form_fraction(c)
            if f == INF:
                inf = True
            else:
                total += f
        return INF if inf else total
    total = Fraction(0)
    inf = False
    for c in ch:
        g = Fraction(c) if isinstance(c, int) else _recip(form_fraction(c))
        if g == INF:
            inf = True
        else:
            total += g
    if inf:
        return Fraction(0)
    return _recip(total)


def fraction_orbit_key(f) -> str:
    """Canonical key of the fraction under mirror and quarter-turn,
    i.e. least of {f, -f, 1/f, -1/f}."""
    outs = set()
    for g in (f, (-f if f != INF else INF)):
        outs.add(g)
        ng = _recip(g)
        outs.add(ng)
        outs.add(-ng if ng != INF else INF)
    return min(str(x) for x in outs)


def bracket_orbit_key(br: BracketPair):
    """Canonical key of a bracket pair up to quarter-turn (basis swap),
    mirror (A <-> 1/A) and a joint unit +-A^k (framing change)."""
    cands = []
    for p, q in (
        (br.p, br.q),
        (br.q, br.p),
        (br.p.invert_variable(), br.q.invert_variable()),
        (br.q.invert_variable(), br.p.invert_variable()),
    ):
        if p.is_zero() and q.is_zero():
            cands.append(((), ()))
            continue
        los = [x.lo for x in (p, q) if not x.is_zero()]
        k = -min(los)
        p2, q2 = p.shift(k), q.shift(k)
        lead = next(
            (c for x in (p2, q2) if not x.is_zero() for c in [x.coeffs[0]]), 1
        )
        if lead < 0:
            p2, q2 = p2.scale(-1), q2.scale(-1)
        cands.append(((p2.lo, p2.coeffs), (q2.lo, q2.coeffs)))
    return min(cands)


def reduction_key(form):
    """Invariant pair used by the enumeration's reducibility filter: a
    class whose reduction key already occurred at a smaller crossing
    number denotes the same tangle with removable crossings."""
    br = form_bracket(form)
    return (bracket_orbit_key(br), fraction_orbit_key(form_fraction(form)))


# ---------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class TangleRecord:
    expr: TangleExpr
    crossings: int
    bracket: BracketPair
    conn: str
    key: bytes
    trivializable: bool

    def to_json(self) -> dict:
        return {
            "expr": expr_to_text(self.expr),
            "c": self.crossings,
            "p": self.bracket.p.to_json(),
            "q": self.bracket.q.to_json(),
            "conn": self.conn,
            "triv": self.trivializable,
            "key": self.key.hex(),
        }

    @staticmethod
    def from_json(obj: dict) -> "TangleRecord":
        expr = parse_expr(obj["expr"])
        return TangleRecord(
            expr=expr,
            crossings=obj["c"],
            bracket=BracketPair(
                LaurentPoly.from_json(obj["p"]), LaurentPoly.from_json(obj["q"])
            ),
            conn=obj["conn"],
            key=bytes.fromhex(obj["key"]),
            trivializable=obj["triv"],
        )


def _listify(f):
    """Children of an H spine, or the whole form as a singleton; a lone
    +-1 twist is axis-free and demotes to a bare int."""
    kind, ch = f
    if kind == H:
        return ch
    if len(ch) == 1 and isinstance(ch[0], int):
        return (ch[0],) if abs(ch[0]) == 1 else (f,)
    return (f,)


def _compose_all(c, classes):
    """All loop-free normal forms with c crossings: the pure twist seeds
    plus horizontal sums of orbit members of the smaller kept classes.
    Sums whose junction merges twists with cancellation are rejected;
    the merged form already arose at a lower crossing number."""
    found = {}
    raw_seen = set()

    def consider(form):
        if form is None or form_crossings(form) != c:
            return
        if form in raw_seen:
            return
        raw_seen.add(form)
        conn, loops = form_conn(form)
        if loops:
            return
        canon = canonical_form(form)
        key = serialize_form(canon).encode()
        if key not in found:
            found[key] = (canon, conn)

    consider((H, (c,)))
    consider((H, (-c,)))
    orbits = {
        cc: [list(orbit(f)) for f in classes.get(cc, ())]
        for cc in range(1, c)
    }
    for c1 in range(1, c):
        c2 = c - c1
        if c2 < c1:
            break
        for oa in orbits[c1]:
            for a in oa:
                for ob in orbits[c2]:
                    for b in ob:
                        for left, right in ((a, b), (b, a)):
                            la, lb = _listify(left), _listify(right)
                            if (
                                isinstance(la[-1], int)
                                and isinstance(lb[0], int)
                                and abs(la[-1] + lb[0])
                                < abs(la[-1]) + abs(lb[0])
                            ):
                                continue
                            consider(make_form(H, la + lb))
    return found


def enumerate_tangle_forms(max_crossings: int):
    """Yield (crossings, canonical form, conn) per irreducible class, in
    deterministic order (crossing count, then canonical key).

    A class is dropped as reducible when its reduction key (bracket
    orbit, fraction orbit) already occurred at a smaller crossing
    number: the class is then the same tangle drawn with removable
    crossings.  Every drop for max_crossings <= 8 has been certified by
    an explicit Reidemeister search reducing the diagram."""
    classes = {}
    seen_keys = set()
    for c in range(1, max_crossings + 1):
        found = _compose_all(c, classes)
        kept = []
        new_keys = []
        for key in sorted(found):
            form, conn = found[key]
            rk = reduction_key(form)
            if rk in seen_keys:
                continue
            kept.append((form, conn))
            new_keys.append(rk)
        classes[c] = [form for form, _ in kept]
        seen_keys.update(new_keys)
        for form, conn in kept:
            yield c, form, conn


def enumerate_tangles(max_crossings: int, trivializable_only: bool = False):
    """Stream TangleRecords for every class with <= max_crossings
    crossings; exactly one record per canonical orbit."""
    from .trivializable import is_trivializable

    if max_crossings < 1:
        raise ValueError("max_crossings must be >= 1")
    for c, form, conn in enumerate_tangle_forms(max_crossings):
        br = form_bracket(form)
        triv, _cert = is_trivializable(br.p, br.q)
        if trivializable_only and not triv:
            continue
        yield TangleRecord(
            expr=form_to_expr(form),
            crossings=c,
            bracket=br,
            conn=conn,
            key=form_key(form),
            trivializable=triv,
        )
