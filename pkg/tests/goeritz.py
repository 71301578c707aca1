"""Independent knot-determinant oracle via the Goeritz matrix.

Faces of the diagram are read off the PD rotation system (each
crossing's quad is a counterclockwise cyclic order of its arcs),
checkerboard-colored, and the Goeritz matrix is built over one color
class; the absolute determinant of a principal minor is the knot
determinant.  Used only as a cross-check against the cyclotomic-norm
determinant.
"""

from fractions import Fraction

from knotsieve.pd import PDCode


def _faces(pd: PDCode):
    """Map each dart (crossing, position) to a face id.

    The face of dart d is traversed by jumping to the other occurrence
    of its arc and turning to the next position counterclockwise.
    """
    occ = {}
    for ci, quad in enumerate(pd.crossings):
        for pos, arc in enumerate(quad):
            occ.setdefault(arc, []).append((ci, pos))

    def partner(d):
        ci, pos = d
        arc = pd.crossings[ci][pos]
        a, b = occ[arc]
        return b if a == d else a

    face_of = {}
    nfaces = 0
    for ci in range(pd.n):
        for pos in range(4):
            d0 = (ci, pos)
            if d0 in face_of:
                continue
            d = d0
            while d not in face_of:
                face_of[d] = nfaces
                pc, pp = partner(d)
                d = (pc, (pp + 1) % 4)
            nfaces += 1
    return face_of, nfaces


def _checkerboard(pd: PDCode, face_of, nfaces):
    """2-color faces so that faces at opposite corners of a crossing
    share a color; returns the color list."""
    color = [None] * nfaces
    color[face_of[(0, 0)]] = 0
    pending = True
    while pending:
        pending = False
        for ci in range(pd.n):
            fs = [face_of[(ci, pos)] for pos in range(4)]
            cols = [color[f] for f in fs]
            for pos in range(4):
                want = None
                if cols[(pos + 2) % 4] is not None:
                    want = cols[(pos + 2) % 4]
                elif cols[(pos + 1) % 4] is not None:
                    want = 1 - cols[(pos + 1) % 4]
                elif cols[(pos + 3) % 4] is not None:
                    want = 1 - cols[(pos + 3) % 4]
                if want is None:
                    continue
                if cols[pos] is None:
                    color[fs[pos]] = want
                    cols[pos] = want
                    pending = True
                elif cols[pos] != want:
                    raise ValueError("diagram faces are not 2-colorable")
    assert all(c is not None for c in color)
    return color


def _det(matrix):
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for i in range(n):
        pivot = next((r for r in range(i, n) if m[r][i] != 0), None)
        if pivot is None:
            return 0
        if pivot != i:
            m[i], m[pivot] = m[pivot], m[i]
            det = -det
        det *= m[i][i]
        inv = 1 / m[i][i]
        for r in range(i + 1, n):
            f = m[r][i] * inv
            if f:
                for c in range(i, n):
                    m[r][c] -= f * m[i][c]
    assert det.denominator == 1
    return int(det)


def goeritz_determinant(pd: PDCode) -> int:
    """|H1| of the double branched cover: the knot determinant."""
    if pd.n == 0:
        return 1
    face_of, nfaces = _faces(pd)
    color = _checkerboard(pd, face_of, nfaces)
    white = sorted(f for f in range(nfaces) if color[f] == 0)
    index = {f: i for i, f in enumerate(white)}
    k = len(white)
    g = [[0] * k for _ in range(k)]
    for ci in range(pd.n):
        fs = [face_of[(ci, pos)] for pos in range(4)]
        if color[fs[0]] == 0:
            wa, wb = fs[0], fs[2]
            eta = 1
        else:
            wa, wb = fs[1], fs[3]
            eta = -1
        i, j = index[wa], index[wb]
        if i == j:
            continue
        g[i][j] -= eta
        g[j][i] -= eta
        g[i][i] += eta
        g[j][j] += eta
    if k <= 1:
        return 1
    minor = [row[1:] for row in g[1:]]
    return abs(_det(minor))
