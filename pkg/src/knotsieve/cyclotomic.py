"""Arithmetic in Z[zeta], zeta a primitive 8th root of unity.

Evaluating a bracket at A = zeta realizes t = A^-4 = -1, which is all the
determinant sieve needs; the ring is tiny (4 integer components) compared
with full Laurent polynomials, so the cheap sieve runs here.
"""

from __future__ import annotations

from .laurent import LaurentPoly


class Cyclotomic8:
    """c0 + c1*z + c2*z^2 + c3*z^3 with z^4 = -1 (hence z^8 = 1)."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        object.__setattr__(self, "c", (c0, c1, c2, c3))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic8 is immutable")

    @staticmethod
    def zeta_power(k: int) -> "Cyclotomic8":
        """zeta**k for any integer k."""
        k %= 8
        sign = 1
        if k >= 4:
            sign = -1
            k -= 4
        c = [0, 0, 0, 0]
        c[k] = sign
        return Cyclotomic8(*c)

    def __add__(self, other: "Cyclotomic8") -> "Cyclotomic8":
        a, b = self.c, other.c
        return Cyclotomic8(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])

    def __sub__(self, other: "Cyclotomic8") -> "Cyclotomic8":
        a, b = self.c, other.c
        return Cyclotomic8(a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])

    def __neg__(self) -> "Cyclotomic8":
        a = self.c
        return Cyclotomic8(-a[0], -a[1], -a[2], -a[3])

    def __mul__(self, other: "Cyclotomic8") -> "Cyclotomic8":
        a, b = self.c, other.c
        # convolution reduced by z^4 = -1
        out = [0] * 7
        for i in range(4):
            ai = a[i]
            if ai:
                for j in range(4):
                    out[i + j] += ai * b[j]
        return Cyclotomic8(
            out[0] - out[4], out[1] - out[5], out[2] - out[6], out[3]
        )

    def conjugate(self) -> "Cyclotomic8":
        """The ring automorphism zeta -> -zeta^3 (complex conjugation)."""
        c0, c1, c2, c3 = self.c
        # zeta^k -> (-zeta^3)^k: k=1 -> -z^3, k=2 -> z^6 = -z^2, k=3 -> -z^9 = -z
        return Cyclotomic8(c0, -c3, -c2, -c1)

    def is_zero(self) -> bool:
        return self.c == (0, 0, 0, 0)

    def rational_part(self):
        """Return the integer n if self == n, else None."""
        c0, c1, c2, c3 = self.c
        if c1 == 0 and c2 == 0 and c3 == 0:
            return c0
        return None

    def norm_squared(self) -> int:
        """self * conjugate(self), which must be a rational integer."""
        prod = self * self.conjugate()
        n = prod.rational_part()
        if n is None:
            raise ValueError(f"non-scalar norm: {prod!r}")
        return n

    def __eq__(self, other) -> bool:
        return isinstance(other, Cyclotomic8) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Cyclotomic8{self.c}"


ZETA = Cyclotomic8(0, 1, 0, 0)
CYC_ZERO = Cyclotomic8()
CYC_ONE = Cyclotomic8(1)


def eval_zeta8(p: LaurentPoly) -> Cyclotomic8:
    """Ring homomorphism Z[A,A^-1] -> Z[zeta], A -> zeta."""
    acc = [0, 0, 0, 0]
    for i, coeff in enumerate(p.coeffs):
        if coeff == 0:
            continue
        k = (p.lo + i) % 8
        if k >= 4:
            acc[k - 4] -= coeff
        else:
            acc[k] += coeff
    return Cyclotomic8(*acc)
