"""Exact integer Laurent polynomials in the bracket variable A.

This is the scalar ring for everything downstream: bracket pairs, state
sums, trivializability certificates.  Coefficients are Python ints, so
nothing ever wraps; storage is dense over the exponent span with an
explicit minimum exponent, which suits bracket polynomials (short and
dense within their span).
"""

from __future__ import annotations


class LaurentPoly:
    """An element of Z[A, A^-1].

    ``lo`` is the minimum exponent, ``coeffs[i]`` the coefficient of
    ``A**(lo + i)``.  Normalized: a nonzero polynomial has nonzero first
    and last coefficients; the zero polynomial is ``lo == 0, coeffs == ()``.
    """

    __slots__ = ("lo", "coeffs")

    def __init__(self, lo: int, coeffs):
        coeffs = tuple(coeffs)
        # strip zeros at both ends so every value has one representation
        start = 0
        end = len(coeffs)
        while start < end and coeffs[start] == 0:
            start += 1
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        if start == end:
            object.__setattr__(self, "lo", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "lo", lo + start)
            object.__setattr__(self, "coeffs", coeffs[start:end])

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return _ZERO

    @staticmethod
    def one() -> "LaurentPoly":
        return _ONE

    @staticmethod
    def term(coeff: int, exp: int = 0) -> "LaurentPoly":
        """coeff * A**exp"""
        return LaurentPoly(exp, (coeff,))

    @staticmethod
    def from_int(n: int) -> "LaurentPoly":
        return LaurentPoly(0, (n,))

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def hi(self) -> int:
        """Maximum exponent (meaningless for the zero polynomial)."""
        return self.lo + len(self.coeffs) - 1

    def coeff(self, exp: int) -> int:
        i = exp - self.lo
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def is_unit_monomial(self) -> bool:
        """True iff self == +-A**k for some k."""
        return len(self.coeffs) == 1 and self.coeffs[0] in (1, -1)

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.lo - lo + i] = c
        for i, c in enumerate(other.coeffs):
            out[other.lo - lo + i] += c
        return LaurentPoly(lo, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.lo, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.coeffs or not other.coeffs:
            return _ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(self.lo + other.lo, out)

    def scale(self, n: int) -> "LaurentPoly":
        if n == 0:
            return _ZERO
        return LaurentPoly(self.lo, tuple(n * c for c in self.coeffs))

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by A**k."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.lo + k, self.coeffs)

    def invert_variable(self) -> "LaurentPoly":
        """Substitute A -> A^-1 (the mirror-image bracket)."""
        if not self.coeffs:
            return self
        return LaurentPoly(-self.hi, tuple(reversed(self.coeffs)))

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.lo == other.lo
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.lo, self.coeffs))

    # -- serialization ------------------------------------------------

    def to_json(self) -> dict:
        return {"lo": self.lo, "coeffs": list(self.coeffs)}

    @staticmethod
    def from_json(obj: dict) -> "LaurentPoly":
        lo = obj["lo"]
        coeffs = obj["coeffs"]
        p = LaurentPoly(lo, coeffs)
        if list(p.coeffs) != list(coeffs) or (coeffs and p.lo != lo):
            raise ValueError("non-normalized LaurentPoly serialization")
        return p

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.lo + i
            if e == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                sgn = "-" if c < 0 else ""
                term = f"{sgn}{mag}A^{e}" if e != 1 else f"{sgn}{mag}A"
            parts.append(term)
        s = parts[0]
        for t in parts[1:]:
            s += f" + {t}" if not t.startswith("-") else f" - {t[1:]}"
        return s


_ZERO = LaurentPoly(0, ())
_ONE = LaurentPoly(0, (1,))

#: The Kauffman value of a free loop, -A^2 - A^-2.  Both signs negative:
#: this is the unique value making the bracket invariant under a
#: Reidemeister-2 move, pinned by a regression test.
DELTA = LaurentPoly(-2, (-1, 0, 0, 0, -1))

A = LaurentPoly.term(1, 1)
A_INV = LaurentPoly.term(1, -1)
ONE = _ONE
ZERO = _ZERO
