"""Deciding whether a bracket pair generates the unit ideal of Z[A, A^-1].

The test: a rational-coefficient gcd that is not a monomial is a hard
obstruction; otherwise clear denominators in a rational Bezout identity
to get p*r' + q*s' = N over the integers, and check the pair modulo each
prime dividing N.  If every modular gcd is a monomial, 1 lies in the
ideal and an exact certificate is reconstructed (Hensel-lifted modular
inverses glued by CRT against the integer relation) and verified by
multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy
from sympy import GF, QQ, ZZ, Poly, symbols

from .laurent import LaurentPoly

_A = symbols("A")


class DegeneratePairError(ValueError):
    """Raised for the zero bracket pair, which generates the zero ideal."""


@dataclass(frozen=True)
class TrivializabilityCertificate:
    r: LaurentPoly | None = None
    s: LaurentPoly | None = None
    obstruction_gcd: LaurentPoly | None = None
    obstruction_prime: int | None = None


def _to_poly(p: LaurentPoly, dom):
    """Shift A^lo out (a unit, so the ideal is unchanged) and build a
    sympy Poly."""
    return Poly(list(reversed(p.coeffs)), _A, domain=dom)


def _from_poly(poly, shift: int = 0) -> LaurentPoly:
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    return LaurentPoly(shift, coeffs)


def _from_rat_poly(poly):
    """(LaurentPoly numerator, integer denominator) of a QQ Poly."""
    coeffs = [Fraction(c.numerator, c.denominator) for c in reversed(poly.all_coeffs())]
    den = 1
    for c in coeffs:
        den = den * c.denominator // sympy.gcd(den, c.denominator)
    return LaurentPoly(0, [int(c * den) for c in coeffs]), int(den)


def modular_unit_ideal(p: LaurentPoly, q: LaurentPoly, ell: int) -> bool:
    """True iff p and q generate the unit ideal of F_ell[A, A^-1], i.e.
    their gcd over the field with ell elements is a monomial."""
    dom = GF(ell, symmetric=False)
    pp = _to_poly(p, dom)
    qp = _to_poly(q, dom)
    if pp.is_zero and qp.is_zero:
        return False
    g = pp.gcd(qp)
    return len(g.terms()) == 1


def _to_poly_int(poly_gf):
    return Poly([int(c) for c in poly_gf.all_coeffs()], _A, domain=ZZ)


def is_trivializable(p: LaurentPoly, q: LaurentPoly):
    """Decide whether (p, q) generates the unit ideal of Z[A, A^-1].

    Returns (bool, TrivializabilityCertificate)."""
    if p.is_zero() and q.is_zero():
        raise DegeneratePairError("the zero pair generates the zero ideal")
    if p.is_unit_monomial() or q.is_unit_monomial():
        if p.is_unit_monomial():
            sign = p.coeffs[0]
            r = LaurentPoly.term(sign, -p.lo)
            return True, TrivializabilityCertificate(r=r, s=LaurentPoly.zero())
        sign = q.coeffs[0]
        s = LaurentPoly.term(sign, -q.lo)
        return True, TrivializabilityCertificate(r=LaurentPoly.zero(), s=s)
    if p.is_zero() or q.is_zero():
        nz = q if p.is_zero() else p
        return False, TrivializabilityCertificate(obstruction_gcd=nz)

    pq_ = _to_poly(p, QQ)
    qq_ = _to_poly(q, QQ)
    g = pq_.gcd(qq_)
    if len(g.terms()) != 1:
        gl, _ = _from_rat_poly(g)
        return False, TrivializabilityCertificate(obstruction_gcd=gl)

    # rational Bezout: p*u + q*v = g; divide by the monomial unit g
    u, v, g2 = pq_.gcdex(qq_)
    ((k,), c) = g2.terms()[0]
    cq = sympy.Rational(c)
    u = (u / cq).as_poly(_A, domain=QQ)
    v = (v / cq).as_poly(_A, domain=QQ)
    # now p*u + q*v = A^k; clear denominators
    ul, du = _from_rat_poly(u)
    vl, dv = _from_rat_poly(v)
    den = du * dv // int(sympy.igcd(du, dv))
    rp = ul.scale(den // du).shift(-k - p.lo)
    sp = vl.scale(den // dv).shift(-k - q.lo)
    # p*rp + q*sp == den exactly (Laurent shifts fold the unit A^k and the
    # storage shifts back in)
    check = p * rp + q * sp
    assert check == LaurentPoly.from_int(den), "Bezout bookkeeping failed"
    n = den
    if n == 1:
        _verify(p, q, rp, sp)
        return True, TrivializabilityCertificate(r=rp, s=sp)

    factors = sympy.factorint(n)
    for ell in sorted(factors):
        if not modular_unit_ideal(p, q, ell):
            return False, TrivializabilityCertificate(obstruction_prime=int(ell))

    # unit ideal; reconstruct an exact certificate
    r, s = _reconstruct(p, q, rp, sp, n, factors)
    _verify(p, q, r, s)
    return True, TrivializabilityCertificate(r=r, s=s)


def _verify(p, q, r, s):
    if p * r + q * s != LaurentPoly.one():
        raise AssertionError("certificate identity p*r + q*s = 1 failed")


def _bezout_mod_prime_power(p: LaurentPoly, q: LaurentPoly, ell: int, exp: int):
    """(u, v) LaurentPolys with p*u + q*v == 1 (mod ell**exp)."""
    dom = GF(ell, symmetric=False)
    pp = _to_poly(p, dom)
    qp = _to_poly(q, dom)
    if pp.is_zero or qp.is_zero:
        # the surviving side's residue is the (monomial) gcd itself
        side, poly, lo = (
            ("q", qp, q.lo) if pp.is_zero else ("p", pp, p.lo)
        )
        ((k,), c) = poly.terms()[0]
        inv = LaurentPoly.term(pow(int(c), -1, ell), -k - lo)
        ul, vl = (
            (LaurentPoly.zero(), inv) if side == "q" else (inv, LaurentPoly.zero())
        )
    else:
        u, v, g = pp.gcdex(qp)
        ((k,), c) = g.terms()[0]
        cinv = pow(int(c), -1, ell)
        # p*u + q*v = c*A^(k+shift) in Laurent terms; fold the unit back
        ul = _from_poly(_to_poly_int(u)).scale(cinv).shift(-k - p.lo)
        vl = _from_poly(_to_poly_int(v)).scale(cinv).shift(-k - q.lo)
    mod = ell
    target = ell**exp
    while mod < target:
        mod = min(mod * mod, target)
        # Newton: e = p*u + q*v - 1;  (u,v) <- (u,v)*(1 - e)  mod ell^2k
        e = p * ul + q * vl - LaurentPoly.one()
        one_minus_e = LaurentPoly.one() - e
        ul = _reduce_mod(ul * one_minus_e, mod)
        vl = _reduce_mod(vl * one_minus_e, mod)
    return ul, vl


def _reduce_mod(p: LaurentPoly, m: int) -> LaurentPoly:
    return LaurentPoly(p.lo, [c % m for c in p.coeffs])


def _reconstruct(p, q, rp, sp, n, factors):
    """Exact certificate from p*rp + q*sp = n and per-prime Bezout data."""
    # CRT-combine per-prime-power inverses coefficientwise
    residues = []
    moduli = []
    for ell, exp in factors.items():
        u, v = _bezout_mod_prime_power(p, q, int(ell), exp)
        residues.append((u, v))
        moduli.append(int(ell) ** exp)
    u = _crt_polys([r[0] for r in residues], moduli)
    v = _crt_polys([r[1] for r in residues], moduli)
    # p*u + q*v = 1 + n*h for an integral Laurent h
    excess = p * u + q * v - LaurentPoly.one()
    h = LaurentPoly(excess.lo, [c // n for c in excess.coeffs])
    assert h.scale(n) == excess, "CRT residue not divisible by n"
    r = u - rp * h
    s = v - sp * h
    return r, s


def _crt_polys(polys, moduli):
    from sympy.ntheory.modular import crt

    if len(polys) == 1:
        return _reduce_mod(polys[0], moduli[0])
    lo = min(p.lo for p in polys if not p.is_zero()) if any(
        not p.is_zero() for p in polys
    ) else 0
    hi = max(p.hi for p in polys if not p.is_zero()) if any(
        not p.is_zero() for p in polys
    ) else 0
    coeffs = []
    for e in range(lo, hi + 1):
        vals = [p.coeff(e) for p in polys]
        c, _ = crt(moduli, vals)
        coeffs.append(int(c))
    return LaurentPoly(lo, coeffs)
