import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotsieve.laurent import LaurentPoly
from knotsieve.trivializable import (
    DegeneratePairError,
    is_trivializable,
    modular_unit_ideal,
)

polys = st.builds(
    LaurentPoly,
    st.integers(-3, 3),
    st.lists(st.integers(-6, 6), min_size=0, max_size=4).map(tuple),
)


def _check_cert(p, q, cert):
    assert cert.r is not None and cert.s is not None
    assert p * cert.r + q * cert.s == LaurentPoly.one()


def test_three_a_and_two():
    # (3A, 2): 3A*(-A^-1) + 2*2 = 1, so trivializable
    p = LaurentPoly.term(3, 1)
    q = LaurentPoly.from_int(2)
    ok, cert = is_trivializable(p, q)
    assert ok
    _check_cert(p, q, cert)


def test_four_a_and_two():
    # (4A, 2): every integer combination has even coefficients
    ok, cert = is_trivializable(LaurentPoly.term(4, 1), LaurentPoly.from_int(2))
    assert not ok
    assert cert.obstruction_prime == 2


def test_common_polynomial_factor():
    # both divisible by A + 1
    f = LaurentPoly(0, (1, 1))
    ok, cert = is_trivializable(f, f * f)
    assert not ok
    assert cert.obstruction_gcd is not None


def test_unit_monomial_shortcut():
    p = LaurentPoly.term(-1, 7)
    q = LaurentPoly(0, (5, -3, 2))
    ok, cert = is_trivializable(p, q)
    assert ok
    _check_cert(p, q, cert)


def test_degenerate_pair():
    with pytest.raises(DegeneratePairError):
        is_trivializable(LaurentPoly.zero(), LaurentPoly.zero())


def test_modular_unit_ideal():
    assert modular_unit_ideal(LaurentPoly.term(3, 1), LaurentPoly.from_int(2), 5)
    assert not modular_unit_ideal(LaurentPoly.term(4, 1), LaurentPoly.from_int(2), 2)


@settings(deadline=None, max_examples=60)
@given(polys, polys)
def test_every_positive_answer_carries_a_verified_certificate(p, q):
    if p.is_zero() and q.is_zero():
        return
    ok, cert = is_trivializable(p, q)
    if ok:
        _check_cert(p, q, cert)
    else:
        assert cert.obstruction_gcd is not None or cert.obstruction_prime is not None


@settings(deadline=None, max_examples=40)
@given(polys, polys, st.integers(-3, 3), st.integers(-3, 3))
def test_invariant_under_unit_scaling(p, q, j, k):
    if p.is_zero() and q.is_zero():
        return
    ok1, _ = is_trivializable(p, q)
    ok2, _ = is_trivializable(p.shift(j).scale(-1), q.shift(k))
    assert ok1 == ok2
