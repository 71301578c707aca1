from hypothesis import given
from hypothesis import strategies as st

from knotsieve.laurent import DELTA, LaurentPoly

polys = st.builds(
    LaurentPoly,
    st.integers(-6, 6),
    st.lists(st.integers(-9, 9), min_size=0, max_size=6).map(tuple),
)


def test_basic_arithmetic():
    a = LaurentPoly.term(1, 1)
    assert a * a == LaurentPoly.term(1, 2)
    assert a + (-a) == LaurentPoly.zero()
    assert DELTA == LaurentPoly(-2, (-1, 0, 0, 0, -1))
    assert LaurentPoly.from_int(3) + LaurentPoly.from_int(-3) == LaurentPoly.zero()


def test_unit_monomial():
    assert LaurentPoly.term(1, -5).is_unit_monomial()
    assert LaurentPoly.term(-1, 2).is_unit_monomial()
    assert not LaurentPoly.term(2, 0).is_unit_monomial()
    assert not DELTA.is_unit_monomial()
    assert not LaurentPoly.zero().is_unit_monomial()


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, st.integers(-5, 5))
def test_shift_is_monomial_multiplication(a, k):
    assert a.shift(k) == a * LaurentPoly.term(1, k)


@given(polys)
def test_invert_variable_involution(a):
    assert a.invert_variable().invert_variable() == a


@given(polys, polys)
def test_invert_variable_is_ring_map(a, b):
    assert (a * b).invert_variable() == a.invert_variable() * b.invert_variable()
    assert (a + b).invert_variable() == a.invert_variable() + b.invert_variable()


@given(polys)
def test_json_roundtrip(a):
    assert LaurentPoly.from_json(a.to_json()) == a


@given(polys)
def test_sub_and_scale(a):
    assert a - a == LaurentPoly.zero()
    assert a.scale(2) == a + a
    assert a.scale(-1) == -a
