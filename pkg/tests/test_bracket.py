from knotsieve.bracket import (
    CONN_H,
    CONN_V,
    CONN_X,
    INF_TANGLE,
    NEG_CROSSING,
    POS_CROSSING,
    ZERO_TANGLE,
    bracket_add,
    bracket_mirror,
    bracket_mul,
    bracket_rotate90,
    bracket_transpose,
    closure_bracket,
    conn_compose,
    twist_bracket,
    twist_conn,
)
from knotsieve.cyclotomic import eval_zeta8
from knotsieve.laurent import DELTA, LaurentPoly
from knotsieve.pd import form_to_tangle_pd, tangle_bracket_state_sum


def test_basis_tangles():
    assert ZERO_TANGLE.p == LaurentPoly.one()
    assert ZERO_TANGLE.q == LaurentPoly.zero()
    assert INF_TANGLE.p == LaurentPoly.zero()
    assert INF_TANGLE.q == LaurentPoly.one()


def test_crossing_resolution():
    # <X> = A<0> + A^-1<inf> and its mirror
    assert POS_CROSSING.p == LaurentPoly.term(1, 1)
    assert POS_CROSSING.q == LaurentPoly.term(1, -1)
    assert bracket_mirror(POS_CROSSING) == NEG_CROSSING


def test_closure_values():
    # numerator closure of the 0-tangle is the 2-component unlink
    assert closure_bracket(ZERO_TANGLE) == DELTA
    assert closure_bracket(INF_TANGLE) == LaurentPoly.one()
    # 1-crossing closure is an unknot with one kink: -A^3
    assert closure_bracket(POS_CROSSING) == LaurentPoly.term(-1, 3)
    assert closure_bracket(NEG_CROSSING) == LaurentPoly.term(-1, -3)


def test_rotate_and_transpose():
    assert bracket_rotate90(ZERO_TANGLE) == INF_TANGLE
    assert bracket_rotate90(INF_TANGLE) == ZERO_TANGLE
    for t in (POS_CROSSING, twist_bracket(3), twist_bracket(-2)):
        assert bracket_rotate90(bracket_rotate90(t)) == t
        assert bracket_transpose(bracket_transpose(t)) == t


def test_twist_bracket_matches_state_sum():
    for n in (1, -1, 2, -2, 3, 4, -5):
        pd = form_to_tangle_pd(("H", (n,)))
        assert twist_bracket(n) == tangle_bracket_state_sum(pd)


def test_twist_conn():
    assert twist_conn(0) == CONN_H
    for n in (1, -1, 3):
        assert twist_conn(n) == CONN_X
    assert twist_conn(2) == CONN_H
    assert twist_conn(2, vertical=True) == CONN_V


def test_conn_compose():
    assert conn_compose("add", CONN_X, CONN_X) == (CONN_H, 0)
    # only V+V pinches off an internal loop
    assert conn_compose("add", CONN_V, CONN_V) == (CONN_V, 1)
    for c1 in (CONN_H, CONN_V, CONN_X):
        for c2 in (CONN_H, CONN_V, CONN_X):
            kind, loops = conn_compose("add", c1, c2)
            assert loops == (1 if c1 == c2 == CONN_V else 0)
    assert conn_compose("rotate90", CONN_X) == (CONN_X, 0)
    assert conn_compose("rotate90", CONN_H) == (CONN_V, 0)


def test_torus_closures():
    assert twist_bracket(2) == bracket_add(POS_CROSSING, POS_CROSSING)
    # (2,2) torus link: Hopf
    hopf = closure_bracket(twist_bracket(2))
    assert hopf == LaurentPoly.term(-1, 4) + LaurentPoly.term(-1, -4)
    # (2,3) torus knot: trefoil, and its mirror from -3 twists
    tre = closure_bracket(twist_bracket(3))
    assert tre == closure_bracket(twist_bracket(-3)).invert_variable()
    assert not tre.is_unit_monomial()
    assert eval_zeta8(tre).norm_squared() == 9  # determinant 3


def test_mul_is_transposed_add():
    t = twist_bracket(3)
    u = twist_bracket(-2)
    assert bracket_mul(t, u) == bracket_add(bracket_transpose(t), u)
