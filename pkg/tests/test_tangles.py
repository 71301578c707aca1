from fractions import Fraction

import pytest

from knotsieve.pd import form_to_tangle_pd, tangle_bracket_state_sum
from knotsieve.tangles import (
    TangleRecord,
    bracket_orbit_key,
    canonical_form,
    enumerate_tangle_forms,
    enumerate_tangles,
    expr_bracket,
    expr_to_text,
    form_bracket,
    form_conn,
    form_fraction,
    form_to_expr,
    fraction_orbit_key,
    orbit,
    parse_expr,
    serialize_form,
)

SMALL_FORMS = [
    ("H", (3,)),
    ("H", (-4,)),
    ("H", (2, ("V", (2,)))),
    ("V", (3, ("H", (1, 1)))),
    ("H", (("V", (2,)), 1, ("V", (-3,)))),
    ("V", (-2, ("H", (2, ("V", (2,)))))),
]


def test_expr_text_roundtrip():
    for text in ("3", "-2", "(3 + r(2))", "((1 + 1) * -2)", "r((2 + r(-3)))"):
        assert expr_to_text(parse_expr(text)) == text.replace(" ", " ")


def test_form_expr_bracket_agree():
    for form in SMALL_FORMS:
        assert expr_bracket(form_to_expr(form)) == form_bracket(form)


def test_form_bracket_matches_state_sum():
    for form in SMALL_FORMS:
        pd = form_to_tangle_pd(form)
        assert tangle_bracket_state_sum(pd) == form_bracket(form)


def test_orbit_preserves_invariants():
    for form in SMALL_FORMS:
        br_key = bracket_orbit_key(form_bracket(form))
        fr_key = fraction_orbit_key(form_fraction(form))
        conn, loops = form_conn(form)
        for g in orbit(form):
            assert bracket_orbit_key(form_bracket(g)) == br_key
            assert fraction_orbit_key(form_fraction(g)) == fr_key
            assert form_conn(g)[1] == loops


def test_canonical_form_is_a_class_function():
    for form in SMALL_FORMS:
        canon = canonical_form(form)
        for g in orbit(form):
            assert canonical_form(g) == canon


def test_rational_tangle_fractions():
    assert form_fraction(("H", (3,))) == 3
    assert form_fraction(("V", (2,))) == Fraction(1, 2)
    # continued fraction 2 + 1/(-2) = 3/2... built as H[2, V[-2]]
    assert form_fraction(("H", (2, ("V", (-2,))))) == 2 + Fraction(1, -2)


def test_counts_to_six_crossings():
    counts = {}
    for c, form, conn in enumerate_tangle_forms(6):
        counts[c] = counts.get(c, 0) + 1
    assert counts == {1: 1, 2: 1, 3: 2, 4: 4, 5: 12, 6: 36}


def test_records_to_six_crossings(tmp_path):
    recs = list(enumerate_tangles(6))
    assert len(recs) == 56
    assert sum(r.trivializable for r in recs) == 50
    for r in recs:
        # stored bracket is the bracket of the stored expression
        assert expr_bracket(r.expr) == r.bracket
        # JSON roundtrip preserves everything observable (the expression
        # tree may re-parse with r(-n) in place of a vertical twist leaf)
        back = TangleRecord.from_json(r.to_json())
        assert back.to_json() == r.to_json()
        assert expr_bracket(back.expr) == r.bracket


def test_internal_loops_are_rejected():
    # the (2,2)-pretzel tangle closes a circle inside
    pretzel = ("H", (("V", (2,)), ("V", (2,))))
    conn, loops = form_conn(pretzel)
    assert loops == 1
    keys = {serialize_form(canonical_form(f)) for _, f, _ in enumerate_tangle_forms(4)}
    assert serialize_form(canonical_form(pretzel)) not in keys


def test_enumeration_is_deterministic():
    a = [(c, serialize_form(f)) for c, f, _ in enumerate_tangle_forms(5)]
    b = [(c, serialize_form(f)) for c, f, _ in enumerate_tangle_forms(5)]
    assert a == b
