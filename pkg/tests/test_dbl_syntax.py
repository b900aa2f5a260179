"""Formula grammar: parsing, printing, derived forms."""

import pytest
from hypothesis import given, strategies as st

from bayesalg.dbl.syntax import (
    BOT,
    Cond,
    FormulaParseError,
    Impl,
    TOP,
    Var,
    as_iff,
    conj,
    disj,
    format_formula,
    format_sequent,
    iff,
    neg,
    parse_formula,
    parse_sequent,
)

x, y, z = Var("x"), Var("y"), Var("z")


def test_core_connectives():
    assert parse_formula("F") == BOT
    assert parse_formula("T") == neg(BOT)
    assert parse_formula("x -> y") == Impl(x, y)
    assert parse_formula("[b]b") == Cond(Var("b"), Var("b"))


def test_sugar_is_definitional():
    # ~X is X -> F, so the two spellings parse to the same term
    assert parse_formula("~x") == Impl(x, BOT)
    assert parse_formula("x | y") == parse_formula("~x -> y")
    assert parse_formula("x & y") == neg(disj(neg(x), neg(y)))
    assert parse_formula("x <-> y") == conj(Impl(x, y), Impl(y, x))


def test_precedence():
    assert parse_formula("x -> y -> z") == Impl(x, Impl(y, z))
    assert parse_formula("~x | y & z") == disj(neg(x), conj(y, z))
    assert parse_formula("[x]y -> z") == Impl(Cond(x, y), z)
    assert parse_formula("[x]y & z") == conj(Cond(x, y), z)
    assert parse_formula("[x]~y") == Cond(x, neg(y))
    assert parse_formula("[x][y]z") == Cond(x, Cond(y, z))
    assert parse_formula("[x -> y]z") == Cond(Impl(x, y), z)
    assert parse_formula("x <-> y <-> z") == iff(iff(x, y), z)
    assert parse_formula("x & (y | z)") == conj(x, disj(y, z))


def test_distribution_shape():
    f = parse_formula("[x](y -> z) -> ([x]y -> [x]z)")
    assert f == Impl(Cond(x, Impl(y, z)), Impl(Cond(x, y), Cond(x, z)))


def test_printing_examples():
    assert format_formula(iff(Cond(x, neg(y)), neg(Cond(x, y)))) \
        == "[x]~y <-> ~[x]y"
    assert format_formula(Impl(x, Impl(y, z))) == "x -> y -> z"
    assert format_formula(Impl(Impl(x, y), z)) == "(x -> y) -> z"
    assert format_formula(conj(x, disj(y, z))) == "x & (y | z)"
    assert format_formula(neg(neg(x))) == "~~x"
    assert format_formula(TOP) == "T"
    assert format_formula(Cond(disj(x, y), z)) == "[x | y]z"


def test_sequent_roundtrip_and_meta_bar():
    s = parse_sequent("~x || [x]x")
    assert s == (neg(x), Cond(x, x))
    assert format_sequent(s) == "~x || [x]x"
    # a bare disjunction member is parenthesized next to the meta-bar
    s2 = (neg(x), disj(x, neg(x)))
    assert format_sequent(s2) == "~x || (x | ~x)"
    assert parse_sequent(format_sequent(s2)) == s2
    # but not when it is the whole sequent
    assert format_sequent((disj(x, y),)) == "x | y"


def test_reserved_and_names():
    assert parse_formula("Tx") == Var("Tx")
    assert parse_formula("_a1") == Var("_a1")


def test_parse_errors_carry_positions():
    with pytest.raises(FormulaParseError) as err:
        parse_formula("x -> ")
    assert err.value.position == 5
    with pytest.raises(FormulaParseError) as err:
        parse_formula("x )")
    assert err.value.position == 2
    with pytest.raises(FormulaParseError) as err:
        parse_formula("[x y")
    assert err.value.position == 3
    with pytest.raises(FormulaParseError) as err:
        parse_formula("x || y")
    assert err.value.position == 2
    with pytest.raises(FormulaParseError) as err:
        parse_formula("x $ y")
    assert err.value.position == 2


_formulas = st.recursive(
    st.sampled_from([x, y, z, BOT]),
    lambda sub: st.one_of(
        st.tuples(sub, sub).map(lambda p: Impl(*p)),
        st.tuples(sub, sub).map(lambda p: Cond(*p)),
        sub.map(neg),
        st.tuples(sub, sub).map(lambda p: disj(*p)),
        st.tuples(sub, sub).map(lambda p: conj(*p)),
        st.tuples(sub, sub).map(lambda p: iff(*p)),
    ),
    max_leaves=12,
)


@given(_formulas)
def test_print_parse_roundtrip(f):
    assert parse_formula(format_formula(f)) == f


@given(st.lists(_formulas, min_size=1, max_size=4))
def test_sequent_print_parse_roundtrip(members):
    s = tuple(members)
    assert parse_sequent(format_sequent(s)) == s


@given(_formulas, _formulas)
def test_iff_detector_matches_constructor(a, b):
    assert as_iff(iff(a, b)) == (a, b)
