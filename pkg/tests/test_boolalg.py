"""Boolean algebra core: exhaustive axioms on small algebras, laws on larger."""

import pytest
from hypothesis import given, strategies as st

from bayesalg.boolalg import (
    ElementParseError,
    FiniteBooleanAlgebra,
    atom_label,
    crop,
    format_element,
    parse_atom_label,
    parse_element,
)


def test_exhaustive_boolean_axioms_up_to_four_atoms():
    for n in range(1, 5):
        alg = FiniteBooleanAlgebra(f"a{i}" for i in range(n))
        elems = list(alg.elements())
        assert len(elems) == 2 ** n
        top, bot = alg.top, alg.bottom
        for x in elems:
            assert x & top == x and x | bot == x
            assert x & ~x == bot and x | ~x == top
            assert ~~x == x
            for y in elems:
                assert x & y == y & x and x | y == y | x
                assert ~(x & y) == ~x | ~y
                assert (x <= y) == (x & y == x)
                for z in elems:
                    assert x & (y | z) == (x & y) | (x & z)


def test_enumeration_is_bitmask_ordered():
    alg = FiniteBooleanAlgebra.from_names("a,c,d")
    assert alg.element_at(0) == alg.bottom
    assert alg.element_at(1) == alg.atom_element("a")
    assert alg.element_at(5) == alg.element(["a", "d"])
    assert alg.element_at(alg.size() - 1) == alg.top
    for k in range(alg.size()):
        assert alg.index_of(alg.element_at(k)) == k


def test_crop_keeps_atom_order():
    alg = FiniteBooleanAlgebra.from_names("a,c,d")
    below = crop(alg, alg.element(["a", "d"]))
    assert below.atoms == ("a", "d")
    assert below.top == below.element(["a", "d"])
    with pytest.raises(ValueError):
        crop(alg, alg.bottom)


def test_pair_atoms_round_trip():
    atom = (("a", "c"), ("d", "a"))
    assert atom_label(atom) == "((a,c),(d,a))"
    assert parse_atom_label("((a,c),(d,a))") == atom
    alg = FiniteBooleanAlgebra([("a", "c"), ("a", "d"), ("c", "a")])
    x = parse_element(alg, "{(a,c),(c,a)}")
    assert format_element(x) == "{(a,c),(c,a)}"


def test_element_text_forms():
    alg = FiniteBooleanAlgebra.from_names("a,c,d")
    assert parse_element(alg, "{}") == alg.bottom
    assert parse_element(alg, "{ a , d }") == alg.element(["a", "d"])
    assert format_element(alg.bottom) == "{}"
    assert format_element(alg.top) == "{a,c,d}"
    with pytest.raises(ElementParseError):
        parse_element(alg, "{a,b}")
    with pytest.raises(ElementParseError):
        parse_element(alg, "a,c")


def test_algebra_mixing_is_rejected():
    left = FiniteBooleanAlgebra.from_names("a,c")
    right = FiniteBooleanAlgebra.from_names("a,d")
    with pytest.raises(ValueError):
        left.top & right.top


def test_json_round_trip():
    alg = FiniteBooleanAlgebra([("a", "c"), "d"])
    assert FiniteBooleanAlgebra.from_json(alg.to_json()) == alg


@st.composite
def algebra_and_elements(draw, max_atoms=9, count=3):
    n = draw(st.integers(min_value=1, max_value=max_atoms))
    alg = FiniteBooleanAlgebra(f"a{i}" for i in range(n))
    picks = [
        alg.element_at(draw(st.integers(min_value=0, max_value=alg.size() - 1)))
        for _ in range(count)
    ]
    return (alg, *picks)


@given(algebra_and_elements())
def test_algebra_laws_on_larger_algebras(data):
    alg, x, y, z = data
    assert x | (y & z) == (x | y) & (x | z)
    assert ~(x | y) == ~x & ~y
    assert x - y == x & ~y
    assert (x <= y) == (~y <= ~x)
    assert x & (x | y) == x and x | (x & y) == x
