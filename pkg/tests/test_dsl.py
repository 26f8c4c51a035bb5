import pytest
from hypothesis import given, strategies as st

from trivext import InvalidModule, InvalidRing, ParseError, Unsupported, ZTrivialExtension
from trivext.dsl import (
    ExtensionExpr,
    ModuleExpr,
    ResidueExpr,
    canonical,
    elements_from_text,
    parse_elements,
    parse_ring_expr,
    ring_from_text,
)
from trivext.finite_ring import Integers, ProductRing, ResidueRing
from trivext.trivial_extension import TrivialExtension


def test_parse_examples():
    node = parse_ring_expr("TE(Z, Z/6)")
    assert isinstance(node, ExtensionExpr) and node.module == ModuleExpr((6,))
    R = ring_from_text("TE(Z, Z/6)")
    assert isinstance(R, ZTrivialExtension) and R.module.factors == (6,)
    assert parse_ring_expr("Z/12") == ResidueExpr(12)
    assert isinstance(ring_from_text("Z/12"), ResidueRing)
    assert isinstance(ring_from_text("Z"), Integers)
    assert isinstance(ring_from_text("Z/2 x Z/3"), ProductRing)
    assert isinstance(ring_from_text("TE(Z/4, Z/2 x Z/2)"), TrivialExtension)


def test_semantic_errors():
    with pytest.raises(InvalidModule):
        ring_from_text("TE(Z/4, Z/3)")
    with pytest.raises(InvalidRing):
        ring_from_text("Z/1")
    with pytest.raises(Unsupported):
        ring_from_text("TE(Z/2 x Z/2, Z/2)")
    with pytest.raises(Unsupported):
        ring_from_text("Z x Z/2")


@pytest.mark.parametrize("text,pos", [("TE(Z,", 5), ("Z/a", 2), ("Zx", 2), ("Z/4 Z/2", 4), ("TE(Z/4, Z)", 8), ("", 0)])
def test_syntax_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_ring_expr(text)
    assert info.value.position == pos


@pytest.mark.parametrize("text,canon", [
    ("TE(Z,Z/6)", "TE(Z, Z/6)"),
    ("  Z/12 ", "Z/12"),
    ("Z/2xZ/3xZ/4", "Z/2 x Z/3 x Z/4"),
    ("Z/2 x (Z/3 x Z/4)", "Z/2 x (Z/3 x Z/4)"),
    ("(Z/2 x Z/3) x Z/4", "Z/2 x Z/3 x Z/4"),
    ("TE(Z/4,Z/2xZ/2)", "TE(Z/4, Z/2 x Z/2)"),
])
def test_canonical_round_trip(text, canon):
    assert canonical(text) == canon
    assert canonical(canon) == canon
    assert str(ring_from_text(text)) == canon


ring_text = st.recursive(
    st.one_of(st.just("Z"), st.integers(1, 40).map(lambda n: f"Z/{n}")),
    lambda inner: st.one_of(
        st.tuples(inner, inner).map(lambda p: f"{p[0]} x ({p[1]})"),
        st.tuples(inner, st.lists(st.integers(1, 9), min_size=1, max_size=3)).map(
            lambda p: f"TE({p[0]}, {' x '.join(f'Z/{d}' for d in p[1])})"),
    ),
    max_leaves=5,
)


@given(ring_text)
def test_print_parse_round_trip(text):
    node = parse_ring_expr(text)
    assert parse_ring_expr(str(node)) == node


def test_elements():
    assert parse_elements("") == []
    assert parse_elements("(6,1), (0, -2)") == [(6, 1), (0, -2)]
    assert parse_elements("(1,(2,3))") == [(1, (2, 3))]
    R = ring_from_text("TE(Z/4, Z/2)")
    assert elements_from_text(R, "(5,-1)") == [(1, 1)]
    assert elements_from_text(ring_from_text("Z/6"), "-1, 8") == [5, 2]
    assert elements_from_text(ring_from_text("TE(Z, Z/4)"), "(-6,-1)") == [(-6, 3)]
    with pytest.raises(ParseError):
        parse_elements("(1,")
    with pytest.raises(ValueError):
        elements_from_text(R, "3")
