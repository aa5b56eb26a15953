"""Unit tests for bdsa.boolcore."""

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from bdsa.boolcore import (
    PrincipalIdeal,
    QuotientContext,
    atoms_of,
    canonical_key,
    dualize_action,
    is_subset,
    parse_element,
    popcount,
    quotient_map,
    render_element,
    subsets_of,
)
from bdsa.errors import MalformedSyntax, NotDisjoint, UnknownAtom
from bdsa.schemas.algebra import UNDEFINED, AtomUniverse

ABC = AtomUniverse(names=("a", "b", "c"))


# ---------- bit helpers -----------------------------------------------------


def test_atoms_and_popcount():
    assert atoms_of(0) == []
    assert atoms_of(0b101) == [0, 2]
    assert popcount(0b111) == 3
    assert is_subset(0b001, 0b011)
    assert not is_subset(0b100, 0b011)


def test_canonical_key_orders_by_size_then_atoms():
    elements = sorted(range(8), key=canonical_key)
    assert elements == [0, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111]


@given(x=st.integers(0, 63))
@settings(max_examples=64, suppress_health_check=[HealthCheck.function_scoped_fixture])
def test_subsets_of_lists_every_subset_once(x):
    subsets = list(subsets_of(x))
    assert len(subsets) == len(set(subsets)) == 2 ** popcount(x)
    assert all(is_subset(s, x) for s in subsets)


# ---------- element literals ------------------------------------------------


@pytest.mark.parametrize(
    "text, expected",
    [
        ("{}", 0),
        ("{ }", 0),
        ("{a}", 0b001),
        ("{c,a}", 0b101),
        ("{ a , b ,c }", 0b111),
    ],
)
def test_parse_element(text, expected):
    assert parse_element(ABC, text) == expected


@pytest.mark.parametrize("text", ["a", "{a", "{a,}", "{a b}", "{a}x", "", "{,a}"])
def test_parse_element_malformed(text):
    with pytest.raises(MalformedSyntax):
        parse_element(ABC, text)


def test_parse_element_reports_position():
    with pytest.raises(MalformedSyntax) as exc:
        parse_element(ABC, "{a}x")
    assert exc.value.position == 3


def test_parse_element_unknown_atom():
    with pytest.raises(UnknownAtom) as exc:
        parse_element(ABC, "{a,d}")
    assert exc.value.atom == "d"
    assert str(exc.value) == "UnknownAtom d"


def test_render_element_uses_declaration_order():
    assert render_element(ABC, 0) == "{}"
    assert render_element(ABC, 0b110) == "{b,c}"


@given(x=st.integers(0, 7))
@settings(suppress_health_check=[HealthCheck.function_scoped_fixture])
def test_render_then_parse_is_identity(x):
    assert parse_element(ABC, render_element(ABC, x)) == x


# ---------- dualization -----------------------------------------------------


def test_dualize_action():
    # θ({a}) = {b}, θ({b}) = ∅, θ({c}) = {a, c}
    assert dualize_action(ABC, (0b010, 0, 0b101)) == (2, 0, 2)


def test_dualize_action_undefined_outside_range():
    assert dualize_action(ABC, (0b010, 0, 0)) == (UNDEFINED, 0, UNDEFINED)


def test_dualize_action_rejects_overlapping_images():
    with pytest.raises(NotDisjoint) as exc:
        dualize_action(ABC, (0b010, 0b010, 0))
    assert (exc.value.atom, exc.value.first, exc.value.second) == ("b", "a", "b")


def test_dualize_action_rejects_wrong_length():
    with pytest.raises(ValueError):
        dualize_action(ABC, (0, 0))


# ---------- ideals and quotients --------------------------------------------


def test_principal_ideal_contains():
    ideal = PrincipalIdeal(top=0b011)
    assert ideal.contains(0b001)
    assert ideal.contains(0)
    assert not ideal.contains(0b100)


def test_quotient_context_compress_expand():
    ctx = QuotientContext(parent=ABC, removed=0b010)
    assert ctx.surviving == 0b101
    assert ctx.surviving_universe().names == ("a", "c")
    assert quotient_map(ctx, 0b111) == 0b101
    assert ctx.compress(0b100) == 0b10
    assert ctx.expand(0b10) == 0b100
    assert ctx.expand(ctx.compress(ctx.class_of(0b110))) == 0b100
