"""Ring spec text: parsing, canonical rendering, ideal text."""

import pytest
from hypothesis import given, strategies as st

from absorbing_ideals import (
    ParseError,
    PolyQuot,
    Product,
    Quotient,
    RingBuildError,
    ZMod,
    build_ring,
    parse_ideal_text,
    parse_ring_spec,
    render_ring_spec,
)


ROUND_TRIP_SPECS = [
    "Zmod:2",
    "Zmod:36",
    "PolyQuot:{p:2,poly:[0,0,1]}",
    "PolyQuot:{p:3,poly:[1,2,0,1]}",
    "Product:[Zmod:2,Zmod:4]",
    "Product:[Zmod:2,Zmod:2,Zmod:2]",
    "Product:[Zmod:4,PolyQuot:{p:2,poly:[0,0,1]}]",
    "Quotient:{ring:Zmod:12,gens:[4]}",
    "Quotient:{ring:Product:[Zmod:2,Zmod:4],gens:[(0,2)]}",
]


@pytest.mark.parametrize("spec", ROUND_TRIP_SPECS)
def test_round_trip(spec):
    descriptor = parse_ring_spec(spec)
    rendered = render_ring_spec(descriptor)
    assert parse_ring_spec(rendered) == descriptor
    build_ring(descriptor)  # must be buildable


def test_parse_results_match_descriptors():
    assert parse_ring_spec("Zmod:8") == ZMod(8)
    assert parse_ring_spec("PolyQuot:{p:2,poly:[0,0,1]}") == PolyQuot(2, (0, 0, 1))
    assert parse_ring_spec("Product:[Zmod:2,Zmod:3]") == Product((ZMod(2), ZMod(3)))
    quotient = parse_ring_spec("Quotient:{ring:Zmod:12,gens:[4]}")
    assert isinstance(quotient, Quotient)
    assert quotient.base == ZMod(12)
    assert quotient.generators == (4,)
    # the built ring normalizes its own descriptor to the full ideal
    ring = build_ring(quotient)
    assert set(ring.descriptor.generators) == {0, 4, 8}


def test_whitespace_is_tolerated():
    spec = " Product:[ Zmod:2 , Zmod:4 ] "
    assert parse_ring_spec(spec) == Product((ZMod(2), ZMod(4)))


def test_nested_quotient_spec():
    spec = "Quotient:{ring:Quotient:{ring:Zmod:24,gens:[12]},gens:[4]}"
    descriptor = parse_ring_spec(spec)
    ring = build_ring(descriptor)
    assert ring.size == 4


@pytest.mark.parametrize(
    "bad",
    [
        "",
        "Zmod",
        "Zmod:",
        "Zmod:x",
        "Frob:4",
        "Zmod:4 trailing",
        "Product:[]",
        "Product:[Zmod:4",
        "PolyQuot:{p:2}",
        "PolyQuot:{p:2,poly:[0,0,1]",
        "Quotient:{ring:Zmod:4}",
    ],
)
def test_parse_rejects_malformed_specs(bad):
    with pytest.raises(ParseError):
        parse_ring_spec(bad)


@pytest.mark.parametrize(
    "invalid",
    [
        "Zmod:1",
        "PolyQuot:{p:4,poly:[0,0,1]}",
        "PolyQuot:{p:2,poly:[0,0,2]}",
        "PolyQuot:{p:2,poly:[1]}",
    ],
)
def test_parse_rejects_invalid_rings(invalid):
    with pytest.raises((ParseError, RingBuildError)):
        parse_ring_spec(invalid)


def test_size_cap_applies_at_build_time():
    descriptor = parse_ring_spec("Zmod:100", max_size=4096)
    with pytest.raises(RingBuildError, match="cap"):
        build_ring(descriptor, max_size=50)


@given(st.integers(min_value=2, max_value=300))
def test_zmod_round_trip_all_moduli(n):
    assert parse_ring_spec(f"Zmod:{n}") == ZMod(n)


def test_parse_ideal_text():
    ring = build_ring(parse_ring_spec("Zmod:12"))
    assert parse_ideal_text(ring, "(0)").element_values == frozenset({0})
    assert parse_ideal_text(ring, "(4, 6)").element_values == frozenset({0, 2, 4, 6, 8, 10})
    assert parse_ideal_text(ring, "4,6") == parse_ideal_text(ring, "(4,6)")
    assert parse_ideal_text(ring, "()").is_zero
    assert parse_ideal_text(ring, "").is_zero


def test_parse_ideal_text_product_ring():
    ring = build_ring(parse_ring_spec("Product:[Zmod:2,Zmod:4]"))
    ideal = parse_ideal_text(ring, "((0,2))")
    assert ideal.element_values == frozenset({(0, 0), (0, 2)})
    two_gens = parse_ideal_text(ring, "((1,0),(0,2))")
    assert (1, 0) in two_gens.element_values


def test_parse_ideal_text_rejects_garbage():
    ring = build_ring(parse_ring_spec("Zmod:12"))
    with pytest.raises(ParseError):
        parse_ideal_text(ring, "(4, banana)")
    with pytest.raises(ParseError):
        parse_ideal_text(ring, "(4, 99)")
    with pytest.raises(ParseError):
        parse_ideal_text(ring, "(4,")
