"""Ring construction, canonical element order, and arithmetic laws."""

import pytest
from hypothesis import given, strategies as st

from absorbing_ideals import (
    DEFAULT_MAX_RING_SIZE,
    Ideal,
    MixedRingError,
    PolyQuot,
    Product,
    Quotient,
    RingBuildError,
    ZMod,
    build_ring,
    quotient_ring,
)
from absorbing_ideals.rings import (
    additive_closure_values,
    descriptor_size,
    generated_ideal_values,
    split_top_level,
    validate_descriptor,
)

DESCRIPTOR_POOL = [
    ZMod(2),
    ZMod(4),
    ZMod(6),
    ZMod(9),
    ZMod(12),
    PolyQuot(2, (0, 0, 1)),
    PolyQuot(2, (1, 1, 1)),
    PolyQuot(3, (0, 0, 1)),
    Product((ZMod(2), ZMod(3))),
    Product((ZMod(4), ZMod(2))),
    Quotient(ZMod(12), (4,)),
]

ring_strategy = st.sampled_from([build_ring(d) for d in DESCRIPTOR_POOL])


@st.composite
def ring_and_elements(draw, count=3):
    ring = draw(ring_strategy)
    values = list(ring.iter_values())
    picks = [draw(st.sampled_from(values)) for _ in range(count)]
    return ring, picks


# ---------------------------------------------------------------------------
# construction and validation


def test_zmod_basics():
    ring = build_ring(ZMod(12))
    assert ring.size == 12
    assert list(ring.iter_values()) == list(range(12))
    assert ring.add_values(7, 8) == 3
    assert ring.mul_values(7, 8) == 8
    assert ring.neg_value(5) == 7
    assert ring.pow_value(5, 0) == 1
    assert ring.unit_values() == frozenset({1, 5, 7, 11})


def test_polyquot_basics():
    ring = build_ring(PolyQuot(2, (0, 0, 1)))  # square of the variable is 0
    assert ring.size == 4
    assert list(ring.iter_values()) == [(0, 0), (1, 0), (0, 1), (1, 1)]
    x = (0, 1)
    assert ring.mul_values(x, x) == (0, 0)
    assert ring.add_values(x, ring.one_value) == (1, 1)
    assert ring.unit_values() == frozenset({(1, 0), (1, 1)})


def test_polyquot_field():
    # an irreducible modulus gives a field: every nonzero element a unit
    ring = build_ring(PolyQuot(2, (1, 1, 1)))
    assert ring.unit_values() == frozenset(set(ring.iter_values()) - {(0, 0)})


def test_polyquot_reduction_uses_modulus():
    # cube of the variable reduces via x^3 = -x - 1 over F2: x^3 = x + 1
    ring = build_ring(PolyQuot(2, (1, 1, 0, 1)))
    x = (0, 1, 0)
    assert ring.pow_value(x, 3) == (1, 1, 0)


def test_product_basics():
    ring = build_ring(Product((ZMod(4), ZMod(3))))
    assert ring.size == 12
    values = list(ring.iter_values())
    assert values[0] == (0, 0) and values[1] == (0, 1) and values[3] == (1, 0)
    assert ring.mul_values((2, 2), (2, 2)) == (0, 1)
    assert ring.one_value == (1, 1)


def test_quotient_basics():
    base = build_ring(ZMod(12))
    ring = quotient_ring(base, Ideal.from_generators(base, [4]))
    assert ring.size == 4
    assert list(ring.iter_values()) == [0, 1, 2, 3]
    assert ring.mul_values(2, 2) == 0  # 4 collapses to 0
    assert ring.project_value(7) == 3
    assert ring.preimage_values({0}) == frozenset({0, 4, 8})


def test_quotient_by_unit_ideal_rejected():
    base = build_ring(ZMod(6))
    with pytest.raises(ValueError):
        quotient_ring(base, Ideal.from_generators(base, [1]))


def test_validate_descriptor_errors():
    with pytest.raises(RingBuildError, match="at least 2"):
        validate_descriptor(ZMod(1))
    with pytest.raises(RingBuildError, match="prime"):
        validate_descriptor(PolyQuot(4, (0, 0, 1)))
    with pytest.raises(RingBuildError, match="monic"):
        validate_descriptor(PolyQuot(3, (0, 0, 2)))
    with pytest.raises(RingBuildError, match="degree at least 1"):
        validate_descriptor(PolyQuot(2, (1,)))
    with pytest.raises(RingBuildError, match="at least one factor"):
        validate_descriptor(Product(()))
    with pytest.raises(RingBuildError, match="exceeds the cap"):
        validate_descriptor(ZMod(5000))
    with pytest.raises(RingBuildError, match="exceeds the cap"):
        validate_descriptor(ZMod(64), max_size=32)
    validate_descriptor(ZMod(DEFAULT_MAX_RING_SIZE))


def test_descriptor_size():
    assert descriptor_size(ZMod(9)) == 9
    assert descriptor_size(PolyQuot(3, (0, 0, 0, 1))) == 27
    assert descriptor_size(Product((ZMod(4), ZMod(3)))) == 12


def test_build_ring_is_cached_and_hashable():
    a = build_ring(ZMod(8))
    b = build_ring(ZMod(8))
    assert a is b
    assert a == b and hash(a) == hash(b)
    assert build_ring(ZMod(9)) != a


# ---------------------------------------------------------------------------
# arithmetic laws, across every ring kind


@given(ring_and_elements())
def test_addition_laws(data):
    ring, (a, b, c) = data
    add = ring.add_values
    assert add(a, b) == add(b, a)
    assert add(add(a, b), c) == add(a, add(b, c))
    assert add(a, ring.zero_value) == a
    assert add(a, ring.neg_value(a)) == ring.zero_value


@given(ring_and_elements())
def test_multiplication_laws(data):
    ring, (a, b, c) = data
    mul = ring.mul_values
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, ring.one_value) == a
    assert mul(a, ring.zero_value) == ring.zero_value
    assert mul(a, ring.add_values(b, c)) == ring.add_values(mul(a, b), mul(a, c))


@given(ring_and_elements(count=1), st.integers(min_value=0, max_value=9))
def test_power_matches_repeated_multiplication(data, k):
    ring, (a,) = data
    expected = ring.one_value
    for _ in range(k):
        expected = ring.mul_values(expected, a)
    assert ring.pow_value(a, k) == expected


@given(ring_strategy)
def test_canonical_order_is_total_and_stable(ring):
    values = list(ring.iter_values())
    assert len(values) == ring.size == len(set(values))
    keys = [ring.sort_key(v) for v in values]
    assert keys == sorted(keys)
    assert all(ring.contains_value(v) for v in values)


@given(ring_and_elements(count=1))
def test_render_parse_round_trip(data):
    ring, (a,) = data
    assert ring.parse_value(ring.render_value(a)) == a


# ---------------------------------------------------------------------------
# wrapped elements


def test_element_operators():
    ring = build_ring(ZMod(10))
    a, b = ring.wrap(7), ring.wrap(5)
    assert (a + b).value == 2
    assert (a - b).value == 2
    assert (a * b).value == 5
    assert (-a).value == 3
    assert (a ** 2).value == 9
    assert a != b and a == ring.wrap(7)
    assert bool(a) and not bool(ring.zero)
    assert ring.wrap(3) < ring.wrap(4) <= ring.wrap(4)
    assert a.text() == "7"
    assert ring.one.value == 1 and ring.zero.value == 0


def test_mixed_ring_operations_rejected():
    a = build_ring(ZMod(4)).one
    b = build_ring(ZMod(6)).one
    with pytest.raises(MixedRingError):
        _ = a + b
    with pytest.raises(MixedRingError):
        _ = a * b
    with pytest.raises(TypeError):
        _ = a + 1


def test_element_accessor_validates():
    ring = build_ring(ZMod(4))
    with pytest.raises(ValueError):
        ring.element(17)
    assert ring.element(3).value == 3
    assert [e.value for e in ring.elements()] == [0, 1, 2, 3]


# ---------------------------------------------------------------------------
# closure helpers


def test_additive_closure():
    ring = build_ring(ZMod(12))
    assert additive_closure_values(ring, [4]) == frozenset({0, 4, 8})
    assert additive_closure_values(ring, [4, 6]) == frozenset({0, 2, 4, 6, 8, 10})
    assert additive_closure_values(ring, []) == frozenset({0})


def test_generated_ideal_values_matches_naive_fixpoint(small_ring_specs):
    from absorbing_ideals import parse_ring_spec
    from oracles import naive_generated_ideal

    for spec in small_ring_specs:
        ring = build_ring(parse_ring_spec(spec))
        values = list(ring.iter_values())
        for g in values[:: max(1, len(values) // 4)]:
            assert generated_ideal_values(ring, [g]) == naive_generated_ideal(ring, [g])


def test_split_top_level():
    assert split_top_level("a,b,c") == ["a", "b", "c"]
    assert split_top_level("(1,0),(0,1)") == ["(1,0)", "(0,1)"]
    assert split_top_level("[1,2],3") == ["[1,2]", "3"]
    assert split_top_level("") == []
    with pytest.raises(ValueError):
        split_top_level("(1,")
