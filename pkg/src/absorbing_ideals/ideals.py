"""Ideals of a finite commutative ring, and arithmetic on them.

An ideal is stored as its full element set plus the generators it was
built from; two ideals compare equal when their element sets match,
regardless of how they were generated.  Element sets make containment
tests trivial, and every operation here (radical, product, power,
colon, enumeration) works directly on those sets.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .errors import ResourceLimitError
from .rings import (
    Ring,
    RingElement,
    additive_closure_values,
    generated_ideal_values,
)

DEFAULT_MAX_IDEALS = 100_000


class Ideal:
    """An ideal with materialized element set and recorded generators."""

    __slots__ = ("ring", "generator_values", "element_values", "_hash")

    def __init__(self, ring: Ring, generator_values: Iterable, element_values: frozenset):
        self.ring = ring
        self.generator_values = tuple(generator_values)
        self.element_values = element_values
        self._hash = hash((ring, element_values))

    # construction -------------------------------------------------------

    @classmethod
    def from_generators(cls, ring: Ring, generators: Iterable) -> "Ideal":
        """Ideal generated by the given elements (values or wrapped)."""
        values = [g.value if isinstance(g, RingElement) else g for g in generators]
        closure = generated_ideal_values(ring, values)
        return cls(ring, values, closure)

    @classmethod
    def from_elements(cls, ring: Ring, elements: Iterable) -> "Ideal":
        """Ideal whose element set is given; picks small canonical generators.

        Generators are chosen greedily in canonical order, keeping an
        element when it is not yet generated by the ones already kept.
        Raises ValueError if the set is not actually an ideal.
        """
        values = frozenset(
            e.value if isinstance(e, RingElement) else e for e in elements
        )
        gens: list = []
        have: frozenset = frozenset({ring.zero_value})
        for v in sorted(values, key=ring.sort_key):
            if v not in have:
                gens.append(v)
                have = generated_ideal_values(ring, gens)
        if have != values:
            raise ValueError("element set is not closed under the ideal operations")
        return cls(ring, gens, values)

    @classmethod
    def zero(cls, ring: Ring) -> "Ideal":
        return cls(ring, (), frozenset({ring.zero_value}))

    @classmethod
    def unit(cls, ring: Ring) -> "Ideal":
        return cls.from_generators(ring, [ring.one_value])

    # predicates -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return len(self.element_values) == 1

    @property
    def is_unit(self) -> bool:
        return self.ring.one_value in self.element_values

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def contains(self, elem) -> bool:
        value = elem.value if isinstance(elem, RingElement) else elem
        return value in self.element_values

    def __contains__(self, elem) -> bool:
        return self.contains(elem)

    def __len__(self) -> int:
        return len(self.element_values)

    def __le__(self, other: "Ideal") -> bool:
        return self.element_values <= other.element_values

    def __lt__(self, other: "Ideal") -> bool:
        return self.element_values < other.element_values

    def is_prime(self) -> bool:
        """Proper, and ab in I forces a in I or b in I."""
        if self.is_unit:
            return False
        outside = [v for v in self.ring.iter_values() if v not in self.element_values]
        for a in outside:
            for b in outside:
                if self.ring.mul_values(a, b) in self.element_values:
                    return False
        return True

    # presentation ----------------------------------------------------------

    def generators(self) -> list[RingElement]:
        return [self.ring.wrap(v) for v in self.generator_values]

    def elements(self) -> list[RingElement]:
        return [
            self.ring.wrap(v)
            for v in sorted(self.element_values, key=self.ring.sort_key)
        ]

    def text(self) -> str:
        if not self.generator_values:
            return "(0)"
        inner = ",".join(self.ring.render_value(v) for v in self.generator_values)
        return f"({inner})"

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.element_values == other.element_values

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Ideal({self.text()} in {self.ring})"


# ---------------------------------------------------------------------------
# operations


def radical(ideal: Ideal) -> Ideal:
    """Elements with some power in the ideal.

    Walks successive powers of each element; in a finite ring the power
    sequence cycles within |R| steps, so the scan is bounded.
    """
    ring = ideal.ring
    members: set = set()
    for v in ring.iter_values():
        seen: set = set()
        x = v
        while x not in seen:
            if x in ideal.element_values:
                members.add(v)
                break
            seen.add(x)
            x = ring.mul_values(x, v)
    return Ideal.from_elements(ring, members)


def ideal_product(left: Ideal, right: Ideal) -> Ideal:
    """Ideal generated by all products of one generator from each side."""
    if left.ring != right.ring:
        raise ValueError("ideals live in different rings")
    ring = left.ring
    if not left.generator_values or not right.generator_values:
        return Ideal.zero(ring)
    products = {
        ring.mul_values(a, b)
        for a in left.generator_values
        for b in right.generator_values
    }
    return Ideal.from_generators(ring, products)


def ideal_power(ideal: Ideal, k: int) -> Ideal:
    """k-th power of an ideal, for k >= 1."""
    if k < 1:
        raise ValueError(f"ideal power needs exponent >= 1, got {k}")
    out = ideal
    for _ in range(k - 1):
        out = ideal_product(out, ideal)
    return out


def colon(ideal: Ideal, elem) -> Ideal:
    """Colon ideal: all r with r * x in the ideal."""
    ring = ideal.ring
    x = elem.value if isinstance(elem, RingElement) else elem
    members = [
        v for v in ring.iter_values() if ring.mul_values(v, x) in ideal.element_values
    ]
    return Ideal.from_elements(ring, members)


def sum_ideal(left: Ideal, right: Ideal) -> Ideal:
    """Smallest ideal containing both."""
    if left.ring != right.ring:
        raise ValueError("ideals live in different rings")
    values = additive_closure_values(
        left.ring, left.element_values | right.element_values
    )
    return Ideal.from_elements(left.ring, values)


def enumerate_ideals(ring: Ring, max_ideals: int = DEFAULT_MAX_IDEALS) -> list[Ideal]:
    """All ideals of the ring, smallest element set first.

    Breadth-first closure: starting from (0), repeatedly extend each
    known ideal by one new generator.  Every ideal is finitely generated
    here, so this reaches all of them.  Ties in size break by the sorted
    element list, making the output order canonical.
    """
    zero = Ideal.zero(ring)
    seen: dict[frozenset, Ideal] = {zero.element_values: zero}
    frontier = [zero]
    values = tuple(ring.iter_values())
    while frontier:
        next_frontier: list[Ideal] = []
        for ideal in frontier:
            for v in values:
                if v in ideal.element_values:
                    continue
                extended = Ideal.from_generators(
                    ring, list(ideal.generator_values) + [v]
                )
                if extended.element_values not in seen:
                    if len(seen) >= max_ideals:
                        raise ResourceLimitError(
                            f"more than {max_ideals} ideals in {ring}"
                        )
                    seen[extended.element_values] = extended
                    next_frontier.append(extended)
        frontier = next_frontier
    def order_key(ideal: Ideal):
        return (
            len(ideal.element_values),
            sorted(ring.sort_key(v) for v in ideal.element_values),
        )
    return sorted(seen.values(), key=order_key)


def proper_ideals(ring: Ring, max_ideals: int = DEFAULT_MAX_IDEALS) -> Iterator[Ideal]:
    for ideal in enumerate_ideals(ring, max_ideals):
        if ideal.is_proper:
            yield ideal
