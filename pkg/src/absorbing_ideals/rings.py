"""Finite commutative unital rings with canonical element enumeration.

Four structural kinds are supported: integers mod n, a prime field
polynomial ring modulo a monic polynomial, finite direct products, and
quotients by a finitely generated ideal.  Every ring enumerates its
elements in one fixed total order, which makes all exhaustive searches
downstream deterministic.  Elements are plain hashable payloads (ints,
coefficient tuples, component tuples) wrapped in `RingElement` for
arithmetic; value-level methods on the ring are the fast path.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (
    ImproperIdealError,
    MixedRingError,
    ParseError,
    RingBuildError,
)

DEFAULT_MAX_RING_SIZE = 4096


# ---------------------------------------------------------------------------
# descriptors


@dataclass(frozen=True)
class ZMod:
    """Integers modulo n, for n >= 2."""

    n: int


@dataclass(frozen=True)
class PolyQuot:
    """(Z/p)[x] modulo a monic polynomial of degree >= 1.

    `modulus` lists coefficients from the constant term upward and must
    end with the leading 1.
    """

    p: int
    modulus: tuple[int, ...]


@dataclass(frozen=True)
class Product:
    """Direct product of finitely many rings, leftmost factor first."""

    factors: tuple["RingDescriptor", ...]


@dataclass(frozen=True)
class Quotient:
    """Quotient of `base` by the ideal generated by `generators`.

    Generators are element values of the base ring.
    """

    base: "RingDescriptor"
    generators: tuple


RingDescriptor = ZMod | PolyQuot | Product | Quotient


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, math.isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


def descriptor_size(desc: RingDescriptor) -> int:
    """Element count a descriptor would produce, without building it."""
    if isinstance(desc, ZMod):
        return desc.n
    if isinstance(desc, PolyQuot):
        return desc.p ** (len(desc.modulus) - 1)
    if isinstance(desc, Product):
        out = 1
        for f in desc.factors:
            out *= descriptor_size(f)
        return out
    if isinstance(desc, Quotient):
        # exact size needs the ideal; the base size is an upper bound
        return descriptor_size(desc.base)
    raise TypeError(f"not a ring descriptor: {desc!r}")


# ---------------------------------------------------------------------------
# element wrapper


class RingElement:
    """An element of a specific ring, stored in canonical form."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: "Ring", value):
        self.ring = ring
        self.value = value

    def _other(self, other) -> "RingElement":
        if not isinstance(other, RingElement):
            raise TypeError(f"cannot combine ring element with {type(other).__name__}")
        if self.ring != other.ring:
            raise MixedRingError(
                f"elements of {self.ring} and {other.ring} cannot be combined"
            )
        return other

    def __add__(self, other):
        other = self._other(other)
        return RingElement(self.ring, self.ring.add_values(self.value, other.value))

    def __sub__(self, other):
        other = self._other(other)
        return RingElement(
            self.ring,
            self.ring.add_values(self.value, self.ring.neg_value(other.value)),
        )

    def __mul__(self, other):
        other = self._other(other)
        return RingElement(self.ring, self.ring.mul_values(self.value, other.value))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg_value(self.value))

    def __pow__(self, k: int):
        return RingElement(self.ring, self.ring.pow_value(self.value, k))

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.value == other.value

    def __hash__(self):
        return hash((self.ring, self.value))

    def __bool__(self):
        return self.value != self.ring.zero_value

    def __lt__(self, other):
        other = self._other(other)
        return self.ring.sort_key(self.value) < self.ring.sort_key(other.value)

    def __le__(self, other):
        other = self._other(other)
        return self.ring.sort_key(self.value) <= self.ring.sort_key(other.value)

    @property
    def is_zero(self) -> bool:
        return self.value == self.ring.zero_value

    def text(self) -> str:
        return self.ring.render_value(self.value)

    def __repr__(self):
        return f"<{self.text()} in {self.ring}>"


# ---------------------------------------------------------------------------
# ring base class


class Ring:
    """Common interface; subclasses implement value-level arithmetic."""

    descriptor: RingDescriptor
    size: int

    def __init__(self):
        self._units: frozenset | None = None

    # value-level ops -------------------------------------------------

    def add_values(self, a, b):
        raise NotImplementedError

    def mul_values(self, a, b):
        raise NotImplementedError

    def neg_value(self, a):
        raise NotImplementedError

    def pow_value(self, a, k: int):
        # repeated squaring; k = 0 gives the identity
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        result = self.one_value
        base = a
        while k:
            if k & 1:
                result = self.mul_values(result, base)
            base = self.mul_values(base, base)
            k >>= 1
        return result

    @property
    def zero_value(self):
        raise NotImplementedError

    @property
    def one_value(self):
        raise NotImplementedError

    def iter_values(self) -> Iterator:
        raise NotImplementedError

    def sort_key(self, value):
        raise NotImplementedError

    def contains_value(self, value) -> bool:
        raise NotImplementedError

    def render_value(self, value) -> str:
        raise NotImplementedError

    def parse_value(self, text: str):
        raise NotImplementedError

    # derived helpers ---------------------------------------------------

    def unit_values(self) -> frozenset:
        """Set of invertible element values (computed once, cached)."""
        if self._units is None:
            one = self.one_value
            units: set = set()
            vals = tuple(self.iter_values())
            for a in vals:
                if a in units:
                    continue
                for b in vals:
                    if self.mul_values(a, b) == one:
                        units.add(a)
                        units.add(b)
                        break
            self._units = frozenset(units)
        return self._units

    def product_of_values(self, values: Sequence):
        out = self.one_value
        for v in values:
            out = self.mul_values(out, v)
        return out

    # wrapper layer -----------------------------------------------------

    @property
    def zero(self) -> RingElement:
        return RingElement(self, self.zero_value)

    @property
    def one(self) -> RingElement:
        return RingElement(self, self.one_value)

    def wrap(self, value) -> RingElement:
        return RingElement(self, value)

    def element(self, value) -> RingElement:
        if not self.contains_value(value):
            raise ValueError(f"{value!r} is not an element of {self}")
        return RingElement(self, value)

    def elements(self) -> list[RingElement]:
        """All elements, wrapped, in canonical order."""
        return [RingElement(self, v) for v in self.iter_values()]

    def __eq__(self, other):
        if not isinstance(other, Ring):
            return NotImplemented
        return self.descriptor == other.descriptor

    def __hash__(self):
        return hash(self.descriptor)

    def __repr__(self):
        return f"{type(self).__name__}({self.descriptor!r})"


# ---------------------------------------------------------------------------
# element text helpers


def split_top_level(text: str) -> list[str]:
    """Split on commas that are not nested inside (), [] or {}."""
    chunks: list[str] = []
    depth = 0
    current: list[str] = []
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced delimiter in {text!r}")
        if ch == "," and depth == 0:
            chunks.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise ParseError(f"unbalanced delimiter in {text!r}")
    tail = "".join(current).strip()
    if tail or chunks:
        chunks.append(tail)
    return chunks


def _parse_int(text: str) -> int:
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}") from None


# ---------------------------------------------------------------------------
# concrete rings


class ZModRing(Ring):
    """Residues 0..n-1 with arithmetic mod n."""

    def __init__(self, n: int):
        super().__init__()
        self.n = n
        self.descriptor = ZMod(n)
        self.size = n

    def add_values(self, a, b):
        return (a + b) % self.n

    def mul_values(self, a, b):
        return (a * b) % self.n

    def neg_value(self, a):
        return (-a) % self.n

    def pow_value(self, a, k):
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        return pow(a, k, self.n)

    @property
    def zero_value(self):
        return 0

    @property
    def one_value(self):
        return 1

    def iter_values(self):
        return iter(range(self.n))

    def sort_key(self, value):
        return value

    def contains_value(self, value):
        return isinstance(value, int) and not isinstance(value, bool) and 0 <= value < self.n

    def render_value(self, value):
        return str(value)

    def parse_value(self, text):
        v = _parse_int(text)
        if not 0 <= v < self.n:
            raise ParseError(f"residue {v} outside [0, {self.n})")
        return v


class PolyQuotRing(Ring):
    """(Z/p)[x] mod a monic modulus; values are coefficient tuples.

    A value lists the coefficients of 1, x, ..., x^(d-1) where d is the
    modulus degree.  The canonical order reads a tuple as a base-p
    integer with the constant coefficient least significant.
    """

    def __init__(self, p: int, modulus: tuple[int, ...]):
        super().__init__()
        self.p = p
        self.modulus = tuple(modulus)
        self.degree = len(self.modulus) - 1
        self.descriptor = PolyQuot(p, self.modulus)
        self.size = p ** self.degree

    def add_values(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def mul_values(self, a, b):
        p = self.p
        d = self.degree
        conv = [0] * (2 * d - 1) if d > 1 else [0]
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] = (conv[i + j] + x * y) % p
        # reduce by the monic modulus, top degree first
        for deg in range(len(conv) - 1, d - 1, -1):
            c = conv[deg]
            if c:
                conv[deg] = 0
                base = deg - d
                for j, m in enumerate(self.modulus[:-1]):
                    if m:
                        conv[base + j] = (conv[base + j] - c * m) % p
        return tuple(conv[:d])

    def neg_value(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    @property
    def zero_value(self):
        return (0,) * self.degree

    @property
    def one_value(self):
        return (1,) + (0,) * (self.degree - 1)

    def iter_values(self):
        p, d = self.p, self.degree
        for i in range(self.size):
            digits = []
            n = i
            for _ in range(d):
                digits.append(n % p)
                n //= p
            yield tuple(digits)

    def sort_key(self, value):
        key = 0
        for c in reversed(value):
            key = key * self.p + c
        return key

    def contains_value(self, value):
        return (
            isinstance(value, tuple)
            and len(value) == self.degree
            and all(isinstance(c, int) and 0 <= c < self.p for c in value)
        )

    def render_value(self, value):
        return "[" + ",".join(str(c) for c in value) + "]"

    def parse_value(self, text):
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ParseError(f"polynomial element must look like [c0,c1,...], got {text!r}")
        inner = text[1:-1].strip()
        coeffs = [_parse_int(c) for c in split_top_level(inner)] if inner else []
        if len(coeffs) > self.degree:
            raise ParseError(
                f"coefficient list longer than modulus degree {self.degree}"
            )
        for c in coeffs:
            if not 0 <= c < self.p:
                raise ParseError(f"coefficient {c} outside [0, {self.p})")
        coeffs.extend([0] * (self.degree - len(coeffs)))
        return tuple(coeffs)


class ProductRing(Ring):
    """Componentwise arithmetic on tuples, leftmost factor first."""

    def __init__(self, factors: Sequence[Ring]):
        super().__init__()
        self.factors = tuple(factors)
        self.descriptor = Product(tuple(f.descriptor for f in self.factors))
        self.size = math.prod(f.size for f in self.factors)

    def add_values(self, a, b):
        return tuple(f.add_values(x, y) for f, x, y in zip(self.factors, a, b))

    def mul_values(self, a, b):
        return tuple(f.mul_values(x, y) for f, x, y in zip(self.factors, a, b))

    def neg_value(self, a):
        return tuple(f.neg_value(x) for f, x in zip(self.factors, a))

    def pow_value(self, a, k):
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        return tuple(f.pow_value(x, k) for f, x in zip(self.factors, a))

    @property
    def zero_value(self):
        return tuple(f.zero_value for f in self.factors)

    @property
    def one_value(self):
        return tuple(f.one_value for f in self.factors)

    def iter_values(self):
        return itertools.product(*(f.iter_values() for f in self.factors))

    def sort_key(self, value):
        return tuple(f.sort_key(x) for f, x in zip(self.factors, value))

    def contains_value(self, value):
        return (
            isinstance(value, tuple)
            and len(value) == len(self.factors)
            and all(f.contains_value(x) for f, x in zip(self.factors, value))
        )

    def render_value(self, value):
        return "(" + ",".join(f.render_value(x) for f, x in zip(self.factors, value)) + ")"

    def parse_value(self, text):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise ParseError(f"product element must look like (a,b,...), got {text!r}")
        chunks = split_top_level(text[1:-1])
        if len(chunks) != len(self.factors):
            raise ParseError(
                f"expected {len(self.factors)} components, got {len(chunks)}"
            )
        return tuple(f.parse_value(c) for f, c in zip(self.factors, chunks))


class QuotientRing(Ring):
    """Cosets of an ideal, represented by their least member.

    The representative of a coset is its minimum under the base ring's
    canonical order; arithmetic maps back through that choice.
    """

    def __init__(self, base: Ring, ideal_values: Iterable):
        super().__init__()
        ideal_values = frozenset(ideal_values)
        for v in ideal_values:
            if not base.contains_value(v):
                raise ValueError(f"{v!r} is not an element of the base ring")
        if base.zero_value not in ideal_values:
            raise ValueError("ideal element set must contain zero")
        if base.one_value in ideal_values:
            raise ImproperIdealError(
                "quotient by the unit ideal would be the zero ring"
            )
        self.base = base
        self.ideal_values = ideal_values
        reps: dict = {}
        order: list = []
        for v in base.iter_values():
            # first visit in ascending canonical order is the coset minimum
            if v in reps:
                continue
            order.append(v)
            for i in ideal_values:
                reps[base.add_values(v, i)] = v
        self._reps = reps
        self._values = tuple(order)
        self.size = len(order)
        self.descriptor = Quotient(
            base.descriptor, tuple(sorted(ideal_values, key=base.sort_key))
        )

    # surjection and preimage -------------------------------------------

    def project_value(self, base_value):
        return self._reps[base_value]

    def project(self, elem: RingElement) -> RingElement:
        if elem.ring != self.base:
            raise MixedRingError("element does not belong to the base ring")
        return RingElement(self, self._reps[elem.value])

    def preimage_values(self, quotient_values: Iterable) -> frozenset:
        target = set(quotient_values)
        return frozenset(v for v in self.base.iter_values() if self._reps[v] in target)

    # ring interface -----------------------------------------------------

    def add_values(self, a, b):
        return self._reps[self.base.add_values(a, b)]

    def mul_values(self, a, b):
        return self._reps[self.base.mul_values(a, b)]

    def neg_value(self, a):
        return self._reps[self.base.neg_value(a)]

    @property
    def zero_value(self):
        return self._reps[self.base.zero_value]

    @property
    def one_value(self):
        return self._reps[self.base.one_value]

    def iter_values(self):
        return iter(self._values)

    def sort_key(self, value):
        return self.base.sort_key(value)

    def contains_value(self, value):
        return self._reps.get(value) == value

    def render_value(self, value):
        return self.base.render_value(value)

    def parse_value(self, text):
        return self._reps[self.base.parse_value(text)]


# ---------------------------------------------------------------------------
# ideal closure at value level (shared with ideal_ops)


def additive_closure_values(ring: Ring, items: Iterable) -> frozenset:
    """Subgroup of (R, +) generated by `items`."""
    group: set = {ring.zero_value}
    for g in items:
        if g in group:
            continue
        cycle = []
        x = g
        while x != ring.zero_value:
            cycle.append(x)
            x = ring.add_values(x, g)
        group |= {ring.add_values(s, c) for s in group for c in cycle}
    return frozenset(group)


def generated_ideal_values(ring: Ring, generator_values: Iterable) -> frozenset:
    """Element set of the ideal generated by the given values.

    The ideal equals the additive closure of all ring multiples of the
    generators; that set is already closed under multiplication by
    arbitrary ring elements.
    """
    gens = list(generator_values)
    for g in gens:
        if not ring.contains_value(g):
            raise ValueError(f"{g!r} is not an element of {ring}")
    multiples = {ring.mul_values(r, g) for g in gens for r in ring.iter_values()}
    return additive_closure_values(ring, multiples)


# ---------------------------------------------------------------------------
# construction


def validate_descriptor(desc: RingDescriptor, max_size: int = DEFAULT_MAX_RING_SIZE) -> None:
    """Raise RingBuildError naming the first violated constraint."""
    if isinstance(desc, ZMod):
        if desc.n < 2:
            raise RingBuildError(f"modulus must be at least 2, got {desc.n}")
    elif isinstance(desc, PolyQuot):
        if not _is_prime(desc.p):
            raise RingBuildError(f"characteristic must be prime, got {desc.p}")
        if len(desc.modulus) < 2:
            raise RingBuildError("modulus must have degree at least 1")
        if desc.modulus[-1] != 1:
            raise RingBuildError(
                f"modulus must be monic, leading coefficient is {desc.modulus[-1]}"
            )
        for c in desc.modulus:
            if not isinstance(c, int) or not 0 <= c < desc.p:
                raise RingBuildError(
                    f"modulus coefficient {c!r} outside [0, {desc.p})"
                )
    elif isinstance(desc, Product):
        if not desc.factors:
            raise RingBuildError("product needs at least one factor")
        for f in desc.factors:
            validate_descriptor(f, max_size)
    elif isinstance(desc, Quotient):
        validate_descriptor(desc.base, max_size)
    else:
        raise RingBuildError(f"not a ring descriptor: {desc!r}")
    size = descriptor_size(desc)
    if size > max_size:
        raise RingBuildError(f"ring size {size} exceeds the cap {max_size}")


@lru_cache(maxsize=None)
def _build_ring_cached(desc: RingDescriptor, max_size: int) -> Ring:
    validate_descriptor(desc, max_size)
    if isinstance(desc, ZMod):
        return ZModRing(desc.n)
    if isinstance(desc, PolyQuot):
        return PolyQuotRing(desc.p, desc.modulus)
    if isinstance(desc, Product):
        return ProductRing([_build_ring_cached(f, max_size) for f in desc.factors])
    base = _build_ring_cached(desc.base, max_size)
    ideal_values = generated_ideal_values(base, desc.generators)
    return QuotientRing(base, ideal_values)


def build_ring(desc: RingDescriptor, max_size: int = DEFAULT_MAX_RING_SIZE) -> Ring:
    """Materialize a descriptor, enforcing the element count cap."""
    return _build_ring_cached(desc, max_size)


def quotient_ring(ring: Ring, ideal) -> QuotientRing:
    """Quotient of `ring` by an ideal given as an Ideal or a value set.

    The result carries the canonical surjection (`project`) and preimage
    (`preimage_values`) maps.
    """
    if hasattr(ideal, "element_values"):
        values = ideal.element_values
    else:
        values = frozenset(ideal)
    return QuotientRing(ring, values)
