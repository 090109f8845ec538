"""Decision procedures for the n-absorbing property and its consequences.

An ideal I is n-absorbing when every product of n+1 elements that lands
in I already has n of its factors multiplying into I.  The scan here is
exhaustive but works over sorted factor multisets rather than ordered
tuples: the property is permutation-invariant, and a violating tuple
can contain neither a unit (divide it off and the remaining n factors
land in I) nor an element of I (any n factors including it land in I),
so only sorted tuples of non-unit, non-ideal elements need checking.
The first violation found in that order is the lexicographically least
sorted witness, which keeps reports deterministic.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import (
    HypothesisNotSatisfiedError,
    ImproperIdealError,
    ResourceLimitError,
)
from .ideals import Ideal, colon, ideal_power, radical
from .rings import Ring, quotient_ring

DEFAULT_MAX_TUPLES = 10**8
DEFAULT_OMEGA_CAP = 4


# ---------------------------------------------------------------------------
# witnesses and reports


@dataclass(frozen=True)
class AbsorbingWitness:
    """n+1 factors whose product lies in the ideal while no n of them do."""

    elements: tuple
    n: int

    def check(self, ideal: Ideal) -> bool:
        """Recompute the violation directly against the ideal."""
        if len(self.elements) != self.n + 1:
            return False
        return _violates(ideal.ring, ideal.element_values, self.elements)

    def as_dict(self, ring: Ring) -> dict:
        return {
            "elements": [ring.render_value(v) for v in self.elements],
            "n": self.n,
        }


@dataclass(frozen=True)
class AbsorbingReport:
    """Outcome of one n-absorbing scan."""

    n: int
    holds: bool
    mode: str  # "exhaustive" or "sampled"
    witness: Optional[AbsorbingWitness]
    tuples_scanned: int

    def __bool__(self) -> bool:
        return self.holds

    def as_dict(self, ring: Ring) -> dict:
        return {
            "n": self.n,
            "holds": self.holds,
            "mode": self.mode,
            "tuples_scanned": self.tuples_scanned,
            "witness": self.witness.as_dict(ring) if self.witness else None,
        }


def _violates(ring: Ring, ideal_values: frozenset, factors: tuple) -> bool:
    """Product of all factors lies in the ideal, no drop-one product does."""
    mul = ring.mul_values
    product = ring.one_value
    for v in factors:
        product = mul(product, v)
    if product not in ideal_values:
        return False
    m = len(factors)
    prefixes = [ring.one_value] * (m + 1)
    for i in range(m):
        prefixes[i + 1] = mul(prefixes[i], factors[i])
    suffixes = [ring.one_value] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffixes[i] = mul(factors[i], suffixes[i + 1])
    dropped: set = set()
    for i in range(m):
        v = factors[i]
        if v in dropped:
            continue
        dropped.add(v)
        if mul(prefixes[i], suffixes[i + 1]) in ideal_values:
            return False
    return True


# ---------------------------------------------------------------------------
# the scan


@lru_cache(maxsize=None)
def _exhaustive_scan(ideal: Ideal, n: int):
    """(holds, witness_values, multisets_scanned) for the full search."""
    ring = ideal.ring
    units = ring.unit_values()
    members = ideal.element_values
    candidates = [
        v for v in ring.iter_values() if v not in units and v not in members
    ]
    scanned = 0
    for factors in itertools.combinations_with_replacement(candidates, n + 1):
        scanned += 1
        if _violates(ring, members, factors):
            return False, factors, scanned
    return True, None, scanned


def is_n_absorbing(
    ideal: Ideal,
    n: int,
    *,
    max_tuples: int = DEFAULT_MAX_TUPLES,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> AbsorbingReport:
    """Decide whether the ideal is n-absorbing.

    The exhaustive scan runs when |R|^(n+1) stays within `max_tuples`.
    Past the cap a ResourceLimitError is raised unless `samples` asks
    for a randomized scan instead; sampling draws that many uniform
    tuples from R^(n+1) using `seed` (required) and can only ever refute
    the property, so a sampled "holds" is evidence, not proof.
    """
    if n < 1:
        raise ValueError(f"the absorbing level must be at least 1, got {n}")
    if ideal.is_unit:
        raise ImproperIdealError("the absorbing property is defined for proper ideals")
    nominal = ideal.ring.size ** (n + 1)
    if nominal <= max_tuples:
        holds, witness_values, scanned = _exhaustive_scan(ideal, n)
        witness = AbsorbingWitness(witness_values, n) if witness_values else None
        return AbsorbingReport(n, holds, "exhaustive", witness, scanned)
    if samples is None:
        raise ResourceLimitError(
            f"scan of {nominal} tuples exceeds the cap {max_tuples}; "
            "pass samples= to fall back to randomized checking"
        )
    if seed is None:
        raise ValueError("sampled scans need an explicit seed for reproducibility")
    ring = ideal.ring
    values = list(ring.iter_values())
    rng = random.Random(seed)
    members = ideal.element_values
    for drawn in range(1, samples + 1):
        factors = tuple(
            sorted(
                (rng.choice(values) for _ in range(n + 1)),
                key=ring.sort_key,
            )
        )
        if _violates(ring, members, factors):
            return AbsorbingReport(n, False, "sampled", AbsorbingWitness(factors, n), drawn)
    return AbsorbingReport(n, True, "sampled", None, samples)


@dataclass(frozen=True)
class OmegaResult:
    """Least n at which the ideal becomes n-absorbing, up to a cap."""

    value: Optional[int]
    cap: int
    levels: dict  # n -> AbsorbingReport

    def as_dict(self, ring: Ring) -> dict:
        return {
            "omega": self.value,
            "cap": self.cap,
            "levels": {str(n): rep.as_dict(ring) for n, rep in self.levels.items()},
        }


def omega(
    ideal: Ideal,
    cap: int = DEFAULT_OMEGA_CAP,
    *,
    max_tuples: int = DEFAULT_MAX_TUPLES,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> OmegaResult:
    """Scan n = 1, 2, ... up to `cap`; the property is upward monotone,
    so the first level that holds is the minimum.  `value` is None when
    every level up to the cap fails."""
    if cap < 1:
        raise ValueError(f"cap must be at least 1, got {cap}")
    levels: dict[int, AbsorbingReport] = {}
    for n in range(1, cap + 1):
        report = is_n_absorbing(
            ideal, n, max_tuples=max_tuples, samples=samples, seed=seed
        )
        levels[n] = report
        if report.holds:
            return OmegaResult(n, cap, levels)
    return OmegaResult(None, cap, levels)


# ---------------------------------------------------------------------------
# consequences of the absorbing property


def _ideal_summary(ideal: Ideal) -> dict:
    return {
        "generators": [ideal.ring.render_value(v) for v in ideal.generator_values],
        "size": len(ideal.element_values),
    }


@dataclass(frozen=True)
class RadicalPowerReport:
    """Does the n-th power of the radical sit inside the ideal?"""

    n: int
    absorbing: AbsorbingReport
    holds: bool
    counterexample: Optional[object]
    radical: Ideal
    power: Ideal

    def __bool__(self) -> bool:
        return self.holds

    def as_dict(self) -> dict:
        ring = self.radical.ring
        return {
            "n": self.n,
            "absorbing": self.absorbing.as_dict(ring),
            "holds": self.holds,
            "counterexample": (
                ring.render_value(self.counterexample)
                if self.counterexample is not None
                else None
            ),
            "radical": _ideal_summary(self.radical),
            "radical_power": _ideal_summary(self.power),
        }


def check_radical_power(ideal: Ideal, n: int, **scan_options) -> RadicalPowerReport:
    """Verify (radical of I)^n inside I, given that I is n-absorbing.

    Raises HypothesisNotSatisfiedError (tag "n-absorbing") when the
    precondition fails; the report then never claims anything about the
    containment.
    """
    report = is_n_absorbing(ideal, n, **scan_options)
    if not report.holds:
        raise HypothesisNotSatisfiedError(
            f"{n}-absorbing",
            witness=report.witness,
            message=f"the ideal is not {n}-absorbing, so the power bound does not apply",
        )
    ring = ideal.ring
    rad = radical(ideal)
    power = ideal_power(rad, n)
    stray = power.element_values - ideal.element_values
    counterexample = min(stray, key=ring.sort_key) if stray else None
    return RadicalPowerReport(
        n=n,
        absorbing=report,
        holds=not stray,
        counterexample=counterexample,
        radical=rad,
        power=power,
    )


@dataclass(frozen=True)
class ElementPowerReport:
    """Does every radical element have its n-th power in the ideal?"""

    n: int
    absorbing: AbsorbingReport
    holds: bool
    counterexample: Optional[object]
    radical: Ideal

    def __bool__(self) -> bool:
        return self.holds

    def as_dict(self) -> dict:
        ring = self.radical.ring
        return {
            "n": self.n,
            "absorbing": self.absorbing.as_dict(ring),
            "holds": self.holds,
            "counterexample": (
                ring.render_value(self.counterexample)
                if self.counterexample is not None
                else None
            ),
            "radical": _ideal_summary(self.radical),
        }


def check_element_power(ideal: Ideal, n: int, **scan_options) -> ElementPowerReport:
    """Elementwise variant: x^n lies in I for each x in the radical."""
    report = is_n_absorbing(ideal, n, **scan_options)
    if not report.holds:
        raise HypothesisNotSatisfiedError(
            f"{n}-absorbing",
            witness=report.witness,
            message=f"the ideal is not {n}-absorbing, so the power bound does not apply",
        )
    ring = ideal.ring
    rad = radical(ideal)
    counterexample = None
    for x in sorted(rad.element_values, key=ring.sort_key):
        if ring.pow_value(x, n) not in ideal.element_values:
            counterexample = x
            break
    return ElementPowerReport(
        n=n,
        absorbing=report,
        holds=counterexample is None,
        counterexample=counterexample,
        radical=rad,
    )


@dataclass(frozen=True)
class ReductionReport:
    """I in R versus the zero ideal of R/I: the absorbing property and
    the radical power containment must transfer in both directions."""

    n: int
    base: AbsorbingReport
    quotient: AbsorbingReport
    base_power_contained: bool
    quotient_power_zero: bool
    holds: bool

    def __bool__(self) -> bool:
        return self.holds


def check_quotient_reduction(ideal: Ideal, n: int, **scan_options) -> ReductionReport:
    """Check that I is n-absorbing exactly when the zero ideal of R/I is,
    and that (radical of I)^n lands in I exactly when the corresponding
    power vanishes in the quotient."""
    if ideal.is_unit:
        raise ImproperIdealError("reduction needs a proper ideal")
    base_report = is_n_absorbing(ideal, n, **scan_options)
    quotient = quotient_ring(ideal.ring, ideal)
    zero = Ideal.zero(quotient)
    quotient_report = is_n_absorbing(zero, n, **scan_options)
    base_power = ideal_power(radical(ideal), n)
    base_power_contained = base_power.element_values <= ideal.element_values
    quotient_power_zero = ideal_power(radical(zero), n).is_zero
    return ReductionReport(
        n=n,
        base=base_report,
        quotient=quotient_report,
        base_power_contained=base_power_contained,
        quotient_power_zero=quotient_power_zero,
        holds=(
            base_report.holds == quotient_report.holds
            and base_power_contained == quotient_power_zero
        ),
    )


# ---------------------------------------------------------------------------
# colon-ideal consequences (need: 3-absorbing, radical prime)


def _require_colon_preconditions(ideal: Ideal, scan_options: dict) -> tuple:
    report = is_n_absorbing(ideal, 3, **scan_options)
    if not report.holds:
        raise HypothesisNotSatisfiedError(
            "3-absorbing",
            witness=report.witness,
            message="the ideal is not 3-absorbing",
        )
    rad = radical(ideal)
    if not rad.is_prime():
        raise HypothesisNotSatisfiedError(
            "radical-prime",
            witness=tuple(rad.generator_values),
            message="the radical of the ideal is not prime",
        )
    return report, rad


@dataclass(frozen=True)
class ColonEntry:
    """One colon ideal (I : x) for a radical element x."""

    x: object
    skipped: bool
    reason: Optional[str]
    colon: Optional[Ideal]
    report: Optional[AbsorbingReport]

    def as_dict(self, ring: Ring) -> dict:
        out: dict = {"x": ring.render_value(self.x), "skipped": self.skipped}
        if self.skipped:
            out["reason"] = self.reason
        else:
            out["colon"] = _ideal_summary(self.colon)
            out["report"] = self.report.as_dict(ring)
        return out


@dataclass(frozen=True)
class ColonsReport:
    """Every colon by a radical element outside I is 2-absorbing."""

    holds: bool
    entries: tuple
    precondition: AbsorbingReport

    def __bool__(self) -> bool:
        return self.holds

    def as_dict(self, ring: Ring) -> dict:
        return {
            "holds": self.holds,
            "entries": [e.as_dict(ring) for e in self.entries],
            "precondition": self.precondition.as_dict(ring),
        }


def check_colons_two_absorbing(ideal: Ideal, **scan_options) -> ColonsReport:
    """For a 3-absorbing ideal with prime radical, each (I : x) with x in
    the radical but outside I must be 2-absorbing.  Elements of I are
    skipped: their colon is the unit ideal."""
    precondition, rad = _require_colon_preconditions(ideal, scan_options)
    ring = ideal.ring
    entries: list[ColonEntry] = []
    for x in sorted(rad.element_values, key=ring.sort_key):
        if x in ideal.element_values:
            entries.append(
                ColonEntry(
                    x=x,
                    skipped=True,
                    reason="element lies in the ideal, colon is the unit ideal",
                    colon=None,
                    report=None,
                )
            )
            continue
        quotient_ideal = colon(ideal, x)
        report = is_n_absorbing(quotient_ideal, 2, **scan_options)
        entries.append(
            ColonEntry(x=x, skipped=False, reason=None, colon=quotient_ideal, report=report)
        )
    holds = all(e.skipped or e.report.holds for e in entries)
    return ColonsReport(holds=holds, entries=tuple(entries), precondition=precondition)


@dataclass(frozen=True)
class ChainEntry:
    """Colon by one product of two radical elements."""

    product: object
    factors: tuple
    colon: Ideal
    prime: bool

    def as_dict(self, ring: Ring) -> dict:
        return {
            "product": ring.render_value(self.product),
            "factors": [ring.render_value(v) for v in self.factors],
            "colon": _ideal_summary(self.colon),
            "prime": self.prime,
        }


@dataclass(frozen=True)
class ChainReport:
    """Colons by two-factor radical products are prime and form a chain."""

    holds: bool
    entries: tuple
    incomparable: tuple  # pairs of product values whose colons are incomparable
    precondition: AbsorbingReport

    def __bool__(self) -> bool:
        return self.holds

    def as_dict(self, ring: Ring) -> dict:
        return {
            "holds": self.holds,
            "entries": [e.as_dict(ring) for e in self.entries],
            "incomparable": [
                [ring.render_value(a), ring.render_value(b)]
                for a, b in self.incomparable
            ],
            "precondition": self.precondition.as_dict(ring),
        }


def check_colon_chain(ideal: Ideal, **scan_options) -> ChainReport:
    """For a 3-absorbing ideal with prime radical, the colons (I : xy)
    over two-factor products of radical elements with xy outside I must
    all be prime and pairwise comparable.  Products are deduplicated by
    value; products inside I are skipped (their colon is the unit ideal)."""
    precondition, rad = _require_colon_preconditions(ideal, scan_options)
    ring = ideal.ring
    rad_values = sorted(rad.element_values, key=ring.sort_key)
    first_factors: dict = {}
    for x, y in itertools.combinations_with_replacement(rad_values, 2):
        p = ring.mul_values(x, y)
        if p in ideal.element_values:
            continue
        if p not in first_factors:
            first_factors[p] = (x, y)
    entries: list[ChainEntry] = []
    colons: dict = {}
    for p in sorted(first_factors, key=ring.sort_key):
        c = colon(ideal, p)
        colons[p] = c
        entries.append(
            ChainEntry(product=p, factors=first_factors[p], colon=c, prime=c.is_prime())
        )
    incomparable: list[tuple] = []
    products = sorted(colons, key=ring.sort_key)
    for a, b in itertools.combinations(products, 2):
        ca, cb = colons[a], colons[b]
        if not (ca.element_values <= cb.element_values or cb.element_values <= ca.element_values):
            incomparable.append((a, b))
    holds = all(e.prime for e in entries) and not incomparable
    return ChainReport(
        holds=holds,
        entries=tuple(entries),
        incomparable=tuple(incomparable),
        precondition=precondition,
    )
