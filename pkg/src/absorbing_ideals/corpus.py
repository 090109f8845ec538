"""Built-in ring corpus and systematic audits over it.

`run_battery` sweeps every ideal of every corpus ring and records, per
ideal: the least absorbing level within a cap, monotonicity of the
property in n, the radical power and element power bounds at that
level, sharpness of the power bound one level down, agreement between
the ideal and the zero ideal of the quotient ring, and (where the
preconditions hold) the two colon-ideal consequences.  `trace_survey`
generates and independently replays derivation traces over tuples of
nilpotents, and `zero_diagonal_survey` stress-tests the diagonal walk
on upper triangular matrices.  None of the report structures contain
timing or other nondeterministic data.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .absorbing import (
    check_colon_chain,
    check_colons_two_absorbing,
    check_quotient_reduction,
    is_n_absorbing,
    omega,
)
from .errors import (
    HypothesisNotSatisfiedError,
    InvariantViolationError,
    LemmaPreconditionError,
)
from .ideals import Ideal, enumerate_ideals, ideal_power, radical
from .machinery import (
    SquareMatrix,
    find_zero_diagonal,
    is_projectively_zero,
    prove_radical_power_zero,
    verify_trace,
)
from .rings import build_ring
from .ringspec import parse_ring_spec, render_ring_spec

BUILTIN_CORPUS: tuple[str, ...] = tuple(
    [f"Zmod:{n}" for n in range(2, 37)]
    + [
        "PolyQuot:{p:2,poly:[0,0,1]}",
        "PolyQuot:{p:2,poly:[0,0,0,1]}",
        "PolyQuot:{p:3,poly:[0,0,1]}",
        "PolyQuot:{p:3,poly:[0,0,0,1]}",
        "Product:[Zmod:4,Zmod:3]",
        "Product:[Zmod:2,Zmod:2]",
    ]
)

DEFAULT_BATTERY_CAP = 4


@dataclass(frozen=True)
class IdealAudit:
    """Everything the battery checks about one ideal."""

    ideal_text: str
    size: int
    skipped: bool
    skip_reason: Optional[str]
    omega_value: Optional[int]
    omega_cap: int
    levels: dict  # n -> AbsorbingReport.as_dict
    monotone_ok: Optional[bool]
    radical_text: Optional[str]
    radical_size: Optional[int]
    radical_power_ok: Optional[bool]
    element_power_ok: Optional[bool]
    sharp: Optional[bool]
    reduction_ok: Optional[bool]
    colons_ok: Optional[bool]
    chain_ok: Optional[bool]

    @property
    def ok(self) -> bool:
        """No audited property came out false (inapplicable ones pass)."""
        if self.skipped:
            return True
        checks = (
            self.monotone_ok,
            self.radical_power_ok,
            self.element_power_ok,
            self.reduction_ok,
            self.colons_ok,
            self.chain_ok,
        )
        return all(c is not False for c in checks)

    def as_dict(self) -> dict:
        return {
            "ideal": self.ideal_text,
            "size": self.size,
            "skipped": self.skipped,
            "skip_reason": self.skip_reason,
            "omega": self.omega_value,
            "omega_cap": self.omega_cap,
            "levels": self.levels,
            "monotone_ok": self.monotone_ok,
            "radical": self.radical_text,
            "radical_size": self.radical_size,
            "radical_power_ok": self.radical_power_ok,
            "element_power_ok": self.element_power_ok,
            "sharp": self.sharp,
            "reduction_ok": self.reduction_ok,
            "colons_ok": self.colons_ok,
            "chain_ok": self.chain_ok,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class RingAudit:
    """Battery results for every ideal of one ring."""

    ring_spec: str
    size: int
    ideal_count: int
    audits: tuple

    @property
    def ok(self) -> bool:
        return all(a.ok for a in self.audits)

    def as_dict(self) -> dict:
        return {
            "ring": self.ring_spec,
            "size": self.size,
            "ideal_count": self.ideal_count,
            "ideals": [a.as_dict() for a in self.audits],
            "ok": self.ok,
        }


def audit_ideal(ideal: Ideal, cap: int = DEFAULT_BATTERY_CAP, **scan_options) -> IdealAudit:
    """Run the full per-ideal check list; the unit ideal is only noted."""
    ring = ideal.ring
    if ideal.is_unit:
        return IdealAudit(
            ideal_text=ideal.text(),
            size=len(ideal),
            skipped=True,
            skip_reason="unit ideal: the absorbing property is defined for proper ideals",
            omega_value=None,
            omega_cap=cap,
            levels={},
            monotone_ok=None,
            radical_text=None,
            radical_size=None,
            radical_power_ok=None,
            element_power_ok=None,
            sharp=None,
            reduction_ok=None,
            colons_ok=None,
            chain_ok=None,
        )

    reports = {n: is_n_absorbing(ideal, n, **scan_options) for n in range(1, cap + 1)}
    monotone_ok = all(
        not (reports[n].holds and not reports[n + 1].holds) for n in range(1, cap)
    )
    omega_value = next((n for n in range(1, cap + 1) if reports[n].holds), None)

    rad = radical(ideal)
    radical_power_ok = element_power_ok = sharp = None
    if omega_value is not None:
        power = ideal_power(rad, omega_value)
        radical_power_ok = power.element_values <= ideal.element_values
        element_power_ok = all(
            ring.pow_value(x, omega_value) in ideal.element_values
            for x in rad.element_values
        )
        if omega_value > 1:
            lower = ideal_power(rad, omega_value - 1)
            sharp = not lower.element_values <= ideal.element_values

    reduction_ok = all(
        check_quotient_reduction(ideal, n, **scan_options).holds
        for n in range(1, cap + 1)
    )

    colons_ok = chain_ok = None
    try:
        colons_ok = check_colons_two_absorbing(ideal, **scan_options).holds
    except HypothesisNotSatisfiedError:
        pass
    try:
        chain_ok = check_colon_chain(ideal, **scan_options).holds
    except HypothesisNotSatisfiedError:
        pass

    return IdealAudit(
        ideal_text=ideal.text(),
        size=len(ideal),
        skipped=False,
        skip_reason=None,
        omega_value=omega_value,
        omega_cap=cap,
        levels={str(n): reports[n].as_dict(ring) for n in reports},
        monotone_ok=monotone_ok,
        radical_text=rad.text(),
        radical_size=len(rad),
        radical_power_ok=radical_power_ok,
        element_power_ok=element_power_ok,
        sharp=sharp,
        reduction_ok=reduction_ok,
        colons_ok=colons_ok,
        chain_ok=chain_ok,
    )


def run_ring_audit(
    spec_text: str,
    cap: int = DEFAULT_BATTERY_CAP,
    max_ring_size: int = 4096,
    **scan_options,
) -> RingAudit:
    descriptor = parse_ring_spec(spec_text, max_size=max_ring_size)
    ring = build_ring(descriptor, max_size=max_ring_size)
    ideals = enumerate_ideals(ring)
    audits = tuple(audit_ideal(ideal, cap, **scan_options) for ideal in ideals)
    return RingAudit(
        ring_spec=render_ring_spec(ring.descriptor),
        size=ring.size,
        ideal_count=len(ideals),
        audits=audits,
    )


def run_battery(
    specs: Sequence[str] = BUILTIN_CORPUS,
    cap: int = DEFAULT_BATTERY_CAP,
    max_ring_size: int = 4096,
    **scan_options,
) -> list[RingAudit]:
    return [run_ring_audit(s, cap, max_ring_size, **scan_options) for s in specs]


def battery_report(audits: Sequence[RingAudit]) -> dict:
    return {
        "rings": [a.as_dict() for a in audits],
        "ok": all(a.ok for a in audits),
    }


# ---------------------------------------------------------------------------
# trace survey


def trace_survey(
    spec_text: str,
    *,
    seed: int = 0,
    limit: int = 200,
    cap: int = DEFAULT_BATTERY_CAP,
    short_circuit: bool = True,
    max_ring_size: int = 4096,
    **prove_options,
) -> dict:
    """Generate and replay derivation traces for one ring's zero ideal.

    Trace generators range over tuples of nilpotents, all of them when
    there are at most `limit`, otherwise `limit` seeded random draws.
    Every trace must replay cleanly, and the radical power identity is
    cross-checked by plain ideal arithmetic.
    """
    descriptor = parse_ring_spec(spec_text, max_size=max_ring_size)
    ring = build_ring(descriptor, max_size=max_ring_size)
    spec = render_ring_spec(ring.descriptor)
    zero = Ideal.zero(ring)
    result = omega(zero, cap)
    if result.value is None:
        return {
            "ring": spec,
            "omega": None,
            "skipped": f"the zero ideal is not n-absorbing for any n up to {cap}",
        }
    n = result.value
    rad = radical(zero)
    nilpotents = sorted(rad.element_values, key=ring.sort_key)
    total = len(nilpotents) ** n
    if total <= limit:
        mode = "exhaustive"
        tuples = list(itertools.product(nilpotents, repeat=n))
    else:
        mode = "sampled"
        rng = random.Random(seed)
        tuples = [
            tuple(rng.choice(nilpotents) for _ in range(n)) for _ in range(limit)
        ]
    verified = 0
    total_steps = 0
    failures: list[dict] = []
    for gens in tuples:
        trace = prove_radical_power_zero(
            ring, gens, short_circuit=short_circuit, **prove_options
        )
        total_steps += len(trace.steps)
        replay = verify_trace(trace)
        if replay.ok:
            verified += 1
        else:
            failures.append(
                {
                    "generators": [ring.render_value(g) for g in gens],
                    "failures": list(replay.failures),
                }
            )
    survey = {
        "ring": spec,
        "omega": n,
        "nilpotent_count": len(nilpotents),
        "mode": mode,
        "tuples_checked": len(tuples),
        "verified": verified,
        "failed": len(failures),
        "failures": failures,
        "total_steps": total_steps,
        "radical_power_zero": ideal_power(rad, n).is_zero,
    }
    if mode == "sampled":
        survey["seed"] = seed
    return survey


# ---------------------------------------------------------------------------
# diagonal walk survey


def zero_diagonal_survey(
    spec_text: str,
    m: int,
    *,
    feasibility: int = 10**6,
    sample_size: int = 10**4,
    seed: int = 0,
    max_ring_size: int = 4096,
) -> dict:
    """Stress the diagonal walk on upper triangular m x m matrices.

    For each matrix the zero-coordinate property is decided exhaustively,
    then the walk runs.  Lemma violations, all tallied: the property
    holds but the walk fails or takes more than m+1 probes; the walk
    certifies a diagonal entry that direct arithmetic says is nonzero;
    or the property holds although no diagonal entry is zero at all.
    Matrices are enumerated exhaustively while |R|^(m*m) stays within
    `feasibility`, otherwise `sample_size` of them are drawn with the
    given seed.
    """
    if m < 1:
        raise ValueError(f"matrix size must be at least 1, got {m}")
    descriptor = parse_ring_spec(spec_text, max_size=max_ring_size)
    ring = build_ring(descriptor, max_size=max_ring_size)
    values = list(ring.iter_values())
    zero = ring.zero_value
    cells = [(i, j) for i in range(m) for j in range(i, m)]

    def rows_from(assignment) -> list[list]:
        rows = [[zero] * m for _ in range(m)]
        for (i, j), v in zip(cells, assignment):
            rows[i][j] = v
        return rows

    if len(values) ** (m * m) <= feasibility:
        mode = "exhaustive"
        assignments = itertools.product(values, repeat=len(cells))
        planned = len(values) ** len(cells)
    else:
        mode = "sampled"
        rng = random.Random(seed)
        assignments = (
            tuple(rng.choice(values) for _ in cells) for _ in range(sample_size)
        )
        planned = sample_size

    checked = 0
    walk_succeeded = 0
    walk_rejected = 0
    property_count = 0
    all_nonzero_diagonal_count = 0
    violations: list[dict] = []
    for assignment in assignments:
        checked += 1
        matrix = SquareMatrix(ring, rows_from(assignment))
        property_holds = is_projectively_zero(matrix).holds
        diagonal_all_nonzero = all(matrix.rows[i][i] != zero for i in range(m))
        if property_holds:
            property_count += 1
        if diagonal_all_nonzero:
            all_nonzero_diagonal_count += 1
            if property_holds:
                violations.append(
                    {
                        "matrix": matrix.rendered_rows(),
                        "problem": "property holds but every diagonal entry is nonzero",
                    }
                )
                continue
        try:
            walk = find_zero_diagonal(matrix)
        except (LemmaPreconditionError, InvariantViolationError) as exc:
            if property_holds:
                violations.append(
                    {
                        "matrix": matrix.rendered_rows(),
                        "problem": f"property holds but the walk failed: {exc}",
                    }
                )
            else:
                walk_rejected += 1
            continue
        if matrix.rows[walk.index][walk.index] != zero:
            violations.append(
                {
                    "matrix": matrix.rendered_rows(),
                    "problem": f"walk certified nonzero entry ({walk.index},{walk.index})",
                }
            )
        elif len(walk.j_sequence) > m + 1:
            violations.append(
                {
                    "matrix": matrix.rendered_rows(),
                    "problem": f"walk needed {len(walk.j_sequence)} probes for m = {m}",
                }
            )
        else:
            walk_succeeded += 1
    survey = {
        "ring": render_ring_spec(ring.descriptor),
        "m": m,
        "mode": mode,
        "matrices_planned": planned,
        "matrices_checked": checked,
        "property_holds_count": property_count,
        "all_nonzero_diagonal_count": all_nonzero_diagonal_count,
        "walk_succeeded": walk_succeeded,
        "walk_rejected": walk_rejected,
        "lemma_violations": violations,
    }
    if mode == "sampled":
        survey["sample_size"] = sample_size
        survey["seed"] = seed
    return survey
