"""Constructive engine behind the radical power bound.

Given generators a_1, ..., a_n of nilpotent elements in a ring whose
zero ideal is n-absorbing, the product a_1 * ... * a_n must vanish.
The derivation walks monomial multidegrees downward in graded lex
order, from (n^2-n, 0, ..., 0) to (1, ..., 1).  Degrees above n^2-n
need no step: some exponent reaches n by pigeonhole and a_i^n = 0.
For each monomial x^M the step builds its shift matrix, whose (i, j)
entry is the monomial M - e_i + e_j evaluated on the generators (rows
and columns indexed by the variables of M, largest exponent first).
Entries below the diagonal carry multidegrees handled by earlier steps
and must already be zero; every image vector of the matrix has a zero
coordinate; and a short walk through probe vectors then pins a zero on
the diagonal, which equals the monomial value itself.

Every inference is also recomputed by direct arithmetic as it is made,
and the whole derivation is serialized as a trace that `verify_trace`
can replay from nothing but the trace text.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .absorbing import is_n_absorbing
from .errors import (
    HypothesisNotSatisfiedError,
    InvariantViolationError,
    LemmaPreconditionError,
    ResourceLimitError,
    TraceInconsistencyError,
)
from .ideals import Ideal
from .monomials import (
    grlex_compare,
    induction_multidegrees,
    monomial_text,
    monomials_with_multidegree,
    multidegree,
    total_degree,
)
from .rings import Ring, RingElement, build_ring
from .ringspec import parse_ring_spec, render_ring_spec

DEFAULT_MAX_VECTORS = 10**6
TRACE_SCHEMA = "absorbing-trace/1"


def _raw_value(ring: Ring, item):
    value = item.value if isinstance(item, RingElement) else item
    if not ring.contains_value(value):
        raise ValueError(f"{value!r} is not an element of {ring}")
    return value


def _int_image(ring: Ring, k: int):
    """Image of a nonnegative integer under the unique map from Z."""
    if k < 0:
        raise ValueError("count vectors must be nonnegative")
    result = ring.zero_value
    addend = ring.one_value
    while k:
        if k & 1:
            result = ring.add_values(result, addend)
        addend = ring.add_values(addend, addend)
        k >>= 1
    return result


def eval_monomial(ring: Ring, generator_values: Sequence, exponents: Sequence[int]):
    """Value of the product of generator powers given by `exponents`."""
    if len(generator_values) != len(exponents):
        raise ValueError(
            f"{len(exponents)} exponents for {len(generator_values)} generators"
        )
    out = ring.one_value
    for g, e in zip(generator_values, exponents):
        if e < 0:
            raise ValueError("exponents must be nonnegative")
        if e:
            out = ring.mul_values(out, ring.pow_value(g, e))
    return out


def monomial_image_ideal(ring: Ring, generator_values: Sequence, profile: tuple[int, ...]) -> Ideal:
    """Ideal generated by every monomial with the given multidegree."""
    values = {
        eval_monomial(ring, generator_values, mono)
        for mono in monomials_with_multidegree(profile)
    }
    return Ideal.from_generators(ring, values)


# ---------------------------------------------------------------------------
# matrices


class SquareMatrix:
    """Square matrix over a ring, stored as value rows."""

    __slots__ = ("ring", "rows", "m")

    def __init__(self, ring: Ring, rows: Sequence[Sequence]):
        normalized = tuple(
            tuple(_raw_value(ring, v) for v in row) for row in rows
        )
        m = len(normalized)
        if m == 0 or any(len(row) != m for row in normalized):
            raise ValueError("matrix must be square and nonempty")
        self.ring = ring
        self.rows = normalized
        self.m = m

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def element(self, i: int, j: int) -> RingElement:
        return self.ring.wrap(self.rows[i][j])

    def apply_values(self, vector: Sequence) -> tuple:
        """Matrix times a vector of ring values."""
        if len(vector) != self.m:
            raise ValueError("vector length does not match matrix size")
        ring = self.ring
        add, mul = ring.add_values, ring.mul_values
        out = []
        for row in self.rows:
            acc = ring.zero_value
            for entry, v in zip(row, vector):
                acc = add(acc, mul(entry, v))
            out.append(acc)
        return tuple(out)

    def apply_counts(self, vector: Sequence[int]) -> tuple:
        """Matrix times a vector of nonnegative integer counts."""
        images = [_int_image(self.ring, k) for k in vector]
        return self.apply_values(images)

    def rendered_rows(self) -> list[list[str]]:
        return [[self.ring.render_value(v) for v in row] for row in self.rows]


def is_upper_triangular(matrix: SquareMatrix) -> bool:
    zero = matrix.ring.zero_value
    return all(
        matrix.rows[i][j] == zero
        for i in range(matrix.m)
        for j in range(i)
    )


class ShiftMatrix(SquareMatrix):
    """Shift matrix of a monomial on a generator tuple.

    Variables are the positions with positive exponent, ordered by
    decreasing exponent (position index breaks ties).  Entry (i, j) is
    the base monomial with one factor of variable i exchanged for one
    factor of variable j; the diagonal repeats the base monomial.
    """

    __slots__ = ("base_monomial", "variables", "entry_monomials", "generator_values")

    def __init__(
        self,
        ring: Ring,
        rows: Sequence[Sequence],
        base_monomial: tuple[int, ...],
        variables: tuple[int, ...],
        entry_monomials: tuple,
        generator_values: tuple,
    ):
        super().__init__(ring, rows)
        self.base_monomial = base_monomial
        self.variables = variables
        self.entry_monomials = entry_monomials
        self.generator_values = generator_values


def build_shift_matrix(
    ring: Ring, generator_values: Sequence, exponents: Sequence[int]
) -> ShiftMatrix:
    """Construct the shift matrix of a monomial from its defining formula."""
    gens = tuple(_raw_value(ring, g) for g in generator_values)
    exponents = tuple(int(e) for e in exponents)
    if len(exponents) != len(gens):
        raise ValueError("one exponent per generator is required")
    variables = tuple(
        sorted((i for i, e in enumerate(exponents) if e > 0),
               key=lambda i: (-exponents[i], i))
    )
    if not variables:
        raise ValueError("a constant monomial has no shift matrix")
    entry_monomials = []
    rows = []
    for vi in variables:
        mono_row = []
        value_row = []
        for vj in variables:
            shifted = list(exponents)
            shifted[vi] -= 1
            shifted[vj] += 1
            shifted = tuple(shifted)
            mono_row.append(shifted)
            value_row.append(eval_monomial(ring, gens, shifted))
        entry_monomials.append(tuple(mono_row))
        rows.append(value_row)
    return ShiftMatrix(
        ring,
        rows,
        base_monomial=exponents,
        variables=variables,
        entry_monomials=tuple(entry_monomials),
        generator_values=gens,
    )


# ---------------------------------------------------------------------------
# the zero-coordinate property and the diagonal walk


@dataclass(frozen=True)
class ProjectiveZeroResult:
    """Does every image vector of the matrix have a zero coordinate?"""

    holds: bool
    mode: str  # "exhaustive" or "sampled"
    counterexample: Optional[tuple]
    vectors_checked: int
    samples: Optional[int] = None
    seed: Optional[int] = None

    def __bool__(self) -> bool:
        return self.holds


def is_projectively_zero(
    matrix: SquareMatrix,
    *,
    max_vectors: int = DEFAULT_MAX_VECTORS,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> ProjectiveZeroResult:
    """Check that M*v has a zero coordinate for every value vector v.

    Exhaustive over all |R|^m vectors in canonical order while that
    count stays within `max_vectors`, so the first counterexample found
    is canonical.  Past the cap a ResourceLimitError is raised unless
    `samples` (with a mandatory seed) selects randomized checking.
    """
    ring = matrix.ring
    zero = ring.zero_value
    nominal = ring.size ** matrix.m
    if nominal <= max_vectors:
        checked = 0
        for vector in itertools.product(ring.iter_values(), repeat=matrix.m):
            checked += 1
            image = matrix.apply_values(vector)
            if zero not in image:
                return ProjectiveZeroResult(False, "exhaustive", vector, checked)
        return ProjectiveZeroResult(True, "exhaustive", None, checked)
    if samples is None:
        raise ResourceLimitError(
            f"scan of {nominal} vectors exceeds the cap {max_vectors}; "
            "pass samples= to fall back to randomized checking"
        )
    if seed is None:
        raise ValueError("sampled scans need an explicit seed for reproducibility")
    values = list(ring.iter_values())
    rng = random.Random(seed)
    for drawn in range(1, samples + 1):
        vector = tuple(rng.choice(values) for _ in range(matrix.m))
        image = matrix.apply_values(vector)
        if zero not in image:
            return ProjectiveZeroResult(False, "sampled", vector, drawn, samples, seed)
    return ProjectiveZeroResult(True, "sampled", None, samples, samples, seed)


@dataclass(frozen=True)
class ZeroDiagonalResult:
    """Index of a provably zero diagonal entry, with the probe history."""

    index: int
    j_sequence: tuple[int, ...]


def find_zero_diagonal(matrix: SquareMatrix) -> ZeroDiagonalResult:
    """Locate a zero diagonal entry by walking probe vectors.

    Start with the count vector e_(m-1).  Each probe's image must have
    a zero coordinate; take j = the largest zero position, then bump
    coordinate j of the probe by one and repeat.  A repeat at j
    certifies that entry (j, j) is zero for any matrix: consecutive
    probes differ by one extra copy of column j, and position j of both
    images is zero, so position j of that column is zero.

    The termination guarantee is narrower: when the matrix is upper
    triangular, bumping coordinate j cannot disturb image positions
    above j, so the j values never climb and must repeat within m+1
    probes.  A probe whose image has no zero coordinate raises
    LemmaPreconditionError carrying the probe vector; a climb raises
    InvariantViolationError — impossible for an upper triangular
    matrix with the zero-coordinate property, merely inconclusive for
    anything else.
    """
    ring = matrix.ring
    zero = ring.zero_value
    m = matrix.m
    probe = [0] * m
    probe[m - 1] = 1
    j_sequence: list[int] = []
    previous: Optional[int] = None
    for _ in range(m + 2):
        image = matrix.apply_counts(probe)
        zeros = [i for i, v in enumerate(image) if v == zero]
        if not zeros:
            raise LemmaPreconditionError(
                "probe image has no zero coordinate", vector=tuple(probe)
            )
        j = max(zeros)
        j_sequence.append(j)
        if previous is not None:
            if j == previous:
                return ZeroDiagonalResult(index=j, j_sequence=tuple(j_sequence))
            if j > previous:
                raise InvariantViolationError(
                    f"largest zero position climbed from {previous} to {j}"
                )
        probe[j] += 1
        previous = j
    raise InvariantViolationError("probe walk failed to stabilize within m+1 steps")


# ---------------------------------------------------------------------------
# trace generation


@dataclass(frozen=True)
class ProofTrace:
    """Serializable derivation that the generator product vanishes."""

    ring_spec: str
    generators: tuple[str, ...]
    n: int
    high_degree_bound: int
    steps: tuple
    final_product: str

    def to_json_dict(self) -> dict:
        return {
            "schema": TRACE_SCHEMA,
            "ring": self.ring_spec,
            "generators": list(self.generators),
            "n": self.n,
            "high_degree_bound": self.high_degree_bound,
            "steps": list(self.steps),
            "final_product": self.final_product,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ProofTrace":
        if not isinstance(data, dict):
            raise ValueError("trace document must be a JSON object")
        schema = data.get("schema")
        if schema != TRACE_SCHEMA:
            raise ValueError(f"unsupported trace schema {schema!r}")
        missing = [
            key
            for key in ("ring", "generators", "n", "high_degree_bound", "steps", "final_product")
            if key not in data
        ]
        if missing:
            raise ValueError(f"trace document lacks fields: {', '.join(missing)}")
        return cls(
            ring_spec=data["ring"],
            generators=tuple(data["generators"]),
            n=int(data["n"]),
            high_degree_bound=int(data["high_degree_bound"]),
            steps=tuple(data["steps"]),
            final_product=data["final_product"],
        )


def _is_nilpotent(ring: Ring, value) -> bool:
    seen: set = set()
    x = value
    while x not in seen:
        if x == ring.zero_value:
            return True
        seen.add(x)
        x = ring.mul_values(x, value)
    return False


def _direct_step(ring: Ring, alpha: tuple, mono: tuple) -> dict:
    return {
        "alpha": list(alpha),
        "monomial": list(mono),
        "rule": "direct",
        "conclusion": ring.render_value(ring.zero_value),
    }


def _matrix_step(
    ring: Ring,
    gen_values: tuple,
    alpha: tuple,
    mono: tuple,
    proven: set,
    *,
    max_vectors: int,
    samples: Optional[int],
    seed: Optional[int],
) -> dict:
    zero = ring.zero_value
    mul = ring.mul_values
    matrix = build_shift_matrix(ring, gen_values, mono)
    g = eval_monomial(ring, gen_values, mono)

    # every row must factor as (monomial minus one variable) times the
    # column's generator; with that, matrix images of arbitrary vectors
    # are the factored monomial times a generator combination
    for k, vi in enumerate(matrix.variables):
        reduced = list(mono)
        reduced[vi] -= 1
        d_k = eval_monomial(ring, gen_values, reduced)
        for j, vj in enumerate(matrix.variables):
            if matrix.rows[k][j] != mul(d_k, gen_values[vj]):
                raise TraceInconsistencyError(
                    f"shift entry ({k},{j}) of {monomial_text(mono)} "
                    "disagrees with its factored form"
                )

    # one extra factor on the monomial must land on zero (those
    # monomials sit at higher degree, settled earlier or by a_i^n = 0)
    for vj in matrix.variables:
        if mul(g, gen_values[vj]) != zero:
            raise TraceInconsistencyError(
                f"degree raise of {monomial_text(mono)} by variable {vj} is nonzero"
            )

    justifications = []
    for k in range(matrix.m):
        for j in range(k):
            beta = multidegree(matrix.entry_monomials[k][j])
            if total_degree(beta) != total_degree(alpha) or grlex_compare(beta, alpha) != 1:
                raise InvariantViolationError(
                    f"sub-diagonal profile {beta} does not precede {alpha}"
                )
            if beta not in proven:
                raise InvariantViolationError(
                    f"sub-diagonal profile {beta} has no earlier step"
                )
            if matrix.rows[k][j] != zero:
                raise TraceInconsistencyError(
                    f"sub-diagonal entry ({k},{j}) of {monomial_text(mono)} "
                    "is nonzero despite its earlier step"
                )
            justifications.append({"i": k, "j": j, "beta": list(beta)})

    pz = is_projectively_zero(matrix, max_vectors=max_vectors, samples=samples, seed=seed)
    if not pz.holds:
        raise LemmaPreconditionError(
            "matrix image misses a zero coordinate", vector=pz.counterexample
        )
    pz_record: dict = {"method": pz.mode, "vectors_checked": pz.vectors_checked}
    if pz.mode == "sampled":
        pz_record["samples"] = pz.samples
        pz_record["seed"] = pz.seed

    walk = find_zero_diagonal(matrix)
    if matrix.rows[walk.index][walk.index] != zero:
        raise InvariantViolationError(
            "walk certified a diagonal zero that direct arithmetic denies"
        )
    if g != zero:
        raise TraceInconsistencyError(
            f"diagonal of {monomial_text(mono)} equals the monomial value, "
            "which did not vanish"
        )

    return {
        "alpha": list(alpha),
        "monomial": list(mono),
        "rule": "zero-diagonal",
        "variables": list(matrix.variables),
        "matrix": matrix.rendered_rows(),
        "subdiagonal_justifications": justifications,
        "projective_zero": pz_record,
        "j_sequence": list(walk.j_sequence),
        "diagonal_index": walk.index,
        "conclusion": ring.render_value(zero),
    }


def prove_radical_power_zero(
    ring: Ring,
    generators: Sequence,
    *,
    short_circuit: bool = True,
    max_tuples: int = 10**8,
    max_vectors: int = DEFAULT_MAX_VECTORS,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> ProofTrace:
    """Derive a checkable trace that the product of the generators is zero.

    Preconditions, both verified here: every generator is nilpotent,
    and the zero ideal is n-absorbing for n = number of generators.
    Violations raise HypothesisNotSatisfiedError with tags
    "nilpotent-generators" or "{n}-absorbing".

    With `short_circuit` (the default) a monomial that directly
    evaluates to zero is recorded as a one-line step; passing False
    runs the full matrix derivation for every monomial, which is the
    honest shape of the argument but much slower.
    """
    gen_values = tuple(_raw_value(ring, g) for g in generators)
    n = len(gen_values)
    if n < 1:
        raise ValueError("at least one generator is required")

    for g in gen_values:
        if not _is_nilpotent(ring, g):
            raise HypothesisNotSatisfiedError(
                "nilpotent-generators",
                witness=g,
                message=f"generator {ring.render_value(g)} is not nilpotent",
            )
    absorbing_report = is_n_absorbing(
        Ideal.zero(ring), n, max_tuples=max_tuples, samples=samples, seed=seed
    )
    if not absorbing_report.holds:
        raise HypothesisNotSatisfiedError(
            f"{n}-absorbing",
            witness=absorbing_report.witness,
            message=f"the zero ideal is not {n}-absorbing",
        )

    zero = ring.zero_value
    for g in gen_values:
        if ring.pow_value(g, n) != zero:
            raise TraceInconsistencyError(
                f"generator {ring.render_value(g)} does not vanish at power {n}"
            )

    steps: list[dict] = []
    if n >= 2:
        proven: set = set()
        for alpha in induction_multidegrees(n):
            for mono in monomials_with_multidegree(alpha):
                value = eval_monomial(ring, gen_values, mono)
                if short_circuit and value == zero:
                    steps.append(_direct_step(ring, alpha, mono))
                else:
                    steps.append(
                        _matrix_step(
                            ring,
                            gen_values,
                            alpha,
                            mono,
                            proven,
                            max_vectors=max_vectors,
                            samples=samples,
                            seed=seed,
                        )
                    )
            proven.add(alpha)

    final_value = eval_monomial(ring, gen_values, (1,) * n)
    if final_value != zero:
        raise TraceInconsistencyError("the generator product did not vanish")

    return ProofTrace(
        ring_spec=render_ring_spec(ring.descriptor),
        generators=tuple(ring.render_value(g) for g in gen_values),
        n=n,
        high_degree_bound=n * n - n + 1,
        steps=tuple(steps),
        final_product=ring.render_value(final_value),
    )


# ---------------------------------------------------------------------------
# trace verification


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of an independent replay of a trace."""

    ok: bool
    failures: tuple

    def __bool__(self) -> bool:
        return self.ok


def _verify_matrix_step(
    ring: Ring,
    gen_values: tuple,
    step: dict,
    alpha: tuple,
    mono: tuple,
    fail,
    index: int,
    max_vectors: int,
) -> None:
    zero = ring.zero_value
    mul = ring.mul_values
    matrix = build_shift_matrix(ring, gen_values, mono)

    if list(matrix.variables) != list(step.get("variables", [])):
        fail(index, "variables", f"expected {list(matrix.variables)}")
        return
    if matrix.rendered_rows() != step.get("matrix"):
        fail(index, "matrix-entries", "recorded matrix disagrees with the defining formula")
        return

    g = eval_monomial(ring, gen_values, mono)
    for vj in matrix.variables:
        if mul(g, gen_values[vj]) != zero:
            fail(index, "degree-raise", f"monomial times generator {vj} is nonzero")

    expected_justs = []
    for k in range(matrix.m):
        for j in range(k):
            beta = multidegree(matrix.entry_monomials[k][j])
            if grlex_compare(beta, alpha) != 1:
                fail(index, "justification-order", f"profile {beta} does not precede {alpha}")
            if matrix.rows[k][j] != zero:
                fail(index, "subdiagonal-nonzero", f"entry ({k},{j}) is nonzero")
            expected_justs.append({"i": k, "j": j, "beta": list(beta)})
    if step.get("subdiagonal_justifications") != expected_justs:
        fail(index, "justifications", "recorded justifications do not match the matrix")

    record = step.get("projective_zero")
    if not isinstance(record, dict):
        fail(index, "projective-zero", "missing certification record")
        return
    method = record.get("method")
    if method == "exhaustive":
        result = is_projectively_zero(matrix, max_vectors=max_vectors)
    elif method == "sampled":
        result = is_projectively_zero(
            matrix,
            max_vectors=0,
            samples=int(record.get("samples", 0)),
            seed=record.get("seed"),
        )
    else:
        fail(index, "projective-zero", f"unknown method {method!r}")
        return
    if not result.holds:
        fail(index, "projective-zero", "replay found a vector with no zero coordinate")
    if result.vectors_checked != record.get("vectors_checked"):
        fail(index, "projective-zero", "vectors_checked does not match the replay")

    walk = find_zero_diagonal(matrix)
    if list(walk.j_sequence) != step.get("j_sequence"):
        fail(index, "j-sequence", f"replay walk gives {list(walk.j_sequence)}")
    if walk.index != step.get("diagonal_index"):
        fail(index, "diagonal-index", f"replay walk stops at {walk.index}")
    if matrix.rows[walk.index][walk.index] != zero:
        fail(index, "diagonal-nonzero", "certified diagonal entry is nonzero")


def verify_trace(
    trace,
    *,
    max_ring_size: int = 4096,
    max_tuples: int = 10**8,
    max_vectors: int = DEFAULT_MAX_VECTORS,
) -> VerificationResult:
    """Replay a trace from its own text, trusting nothing in it.

    The ring is rebuilt from the recorded spec, the preconditions are
    re-decided, the step schedule is recomputed, and every step is
    checked by direct arithmetic.  All problems found are collected
    into the result rather than raised.
    """
    failures: list[dict] = []

    def fail(step, kind, detail):
        failures.append({"step": step, "kind": kind, "detail": detail})

    if isinstance(trace, dict):
        try:
            trace = ProofTrace.from_json_dict(trace)
        except (ValueError, TypeError, KeyError) as exc:
            fail(None, "document", str(exc))
            return VerificationResult(False, tuple(failures))

    try:
        descriptor = parse_ring_spec(trace.ring_spec, max_size=max_ring_size)
        ring = build_ring(descriptor, max_size=max_ring_size)
    except Exception as exc:
        fail(None, "ring", str(exc))
        return VerificationResult(False, tuple(failures))

    try:
        gen_values = tuple(ring.parse_value(text) for text in trace.generators)
    except Exception as exc:
        fail(None, "generators", str(exc))
        return VerificationResult(False, tuple(failures))

    n = trace.n
    if n != len(gen_values):
        fail(None, "arity", f"n={n} but {len(gen_values)} generators recorded")
        return VerificationResult(False, tuple(failures))
    if n < 1:
        fail(None, "arity", "n must be at least 1")
        return VerificationResult(False, tuple(failures))

    zero = ring.zero_value
    for g in gen_values:
        if not _is_nilpotent(ring, g):
            fail(None, "nilpotency", f"generator {ring.render_value(g)} is not nilpotent")
    try:
        report = is_n_absorbing(Ideal.zero(ring), n, max_tuples=max_tuples)
        if not report.holds:
            fail(None, "absorbing", f"the zero ideal is not {n}-absorbing")
    except ResourceLimitError as exc:
        fail(None, "resource", str(exc))
    for g in gen_values:
        if ring.pow_value(g, n) != zero:
            fail(None, "power", f"generator {ring.render_value(g)} to the {n} is nonzero")

    if trace.high_degree_bound != n * n - n + 1:
        fail(None, "bound", f"high_degree_bound should be {n * n - n + 1}")

    if n == 1:
        expected_schedule: list = []
    else:
        expected_schedule = [
            (alpha, mono)
            for alpha in induction_multidegrees(n)
            for mono in monomials_with_multidegree(alpha)
        ]
    recorded: list = []
    for step in trace.steps:
        try:
            recorded.append((tuple(step["alpha"]), tuple(step["monomial"])))
        except (TypeError, KeyError):
            recorded.append(None)
    if recorded != expected_schedule:
        fail(None, "schedule", "step sequence does not match the induction order")

    zero_text = ring.render_value(zero)
    for index, step in enumerate(trace.steps):
        try:
            alpha = tuple(step["alpha"])
            mono = tuple(step["monomial"])
            if len(mono) != n or multidegree(mono) != alpha:
                fail(index, "step-shape", "monomial does not have the stated multidegree")
                continue
            value = eval_monomial(ring, gen_values, mono)
            if value != zero:
                fail(index, "value", f"monomial evaluates to {ring.render_value(value)}")
            if step.get("conclusion") != zero_text:
                fail(index, "conclusion", f"conclusion should read {zero_text!r}")
            rule = step.get("rule")
            if rule == "direct":
                pass
            elif rule == "zero-diagonal":
                _verify_matrix_step(
                    ring, gen_values, step, alpha, mono, fail, index, max_vectors
                )
            else:
                fail(index, "rule", f"unknown rule {rule!r}")
        except Exception as exc:  # malformed step content must not abort the replay
            fail(index, "exception", f"{type(exc).__name__}: {exc}")

    try:
        final_value = eval_monomial(ring, gen_values, (1,) * n)
        if final_value != zero:
            fail(None, "final-product", "the generator product is nonzero")
        if trace.final_product != ring.render_value(final_value):
            fail(None, "final-product", "recorded text disagrees with the computed product")
    except Exception as exc:
        fail(None, "final-product", f"{type(exc).__name__}: {exc}")

    return VerificationResult(not failures, tuple(failures))
