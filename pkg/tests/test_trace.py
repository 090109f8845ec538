"""Derivation traces: generation, serialization, verification, tampering."""

import copy
import json

import pytest

from absorbing_ideals import (
    HypothesisNotSatisfiedError,
    ProofTrace,
    TRACE_SCHEMA,
    build_ring,
    eval_monomial,
    induction_multidegrees,
    parse_ring_spec,
    prove_radical_power_zero,
    verify_trace,
)


def _ring(spec):
    return build_ring(parse_ring_spec(spec))


def _prove(spec, gens, **kw):
    ring = _ring(spec)
    values = [ring.parse_value(g) for g in gens]
    return ring, prove_radical_power_zero(ring, values, **kw)


@pytest.mark.parametrize(
    "spec, gens, n",
    [
        ("Zmod:4", ["2", "2"], 2),
        ("Zmod:8", ["2", "4", "6"], 3),
        ("Zmod:27", ["3", "3", "3"], 3),
    ],
)
def test_round_trip_known_rings(spec, gens, n):
    ring, trace = _prove(spec, gens)
    assert trace.n == n
    assert trace.high_degree_bound == n * n - n + 1
    assert trace.generators == tuple(gens)
    # the recorded final product equals the direct ring product
    direct = ring.product_of_values([ring.parse_value(g) for g in gens])
    assert trace.final_product == ring.render_value(direct)
    assert direct == ring.zero_value
    result = verify_trace(trace)
    assert result.ok
    assert result.failures == ()


def test_trace_covers_every_scheduled_monomial():
    ring, trace = _prove("Zmod:8", ["2", "4", "6"])
    n = trace.n
    seen = {(tuple(s["alpha"]), tuple(s["monomial"])) for s in trace.steps}
    for alpha in induction_multidegrees(n):
        assert any(key[0] == alpha for key in seen)
    # every step concludes zero and evaluates correctly
    for step in trace.steps:
        value = eval_monomial(
            ring, [ring.parse_value(g) for g in trace.generators], step["monomial"]
        )
        assert ring.render_value(value) == step["conclusion"] == "0"


def test_short_circuit_uses_direct_steps_only():
    _, trace = _prove("Zmod:8", ["2", "4", "6"], short_circuit=True)
    assert {s["rule"] for s in trace.steps} == {"direct"}


def test_full_machinery_exercises_matrix_steps():
    ring, trace = _prove("Zmod:4", ["2", "2"], short_circuit=False)
    rules = {s["rule"] for s in trace.steps}
    assert "zero-diagonal" in rules
    matrix_steps = [s for s in trace.steps if s["rule"] == "zero-diagonal"]
    for step in matrix_steps:
        assert set(step) >= {
            "alpha",
            "monomial",
            "variables",
            "matrix",
            "subdiagonal_justifications",
            "projective_zero",
            "j_sequence",
            "diagonal_index",
            "conclusion",
        }
        js = step["j_sequence"]
        assert js[-1] == js[-2] == step["diagonal_index"]
        for just in step["subdiagonal_justifications"]:
            assert set(just) == {"i", "j", "beta"}
    assert verify_trace(trace).ok


def test_trace_for_one_absorbing_zero():
    # a field: (0) is 1-absorbing, radical (0) = (0), single generator 0
    ring, trace = _prove("Zmod:5", ["0"])
    assert trace.n == 1
    assert verify_trace(trace).ok


def test_json_round_trip_preserves_verification():
    _, trace = _prove("Zmod:27", ["3", "3", "3"])
    blob = json.dumps(trace.to_json_dict(), sort_keys=True)
    reloaded = ProofTrace.from_json_dict(json.loads(blob))
    assert verify_trace(reloaded).ok
    assert reloaded.to_json_dict() == trace.to_json_dict()


def test_from_json_dict_validates_document():
    _, trace = _prove("Zmod:4", ["2", "2"])
    doc = trace.to_json_dict()
    bad_schema = dict(doc, schema="absorbing-trace/999")
    with pytest.raises(ValueError, match="schema"):
        ProofTrace.from_json_dict(bad_schema)
    missing = dict(doc)
    del missing["final_product"]
    with pytest.raises(ValueError, match="final_product"):
        ProofTrace.from_json_dict(missing)
    with pytest.raises(ValueError):
        ProofTrace.from_json_dict(["not", "an", "object"])
    assert doc["schema"] == TRACE_SCHEMA


def _tampered(trace, mutate):
    doc = copy.deepcopy(trace.to_json_dict())
    mutate(doc)
    return ProofTrace.from_json_dict(doc)


def test_verify_rejects_tampered_conclusion():
    _, trace = _prove("Zmod:8", ["2", "4", "6"])

    def mutate(doc):
        doc["steps"][0]["conclusion"] = "1"

    result = verify_trace(_tampered(trace, mutate))
    assert not result.ok
    assert any(f["kind"] == "conclusion" for f in result.failures)


def test_verify_rejects_tampered_final_product():
    _, trace = _prove("Zmod:4", ["2", "2"])
    result = verify_trace(_tampered(trace, lambda d: d.update(final_product="2")))
    assert not result.ok
    assert any(f["kind"] == "final-product" for f in result.failures)


def test_verify_rejects_wrong_ring():
    _, trace = _prove("Zmod:4", ["2", "2"])
    result = verify_trace(_tampered(trace, lambda d: d.update(ring="Zmod")))
    assert not result.ok
    assert any(f["kind"] == "ring" for f in result.failures)


def test_verify_rejects_non_nilpotent_generators():
    _, trace = _prove("Zmod:4", ["2", "2"])
    result = verify_trace(_tampered(trace, lambda d: d.update(generators=["2", "3"])))
    assert not result.ok
    assert any(f["kind"] in {"nilpotency", "schedule", "final-product"} for f in result.failures)


def test_verify_rejects_dropped_step():
    _, trace = _prove("Zmod:8", ["2", "4", "6"])

    def mutate(doc):
        del doc["steps"][0]

    result = verify_trace(_tampered(trace, mutate))
    assert not result.ok
    assert any(f["kind"] == "schedule" for f in result.failures)


def test_verify_rejects_wrong_bound():
    _, trace = _prove("Zmod:4", ["2", "2"])
    result = verify_trace(_tampered(trace, lambda d: d.update(high_degree_bound=99)))
    assert not result.ok
    assert any(f["kind"] == "bound" for f in result.failures)


def test_verify_rejects_malformed_step_without_crashing():
    _, trace = _prove("Zmod:4", ["2", "2"])

    def mutate(doc):
        doc["steps"][1] = {"rule": "direct"}

    result = verify_trace(_tampered(trace, mutate))
    assert not result.ok
    assert result.failures


def test_verify_rejects_tampered_matrix_entries():
    _, trace = _prove("Zmod:4", ["2", "2"], short_circuit=False)

    def mutate(doc):
        for step in doc["steps"]:
            if step["rule"] == "zero-diagonal":
                step["matrix"][0][0] = "1"
                return

    result = verify_trace(_tampered(trace, mutate))
    assert not result.ok
    kinds = {f["kind"] for f in result.failures}
    assert kinds & {"matrix-entries", "diagonal-nonzero", "projective-zero"}


def test_verify_rejects_tampered_j_sequence():
    _, trace = _prove("Zmod:4", ["2", "2"], short_circuit=False)

    def mutate(doc):
        # pick a step with two variables: its true walk is (1, 1)
        for step in doc["steps"]:
            if step["rule"] == "zero-diagonal" and len(step["variables"]) == 2:
                step["j_sequence"] = [0, 0]
                step["diagonal_index"] = 0
                return

    result = verify_trace(_tampered(trace, mutate))
    assert not result.ok
    kinds = {f["kind"] for f in result.failures}
    assert "j-sequence" in kinds
    assert "diagonal-index" in kinds


def test_prove_requires_nilpotent_generators():
    ring = _ring("Zmod:8")
    with pytest.raises(HypothesisNotSatisfiedError) as exc:
        prove_radical_power_zero(ring, [ring.parse_value("3")])
    assert exc.value.hypothesis == "nilpotent-generators"


def test_prove_requires_absorbing_zero_ideal():
    # Zmod:32 zero ideal needs n = 5 > cap 4 for the arity of these gens;
    # with four nilpotent generators the 4-absorbing hypothesis fails.
    ring = _ring("Zmod:32")
    gens = [ring.parse_value(g) for g in ("2", "2", "2", "2")]
    with pytest.raises(HypothesisNotSatisfiedError) as exc:
        prove_radical_power_zero(ring, gens)
    assert exc.value.hypothesis == "4-absorbing"


def test_proved_product_matches_direct_multiplication_everywhere():
    ring = _ring("Zmod:12")
    gens = [ring.parse_value(g) for g in ("6", "6", "6")]
    trace = prove_radical_power_zero(ring, gens)
    assert trace.final_product == "0"
    assert verify_trace(trace).ok
