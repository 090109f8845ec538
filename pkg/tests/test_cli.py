"""Command line interface: payload shapes, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from absorbing_ideals.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_check_absorbing_holds(capsys):
    code, payload = run_cli(
        capsys, "check-absorbing", "--ring", "Zmod:8", "--n", "3"
    )
    assert code == 0
    assert payload["schema"] == "absorbing-report/1"
    assert payload["command"] == "check-absorbing"
    assert payload["ring"] == "Zmod:8"
    assert payload["ideal"] == "(0)"
    assert payload["report"]["holds"] is True
    assert payload["report"]["mode"] == "exhaustive"


def test_check_absorbing_fails_with_witness(capsys):
    code, payload = run_cli(
        capsys, "check-absorbing", "--ring", "Zmod:8", "--n", "2"
    )
    assert code == 1
    assert payload["report"]["holds"] is False
    assert payload["report"]["witness"]["elements"] == ["2", "2", "2"]


def test_check_absorbing_nonzero_ideal(capsys):
    code, payload = run_cli(
        capsys,
        "check-absorbing",
        "--ring", "Zmod:12",
        "--ideal", "(4)",
        "--n", "2",
    )
    assert code == 0
    assert payload["ideal"] == "(4)"


def test_omega_payload(capsys):
    code, payload = run_cli(capsys, "omega", "--ring", "Zmod:12")
    assert code == 0
    report = payload["report"]
    assert report["omega"] == 3
    assert report["cap"] == 4
    assert set(report["levels"]) == {"1", "2", "3"}
    assert report["levels"]["3"]["holds"] is True


def test_omega_above_cap_reports_null(capsys):
    code, payload = run_cli(capsys, "omega", "--ring", "Zmod:32", "--cap", "4")
    assert code == 0
    assert payload["report"]["omega"] is None


def test_radical_power_holds(capsys):
    code, payload = run_cli(
        capsys, "radical-power", "--ring", "Zmod:8", "--n", "3"
    )
    assert code == 0
    assert payload["report"]["holds"] is True
    assert payload["report"]["radical"]["size"] == 4


def test_radical_power_hypothesis_failure(capsys):
    code, payload = run_cli(
        capsys, "radical-power", "--ring", "Zmod:8", "--n", "2"
    )
    assert code == 1
    assert payload["error"]["kind"] == "hypothesis"
    assert payload["error"]["hypothesis"] == "2-absorbing"
    assert payload["error"]["witness"]["elements"] == ["2", "2", "2"]


def test_corollaries_z27(capsys):
    code, payload = run_cli(capsys, "corollaries", "--ring", "Zmod:27")
    assert code == 0
    report = payload["report"]
    assert report["colons_two_absorbing"]["holds"] is True
    assert report["colon_chain"]["holds"] is True


def test_corollaries_precondition_exit(capsys):
    code, payload = run_cli(capsys, "corollaries", "--ring", "Zmod:16")
    assert code == 1
    assert payload["error"]["hypothesis"] == "3-absorbing"


def test_trace_and_verify_round_trip(tmp_path, capsys):
    trace_file = tmp_path / "trace.json"
    code = main(
        [
            "trace",
            "--ring", "Zmod:8",
            "--gens", "2,4,6",
            "--out", str(trace_file),
        ]
    )
    assert code == 0
    capsys.readouterr()
    document = json.loads(trace_file.read_text())
    assert document["schema"] == "absorbing-trace/1"
    assert document["final_product"] == "0"
    assert document["n"] == 3

    code, payload = run_cli(capsys, "verify-trace", str(trace_file))
    assert code == 0
    assert payload["ok"] is True
    assert payload["failures"] == []


def test_verify_trace_flags_tampering(tmp_path, capsys):
    trace_file = tmp_path / "trace.json"
    main(["trace", "--ring", "Zmod:4", "--gens", "2,2", "--out", str(trace_file)])
    capsys.readouterr()
    document = json.loads(trace_file.read_text())
    document["final_product"] = "2"
    trace_file.write_text(json.dumps(document))
    code, payload = run_cli(capsys, "verify-trace", str(trace_file))
    assert code == 1
    assert payload["ok"] is False
    assert any(f["kind"] == "final-product" for f in payload["failures"])


def test_trace_full_machinery_flag(tmp_path, capsys):
    trace_file = tmp_path / "trace.json"
    code = main(
        [
            "trace",
            "--ring", "Zmod:4",
            "--gens", "2,2",
            "--full-machinery",
            "--out", str(trace_file),
        ]
    )
    assert code == 0
    capsys.readouterr()
    document = json.loads(trace_file.read_text())
    rules = {step["rule"] for step in document["steps"]}
    assert "zero-diagonal" in rules


def test_trace_hypothesis_error(capsys):
    code, payload = run_cli(capsys, "trace", "--ring", "Zmod:8", "--gens", "3")
    assert code == 1
    assert payload["error"]["kind"] == "hypothesis"
    assert payload["error"]["hypothesis"] == "nilpotent-generators"


def test_parse_errors_exit_2(capsys):
    code, payload = run_cli(capsys, "omega", "--ring", "Frob:9")
    assert code == 2
    assert payload["error"]["kind"] == "usage"

    code, payload = run_cli(
        capsys, "check-absorbing", "--ring", "Zmod:12", "--ideal", "(99)", "--n", "2"
    )
    assert code == 2

    code, payload = run_cli(
        capsys, "check-absorbing", "--ring", "Zmod:12", "--n", "0"
    )
    assert code == 2


def test_unit_ideal_exit_2(capsys):
    code, payload = run_cli(
        capsys, "check-absorbing", "--ring", "Zmod:12", "--ideal", "(1)", "--n", "2"
    )
    assert code == 2
    assert "proper" in payload["error"]["message"]


def test_resource_limit_exit_3(capsys):
    code, payload = run_cli(
        capsys,
        "check-absorbing",
        "--ring", "Zmod:36",
        "--n", "3",
        "--max-tuples", "10",
    )
    assert code == 3
    assert payload["error"]["kind"] == "resource-limit"


def test_sampled_scan_needs_seed(capsys):
    code, payload = run_cli(
        capsys,
        "check-absorbing",
        "--ring", "Zmod:36",
        "--n", "3",
        "--max-tuples", "10",
        "--samples", "100",
    )
    assert code == 2  # missing seed is a usage error

    code, payload = run_cli(
        capsys,
        "check-absorbing",
        "--ring", "Zmod:36",
        "--n", "3",
        "--max-tuples", "10",
        "--samples", "100",
        "--seed", "11",
    )
    assert code in (0, 1)
    assert payload["report"]["mode"] == "sampled"


def test_usage_error_missing_required_flag():
    with pytest.raises(SystemExit) as exc:
        main(["check-absorbing", "--ring", "Zmod:8"])
    assert exc.value.code == 2


def test_max_ring_size_is_enforced(capsys):
    code, payload = run_cli(
        capsys, "omega", "--ring", "Zmod:100", "--max-ring-size", "50"
    )
    assert code == 2
    assert "cap" in payload["error"]["message"]


def test_corpus_scan_manifest_and_determinism(tmp_path, capsys):
    manifest = tmp_path / "rings.json"
    manifest.write_text(json.dumps(["Zmod:4", "Zmod:8", "Zmod:9"]))
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    for out in (out_a, out_b):
        code = main(
            [
                "corpus-scan",
                "--manifest", str(manifest),
                "--seed", "3",
                "--samples", "25",
                "--out", str(out),
            ]
        )
        assert code == 0
        capsys.readouterr()
    assert out_a.read_bytes() == out_b.read_bytes()
    payload = json.loads(out_a.read_text())
    assert payload["ok"] is True
    assert payload["seed"] == 3
    assert payload["trace_limit"] == 25
    assert [r["ring"] for r in payload["battery"]["rings"]] == [
        "Zmod:4", "Zmod:8", "Zmod:9",
    ]
    assert len(payload["trace_surveys"]) == 3
    for survey in payload["trace_surveys"]:
        assert survey["failed"] == 0


def test_corpus_scan_rejects_bad_manifest(tmp_path, capsys):
    manifest = tmp_path / "bad.json"
    manifest.write_text(json.dumps({"not-rings": []}))
    code, payload = run_cli(
        capsys, "corpus-scan", "--manifest", str(manifest)
    )
    assert code == 2
    assert payload["error"]["kind"] == "usage"


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "absorbing_ideals", "omega", "--ring", "Zmod:8"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["report"]["omega"] == 3


def test_outputs_end_with_newline_and_sorted_keys(capsys):
    main(["omega", "--ring", "Zmod:8"])
    out = capsys.readouterr().out
    assert out.endswith("\n")
    payload = json.loads(out)
    assert out == json.dumps(payload, indent=2, sort_keys=True) + "\n"
