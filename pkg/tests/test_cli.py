import json

import pytest

from biquot.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_classify_so7_counts(capsys):
    code, doc = run_json(capsys, "classify", "--group", "so7", "--source", "su2xsu2")
    assert code == 0
    assert doc["command"] == "classify"
    assert doc["exact_arithmetic"] is True
    assert doc["results"]["counts"]["free_inhomogeneous"] == 10


def test_classify_su2_table_output(capsys):
    code, out = run_cli(capsys, "classify", "--group", "spin7", "--source", "su2")
    assert code == 0
    assert "free inhomogeneous: 6" in out
    assert "(A, B): FREE" in out


def test_classify_audit_includes_witnesses(capsys):
    code, doc = run_json(
        capsys, "classify", "--group", "su4", "--source", "su2", "--audit"
    )
    assert code == 0
    pairs = doc["results"]["pairs"]
    assert any("witness" in p for p in pairs)
    for p in pairs:
        if "witness" in p:
            assert all("/" in c or c.isdigit() or c == "0" for c in p["witness"]["point"])


def test_check_free_named_pair(capsys):
    code, doc = run_json(
        capsys, "check-free", "--group", "spin7", "--left", "C", "--right", "D"
    )
    assert code == 0
    verdict = doc["results"]["verdict"]
    assert verdict["status"] == "NotFree"
    assert verdict["witness"]["order"] == 3
    assert verdict["witness"]["point"] == ["1/3"]


def test_check_free_free_pair_table(capsys):
    code, out = run_cli(
        capsys, "check-free", "--group", "spin7", "--left", "D", "--right", "E"
    )
    assert code == 0
    assert "Free" in out and "witness" not in out


def test_check_free_two_parameter_pair_with_descent(capsys):
    code, doc = run_json(
        capsys,
        "check-free",
        "--group",
        "spin7",
        "--left",
        "phi02+2phi10",
        "--right",
        "proj2:D",
    )
    assert code == 0
    assert doc["results"]["verdict"]["status"] == "Free"
    assert doc["results"]["descent"]["so7_verdict"] == "Free"
    assert doc["results"]["descent"]["deck_in_image"] is True


def test_check_free_rejects_bad_spec(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check-free", "--group", "spin7", "--left", "nope!", "--right", "A"])
    assert exc.value.code == 1


def test_check_free_rejects_mixed_sources(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check-free", "--group", "spin7", "--left", "A", "--right", "proj1:A"])
    assert exc.value.code == 1


def test_unknown_group_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--group", "g2", "--source", "su2"])
    assert exc.value.code == 1


def test_enumerate_reps_so7(capsys):
    code, doc = run_json(capsys, "enumerate-reps", "--group", "so7", "--source", "su2")
    assert code == 0
    reps = doc["results"]["reps"]
    assert len(reps) == 7
    named = {r["name"] for r in reps if r["name"]}
    assert named == set("ABCDEF")


def test_enumerate_reps_finite_kernel(capsys):
    code, doc = run_json(
        capsys,
        "enumerate-reps",
        "--group",
        "spin7",
        "--source",
        "su2xsu2",
        "--finite-kernel",
    )
    assert code == 0
    assert len(doc["results"]["reps"]) == 4
    for r in doc["results"]["reps"]:
        assert r["finite_kernel"]
        assert len(r["weights"]) == 4  # four coordinate rows, lifted


def test_enumerate_reps_su4(capsys):
    code, doc = run_json(capsys, "enumerate-reps", "--group", "su4", "--source", "su2")
    assert code == 0
    assert len(doc["results"]["reps"]) == 5


def test_verify_suites_pass(capsys):
    code, doc = run_json(capsys, "verify-spin7")
    assert code == 0
    assert doc["results"]["passed"] is True
    code, doc = run_json(capsys, "verify-weyl")
    assert code == 0
    assert all(c["ok"] for c in doc["results"]["checks"])


def test_json_output_deterministic(capsys):
    _, first = run_cli(
        capsys, "classify", "--group", "su4", "--source", "su2xsu2", "--format", "json"
    )
    _, second = run_cli(
        capsys, "classify", "--group", "su4", "--source", "su2xsu2", "--format", "json"
    )
    assert first == second


def test_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out = run_cli(
        capsys,
        "classify",
        "--group",
        "su4",
        "--source",
        "su2",
        "--format",
        "json",
        "--out",
        str(path),
    )
    assert code == 0
    assert out == ""
    doc = json.loads(path.read_text())
    assert doc["results"]["counts"]["free_inhomogeneous"] == 2
