import json
import subprocess
import sys

from sigmagroups.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out


def test_analyze_catalog_pair(capsys):
    code, out = run_cli(capsys, "analyze", "s3", "s0", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["predicates"]["psigmat_transitive"] is True
    assert doc["theorem_a"]["residual"]["order"] == 3


def test_analyze_files(capsys, tmp_path):
    grp = tmp_path / "S3.grp"
    grp.write_text("degree 3\ngen (1 2 3)\ngen (1 2)\n")
    sig = tmp_path / "sigma0.sigma"
    sig.write_text("rest singletons\n")
    code, out = run_cli(capsys, "analyze", str(grp), str(sig), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["group"]["order"] == 6
    assert doc["predicates"]["psigmat_transitive"] is True


def test_analyze_malformed_group_exits_2(capsys, tmp_path):
    grp = tmp_path / "bad.grp"
    grp.write_text("degree 3\ngen (1 2)(2 3)\n")
    sig = tmp_path / "s.sigma"
    sig.write_text("rest singletons\n")
    code, _ = run_cli(capsys, "analyze", str(grp), str(sig))
    assert code == 2


def test_analyze_unknown_reference_exits_2(capsys):
    code, _ = run_cli(capsys, "analyze", "nosuchgroup", "s0")
    assert code == 2


def test_analyze_cap_exceeded_exits_3(capsys, tmp_path):
    grp = tmp_path / "S4.grp"
    grp.write_text("degree 4\ngen (1 2 3 4)\ngen (1 2)\n")
    sig = tmp_path / "s.sigma"
    sig.write_text("rest singletons\n")
    code, _ = run_cli(capsys, "analyze", str(grp), str(sig), "--max-order", "10")
    assert code == 3


def test_analyze_json_roundtrip_bytes(capsys):
    code, out = run_cli(capsys, "analyze", "c6", "p23", "--json")
    assert code == 0
    doc = json.loads(out)
    assert json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n" == out


def test_verify_small_builtin(capsys):
    code, out = run_cli(
        capsys, "verify", "theorem-a", "--builtin", "--only", "s3,c6,q8", "--json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert doc["pair_count"] == 9
    # machine report re-renders to identical bytes
    assert json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n" == out


def test_verify_deterministic_bytes(capsys):
    args = ("verify", "t43", "--builtin", "--only", "s3,s4,c6", "--seed", "7", "--json")
    code1, out1 = run_cli(capsys, *args)
    code2, out2 = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_empty_corpus_exits_2(capsys, tmp_path):
    code, _ = run_cli(capsys, "verify", "theorem-a", "--corpus", str(tmp_path))
    assert code == 2


def test_verify_corpus_dir_cross_product(capsys, tmp_path):
    (tmp_path / "s3.grp").write_text("degree 3\ngen (1 2 3)\ngen (1 2)\n")
    (tmp_path / "c4.grp").write_text("degree 4\ngen (1 2 3 4)\n")
    (tmp_path / "s0.sigma").write_text("rest singletons\n")
    code, out = run_cli(capsys, "verify", "theorem-a", "--corpus", str(tmp_path), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["pair_count"] == 2


def test_verify_manifest_pins(capsys, tmp_path):
    (tmp_path / "pins.manifest").write_text(
        "check s3 s0 psigmat expect true\ncheck s4 s0 psigmat expect false\n"
    )
    code, out = run_cli(capsys, "verify", "theorem-a", "--corpus", str(tmp_path), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["pair_count"] == 2
    pins = [r for r in doc["records"] if r["task"] == "manifest"]
    assert len(pins) == 2


def test_verify_manifest_pin_violation(capsys, tmp_path):
    (tmp_path / "pins.manifest").write_text("check s4 s0 psigmat expect true\n")
    code, out = run_cli(capsys, "verify", "theorem-a", "--corpus", str(tmp_path), "--json")
    assert code == 1
    doc = json.loads(out)
    assert any(v["task"] == "manifest" for v in doc["violations"])


def test_search_expression(capsys):
    code, out = run_cli(
        capsys, "search", "psigmat and not pst", "--builtin", "--json"
    )
    assert code == 0
    doc = json.loads(out)
    assert "g168:p23" in doc["matches"]
    assert all(":s0" not in m for m in doc["matches"])


def test_search_simple_predicates(capsys):
    code, out = run_cli(capsys, "search", "pst", "--builtin", "--only", "s3,s4,a4,f21")
    assert code == 0
    assert "s3" in out and "f21" in out
    assert "s4 " not in out and "a4 " not in out


def test_search_bad_expression_exits_2(capsys):
    code, _ = run_cli(capsys, "search", "psigmat and", "--builtin")
    assert code == 2
    code, _ = run_cli(capsys, "search", "frobnicate", "--builtin")
    assert code == 2


def test_catalog_list_and_emit(capsys):
    code, out = run_cli(capsys, "catalog", "list")
    assert code == 0
    assert "g168" in out
    code, out = run_cli(capsys, "catalog", "emit", "g168")
    assert code == 0
    assert out.startswith("name G168\ndegree 15\n")
    code, _ = run_cli(capsys, "catalog", "emit", "nope")
    assert code == 2


def test_emitted_catalog_group_analyzes(capsys, tmp_path):
    code, out = run_cli(capsys, "catalog", "emit", "f21")
    grp = tmp_path / "f21.grp"
    grp.write_text(out)
    code, out = run_cli(capsys, "analyze", str(grp), "s0", "--json")
    assert code == 0
    assert json.loads(out)["group"]["order"] == 21


def test_analyze_order_168_end_to_end(capsys, tmp_path):
    _, grp_text = run_cli(capsys, "catalog", "emit", "g168")
    (tmp_path / "G168.grp").write_text(grp_text)
    (tmp_path / "pairing.sigma").write_text("block 2 3\nrest one-block\n")
    code, out = run_cli(
        capsys, "analyze", str(tmp_path / "G168.grp"), str(tmp_path / "pairing.sigma"), "--json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["group"]["order"] == 168
    assert doc["predicates"]["psigmat_transitive"] is True
    assert doc["theorem_a"]["residual"]["order"] == 7


def test_console_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "sigmagroups.cli", "catalog", "list"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "q8" in result.stdout


def test_verify_jobs_parallel_matches_serial(capsys):
    args = ["verify", "theorem-b", "--builtin", "--only", "s3,c6,d4,q8", "--json"]
    _, serial = run_cli(capsys, *args)
    _, parallel = run_cli(capsys, *args, "--jobs", "2")
    assert serial == parallel
