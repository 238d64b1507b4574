"""CLI behaviour: exit codes, JSON mode, file outputs."""

import json

import pytest

from tensorforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    assert "cyclic:3" in out and "heisenberg:3" in out


def test_catalog_export_to_file(capsys, tmp_path):
    path = tmp_path / "z3.json"
    code, out, _ = run(capsys, "catalog", "export", "cyclic:3",
                       "--out", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert data["order"] == 3 and len(data["table"]) == 3


def test_catalog_export_stdout_json(capsys):
    code, out, _ = run(capsys, "--json", "catalog", "export", "cyclic:2")
    assert code == 0
    report = json.loads(out)
    assert report["results"]["table"] == [[0, 1], [1, 0]]


def test_catalog_export_unknown_key(capsys):
    code, out, err = run(capsys, "catalog", "export", "bogus:9")
    assert code == 2 and "bogus:9" in err


def test_compat_compatible_exit_zero(capsys):
    code, out, _ = run(capsys, "compat", "--g", "cyclic:3",
                       "--h", "cyclic:3", "--alpha", "inversion")
    assert code == 0 and "compatible: True" in out


def test_compat_incompatible_exit_one(capsys):
    code, out, _ = run(capsys, "compat", "--g", "cyclic:3",
                       "--h", "cyclic:3",
                       "--alpha", "inversion", "--beta", "inversion")
    assert code == 1
    assert "witness" in out


def test_compat_json_report_shape(capsys):
    code, out, _ = run(capsys, "--json", "compat", "--g", "cyclic:2",
                       "--h", "cyclic:2")
    report = json.loads(out)
    assert list(report) == ["command", "inputs", "results", "status",
                            "timing_ms"]
    assert report["results"]["compatible"] is True


def test_tensor_human_summary(capsys):
    code, out, _ = run(capsys, "tensor", "--g", "cyclic:3",
                       "--h", "cyclic:2", "--alpha", "inversion")
    assert code == 0
    assert "order: 3" in out
    assert "isomorphic to cyclic:3" in out


def test_tensor_both_pipelines_agree(capsys):
    code, out, _ = run(capsys, "--json", "tensor", "--g", "symmetric:3",
                       "--h", "cyclic:2")
    report = json.loads(out)
    assert report["results"]["order"] == 2
    assert report["results"]["invariants"] == [2]


def test_tensor_refuses_incompatible_without_force(capsys):
    code, out, err = run(capsys, "tensor", "--g", "cyclic:3",
                         "--h", "cyclic:3",
                         "--alpha", "inversion", "--beta", "inversion")
    assert code == 2 and "--force" in err


def test_tensor_force_computes_presented_group(capsys):
    code, out, _ = run(capsys, "--json", "tensor", "--g", "cyclic:3",
                       "--h", "cyclic:3",
                       "--alpha", "inversion", "--beta", "inversion",
                       "--force")
    assert code == 0
    assert json.loads(out)["results"]["order"] == 1


def test_tensor_from_pair_file(capsys, tmp_path):
    pair = {"g": "cyclic:4", "h": "cyclic:2",
            "alpha": {"map": [0, 1]}, "beta": {"map": [0, 0, 0, 0]}}
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(pair))
    code, out, _ = run(capsys, "--json", "tensor", "--pair", str(path))
    assert code == 0
    assert json.loads(out)["results"]["order"] == 4


def test_explore_question2_trivial(capsys):
    code, out, _ = run(capsys, "explore", "question2", "--max-order", "1")
    assert code == 0
    assert "no-counterexample-up-to-order-1" in out


def test_explore_question2_json_records(capsys):
    code, out, _ = run(capsys, "--json", "explore", "question2",
                       "--max-order", "2")
    report = json.loads(out)
    assert report["results"]["records"]
    assert all(r["normalizer_g"] for r in report["results"]["records"])


def test_explore_classify_heisenberg_2(capsys):
    code, out, _ = run(capsys, "--json", "explore",
                       "classify-heisenberg", "2")
    report = json.loads(out)
    classes = report["results"]["classes"]
    assert report["results"]["n_hom_pairs"] == 1296
    assert sum(c["n_hom_pairs"] for c in classes) == 1296
    assert [c["order"] for c in classes] == [16, 32, 32]


def test_explore_classify_heisenberg_3_exceeds_cap(capsys):
    code, out, err = run(capsys, "explore", "classify-heisenberg", "3")
    assert code == 2 and "symbol" in err


def test_inversion_action_requires_cyclic_actor(capsys):
    code, out, err = run(capsys, "compat", "--g", "cyclic:3",
                         "--h", "elemab:2:2", "--beta", "trivial",
                         "--alpha", "inversion")
    assert code == 2 and "cyclic" in err
