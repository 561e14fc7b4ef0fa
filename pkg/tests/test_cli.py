"""Command-line pipeline: artifacts, exit codes, reproducibility."""

import json
import os

import pytest

from hopffactor import jsonio
from hopffactor.cli import (
    EXIT_CHECK_FAILED,
    EXIT_IO,
    EXIT_IRREDUCIBLE,
    EXIT_OK,
    main,
)
from hopffactor.presentations import build_H8
from hopffactor.scalar import Scalar


def read_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def tree_bytes(root):
    out = {}
    for dirpath, _dirnames, filenames in os.walk(root):
        for name in sorted(filenames):
            path = os.path.join(dirpath, name)
            with open(path, "rb") as fh:
                out[os.path.relpath(path, root)] = fh.read()
    return out


def test_catalog_verify(tmp_path, capsys):
    out = tmp_path / "cat"
    code = main(["catalog", "verify", "--out", str(out)])
    assert code == EXIT_OK
    assert (out / "h4.hopf.json").exists()
    assert (out / "h8.hopf.json").exists()
    assert (out / "h8xh4.hopf.json").exists()
    payload = read_json(out / "h8.axiom-report.json")
    assert payload["all_passed"] is True
    assert {c["name"] for c in payload["structural_checks"]} == {
        "z^2 = (1+g+h-gh)/2", "z^4 = 1", "gz = zh"
    }
    assert read_json(out / "h8xh4.hopf.json")["dim"] == 32


def test_catalog_verify_single_algebra(tmp_path):
    out = tmp_path / "single"
    assert main(["catalog", "verify", "--algebra", "h4", "--out", str(out)]) == EXIT_OK
    assert (out / "h4.hopf.json").exists()
    assert not (out / "h8.hopf.json").exists()


def test_catalog_markdown_report_mentions_z4(tmp_path):
    out = tmp_path / "md"
    code = main(["catalog", "verify", "--algebra", "h8", "--out", str(out),
                 "--format", "markdown"])
    assert code == EXIT_OK
    text = (out / "h8.axiom-report.md").read_text(encoding="utf-8")
    assert "| z^4 = 1 | pass |" in text


def test_catalog_load_roundtrip(tmp_path):
    out = tmp_path / "emit"
    main(["catalog", "verify", "--algebra", "h8", "--out", str(out)])
    reload_out = tmp_path / "re"
    code = main(["catalog", "verify", "--load", str(out / "h8.hopf.json"),
                 "--out", str(reload_out)])
    assert code == EXIT_OK


def test_catalog_load_mutated_constant_fails(tmp_path):
    out = tmp_path / "mut"
    main(["catalog", "verify", "--algebra", "h8", "--out", str(out)])
    payload = read_json(out / "h8.hopf.json")
    # perturb one multiplication constant: z*z gains an extra unit term
    for row in payload["mul"]:
        if row[0] == 4 and row[1] == 4 and row[2] == 0:
            row[3] = (Scalar.from_json(row[3]) + Scalar(1)).to_json()
            break
    bad_path = tmp_path / "h8-mutated.json"
    bad_path.write_text(json.dumps(payload), encoding="utf-8")
    code = main(["catalog", "verify", "--load", str(bad_path), "--out", str(tmp_path / "o")])
    assert code == EXIT_CHECK_FAILED


def test_catalog_load_missing_file(tmp_path):
    code = main(["catalog", "verify", "--load", str(tmp_path / "nope.json"),
                 "--out", str(tmp_path / "o")])
    assert code == EXIT_IO


def test_actions_enumerate_left(tmp_path, capsys):
    out = tmp_path / "left"
    code = main(["actions", "enumerate", "--side", "left", "--out", str(out)])
    assert code == EXIT_OK
    payload = read_json(out / "actions-left.solutions.json")
    assert payload["schema"] == "solutions/v1"
    assert payload["branch_count"] == 16
    assert len(payload["solutions"]) == 16
    assert "16 canonical families" in capsys.readouterr().out


def test_actions_enumerate_right_exits_irreducible(tmp_path):
    out = tmp_path / "right"
    code = main(["actions", "enumerate", "--side", "right", "--out", str(out)])
    assert code == EXIT_IRREDUCIBLE
    payload = read_json(out / "actions-right.solutions.json")
    assert payload["error"] == "irreducible-system"
    assert payload["residual_count"] > 0


def test_budget_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("HOPF_BUDGET", "1")
    out = tmp_path / "tiny"
    code = main(["actions", "enumerate", "--side", "left", "--out", str(out)])
    assert code == EXIT_IRREDUCIBLE
    payload = read_json(out / "actions-left.solutions.json")
    assert payload["reason"] == "budget-exhausted"


def test_invalid_budget(tmp_path, monkeypatch):
    monkeypatch.setenv("HOPF_BUDGET", "-3")
    code = main(["actions", "enumerate", "--side", "left", "--out", str(tmp_path / "x")])
    assert code == EXIT_CHECK_FAILED


@pytest.fixture(scope="module")
def theorem_run(tmp_path_factory):
    out = tmp_path_factory.mktemp("theorem")
    code = main(["theorem", "check", "--out", str(out), "--format", "markdown"])
    return code, out


def test_theorem_check_passes(theorem_run):
    code, out = theorem_run
    assert code == EXIT_OK
    report = read_json(out / "theorem-report.json")
    assert report["matched_pair_count"] == 4
    assert report["signatures_pairwise_distinct"] is True
    assert report["tensor_identification"] is True
    assert [r["presentation"] for r in report["rows"]] == [
        "tensor", "H32_1", "H32_2", "H32_3"
    ]
    for row in report["rows"]:
        assert row["axioms_pass"] and row["relations_pass"] and row["pair_reverified"]
        assert row["embeddings_pass"]


def test_theorem_check_artifacts(theorem_run):
    _, out = theorem_run
    for n in (1, 2, 3, 4):
        assert (out / f"product-{n}.hopf.json").exists()
        assert (out / f"invariants-{n}.json").exists()
        assert (out / f"matched-pair-{n}.json").exists()
        assert read_json(out / f"product-{n}.hopf.json")["dim"] == 32
    report = read_json(out / "theorem-report.json")
    h32_2 = next(r for r in report["rows"] if r["presentation"] == "H32_2")
    assert {"relation": "zX = iXgz", "holds": True, "witness": ""} in h32_2["relations"]


def test_theorem_markdown_table(theorem_run):
    _, out = theorem_run
    text = (out / "theorem-report.md").read_text(encoding="utf-8")
    assert "Matched pairs found: 4" in text
    assert "zX=iXgz" in text
    assert "Trivial pair product coincides with the tensor product: yes" in text


def test_matched_pairs_find(tmp_path):
    out = tmp_path / "mp"
    code = main(["matched-pairs", "find", "--out", str(out)])
    assert code == EXIT_OK
    payload = read_json(out / "matched-pair-3.json")
    assert payload["schema"] == "matched-pair/v1"
    assert payload["status"] == "matched"
    assert payload["digest"]["pair_checks_pass"] is True
    back = jsonio.matched_pair_from_json(payload)
    assert back.left.is_concrete() and back.right.is_concrete()


def test_matched_pairs_replay(tmp_path):
    out = tmp_path / "mp"
    main(["matched-pairs", "find", "--out", str(out)])
    replay_out = tmp_path / "replay"
    code = main(["matched-pairs", "find", "--load", str(out / "matched-pair-2.json"),
                 "--out", str(replay_out)])
    assert code == EXIT_OK
    payload = read_json(replay_out / "matched-pair-replay.json")
    assert payload["digest"]["pair_checks_pass"] is True

    # corrupt one left-action coefficient and replay again
    stored = read_json(out / "matched-pair-2.json")
    stored["left"]["entries"][9][2][1] = (
        Scalar.from_json(stored["left"]["entries"][9][2][1]) + Scalar(1)
    ).to_json()
    bad = tmp_path / "bad-pair.json"
    bad.write_text(json.dumps(stored), encoding="utf-8")
    code = main(["matched-pairs", "find", "--load", str(bad), "--out", str(replay_out)])
    assert code == EXIT_CHECK_FAILED


def test_product_build(tmp_path, capsys):
    out = tmp_path / "pb"
    code = main(["product", "build", "--out", str(out)])
    assert code == EXIT_OK
    assert read_json(out / "product-4.hopf.json")["dim"] == 32
    assert "relations pass" in capsys.readouterr().out


def test_algebra_json_roundtrip_bytes(tmp_path):
    H8 = build_H8()
    payload = jsonio.algebra_to_json(H8)
    back = jsonio.algebra_from_json(payload)
    assert back.structure_key() == H8.structure_key()
    assert jsonio.dumps(jsonio.algebra_to_json(back)) == jsonio.dumps(payload)


def test_actions_enumerate_rerun_byte_identical(tmp_path):
    out1, out2 = tmp_path / "r1", tmp_path / "r2"
    assert main(["actions", "enumerate", "--side", "left", "--out", str(out1)]) == EXIT_OK
    assert main(["actions", "enumerate", "--side", "left", "--out", str(out2)]) == EXIT_OK
    assert tree_bytes(out1) == tree_bytes(out2)
