import json
import subprocess
import sys

import pytest

from srlkit import fixtures as fx
from srlkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_member_and_witness(capsys):
    code, out, _ = run(capsys, "check", "--fixture", "M", "--class", "srlbs")
    assert code == 0 and "member" in out
    code, out, _ = run(capsys, "check", "--fixture", "B2", "--class", "srs", "--json")
    doc = json.loads(out)
    assert code == 1 and not doc["member"]
    assert "SR4" in json.dumps(doc)
    code, _, _ = run(capsys, "check", "--fixture", "B2", "--class", "srs", "--expect-fail")
    assert code == 0


def test_global_flags_before_or_after(capsys):
    a = run(capsys, "--json", "check", "--fixture", "chain3-pair", "--class", "srl")
    b = run(capsys, "check", "--fixture", "chain3-pair", "--class", "srl", "--json")
    assert a == b and json.loads(a[1])["member"]


def test_usage_errors(capsys):
    code, _, err = run(capsys, "check", "--fixture", "nope", "--class", "srl")
    assert code == 2 and "error" in err
    with pytest.raises(SystemExit) as e:
        main(["check", "--fixture", "M", "--class", "bogus"])
    assert e.value.code == 2
    code, _, err = run(capsys, "enumerate", "--class", "sha", "--size", "9")
    assert code == 2 and "capped" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--class", "sha", "--size", "3", "--json")
    assert code == 0 and json.loads(out)["count"] == 3
    code, out, _ = run(capsys, "enumerate", "--class", "sha", "--size", "3", "--labelled")
    assert out.startswith("5 algebras")
    s1 = run(capsys, "enumerate", "--class", "srl", "--size", "5", "--sample", "3", "--seed", "7", "--json")
    s2 = run(capsys, "enumerate", "--class", "srl", "--size", "5", "--sample", "3", "--seed", "7", "--json")
    assert s1 == s2 and json.loads(s1[1])["count"] == 3


def test_build_pair(capsys, tmp_path):
    f = tmp_path / "chain3.json"
    f.write_text(json.dumps({"size": 3, "leq": [[0, 1], [1, 2]], "D": [0, 2]}))
    code, out, _ = run(capsys, "build-pair", "--lattice", str(f), "--json")
    assert code == 0 and json.loads(out)["imp"] == [[2, 2, 2], [0, 2, 2], [0, 0, 2]]
    code, _, err = run(capsys, "build-pair", "--lattice", str(f), "--d", "1,2")
    assert code == 2
    code, out, _ = run(capsys, "build-pair", "--lattice", str(f), "--mode", "2srl", "--json")
    assert code == 0 and json.loads(out)["D"] == [0, 2]


def test_represent(capsys):
    code, out, _ = run(capsys, "represent", "--fixture", "chain3-pair", "--verify", "--json")
    assert code == 0 and json.loads(out)["passed"]


def test_proof_check(capsys, tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"calculus": "IR4", "hypotheses": ["a -> b", "a"],
                             "lines": [{"formula": "a", "rule": "hyp:1"},
                                       {"formula": "a -> b", "rule": "hyp:0"},
                                       {"formula": "b", "rule": "mp:1,2"}]}))
    code, out, _ = run(capsys, "check-proof", str(f))
    assert code == 0 and "valid" in out
    f.write_text(json.dumps({"calculus": "IR4", "lines": [{"formula": "b", "rule": "mp:1,2"}]}))
    code, out, _ = run(capsys, "check-proof", str(f), "--json")
    assert code == 1 and not json.loads(out)["valid"]
    f.write_text("{")
    code, _, err = run(capsys, "check-proof", str(f))
    assert code == 2 and "JSON" in err


def test_countermodel_and_entails(capsys):
    code, out, _ = run(capsys, "countermodel", "--formula", "p -> q -> p", "--class", "sha", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "refuted" and len(doc["algebra"]["imp"]) == 3
    code, out, _ = run(capsys, "countermodel", "--formula", "p -> q -> p", "--class", "sha", "--shrink", "--json")
    assert code == 0 and json.loads(out)["class"] == "srl"
    code, out, _ = run(capsys, "countermodel", "--formula", "p -> p", "--class", "sha", "--max-size", "3")
    assert code == 1 and "no countermodel" in out
    code, out, _ = run(capsys, "entails", "--hyp", "p -> q", "--hyp", "q -> r", "--goal", "p -> r",
                       "--class", "srl", "--json")
    assert code == 0 and json.loads(out)["verdict"] == "no-countermodel-up-to"


def test_fixtures_export(capsys, tmp_path):
    code, _, _ = run(capsys, "fixtures", "export", "--dir", str(tmp_path))
    assert code == 0
    names = {p.stem for p in (tmp_path / "algebras").iterdir()}
    assert names == set(fx.ALGEBRAS)
    proof = tmp_path / "proofs" / "C4.json"
    code, _, _ = run(capsys, "check-proof", str(proof))
    assert code == 0
    code, out, _ = run(capsys, "check", "--algebra", str(tmp_path / "algebras" / "N.json"),
                       "--class", "srlbs")
    assert code == 0


def test_suite_subcommand(capsys):
    code, out, _ = run(capsys, "paper-suite", "--only", "5", "--only", "7")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 2 and all(ln.startswith("[PASS]") for ln in lines)


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "srlkit", "--help"], capture_output=True, text=True)
    assert r.returncode == 0 and "check-proof" in r.stdout
