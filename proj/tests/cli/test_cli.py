"""End-to-end checks of the ainf command line tool."""

import json
import os
import subprocess
from pathlib import Path

import pytest

AINF = os.environ.get("AINF_BIN", "ainf")
CORPUS = Path(os.environ.get("AINF_CORPUS", Path(__file__).resolve().parents[2] / "corpus"))


def run(*args, env=None):
    full_env = dict(os.environ, **(env or {}))
    return subprocess.run([AINF, *map(str, args)], capture_output=True, text=True, env=full_env, timeout=300)


def doc(name):
    return CORPUS / f"{name}.json"


def test_validate_positive():
    r = run("validate", doc("ext1"))
    assert r.returncode == 0
    assert r.stdout.startswith("PASS validate")


@pytest.mark.parametrize("name,check", [("neg-ainf-sign", "ainf"), ("neg-unit", "unit"), ("neg-cyclic", "cyclic")])
def test_validate_negative(name, check):
    r = run("--json", "validate", doc(name))
    assert r.returncode == 1
    report = json.loads(r.stdout)
    failed = {c["check"] for c in report["children"] if not c["passed"]}
    assert failed == {check}


def test_potential_json():
    r = run("--json", "potential", doc("mat2-ext"), "--kind", "cyclic", "--order", "4")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["kind"] == "cyclic" and out["parity"] == "shifted"
    assert out["terms"] == {"x1*x2*x7": "-2", "x1*x3*x6": "2", "x2*x3*x5": "-2"}


def test_potential_parity_switch():
    shifted = run("--json", "potential", doc("point"), "--kind", "cyclic", "--order", "4")
    unshifted = run("--json", "--parity", "unshifted", "potential", doc("point"), "--kind", "cyclic", "--order", "4")
    assert json.loads(shifted.stdout)["terms"] == {}
    assert json.loads(unshifted.stdout)["terms"] == {"x0^3": "1/3"}


def test_default_order_from_environment():
    r = run("--json", "potential", doc("poly4"), "--kind", "shi", env={"AINF_DEFAULT_ORDER": "3"})
    assert r.returncode == 0 and json.loads(r.stdout)["order"] == 3
    assert run("potential", doc("poly4"), env={"AINF_DEFAULT_ORDER": "0"}).returncode == 2


def test_pullback_and_unknown_morphism():
    assert run("pullback", doc("ext1-pulled"), "--morphism", "h").returncode == 0
    r = run("pullback", doc("ext1-pulled"), "--morphism", "nope")
    assert r.returncode == 2 and "nope" in r.stderr


def test_mc_gauge_holonomy():
    assert run("mc", "check", doc("ext1")).returncode == 0
    flow = run("--json", "mc", "flow", doc("mat2-ext"))
    assert flow.returncode == 0 and json.loads(flow.stdout)["flows"]
    assert run("gauge-check", doc("ext1-contractible")).returncode == 0
    assert run("gauge-check", doc("neg-gauge")).returncode == 1
    assert run("holonomy", doc("ext1")).returncode == 0


def test_report_is_ordered_and_deterministic():
    files = [doc("poly4"), doc("ext1"), doc("point")]
    a = run("--json", "report", *files)
    b = run("--json", "report", *files)
    assert a.returncode == 0 and a.stdout == b.stdout
    reports = json.loads(a.stdout)
    assert [r["check"] for r in reports] == ["report poly4", "report ext1", "report point"]
    assert all(r["passed"] for r in reports)


def test_bad_input(tmp_path):
    bad = json.loads(doc("ext1").read_text())
    bad["m"][1]["output"] = 0
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    r = run("validate", path)
    assert r.returncode == 2
    assert "#/m/1" in r.stderr
    assert run("validate", tmp_path / "missing.json").returncode == 2
    assert run("frobnicate").returncode == 2


def test_corpus_export_matches_shipped(tmp_path):
    assert run("corpus", "--out", tmp_path).returncode == 0
    for shipped in CORPUS.glob("*.json"):
        assert (tmp_path / shipped.name).read_text() == shipped.read_text()
