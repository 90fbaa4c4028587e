"""Smoke tests for the Python extension."""

import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import ainf

CORPUS = Path(os.environ.get("AINF_CORPUS", Path(__file__).resolve().parents[2] / "corpus"))


def test_builtin_names_match_corpus():
    names = ainf.builtin_names()
    assert {p.stem for p in CORPUS.glob("*.json")} == set(names)


def test_load_and_inspect():
    d = ainf.Document.load(CORPUS / "ext1.json")
    assert d.name == "ext1"
    assert d.labels == ["1", "theta"] and d.degrees == [0, 1]
    assert d.validate()["passed"]


def test_potentials_are_exact():
    d = ainf.Document.builtin("mat2-ext")
    phi = d.potential("cyclic", order=4)
    assert phi == {(1, 2, 7): Fraction(-2), (1, 3, 6): Fraction(2), (2, 3, 5): Fraction(-2)}
    assert d.potential("shi", order=4) == phi
    point = ainf.Document.builtin("point")
    assert point.potential("cyclic", order=4, parity="unshifted") == {(0, 0, 0): Fraction(1, 3)}


def test_negative_control():
    d = ainf.Document.builtin("neg-skew")
    assert d.control_failures() == set(d.expect_fail)


def test_report_round_trip(tmp_path):
    d = ainf.Document.builtin("ext1-pulled")
    d.save(tmp_path / "x.json")
    again = ainf.Document.load(tmp_path / "x.json")
    assert again.to_json() == d.to_json()
    assert json.dumps(again.report()) == json.dumps(d.report())


def test_errors(tmp_path):
    bad = json.loads((CORPUS / "ext1.json").read_text())
    bad["m"][1]["output"] = 0
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    with pytest.raises(ainf.DocumentError, match="/m/1"):
        ainf.Document.load(path)
    with pytest.raises(ValueError):
        ainf.Document.builtin("ext1").potential("nope")
