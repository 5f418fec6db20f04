import json

import pytest

import milnorfib.report as report_mod
from milnorfib.germ import parse_germ
from milnorfib.report import (
    analyze,
    analyze_document,
    fragment_mismatches,
    golden_fragment,
    load_corpus,
    run_corpus_entry,
    to_json,
    to_text,
)

from conftest import PROJ, TREFOIL, TRIV, XY_XZ

SECTIONS = ["germ", "isolated", "condition_a", "condition_b", "projection", "milnor_number", "degrees",
            "euler", "km_bound", "triviality", "homotopy", "connectivity", "notes"]
HOLDS_CLASS = {"HOLDS", "HOLDS_REAL_CERTIFIED"}


def _walk(x):
    yield x
    if isinstance(x, dict):
        for v in x.values():
            yield from _walk(v)
    elif isinstance(x, list):
        for v in x:
            yield from _walk(v)


@pytest.mark.parametrize("doc", [TRIV, XY_XZ, TREFOIL, PROJ], ids=["triv", "xy-xz", "trefoil", "proj"])
def test_report_shape(doc):
    r = analyze_document(doc)
    assert list(r) == SECTIONS
    for key in SECTIONS[1:-1]:
        assert "op" in r[key], key
    assert all(v is not None for v in _walk(r))


def test_analyze_xy_xz():
    r = analyze_document(XY_XZ)
    assert r["condition_a"]["status"] in HOLDS_CLASS and r["condition_b"]["status"] in HOLDS_CLASS
    assert r["connectivity"]["tube_connected"] == "HYPOTHESIS_NOT_MET"
    assert r["connectivity"]["dim_V"] == 2


def test_analyze_triv():
    r = analyze_document(TRIV)
    assert r["euler"]["value"] == 1
    assert r["triviality"]["verdict_42"] == "TRIVIAL"
    assert r["homotopy"]["text"] == "CONTRACTIBLE"


def test_analyze_trefoil():
    r = analyze_document(TREFOIL)
    assert r["milnor_number"]["value"] == 2
    assert r["euler"]["value"] == -1 and r["euler"]["realified"] == -1
    assert r["homotopy"]["text"] == "WEDGE_SPHERES(1, 2)"
    assert r["km_bound"]["value"] == 0


def test_determinism():
    a = to_json(analyze_document(TRIV))
    b = to_json(analyze(parse_germ(json.dumps(TRIV))))
    assert a == b
    assert to_text(analyze_document(XY_XZ)) == to_text(analyze_document(XY_XZ))


def test_degradation_keeps_other_fields(monkeypatch):
    def broken(_):
        raise ArithmeticError("injected failure")
    monkeypatch.setattr(report_mod, "degree_consistency", broken)
    r = analyze_document(TRIV)
    assert r["degrees"]["value"] == "UNDEFINED" and "injected" in r["degrees"]["reason"]
    assert r["euler"]["value"] == 1 and r["condition_a"]["status"] == "HOLDS_REAL_CERTIFIED"


def test_degradation_of_euler(monkeypatch):
    def broken(_):
        raise ValueError("no euler today")
    monkeypatch.setattr(report_mod, "euler_real", broken)
    r = analyze_document(TRIV)
    assert r["euler"]["value"] == "UNDEFINED"
    assert r["triviality"]["class"] == "NONTRIVIAL_EXIST"
    assert r["connectivity"]["tube_connected"] == "YES"


def test_p_greater_than_n_degrades():
    with pytest.warns(UserWarning):
        r = analyze_document({"vars": ["x"], "field": "real", "components": ["x", "x^2"]})
    assert r["condition_a"]["value"] == "N/A" and r["euler"]["value"] == "N/A"


def test_complex_map_is_not_analyzed():
    r = analyze_document({"vars": ["z1", "z2"], "field": "complex", "components": ["z1", "z2"]})
    assert all(r[k]["value"] == "N/A" for k in SECTIONS[1:-1])


def test_text_rendering_mentions_ops():
    text = to_text(analyze_document(TREFOIL))
    assert "milnor_number: value=2" in text and "<euler_complex>" in text


def test_fragment_mismatch_paths():
    assert fragment_mismatches({"a": {"b": 1}}, {"a": {"b": 1, "c": 2}}) == []
    assert fragment_mismatches({"a": {"b": 1}}, {"a": {"b": 2}}) == ["a.b: expected 1, got 2"]
    assert fragment_mismatches({"a": 1}, {}) == ["a: missing"]
