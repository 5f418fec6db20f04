"""Full analysis pipeline and its report format.

A report is a plain ordered dict; every computed field names the operation
that produced it under ``"op"``.  Missing values are tagged strings, never
``None``, so JSON output is stable byte for byte.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any, Callable

from .degree import degree_consistency
from .germ import MapGerm, parse_germ
from .local import milnor_number
from .loci import (
    build_loci,
    certify_isolated,
    critical_ideal,
    milnor_condition_a,
    milnor_condition_b,
    projection_preserves_conditions,
)
from .tags import Tag
from .topology import (
    Triviality,
    TrivialityStatus,
    bouquet_descriptor,
    classify_dimensions,
    connectivity_report,
    euler_complex,
    euler_real,
    kato_matsumoto_bound,
    realify,
    triviality_42,
)

NA = Tag.NOT_APPLICABLE.value


def _plain(x: Any) -> Any:
    if isinstance(x, Tag) or hasattr(x, "value") and isinstance(getattr(x, "value"), str):
        return x.value
    if isinstance(x, bool) or x is None:
        return NA if x is None else x
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    return x


def _guard(op: str, fn: Callable[[], dict]) -> dict:
    try:
        out = fn()
    except (ValueError, ArithmeticError) as exc:
        return {"value": Tag.UNDEFINED.value, "reason": str(exc), "op": op}
    out["op"] = op
    return out


def _na(op: str, reason: str) -> dict:
    return {"value": NA, "reason": reason, "op": op}


def _descriptor_dict(d) -> dict:
    return {"text": str(d), "kind": d.kind.value, "dims": list(d.dims),
            "count": _plain(d.count), "euler": _plain(d.euler)}


def _germ_echo(g: MapGerm) -> dict:
    return {**g.to_document(), "n": g.n, "p": g.p}


def analyze(germ: MapGerm) -> dict:
    if germ.field == "complex":
        return _analyze_complex(germ)
    return _analyze_real(germ)


def _criteria_notes(n: int, p: int) -> list[str]:
    notes = []
    if (n, p) == (5, 2):
        notes.append("(5, 2): trivial exactly when the link is an unknotted 2-sphere in S^4 (not computed)")
    if n >= p >= 2 and n - p not in (4, 5):
        notes.append("polynomial germ with isolated critical point: trivial exactly when 0 is "
                     "not in the branch set (not computed)")
    if n > p == 2:
        notes.append("p = 2: for i >= 2 the homotopy groups of the fiber agree with those of the "
                     "sphere minus a neighbourhood of the link (remark only)")
    return notes


def _analyze_real(f: MapGerm) -> dict:
    n, p = f.n, f.p
    report: dict[str, Any] = {"germ": _germ_echo(f)}

    isolated = submersion = None
    def iso():
        nonlocal isolated, submersion
        submersion = critical_ideal(f).is_unit()
        isolated = submersion or certify_isolated(f)
        return {"value": Tag.YES.value if isolated else Tag.UNDECIDED.value,
                "submersion": submersion}
    report["isolated"] = _guard("certify_isolated", iso)

    verdicts = {}
    loci = None
    if p < n:
        try:
            loci = build_loci(f)
        except (ValueError, ArithmeticError):
            loci = None
        for key, check in (("condition_a", milnor_condition_a), ("condition_b", milnor_condition_b)):
            def run(check=check, key=key):
                v = check(f, loci)
                verdicts[key] = v
                return {"status": v.status.value, "evidence": list(v.evidence)}
            report[key] = _guard(check.__name__, run)
        if p >= 2:
            def proj():
                r = projection_preserves_conditions(f)
                return {"condition_a": r.condition_a.status.value,
                        "condition_b": r.condition_b.status.value,
                        "preserved": r.preserved}
            report["projection"] = _guard("projection_preserves_conditions", proj)
        else:
            report["projection"] = _na("projection_preserves_conditions", "needs p >= 2")
    else:
        reason = f"needs p < n (n={n}, p={p})"
        report["condition_a"] = _na("milnor_condition_a", reason)
        report["condition_b"] = _na("milnor_condition_b", reason)
        report["projection"] = _na("projection_preserves_conditions", reason)

    report["milnor_number"] = _na("milnor_number", "defined for complex germs with p = 1")

    def degrees():
        d = degree_consistency(f)
        return {"values": _plain(list(d.degrees)), "all_equal": _plain(d.all_equal),
                "odd_n_all_zero": _plain(d.odd_prediction_holds)}
    report["degrees"] = _guard("degree_consistency", degrees)

    euler = None
    if n >= p >= 2:
        if isolated:
            def eul():
                nonlocal euler
                euler = euler_real(f)
                return {"value": _plain(euler.value), "formula": euler.formula}
            report["euler"] = _guard("euler_real", eul)
        else:
            report["euler"] = {"value": Tag.UNDEFINED.value,
                               "reason": "isolated critical point not certified", "op": "euler_real"}
    else:
        report["euler"] = _na("euler_real", f"needs n >= p >= 2 (n={n}, p={p})")

    report["km_bound"] = _na("kato_matsumoto_bound", "defined for complex germs with p = 1")

    trivial = None
    if n >= p >= 2:
        def triv():
            nonlocal trivial
            cls = classify_dimensions(n, p)
            out = {"class": cls.status.value, "note": cls.note, "verdict_42": NA}
            if (n, p) == (4, 2) and isolated and euler is not None:
                v = triviality_42(f, euler)
                out["verdict_42"] = v.value
                if v is not Triviality.UNDECIDED:
                    trivial = v is Triviality.TRIVIAL
            if trivial is None and submersion:
                # no critical points: the fiber is a ball by the implicit function theorem
                trivial = True
            if trivial is None and euler is not None and isinstance(euler.value, int) and euler.value != 1:
                trivial = False
            if trivial is None and isolated and cls.status is TrivialityStatus.ONLY_TRIVIAL:
                trivial = True
            out["trivial"] = Tag.UNDECIDED.value if trivial is None else trivial
            return out
        report["triviality"] = _guard("classify_dimensions", triv)
    else:
        report["triviality"] = _na("classify_dimensions", f"needs n >= p >= 2 (n={n}, p={p})")

    report["homotopy"] = _guard("bouquet_descriptor", lambda: _descriptor_dict(bouquet_descriptor(
        f, trivial=trivial, isolated=isolated, euler=euler.value if euler else None)))

    if "condition_a" in verdicts and "condition_b" in verdicts:
        def conn():
            c = connectivity_report(f, verdicts["condition_a"], verdicts["condition_b"],
                                    loci.I_V if loci else None)
            return {"tube_connected": c.tube_connected.value, "fiber_connected": c.fiber_connected.value,
                    "fiber_conn_iff_section": c.fiber_conn_iff_section.value,
                    "link_nonempty": c.link_nonempty.value,
                    "fiber_connectivity_degree": _plain(c.fiber_connectivity_degree),
                    "dim_V": _plain(c.dim_V), "notes": list(c.notes)}
        report["connectivity"] = _guard("connectivity_report", conn)
    else:
        report["connectivity"] = _na("connectivity_report", "conditions (a)/(b) not evaluated")

    report["notes"] = _criteria_notes(n, p)
    return report


def _analyze_complex(g: MapGerm) -> dict:
    report: dict[str, Any] = {"germ": _germ_echo(g)}
    reason = "defined for real germs"
    if g.p != 1:
        msg = f"complex analyses need a single component (p={g.p})"
        for key, op in (("isolated", "milnor_number"), ("condition_a", "milnor_condition_a"),
                        ("condition_b", "milnor_condition_b"), ("projection", "projection_preserves_conditions"),
                        ("milnor_number", "milnor_number"), ("degrees", "degree_consistency"),
                        ("euler", "euler_complex"), ("km_bound", "kato_matsumoto_bound"),
                        ("triviality", "classify_dimensions"), ("homotopy", "bouquet_descriptor"),
                        ("connectivity", "connectivity_report")):
            report[key] = _na(op, msg)
        report["notes"] = []
        return report

    mu = None
    def milnor():
        nonlocal mu
        r = milnor_number(g)
        mu = r.mu
        basis = [] if r.basis_witness is None else [
            _monomial_text(e, g.vars) for e in r.basis_witness]
        return {"value": _plain(r.mu), "basis": basis}
    milnor_section = _guard("milnor_number", milnor)
    if mu is None:
        report["isolated"] = {"value": Tag.UNDECIDED.value, "op": "milnor_number"}
    else:
        report["isolated"] = {"value": Tag.YES.value if mu is not Tag.INFINITE else Tag.NO.value,
                              "op": "milnor_number"}
    report["condition_a"] = _na("milnor_condition_a", reason)
    report["condition_b"] = _na("milnor_condition_b", reason)
    report["projection"] = _na("projection_preserves_conditions", reason)
    report["milnor_number"] = milnor_section
    report["degrees"] = _na("degree_consistency", reason)

    def eul():
        e = euler_complex(g)
        out = {"value": _plain(e.value), "formula": e.formula}
        if isinstance(e.value, int):
            er = euler_real(realify(g))
            out["realified"] = _plain(er.value)
            out["realified_formula"] = er.formula
            out["agrees"] = er.value == e.value
        return out
    report["euler"] = _guard("euler_complex", eul)
    report["km_bound"] = _guard("kato_matsumoto_bound", lambda: {"value": kato_matsumoto_bound(g)})
    report["triviality"] = _na("classify_dimensions", reason)
    report["homotopy"] = _guard("bouquet_descriptor", lambda: _descriptor_dict(
        bouquet_descriptor(g, mu=mu if mu is not None else Tag.INFINITE)))
    report["connectivity"] = _na("connectivity_report", reason)
    report["notes"] = []
    return report


def _monomial_text(e: tuple, vars) -> str:
    parts = [v if k == 1 else f"{v}^{k}" for v, k in zip(vars, e) if k]
    return "*".join(parts) or "1"


def analyze_document(doc: dict | str) -> dict:
    return analyze(parse_germ(doc))


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def to_text(report: dict) -> str:
    g = report["germ"]
    lines = [f"germ: ({', '.join(g['components'])}) over {g['field']} in {', '.join(g['vars'])}  [n={g['n']}, p={g['p']}]"]
    for key, sec in report.items():
        if key in ("germ", "notes"):
            continue
        fields = {k: v for k, v in sec.items() if k not in ("op", "evidence", "notes")}
        body = ", ".join(f"{k}={_scalar(v)}" for k, v in fields.items())
        lines.append(f"{key}: {body}  <{sec['op']}>")
        for ev in sec.get("evidence", []):
            lines.append(f"    - {ev}")
        for note in sec.get("notes", []):
            lines.append(f"    * {note}")
    for note in report.get("notes", []):
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def _scalar(v):
    if isinstance(v, list):
        return "[" + ", ".join(str(_scalar(x)) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


# -- corpus -----------------------------------------------------------------

GOLDEN_FIELDS = {
    "isolated": ("value",),
    "condition_a": ("status",),
    "condition_b": ("status",),
    "projection": ("preserved",),
    "milnor_number": ("value",),
    "degrees": ("values", "all_equal"),
    "euler": ("value", "formula", "realified"),
    "km_bound": ("value",),
    "triviality": ("class", "verdict_42", "trivial"),
    "homotopy": ("text", "euler"),
    "connectivity": ("tube_connected", "fiber_connected", "link_nonempty"),
}


def golden_fragment(report: dict) -> dict:
    """The slice of a report that corpus goldens pin down."""
    out = {}
    for key, fields in GOLDEN_FIELDS.items():
        sec = report.get(key, {})
        picked = {f: sec[f] for f in fields if f in sec}
        if not picked and "value" in sec:
            picked = {"value": sec["value"]}
        out[key] = picked
    return out


def fragment_mismatches(expected: Any, actual: Any, path: str = "") -> list[str]:
    """Paths where ``actual`` disagrees with the (possibly partial) ``expected``."""
    if isinstance(expected, dict):
        if not isinstance(actual, dict):
            return [f"{path or '.'}: expected an object, got {actual!r}"]
        out = []
        for k, v in expected.items():
            sub = f"{path}.{k}" if path else k
            if k not in actual:
                out.append(f"{sub}: missing")
            else:
                out.extend(fragment_mismatches(v, actual[k], sub))
        return out
    if expected != actual:
        return [f"{path}: expected {expected!r}, got {actual!r}"]
    return []


def default_corpus_path() -> Path:
    return Path(str(resources.files("milnorfib") / "data" / "corpus.json"))


def load_corpus(path: str | Path | None = None) -> list[dict]:
    path = Path(path) if path else default_corpus_path()
    entries = json.loads(path.read_text())
    ids = [e["id"] for e in entries]
    if len(ids) != len(set(ids)):
        raise ValueError("corpus ids are not unique")
    return entries


def run_corpus_entry(entry: dict) -> tuple[dict, list[str]]:
    report = analyze_document(entry["document"])
    return report, fragment_mismatches(entry["expected"], golden_fragment(report))
