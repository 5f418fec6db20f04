"""Command-line front end.

Exit codes: 0 success, 1 analysis refusal (a precondition failed or a corpus
golden mismatched), 2 parse error or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .degree import DegenerateGramError, elk_degree
from .germ import GermSyntaxError, MapGerm, parse_germ, parse_polynomial, infer_vars
from .local import milnor_number
from .loci import milnor_condition_a, milnor_condition_b
from .report import (
    analyze,
    default_corpus_path,
    golden_fragment,
    load_corpus,
    run_corpus_entry,
    to_json,
    to_text,
)
from .topology import classify_dimensions, euler_complex, euler_real

EXIT_OK, EXIT_REFUSED, EXIT_PARSE = 0, 1, 2


class _Refusal(Exception):
    pass


class _InputError(Exception):
    pass


def _read_germ(path: str) -> MapGerm:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return parse_germ(text)
    except GermSyntaxError as exc:
        raise _InputError(f"{path}: {exc}") from exc
    except ValueError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _emit(args, value, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(value)


def _plain(v):
    return getattr(v, "value", v)


def cmd_analyze(args) -> int:
    report = analyze(_read_germ(args.file))
    sys.stdout.write(to_json(report) if args.json else to_text(report))
    return EXIT_OK


def cmd_corpus(args) -> int:
    path = Path(args.corpus) if args.corpus else default_corpus_path()
    try:
        entries = load_corpus(path)
    except FileNotFoundError:
        raise _InputError(f"corpus file not found: {path}")
    except (ValueError, KeyError) as exc:
        raise _InputError(f"{path}: {exc}")
    if args.filter:
        entries = [e for e in entries if any(f in e["id"] for f in args.filter)]
    if not entries:
        print("no corpus entries selected")
        return EXIT_OK

    if args.jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run_corpus_entry, entries))
    else:
        results = [run_corpus_entry(e) for e in entries]

    if args.write:
        for entry, (report, _) in zip(entries, results):
            entry["expected"] = golden_fragment(report)
        full = load_corpus(path)
        by_id = {e["id"]: e for e in entries}
        full = [by_id.get(e["id"], e) for e in full]
        path.write_text(json.dumps(full, indent=2, ensure_ascii=False) + "\n")
        print(f"wrote {len(entries)} golden(s) to {path}")
        return EXIT_OK

    failed = 0
    for entry, (_, mismatches) in zip(entries, results):
        if mismatches:
            failed += 1
            print(f"FAIL {entry['id']}")
            for m in mismatches:
                print(f"    {m}")
        else:
            print(f"PASS {entry['id']}")
    print(f"{len(entries) - failed}/{len(entries)} corpus entries match")
    return EXIT_REFUSED if failed else EXIT_OK


def cmd_milnor_number(args) -> int:
    try:
        vars_ = tuple(args.vars.split(",")) if args.vars else infer_vars(args.poly)
        f = parse_polynomial(args.poly, vars_)
        g = MapGerm(vars_, "complex", (f,))
    except ValueError as exc:
        raise _InputError(str(exc))
    mu = _plain(milnor_number(g).mu)
    _emit(args, mu, {"milnor_number": mu, "op": "milnor_number"})
    return EXIT_OK


def cmd_euler(args) -> int:
    g = _read_germ(args.file)
    try:
        r = euler_real(g) if args.real else euler_complex(g)
    except ValueError as exc:
        raise _Refusal(str(exc))
    value = _plain(r.value)
    op = "euler_real" if args.real else "euler_complex"
    _emit(args, value, {"euler": value, "formula": r.formula, "op": op})
    return EXIT_OK


def cmd_degree(args) -> int:
    g = _read_germ(args.file)
    if g.field != "real":
        raise _Refusal("the gradient degree is defined for real germs")
    if not 1 <= args.component <= g.p:
        raise _Refusal(f"component must lie in 1..{g.p}")
    try:
        d = elk_degree(g.components[args.component - 1])
    except DegenerateGramError as exc:
        raise _Refusal(str(exc))
    value = _plain(d.degree)
    _emit(args, value, {"degree": value, "component": args.component, "op": "elk_degree"})
    return EXIT_OK


def cmd_conditions(args) -> int:
    g = _read_germ(args.file)
    try:
        a, b = milnor_condition_a(g), milnor_condition_b(g)
    except ValueError as exc:
        raise _Refusal(str(exc))
    _emit(args, f"a={a.status.value} b={b.status.value}", {
        "condition_a": {"status": a.status.value, "evidence": list(a.evidence), "op": "milnor_condition_a"},
        "condition_b": {"status": b.status.value, "evidence": list(b.evidence), "op": "milnor_condition_b"},
    })
    return EXIT_OK


def cmd_classify(args) -> int:
    try:
        c = classify_dimensions(args.n, args.p)
    except ValueError as exc:
        raise _Refusal(str(exc))
    _emit(args, c.status.value, {"status": c.status.value, "note": c.note, "op": "classify_dimensions"})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="milnorfib", description=(
        "Algebraic invariants and Milnor fiber topology of polynomial map germs."))
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=fn)
        return p

    p = add("analyze", cmd_analyze, "full report for a germ document")
    p.add_argument("file", help="germ document (JSON or text); '-' reads standard input")

    p = add("corpus", cmd_corpus, "check the bundled corpus against its goldens")
    p.add_argument("--filter", action="append", metavar="ID", help="only entries whose id contains ID")
    p.add_argument("--corpus", metavar="PATH", help="alternative corpus file")
    p.add_argument("--write", action="store_true", help="regenerate goldens instead of checking")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = add("milnor-number", cmd_milnor_number, "Milnor number of a complex polynomial")
    p.add_argument("poly")
    p.add_argument("--vars", help="comma-separated variable order (default: inferred)")

    p = add("euler", cmd_euler, "Euler characteristic of the Milnor fiber")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--real", action="store_true")
    mode.add_argument("--complex", action="store_true")
    p.add_argument("file")

    p = add("degree", cmd_degree, "local degree of the gradient of one component")
    p.add_argument("file")
    p.add_argument("--component", type=int, default=1, help="1-based component index")

    p = add("conditions", cmd_conditions, "Milnor conditions (a) and (b)")
    p.add_argument("file")

    p = add("classify", cmd_classify, "which dimensions admit non-trivial germs")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _Refusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED


if __name__ == "__main__":
    sys.exit(main())
