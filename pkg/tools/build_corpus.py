"""Regenerate the bundled corpus documents (goldens are filled by `milnorfib corpus --write`)."""

import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "milnorfib" / "data" / "corpus.json"

R = "x^2+y^2+z^2+w^2"


def entry(id_, vars_, field, components):
    return {"id": id_, "document": {"vars": vars_, "field": field, "components": components},
            "expected": {}}


def main():
    old = {}
    if OUT.exists():
        old = {e["id"]: e["expected"] for e in json.loads(OUT.read_text())}
    entries = [entry("trefoil", ["z1", "z2"], "complex", ["z1^3 - z2^2"])]
    for a in range(2, 6):
        for b in range(2, 6):
            entries.append(entry(f"brieskorn-{a}-{b}", ["z1", "z2"], "complex", [f"z1^{a} + z2^{b}"]))
    entries += [
        entry("example-triv", ["x", "y", "z", "w"], "real", ["x", f"y*({R})"]),
        entry("xy-xz", ["x", "y", "z"], "real", ["x*y", "x*z"]),
        entry("projection-x1-x2", ["x1", "x2", "x3"], "real", ["x1", "x2"]),
    ]
    real_zk = {
        2: ["x^2 - y^2", "2*x*y"],
        3: ["x^3 - 3*x*y^2", "3*x^2*y - y^3"],
        4: ["x^4 - 6*x^2*y^2 + y^4", "4*x^3*y - 4*x*y^3"],
    }
    for k, comps in real_zk.items():
        entries.append(entry(f"realified-z{k}", ["x", "y"], "real", comps))
    entries += [
        entry("realified-z1sq-plus-z2sq", ["x1", "y1", "x2", "y2"], "real",
              ["x1^2 - y1^2 + x2^2 - y2^2", "2*x1*y1 + 2*x2*y2"]),
        entry("sphere-times-projection-6-3", ["x1", "x2", "x3", "x4", "x5", "x6"], "real",
              ["x1", "x2", "x3*(x1^2+x2^2+x3^2+x4^2+x5^2+x6^2)"]),
        entry("projection-5-2", ["x1", "x2", "x3", "x4", "x5"], "real", ["x1", "x2"]),
        entry("sphere-times-projection-5-2", ["x1", "x2", "x3", "x4", "x5"], "real",
              ["x1", "x2*(x1^2+x2^2+x3^2+x4^2+x5^2)"]),
        entry("sphere-times-projection-7-3", ["x1", "x2", "x3", "x4", "x5", "x6", "x7"], "real",
              ["x1", "x2", "x3*(x1^2+x2^2+x3^2+x4^2+x5^2+x6^2+x7^2)"]),
        entry("quadric-cone-7-3", ["x1", "x2", "x3", "x4", "x5", "x6", "x7"], "real",
              ["x1", "x2", "x3^2 + x4^2 - x5^2 - x6^2 - x7^2"]),
        entry("smooth-complex", ["z1", "z2"], "complex", ["z1 + z2^2"]),
        entry("nonisolated-complex", ["z1", "z2"], "complex", ["z1^2"]),
        entry("a1-three-vars", ["z1", "z2", "z3"], "complex", ["z1^2 + z2^2 + z3^2"]),
    ]
    for e in entries:
        e["expected"] = old.get(e["id"], {})
    OUT.write_text(json.dumps(entries, indent=2, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
