"""Regenerate src/fusionkit/data/{groups/*.json,catalog.json} from the constructors."""

import json
from pathlib import Path

from fusionkit.corpusio import GroupSpec, write_group
from fusionkit.groups import alternating, cyclic, direct_product, embed, dihedral, elementary_abelian, gl23, heisenberg, sl23, symmetric
from fusionkit.permcore import PermGroup, Permutation, center
from fusionkit.structure import core_p, sylow_subgroup
from fusionkit.theorems import counterexample_groups

DATA = Path(__file__).resolve().parents[1] / "src" / "fusionkit" / "data"


def cyc(n, *cycles):
    return Permutation.from_cycles(n, cycles)


def groups():
    s3 = symmetric(3)
    yield "s3", s3, {"A3": PermGroup(3, [cyc(3, [0, 1, 2])]), "T": PermGroup(3, [cyc(3, [0, 1])])}
    s4 = symmetric(4)
    yield "s4", s4, {
        "A4": alternating(4),
        "V4": PermGroup(4, [cyc(4, [0, 1], [2, 3]), cyc(4, [0, 2], [1, 3])]),
        "D8": sylow_subgroup(s4, 2),
        "C4": PermGroup(4, [cyc(4, [0, 1, 2, 3])]),
    }
    yield "a4", alternating(4), {"V4": PermGroup(4, [cyc(4, [0, 1], [2, 3]), cyc(4, [0, 2], [1, 3])])}
    sl = sl23()
    q8 = core_p(sl, 2)
    yield "sl23", sl, {"Q8": q8, "Z": center(sl)}
    yield "gl23", gl23(), {"SL": sl, "Q8": q8, "Z": center(sl)}
    yield "q8", q8, {"Z": center(q8)}
    d8 = dihedral(4)
    yield "d8", d8, {
        "Z": center(d8),
        "C4": PermGroup(4, [cyc(4, [0, 1, 2, 3])]),
        "V4": PermGroup(4, [cyc(4, [0, 2], [1, 3]), cyc(4, [1, 3])]),
    }
    c33 = elementary_abelian(3, 2)
    yield "c3xc3", c33, {"A": PermGroup(6, [cyc(6, [0, 1, 2])])}
    heis = heisenberg(3)
    yield "heis27", heis, {"Z": center(heis)}
    s4c2 = direct_product(s4, cyclic(2))
    yield "s4xc2", s4c2, {
        "S4": PermGroup(6, [embed(x, 6, 0) for x in s4.generators]),
        "A4": PermGroup(6, [embed(x, 6, 0) for x in alternating(4).generators]),
        "V4": PermGroup(6, [cyc(6, [0, 1], [2, 3]), cyc(6, [0, 2], [1, 3])]),
        "C2": PermGroup(6, [cyc(6, [4, 5])]),
    }
    g = counterexample_groups()
    yield "s3xs3", g["G"], {k: g[k] for k in ("G1", "G2", "S", "S1", "S2", "R", "H")}


PASS, HV = "pass", "hypothesis_violated"
NORMAL = {"theorem_b": PASS, "corollary": PASS, "lemma_1": PASS}

CATALOG = [
    ("s3", None, 3, {"theorem_a": PASS}),
    ("s3", None, 2, {"theorem_a": HV}),
    ("s4", None, 2, {"theorem_a": PASS}),
    ("s4", None, 3, {"theorem_a": HV}),
    ("a4", None, 2, {"theorem_a": PASS}),
    ("a4", None, 3, {"theorem_a": HV}),
    ("sl23", None, 2, {"theorem_a": PASS}),
    ("sl23", None, 3, {"theorem_a": HV}),
    ("gl23", None, 2, {"theorem_a": PASS}),
    ("d8", None, 2, {"theorem_a": PASS}),
    ("q8", None, 2, {"theorem_a": PASS}),
    ("c3xc3", None, 3, {"theorem_a": PASS}),
    ("heis27", None, 3, {"theorem_a": PASS}),
    ("s3xs3", None, 3, {"theorem_a": PASS}),
    ("s3xs3", None, 2, {"theorem_a": HV}),
    ("s4xc2", None, 2, {"theorem_a": PASS}),
    ("s3xs3", "G1", 3, NORMAL),
    ("s3xs3", "G2", 3, NORMAL),
    ("s3xs3", "S", 3, NORMAL),
    ("s4", "A4", 2, NORMAL),
    ("s4", "V4", 2, NORMAL),
    ("a4", "V4", 2, NORMAL),
    ("sl23", "Q8", 2, NORMAL),
    ("gl23", "SL", 2, NORMAL),
    ("gl23", "Q8", 2, NORMAL),
    ("d8", "C4", 2, NORMAL),
    ("heis27", "Z", 3, NORMAL),
    ("s4xc2", "S4", 2, NORMAL),
    ("s4xc2", "A4", 2, NORMAL),
    ("s4xc2", "V4", 2, NORMAL),
    ("s3xs3", "H", 3, {"theorem_b": HV, "corollary": HV, "lemma_1": HV}),
]


def main():
    (DATA / "groups").mkdir(parents=True, exist_ok=True)
    for name, group, subgroups in groups():
        write_group(GroupSpec.from_group(name, group, subgroups), DATA / "groups" / f"{name}.json")
    entries = [
        {"group": g, "subgroup": h, "prime": p, "expected": expected}
        for g, h, p, expected in CATALOG
    ]
    lines = ",\n".join("    " + json.dumps(e) for e in entries)
    (DATA / "catalog.json").write_text('{\n  "entries": [\n' + lines + "\n  ]\n}\n")


if __name__ == "__main__":
    main()
