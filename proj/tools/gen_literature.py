#!/usr/bin/env python3
"""Write the literature-named presentations under data/literature.

Each file spells the product relations in the operation names used by the
original authors (arrows, tilde operations, bullets), reading every
pair/triple of factor operations through the correspondence tables. A '*' in
a factor slot is the sum over that factor's generators; those combinations
become auxiliary operations.

This script is independent of the C++ product code so that the isomorphism
check compares two separate constructions.
"""

import itertools
import pathlib
import sys
from fractions import Fraction

STAR = "*"

# factor types: generators and relations (lhs, rhs), each side a list of
# (coefficient, a, b) meaning (x a y) b z on the left, x a (y b z) on the right
DEND = {
    "gens": ["lt", "gt"],
    "rels": [
        ([(1, "lt", "lt")], [(1, "lt", STAR)]),
        ([(1, "gt", "lt")], [(1, "gt", "lt")]),
        ([(1, STAR, "gt")], [(1, "gt", "gt")]),
    ],
}
TRI = {
    "gens": ["lt", "gt", "cir"],
    "rels": [
        ([(1, "lt", "lt")], [(1, "lt", STAR)]),
        ([(1, "gt", "lt")], [(1, "gt", "lt")]),
        ([(1, STAR, "gt")], [(1, "gt", "gt")]),
        ([(1, "gt", "cir")], [(1, "gt", "cir")]),
        ([(1, "lt", "cir")], [(1, "cir", "gt")]),
        ([(1, "cir", "lt")], [(1, "cir", "lt")]),
        ([(1, "cir", "cir")], [(1, "cir", "cir")]),
    ],
}
NS = {
    "gens": ["lt", "gt", "bul"],
    "rels": [
        ([(1, "lt", "lt")], [(1, "lt", STAR)]),
        ([(1, "gt", "lt")], [(1, "gt", "lt")]),
        ([(1, STAR, "gt")], [(1, "gt", "gt")]),
        ([(1, STAR, "bul"), (1, "bul", "lt")], [(1, "gt", "bul"), (1, "bul", STAR)]),
    ],
}
DIP = {
    "gens": ["st", "gt"],
    "star": "st",
    "rels": [
        ([(1, "st", "st")], [(1, "st", "st")]),
        ([(1, "st", "gt")], [(1, "gt", "gt")]),
        ([(1, "gt", "st")], [(1, "gt", "st")]),
    ],
}

QUAD = {("lt", "lt"): "nw", ("lt", "gt"): "ne", ("gt", "lt"): "sw", ("gt", "gt"): "se",
        ("lt", STAR): "wedge", ("gt", STAR): "vee", (STAR, "lt"): "lt", (STAR, "gt"): "gt",
        (STAR, STAR): "star"}
BLOCK = {"lt": "1", "gt": "2", STAR: "12"}

TYPES = {
    "ennea": {
        "factors": [TRI, TRI],
        "names": {
            ("lt", "lt"): "nw", ("lt", "cir"): "up", ("lt", "gt"): "ne", ("lt", STAR): "wedge",
            ("cir", "lt"): "lt", ("cir", "cir"): "cir", ("cir", "gt"): "gt", ("cir", STAR): "star",
            ("gt", "lt"): "sw", ("gt", "cir"): "dn", ("gt", "gt"): "se", ("gt", STAR): "vee",
            (STAR, "lt"): "tri_l", (STAR, "cir"): "cirbar", (STAR, "gt"): "tri_r", (STAR, STAR): "starbar",
        },
        "order": ["nw", "up", "ne", "lt", "cir", "gt", "sw", "dn", "se"],
    },
    "dendriform_nijenhuis": {
        "factors": [TRI, NS],
        "names": {
            ("lt", "lt"): "nw", ("lt", "bul"): "up", ("lt", "gt"): "ne", ("lt", STAR): "wedge",
            ("cir", "lt"): "tlt", ("cir", "bul"): "tbul", ("cir", "gt"): "tgt", ("cir", STAR): "tstar",
            ("gt", "lt"): "sw", ("gt", "bul"): "dn", ("gt", "gt"): "se", ("gt", STAR): "vee",
            (STAR, "lt"): "tri_l", (STAR, "bul"): "bulbar", (STAR, "gt"): "tri_r", (STAR, STAR): "starbar",
        },
        "order": ["ne", "se", "sw", "nw", "up", "dn", "tlt", "tgt", "tbul"],
    },
    "octo": {
        "factors": [DEND, DEND, DEND],
        "names": {(a, b, c): QUAD[(a, b)] + BLOCK[c]
                  for a in ("lt", "gt", STAR) for b in ("lt", "gt", STAR) for c in ("lt", "gt", STAR)},
        "order": ["ne1", "nw1", "sw1", "se1", "ne2", "nw2", "sw2", "se2"],
    },
    "m2": {
        "factors": [DIP, DIP],
        "names": {("gt", "gt"): "b1", ("gt", "st"): "b2", ("st", "gt"): "b3", ("st", "st"): "b4"},
        "order": ["b1", "b2", "b3", "b4"],
    },
}


def expand(symbols, factors):
    """All generator tuples obtained by replacing each '*' by a factor generator."""
    choices = [f["gens"] if s == STAR else [s] for s, f in zip(symbols, factors)]
    return list(itertools.product(*choices))


def product_side(sides):
    """Tensor product of factor sides: list of (coef, a-tuple, b-tuple)."""
    out = []
    for combo in itertools.product(*sides):
        coef = Fraction(1)
        for c, _, _ in combo:
            coef *= c
        out.append((coef, tuple(t[1] for t in combo), tuple(t[2] for t in combo)))
    return out


def coef_text(c, first):
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    body = "" if a == 1 else f"{a}*"
    return (sign if first else f" {sign} ") + body


def side_text(terms, names):
    if not terms:
        return "0"
    out = ""
    for i, (c, a, b) in enumerate(terms):
        out += coef_text(c, i == 0) + names[a] + "." + names[b]
    return out


def build(name, entry):
    factors = entry["factors"]
    names = entry["names"]
    gen_of = {}
    for key, label in names.items():
        if STAR not in key:
            gen_of[label] = key
    assert sorted(gen_of) == sorted(entry["order"]), name
    aux = []
    for key, label in names.items():
        if STAR in key:
            parts = [names[t] for t in expand(key, factors)]
            aux.append((label, " + ".join(parts)))
    # the product star is the tuple of factor stars; '*' when the star is the sum
    star_key = tuple(f.get("star", STAR) for f in factors)
    star = names[star_key]

    lines = [f"# {name}: literature operation names, relations read through the correspondence table",
             f"type {name}_lit {{",
             "  generators: " + ", ".join(entry["order"]) + ";"]
    if aux:
        lines.append("  aux: " + ",\n       ".join(f"{k} = {v}" for k, v in aux) + ";")
    lines.append(f"  star: {star};")
    lines.append("  relations:")
    count = 0
    for rels in itertools.product(*[f["rels"] for f in factors]):
        lhs = product_side([r[0] for r in rels])
        rhs = product_side([r[1] for r in rels])
        lines.append(f"    ({side_text(lhs, names)} | {side_text(rhs, names)})")
        count += 1
    lines.append("}")
    return "\n".join(lines) + "\n", count


def main():
    root = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent
    outdir = root / "data" / "literature"
    outdir.mkdir(parents=True, exist_ok=True)
    for name, entry in TYPES.items():
        text, count = build(name, entry)
        (outdir / f"{name}.bqr").write_text(text)
        print(f"{name}: {count} relations")


if __name__ == "__main__":
    main()
