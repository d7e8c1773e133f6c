"""Writes data/catalog in the canonical layout read by the algebroid tool."""
import json
import pathlib
from fractions import Fraction

OUT = pathlib.Path(__file__).resolve().parents[2] / "data" / "catalog"


def q(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def algebra(dim, brackets, name=None):
    """brackets: {(i, j): {k: c}} with i < j."""
    doc = {"dim": dim, "brackets": []}
    if name:
        doc["name"] = name
    for (i, j), coeffs in sorted(brackets.items()):
        doc["brackets"].append({"i": i, "j": j, "coeffs": [[k, q(c)] for k, c in sorted(coeffs.items()) if c]})
    return doc


def bracket(alg, i, j):
    dim = alg["dim"]
    out = [Fraction(0)] * dim
    sign = 1
    if i > j:
        i, j, sign = j, i, -1
    for b in alg["brackets"]:
        if (b["i"], b["j"]) == (i, j):
            for k, c in b["coeffs"]:
                out[k] += sign * Fraction(c)
    return out


def adjoint(alg):
    n = alg["dim"]
    action = []
    for i in range(n):
        cols = [bracket(alg, i, j) if i != j else [Fraction(0)] * n for j in range(n)]
        action.append([[q(cols[c][r]) for c in range(n)] for r in range(n)])
    return {"dim_E": n, "action": action}


def write(name, doc):
    (OUT / name).write_text(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n")


ALGEBRAS = {
    "zero.json": algebra(0, {}, "0"),
    "r1.json": algebra(1, {}, "R"),
    "r2.json": algebra(2, {}, "R^2"),
    "r3.json": algebra(3, {}, "R^3"),
    "r4.json": algebra(4, {}, "R^4"),
    "h3.json": algebra(3, {(0, 1): {2: 1}}, "h3"),
    "aff1.json": algebra(2, {(0, 1): {1: 1}}, "aff1"),
    "su2.json": algebra(3, {(0, 1): {2: 1}, (0, 2): {1: -1}, (1, 2): {0: 1}}, "su2"),
    "sl2.json": algebra(3, {(0, 1): {2: -2}, (0, 2): {1: 2}, (1, 2): {0: 2}}, "sl2"),
    "solv4.json": algebra(4, {(0, 1): {1: 1}, (0, 2): {2: -1}, (1, 2): {3: 1}}, "solv4"),
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, doc in ALGEBRAS.items():
        write(name, doc)
    for base in ("su2", "sl2", "h3", "aff1"):
        write(f"{base}_adjoint.json", adjoint(ALGEBRAS[f"{base}.json"]))
    for k in (1, 2, 3):
        write(f"zero_trivial{k}.json", {"dim_E": k, "action": []})

    write("sin_t.json", {"kind": "rank1_anchor", "p": "0 + 1*sin(1t)", "N_range": [3, 8]})
    write("sin_2t.json", {"kind": "rank1_anchor", "p": "0 + 1*sin(2t)", "N_range": [3, 8]})
    write("one.json", {"kind": "rank1_anchor", "p": "1", "N_range": [3, 8]})
    write("action_r_dt.json", {"kind": "action", "g": ALGEBRAS["r1.json"], "phi": ["1"], "N_range": [3, 8]})
    write("action_sl2.json", {"kind": "action", "g": ALGEBRAS["sl2.json"],
                              "phi": ["1", "0 + 1*cos(2t)", "0 + 1*sin(2t)"], "N_range": [4, 10]})

    write("fiber_sl2_t0.json", {"dim_A": 3, "dim_M": 1, "dim_E": 1, "anchor": [["1", "1", "0"]]})
    write("fiber_unit.json", {"dim_A": 1, "dim_M": 1, "dim_E": 1, "anchor": [["1"]]})
    write("fiber_zero_anchor.json", {"dim_A": 1, "dim_M": 1, "dim_E": 1, "anchor": [["0"]]})

    lie = [{"algebra": "zero.json", "betti": [1], "euler": 1}]
    for name in ("r1", "r2", "r3", "r4", "h3", "aff1", "su2", "sl2", "solv4"):
        lie.append({"algebra": f"{name}.json", "euler": 0})
    pinned = {"h3.json": [1, 2, 2, 1], "su2.json": [1, 0, 0, 1], "sl2.json": [1, 0, 0, 1], "aff1.json": [1, 1, 0]}
    for entry in lie:
        if entry["algebra"] in pinned:
            entry["betti"] = pinned[entry["algebra"]]

    manifest = {
        "lie": lie,
        "representations": [
            {"algebra": "su2.json", "rep": "su2_adjoint.json", "euler": 0, "betti": [0, 0, 0, 0]},
            {"algebra": "sl2.json", "rep": "sl2_adjoint.json", "euler": 0},
            {"algebra": "h3.json", "rep": "h3_adjoint.json", "euler": 0},
            {"algebra": "aff1.json", "rep": "aff1_adjoint.json", "euler": 0},
        ] + [{"algebra": "zero.json", "rep": f"zero_trivial{k}.json", "euler": k} for k in (1, 2, 3)],
        "circle": [
            {"file": "sin_t.json", "betti": [1, 3], "euler": -2},
            {"file": "sin_2t.json", "betti": [1, 5], "euler": -4},
            {"file": "one.json", "betti": [1, 1], "euler": 0},
            {"file": "action_r_dt.json", "betti": [1, 1], "euler": 0},
            {"file": "action_sl2.json", "euler": 0},
        ],
        "kunneth": [
            {"a": "su2.json", "b": "su2.json", "betti": [1, 0, 0, 2, 0, 0, 1]},
            {"a": "h3.json", "b": "aff1.json"},
            {"a": "one.json", "b": "su2.json", "betti": [1, 1, 0, 1, 1]},
            {"a": "h3.json", "rep_a": "h3_adjoint.json", "b": "aff1.json", "rep_b": "aff1_adjoint.json"},
        ],
        "hopf": [{"algebra": f"r{n}.json", "expect": "hopf"} for n in (1, 2, 3, 4)]
        + [{"algebra": "su2.json", "expect": "not_abelian"}],
        "symbol": [
            {"fiber": "fiber_unit.json", "alpha": ["1"], "exact": True},
            {"fiber": "fiber_sl2_t0.json", "alpha": ["1"], "exact": True},
            {"fiber": "fiber_sl2_t0.json", "alpha": ["0"], "exact": False},
            {"fiber": "fiber_zero_anchor.json", "alpha": ["1"], "exact": False},
        ],
    }
    write("manifest.json", manifest)


if __name__ == "__main__":
    main()
