#!/usr/bin/env python3
"""Regenerate the bundled example manifests in data/."""

import json
from fractions import Fraction
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "data"


def q(v):
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def fn(name, breakpoints, segments):
    return {"name": name, "breakpoints": [q(b) for b in breakpoints],
            "segments": [[q(c) for c in seg] for seg in segments]}


def signed_square(name):
    return fn(name, [0], [[0, 0, -1], [0, 0, 1]])


def example_4_1(K=6):
    segs = [[(K + 1) * K, 2 * K + 1, 1]]
    segs += [[m * (m - 1), 2 * m - 1, 1] for m in range(K, 0, -1)]
    segs += [[-m * (m + 1), 2 * m + 1, -1] for m in range(0, K + 1)]
    return fn("f", list(range(-K, K + 1)), segs)


def example_5_5_f1(K=8):
    bps, segs = [0], [[Fraction(-1, 2)]]
    for k in range(K):
        if k > 0:
            bps.append(2 * k)
        segs.append([Fraction(-2 * k * (2 * k + 2)) - Fraction(1, 2), 4 * k + 2])
    return fn("f1", bps, segs)


def example_5_9(K=32):
    f1 = fn("f1", [2 * k - 1 for k in range(1, K + 1)],
            [[0]] + [[-(2 * k * k - 1), 2 * k - 1] for k in range(1, K + 1)])
    f2 = fn("f2", [2 * k for k in range(1, K + 1)],
            [[0]] + [[-2 * k * (k + 1), 2 * k] for k in range(1, K + 1)])
    return f1, f2


def max_of_two(name="P"):
    return {"name": name, "kind": "tropical",
            "monomials": [{"exponents": [1, 0], "coefficient": "0"},
                          {"exponents": [0, 1], "coefficient": "0"}]}


def write(name, doc):
    (DATA / name).write_text(json.dumps(doc, indent=2) + "\n")


def main():
    DATA.mkdir(exist_ok=True)
    write("example2_1.json", {"functions": [signed_square("f"), fn("g", [], [[0, 1]])]})
    write("example3_4.json", {"functions": [fn("f", [-2, -1, 1, 2], [
        [-40, -46, -17, -2], [4, 6, 2], [1, 2, 1], [5, -1], [3, 18, -15, 3]])]})
    write("example4_1.json", {"functions": [example_4_1()]})
    write("example5_5.json", {
        "functions": [signed_square("f0"), example_5_5_f1()],
        "polynomials": [max_of_two()],
        "curves": [{"name": "c", "components": ["f0", "f1"]}]})
    write("example5_7.json", {
        "functions": [fn("zero", [], [[0]]), fn("line", [], [[0, 2]])],
        "polynomials": [{"name": "Q", "kind": "fermat", "weights": ["1", "2"], "power": 2}],
        "curves": [{"name": "c", "components": ["zero", "line"]}]})
    f1, f2 = example_5_9()
    write("example5_9.json", {
        "functions": [fn("zero", [], [[0]]), f1, f2],
        "polynomials": [{"name": "S", "kind": "fermat", "weights": ["1", "1"], "power": 1}],
        "curves": [{"name": "g", "components": ["zero", "f1"]},
                   {"name": "h", "components": ["f1", "f2"]}]})
    write("example6_4.json", {
        "functions": [signed_square("f0"), fn("f1", [0], [[0, 0, 1], [0, 0, -1]])],
        "polynomials": [max_of_two()],
        "curves": [{"name": "c", "components": ["f0", "f1"]}]})
    write("finite_roots.json", {
        "functions": [fn("a", [-2, 1], [[-3, -1], [1, 1], [-1, 3]]),
                      fn("b", [0], [[0, -2], [0, 1]]),
                      fn("c", [-1, 3, 4], [[1, 0], [2, 1], [-4, 3], [-16, 6]])],
        "curves": [{"name": "k", "components": ["a", "b", "c"]}]})
    write("tropical_product.json", {"tropical_products": [{
        "name": "p", "factors": [{"numerator": ["0", "-inf", "1"], "denominator": ["0"]}]}]})


if __name__ == "__main__":
    main()
