"""Regenerate tests/frozen_values.py from the exact rational oracle.

    python3 scripts/freeze_exact_values.py
"""
import sys
from itertools import combinations
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

import exact  # noqa: E402


def path(n):
    return [(i, i + 1) for i in range(n - 1)]


GRAPHS = {
    "K2": (2, [(0, 1)]),
    "K3": (3, list(combinations(range(3), 2))),
    "P3": (3, path(3)),
    "K5": (5, list(combinations(range(5), 2))),
    "P5": (5, path(5)),
    "S5": (5, [(0, i) for i in range(1, 5)]),
    "C4": (4, path(4) + [(0, 3)]),
    "C5": (5, path(5) + [(0, 4)]),
    "K33": (6, [(i, j) for i in range(3) for j in range(3, 6)]),
    "K23": (5, [(i, j) for i in range(2) for j in range(2, 5)]),
    "star_like_K3_7": (7, [(0, 1), (0, 2), (1, 2)] + [(0, i) for i in range(3, 7)]),
    "path_like_K3_7": (7, path(5) + [(4, 5), (4, 6), (5, 6)]),
    "star_like_K4_7": (7, list(combinations(range(4), 2)) + [(0, i) for i in range(4, 7)]),
    "petersen": (10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
                 + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]),
    "weighted_P3": (3, [(0, 1, 2), (1, 2, 3)]),
    "weighted_K4": (4, [(0, 1, 1), (0, 2, 2), (0, 3, 3), (1, 2, 4), (1, 3, 5), (2, 3, 6)]),
    "weighted_C5": (5, [(0, 1, "1/2"), (1, 2, 1), (2, 3, "3/2"), (3, 4, 2), (0, 4, "5/2")]),
}


def main():
    out = ['"""Exact reference values generated by scripts/freeze_exact_values.py.',
           "",
           "Produced with the rational oracle in tests/exact.py; do not edit by hand.",
           '"""',
           "from fractions import Fraction as F",
           "",
           "GRAPHS = {"]
    for name, (n, edges) in GRAPHS.items():
        es = [tuple(e) for e in edges]
        out.append(f"    {name!r}: ({n}, {es!r}),")
    out += ["}", "", "VALUES = {"]
    for name, (n, edges) in GRAPHS.items():
        m = exact.measures(n, edges)
        fields = ", ".join(f"{k!r}: F({v.numerator}, {v.denominator})" for k, v in m.items())
        out.append(f"    {name!r}: {{{fields}}},")
    out += ["}", ""]
    (ROOT / "tests" / "frozen_values.py").write_text("\n".join(out))


if __name__ == "__main__":
    main()
