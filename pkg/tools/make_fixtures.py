"""Write the bundled b-files from recurrences that share no code with the enumerators."""

from __future__ import annotations

import sys
from math import comb
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "hrruns" / "fixtures"


def runs_triangle(n_max):
    # R(n,k) = k R(n-1,k) + 2 R(n-1,k-1) + (n-k) R(n-1,k-2), R(2,1) = 2
    rows = {2: {1: 2}}
    for n in range(3, n_max + 1):
        p = rows[n - 1]
        rows[n] = {k: k * p.get(k, 0) + 2 * p.get(k - 1, 0) + (n - k) * p.get(k - 2, 0) for k in range(1, n)}
    return [rows[n][k] for n in range(2, n_max + 1) for k in range(1, n)]


def andre_triangle(n_max):
    rows = {1: [1]}
    for n in range(2, n_max + 1):
        p = rows[n - 1]
        get = lambda k: p[k] if 0 <= k < len(p) else 0
        rows[n] = [(k + 1) * get(k) + (n - 2 * k) * get(k - 1) for k in range((n - 1) // 2 + 1)]
    return [v for n in range(1, n_max + 1) for v in rows[n]]


def left_peak_triangle(n_max):
    rows = {0: [1]}
    for n in range(1, n_max + 1):
        p = rows[n - 1]
        get = lambda k: p[k] if 0 <= k < len(p) else 0
        rows[n] = [(1 + 2 * k) * get(k) + (n - 2 * k + 1) * get(k - 1) for k in range(n // 2 + 1)]
    return [v for n in range(n_max + 1) for v in rows[n]]


def euler(n_max):
    # 2 E_{n+1} = sum_k C(n,k) E_k E_{n-k} for n >= 1
    e = [1, 1]
    for n in range(1, n_max):
        e.append(sum(comb(n, k) * e[k] * e[n - k] for k in range(n + 1)) // 2)
    return e[: n_max + 1]


def springer(n_max):
    # s * (cos - sin) = 1 coefficientwise; the k-th derivative of cos - sin at 0 is (1, -1, -1, 1)[k mod 4]
    s = [1]
    sign = (1, -1, -1, 1)
    for n in range(1, n_max + 1):
        s.append(-sum(comb(n, k) * sign[k % 4] * s[n - k] for k in range(1, n + 1)))
    return s


def main(argv=None):
    out = Path(argv[0]) if argv else OUT
    out.mkdir(parents=True, exist_ok=True)
    specs = {
        "A059427": (2, runs_triangle(12), "alternating runs triangle, rows n = 2..12"),
        "A094503": (1, andre_triangle(12), "Andre permutations by descents, rows n = 1..12"),
        "A008971": (0, left_peak_triangle(12), "permutations by left peaks, rows n = 0..12"),
        "A000111": (0, euler(20), "Euler numbers E_0..E_20"),
        "A001586": (0, springer(20), "Springer numbers S_0..S_20"),
    }
    for sid, (offset, values, desc) in specs.items():
        lines = [f"# {sid}: {desc}", "# generated by tools/make_fixtures.py"]
        lines += [f"{offset + i} {v}" for i, v in enumerate(values)]
        (out / f"b{sid[1:]}.txt").write_text("\n".join(lines) + "\n")
        print(f"wrote {sid}: {len(values)} terms")


if __name__ == "__main__":
    main(sys.argv[1:])
