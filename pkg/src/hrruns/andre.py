"""Andre permutations, snakes, counting triangles and number oracles."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .actions import _relabel
from .errors import CapacityError, DomainError, FamilyError
from .minmax_tree import build_tree, factorize, leaf_count
from .perm_core import PermWord, des_b, iter_entries, check_capacity, peaks_valleys, des

STATISTICS = ("d", "b", "b_bar", "b_hat", "d_hat", "d_bar", "d_tilde")


def _all_inner_min(w: PermWord) -> bool:
    t = build_tree(w)
    return all(t.kind(p) == "min" for p in t.inner_positions())


def _andre_word(seq, first_valley: int) -> bool:
    """Definition test on a plain integer word (type B callers prepend 0)."""
    n = len(seq)
    if n >= 2 and seq[-2] > seq[-1]:
        return False
    for i in range(1, n - 1):
        if seq[i - 1] > seq[i] > seq[i + 1]:
            return False
    for i in range(first_valley, n):
        f = factorize(seq, i)
        # an empty w2 makes the condition vacuous (this is what admits 2314)
        if f.w2 and (not f.w4 or max(f.w2) >= max(f.w4)):
            return False
    return True


def is_andre_A(w: PermWord, method: str = "definition") -> bool:
    if w.family != "A":
        raise FamilyError("is_andre_A expects a type A word")
    if method == "tree":
        return _all_inner_min(w)
    if method != "definition":
        raise DomainError(f"unknown method {method!r}")
    return _andre_word(w.entries, 2)


def is_andre_B(w: PermWord, method: str = "definition") -> bool:
    """Type B test on the word ``0 w``: the zero takes part in the
    double-descent, final-descent and valley checks."""
    if w.family != "B":
        raise FamilyError("is_andre_B expects a type B word")
    if method == "tree":
        return _all_inner_min(w)
    if method != "definition":
        raise DomainError(f"unknown method {method!r}")
    return _andre_word((0,) + w.entries, 2)


@dataclass(frozen=True)
class AlternatingClass:
    is_downup: bool
    is_snake: bool


def _is_downup(e) -> bool:
    return all((e[i] > e[i + 1]) == (i % 2 == 0) for i in range(len(e) - 1))


def alternating_class(w: PermWord) -> AlternatingClass:
    if w.family != "B":
        raise FamilyError("alternating_class expects a type B word")
    du = _is_downup(w.entries)
    return AlternatingClass(du, du and w.entries[0] > 0)


def snake_to_andre(w: PermWord) -> PermWord:
    """Turn every max-node at positions >= 1 of the snake's tree into a min-node.

    Node 0 of a snake tree is a leaf or a min-node, so it never needs the
    sign-flipping generator; the map keeps the multiset of labels.
    """
    if w.family != "B" or not alternating_class(w).is_snake:
        raise DomainError(f"{w} is not a snake")
    t = build_tree(w)
    for p in t.inner_positions():
        if p >= 1 and t.kind(p) == "max":
            t = _relabel(t, p)
    return t.word()


# --- tables -------------------------------------------------------------------

@dataclass(frozen=True)
class StatTable:
    n: int
    statistic: str
    rows: dict = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.rows.values())

    def values(self) -> tuple[int, ...]:
        return tuple(self.rows[k] for k in sorted(self.rows))

    def to_csv(self, header: bool = True) -> str:
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        if header:
            wr.writerow(["n", "k", "count"])
        for k in sorted(self.rows):
            wr.writerow([self.n, k, self.rows[k]])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "statistic": self.statistic,
                           "rows": {str(k): v for k, v in sorted(self.rows.items())}})


def _natural_range(n: int, statistic: str) -> range:
    top = (n + 2) // 2  # ceil((n+1)/2)
    return {
        "d": range(0, (n - 1) // 2 + 1),
        "b": range(1, top + 1),
        "b_bar": range(0, top),
        "b_hat": range(0, n // 2 + 1),
        "d_hat": range(1, top + 1),
        "d_bar": range(1, top + 1),
        "d_tilde": range(0, n // 2 + 1),
    }[statistic]


def _andre_b_candidates(n: int, family: str = "B"):
    """Words whose ``0 w`` has no double descent and a final ascent."""
    for e in iter_entries(n, family):
        s = (0,) + e
        if s[-2] > s[-1]:
            continue
        if any(s[i - 1] > s[i] > s[i + 1] for i in range(1, n)):
            continue
        yield e


def andre_b_words(n: int, family: str = "B") -> list[PermWord]:
    out = []
    for e in _andre_b_candidates(n, family):
        w = PermWord(e, "B")
        if is_andre_B(w):
            out.append(w)
    return out


def andre_a_words(n: int) -> list[PermWord]:
    out = []
    for e in iter_entries(n, "A"):
        if n >= 2 and e[-2] > e[-1]:
            continue
        if any(e[i - 1] > e[i] > e[i + 1] for i in range(1, n - 1)):
            continue
        w = PermWord(e, "A")
        if is_andre_A(w):
            out.append(w)
    return out


def snakes(n: int, barred: bool = False) -> list[PermWord]:
    """Snakes of size n (or their bars, which start negative and go up first)."""
    out = []
    for e in iter_entries(n, "Bgt"):
        if _is_downup(e):
            out.append(PermWord(tuple(-x for x in e) if barred else e, "B"))
    return out


def count_table(n: int, statistic: str, cap: int | None = None) -> StatTable:
    if statistic not in STATISTICS:
        raise DomainError(f"unknown statistic {statistic!r}; expected one of {STATISTICS}")
    check_capacity(n, "A" if statistic == "d" else "B", cap)
    rows = {k: 0 for k in _natural_range(n, statistic)}

    def bump(k):
        rows[k] = rows.get(k, 0) + 1

    if statistic == "d":
        for w in andre_a_words(n):
            bump(des(w.entries))
    elif statistic in ("b", "d_hat", "d_bar"):
        even_only = statistic != "b"
        for w in snakes(n, barred=statistic == "d_bar"):
            if even_only and w.negative_count() % 2:
                continue
            bump(leaf_count(build_tree(w)))
    elif statistic == "b_bar":
        for w in andre_b_words(n):
            bump(des_b(w.entries))
    else:
        family = "D" if statistic == "d_tilde" else "B"
        for w in andre_b_words(n, family):
            bump(len(peaks_valleys(w.entries, True)[1]))
    return StatTable(n, statistic, rows)


# --- number oracles -----------------------------------------------------------

ORACLE_CAP = 25


def euler_numbers(N: int) -> list[int]:
    """E_0..E_N from the Seidel boustrophedon triangle."""
    if not 0 <= N <= ORACLE_CAP:
        raise CapacityError(f"N={N} outside 0..{ORACLE_CAP}")
    out = [1]
    row = [1]
    for _ in range(N):
        nxt = [0]
        for v in reversed(row):
            nxt.append(nxt[-1] + v)
        row = nxt
        out.append(row[-1])
    return out


def springer_numbers(N: int) -> list[int]:
    """S_0..S_N with f = 1/(cos - sin): f' = g f and g' = 1 + g^2, f(0) = g(0) = 1."""
    if not 0 <= N <= ORACLE_CAP:
        raise CapacityError(f"N={N} outside 0..{ORACLE_CAP}")
    f, g = [1], [1]
    for n in range(N):
        f.append(sum(comb(n, k) * g[k] * f[n - k] for k in range(n + 1)))
        g.append((1 if n == 0 else 0) + sum(comb(n, k) * g[k] * g[n - k] for k in range(n + 1)))
    return f


def springer_series_oracle(N: int) -> list[int]:
    """Second oracle: invert the Taylor series of cos - sin with exact rationals."""
    fact = [1]
    for k in range(1, N + 1):
        fact.append(fact[-1] * k)
    # cos x - sin x = sum a_k x^k with a_k = (1, -1, -1, 1, ...)[k mod 4] / k!
    a = [Fraction((1, -1, -1, 1)[k % 4], fact[k]) for k in range(N + 1)]
    inv = [Fraction(1)]
    for k in range(1, N + 1):
        inv.append(-sum(a[j] * inv[k - j] for j in range(1, k + 1)))
    return [int(inv[k] * fact[k]) for k in range(N + 1)]


def d_recurrence(N: int) -> dict[int, list[int]]:
    """Rows ``n = 1..N`` of ``d_{n,k} = (k+1) d_{n-1,k} + (n-2k) d_{n-1,k-1}``."""
    if not 1 <= N <= ORACLE_CAP:
        raise CapacityError(f"N={N} outside 1..{ORACLE_CAP}")
    rows = {1: [1]}
    for n in range(2, N + 1):
        prev = rows[n - 1]
        width = (n - 1) // 2 + 1
        get = lambda k: prev[k] if 0 <= k < len(prev) else 0
        rows[n] = [(k + 1) * get(k) + (n - 2 * k) * get(k - 1) for k in range(width)]
    return rows


def bbar_recurrence(N: int) -> dict[int, list[int]]:
    """Rows ``n = 1..N`` of ``(1+2k) b_{n-1,k} + (2n-4k+2) b_{n-1,k-1}``."""
    if not 1 <= N <= ORACLE_CAP:
        raise CapacityError(f"N={N} outside 1..{ORACLE_CAP}")
    rows = {1: [1]}
    for n in range(2, N + 1):
        prev = rows[n - 1]
        width = n // 2 + 1
        get = lambda k: prev[k] if 0 <= k < len(prev) else 0
        rows[n] = [(1 + 2 * k) * get(k) + (2 * n - 4 * k + 2) * get(k - 1) for k in range(width)]
    return rows
