"""Polynomials assembled from counting tables and from restricted tree families."""

from __future__ import annotations

from functools import lru_cache

from ..andre import StatTable, count_table, d_recurrence
from ..errors import DomainError
from ..minmax_tree import build_tree, tree_profile
from ..perm_core import check_capacity, iter_entries, PermWord
from .arith import IntPoly

NAMES = ("andre_D", "T", "M_formula", "M_trees")
TREE_VARIANTS = {
    # variant: (word family, counted kind)
    "A": ("A", "min"),
    "Bplus": ("B", "max"),
    "Bminus": ("B", "min"),
    "Dplus": ("D", "max"),
    "Dminus": ("D", "min"),
}


def _in_tilde_family(t, kind: str) -> bool:
    """Every two-child node has ``kind``, and every one-child node of ``kind``
    sits at an even rank among the one-child nodes."""
    prof = tree_profile(t)
    if any(t.kind(p) != kind for p in prof.two_child_positions):
        return False
    even = set(prof.even_one_child_positions)
    return all(p in even for p in prof.one_child_positions if t.kind(p) == kind)


@lru_cache(maxsize=None)
def _tilde_rows(n: int, variant: str) -> tuple:
    family, kind = TREE_VARIANTS[variant]
    rows: dict[int, int] = {}
    for e in iter_entries(n, family):
        t = build_tree(PermWord(e, "A" if family == "A" else "B"))
        if not _in_tilde_family(t, kind):
            continue
        prof = tree_profile(t)
        k = prof.min_node_count if kind == "min" else prof.max_node_count
        rows[k] = rows.get(k, 0) + 1
    return tuple(sorted(rows.items()))


def tilde_tree_table(n: int, variant: str, cap: int | None = None) -> StatTable:
    """Trees of the restricted family counted by their min-nodes (A, Bminus,
    Dminus) or max-nodes (Bplus, Dplus)."""
    if variant not in TREE_VARIANTS:
        raise DomainError(f"unknown variant {variant!r}; expected one of {tuple(TREE_VARIANTS)}")
    family = TREE_VARIANTS[variant][0]
    check_capacity(n, family, cap if cap is not None else (8 if family == "A" else 7))
    return StatTable(n, f"tilde_{variant}", dict(_tilde_rows(n, variant)))


def table_polynomial(table: StatTable, shift: int = 0) -> IntPoly:
    """``sum_k rows[k] x^(k + shift)``."""
    top = max(table.rows, default=-1) + shift
    return IntPoly(tuple(table.rows.get(k - shift, 0) for k in range(top + 1)))


def _m_formula(n: int) -> IntPoly:
    ell = (n + 1) // 2
    d = d_recurrence(n)[n]
    return 2 * IntPoly.from_terms((d[k - 1], k, ell - k) for k in range(1, ell + 1) if k - 1 < len(d))


def named_polynomial(n: int, name: str, cap: int | None = None) -> IntPoly:
    if name not in NAMES:
        raise DomainError(f"unknown polynomial {name!r}; expected one of {NAMES}")
    if name == "andre_D":
        return table_polynomial(count_table(n, "d", cap), 1)
    if name == "T":
        return table_polynomial(count_table(n, "b", cap))
    if n < 2:
        raise DomainError("M_n is defined for n >= 2")
    if name == "M_formula":
        return _m_formula(n)
    return 2 * table_polynomial(tilde_tree_table(n, "A", cap), 1)
