"""Generating polynomials of the permutation families, by brute force.

Words are materialized in numpy blocks (one block per first letter), and
statistics are computed column-wise, so S_10 and B_7 take seconds.
"""

from __future__ import annotations

import contextlib
from functools import lru_cache, partial
from itertools import permutations

import numpy as np

from ..errors import CapacityError, DomainError
from ..parallel import add_histograms, map_partitions
from ..perm_core import FAMILIES, _base_family, check_capacity
from .arith import IntPoly

STATS = ("run", "as", "des", "des_B", "lpk")

_OVERRIDES: dict = {}


@contextlib.contextmanager
def override(kind: str, n: int, family: str, poly: IntPoly):
    """Temporarily replace one generated polynomial (for mutation tests)."""
    key = (kind, n, family)
    old = _OVERRIDES.get(key)
    _OVERRIDES[key] = poly
    try:
        yield
    finally:
        if old is None:
            _OVERRIDES.pop(key, None)
        else:
            _OVERRIDES[key] = old


@lru_cache(maxsize=None)
def _perm_table(r: int) -> np.ndarray:
    if r == 0:
        return np.zeros((1, 0), dtype=np.int8)
    return np.array(list(permutations(range(r))), dtype=np.int8)


@lru_cache(maxsize=None)
def _sign_table(r: int) -> np.ndarray:
    bits = (np.arange(1 << r)[:, None] >> np.arange(r)[None, ::-1]) & 1
    return (1 - 2 * bits).astype(np.int8)


def _abs_block(n: int, first: int) -> np.ndarray:
    rest = np.array([v for v in range(1, n + 1) if v != first], dtype=np.int8)
    tail = rest[_perm_table(n - 1)]
    head = np.full((tail.shape[0], 1), first, dtype=np.int8)
    return np.hstack([head, tail])


def word_block(n: int, family: str, first: int) -> np.ndarray:
    """All words of ``family`` whose first letter is ``first``, as rows."""
    base = _base_family(family)
    if base == "A":
        return _abs_block(n, first)
    a = _abs_block(n, abs(first))
    signs = _sign_table(n - 1)
    block = (a[:, None, 1:] * signs[None, :, :]).reshape(a.shape[0] * signs.shape[0], n - 1)
    block = np.hstack([np.full((block.shape[0], 1), first, dtype=np.int8), block])
    if base == "D":
        negs = (block < 0).sum(axis=1)
        block = block[negs % 2 == 0]
    return block


def _first_letters(n: int, family: str) -> list[int]:
    base = _base_family(family)
    if base == "A":
        return list(range(1, n + 1))
    sign = family[1:]
    vals = [v for v in range(-n, n + 1) if v]
    if sign == "gt":
        return [v for v in vals if v > 0]
    if sign == "lt":
        return [v for v in vals if v < 0]
    return vals


def _direction_changes(a: np.ndarray) -> np.ndarray:
    d = np.sign(np.diff(a.astype(np.int16), axis=1))
    if d.shape[1] < 2:
        return np.zeros(a.shape[0], dtype=np.int64)
    return (d[:, :-1] * d[:, 1:] < 0).sum(axis=1)


def block_stat(a: np.ndarray, stat: str, typeB: bool) -> np.ndarray:
    rows, n = a.shape
    zero = np.zeros((rows, 1), dtype=a.dtype)
    if stat == "run":
        seq = np.hstack([zero, a]) if typeB else a
        return _direction_changes(seq) + 1
    if stat == "as":
        if typeB:
            raise DomainError("'as' is a type A statistic")
        first = (a[:, 0] > a[:, 1]).astype(np.int64) if n >= 2 else 0
        return _direction_changes(a) + 1 + first
    if stat == "des":
        return (a[:, :-1] > a[:, 1:]).sum(axis=1)
    if stat == "des_B":
        seq = np.hstack([zero, a])
        return (seq[:, :-1] > seq[:, 1:]).sum(axis=1)
    if stat == "lpk":
        seq = np.hstack([zero, a])
        mid = seq[:, 1:-1]
        return ((seq[:, :-2] < mid) & (mid > seq[:, 2:])).sum(axis=1)
    raise DomainError(f"unknown statistic {stat!r}; expected one of {STATS}")


def _histogram(n: int, family: str, stat: str, first: int) -> dict:
    a = word_block(n, family, first)
    if not len(a):
        return {}
    vals = block_stat(a, stat, _base_family(family) != "A")
    counts = np.bincount(vals, minlength=1)
    return {k: int(c) for k, c in enumerate(counts) if c}


_CACHE: dict = {}


def _stat_histogram(n: int, family: str, stat: str, jobs: int) -> dict:
    # keyed without jobs: the merge is commutative, so the result cannot depend on it
    key = (n, family, stat)
    if key not in _CACHE:
        parts = _first_letters(n, family)
        _CACHE[key] = add_histograms(map_partitions(partial(_histogram, n, family, stat), parts, jobs))
    return _CACHE[key]


def stat_polynomial(n: int, family: str, stat: str, jobs: int = 1, cap: int | None = None) -> IntPoly:
    """``sum x^stat(w)`` over the family; ``n = 0`` gives 1 for the B families."""
    if family not in FAMILIES:
        raise DomainError(f"unknown family {family!r}")
    if stat not in STATS:
        raise DomainError(f"unknown statistic {stat!r}")
    if n == 0 and _base_family(family) != "A":
        return IntPoly((1,))
    check_capacity(n, family, cap)
    h = _stat_histogram(n, family, stat, 1 if jobs is None else jobs)
    return IntPoly(tuple(h.get(k, 0) for k in range(max(h, default=-1) + 1)))


def run_polynomial(n: int, family: str = "A", jobs: int = 1, cap: int | None = None) -> IntPoly:
    """``R_n`` and its type B/D relatives: ``sum x^run`` over the family."""
    hit = _OVERRIDES.get(("run", n, family))
    if hit is not None:
        return hit
    return stat_polynomial(n, family, "run", jobs, cap)


def eulerian_polynomial(n: int, type_: str = "A", jobs: int = 1, cap: int | None = None) -> IntPoly:
    """``A_n = sum x^(des+1)`` over S_n, or ``B_n = sum t^des_B`` over B_n (``B_0 = 1``)."""
    hit = _OVERRIDES.get(("eulerian", n, type_))
    if hit is not None:
        return hit
    if type_ == "A":
        return stat_polynomial(n, "A", "des", jobs, cap).shift(1)
    if type_ == "B":
        return stat_polynomial(n, "B", "des_B", jobs, cap)
    raise DomainError(f"Eulerian polynomials exist here for types A and B, not {type_!r}")


def as_polynomial(n: int, jobs: int = 1) -> IntPoly:
    return stat_polynomial(n, "A", "as", jobs)


def left_peak_counts(n: int, jobs: int = 1) -> list[int]:
    """``|{s in S_n : lpk(s) = j}|`` for ``j = 0..n//2``."""
    p = stat_polynomial(n, "A", "lpk", jobs)
    return [p.coeff(j) for j in range(n // 2 + 1)]


def clear_caches() -> None:
    _CACHE.clear()


__all__ = [
    "CapacityError", "as_polynomial", "block_stat", "clear_caches", "eulerian_polynomial",
    "left_peak_counts", "override", "run_polynomial", "stat_polynomial", "word_block",
]
