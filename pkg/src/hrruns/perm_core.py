"""Permutation words of types A, B and D and their run statistics.

A type A word is a rearrangement of ``1..n``.  A type B word is
``pi_1 .. pi_n`` with distinct absolute values ``1..n``; the virtual
``pi_0 = 0`` is never stored, and every statistic below says whether it
reads it.  Type D words are type B words with an even number of negative
entries and share the B representation.

>>> w = PermWord((7, 3, 2, 5, 6, 9, 1, 4, 8))
>>> perm_stats(w).run
4
>>> perm_stats(PermWord((5, 1, 4, -3, -6, 2), "B")).run
5
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

from .errors import CapacityError, DomainError, FamilyError

FAMILIES = ("A", "B", "D", "Bgt", "Blt", "Dgt", "Dlt")
DEFAULT_CAPS = {"A": 12, "B": 9, "D": 9}


@dataclass(frozen=True)
class PermWord:
    """A permutation word; ``family`` is ``"A"`` or ``"B"``.

    The empty word (n = 0) is allowed for family B only, where it is the
    unique element of B_0 (needed by the Chow-Ma convolution).
    """

    entries: tuple[int, ...]
    family: str = "A"

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.family not in ("A", "B"):
            raise FamilyError(f"unknown word family {self.family!r}")
        n = len(entries)
        if n == 0 and self.family == "A":
            raise DomainError("type A words must be nonempty")
        if sorted(abs(x) for x in entries) != list(range(1, n + 1)):
            raise DomainError(f"absolute values of {entries} are not 1..{n}")
        if self.family == "A" and any(x < 0 for x in entries):
            raise DomainError(f"type A word {entries} has a negative entry")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __lt__(self, other: PermWord):
        return (self.family, self.entries) < (other.family, other.entries)

    def negative_count(self) -> int:
        return sum(1 for x in self.entries if x < 0)

    def text(self) -> str:
        return format_perm(self.entries)

    def __str__(self):
        return self.text()


def format_perm(entries: Sequence[int]) -> str:
    """Comma form, e.g. ``5,-6,2,3,1,4``; empty word is ``()``."""
    if not entries:
        return "()"
    return ",".join(str(x) for x in entries)


def parse_perm(text: str, family: str | None = None) -> PermWord:
    """Parse ``"5,-6,2,3,1,4"``, ``"5 -6 2 3 1 4"`` or, for type A with n <= 9, ``"562314"``.

    Without an explicit family, words with a negative entry are type B.
    """
    s = text.strip().replace("−", "-")
    if s in ("", "()", "e"):
        return PermWord((), family or "B")
    try:
        if "," in s:
            entries = tuple(int(tok) for tok in s.split(","))
        elif len(s.split()) > 1:
            entries = tuple(int(tok) for tok in s.split())
        elif s.isdigit():
            entries = tuple(int(ch) for ch in s)
        else:
            entries = (int(s),)
    except ValueError as exc:
        raise DomainError(f"cannot parse permutation {text!r}") from exc
    if family is None:
        family = "B" if any(x < 0 for x in entries) else "A"
    if family not in ("A", "B"):
        family = "B"
    return PermWord(entries, family)


def _base_family(family: str) -> str:
    if family not in FAMILIES:
        raise FamilyError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return family[0]


def check_capacity(n: int, family: str, cap: int | None = None) -> None:
    limit = DEFAULT_CAPS[_base_family(family)] if cap is None else cap
    if not 1 <= n <= limit:
        raise CapacityError(f"n={n} outside 1..{limit} for family {family}")


def _signed_dfs(n: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    used = [False] * (n + 1)
    for x in prefix:
        used[abs(x)] = True
    alphabet = [v for v in range(-n, n + 1) if v != 0]
    word = list(prefix)

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        for v in alphabet:
            if not used[abs(v)]:
                used[abs(v)] = True
                word.append(v)
                yield from rec()
                word.pop()
                used[abs(v)] = False

    yield from rec()


def iter_entries(n: int, family: str, prefix: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    """Raw-tuple version of :func:`enumerate_perms` (no capacity check)."""
    base = _base_family(family)
    if base == "A":
        head = tuple(prefix)
        rest = sorted(set(range(1, n + 1)) - set(head))
        for tail in permutations(rest):
            yield head + tail
        return
    want_even = base == "D"
    sign = family[1:]
    for word in _signed_dfs(n, tuple(prefix)):
        if sign == "gt" and word[0] < 0:
            continue
        if sign == "lt" and word[0] > 0:
            continue
        if want_even and sum(1 for x in word if x < 0) % 2:
            continue
        yield word


def enumerate_perms(n: int, family: str = "A", cap: int | None = None,
                    prefix: tuple[int, ...] = ()) -> Iterator[PermWord]:
    """Yield every word of ``family`` of size ``n`` in lexicographic order.

    ``prefix`` restricts the stream to words starting with it, which is how
    enumeration is partitioned across workers.
    """
    check_capacity(n, family, cap)
    wf = "A" if family == "A" else "B"
    for entries in iter_entries(n, family, prefix):
        yield PermWord(entries, wf)


def partition_prefixes(n: int, family: str) -> list[tuple[int, ...]]:
    """First-letter prefixes that together cover the family exactly once."""
    base = _base_family(family)
    if base == "A":
        return [(v,) for v in range(1, n + 1)]
    sign = family[1:]
    values = [v for v in range(-n, n + 1) if v != 0]
    if sign == "gt":
        values = [v for v in values if v > 0]
    elif sign == "lt":
        values = [v for v in values if v < 0]
    return [(v,) for v in values]


# --- raw statistics on tuples -------------------------------------------

def direction_changes(seq: Sequence[int]) -> int:
    c = 0
    for i in range(1, len(seq) - 1):
        if (seq[i] - seq[i - 1]) * (seq[i + 1] - seq[i]) < 0:
            c += 1
    return c


def run_a(entries: Sequence[int]) -> int:
    return direction_changes(entries) + 1


def run_b(entries: Sequence[int]) -> int:
    return direction_changes((0,) + tuple(entries)) + 1


def des(entries: Sequence[int]) -> int:
    return sum(1 for i in range(len(entries) - 1) if entries[i] > entries[i + 1])


def des_b(entries: Sequence[int]) -> int:
    return des((0,) + tuple(entries))


def as_case_rule(entries: Sequence[int]) -> int:
    """Longest alternating subsequence via the first-step case rule."""
    if len(entries) == 1:
        return 1
    return run_a(entries) + (1 if entries[0] > entries[1] else 0)


def as_dp(entries: Sequence[int]) -> int:
    """Longest subsequence with pattern ``a1 > a2 < a3 > ...`` by DP."""
    odd = []   # best odd length ending here (next step must go down)
    even = []  # best even length ending here (next step must go up)
    for i, x in enumerate(entries):
        o, e = 1, 0
        for j in range(i):
            if entries[j] < x and even[j]:
                o = max(o, even[j] + 1)
            if entries[j] > x:
                e = max(e, odd[j] + 1)
        odd.append(o)
        even.append(e)
    return max(odd + even)


def peaks_valleys(entries: Sequence[int], with_zero: bool) -> tuple[frozenset, frozenset]:
    """Peak and valley positions (1-based), reading pi_0 = 0 iff ``with_zero``."""
    seq = (0,) + tuple(entries)
    start = 1 if with_zero else 2
    pk, val = set(), set()
    for i in range(start, len(entries)):
        a, b, c = seq[i - 1], seq[i], seq[i + 1]
        if a < b > c:
            pk.add(i)
        elif a > b < c:
            val.add(i)
    return frozenset(pk), frozenset(val)


def left_peaks(entries: Sequence[int]) -> frozenset:
    return peaks_valleys(entries, True)[0]


@dataclass(frozen=True)
class StatRecord:
    run: int
    as_len: int | None
    des: int
    des_B: int | None
    pk_set: frozenset
    val_set: frozenset
    lpk_set: frozenset
    lpv_set: frozenset
    negs: frozenset
    neg_parity: str


def perm_stats(w: PermWord) -> StatRecord:
    """All word statistics of ``w``.

    Type A: ``run`` and peaks ignore pi_0; ``lpk_set`` reads pi_0 = 0, and
    ``as_len`` uses the first-step case rule (cross-checked against
    :func:`as_dp` in the tests).  Type B: every statistic except plain
    ``des`` reads pi_0 = 0, so position 1 can be a valley.
    """
    e = w.entries
    negs = frozenset(x for x in e if x < 0)
    parity = "even" if len(negs) % 2 == 0 else "odd"
    if w.family == "A":
        pk, val = peaks_valleys(e, False)
        lpk = left_peaks(e)
        return StatRecord(run=run_a(e), as_len=as_case_rule(e), des=des(e), des_B=None,
                          pk_set=pk, val_set=val, lpk_set=lpk, lpv_set=lpk | val,
                          negs=negs, neg_parity=parity)
    pk, val = peaks_valleys(e, True)
    return StatRecord(run=run_b(e), as_len=None, des=des(e), des_B=des_b(e),
                      pk_set=pk, val_set=val, lpk_set=pk, lpv_set=pk | val,
                      negs=negs, neg_parity=parity)


def run_stat(w: PermWord) -> int:
    return run_a(w.entries) if w.family == "A" else run_b(w.entries)


def lpv(w: PermWord) -> frozenset:
    pk, val = peaks_valleys(w.entries, w.family == "B")
    if w.family == "A":
        pk = left_peaks(w.entries)
    return pk | val


# --- symmetries -----------------------------------------------------------

def complement(w: PermWord) -> PermWord:
    if w.family != "A":
        raise FamilyError("complement is defined on type A words")
    n = w.n
    return PermWord(tuple(n + 1 - x for x in w.entries), "A")


def bar(w: PermWord) -> PermWord:
    if w.family != "B":
        raise FamilyError("bar is defined on type B words")
    return PermWord(tuple(-x for x in w.entries), "B")


def standardize_signed(entries: Sequence[int]) -> tuple[int, ...]:
    """Relabel absolute values to 1..k keeping signs; order preserving."""
    ranks = {v: r for r, v in enumerate(sorted(abs(x) for x in entries), 1)}
    return tuple(ranks[abs(x)] if x > 0 else -ranks[abs(x)] for x in entries)


def _shift_across_one(x: int) -> int:
    return x - 1 if x > 0 else x + 1


def _unshift_across_one(x: int) -> int:
    return x + 1 if x > 0 else x - 1


def chow_ma_split(w: PermWord) -> tuple[PermWord, PermWord]:
    """Split ``w = pi' 1 pi''`` into type B words ``(sigma'', tau'')``.

    Left: shift ``pi' 1`` across 1, reverse and negate the first k letters.
    Right: shift ``1 pi''`` across 1 and drop the leading 0.  Both parts are
    then standardized to absolute values 1..k; the choice of values is
    recovered by :func:`chow_ma_merge`.  ``des(w) = des_B(sigma'') +
    des_B(tau'')``.
    """
    if w.family != "B":
        raise FamilyError("chow_ma_split expects a type B word")
    if 1 not in w.entries:
        raise DomainError(f"{w} does not contain the entry +1")
    k = w.entries.index(1)
    sigma = [_shift_across_one(x) for x in w.entries[: k + 1]]
    left = tuple(-x for x in reversed(sigma[:k]))
    tau = [_shift_across_one(x) for x in w.entries[k:]]
    right = tuple(tau[1:])
    return (PermWord(standardize_signed(left), "B"),
            PermWord(standardize_signed(right), "B"))


def chow_ma_merge(left: PermWord, right: PermWord, left_values) -> PermWord:
    """Inverse of :func:`chow_ma_split` given the absolute values left of 1."""
    k, m = left.n, right.n
    left_values = sorted(left_values)
    if len(left_values) != k or not set(left_values) <= set(range(2, k + m + 2)):
        raise DomainError("left_values must be k values from 2..n+1")
    right_values = sorted(set(range(2, k + m + 2)) - set(left_values))

    def unstd(entries, values):
        shifted = [v - 1 for v in values]
        return [shifted[abs(x) - 1] if x > 0 else -shifted[abs(x) - 1] for x in entries]

    sigma = [-x for x in reversed(unstd(left.entries, left_values))]
    tau = unstd(right.entries, right_values)
    word = [_unshift_across_one(x) for x in sigma] + [1] + [_unshift_across_one(x) for x in tau]
    return PermWord(tuple(word), "B")
