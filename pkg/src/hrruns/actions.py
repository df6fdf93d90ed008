"""HR, modified (MHR) and type B (BHR) actions on min-max trees.

Each generator relabels a node and its right subtree through an
order-preserving rank table, flipping the node between min and max and
leaving every other node kind alone.  Kinds of active nodes are therefore
independent bits, which is what makes orbits have size ``2^#active``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, FamilyError, InvariantError, PreconditionError, StructureError
from .minmax_tree import MinMaxTree, build_tree
from .perm_core import PermWord, as_case_rule, lpv, run_a, run_b
from .polynomial.arith import IntPoly, basis_element

ACTIONS = ("HR", "MHR", "BHR")


def _relabel(t: MinMaxTree, i: int) -> MinMaxTree:
    rc = t.right[i]
    if rc is None:
        return t
    hi = t.span(rc)[1]
    seg = t.labels[i:hi + 1]
    ranked = sorted(seg)
    x = t.labels[i]
    if x == ranked[0]:
        image = {ranked[0]: ranked[-1], **{r: ranked[j - 1] for j, r in enumerate(ranked) if j}}
    elif x == ranked[-1]:
        image = {ranked[-1]: ranked[0], **{r: ranked[j + 1] for j, r in enumerate(ranked[:-1])}}
    else:
        raise StructureError(f"node at position {i} is neither min nor max of its right block")
    labels = list(t.labels)
    labels[i:hi + 1] = [image[v] for v in seg]
    return t.with_labels(labels)


def _check_index(t: MinMaxTree, i: int, lo: int) -> None:
    if not lo <= i <= t.n:
        raise IndexError(f"position {i} outside {lo}..{t.n}")


def psi(t: MinMaxTree, i: int) -> MinMaxTree:
    """HR generator on a type A tree.

    >>> psi(build_tree(PermWord((5, 6, 2, 3, 1, 4))), 2).word().text()
    '5,1,3,4,2,6'
    """
    if t.family != "A":
        raise FamilyError("psi acts on type A trees; use mhr_psi or bhr_psi")
    _check_index(t, i, 1)
    return _relabel(t, i)


def zero_parent(t: MinMaxTree) -> int | None:
    """Position of the parent of a leaf 0, else None."""
    if t.family == "B" and t.is_leaf(0):
        return t.parent[0]
    return None


def mhr_psi(t: MinMaxTree, i: int) -> MinMaxTree:
    if t.family != "B":
        raise FamilyError("mhr_psi acts on type B trees")
    _check_index(t, i, 1)
    if i == zero_parent(t):
        return t
    return _relabel(t, i)


def bhr_psi(t: MinMaxTree, i: int) -> MinMaxTree:
    """BHR generator; ``i = 0`` bars every label then applies all ``i >= 1``.

    When 0 is a leaf, ``i = 0`` is taken to be the identity.
    """
    if t.family != "B":
        raise FamilyError("bhr_psi acts on type B trees")
    _check_index(t, i, 0)
    if i:
        return _relabel(t, i)
    if t.is_leaf(0):
        return t
    u = t.with_labels(-x for x in t.labels)
    for j in range(1, t.n + 1):
        u = _relabel(u, j)
    return u


_GENERATORS = {"HR": psi, "MHR": mhr_psi, "BHR": bhr_psi}


def _action_kind(action: str, t: MinMaxTree) -> str:
    a = action.upper()
    if a not in _GENERATORS:
        raise DomainError(f"unknown action {action!r}; expected one of {ACTIONS}")
    if (a == "HR") != (t.family == "A"):
        raise FamilyError(f"{a} does not act on type {t.family} trees")
    return a


def apply_set(t: MinMaxTree, S: Iterable[int], action: str = "HR") -> MinMaxTree:
    gen = _GENERATORS[_action_kind(action, t)]
    for i in sorted(set(S)):
        t = gen(t, i)
    return t


def active_indices(t: MinMaxTree, action: str = "HR") -> tuple[int, ...]:
    a = _action_kind(action, t)
    inner = t.inner_positions()
    if a == "HR":
        return tuple(inner)
    if a == "MHR":
        zp = zero_parent(t)
        return tuple(p for p in inner if p >= 1 and p != zp)
    return tuple(inner)


def kind_vector(t: MinMaxTree) -> dict:
    return {p: t.kind(p) for p in t.inner_positions()}


def flip_to_kinds(t: MinMaxTree, target: dict, action: str) -> MinMaxTree:
    """Flip the active nodes whose kind differs from ``target``."""
    active = set(active_indices(t, action))
    flips = []
    for p, want in target.items():
        have = t.kind(p)
        if have == want:
            continue
        if p not in active:
            raise PreconditionError(f"node {p} is frozen as {have}, cannot become {want}")
        flips.append(p)
    return apply_set(t, flips, action)


# --- orbits -------------------------------------------------------------------

@dataclass(frozen=True)
class Representatives:
    check: PermWord | None
    star: PermWord | None
    andre: PermWord | None


@dataclass(frozen=True)
class OrbitReport:
    base: PermWord
    action: str
    active_indices: tuple
    members: tuple
    stat: str
    stat_poly: IntPoly
    representatives: Representatives

    @property
    def size(self) -> int:
        return len(self.members)


def orbit_trees(t: MinMaxTree, action: str = "HR") -> list[MinMaxTree]:
    """All trees of the orbit, visiting subsets in Gray-code order."""
    gen = _GENERATORS[_action_kind(action, t)]
    active = active_indices(t, action)
    out = [t]
    cur = t
    for g in range(1, 1 << len(active)):
        bit = (g & -g).bit_length() - 1
        cur = gen(cur, active[bit])
        out.append(cur)
    return out


def _stat_fn(stat: str, family: str):
    if stat == "as":
        if family != "A":
            raise DomainError("the 'as' statistic is defined for type A only")
        return as_case_rule
    if stat == "run":
        if family == "A":
            return run_a
        return run_b
    raise DomainError(f"unknown statistic {stat!r}")


def _unique(cands: list, what: str):
    if len(cands) != 1:
        raise InvariantError(f"expected a unique {what}, found {len(cands)}")
    return cands[0]


def orbit(t: MinMaxTree, action: str = "HR", stat: str | None = None) -> OrbitReport:
    a = _action_kind(action, t)
    if stat is None:
        stat = "as" if a == "HR" else "run"
    fn = _stat_fn(stat, t.family)
    trees = orbit_trees(t, a)
    words = sorted(u.word() for u in trees)
    coeffs: dict[int, int] = {}
    for w in words:
        s = fn(w.entries)
        coeffs[s] = coeffs.get(s, 0) + 1
    poly = IntPoly(tuple(coeffs.get(k, 0) for k in range(max(coeffs) + 1)))
    reps = Representatives(
        check=_scan_check(trees, a),
        star=_scan_check(trees, a) if a == "MHR" else None,
        andre=_scan_andre(trees) if a != "MHR" else None,
    )
    return OrbitReport(t.word(), a, active_indices(t, a), tuple(words), stat, poly, reps)


def _scan_check(trees, action):
    if action == "HR":
        key = lambda u: as_case_rule(u.word().entries)
    else:
        key = lambda u: run_b(u.word().entries)
    vals = [key(u) for u in trees]
    best = min(vals)
    words = [u.word() for u, v in zip(trees, vals) if v == best]
    if action == "BHR":
        # not unique in general; report the lexicographically least minimizer
        return min(words)
    return _unique(words, "minimizing representative")


def _scan_andre(trees):
    hits = [u.word() for u in trees if all(u.kind(p) == "min" for p in u.inner_positions())]
    return _unique(hits, "all-min representative")


def check_representative(t: MinMaxTree, action: str = "HR") -> PermWord:
    """The orbit member with least ``as`` (HR) or ``run_B`` (MHR), asserted unique."""
    a = _action_kind(action, t)
    if a == "BHR":
        raise DomainError("check representatives are defined for HR and MHR orbits")
    return _scan_check(orbit_trees(t, a), a)


def _alternating_target(t: MinMaxTree, first_kind: str) -> dict:
    """Kinds making two-child nodes alternate starting with ``first_kind``
    and one-child nodes follow the block rule of the constructive proofs."""
    other = {"min": "max", "max": "min"}
    two = [p for p in t.positions if t.left[p] is not None and t.right[p] is not None]
    block_first = other[first_kind]
    target = {}
    for p in t.inner_positions():
        if p in two:
            j = two.index(p)
            target[p] = first_kind if j % 2 == 0 else other[first_kind]
        else:
            j = sum(1 for q in two if q < p)
            target[p] = block_first if j % 2 == 0 else first_kind
    return target


def check_representative_oracle(t: MinMaxTree, action: str = "HR") -> PermWord:
    """Direct construction of the minimizing representative by kind assignment."""
    a = _action_kind(action, t)
    if a == "HR":
        target = _alternating_target(t, "max")
    elif a == "MHR":
        positive = t.word().entries[0] > 0
        target = _alternating_target(t, "max" if positive else "min")
    else:
        raise DomainError("check representatives are defined for HR and MHR orbits")
    return flip_to_kinds(t, target, a).word()


def lpv_representative(t: MinMaxTree, S: Iterable[int], action: str = "HR") -> PermWord:
    """The orbit member whose left-peak/valley set is exactly ``S``."""
    a = _action_kind(action, t)
    S = frozenset(S)
    hits = [u.word() for u in orbit_trees(t, a) if lpv(u.word()) == S]
    if not hits:
        raise PreconditionError(f"no orbit member has Lpv = {sorted(S)}")
    return _unique(hits, f"member with Lpv = {sorted(S)}")


def lpv_representative_oracle(t: MinMaxTree, S: Iterable[int], action: str = "HR") -> PermWord:
    """Construction from the proofs: prescribed positions alternate max/min,
    and the positions between them follow the enclosing block."""
    a = _action_kind(action, t)
    s = sorted(set(S))
    positive = t.family == "A" or t.word().entries[0] > 0
    hi_kind, lo_kind = ("max", "min") if positive else ("min", "max")
    target = {}
    for p in t.inner_positions():
        if p in s:
            j = s.index(p) + 1
            target[p] = hi_kind if j % 2 else lo_kind
        else:
            j = sum(1 for q in s if q < p) + 1
            target[p] = lo_kind if j % 2 else hi_kind
    return flip_to_kinds(t, target, a).word()


def andre_representative(t: MinMaxTree, action: str | None = None) -> PermWord:
    """Flip every max inner node; the result has all inner nodes min-nodes."""
    a = _action_kind(action or ("HR" if t.family == "A" else "BHR"), t)
    if a == "MHR":
        raise DomainError("andre representatives are defined for HR and BHR orbits")
    flips = [p for p in t.inner_positions() if t.kind(p) == "max"]
    return apply_set(t, flips, a).word()


def orbit_leaf_polynomial(n: int, leaves: int) -> IntPoly:
    """``x^leaf (1+x)^(n-leaf)``."""
    return basis_element(leaves, n - leaves)


def iter_orbits(words: Iterable[PermWord], action: str):
    """Yield one member tree of each orbit among ``words`` (which must be orbit-closed)."""
    seen = set()
    for w in words:
        if w.entries in seen:
            continue
        t = build_tree(w)
        for u in orbit_trees(t, action):
            seen.add(u.word().entries)
        yield t

