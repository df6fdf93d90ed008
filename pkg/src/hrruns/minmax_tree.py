"""Min-max trees (HR trees) addressed by in-order position.

A tree stores per-position label/left/right/parent arrays.  Positions run
over ``1..n`` for type A and ``0..n`` for type B (where position 0 carries
label 0); index 0 of every array is ``None`` for type A so that array index
and position always agree.  Because the position *is* the in-order index,
the subtree of a node is the contiguous interval :meth:`MinMaxTree.span`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import DomainError, StructureError
from .perm_core import PermWord


@dataclass(frozen=True)
class MinMaxTree:
    family: str
    labels: tuple
    left: tuple
    right: tuple
    parent: tuple
    root: int

    @property
    def first(self) -> int:
        return 1 if self.family == "A" else 0

    @property
    def n(self) -> int:
        return len(self.labels) - 1

    @property
    def positions(self) -> range:
        return range(self.first, len(self.labels))

    @cached_property
    def spans(self) -> tuple:
        lo = [None] * len(self.labels)
        hi = [None] * len(self.labels)
        # children have larger depth; process in reverse BFS order
        order = [self.root]
        for p in order:
            for c in (self.left[p], self.right[p]):
                if c is not None:
                    order.append(c)
        for p in reversed(order):
            lc, rc = self.left[p], self.right[p]
            lo[p] = lo[lc] if lc is not None else p
            hi[p] = hi[rc] if rc is not None else p
        return tuple(lo), tuple(hi)

    def span(self, p: int) -> tuple[int, int]:
        lo, hi = self.spans
        return lo[p], hi[p]

    def subtree_labels(self, p: int) -> tuple:
        lo, hi = self.span(p)
        return self.labels[lo:hi + 1]

    def is_leaf(self, p: int) -> bool:
        return self.left[p] is None and self.right[p] is None

    def is_inner(self, p: int) -> bool:
        return not self.is_leaf(p)

    def kind(self, p: int) -> str:
        """``"leaf"``, ``"min"``, ``"max"``, or ``"none"`` (not min-max)."""
        if self.is_leaf(p):
            return "leaf"
        sub = self.subtree_labels(p)
        x = self.labels[p]
        if x == min(sub):
            return "min"
        if x == max(sub):
            return "max"
        return "none"

    def inner_positions(self) -> list[int]:
        return [p for p in self.positions if self.is_inner(p)]

    def shape(self) -> tuple:
        return self.left, self.right, self.root

    def word(self) -> PermWord:
        return read_word(self)

    def with_labels(self, labels) -> MinMaxTree:
        t = MinMaxTree(self.family, tuple(labels), self.left, self.right, self.parent, self.root)
        t.__dict__["spans"] = self.spans
        return t


def _tree_from_children(family, labels, left, right, root) -> MinMaxTree:
    parent = [None] * len(labels)
    for p in range(len(labels)):
        for c in (left[p], right[p]):
            if c is not None:
                parent[c] = p
    return MinMaxTree(family, tuple(labels), tuple(left), tuple(right), tuple(parent), root)


def build_tree(w: PermWord) -> MinMaxTree:
    """The HR-tree T_w: the root of a window is its first extremum.

    Type B words are read as ``0 w``.
    """
    if w.family == "A":
        labels = (None,) + w.entries
        first = 1
    else:
        labels = (0,) + w.entries
        first = 0
    size = len(labels)
    left = [None] * size
    right = [None] * size

    def rec(lo, hi):
        if lo > hi:
            return None
        window = labels[lo:hi + 1]
        mn, mx = min(window), max(window)
        for r in range(lo, hi + 1):
            if labels[r] == mn or labels[r] == mx:
                break
        left[r] = rec(lo, r - 1)
        right[r] = rec(r + 1, hi)
        return r

    root = rec(first, size - 1)
    return _tree_from_children(w.family, labels, left, right, root)


def read_word(t: MinMaxTree) -> PermWord:
    """Left-first (in-order) reading of the labels, dropping the type B 0."""
    out = []
    stack, p = [], t.root
    while stack or p is not None:
        while p is not None:
            stack.append(p)
            p = t.left[p]
        p = stack.pop()
        out.append(t.labels[p])
        p = t.right[p]
    if t.family == "B":
        if not out or out[0] != 0:
            raise StructureError("leftmost node of a type B tree must be labeled 0")
        out = out[1:]
    return PermWord(tuple(out), t.family)


# --- raw interchange format ----------------------------------------------

@dataclass(frozen=True)
class RawTree:
    """Arbitrary labeled topological binary tree keyed by node id."""
    nodes: dict       # id -> (label, left id | None, right id | None)
    root: int


@dataclass(frozen=True)
class Validation:
    is_min_max: bool
    is_hr: bool


_NODE_RE = re.compile(r"^node\s+(-?\d+)\s+label=(-?\d+)\s+left=(-|-?\d+)\s+right=(-|-?\d+)$")
_ROOT_RE = re.compile(r"^root\s+(-?\d+)$")


def parse_raw_tree(text: str) -> RawTree:
    nodes, root = {}, None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _NODE_RE.match(line)
        if m:
            pid = int(m.group(1))
            if pid in nodes:
                raise StructureError(f"line {lineno}: node {pid} defined twice")
            kids = [None if g == "-" else int(g) for g in (m.group(3), m.group(4))]
            nodes[pid] = (int(m.group(2)), kids[0], kids[1])
            continue
        m = _ROOT_RE.match(line)
        if m:
            if root is not None:
                raise StructureError(f"line {lineno}: second root line")
            root = int(m.group(1))
            continue
        raise StructureError(f"line {lineno}: cannot parse {raw!r}")
    if root is None:
        raise StructureError("missing 'root <pos>' line")
    return RawTree(nodes, root)


def _check_structure(raw: RawTree) -> list:
    """Return node ids in in-order, raising on any structural defect."""
    nodes = raw.nodes
    if raw.root not in nodes:
        raise StructureError(f"root {raw.root} is not a node")
    seen_parent = {}
    for pid, (_, lc, rc) in nodes.items():
        if lc is not None and lc == rc:
            raise StructureError(f"node {pid} has the same left and right child")
        for c in (lc, rc):
            if c is None:
                continue
            if c not in nodes:
                raise StructureError(f"node {pid} references unknown node {c}")
            if c in seen_parent:
                raise StructureError(f"node {c} has two parents")
            seen_parent[c] = pid
    if raw.root in seen_parent:
        raise StructureError("cycle through the root")
    order, visited = [], set()
    stack, p = [], raw.root
    while stack or p is not None:
        while p is not None:
            if p in visited:
                raise StructureError(f"cycle at node {p}")
            visited.add(p)
            stack.append(p)
            p = nodes[p][1]
        p = stack.pop()
        order.append(p)
        p = nodes[p][2]
    if len(order) != len(nodes):
        raise StructureError("tree is not connected (unreachable nodes)")
    labels = [nodes[p][0] for p in order]
    if len(set(labels)) != len(labels):
        raise StructureError("duplicate labels")
    return order


def validate(raw: RawTree | MinMaxTree) -> Validation:
    """Check the min-max property and the HR property at every node."""
    if isinstance(raw, MinMaxTree):
        raw = to_raw(raw)
    _check_structure(raw)
    nodes = raw.nodes
    sub = {}

    def collect(p):
        if p is None:
            return []
        label, lc, rc = nodes[p]
        out = collect(lc) + [label] + collect(rc)
        sub[p] = out
        return out

    collect(raw.root)
    is_mm, is_hr = True, True
    for p, (label, lc, rc) in nodes.items():
        labels = sub[p]
        if len(labels) == 1:
            continue
        lo, hi = min(labels), max(labels)
        if label not in (lo, hi):
            is_mm = is_hr = False
            break
        opposite = hi if label == lo else lo
        if rc is None or opposite not in sub[rc]:
            is_hr = False
    return Validation(is_mm, is_hr)


def from_raw(raw: RawTree, family: str | None = None) -> MinMaxTree:
    """Convert to position addressing; family B iff the leftmost label is 0."""
    order = _check_structure(raw)
    pos_of = {}
    labels = [raw.nodes[p][0] for p in order]
    if family is None:
        family = "B" if labels[0] == 0 else "A"
    first = 1 if family == "A" else 0
    for i, pid in enumerate(order):
        pos_of[pid] = i + first
    size = len(order) + first
    lab = [None] * size
    left = [None] * size
    right = [None] * size
    for pid in order:
        label, lc, rc = raw.nodes[pid]
        p = pos_of[pid]
        lab[p] = label
        left[p] = None if lc is None else pos_of[lc]
        right[p] = None if rc is None else pos_of[rc]
    t = _tree_from_children(family, lab, left, right, pos_of[raw.root])
    read_word(t)  # validates the label set for the family
    return t


def to_raw(t: MinMaxTree) -> RawTree:
    nodes = {p: (t.labels[p], t.left[p], t.right[p]) for p in t.positions}
    return RawTree(nodes, t.root)


def format_raw(t: MinMaxTree) -> str:
    def fmt(c):
        return "-" if c is None else str(c)
    lines = [f"node {p} label={t.labels[p]} left={fmt(t.left[p])} right={fmt(t.right[p])}"
             for p in t.positions]
    lines.append(f"root {t.root}")
    return "\n".join(lines) + "\n"


# --- profile ---------------------------------------------------------------

@dataclass(frozen=True)
class TreeProfile:
    leaf_count: int
    two_child_positions: tuple
    one_child_positions: tuple
    min_node_count: int
    max_node_count: int
    even_one_child_positions: tuple


def tree_profile(t: MinMaxTree) -> TreeProfile:
    two, one, leaves, mins, maxs = [], [], 0, 0, 0
    for p in t.positions:
        kids = (t.left[p] is not None) + (t.right[p] is not None)
        if kids == 0:
            leaves += 1
            continue
        (two if kids == 2 else one).append(p)
        k = t.kind(p)
        mins += k == "min"
        maxs += k == "max"
    even = tuple(p for r, p in enumerate(one, 1) if r % 2 == 0)
    return TreeProfile(leaves, tuple(two), tuple(one), mins, maxs, even)


def leaf_count(t: MinMaxTree) -> int:
    return sum(1 for p in t.positions if t.is_leaf(p))


# --- factorization ------------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    w1: tuple
    w2: tuple
    pivot: int
    w4: tuple
    w5: tuple


def factorize(w: PermWord | Sequence[int], i: int) -> Factorization:
    """The pi_i-factorization ``(w1, w2, pi_i, w4, w5)``, 1-based ``i``.

    >>> factorize(PermWord((6, 4, 7, 3, 8, 2, 5, 1)), 5)
    Factorization(w1=(6, 4, 7, 3), w2=(), pivot=8, w4=(), w5=(2, 5, 1))
    """
    e = tuple(w.entries if isinstance(w, PermWord) else w)
    n = len(e)
    if not 1 <= i <= n:
        raise IndexError(f"position {i} outside 1..{n}")
    x = e[i - 1]
    a = i - 1
    while a > 0 and e[a - 1] > x:
        a -= 1
    b = i
    while b < n and e[b] > x:
        b += 1
    return Factorization(e[:a], e[a:i - 1], x, e[i:b], e[b:])


# --- rendering ----------------------------------------------------------------

def render(t: MinMaxTree, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return _render_ascii(t)
    if fmt == "dot":
        return _render_dot(t)
    if fmt == "raw":
        return format_raw(t)
    raise DomainError(f"unknown render format {fmt!r}")


def _render_ascii(t: MinMaxTree) -> str:
    lines = []

    def rec(p, prefix, tag, last):
        head = "" if tag is None else prefix + ("`-" if last else "|-") + tag + " "
        lines.append(f"{head}{t.labels[p]} ({t.kind(p)})")
        kids = [(c, s) for c, s in ((t.left[p], "L"), (t.right[p], "R")) if c is not None]
        child_prefix = "" if tag is None else prefix + ("   " if last else "|  ")
        for j, (c, s) in enumerate(kids):
            rec(c, child_prefix, s, j == len(kids) - 1)

    rec(t.root, "", None, True)
    return "\n".join(lines) + "\n"


def _render_dot(t: MinMaxTree) -> str:
    shapes = {"min": "circle", "max": "doublecircle", "leaf": "box", "none": "diamond"}
    out = ["digraph T {"]
    for p in t.positions:
        k = t.kind(p)
        out.append(f'  n{p} [label="{t.labels[p]}", class="{k}", shape={shapes[k]}];')
    for p in t.positions:
        for c, side in ((t.left[p], "L"), (t.right[p], "R")):
            if c is not None:
                out.append(f'  n{p} -> n{c} [label="{side}"];')
    out.append("}")
    return "\n".join(out) + "\n"
