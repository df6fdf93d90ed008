"""Registry of checkable identities.

Each entry evaluates both sides of one identity for a single ``n`` with
exact arithmetic and exhaustive enumeration.  Failures are returned as
data (:class:`CheckResult` with a witness), never raised.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Callable

from ..actions import (
    andre_representative, bhr_psi, check_representative_oracle, iter_orbits, mhr_psi, orbit, orbit_trees, psi,
)
from ..andre import (
    alternating_class, andre_a_words, andre_b_words, count_table, d_recurrence,
    euler_numbers, is_andre_A, is_andre_B, snake_to_andre, snakes, springer_numbers,
    springer_series_oracle,
)
from ..errors import DomainError, HRRunsError, RegistryError
from ..minmax_tree import build_tree, leaf_count, read_word, validate
from ..perm_core import (
    PermWord, as_case_rule, chow_ma_split, des, des_b, enumerate_perms, iter_entries, lpv, run_a, run_b,
)
from ..polynomial.arith import (
    ONE_PLUS_X, IntPoly, basis_decompose, basis_element, multiplicity_at_minus_one, poly_div_exact,
)
from ..polynomial.generators import (
    as_polynomial, eulerian_polynomial, left_peak_counts, run_polynomial, stat_polynomial,
)
from ..polynomial.named import named_polynomial, table_polynomial, tilde_tree_table
from .. import oeis
from . import transcribed as pv

STATUSES = ("pass", "fail", "fixture_mismatch", "skipped")
SCOPES = ("typeA", "typeB", "typeD", "orbits", "bijections", "oeis")


@dataclass(frozen=True)
class CheckResult:
    identity_id: str
    n: int
    status: str
    witness: str | None = None
    elapsed: float = 0.0
    note: str | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and not self.witness:
            raise ValueError("a failing result needs a witness")

    def to_json(self) -> str:
        d = asdict(self)
        d["elapsed"] = round(self.elapsed, 4)
        return json.dumps(d, sort_keys=True)


class _Outcome(Exception):
    def __init__(self, status: str, witness: str, note: str | None = None):
        super().__init__(witness)
        self.status, self.witness, self.note = status, witness, note


def _fail(witness: str):
    raise _Outcome("fail", witness)


def _require(cond: bool, witness: str):
    if not cond:
        _fail(witness)


def _poly_diff(lhs: IntPoly, rhs: IntPoly) -> str | None:
    if lhs == rhs:
        return None
    k = next(k for k in range(max(lhs.degree, rhs.degree) + 1) if lhs.coeff(k) != rhs.coeff(k))
    return f"coefficient of x^{k}: {lhs.coeff(k)} != {rhs.coeff(k)} (lhs {lhs}; rhs {rhs})"


def _same(lhs: IntPoly, rhs: IntPoly, label: str):
    diff = _poly_diff(lhs, rhs)
    if diff:
        _fail(f"{label}: {diff}")


def _fixture(computed, printed, label: str):
    if computed != printed:
        raise _Outcome("fixture_mismatch", f"{label}: computed {computed}, printed {printed}")


@dataclass(frozen=True)
class Identity:
    id: str
    scope: str
    lo: int
    hi: int
    fn: Callable
    summary: str


REGISTRY: dict[str, Identity] = {}


def _register(id_, scope, lo, hi, summary):
    def deco(fn):
        REGISTRY[id_] = Identity(id_, scope, lo, hi, fn, summary)
        return fn
    return deco


def _rows(n: int, stat: str) -> dict:
    return count_table(n, stat).rows


def _peeled(rows: dict, n: int, dx: int = 0, dy: int = 0) -> IntPoly:
    """``sum_k rows[k] x^(k+dx) (1+x)^(n-k+dy)``."""
    return IntPoly.from_terms((c, k + dx, n - k + dy) for k, c in rows.items() if c)


def _ceil_half(n: int) -> int:
    return (n + 2) // 2  # ceil((n+1)/2)


# --- type A -------------------------------------------------------------------

@_register("as_enumerator", "typeA", 1, 8, "sum x^as = sum_i d_{n,i} x^(i+1) (1+x)^(n-i-1)")
def _as_enumerator(n, jobs):
    d = _rows(n, "d")
    _same(as_polynomial(n, jobs), _peeled(d, n, 1, -1), "as enumerator")


@_register("run_RD", "typeA", 2, 10, "R_n = 2 (1+x)^(n-1) D_n(x/(1+x))")
def _run_rd(n, jobs):
    d = dict(enumerate(d_recurrence(n)[n]))
    _same(run_polynomial(n, "A", jobs), 2 * _peeled(d, n, 1, -2), "R_n")


@_register("run_factor", "typeA", 2, 10, "R_n = (1+x)^floor((n-2)/2) M_n with M_n(-1) != 0")
def _run_factor(n, jobs):
    e = (n - 2) // 2
    ell = (n + 1) // 2
    r = run_polynomial(n, "A", jobs)
    m = named_polynomial(n, "M_formula")
    _same(poly_div_exact(r, ONE_PLUS_X ** e), m, f"R_{n}/(1+x)^{e}")
    mult = multiplicity_at_minus_one(r)
    _require(mult == e, f"multiplicity of -1 in R_{n} is {mult}, expected {e}")
    d = d_recurrence(n)[n]
    want = 2 * (-1) ** ell * d[ell - 1]
    _require(m(-1) == want and want != 0, f"M_{n}(-1) = {m(-1)}, expected nonzero {want}")


@_register("M_trees", "typeA", 2, 8, "M_n = 2 sum over restricted HR trees of x^(min(T)+1)")
def _m_trees(n, jobs):
    _same(named_polynomial(n, "M_trees"), named_polynomial(n, "M_formula"), "M_n")


@_register("M_binomial", "typeA", 2, 7, "#trees with min(T) = l-i-1 is sum_k C(l-k, i) d_{n,k-1}")
def _m_binomial(n, jobs):
    ell = (n + 1) // 2
    d = d_recurrence(n)[n]
    rows = tilde_tree_table(n, "A").rows
    _require(all(0 <= k <= ell - 1 for k in rows), f"min-node counts {sorted(rows)} outside 0..{ell - 1}")
    for i in range(ell):
        want = sum(comb(ell - k, i) * d[k - 1] for k in range(1, ell - i + 1))
        got = rows.get(ell - i - 1, 0)
        _require(got == want, f"i={i}: {got} trees, binomial sum {want}")


@_register("FS_gamma", "typeA", 1, 9, "A_n / x has gamma coefficients 2^k d_{n,k}")
def _fs_gamma(n, jobs):
    p = eulerian_polynomial(n, "A", jobs).shift(-1)
    dec = basis_decompose(p, n - 1, "gamma")
    d = d_recurrence(n)[n]
    for k in range(max(len(d), max(dec.coeffs, default=0) + 1)):
        want = 2 ** k * d[k] if k < len(d) else 0
        _require(dec.coefficient(k) == want, f"gamma_{k} of A_{n}/x is {dec.coefficient(k)}, expected {want}")


@_register("run_symmetry", "typeA", 1, 8, "runs are equidistributed on pi_1 > pi_2 and pi_1 < pi_2")
def _run_symmetry(n, jobs):
    if n < 2:
        return
    up, down = {}, {}
    for e in iter_entries(n, "A"):
        h = up if e[0] < e[1] else down
        r = run_a(e)
        h[r] = h.get(r, 0) + 1
    _require(up == down, f"ascent-start {sorted(up.items())} vs descent-start {sorted(down.items())}")


@_register("euler_sum", "typeA", 1, 8, "sum_k d_{n,k} = E_n")
def _euler_sum(n, jobs):
    E = euler_numbers(n)[n]
    total = count_table(n, "d").total()
    _require(total == E, f"{total} Andre permutations, E_{n} = {E}")
    _require(sum(d_recurrence(n)[n]) == E, f"recurrence row sums to {sum(d_recurrence(n)[n])}, E_{n} = {E}")


@_register("andre_equiv_A", "typeA", 1, 7, "definition and tree tests of Andre permutations agree")
def _andre_equiv_a(n, jobs):
    for w in enumerate_perms(n, "A"):
        a, b = is_andre_A(w), is_andre_A(w, "tree")
        _require(a == b, f"{w}: definition {a}, tree {b}")


# --- type B -------------------------------------------------------------------

@_register("CB1", "typeB", 1, 7, "R^{B,>} = R^{B,<} = sum_k b_{n,k} x^k (1+x)^(n-k)")
def _cb1(n, jobs):
    rhs = _peeled(_rows(n, "b"), n)
    _same(run_polynomial(n, "Bgt", jobs), rhs, "R^{B,>}")
    _same(run_polynomial(n, "Blt", jobs), rhs, "R^{B,<}")


@_register("quotient_B", "typeB", 1, 6, "R^{B,>}, R^{B,<} as (1+x)^m times restricted tree sums")
def _quotient_b(n, jobs):
    m = (n - 1) // 2
    plus = table_polynomial(tilde_tree_table(n, "Bplus"), 1) * ONE_PLUS_X ** m
    minus = table_polynomial(tilde_tree_table(n, "Bminus"), 1) * ONE_PLUS_X ** m
    _same(run_polynomial(n, "Bgt", jobs), plus, "R^{B,>}")
    _same(run_polynomial(n, "Blt", jobs), minus, "R^{B,<}")
    _same(run_polynomial(n, "B", jobs), plus + minus, "R^B")


def _b_gamma(n, jobs):
    return basis_decompose(eulerian_polynomial(n, "B", jobs), n, "gamma")


@_register("gamma_B", "typeB", 1, 7, "B_n has gamma coefficients 2^j bhat_{n,j}")
def _gamma_b(n, jobs):
    dec = _b_gamma(n, jobs)
    bh = _rows(n, "b_hat")
    for j in range(n // 2 + 1):
        want = 2 ** j * bh.get(j, 0)
        _require(dec.coefficient(j) == want, f"gamma_{j} of B_{n} is {dec.coefficient(j)}, expected {want}")


@_register("petersen_consistency", "typeB", 1, 7, "gamma_j(B_n) = 4^j #{Lpk = j} = 2^j bhat_{n,j}")
def _petersen(n, jobs):
    dec = _b_gamma(n, jobs)
    lpk = left_peak_counts(n, jobs)
    bh = _rows(n, "b_hat")
    for j in range(n // 2 + 1):
        a, b, c = dec.coefficient(j), 4 ** j * lpk[j], 2 ** j * bh.get(j, 0)
        _require(a == b == c, f"j={j}: gamma {a}, 4^j lpk {b}, 2^j bhat {c}")


@_register("CM_poly", "typeB", 1, 7, "2^n A_{n+1}(z)/z = sum_k C(n,k) B_k(z) B_{n-k}(z)")
def _cm_poly(n, jobs):
    lhs = eulerian_polynomial(n + 1, "A", jobs).shift(-1) * 2 ** n
    B = [eulerian_polynomial(k, "B", jobs) for k in range(n + 1)]
    rhs = sum((B[k] * B[n - k] * comb(n, k) for k in range(n + 1)), IntPoly())
    _same(lhs, rhs, "Chow-Ma Eulerian form")


@_register("CM_runs", "typeB", 1, 7,
           "2^(n-1) R_{n+1} = 2 R^{B,>}_n + ((1+x)/x) sum_k C(n,k) R^{B,>}_k R^{B,>}_{n-k}")
def _cm_runs(n, jobs):
    lhs = run_polynomial(n + 1, "A", jobs) * 2 ** (n - 1)
    R = {k: run_polynomial(k, "Bgt", jobs) for k in range(1, n + 1)}
    conv = sum((R[k] * R[n - k] * comb(n, k) for k in range(1, n)), IntPoly())
    rhs = 2 * R[n] + (conv * ONE_PLUS_X).shift(-1)
    _same(lhs, rhs, "Chow-Ma run form")


@_register("CM_split", "typeB", 0, 4, "the splitting map adds descents on words of size n+1 containing +1")
def _cm_split(n, jobs):
    hist: dict[int, int] = {}
    for e in iter_entries(n + 1, "B"):
        if 1 not in e:
            continue
        w = PermWord(e, "B")
        left, right = chow_ma_split(w)
        _require(left.n + right.n == n, f"{w}: parts of sizes {left.n}, {right.n}")
        _require(des(e) == des_b(left.entries) + des_b(right.entries),
                 f"{w}: des {des(e)} != des_B({left}) + des_B({right})")
        hist[des(e)] = hist.get(des(e), 0) + 1
    lhs = IntPoly(tuple(hist.get(k, 0) for k in range(max(hist) + 1)))
    B = [stat_polynomial(k, "B", "des_B") for k in range(n + 1)]
    rhs = sum((B[k] * B[n - k] * comb(n, k) for k in range(n + 1)), IntPoly())
    _same(lhs, rhs, "descent polynomial of words containing +1")


@_register("lemma_sa", "typeB", 1, 6, "b_{n,k} = bbar_{n,k-1}, via a bijection from snakes to type B Andre words")
def _lemma_sa(n, jobs):
    b, bb, bh = _rows(n, "b"), _rows(n, "b_bar"), _rows(n, "b_hat")
    for k, c in b.items():
        _require(c == bb.get(k - 1, 0), f"b_{{{n},{k}}} = {c}, bbar_{{{n},{k - 1}}} = {bb.get(k - 1, 0)}")
    _require({k: v for k, v in bb.items() if v} == {k: v for k, v in bh.items() if v},
             f"bbar {bb} != bhat {bh}")
    andre = {w.entries for w in andre_b_words(n)}
    image = set()
    for s in snakes(n):
        a = snake_to_andre(s)
        leaf = leaf_count(build_tree(s))
        _require(a.entries in andre, f"snake {s} maps to non-Andre {a}")
        _require(des_b(a.entries) == leaf - 1, f"snake {s}: leaf {leaf}, des_B of image {des_b(a.entries)}")
        _require(a.entries not in image, f"snake {s} collides at {a}")
        image.add(a.entries)
    _require(image == andre, f"image misses {len(andre - image)} Andre words")


@_register("springer_snakes", "typeB", 1, 6, "#snakes of size n = Springer number S_n")
def _springer_snakes(n, jobs):
    S = springer_numbers(n)[n]
    _require(S == springer_series_oracle(n)[n], "the two Springer oracles disagree")
    count = len(snakes(n))
    _require(count == S, f"{count} snakes, S_{n} = {S}")


@_register("downup_count", "typeB", 1, 6, "#down-up signed permutations = 2^n E_n")
def _downup(n, jobs):
    count = sum(1 for w in enumerate_perms(n, "B") if alternating_class(w).is_downup)
    want = 2 ** n * euler_numbers(n)[n]
    _require(count == want, f"{count} down-up words, 2^n E_n = {want}")


@_register("andre_equiv_B", "typeB", 1, 5, "definition and tree tests of type B Andre permutations agree")
def _andre_equiv_b(n, jobs):
    for w in enumerate_perms(n, "B"):
        a, b = is_andre_B(w), is_andre_B(w, "tree")
        _require(a == b, f"{w}: definition {a}, tree {b}")


# --- type D -------------------------------------------------------------------

def _dhat_dbar(n):
    return _rows(n, "d_hat"), _rows(n, "d_bar")


@_register("CD1", "typeD", 1, 7, "R^{D,>} = sum dhat_{n,k} x^k (1+x)^(n-k) = sum dtilde_{n,k} x^(k+1) (1+x)^(n-1-k)")
def _cd1(n, jobs):
    r = run_polynomial(n, "Dgt", jobs)
    dh, _ = _dhat_dbar(n)
    _same(r, _peeled(dh, n), "R^{D,>} via dhat")
    _same(r, _peeled(_rows(n, "d_tilde"), n, 1, -1), "R^{D,>} via dtilde")
    raise _Outcome("pass", "", "dtilde form uses exponents x^(k+1)(1+x)^(n-1-k); "
                               "x^(k-1)(1+x)^(n+1-k) is not a polynomial at k = 0")


@_register("CD2", "typeD", 1, 7, "R^{D,<} = sum dbar_{n,k} x^k (1+x)^(n-k)")
def _cd2(n, jobs):
    _, db = _dhat_dbar(n)
    _same(run_polynomial(n, "Dlt", jobs), _peeled(db, n), "R^{D,<}")


@_register("CD3", "typeD", 1, 7, "R^D = sum (dhat + dbar)_{n,k} x^k (1+x)^(n-k); dhat = dbar iff n even")
def _cd3(n, jobs):
    dh, db = _dhat_dbar(n)
    both = {k: dh.get(k, 0) + db.get(k, 0) for k in set(dh) | set(db)}
    _same(run_polynomial(n, "D", jobs), _peeled(both, n), "R^D")
    _require((dh == db) == (n % 2 == 0), f"dhat {dh}, dbar {db} for n = {n}")


@_register("quotient_D", "typeD", 2, 6, "R^{D,>}, R^{D,<} as (1+x)^m times restricted even-negative tree sums")
def _quotient_d(n, jobs):
    m = (n - 1) // 2
    plus = table_polynomial(tilde_tree_table(n, "Dplus"), 1) * ONE_PLUS_X ** m
    minus = table_polynomial(tilde_tree_table(n, "Dminus"), 1) * ONE_PLUS_X ** m
    _same(run_polynomial(n, "Dgt", jobs), plus, "R^{D,>}")
    _same(run_polynomial(n, "Dlt", jobs), minus, "R^{D,<}")
    _same(run_polynomial(n, "D", jobs), plus + minus, "R^D")


@_register("Q_nonvanish", "typeD", 2, 7, "-1 is a root of exact multiplicity floor((n-1)/2) of every B and D run polynomial")
def _q_nonvanish(n, jobs):
    m = (n - 1) // 2
    K = _ceil_half(n)
    sign = (-1) ** K
    b = _rows(n, "b")
    dh, db = _dhat_dbar(n)
    expected = {"B": 2 * b.get(K, 0) * sign, "D": (dh.get(K, 0) + db.get(K, 0)) * sign}
    problems = []
    for fam in ("B", "Bgt", "Blt", "D", "Dgt", "Dlt"):
        r = run_polynomial(n, fam, jobs)
        q = poly_div_exact(r, ONE_PLUS_X ** m)
        if fam in expected:
            _require(q(-1) == expected[fam], f"Q_{n}^{fam}(-1) = {q(-1)}, closed form {expected[fam]}")
        mult = multiplicity_at_minus_one(r)
        if mult != m:
            problems.append(f"R_{n}^{fam}: multiplicity {mult}, expected {m} (quotient at -1 is {q(-1)})")
    if problems:
        _fail("; ".join(problems))


# --- orbits -------------------------------------------------------------------

def _supersets(base: frozenset, n: int) -> set:
    free = sorted(set(range(1, n)) - base)
    return {base | frozenset(c) for r in range(len(free) + 1) for c in combinations(free, r)}


def _orbit_family(n, family, action, stat):
    total = 0
    for t in iter_orbits(enumerate_perms(n, family), action):
        rep = orbit(t, action, stat)
        leaf = leaf_count(t)
        total += rep.size
        _require(rep.size == 2 ** len(rep.active_indices), f"{rep.base}: orbit size {rep.size}")
        _same(rep.stat_poly, basis_element(leaf, n - leaf), f"orbit of {rep.base}")
        yield t, rep
    want = factorial(n) * (1 if family == "A" else 2 ** n)
    _require(total == want, f"orbits cover {total} words, expected {want}")


@_register("orbit_A", "orbits", 1, 7, "sum over an HR orbit of x^as = x^leaf (1+x)^(n-leaf)")
def _orbit_a(n, jobs):
    for _ in _orbit_family(n, "A", "HR", "as"):
        pass


@_register("orbit_B", "orbits", 1, 5, "sum over an MHR orbit of x^run_B = x^leaf (1+x)^(n-leaf)")
def _orbit_b(n, jobs):
    for t, rep in _orbit_family(n, "B", "MHR", "run"):
        positive = rep.base.entries[0] > 0
        negs = rep.base.negative_count()
        for w in rep.members:
            _require((w.entries[0] > 0) == positive, f"{w} leaves the sign class of {rep.base}")
            _require(w.negative_count() == negs, f"{w} changes the negative count of {rep.base}")


def _lpv_bijective(members, base_word, n, label):
    sets = [lpv(w) for w in members]
    _require(len(set(sets)) == len(sets), f"{label}: two members share an Lpv set")
    _require(set(sets) == _supersets(lpv(base_word), n), f"{label}: Lpv sets are not the supersets of {sorted(lpv(base_word))}")


@_register("reps_unique", "orbits", 1, 7, "unique minimal, Lpv-prescribed and all-min representatives (type B for n <= 5)")
def _reps_unique(n, jobs):
    for t in iter_orbits(enumerate_perms(n, "A"), "HR"):
        rep = orbit(t, "HR", "as")
        c = rep.representatives.check
        _require(c == check_representative_oracle(t, "HR"), f"{rep.base}: scan {c} vs construction")
        _require(as_case_rule(c.entries) == leaf_count(t), f"{c}: as != leaf")
        _require(rep.representatives.andre == andre_representative(t, "HR"), f"{rep.base}: Andre representative")
        _lpv_bijective(rep.members, c, n, str(rep.base))
    if n > 5:
        return
    for t in iter_orbits(enumerate_perms(n, "B"), "MHR"):
        rep = orbit(t, "MHR", "run")
        s = rep.representatives.star
        _require(s == check_representative_oracle(t, "MHR"), f"{rep.base}: scan {s} vs construction")
        _require(run_b(s.entries) == leaf_count(t), f"{s}: run_B != leaf")
        _lpv_bijective(rep.members, s, n, str(rep.base))
    for t in iter_orbits(enumerate_perms(n, "B"), "BHR"):
        rep = orbit(t, "BHR", "run")
        _require(rep.representatives.andre == andre_representative(t, "BHR"), f"{rep.base}: BHR Andre representative")


@_register("andre_unique_orbit", "orbits", 1, 5, "every HR and BHR orbit holds exactly one Andre permutation")
def _andre_unique(n, jobs):
    for family, action, test, words in (("A", "HR", is_andre_A, andre_a_words(n)),
                                        ("B", "BHR", is_andre_B, andre_b_words(n))):
        orbits = 0
        for t in iter_orbits(enumerate_perms(n, family), action):
            orbits += 1
            hits = [u.word() for u in orbit_trees(t, action) if test(u.word())]
            _require(len(hits) == 1, f"{action} orbit of {t.word()} has {len(hits)} Andre members")
        _require(orbits == len(words), f"{orbits} {action} orbits, {len(words)} Andre words")


def _laws(t, gen, idx, label):
    shape, leaf = t.shape(), leaf_count(t)
    for i in idx:
        u = gen(t, i)
        _require(gen(u, i) == t, f"{label}: generator {i} is not an involution on {t.word()}")
        _require(u.shape() == shape and leaf_count(u) == leaf, f"{label}: generator {i} changes the shape of {t.word()}")
        for j in idx:
            if j > i:
                _require(gen(gen(t, j), i) == gen(u, j), f"{label}: generators {i}, {j} do not commute on {t.word()}")


@_register("action_laws_A", "orbits", 1, 6, "HR generators are commuting shape-preserving involutions")
def _action_laws_a(n, jobs):
    for w in enumerate_perms(n, "A"):
        _laws(build_tree(w), psi, range(1, n + 1), "HR")


@_register("action_laws_B", "orbits", 1, 4, "MHR and BHR generators are commuting shape-preserving involutions")
def _action_laws_b(n, jobs):
    for w in enumerate_perms(n, "B"):
        t = build_tree(w)
        _laws(t, mhr_psi, range(1, n + 1), "MHR")
        _laws(t, bhr_psi, range(0, n + 1), "BHR")
        for i in range(1, n + 1):
            _require(sorted(mhr_psi(t, i).labels) == sorted(t.labels), f"MHR {i} changes the labels of {w}")
        if not t.is_leaf(0):
            c = bhr_psi(t, 0).word().negative_count()
            _require(c == n - w.negative_count(), f"BHR 0 on {w}: {c} negatives")


# --- bijections ---------------------------------------------------------------

def _round_trip(n, family):
    for w in enumerate_perms(n, family):
        t = build_tree(w)
        _require(read_word(t) == w, f"read_word(build_tree({w})) = {read_word(t)}")
        _require(build_tree(read_word(t)) == t, f"build_tree(read_word(T)) != T for {w}")
        v = validate(t)
        _require(v.is_min_max and v.is_hr, f"tree of {w} fails validation {v}")


@_register("bijection_HR", "bijections", 1, 8, "left-first reading inverts the tree construction on S_n")
def _bijection_hr(n, jobs):
    _round_trip(n, "A")


@_register("bijection_BHR", "bijections", 1, 6, "left-first reading inverts the tree construction on B_n")
def _bijection_bhr(n, jobs):
    _round_trip(n, "B")


# --- David-Barton -------------------------------------------------------------

DEFAULT_W_SAMPLES = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(3, 5), Fraction(7, 9))


def _w_degree_bound(n: int, type_: str) -> int:
    """Degree in w of either side after clearing the common factor (1+w^2)^(-n)."""
    return max(2 * n, n + 3) if type_ == "A" else max(2 * n, n + 2)


def farey_points(count: int) -> list[Fraction]:
    """``count`` distinct rationals in (0,1), smallest denominators first."""
    out, q = [], 2
    while len(out) < count:
        out.extend(Fraction(p, q) for p in range(1, q) if Fraction(p, q).denominator == q)
        q += 1
    return out[:count]


def _db_sides(n: int, type_: str, w: Fraction, jobs: int):
    x = (1 - w * w) / (1 + w * w)
    z = (1 - w) / (1 + w)
    if type_ == "A":
        lhs = run_polynomial(n, "A", jobs)(x)
        rhs = ((1 + x) / 2) ** (n - 1) * (1 + w) ** (n + 1) * eulerian_polynomial(n, "A", jobs)(z)
    else:
        lhs = run_polynomial(n, "Bgt", jobs)(x)
        rhs = x / 2 * ((1 + x) / 2) ** (n - 1) * (1 + w) ** n * eulerian_polynomial(n, "B", jobs)(z)
    return Fraction(lhs), Fraction(rhs)


def david_barton_check(n: int, type_: str = "A", w_samples=None, jobs: int = 1) -> CheckResult:
    """Evaluate both sides at ``x = (1-w^2)/(1+w^2)`` for each sample ``w``.

    Both sides become polynomials in ``w`` of bounded degree once the
    common power of ``1 + w^2`` is cleared, so agreement at more points
    than that degree certifies the identity; the note says whether the
    sample set was large enough.
    """
    if type_ not in ("A", "B"):
        raise DomainError(f"type must be A or B, not {type_!r}")
    samples = DEFAULT_W_SAMPLES if w_samples is None else tuple(Fraction(w) for w in w_samples)
    for w in samples:
        if not 0 < w < 1:
            raise DomainError(f"sample w = {w} is outside (0, 1)")
    start = time.perf_counter()
    id_ = f"david_barton_{type_}"
    try:
        for w in samples:
            lhs, rhs = _db_sides(n, type_, w, jobs)
            if lhs != rhs:
                return CheckResult(id_, n, "fail", f"w = {w}: lhs {lhs} != rhs {rhs}", time.perf_counter() - start)
    except HRRunsError as exc:
        return CheckResult(id_, n, "fail", f"{type(exc).__name__}: {exc}", time.perf_counter() - start)
    bound = _w_degree_bound(n, type_)
    distinct = len(set(samples))
    note = "certified" if distinct > bound else f"{distinct} points, certification needs {bound + 1}"
    return CheckResult(id_, n, "pass", None, time.perf_counter() - start, note)


def _db_registered(type_):
    def fn(n, jobs):
        count = max(_w_degree_bound(n, type_) + 1, n + 2)
        res = david_barton_check(n, type_, farey_points(count), jobs)
        if res.status != "pass":
            _fail(res.witness)
        raise _Outcome("pass", "", f"{count} points, {res.note}")
    return fn


_register("david_barton_A", "typeA", 2, 8, "R_n = ((1+x)/2)^(n-1) (1+w)^(n+1) A_n((1-w)/(1+w))")(_db_registered("A"))
_register("david_barton_B", "typeB", 1, 6, "R^{B,>}_n = (x/2) ((1+x)/2)^(n-1) (1+w)^n B_n((1-w)/(1+w))")(_db_registered("B"))


# --- transcribed constants ----------------------------------------------------

@_register("table_d", "typeA", 1, 7, "d_{n,k}, 2^k d_{n,k} and E_n against the transcribed table")
def _table_d(n, jobs):
    counted = count_table(n, "d").values()
    _fixture(counted, pv.D_TABLE[n], f"d_{{{n},k}}")
    _fixture(tuple(2 ** k * c for k, c in enumerate(counted)), pv.D_TABLE_SCALED[n], f"2^k d_{{{n},k}}")
    _fixture(sum(counted), pv.EULER[n], f"E_{n}")


@_register("listed_R", "typeA", 1, 6, "R_n against the transcribed decompositions")
def _listed_r(n, jobs):
    _fixture(run_polynomial(n, "A", jobs), IntPoly.from_terms(pv.R_A[n]), f"R_{n}")


@_register("listed_M", "typeA", 3, 6, "M_n against the transcribed list")
def _listed_m(n, jobs):
    m = named_polynomial(n, "M_formula")
    _same(m, poly_div_exact(run_polynomial(n, "A", jobs), ONE_PLUS_X ** ((n - 2) // 2)), f"M_{n}")
    _fixture(m, 2 * IntPoly(pv.M_A[n]), f"M_{n}")


@_register("table_B", "typeB", 2, 4, "R^B, R^{B,>}, R^{B,<} against the transcribed table")
def _table_b(n, jobs):
    got = tuple(run_polynomial(n, f, jobs) for f in ("B", "Bgt", "Blt"))
    _fixture(got, tuple(IntPoly(c) for c in pv.R_B_TABLE[n]), f"type B row {n}")


@_register("listed_T", "typeB", 1, 4, "T_n against the transcribed list")
def _listed_t(n, jobs):
    _fixture(named_polynomial(n, "T"), IntPoly(pv.T_B[n]), f"T_{n}")


@_register("listed_B_gamma", "typeB", 1, 4, "gamma forms of B_n against the transcribed list")
def _listed_b_gamma(n, jobs):
    _fixture(_b_gamma(n, jobs).as_tuple(), pv.B_GAMMA[n], f"gamma(B_{n})")


@_register("table_D", "typeD", 2, 4, "R^D, R^{D,>}, R^{D,<} against the transcribed table")
def _table_dd(n, jobs):
    got = tuple(run_polynomial(n, f, jobs) for f in ("D", "Dgt", "Dlt"))
    _fixture(got, tuple(IntPoly(c) for c in pv.R_D_TABLE[n]), f"type D row {n}")


@_register("listed_R_D", "typeD", 2, 6, "R^D_n against the transcribed decompositions")
def _listed_r_d(n, jobs):
    got = basis_decompose(run_polynomial(n, "D", jobs), n)
    printed = basis_decompose(IntPoly.from_terms(pv.R_D[n]), n)
    _fixture(got.as_tuple(n + 1), printed.as_tuple(n + 1), f"R^D_{n} in x^k(1+x)^(n-k)")


# --- OEIS fixtures ------------------------------------------------------------

def _oeis_check(seq_id):
    def fn(n, jobs):
        try:
            cmp = oeis.compare(seq_id, n)
        except FileNotFoundError as exc:
            _fail(str(exc))
        if not cmp.ok:
            _fail(f"{seq_id} index {cmp.first_diff}: fixture {cmp.expected}, regenerated {cmp.got}")
        if cmp.warnings:
            raise _Outcome("pass", "", "; ".join(cmp.warnings))
    return fn


for _sid, _seq in oeis.SEQUENCES.items():
    _register(f"oeis_{_sid}", "oeis", _seq.default_n, _seq.default_n, _seq.description)(_oeis_check(_sid))


# --- randomized laws ----------------------------------------------------------

def random_action_laws(n: int, trials: int, seed: int = 0) -> CheckResult:
    """Involution and commutation of the MHR and BHR generators on random
    trees of B_n, with a fixed seed."""
    rng = random.Random(seed)
    start = time.perf_counter()
    for trial in range(trials):
        e = rng.sample(range(1, n + 1), n)
        w = PermWord(tuple(x if rng.random() < 0.5 else -x for x in e), "B")
        t = build_tree(w)
        for gen, lo in ((mhr_psi, 1), (bhr_psi, 0)):
            i, j = rng.randint(lo, n), rng.randint(lo, n)
            u = gen(t, i)
            if gen(u, i) != t or gen(gen(t, j), i) != gen(u, j):
                return CheckResult("random_action_laws", n, "fail",
                                   f"trial {trial}: {gen.__name__} {i}, {j} on {w}", time.perf_counter() - start)
    return CheckResult("random_action_laws", n, "pass", None, time.perf_counter() - start,
                       f"{trials} trials, seed {seed}")


# --- driver -------------------------------------------------------------------

def check_identity(id_: str, n: int, jobs: int = 1, cap: int | None = None) -> CheckResult:
    """Run one registry entry; ``cap`` may only lower the documented range."""
    if id_ not in REGISTRY:
        raise RegistryError(f"unknown identity {id_!r}")
    ident = REGISTRY[id_]
    hi = ident.hi if cap is None else min(cap, ident.hi)
    if not ident.lo <= n <= hi:
        return CheckResult(id_, n, "skipped", None, 0.0, f"n outside {ident.lo}..{hi}")
    start = time.perf_counter()
    try:
        ident.fn(n, jobs)
    except _Outcome as out:
        return CheckResult(id_, n, out.status, out.witness or None, time.perf_counter() - start, out.note)
    except HRRunsError as exc:
        return CheckResult(id_, n, "fail", f"{type(exc).__name__}: {exc}", time.perf_counter() - start)
    return CheckResult(id_, n, "pass", None, time.perf_counter() - start)


def identities_in(scope: str) -> list[str]:
    if scope == "all":
        return list(REGISTRY)
    if scope not in SCOPES:
        raise RegistryError(f"unknown scope {scope!r}; expected all or one of {SCOPES}")
    return [k for k, v in REGISTRY.items() if v.scope == scope]


def run_suite(scope: str = "all", n_caps=None, jobs: int = 1) -> list[CheckResult]:
    """Every identity of ``scope`` over its range, in registry order.

    ``n_caps`` is an int applied to every identity or a dict from identity
    id to its largest n.
    """
    out = []
    for id_ in identities_in(scope):
        ident = REGISTRY[id_]
        cap = n_caps.get(id_) if isinstance(n_caps, dict) else n_caps
        hi = ident.hi if cap is None else min(cap, ident.hi)
        for n in range(ident.lo, hi + 1):
            out.append(check_identity(id_, n, jobs))
    return out


def any_failed(results) -> bool:
    return any(r.status == "fail" for r in results)
