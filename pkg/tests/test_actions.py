import pytest
from hypothesis import given, strategies as st

from hrruns.actions import (
    active_indices, andre_representative, apply_set, bhr_psi, check_representative,
    check_representative_oracle, flip_to_kinds, iter_orbits, lpv_representative, lpv_representative_oracle,
    mhr_psi, orbit, orbit_leaf_polynomial, orbit_trees, psi, zero_parent,
)
from hrruns.andre import alternating_class, is_andre_A, is_andre_B
from hrruns.errors import DomainError, FamilyError, PreconditionError
from hrruns.minmax_tree import build_tree, leaf_count
from hrruns.perm_core import PermWord, enumerate_perms, lpv, parse_perm, run_b
from hrruns.polynomial.arith import IntPoly

from strategies import perms_a, perms_b


def T(text):
    return build_tree(parse_perm(text))


def test_generator_examples():
    assert psi(T("562314"), 2) == T("513426")
    assert psi(psi(T("513426"), 2), 3) == T("563214")
    assert apply_set(T("513426"), {2, 3}) == T("563214")


def test_bhr_zero_example():
    assert bhr_psi(T("3,-4,2,5,-1"), 0) == T("-3,-5,1,4,-2")


def test_bhr_zero_is_identity_when_zero_is_leaf():
    t = T("-1,2")
    assert t.is_leaf(0)
    assert bhr_psi(t, 0) == t


def test_mhr_frozen_node():
    t = T("2,-1")
    zp = zero_parent(t)
    assert zp == 1
    assert mhr_psi(t, zp) == t
    assert zp not in active_indices(t, "MHR")


def test_orbit_of_123():
    rep = orbit(T("123"), "HR", "as")
    assert {w.text() for w in rep.members} == {"1,2,3", "3,1,2", "1,3,2", "3,2,1"}
    assert rep.stat_poly == IntPoly((0, 1, 2, 1))
    assert rep.stat_poly == orbit_leaf_polynomial(3, 1)


def test_check_representative_example():
    assert check_representative(T("513426")).text() == "5,6,3,2,1,4"
    assert check_representative_oracle(T("513426")).text() == "5,6,3,2,1,4"
    assert orbit(T("513426")).representatives.check.text() == "5,6,3,2,1,4"


@pytest.mark.parametrize("n", range(1, 7))
def test_orbit_sizes_a(n):
    total = 0
    for t in iter_orbits(enumerate_perms(n), "HR"):
        size = len(orbit_trees(t))
        assert size == 2 ** (n - leaf_count(t)) == 2 ** len(active_indices(t))
        total += size
    assert total == len(list(enumerate_perms(n)))


@pytest.mark.parametrize("n", range(1, 5))
def test_mhr_orbits_b(n):
    for t in iter_orbits(enumerate_perms(n, "B"), "MHR"):
        rep = orbit(t, "MHR", "run")
        leaf = leaf_count(t)
        assert rep.stat_poly == orbit_leaf_polynomial(n, leaf)
        first_sign = rep.base.entries[0] > 0
        for w in rep.members:
            assert (w.entries[0] > 0) == first_sign
            assert w.negative_count() == rep.base.negative_count()
        assert run_b(rep.representatives.star.entries) == leaf


@pytest.mark.parametrize("n", range(1, 5))
def test_bhr_zero_laws(n):
    for w in enumerate_perms(n, "B"):
        t = build_tree(w)
        if t.is_leaf(0):
            continue
        u = bhr_psi(t, 0)
        assert bhr_psi(u, 0) == t
        for j in range(1, n + 1):
            assert bhr_psi(bhr_psi(t, j), 0) == bhr_psi(u, j)


@pytest.mark.parametrize("n", range(2, 6))
def test_snake_in_every_positive_mhr_orbit(n):
    full = set(range(1, n))
    for w in enumerate_perms(n, "Bgt"):
        s = lpv_representative(build_tree(w), full, "MHR")
        assert alternating_class(s).is_snake


@pytest.mark.parametrize("n", range(1, 6))
def test_lpv_prescription_a(n):
    for t in iter_orbits(enumerate_perms(n), "HR"):
        base = lpv(check_representative(t))
        free = sorted(set(range(1, n)) - base)
        for mask in range(1 << len(free)):
            S = base | {p for b, p in enumerate(free) if mask >> b & 1}
            w = lpv_representative(t, S)
            assert lpv(w) == S
            assert w == lpv_representative_oracle(t, S)


def test_lpv_prescription_missing():
    with pytest.raises(PreconditionError):
        lpv_representative(T("213"), {1})


@pytest.mark.parametrize("n", range(1, 6))
def test_andre_representatives(n):
    for t in iter_orbits(enumerate_perms(n), "HR"):
        assert is_andre_A(andre_representative(t))
    if n <= 4:
        for t in iter_orbits(enumerate_perms(n, "B"), "BHR"):
            assert is_andre_B(andre_representative(t))


@given(perms_a, st.data())
def test_order_independence(e, data):
    t = build_tree(PermWord(e))
    S = data.draw(st.sets(st.integers(1, len(e))))
    order = data.draw(st.permutations(sorted(S)))
    u = t
    for i in order:
        u = psi(u, i)
    assert u == apply_set(t, S)
    assert u.shape() == t.shape()


@given(perms_b(hi=6), st.data())
def test_bhr_order_independence(e, data):
    t = build_tree(PermWord(e, "B"))
    S = data.draw(st.sets(st.integers(0, len(e))))
    order = data.draw(st.permutations(sorted(S)))
    u = t
    for i in order:
        u = bhr_psi(u, i)
    assert u == apply_set(t, S, "BHR")


@given(perms_b(hi=6))
def test_flip_to_kinds_reaches_target(e):
    t = build_tree(PermWord(e, "B"))
    target = {p: "min" for p in active_indices(t, "MHR")}
    u = flip_to_kinds(t, target, "MHR")
    assert all(u.kind(p) == "min" for p in target)


def test_errors():
    a, b = T("123"), T("2,-1")
    with pytest.raises(FamilyError):
        psi(b, 1)
    with pytest.raises(FamilyError):
        mhr_psi(a, 1)
    with pytest.raises(FamilyError):
        apply_set(a, {1}, "MHR")
    with pytest.raises(IndexError):
        psi(a, 4)
    with pytest.raises(IndexError):
        mhr_psi(b, 0)
    with pytest.raises(DomainError):
        apply_set(a, {1}, "XHR")
    with pytest.raises(DomainError):
        check_representative(b, "BHR")
    with pytest.raises(DomainError):
        andre_representative(b, "MHR")
    with pytest.raises(DomainError):
        orbit(b, "MHR", "as")
    with pytest.raises(PreconditionError):
        flip_to_kinds(b, {1: "min"}, "MHR")
