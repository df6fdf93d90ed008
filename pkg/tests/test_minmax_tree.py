import pytest
from hypothesis import given, strategies as st

from hrruns.errors import DomainError, StructureError
from hrruns.minmax_tree import (
    build_tree, factorize, format_raw, from_raw, leaf_count, parse_raw_tree, read_word, render,
    to_raw, tree_profile, validate,
)
from hrruns.perm_core import PermWord, enumerate_perms, parse_perm, peaks_valleys, run_stat

from strategies import perms_a, perms_b

# left tree of the HR example: 316478592, nodes by in-order position
HR_EXAMPLE = """
node 1 label=3 left=- right=-
node 2 label=1 left=1 right=8
node 3 label=6 left=- right=-
node 4 label=4 left=3 right=6
node 5 label=7 left=- right=-
node 6 label=8 left=5 right=7
node 7 label=5 left=- right=-
node 8 label=9 left=4 right=9
node 9 label=2 left=- right=-
root 2
"""

# min-max but not HR: the node 2 has its maximum 8 in the left subtree
NON_HR_EXAMPLE = """
node 1 label=8 left=- right=-
node 2 label=2 left=1 right=6
node 3 label=5 left=- right=-
node 4 label=6 left=3 right=5
node 5 label=4 left=- right=-
node 6 label=7 left=4 right=7
node 7 label=3 left=- right=-
node 8 label=9 left=2 right=9
node 9 label=1 left=- right=-
root 8
"""


def test_hr_example_tree():
    t = build_tree(parse_perm("316478592"))
    assert t == from_raw(parse_raw_tree(HR_EXAMPLE))
    assert t.labels[t.root] == 1
    assert t.labels[t.right[t.root]] == 9
    assert t.kind(t.right[t.root]) == "max"
    assert read_word(from_raw(parse_raw_tree(HR_EXAMPLE))).text() == "3,1,6,4,7,8,5,9,2"
    v = validate(parse_raw_tree(HR_EXAMPLE))
    assert v.is_min_max and v.is_hr


def test_non_hr_example_tree():
    raw = parse_raw_tree(NON_HR_EXAMPLE)
    v = validate(raw)
    assert v.is_min_max and not v.is_hr
    assert read_word(from_raw(raw)).text() == "8,2,5,6,4,7,3,9,1"


def test_not_min_max():
    raw = parse_raw_tree("node 1 label=1 left=- right=-\nnode 2 label=2 left=1 right=3\n"
                         "node 3 label=3 left=- right=-\nroot 2\n")
    v = validate(raw)
    assert not v.is_min_max and not v.is_hr


def test_signed_example():
    t = build_tree(parse_perm("2,-1"))
    # positions follow the word indices, with the 0 at position 0
    assert t.root == 1 and t.labels[1] == 2
    assert (t.labels[t.left[1]], t.labels[t.right[1]]) == (0, -1)
    assert leaf_count(t) == 2


def test_leaf_and_one_child_examples():
    assert leaf_count(build_tree(parse_perm("3245617"))) == 3
    t = build_tree(parse_perm("42135"))
    prof = tree_profile(t)
    assert [t.labels[p] for p in prof.two_child_positions] == [1]
    mins = [p for p in prof.one_child_positions if t.kind(p) == "min"]
    assert mins == list(prof.even_one_child_positions)
    assert len(mins) == 1


def test_factorization_examples():
    w = parse_perm("64738251")
    f = factorize(w, 5)
    assert (f.w1, f.w2, f.pivot, f.w4, f.w5) == ((6, 4, 7, 3), (), 8, (), (2, 5, 1))
    # w4 is the longest block right of the pivot with larger letters; 3 < 7 stops it at once
    f = factorize(w, 3)
    assert (f.w1, f.w2, f.pivot, f.w4, f.w5) == ((6, 4), (), 7, (), (3, 8, 2, 5, 1))
    f = factorize(w, 6)
    assert (f.w1, f.w2, f.pivot, f.w4, f.w5) == ((), (6, 4, 7, 3, 8), 2, (5,), (1,))
    with pytest.raises(IndexError):
        factorize(w, 9)


@given(perms_a, st.data())
def test_factorization_reassembles(e, data):
    i = data.draw(st.integers(1, len(e)))
    f = factorize(e, i)
    assert f.w1 + f.w2 + (f.pivot,) + f.w4 + f.w5 == e
    assert all(x > f.pivot for x in f.w2 + f.w4)
    assert not f.w1 or f.w1[-1] < f.pivot
    assert not f.w5 or f.w5[0] < f.pivot


def test_render_dot():
    text = render(build_tree(parse_perm("562314")), "dot")
    assert text.startswith("digraph T {") and text.rstrip().endswith("}")
    vertices = [line for line in text.splitlines() if "[label=" in line and "->" not in line]
    edges = [line for line in text.splitlines() if "->" in line]
    assert len(vertices) == 6 and len(edges) == 5
    assert text == render(build_tree(parse_perm("562314")), "dot")


def test_render_ascii_and_errors():
    assert render(build_tree(parse_perm("123"))) == "1 (min)\n`-R 2 (min)\n   `-R 3 (leaf)\n"
    with pytest.raises(DomainError):
        render(build_tree(parse_perm("12")), "svg")


@pytest.mark.parametrize("text,msg", [
    ("node 1 label=1 left=- right=-\n", "missing"),
    ("node 1 label=1 left=2 right=-\nroot 1\n", "unknown"),
    ("node 1 label=1 left=- right=-\nnode 1 label=2 left=- right=-\nroot 1\n", "twice"),
    ("node 1 label=1 left=2 right=-\nnode 2 label=2 left=1 right=-\nroot 1\n", "cycle"),
    ("node 1 label=1 left=- right=-\nnode 2 label=1 left=1 right=-\nroot 2\n", "duplicate"),
    ("node 1 label=1 left=- right=-\nnode 2 label=2 left=- right=-\nroot 1\n", "unreachable"),
    ("node 1 label=1 left=- right=-\nroot 1\nroot 1\n", "second root"),
    ("vertex 1\nroot 1\n", "cannot parse"),
])
def test_raw_errors(text, msg):
    with pytest.raises(StructureError, match=msg):
        validate(parse_raw_tree(text))


@given(perms_a)
def test_raw_round_trip_a(e):
    t = build_tree(PermWord(e))
    assert from_raw(parse_raw_tree(format_raw(t))) == t
    assert from_raw(to_raw(t)) == t


@given(perms_b())
def test_raw_round_trip_b(e):
    t = build_tree(PermWord(e, "B"))
    assert t.labels[0] == 0 and t.left[0] is None
    assert from_raw(parse_raw_tree(render(t, "raw"))) == t
    assert read_word(t).entries == e


@given(perms_a)
def test_profile_facts(e):
    t = build_tree(PermWord(e))
    prof = tree_profile(t)
    assert len(prof.two_child_positions) == prof.leaf_count - 1
    pk, val = peaks_valleys(e, False)
    assert set(prof.two_child_positions) <= pk | val
    assert run_stat(PermWord(e)) >= prof.leaf_count


@given(perms_b())
def test_profile_facts_b(e):
    w = PermWord(e, "B")
    t = build_tree(w)
    prof = tree_profile(t)
    assert len(prof.two_child_positions) == prof.leaf_count - 1
    pk, val = peaks_valleys(e, True)
    assert set(prof.two_child_positions) <= pk | val
    assert run_stat(w) >= prof.leaf_count


@pytest.mark.parametrize("n", range(1, 8))
def test_round_trip_exhaustive_a(n):
    for w in enumerate_perms(n):
        t = build_tree(w)
        assert read_word(t) == w


@pytest.mark.parametrize("n", range(1, 6))
def test_round_trip_exhaustive_b(n):
    for w in enumerate_perms(n, "B"):
        t = build_tree(w)
        assert read_word(t) == w
        assert validate(t).is_hr


def test_from_raw_rejects_bad_b_labels():
    with pytest.raises(DomainError):
        from_raw(parse_raw_tree("node 0 label=0 left=- right=1\nnode 1 label=3 left=- right=-\nroot 0\n"), "B")
