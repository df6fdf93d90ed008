import json
from math import factorial

import pytest

from hrruns.andre import (
    STATISTICS, alternating_class, andre_a_words, andre_b_words, bbar_recurrence, count_table, d_recurrence,
    euler_numbers, is_andre_A, is_andre_B, snake_to_andre, snakes, springer_numbers, springer_series_oracle,
)
from hrruns.errors import CapacityError, DomainError, FamilyError
from hrruns.minmax_tree import build_tree, leaf_count
from hrruns.perm_core import PermWord, des_b, enumerate_perms, parse_perm
from hrruns.identities import transcribed as pv


def texts(words):
    return {w.text() for w in words}


def test_andre_4():
    assert texts(andre_a_words(4)) == {"1,2,3,4", "2,1,3,4", "2,3,1,4", "3,1,2,4", "1,3,2,4"}


def test_andre_7_count():
    assert len(andre_a_words(7)) == 272


def test_andre_b_2():
    assert texts(andre_b_words(2)) == {"1,2", "-1,2", "-2,1"}


@pytest.mark.parametrize("n", range(1, 8))
def test_andre_a_methods_agree(n):
    for w in enumerate_perms(n):
        assert is_andre_A(w) == is_andre_A(w, "tree")


@pytest.mark.parametrize("n", range(1, 6))
def test_andre_b_methods_agree(n):
    for w in enumerate_perms(n, "B"):
        assert is_andre_B(w) == is_andre_B(w, "tree")


@pytest.mark.parametrize("n", range(1, 7))
def test_downup_count(n):
    count = sum(1 for w in enumerate_perms(n, "B") if alternating_class(w).is_downup)
    assert count == 2 ** n * euler_numbers(n)[n]


def test_snake_counts():
    assert [len(snakes(n)) for n in range(1, 5)] == [1, 3, 11, 57]
    assert [len(snakes(n)) for n in range(1, 7)] == springer_numbers(6)[1:]


def test_barred_snakes():
    for w in snakes(4, barred=True):
        assert w.entries[0] < 0 and w.entries[0] < w.entries[1]


def test_oracles():
    assert euler_numbers(7)[1:] == [1, 1, 2, 5, 16, 61, 272]
    assert springer_numbers(4)[4] == 57
    assert springer_numbers(20) == springer_series_oracle(20)
    with pytest.raises(CapacityError):
        euler_numbers(26)
    with pytest.raises(CapacityError):
        d_recurrence(0)


def test_table_examples():
    assert count_table(7, "d").values() == (1, 57, 180, 34)
    assert count_table(4, "b").values() == (1, 36, 20)
    assert count_table(2, "b_hat").values() == (1, 2)
    assert count_table(2, "b_bar").values() == (1, 2)


@pytest.mark.parametrize("n", range(1, 8))
def test_d_rows(n):
    rows = count_table(n, "d").values()
    assert list(rows) == d_recurrence(7)[n]
    assert rows == pv.D_TABLE[n]
    assert tuple(2 ** k * c for k, c in enumerate(rows)) == pv.D_TABLE_SCALED[n]
    assert sum(rows) == pv.EULER[n]


@pytest.mark.parametrize("n", range(1, 6))
def test_bbar_rows(n):
    assert list(count_table(n, "b_bar").values()) == bbar_recurrence(5)[n]


@pytest.mark.parametrize("n", range(1, 6))
def test_snake_to_andre(n):
    images = {}
    for s in snakes(n):
        a = snake_to_andre(s)
        assert is_andre_B(a)
        k = leaf_count(build_tree(s))
        assert des_b(a.entries) == k - 1
        images.setdefault(k, set()).add(a)
    for k, image in images.items():
        assert len(image) == count_table(n, "b").rows[k]
    assert sum(map(len, images.values())) == len(andre_b_words(n))


def test_d_tilde_counts_even_family():
    for n in range(1, 5):
        total = count_table(n, "d_tilde").total()
        assert total == sum(1 for w in andre_b_words(n) if w.negative_count() % 2 == 0)


def test_table_serialization():
    t = count_table(3, "d")
    assert t.to_csv() == "n,k,count\n3,0,1\n3,1,1\n"
    assert json.loads(t.to_json()) == {"n": 3, "statistic": "d", "rows": {"0": 1, "1": 1}}
    assert t.total() == 2


def test_errors():
    with pytest.raises(DomainError):
        count_table(3, "e")
    with pytest.raises(CapacityError):
        count_table(10, "b")
    with pytest.raises(DomainError):
        snake_to_andre(parse_perm("1,2", "B"))
    with pytest.raises(FamilyError):
        is_andre_A(PermWord((1,), "B"))
    with pytest.raises(FamilyError):
        is_andre_B(PermWord((1,)))
    with pytest.raises(DomainError):
        is_andre_A(PermWord((1,)), "guess")
    with pytest.raises(FamilyError):
        alternating_class(PermWord((1,)))
    assert set(STATISTICS) == {"d", "b", "b_bar", "b_hat", "d_hat", "d_bar", "d_tilde"}


def test_sizes_are_consistent():
    assert sum(count_table(4, "b").values()) == len(snakes(4))
    assert len(list(enumerate_perms(4, "B"))) == 2 ** 4 * factorial(4)
