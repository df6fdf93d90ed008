import json
from fractions import Fraction

import pytest

from hrruns.errors import DomainError, RegistryError
from hrruns.identities import (
    REGISTRY, SCOPES, CheckResult, any_failed, check_identity, david_barton_check, identities_in, run_suite,
)
from hrruns.identities.registry import farey_points, random_action_laws
from hrruns.polynomial.arith import IntPoly
from hrruns.polynomial.generators import eulerian_polynomial, override

NAMED_IDS = {
    "as_enumerator", "run_RD", "run_factor", "M_trees", "M_binomial", "FS_gamma", "orbit_A", "orbit_B",
    "reps_unique", "CB1", "quotient_B", "gamma_B", "petersen_consistency", "CM_poly", "CM_runs", "CD1", "CD2",
    "CD3", "quotient_D", "Q_nonvanish", "lemma_sa", "bijection_HR", "bijection_BHR", "andre_unique_orbit",
}


def test_registry_covers_named_results():
    assert NAMED_IDS <= set(REGISTRY)
    assert {ident.scope for ident in REGISTRY.values()} == set(SCOPES)


def test_examples():
    assert check_identity("as_enumerator", 3).status == "pass"
    assert check_identity("CM_poly", 2).status == "pass"
    r = check_identity("run_factor", 12)
    assert r.status == "skipped" and r.witness is None
    assert check_identity("run_factor", 10, cap=8).status == "skipped"
    with pytest.raises(RegistryError):
        check_identity("no_such_identity", 3)


def test_david_barton_examples():
    r = david_barton_check(2, "A", [Fraction(1, 2)])
    assert r.status == "pass"
    assert r.note.startswith("1 points")
    assert IntPoly((0, 2))(Fraction(3, 5)) == Fraction(6, 5)
    assert david_barton_check(1, "B", [Fraction(1, 2)]).status == "pass"
    assert david_barton_check(3, "A", farey_points(10)).note == "certified"
    with pytest.raises(DomainError):
        david_barton_check(2, "A", [Fraction(3, 2)])
    with pytest.raises(DomainError):
        david_barton_check(2, "C")


def test_farey_points():
    pts = farey_points(7)
    assert pts == [Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4), Fraction(3, 4),
                   Fraction(1, 5), Fraction(2, 5)]


def test_check_result_rules():
    with pytest.raises(ValueError):
        CheckResult("x", 1, "fail")
    with pytest.raises(ValueError):
        CheckResult("x", 1, "maybe")
    r = CheckResult("x", 2, "pass", elapsed=0.123456789)
    assert json.loads(r.to_json()) == {"elapsed": 0.1235, "identity_id": "x", "n": 2, "note": None,
                                      "status": "pass", "witness": None}


def test_run_suite_ordering_and_count():
    results = run_suite("bijections", 4)
    expected = [(id_, n) for id_ in identities_in("bijections") for n in range(REGISTRY[id_].lo, 5)]
    assert [(r.identity_id, r.n) for r in results] == expected
    assert not any_failed(results)
    capped = run_suite("bijections", {"bijection_HR": 2, "bijection_BHR": 1})
    assert [(r.identity_id, r.n) for r in capped] == [("bijection_HR", 1), ("bijection_HR", 2), ("bijection_BHR", 1)]
    with pytest.raises(RegistryError):
        identities_in("typeZ")


def test_transcription_findings():
    assert check_identity("listed_M", 5).status == "fixture_mismatch"
    assert check_identity("listed_R_D", 6).status == "fixture_mismatch"
    r = check_identity("Q_nonvanish", 2)
    assert r.status == "fail" and "multiplicity 1, expected 0" in r.witness
    assert check_identity("CD1", 3).note


def test_mutation_of_a5_is_caught():
    base = eulerian_polynomial(5, "A")
    with override("eulerian", 5, "A", base + IntPoly.x(2)):
        failing = {(i, n): check_identity(i, n) for s in ("typeA", "typeB", "typeD")
                   for i in identities_in(s) for n in range(3, 7)}
    failing = {k: r for k, r in failing.items() if r.status == "fail"}
    assert set(failing) == {("FS_gamma", 5), ("CM_poly", 4), ("david_barton_A", 5)}
    assert all(r.witness for r in failing.values())
    assert check_identity("FS_gamma", 5).status == "pass"


def test_random_action_laws_are_reproducible():
    a = random_action_laws(4, 300, seed=7)
    b = random_action_laws(4, 300, seed=7)
    assert a.status == b.status == "pass"
    assert a.note == "300 trials, seed 7"


@pytest.mark.parametrize("scope", ["typeA", "typeB"])
def test_small_suites_pass(scope):
    results = run_suite(scope, 4)
    assert not any_failed(results), [r for r in results if r.status == "fail"]
