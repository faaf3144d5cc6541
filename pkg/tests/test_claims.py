import json

import pytest

from granrough import claims


def test_registry_ids_unique():
    assert len(set(claims.CLAIM_IDS)) == len(claims.CLAIM_IDS)
    assert all(c.scope in ("space", "algebra") for c in claims.CLAIMS)


def test_unknown_claim():
    with pytest.raises(KeyError):
        claims.run_claim("nope")


def test_extended_example_passes():
    assert claims.run_claim("extended-example").status == claims.PASS


def test_morphism_counterexample_witness():
    r = claims.run_claim("morphism-counterexample")
    assert r.status == claims.WITNESS


def test_partition_cases_small_scope_is_replayable():
    r = claims.run_claim("partition-cases", max_size=2)
    again = claims.run_claim("partition-cases", max_size=2)
    assert r.to_json() == again.to_json()
    assert r.status in (claims.PASS, claims.COUNTEREXAMPLE)


def test_partition_cases_counterexample_at_three():
    r = claims.check_partition_cases(3)
    assert r.status == claims.COUNTEREXAMPLE
    assert r.details["unlabeled_nontrivial"] > 0 and r.details["examples"]


def test_mu_operations_counterexample():
    r = claims.check_mu_operations(3, samples=40)
    assert r.status == claims.COUNTEREXAMPLE
    assert r.details["non_morphisms"] > 0 and r.details["first_failure"]["morphism"] is False


def test_b3_b1_reported():
    r = claims.run_claim("b3-b1-direction", max_size=2)
    assert r.status == claims.REPORTED


def test_results_serialize():
    for cid in ("extended-example", "bigness"):
        r = claims.run_claim(cid, max_size=3)
        json.dumps(r.to_json())
        assert "seconds" not in r.to_json()


def test_suite_order_follows_ids():
    ids = ["bigness", "extended-example"]
    out = claims.run_suite(ids, max_size=3)
    assert [r.claim for r in out] == ids


def test_seed_changes_samples_not_verdict():
    a = claims.run_claim("comparison-relations", max_size=3, seed=1)
    b = claims.run_claim("comparison-relations", max_size=3, seed=2)
    assert a.status == b.status == claims.PASS
