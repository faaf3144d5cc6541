"""One test per acceptance criterion, each printing a single PASS/FAIL line."""

import time

import pytest

from granrough import claims
from granrough import prerough as pr
from granrough.claims import SIX_K, SIX_K_PLUS, six_element_algebra
from granrough.correspondence import alpha_beta_bounds, classify, identity
from granrough.io import data_path, load_map, load_rys


@pytest.fixture
def report(capsys):
    def emit(n, ok, seconds, limit, note=""):
        within = limit is None or seconds < limit
        verdict = "PASS" if ok and within else "FAIL"
        bound = f" (limit {limit:g}s)" if limit is not None else ""
        with capsys.disabled():
            print(f"\ncriterion {n:>2}: {verdict}  {seconds:.2f}s{bound}  {note}")
        assert ok, note
        assert within, f"took {seconds:.1f}s, limit {limit}s"
    return emit


def test_criterion_01_worked_example(report):
    t = time.perf_counter()
    tol, eq = load_rys(data_path("x1-tol.json")), load_rys(data_path("x2-eq.json"))
    phi, sigma, tau = (classify(load_map(data_path(f"{n}.json"), tol, eq)) for n in ("phi", "sigma", "tau"))
    w_phi = phi.witnesses["oplus_morphism"]
    w_sig = sigma.witnesses["seeds_singleton_generated"]
    ok = (phi.is_SNC and not phi.is_oplus_morphism
          and set(w_phi["pair"]) == {"n(x1)", "n(x3)"} and w_phi["combined"] == "n(x2)"
          and sigma.injective and sigma.is_oplus_morphism and not sigma.is_SNC
          and w_sig["granule"] == "n(x1)" and w_sig["image"] == ["a1", "a2"]
          and tau.is_PON and not tau.injective_on_granules)
    report(1, ok, time.perf_counter() - t, 1, "phi SNC not ⊕; sigma injective ⊕ not SNC; tau PON not granule-injective")


def test_criterion_02_morphism_counterexample(report):
    r = claims.run_claim("morphism-counterexample")
    d = r.details
    ok = (r.status == claims.WITNESS and d["image"] == ["a1", "a3"] and d["oplus_morphism"]
          and not d["representable_with_complement"])
    report(2, ok, r.seconds, 1, f"image {d['image']}, representable={d['representable_with_complement']}")


def test_criterion_03_partition_cases(report):
    r = claims.run_claim("partition-cases", max_size=3)
    d = r.details
    report(3, d["unlabeled_nontrivial"] == 0, r.seconds, 300,
           f"{d['sncs']} SNCs, {d['trivial']} trivial, {d['labeled']} labeled, "
           f"{d['unlabeled_nontrivial']} unlabeled nontrivial")


def test_criterion_04_quotient_structure(report):
    r = claims.run_claim("quotient-structure", max_size=5)
    report(4, r.status == claims.PASS, r.seconds, 60,
           f"{r.details['spaces']} spaces, {len(r.details['failures'])} failures")


def test_criterion_05_filter_theory(report):
    t = time.perf_counter()
    c = pr.chain(3)
    chain_ok = {r.K for r in pr.enumerate_filters(c)} == {1 << c.top, c.full}
    six = six_element_algebra()
    K = six.mask_of(SIX_K)
    rec = pr.filter_record(six, K)
    six_ok = rec.lattice and not rec.trivial and pr.supremal(six, K).K_plus == six.mask_of(SIX_K_PLUS)
    r = claims.run_claim("filter-theory", max_size=5)
    sweep_ok = r.details["cofine_plus_mismatches"] == 0 and r.details["lattice_l_filters"] > 0
    report(5, chain_ok and six_ok and sweep_ok, time.perf_counter() - t, 120,
           f"chain3 trivial={chain_ok}, six-element K/K+={six_ok}, "
           f"{r.details['lattice_l_filters']} lattice L-filters, {r.details['cofine_plus_mismatches']} mismatches")


def test_criterion_06_paste_product(report):
    r = claims.run_claim("paste-product", max_algebra=15)
    d = r.details
    p3 = pr.paste(pr.chain(3))
    dist = pr.check_prerough_axioms(p3)["distributive"].holds
    report(6, r.status == claims.PASS and d["tested"] > 0, r.seconds, None,
           f"{d['tested']} algebras, paste preserves={d['paste_preserves']}, "
           f"{d['product_violations']} product violations, paste(chain3) distributive={dist}")


def test_criterion_07_ocpr(report):
    r = claims.run_claim("ocpr", max_algebra=12)
    d = r.details
    ok = not d["order_failures"] and d["first_absorption_failure"] is not None and d["systems"] > 0
    report(7, ok, r.seconds, 120, f"{d['systems']} (Q,K) systems, absorption failure found")


def test_criterion_08_comparison(report):
    r = claims.run_claim("comparison-relations", max_size=4, seed=42)
    d = r.details
    ok = (d["reflexivity_failures"] == 0 and d["asymmetry_witness"] is not None
          and d["mu_classes"] == d["quasi_orders"] == d["antisymmetric_quotients"] == 1000)
    report(8, ok, r.seconds, None, f"{d['reflexivity_checked']} reflexivity checks, "
           f"{d['mu_classes']} μ-classes sampled")


def test_criterion_09_filter_agreement(report):
    r = claims.run_claim("filter-agreement", max_size=4, seed=42)
    d = r.details
    report(9, d["violations"] == 0 and d["hypothesis_pairs"] > 0, r.seconds, None,
           f"{d['hypothesis_pairs']} hypothesis pairs, {d['violations']} violations")


def test_criterion_10_bigness(report):
    r = claims.run_claim("bigness", max_size=5)
    d = r.details
    ok = d["b2_failures"] == 0 and d["delta_mismatches"] == 0 and d["gamma_failures"] == 0
    report(10, ok, r.seconds, None, f"{d['b1_satisfiers']} B1-satisfiers, {d['b2_failures']} B2 failures")


def test_criterion_11_alpha_beta(report):
    r = claims.run_claim("alpha-beta", max_size=3)
    d = r.details
    x2 = load_rys(data_path("x2-eq.json"))
    ab = alpha_beta_bounds(identity(x2))
    ok = r.status == claims.PASS and d["identity_alpha_beta_one"] and ab.alpha == ab.beta == 1
    report(11, ok, r.seconds, None, f"{d['morphisms']} morphisms, {d['beta_infinite']} with β=+∞")
