import itertools
import random
from fractions import Fraction

import pytest

from granrough.core_space import ApproximationSpace, partitions_of
from granrough.correspondence import (
    Correspondence,
    CorrespondenceError,
    Term,
    all_morphisms,
    all_oplus_morphisms,
    alpha_beta_bounds,
    approx_inclusion_report,
    block_case,
    build_from_partial,
    classify,
    definite_representability,
    from_function,
    generated_subalgebra,
    identity,
    in_family,
    is_morphism,
    is_oplus_morphism,
    leq,
    partition_case,
    partition_case_matches,
    pointwise_ops,
    random_morphism,
    seeds_for,
    union_extension,
)
from granrough.rys import as_tolerance_space, build_classical_rys, build_tolerance_rys


def classical(*blocks):
    return build_classical_rys(ApproximationSpace.from_partition(blocks))


# -- generated subalgebras ---------------------------------------------------------

def test_closure_of_two_classes(x2_eq):
    m = x2_eq.universe.mask_of
    terms = generated_subalgebra(x2_eq, [("G1", m(["a1", "a2", "a4"])), ("G2", m(["a3"]))], ("oplus", "odot"))
    assert {frozenset(x2_eq.names(v)) for v in terms} == {
        frozenset(), frozenset({"a3"}), frozenset({"a1", "a2", "a4"}), frozenset({"a1", "a2", "a3", "a4"})}
    assert m(["a1", "a2"]) not in terms
    vals = {"G1": m(["a1", "a2", "a4"]), "G2": m(["a3"])}
    for v, t in terms.items():
        assert t.evaluate(vals, x2_eq.top) == v


def test_seed_retained_and_unknown_op(x2_eq):
    assert 0b1 in generated_subalgebra(x2_eq, [("g", 0b1)], ("oplus",))
    with pytest.raises(CorrespondenceError):
        generated_subalgebra(x2_eq, [("g", 1)], ("meet",))


def test_term_json():
    t = Term("oplus", (Term("seed", name="a"), Term("comp", (Term("seed", name="b"),))))
    assert t.to_json() == {"op": "oplus", "args": [{"seed": "a"}, {"op": "comp", "args": [{"seed": "b"}]}]}
    assert t.seeds() == {"a", "b"}


# -- seeds ------------------------------------------------------------------------

def test_seeds_examples(maps, x2_eq):
    phi, sigma = maps["phi"], maps["sigma"]
    assert [x2_eq.names(g.mask) for g in seeds_for(phi, "x4")] == [["a3"]]
    assert [x2_eq.names(g.mask) for g in seeds_for(sigma, "x1")] == [["a1", "a2", "a4"]]


def test_seeds_of_empty_image(x1_eq):
    f = from_function(x1_eq, x1_eq, lambda a: 0)
    assert seeds_for(f, "x1") == ()


# -- the worked example ------------------------------------------------------------

def test_phi_certificate(maps):
    c = classify(maps["phi"])
    assert c.is_SNC and not c.is_oplus_morphism
    w = c.witnesses["oplus_morphism"]
    assert set(w["pair"]) == {"n(x1)", "n(x3)"} and w["combined"] == "n(x2)"


def test_sigma_certificate(maps):
    c = classify(maps["sigma"])
    assert c.injective and c.is_oplus_morphism and not c.is_SNC
    w = c.witnesses["seeds_singleton_generated"]
    assert w["granule"] == "n(x1)" and w["image"] == ["a1", "a2"]


def test_tau_certificate(maps):
    c = classify(maps["tau"])
    assert c.is_PON and not c.injective_on_granules and not c.is_PNC


def test_certificate_json_keys(maps):
    j = classify(maps["phi"]).to_json()
    assert j["is_SNC"] is True and "witnesses" in j


def test_fast_mode_agrees(maps):
    for m in maps.values():
        full, fast = classify(m), classify(m, fast=True)
        for k in ("is_PON", "is_PNC", "is_SNC", "is_oplus_morphism", "is_odot_morphism", "smooth"):
            assert getattr(full, k) == getattr(fast, k)


# -- loader policies -------------------------------------------------------------

def test_oplus_extension_contradiction(x1_eq):
    with pytest.raises(CorrespondenceError):
        build_from_partial(x1_eq, x1_eq, {1: 1, 2: 2, 4: 4, 8: 8, 3: 1}, "oplus-extension")


def test_explicit_total_needs_every_entry(x1_eq):
    with pytest.raises(CorrespondenceError):
        build_from_partial(x1_eq, x1_eq, {0: 0}, "explicit-total")


def test_identity_elsewhere(x1_eq):
    f = build_from_partial(x1_eq, x1_eq, {1: 2}, "identity-elsewhere")
    assert f(1) == 2 and f(6) == 6


def test_table_validation(x1_eq):
    with pytest.raises(CorrespondenceError):
        Correspondence(x1_eq, x1_eq, (0,))
    with pytest.raises(CorrespondenceError):
        Correspondence(x1_eq, x1_eq, (99,) * 16)


# -- morphism enumeration vs brute force ---------------------------------------------

@pytest.mark.parametrize("n,m", [(1, 2), (2, 2), (2, 3)])
def test_morphism_enumeration_matches_bruteforce(n, m):
    s1 = classical(*[[f"s{i}"] for i in range(1, n + 1)])
    s2 = classical(*[[f"t{i}"] for i in range(1, m + 1)])
    tables = list(itertools.product(range(1 << m), repeat=1 << n))
    union = [t for t in tables if all(t[a | b] == t[a] | t[b] for a in range(1 << n) for b in range(1 << n))]
    both = [t for t in union if all(t[a & b] == t[a] & t[b] for a in range(1 << n) for b in range(1 << n))]
    assert sorted(f.table for f in all_oplus_morphisms(s1, s2)) == sorted(union)
    assert sorted(f.table for f in all_morphisms(s1, s2)) == sorted(both)


def test_random_morphism_is_morphism():
    r = classical(["a", "b"], ["c"])
    rng = random.Random(3)
    for _ in range(50):
        assert is_morphism(random_morphism(r, r, rng))


# -- case labels ------------------------------------------------------------------

def test_identity_is_b1():
    r = classical(["a", "b"], ["c"])
    assert partition_case(identity(r)) == "B1"


def test_complement_map_is_b2():
    s1 = classical(["a", "b"], ["c", "d"])
    s2 = classical(["p", "q"], ["r", "s"])
    sw = {1: 0b1100, 2: 0b1100, 4: 0b0011, 8: 0b0011}
    f = union_extension(s1, s2, [sw[1 << i] for i in range(4)])
    # each singleton lands in the other class; class images are the complements
    g = from_function(s1, s2, lambda a: s2.top & ~f(a) if a in s1.granule_masks else f(a))
    assert "B2" in partition_case_matches(g)


def test_partition_case_precondition(maps):
    with pytest.raises(CorrespondenceError):
        partition_case(maps["phi"])


def test_block_case_identity():
    r = classical(["a", "b"], ["c"])
    t = build_tolerance_rys(as_tolerance_space(r.space), "block")
    f = from_function(r, t, lambda a: a)
    assert block_case(f) == "C1"


# -- approximations, representability, measures ---------------------------------------

def test_identity_inclusions_are_equalities():
    r = classical(["a", "b"], ["c"])
    t = build_tolerance_rys(as_tolerance_space(r.space), "block")
    rep = approx_inclusion_report(from_function(r, t, lambda a: a))
    assert rep[0].lower_inclusion and rep[0].upper_inclusion and rep[0].equality


def test_inclusion_preconditions(x1_eq):
    with pytest.raises(CorrespondenceError):
        approx_inclusion_report(identity(x1_eq))


def test_classical_counterexample_fails_representability(sigma_classical, x2_eq):
    rep = definite_representability(sigma_classical)
    assert not rep.ok
    # every nonempty class union lands off the class algebra
    assert rep.failures == [("x1", "x2", "x3"), ("x4",), ("x1", "x2", "x3", "x4")]
    assert x2_eq.names(sigma_classical(0b0111)) == ["a1", "a3"]
    assert rep.witnesses[()] == {"op": "oplus", "args": []}


def test_pom_with_empty_base_representable():
    s1, s2 = classical(["a", "b"], ["c"]), classical(["p"], ["q", "r"])
    for f in all_oplus_morphisms(s1, s2):
        if f(0) == 0 and in_family(f, "POM"):
            assert definite_representability(f).ok


def test_sm_s_witnesses_are_pure_unions():
    r = classical(["a", "b"], ["c"])
    for f in all_oplus_morphisms(r, r):
        if in_family(f, "SM_s"):
            assert definite_representability(f).pure_unions


def test_alpha_beta_identity(x1_eq):
    ab = alpha_beta_bounds(identity(x1_eq))
    assert ab.alpha == 1 and ab.beta == 1 and not ab.beta_infinite


def test_alpha_beta_collapse_to_top(x1_eq):
    top = from_function(x1_eq, x1_eq, lambda a: x1_eq.top)
    ab = alpha_beta_bounds(top)
    assert ab.beta_infinite and ab.beta is None


def test_alpha_beta_counterexample_map(sigma_classical):
    # exhaustive 16x16 scan with the test's own k avoids sharing code
    s = sigma_classical.source

    def k(x, y):
        return Fraction(1) if not x else Fraction(bin(x & y).count("1"), bin(x).count("1"))

    ratios, inf = [], False
    for x in s.carrier:
        for y in s.carrier:
            k1, k2 = k(x, y), k(sigma_classical(x), sigma_classical(y))
            if k1 == 0:
                inf |= k2 > 0
            else:
                ratios.append(k2 / k1)
    ab = alpha_beta_bounds(sigma_classical)
    assert ab.alpha == min(ratios)
    assert ab.beta_infinite == inf
    assert ab.alpha == Fraction(2, 3) and ab.beta_infinite


def test_alpha_beta_needs_oplus(maps):
    with pytest.raises(CorrespondenceError):
        alpha_beta_bounds(maps["phi"])


# -- pointwise algebra ------------------------------------------------------------

def test_oplus_idempotent(maps):
    tau = maps["tau"]
    out = pointwise_ops("POC", tau, tau)
    assert out["oplus"].value.table == tau.table


def test_pon_join_stays_pon(maps, x1_tol, x2_eq):
    tau = maps["tau"]
    tau2 = union_extension(x1_tol, x2_eq, [x2_eq.universe.mask_of([n]) for n in ("a5", "a3", "a5", "a3")])
    assert in_family(tau2, "POC")
    out = pointwise_ops("POC", tau, tau2)
    assert out["oplus"].member


def test_snc_join_can_be_undefined():
    r = classical(["a"], ["b"])
    f = identity(r)
    g = from_function(r, r, lambda a: {0: 0, 1: 2, 2: 1, 3: 3}[a])
    assert in_family(f, "SNC") and in_family(g, "SNC")
    out = pointwise_ops("SNC", f, g)
    assert not out["oplus"].defined


def test_leq_reflexive_transitive():
    r = classical(["a", "b"])
    fs = list(itertools.islice(all_oplus_morphisms(r, r), 30))
    for f in fs:
        assert leq(f, f)
    for f, g, h in itertools.product(fs[:10], repeat=3):
        if leq(f, g) and leq(g, h):
            assert leq(f, h)


def test_certificate_implications_small_sweep():
    spaces = [build_classical_rys(sp) for n in (1, 2) for sp in partitions_of(n)]
    for s1 in spaces:
        for s2 in spaces:
            for table in itertools.product(s2.carrier, repeat=len(s1.carrier)):
                c = classify(Correspondence(s1, s2, table), fast=True)
                assert not c.is_SNC or c.is_PNC
                assert not c.is_PNC or c.is_PON


def test_oplus_check_matches_definition(maps):
    for m in maps.values():
        src = m.source
        expect = all(m(a | b) == m(a) | m(b) for a in src.carrier for b in src.carrier)
        assert is_oplus_morphism(m) == expect
