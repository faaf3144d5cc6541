"""The verification suite: every model-checkable claim at desk scale.

Each checker takes a size bound and a seed, returns a :class:`ClaimResult`
and never consults global state, so any run can be replayed from
``(claim, bound, seed)``.  Statuses:

``pass``           the universal claim holds over the whole scope
``counterexample`` a universal claim fails; the details carry the instance
``witness-found``  an existence claim is confirmed by a concrete instance
``reported``       an open or unspecified claim; findings only
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from granrough import bigness as bg
from granrough import comparison as cmp
from granrough import prerough as pr
from granrough.core_space import ApproximationSpace, Relation, Universe, partitions_of
from granrough.correspondence import (
    Correspondence,
    all_morphisms,
    all_oplus_morphisms,
    alpha_beta_bounds,
    approx_inclusion_report,
    block_case_matches,
    classify,
    closure_masks,
    definite_representability,
    from_function,
    identity,
    in_family,
    is_morphism,
    is_oplus_morphism,
    partition_case_matches,
    preservation_failure,
    random_morphism,
    random_oplus_morphism,
    union_extension,
)
from granrough.io import data_path, load_map, load_rys
from granrough.rys import Rys, atom_structure, build_classical_rys, build_tolerance_rys

PASS, COUNTEREXAMPLE, WITNESS, REPORTED = "pass", "counterexample", "witness-found", "reported"


@dataclass
class ClaimResult:
    claim: str
    status: str
    scope: dict[str, Any]
    details: dict[str, Any] = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status != COUNTEREXAMPLE

    def to_json(self) -> dict[str, Any]:
        # timing is left out so reports stay byte-identical across runs
        return {"claim": self.claim, "status": self.status, "scope": self.scope, "details": self.details}


def _names(rys: Rys, mask: int) -> list[str]:
    return rys.names(mask)


def _classes(rys: Rys) -> list[list[str]]:
    return [rys.names(m) for m in rys.granulation.distinct_masks]


def _table(phi: Correspondence) -> list[list[list[str]]]:
    return [[phi.source.names(a), phi.target.names(v)] for a, v in phi.items()]


def classical_systems(max_n: int, min_n: int = 1, prefix: str = "s") -> Iterator[Rys]:
    for n in range(min_n, max_n + 1):
        for sp in partitions_of(n, prefix):
            yield build_classical_rys(sp, "classical")


# -- concrete example reproductions -------------------------------------------------

def extended_example_maps() -> dict[str, Correspondence]:
    s1, s2 = load_rys(data_path("x1-tol.json")), load_rys(data_path("x2-eq.json"))
    return {m: load_map(data_path(f"{m}.json"), s1, s2) for m in ("phi", "sigma", "tau")}


def check_extended_example(max_size: int = 4, seed: int = 42) -> ClaimResult:
    maps = extended_example_maps()
    phi, sigma, tau = maps["phi"], maps["sigma"], maps["tau"]
    cp, cs, ct = classify(phi), classify(sigma), classify(tau)
    n = {g.name: g.mask for g in phi.source.granulation.granules}
    pw = cp.witnesses.get("oplus_morphism")
    sw = cs.witnesses.get("seeds_singleton_generated") or cs.witnesses.get("granule_images_term_representable")
    checks = {
        "phi_snc": cp.is_SNC,
        "phi_not_oplus": not cp.is_oplus_morphism,
        "phi_witness": bool(pw) and set(pw["pair"]) == {"n(x1)", "n(x3)"} and pw["combined"] == "n(x2)",
        "phi_witness_arith": (n["n(x1)"] | n["n(x3)"]) == n["n(x2)"]
        and (phi(n["n(x1)"]) | phi(n["n(x3)"])) != phi(n["n(x2)"]),
        "sigma_injective": cs.injective,
        "sigma_oplus": cs.is_oplus_morphism,
        "sigma_not_snc": not cs.is_SNC,
        "sigma_witness": bool(sw) and sw.get("granule") == "n(x1)" and sw.get("image") == ["a1", "a2"],
        "tau_pon": ct.is_PON,
        "tau_not_injective_on_granules": not ct.injective_on_granules,
    }
    ok = all(checks.values())
    return ClaimResult("extended-example", PASS if ok else COUNTEREXAMPLE, {"files": ["x1-tol", "x2-eq", "phi", "sigma", "tau"]},
                       {"checks": checks, "phi_witness": pw, "sigma_witness": sw,
                        "tau_witness": ct.witnesses.get("injective_on_granules")})


def check_morphism_counterexample(max_size: int = 4, seed: int = 42) -> ClaimResult:
    s1, s2 = load_rys(data_path("x1-eq.json")), load_rys(data_path("x2-eq.json"))
    sigma = load_map(data_path("sigma-classical.json"), s1, s2)
    cls = s1.universe.mask_of(["x1", "x2", "x3"])
    img = sigma(cls)
    seeds = frozenset(s2.granulation.distinct_masks)
    closure = closure_masks(seeds, frozenset(("oplus", "odot", "comp")), s2.top)
    odot = preservation_failure(sigma, "odot")
    details = {
        "image": _names(s2, img),
        "image_matches": _names(s2, img) == ["a1", "a3"],
        "oplus_morphism": is_oplus_morphism(sigma),
        "odot_failure": [_names(s1, a) for a in odot] if odot else None,
        "representable_with_complement": img in closure,
    }
    ok = details["image_matches"] and details["oplus_morphism"] and not details["representable_with_complement"]
    return ClaimResult("morphism-counterexample", WITNESS if ok else COUNTEREXAMPLE,
                       {"files": ["x1-eq", "x2-eq", "sigma-classical"]}, details)


# -- sub-natural correspondences between partitions ----------------------------------

def _key_sets(rys: Rys) -> list[int]:
    ks = [1 << i for i in range(rys.universe.size)]
    ks += [g for g in rys.granulation.distinct_masks if g not in ks]
    return ks


def partition_sncs(max_n: int) -> Iterator[Correspondence]:
    """Every SNC between partition systems on at most ``max_n`` points, up to free entries.

    Membership and the case labels depend only on the images of singletons
    and classes, so those are enumerated injectively and the remaining
    entries filled with the unused targets in order; the other fillings
    give the same verdicts.
    """
    for s1 in classical_systems(max_n, prefix="s"):
        ks = _key_sets(s1)
        free = [a for a in s1.carrier if a not in ks]
        for s2 in classical_systems(max_n, min_n=s1.universe.size, prefix="t"):
            for vals in itertools.permutations(s2.carrier, len(ks)):
                part = dict(zip(ks, vals))
                used = set(vals)
                rest = (m for m in s2.carrier if m not in used)
                for a, v in zip(free, rest):
                    part[a] = v
                phi = Correspondence(s1, s2, tuple(part[a] for a in s1.carrier))
                if classify(phi, fast=True).is_SNC:
                    yield phi


def is_trivial_snc(phi: Correspondence) -> bool:
    """All class images are the bottom or the top."""
    return all(phi(g) in (0, phi.target.top) for g in phi.source.granule_masks)


def check_partition_cases(max_size: int = 3, seed: int = 42) -> ClaimResult:
    n = min(max_size, 3)
    total = trivial = labeled = 0
    examples = []
    for phi in partition_sncs(n):
        total += 1
        if is_trivial_snc(phi):
            trivial += 1
            continue
        if partition_case_matches(phi):
            labeled += 1
            continue
        if len(examples) < 5:
            s1, s2 = phi.source, phi.target
            examples.append({
                "source_classes": _classes(s1), "target_classes": _classes(s2),
                "images": [[_names(s1, k), _names(s2, phi(k))] for k in _key_sets(s1)],
                "table": _table(phi),
            })
    unlabeled = total - trivial - labeled
    examples.sort(key=lambda e: (len(e["table"]), len(e["target_classes"])))
    return ClaimResult("partition-cases", PASS if unlabeled == 0 else COUNTEREXAMPLE, {"max_universe": n},
                       {"sncs": total, "trivial": trivial, "labeled": labeled, "unlabeled_nontrivial": unlabeled,
                        "examples": examples})


# -- pre-rough algebras ----------------------------------------------------------------

def quotient_spaces(max_n: int) -> Iterator[ApproximationSpace]:
    for n in range(1, max_n + 1):
        yield from partitions_of(n)


def check_quotient_structure(max_size: int = 5, seed: int = 42) -> ClaimResult:
    checked = 0
    bad = []
    for sp in quotient_spaces(max_size):
        q = pr.quotient_by_rough_equality(sp)
        checked += 1
        want = pr.expected_quotient_size(sp)
        ax = pr.check_prerough_axioms(q)
        fails = sorted(k for k, v in ax.items() if not v.holds)
        realizable = all(_realizes(sp, o) for o in q.objects)
        if q.size != want or fails or not realizable:
            bad.append({"classes": _classes(build_classical_rys(sp)), "size": q.size, "expected": want,
                        "failed_axioms": fails, "realizable": realizable})
    return ClaimResult("quotient-structure", PASS if not bad else COUNTEREXAMPLE, {"max_universe": max_size},
                       {"spaces": checked, "failures": bad[:5]})


def _realizes(sp: ApproximationSpace, o: pr.RoughObject) -> bool:
    r = build_classical_rys(sp)
    return r.lower(o.representative) == o.lower and r.upper(o.representative) == o.upper


def six_element_algebra() -> pr.PreRoughAlgebra:
    return pr.quotient_by_rough_equality(load_rys(data_path("x1-eq.json")))


SIX_K = ("({x4},{x4})", "({x4},{x1,x2,x3,x4})", "({x1,x2,x3,x4},{x1,x2,x3,x4})")
SIX_K_PLUS = ("({x1,x2,x3},{x1,x2,x3})", "({x1,x2,x3,x4},{x1,x2,x3,x4})")


def check_filter_theory(max_size: int = 5, seed: int = 42) -> ClaimResult:
    c3 = pr.chain(3)
    chain_filters = [c3.names(r.K) for r in pr.enumerate_filters(c3)]
    q6 = six_element_algebra()
    K = q6.mask_of(SIX_K)
    rec = pr.filter_record(q6, K)
    sup = pr.supremal(q6, K)
    six = {
        "nontrivial_lattice_l_filter": rec.lattice and not rec.trivial,
        "K_plus": q6.names(sup.K_plus),
        "K_plus_matches": sup.K_plus == q6.mask_of(SIX_K_PLUS),
    }
    w = pr.incomparability_search(q6, K)
    six["incomparable_pair"] = [q6.labels[i] for i in w] if w else None
    lattice = mismatches = incomparable = 0
    examples = []
    for sp in quotient_spaces(max_size):
        q = pr.quotient_by_rough_equality(sp)
        for r in pr.lattice_l_filters(q, bound=1 << max_size):
            lattice += 1
            s = pr.supremal(q, r.K)
            if not r.trivial and pr.incomparability_search(q, r.K) is not None:
                incomparable += 1
            if not s.equivalence_holds:
                mismatches += 1
                if len(examples) < 3:
                    examples.append({"classes": _classes(build_classical_rys(sp)), "K": q.names(r.K),
                                     "cofine": s.cofine, "K_plus": q.names(s.K_plus)})
    ok = chain_filters == [["1"], ["0", "a", "1"]] and six["nontrivial_lattice_l_filter"] \
        and six["K_plus_matches"] and mismatches == 0
    return ClaimResult("filter-theory", PASS if ok else COUNTEREXAMPLE, {"max_universe": max_size},
                       {"chain3_l_filters": chain_filters, "six_element": six, "lattice_l_filters": lattice,
                        "cofine_plus_mismatches": mismatches, "examples": examples,
                        "filters_with_incomparable_pair": incomparable})


def check_paste_product(max_size: int = 15, seed: int = 42, levels: int = 2) -> ClaimResult:
    """Constructions applied to algebras without nontrivial lattice L-filters."""
    bases = [pr.chain(2), pr.chain(3)]
    tested = []
    violations = []
    pool = list(bases)
    seen = {b.leq for b in pool}
    for _ in range(levels):
        new = []
        for a in pool:
            cands = [("paste", (a.name,), pr.paste(a))]
            cands += [("product", (a.name, b.name), pr.product(a, b)) for b in pool]
            for how, args, r in cands:
                if r.size > max_size or r.leq in seen:
                    continue
                seen.add(r.leq)
                ax = pr.check_prerough_axioms(r)
                bad = pr.nontrivial_lattice_l_filters(r)
                entry = {"construction": how, "inputs": list(args), "name": r.name, "size": r.size,
                         "property_preserved": not bad, "distributive": ax["distributive"].holds,
                         "failed_axioms": sorted(k for k, v in ax.items() if not v.holds)}
                tested.append(entry)
                if bad:
                    violations.append({**entry, "filter": r.names(bad[0].K)})
                else:
                    new.append(r)
        pool = pool + new
    paste_rows = [t for t in tested if t["construction"] == "paste"]
    return ClaimResult("paste-product", PASS if not violations else COUNTEREXAMPLE,
                       {"levels": levels, "max_algebra": max_size},
                       {"tested": len(tested), "instances": tested, "violations": violations[:5],
                        "paste_preserves": all(t["property_preserved"] for t in paste_rows),
                        "product_violations": sum(v["construction"] == "product" for v in violations)})


def ocpr_algebras(max_q: int = 12, max_universe: int = 5) -> Iterator[pr.PreRoughAlgebra]:
    seen = set()
    for sp in quotient_spaces(max_universe):
        q = pr.quotient_by_rough_equality(sp)
        if q.size <= max_q and q.leq not in seen:
            seen.add(q.leq)
            yield q
    for a in (pr.chain(2), pr.chain(3)):
        while True:
            a = pr.paste(a)
            if a.size > max_q:
                break
            if a.leq not in seen:
                seen.add(a.leq)
                yield a


def check_ocpr(max_size: int = 12, seed: int = 42) -> ClaimResult:
    systems = 0
    bad = []
    absorption = None
    for q in ocpr_algebras(max_size):
        for r in pr.enumerate_filters(q, bound=max_size):
            systems += 1
            o = pr.ocpr_build(q, r.K)
            ver = pr.verify_ocpr(o)
            fails = sorted(k for k, v in ver.items() if not v.holds)
            if fails:
                bad.append({"algebra": q.name, "K": q.names(r.K), "failed": fails})
            if absorption is None:
                w = pr.absorption_failure(o)
                if w is not None:
                    absorption = {"algebra": q.name, "K": q.names(r.K), "x": q.labels[w[0]], "y": q.labels[w[1]]}
    q6 = six_element_algebra()
    o6 = pr.ocpr_build(q6, q6.mask_of(SIX_K))
    x, y = q6.index("({x1,x2,x3},{x1,x2,x3})"), q6.index("({x4},{x1,x2,x3,x4})")
    six_absorption_fails = o6.cap[y][x] is None
    ok = not bad and absorption is not None and six_absorption_fails
    return ClaimResult("ocpr", PASS if ok else COUNTEREXAMPLE, {"max_algebra": max_size},
                       {"systems": systems, "order_failures": bad[:5], "first_absorption_failure": absorption,
                        "six_element_absorption_failure": six_absorption_fails})


# -- comparison relations --------------------------------------------------------------

def _pool(rys: Rys, rng: random.Random, k: int = 6) -> list[Correspondence]:
    base = [identity(rys),
            from_function(rys, rys, rys.upper, "upper"),
            from_function(rys, rys, rys.lower, "lower")]
    base += [random_morphism(rys, rys, rng) for _ in range(k)]
    return base


def check_comparison(max_size: int = 4, seed: int = 42, samples: int = 1000) -> ClaimResult:
    rng = random.Random(seed)
    systems = list(classical_systems(max_size))
    refl_checked = refl_fail = no_zc = 0
    for rys in systems:
        x_c = atom_structure(rys).x_c
        for f in _pool(rys, rng):
            v = cmp.related(f, f, "theta_lu", x_c)
            if not x_c:
                no_zc += 1
                continue
            refl_checked += 1
            if not v.holds:
                refl_fail += 1
    witness = cmp.find_asymmetry(
        (r for r in systems if r.universe.size >= 3),
        lambda r: [identity(r), from_function(r, r, r.upper, "upper"), *itertools.islice(all_morphisms(r, r), 40)])
    asym = None
    if witness:
        src = witness.f.source
        asym = {"classes": _classes(src), "f": _table(witness.f), "h": _table(witness.h),
                "z0": src.names(witness.forward.z0), "both_morphisms": witness.morphisms}
    classes = quasi = anti = 0
    sizes = []
    big = [r for r in systems if r.universe.size >= 3]
    for _ in range(samples):
        rys = rng.choice(big)
        h = random_morphism(rys, rys, rng)
        pool = [random_morphism(rys, rys, rng) for _ in range(6)] + [h]
        mu = cmp.mu_class(h, "mu", pool)
        if not mu.members:
            continue
        order = cmp.class_order(mu.members)
        classes += 1
        sizes.append(len(mu.members))
        quasi += order.is_quasi_order
        anti += order.quotient_antisymmetric
    ok = refl_fail == 0 and witness is not None and quasi == classes and anti == classes
    return ClaimResult("comparison-relations", PASS if ok else COUNTEREXAMPLE,
                       {"max_universe": max_size, "seed": seed, "samples": samples},
                       {"reflexivity_checked": refl_checked, "reflexivity_failures": refl_fail,
                        "skipped_without_admissible_z0": no_zc, "asymmetry_witness": asym,
                        "mu_classes": classes, "quasi_orders": quasi, "antisymmetric_quotients": anti,
                        "largest_class": max(sizes, default=0)})


def _automorphisms(rys: Rys) -> Iterator[Correspondence]:
    n = rys.universe.size
    for perm in itertools.permutations(range(n)):
        yield union_extension(rys, rys, [1 << p for p in perm])


def _perturb(f: Correspondence, rng: random.Random) -> Correspondence:
    t = list(f.table)
    for _ in range(rng.randrange(1, 3)):
        a, b = rng.randrange(len(t)), rng.randrange(len(t))
        t[a], t[b] = t[b], t[a]
    return Correspondence(f.source, f.target, tuple(t), "g")


def check_filter_agreement(max_size: int = 4, seed: int = 42, samples: int = 1000) -> ClaimResult:
    rng = random.Random(seed)
    systems = [r for r in classical_systems(max_size) if r.universe.size >= 3]
    fams: list[tuple[Rys, list[Correspondence]]] = []
    for rys in systems:
        cands = list(_automorphisms(rys)) + [random_oplus_morphism(rys, rys, rng) for _ in range(20)]
        sm = {}
        for f in cands:
            if f.table not in sm and in_family(f, "SM_s"):
                sm[f.table] = f
        if sm:
            fams.append((rys, list(sm.values())))
    pairs = violations = 0
    witness_points = 0
    example = None
    for _ in range(samples):
        rys, fam = rng.choice(fams)
        f = rng.choice(fam)
        g = rng.choice([f, _perturb(f, rng), rng.choice(fam)])
        if not classify(g, fast=True).is_SNC:
            continue
        v = cmp.related(g, f, "theta_lu")
        if not v.holds:
            continue
        rep = cmp.filter_agreement(f, g, v.z0)
        pairs += 1
        witness_points += len(rep.checked)
        if not rep.holds:
            violations += 1
            if example is None:
                example = {"classes": _classes(rys), "f": _table(f), "g": _table(g),
                           "z0": rys.names(v.z0), "violations": [rys.names(x) for x in rep.violations]}
    ok = violations == 0 and pairs > 0
    return ClaimResult("filter-agreement", PASS if ok else COUNTEREXAMPLE,
                       {"max_universe": max_size, "seed": seed, "samples": samples},
                       {"hypothesis_pairs": pairs, "checked_points": witness_points, "violations": violations,
                        "example": example})


# -- bigness ------------------------------------------------------------------------------

def check_bigness(max_size: int = 5, seed: int = 42) -> ClaimResult:
    """B1 ⇒ B2 over every B1-satisfier, Δ reproducibility and Γ reflexivity."""
    rng = random.Random(seed)
    satisfiers = b2_fail = 0
    example = None
    for rys in classical_systems(max_size):
        s = bg.structure_of(rys)
        for e in bg.upset_predicates(s):
            satisfiers += 1
            bad = bg.axiom_failure(s, e, "B2")
            if bad is not None:
                b2_fail += 1
                example = example or {"classes": _classes(rys), "big": [s.labels[i] for i in bg.bits(e)]}
    delta_runs = delta_diff = 0
    gamma_checked = gamma_fail = 0
    for rys in classical_systems(min(max_size, 4)):
        s = bg.structure_of(rys)
        for v in bg.DELTAS:
            side = {"D3": "l", "D4": "lu", "D5": "u"}.get(v)
            for x0 in (s.definite(side) if side else range(s.size)):
                delta_runs += 1
                if bg.delta_predicate(s, x0, v) != bg.delta_predicate(s, x0, v):
                    delta_diff += 1
        preds = [bg.upset_predicate(s, rng.randrange(s.size)) for _ in range(3)]
        preds.append(bg.extensional(s, []))
        for f in _pool(rys, rng, 3):
            for p in preds:
                gamma_checked += 1
                gamma_fail += not bg.rough_growth(f, f, p).holds
    ok = b2_fail == 0 and delta_diff == 0 and gamma_fail == 0
    return ClaimResult("bigness", PASS if ok else COUNTEREXAMPLE, {"max_universe": max_size, "seed": seed},
                       {"b1_satisfiers": satisfiers, "b2_failures": b2_fail, "example": example,
                        "delta_runs": delta_runs, "delta_mismatches": delta_diff,
                        "gamma_checked": gamma_checked, "gamma_failures": gamma_fail})


def check_b3_b1(max_size: int = 3, seed: int = 42) -> ClaimResult:
    """Both directions between B1 and B3, with and without reflexive parthood."""
    n = min(max_size, 3)
    refl = lambda: (s for k in range(1, n + 1) for s in bg.parthood_structures(k) if s.reflexive)  # noqa: E731
    anyp = lambda: (s for k in range(1, n + 1) for s in bg.parthood_structures(k))  # noqa: E731

    def summary(r: bg.ImplicationSearch):
        out = {"structures": r.structures, "predicates": r.predicates, "counterexample": None}
        if r.counterexample:
            s, e = r.counterexample
            out["counterexample"] = {"points": list(s.labels),
                                     "parthood": [[s.labels[i], s.labels[j]] for i in range(s.size)
                                                  for j in range(s.size) if s.P(i, j)],
                                     "big": [s.labels[i] for i in bg.bits(e)]}
        return out

    return ClaimResult("b3-b1-direction", REPORTED, {"max_points": n}, {
        "B3_implies_B1_reflexive": summary(bg.search_implication("B3", "B1", refl())),
        "B3_implies_B1_any": summary(bg.search_implication("B3", "B1", anyp())),
        "B1_implies_B3_any": summary(bg.search_implication("B1", "B3", anyp())),
    })


# -- measures and representability ---------------------------------------------------------

def check_alpha_beta(max_size: int = 3, seed: int = 42) -> ClaimResult:
    n = min(max_size, 3)
    morphisms = infinite = 0
    bad = None
    ident_ok = True
    systems = list(classical_systems(n))
    for s1 in systems:
        ab = alpha_beta_bounds(identity(s1))
        ident_ok &= ab.alpha == 1 and ab.beta == 1 and not ab.beta_infinite
        for s2 in systems:
            for sigma in all_oplus_morphisms(s1, s2):
                ab = alpha_beta_bounds(sigma)
                morphisms += 1
                infinite += ab.beta_infinite
                finite = ab.alpha is not None and (ab.beta_infinite or ab.beta is not None)
                ordered = ab.beta_infinite or ab.alpha <= ab.beta
                if not (finite and ordered) and bad is None:
                    bad = {"source": _classes(s1), "target": _classes(s2), "table": _table(sigma)}
    ok = bad is None and ident_ok
    return ClaimResult("alpha-beta", PASS if ok else COUNTEREXAMPLE, {"max_universe": n},
                       {"morphisms": morphisms, "beta_infinite": infinite, "identity_alpha_beta_one": ident_ok,
                        "failure": bad})


def check_definite_representability(max_size: int = 3, seed: int = 42) -> ClaimResult:
    """Definite elements under proto-natural maps: with and without ⊕-preservation."""
    n = min(max_size, 3)
    rng = random.Random(seed)
    pom = pom_fail = 0
    poc_counter = None
    systems = list(classical_systems(n))
    for s1 in systems:
        for s2 in systems:
            for sigma in all_oplus_morphisms(s1, s2):
                if sigma(0) != 0 or not classify(sigma, fast=True).is_PON:
                    continue
                pom += 1
                pom_fail += not definite_representability(sigma).ok
            if poc_counter is None:
                for _ in range(50):
                    t = tuple(rng.randrange(len(s2.carrier)) for _ in s1.carrier)
                    phi = Correspondence(s1, s2, t)
                    if classify(phi, fast=True).is_PON and not definite_representability(phi).ok:
                        poc_counter = {"source": _classes(s1), "target": _classes(s2), "table": _table(phi),
                                       "failures": definite_representability(phi).failures}
                        break
    return ClaimResult("definite-representability", REPORTED, {"max_universe": n, "seed": seed},
                       {"pom_with_empty_base": pom, "pom_failures": pom_fail, "poc_counterexample": poc_counter})


def check_tolerance_inclusions(max_size: int = 3, seed: int = 42) -> ClaimResult:
    """Approximation inclusions for SNC ⊕-morphisms meeting C1 into block tolerance systems."""
    n = min(max_size, 3)
    tested = lower_fail = upper_fail = based_fail = equality_cases = equality_fail = 0
    example = None
    for s1 in classical_systems(n, prefix="s"):
        for s2 in _tolerance_systems(n):
            for phi in all_oplus_morphisms(s1, s2):
                if not classify(phi, fast=True).is_SNC or "C1" not in block_case_matches(phi):
                    continue
                tested += 1
                rep = approx_inclusion_report(phi)[0]
                lower_fail += not rep.lower_inclusion
                upper_fail += not rep.upper_inclusion
                based_fail += phi(0) == 0 and not (rep.lower_inclusion and rep.upper_inclusion)
                if phi(0) == 0 and phi(s1.top) == s2.top and is_morphism(phi):
                    equality_cases += 1
                    equality_fail += not rep.equality
                if (not rep.lower_inclusion or not rep.upper_inclusion) and example is None:
                    example = {"source": _classes(s1), "target_blocks": _classes(s2),
                               "table": _table(phi), "counterexample": rep.counterexample}
    return ClaimResult("tolerance-inclusions", REPORTED, {"max_universe": n},
                       {"tested": tested, "lower_failures": lower_fail, "upper_failures": upper_fail,
                        "failures_with_empty_base": based_fail, "bounded_morphisms": equality_cases, "equality_failures": equality_fail,
                        "example": example})


def _tolerance_systems(n: int) -> Iterator[Rys]:
    for k in range(1, n + 1):
        names = tuple(f"t{i}" for i in range(1, k + 1))
        u = Universe(names)
        edges = list(itertools.combinations(names, 2))
        for choice in range(1 << len(edges)):
            pairs = {(x, x) for x in names}
            for j, (a, b) in enumerate(edges):
                if choice >> j & 1:
                    pairs |= {(a, b), (b, a)}
            sp = ApproximationSpace(u, Relation(u, frozenset(pairs), "tolerance"))
            yield build_tolerance_rys(sp, "block")


def check_supremal_structure(max_size: int = 4, seed: int = 42) -> ClaimResult:
    rows = []
    for sp in quotient_spaces(max_size):
        q = pr.quotient_by_rough_equality(sp)
        s = pr.supremal_structure(q, bound=1 << max_size)
        rows.append({"classes": _classes(build_classical_rys(sp)), "supremals": len(s.supremals),
                     "boolean_under_inclusion": s.boolean_under_inclusion,
                     "boolean_under_plus_order": s.boolean_under_plus_order,
                     "plus_involutive": s.plus_involutive})
    return ClaimResult("supremal-order", REPORTED, {"max_universe": max_size},
                       {"algebras": len(rows),
                        "all_boolean_under_inclusion": all(r["boolean_under_inclusion"] for r in rows),
                        "all_boolean_under_plus_order": all(r["boolean_under_plus_order"] for r in rows),
                        "rows": rows})


def check_mu_operations(max_size: int = 4, seed: int = 42, samples: int = 60) -> ClaimResult:
    """Sums and products of μΘ_lu members compared against class membership."""
    rng = random.Random(seed)
    tested = sum_theta = prod_theta = non_morphism = 0
    first: dict[str, Any] | None = None
    for rys in classical_systems(max_size, min_n=3):
        h = identity(rys)
        mu = cmp.mu_class(h, "mu", [random_morphism(rys, rys, rng) for _ in range(samples)] + [h])
        for f, g in itertools.combinations(mu.members, 2):
            for op, out in (("sum", mu.add(f, g)), ("product", mu.mul(f, g))):
                tested += 1
                theta = cmp.related(out.value, h, "theta_lu").holds
                sum_theta += op == "sum" and not theta
                prod_theta += op == "product" and not theta
                if not out.member:
                    non_morphism += not is_morphism(out.value)
                    if first is None:
                        first = {"classes": _classes(rys), "op": op, "f": _table(f), "g": _table(g),
                                 "theta_lu": theta, "morphism": is_morphism(out.value)}
    status = COUNTEREXAMPLE if first else PASS
    return ClaimResult("mu-operations", status, {"max_universe": max_size, "seed": seed, "samples": samples},
                       {"pairs_tested": tested, "sum_theta_failures": sum_theta,
                        "product_theta_failures": prod_theta, "non_morphisms": non_morphism,
                        "first_failure": first})


@dataclass(frozen=True)
class Claim:
    id: str
    topic: str
    checker: Callable[..., ClaimResult]
    scope: str  # "space" or "algebra"


CLAIMS: tuple[Claim, ...] = (
    Claim("extended-example", "correspondence classes on the worked tolerance/equivalence example", check_extended_example, "space"),
    Claim("morphism-counterexample", "a classical morphism with a non-representable class image", check_morphism_counterexample, "space"),
    Claim("partition-cases", "nontrivial SNCs between partitions fall into four cases", check_partition_cases, "space"),
    Claim("quotient-structure", "rough-equality quotients are pre-rough algebras of the expected size", check_quotient_structure, "space"),
    Claim("filter-theory", "L-filters, supremal filters and cofinality", check_filter_theory, "space"),
    Claim("paste-product", "paste and product keep out nontrivial lattice L-filters", check_paste_product, "algebra"),
    Claim("ocpr", "the OCPR order is a partial order compatible with L and U", check_ocpr, "algebra"),
    Claim("comparison-relations", "Θ_lu reflexivity, asymmetry and μ-class orders", check_comparison, "space"),
    Claim("mu-operations", "pointwise sum and product stay inside a μΘ_lu class", check_mu_operations, "space"),
    Claim("filter-agreement", "Θ_lu-related smooth maps agree on definite elements of a filter", check_filter_agreement, "space"),
    Claim("bigness", "B1 implies B2, Δ reproducibility, Γ reflexivity", check_bigness, "space"),
    Claim("alpha-beta", "extremal α and β exist for ⊕-morphisms", check_alpha_beta, "space"),
    Claim("b3-b1-direction", "the direction of the B1/B3 implication", check_b3_b1, "space"),
    Claim("definite-representability", "definite elements under proto-natural maps", check_definite_representability, "space"),
    Claim("tolerance-inclusions", "approximation inclusions into tolerance systems", check_tolerance_inclusions, "space"),
    Claim("supremal-order", "Boolean orders on supremal filters", check_supremal_structure, "space"),
)
CLAIM_IDS = tuple(c.id for c in CLAIMS)


def run_claim(claim_id: str, max_size: int = 4, seed: int = 42, max_algebra: int = 12) -> ClaimResult:
    claim = next((c for c in CLAIMS if c.id == claim_id), None)
    if claim is None:
        raise KeyError(f"unknown claim {claim_id!r}")
    bound = max_algebra if claim.scope == "algebra" else max_size
    t = time.perf_counter()
    res = claim.checker(bound, seed)
    res.seconds = time.perf_counter() - t
    return res


def run_suite(ids=None, max_size: int = 4, seed: int = 42, max_algebra: int = 12) -> list[ClaimResult]:
    return [run_claim(i, max_size, seed, max_algebra) for i in (ids or CLAIM_IDS)]
