"""Correspondences between rough Y-systems and their classification."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Any, Callable, Iterable, Iterator, Mapping

from granrough.core_space import k_mask, upper_mask
from granrough.rys import Rys

OPS = ("oplus", "odot", "comp")


class CorrespondenceError(ValueError):
    pass


@dataclass(frozen=True)
class Correspondence:
    """A total map from the source carrier to the target carrier."""

    source: Rys
    target: Rys
    table: tuple[int, ...]
    name: str = "phi"

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != len(self.source.carrier):
            raise CorrespondenceError("table must cover the whole source carrier")
        cs = self.target.carrier_set
        bad = [v for v in self.table if v not in cs]
        if bad:
            raise CorrespondenceError(f"images outside the target carrier: {bad[:3]}")

    @cached_property
    def _index(self) -> dict[int, int]:
        return {a: i for i, a in enumerate(self.source.carrier)}

    def __call__(self, a: int) -> int:
        return self.table[a] if self.source.is_powerset else self.table[self._index[a]]

    def items(self) -> Iterator[tuple[int, int]]:
        return zip(self.source.carrier, self.table)

    def singleton(self, x: str) -> int:
        return self(1 << self.source.universe.index(x))


def from_function(source: Rys, target: Rys, fn: Callable[[int], int], name: str = "phi") -> Correspondence:
    return Correspondence(source, target, tuple(fn(a) for a in source.carrier), name)


def identity(rys: Rys) -> Correspondence:
    return from_function(rys, rys, lambda a: a, "id")


def union_extension(source: Rys, target: Rys, singletons: Mapping[str, int] | list[int],
                    base: int = 0, name: str = "phi") -> Correspondence:
    """The map ``A -> base | U{s(x) : x in A}`` forced by ⊕-preservation."""
    if isinstance(singletons, Mapping):
        s = [singletons[x] for x in source.universe]
    else:
        s = list(singletons)

    def fn(a: int) -> int:
        out = base
        for i, v in enumerate(s):
            if a >> i & 1:
                out |= v
        return out

    return from_function(source, target, fn, name)


def build_from_partial(source: Rys, target: Rys, partial: Mapping[int, int], extension: str,
                       name: str = "phi") -> Correspondence:
    """Complete a partially specified table with an extension policy.

    ``explicit-total`` requires every carrier element, ``oplus-extension``
    derives everything from singleton images, ``identity-elsewhere`` maps
    unspecified sets to themselves (same universe names only).
    """
    if extension == "explicit-total":
        missing = [a for a in source.carrier if a not in partial]
        if missing:
            raise CorrespondenceError(f"{len(missing)} carrier elements have no image")
        return Correspondence(source, target, tuple(partial[a] for a in source.carrier), name)
    if extension == "oplus-extension":
        s = []
        for i, x in enumerate(source.universe):
            if 1 << i not in partial:
                raise CorrespondenceError(f"oplus-extension needs the image of {{{x}}}")
            s.append(partial[1 << i])
        phi = union_extension(source, target, s, partial.get(0, 0), name)
        for a, v in partial.items():
            if phi(a) != v:
                raise CorrespondenceError(
                    f"image of {source.names(a)} contradicts the ⊕-extension")
        return phi
    if extension == "identity-elsewhere":
        if source.universe.elements != target.universe.elements:
            raise CorrespondenceError("identity-elsewhere needs equal universes")
        return from_function(source, target, lambda a: partial.get(a, a), name)
    raise CorrespondenceError(f"unknown extension policy {extension!r}")


# -- terms and generated subalgebras ---------------------------------------

@dataclass(frozen=True)
class Term:
    op: str
    args: tuple["Term", ...] = ()
    name: str | None = None

    def to_json(self) -> Any:
        if self.op == "seed":
            return {"seed": self.name}
        return {"op": self.op, "args": [a.to_json() for a in self.args]}

    def evaluate(self, values: Mapping[str, int], full: int) -> int:
        if self.op == "seed":
            return values[self.name]
        vals = [a.evaluate(values, full) for a in self.args]
        if self.op == "oplus":
            out = 0
            for v in vals:
                out |= v
            return out
        if self.op == "odot":
            out = full
            for v in vals:
                out &= v
            return out
        if self.op == "comp":
            return full & ~vals[0]
        raise CorrespondenceError(f"unknown term operation {self.op!r}")

    def seeds(self) -> set[str]:
        if self.op == "seed":
            return {self.name}
        return set().union(*(a.seeds() for a in self.args)) if self.args else set()


EMPTY_UNION = Term("oplus", ())


def generated_subalgebra(target: Rys, seeds: Iterable[tuple[str, int]],
                         ops: Iterable[str] = ("oplus", "odot")) -> dict[int, Term]:
    """Least superset of ``seeds`` closed under ``ops``, with one derivation each."""
    ops = set(ops)
    if ops - set(OPS):
        raise CorrespondenceError(f"unknown operations {sorted(ops - set(OPS))}")
    full = target.top
    terms: dict[int, Term] = {}
    for name, mask in seeds:
        terms.setdefault(mask, Term("seed", name=name))
    frontier = list(terms)
    while frontier:
        known = list(terms)
        new: list[int] = []

        def add(value: int, term: Term) -> None:
            if value not in terms:
                terms[value] = term
                new.append(value)

        for a in frontier:
            if "comp" in ops:
                add(full & ~a, Term("comp", (terms[a],)))
            for b in known:
                if "oplus" in ops:
                    add(a | b, Term("oplus", (terms[a], terms[b])))
                if "odot" in ops:
                    add(a & b, Term("odot", (terms[a], terms[b])))
        frontier = new
    return terms


@lru_cache(maxsize=200_000)
def closure_masks(seeds: frozenset[int], ops: frozenset[str], full: int) -> frozenset[int]:
    """Mask-only version of :func:`generated_subalgebra` for sweeps."""
    out = set(seeds)
    frontier = list(out)
    while frontier:
        known = list(out)
        new = []
        for a in frontier:
            cands = []
            if "comp" in ops:
                cands.append(full & ~a)
            for b in known:
                if "oplus" in ops:
                    cands.append(a | b)
                if "odot" in ops:
                    cands.append(a & b)
            for c in cands:
                if c not in out:
                    out.add(c)
                    new.append(c)
        frontier = new
    return frozenset(out)


def target_ops(target: Rys) -> tuple[str, ...]:
    return ("oplus", "odot", "comp") if target.complement else ("oplus", "odot")


# -- seeds -----------------------------------------------------------------

def seeds_for(phi: Correspondence, x: str):
    """Target granules generated by the image of ``{x}``."""
    img = phi.singleton(x)
    g2 = phi.target.granulation
    if g2.style == "successor-neighborhood":
        names = set(phi.target.universe.names_of(img))
        return tuple(g for g in g2.granules if g.generator in names)
    return tuple(g for g in g2.granules if g.mask & img)


def granule_seed_families(phi: Correspondence, granule) -> list[tuple[str, tuple]]:
    """``(generator, seeds)`` pairs a source granule's image must be generated by.

    A neighborhood has its one generator.  A class or block is generated by
    each of its members, so every member's seeds must suffice on their own.
    """
    if granule.generator is not None:
        return [(granule.generator, seeds_for(phi, granule.generator))]
    return [(x, seeds_for(phi, x)) for x in phi.source.universe.names_of(granule.mask)]


# -- classification ----------------------------------------------------------

@dataclass
class ClassificationCertificate:
    injective: bool
    injective_on_granules: bool
    granule_images_term_representable: bool
    seeds_singleton_generated: bool
    is_oplus_morphism: bool
    is_odot_morphism: bool
    smooth: bool
    partition_case: str | None = None
    block_case: str | None = None
    witnesses: dict[str, Any] = field(default_factory=dict)

    @property
    def is_PON(self) -> bool:
        return self.granule_images_term_representable

    @property
    def is_PNC(self) -> bool:
        return self.is_PON and self.injective_on_granules

    @property
    def is_SNC(self) -> bool:
        return self.injective and self.granule_images_term_representable and self.seeds_singleton_generated

    @property
    def is_morphism(self) -> bool:
        return self.is_oplus_morphism and self.is_odot_morphism

    @property
    def is_closed_morphism(self) -> bool:
        # Total operations: definedness is preserved in both directions.
        return self.is_morphism

    def to_json(self) -> dict[str, Any]:
        return {
            "injective": self.injective,
            "injective_on_granules": self.injective_on_granules,
            "granule_images_term_representable": self.granule_images_term_representable,
            "seeds_singleton_generated": self.seeds_singleton_generated,
            "is_PON": self.is_PON,
            "is_PNC": self.is_PNC,
            "is_SNC": self.is_SNC,
            "is_oplus_morphism": self.is_oplus_morphism,
            "is_odot_morphism": self.is_odot_morphism,
            "is_morphism": self.is_morphism,
            "is_closed_morphism": self.is_closed_morphism,
            "smooth": self.smooth,
            "partition_case": self.partition_case,
            "block_case": self.block_case,
            "witnesses": self.witnesses,
        }


def _distinct_granules(rys: Rys):
    seen = {}
    for g in rys.granulation.granules:
        seen.setdefault(g.mask, g)
    return list(seen.values())


def _pair_order(rys: Rys) -> Iterator[tuple[int, int]]:
    """Granule pairs first, then every carrier pair; fixed and reproducible."""
    gm = [g.mask for g in _distinct_granules(rys)]
    seen = set()
    for a, b in itertools.chain(itertools.product(gm, gm), itertools.product(rys.carrier, rys.carrier)):
        if (a, b) not in seen:
            seen.add((a, b))
            yield a, b


def preservation_failure(phi: Correspondence, op: str) -> tuple[int, int] | None:
    src, tgt = phi.source, phi.target
    fs = src.oplus if op == "oplus" else src.odot
    ft = tgt.oplus if op == "oplus" else tgt.odot
    for a, b in _pair_order(src):
        if phi(fs(a, b)) != ft(phi(a), phi(b)):
            return a, b
    return None


def is_oplus_morphism(phi: Correspondence) -> bool:
    return preservation_failure(phi, "oplus") is None


def is_morphism(phi: Correspondence) -> bool:
    return preservation_failure(phi, "oplus") is None and preservation_failure(phi, "odot") is None


def is_smooth(phi: Correspondence) -> bool:
    return _smooth_failure(phi) is None


def _smooth_failure(phi: Correspondence) -> int | None:
    tgt = phi.target
    for a in phi.source.definite("lu"):
        v = phi(a)
        if not any(tgt.is_definite(v, "lu", i) for i in range(tgt.n_approx)):
            return a
    return None


def _closure_term(target: Rys, seeds, value: int) -> Term | None:
    terms = generated_subalgebra(target, [(g.name, g.mask) for g in seeds], target_ops(target))
    return terms.get(value)


def _representable(target: Rys, seeds, value: int) -> bool:
    return value in closure_masks(frozenset(g.mask for g in seeds), frozenset(target_ops(target)), target.top)


def classify(phi: Correspondence, *, fast: bool = False, block_variant: str = "verbatim") -> ClassificationCertificate:
    """Compute every certificate field.

    ``fast`` skips witness derivations and is meant for exhaustive sweeps.
    """
    src, tgt = phi.source, phi.target
    w: dict[str, Any] = {}

    seen: dict[int, int] = {}
    injective = True
    for a, v in phi.items():
        if v in seen:
            injective = False
            w["injective"] = {"collision": [src.names(seen[v]), src.names(a)], "image": tgt.names(v)}
            break
        seen[v] = a

    granules = _distinct_granules(src)
    images: dict[int, Any] = {}
    inj_g = True
    for g in granules:
        v = phi(g.mask)
        if v in images:
            inj_g = False
            w["injective_on_granules"] = {"collision": [images[v].name, g.name], "image": tgt.names(v)}
            break
        images[v] = g

    all_target = _distinct_granules(tgt)
    representable = True
    generated = True
    rep_terms, seed_terms = {}, {}
    for g in src.granulation.granules:
        v = phi(g.mask)
        if representable:
            if fast:
                ok = _representable(tgt, all_target, v)
            else:
                term = _closure_term(tgt, all_target, v)
                ok = term is not None
                if ok:
                    rep_terms[g.name] = term.to_json()
            if not ok:
                representable = False
                w["granule_images_term_representable"] = {"granule": g.name, "image": tgt.names(v)}
        if generated:
            for x, seeds in granule_seed_families(phi, g):
                if fast:
                    ok = _representable(tgt, seeds, v)
                else:
                    term = _closure_term(tgt, seeds, v)
                    ok = term is not None
                    if ok:
                        seed_terms.setdefault(g.name, []).append(
                            {"generator": x, "seeds": [s.name for s in seeds], "term": term.to_json()})
                if not ok:
                    generated = False
                    w["seeds_singleton_generated"] = {
                        "granule": g.name, "generator": x, "image": tgt.names(v),
                        "seeds": [s.name for s in seeds]}
                    break
    if representable and not fast:
        w["terms"] = rep_terms
    if generated and not fast:
        w["seed_terms"] = seed_terms

    morph = {}
    for op in ("oplus", "odot"):
        fail = preservation_failure(phi, op)
        morph[op] = fail is None
        if fail is not None:
            a, b = fail
            f = src.oplus if op == "oplus" else src.odot
            ft = tgt.oplus if op == "oplus" else tgt.odot
            w[f"{op}_morphism"] = {
                "pair": [_granule_label(src, a), _granule_label(src, b)],
                "combined": _granule_label(src, f(a, b)),
                "image_of_combined": tgt.names(phi(f(a, b))),
                "combined_images": tgt.names(ft(phi(a), phi(b))),
            }
    bad = _smooth_failure(phi)
    if bad is not None:
        w["smooth"] = {"definite": src.names(bad), "image": tgt.names(phi(bad))}

    cert = ClassificationCertificate(injective, inj_g, representable, generated,
                                     morph["oplus"], morph["odot"], bad is None, witnesses=w)
    s1, s2 = src.granulation.style, tgt.granulation.style
    if cert.is_SNC and s1 == "partition" and s2 == "partition":
        cert.partition_case = partition_case(phi, check=False)
    if cert.is_SNC and s1 == "partition" and s2 == "block":
        cert.block_case = block_case(phi, variant=block_variant, check=False)
    return cert


def _granule_label(rys: Rys, mask: int) -> str | list[str]:
    for g in rys.granulation.granules:
        if g.mask == mask:
            return g.name
    return rys.names(mask)


# -- canonical cases ---------------------------------------------------------

def _class_of(rys: Rys, x: str) -> int:
    bit = 1 << rys.universe.index(x)
    for m in rys.granule_masks:
        if m & bit:
            return m
    raise CorrespondenceError(f"{x} lies in no granule")


def _require(phi: Correspondence, s1: str, s2: str, check: bool) -> None:
    if phi.source.granulation.style != s1 or phi.target.granulation.style != s2:
        raise CorrespondenceError(f"case analysis needs a {s1} source and a {s2} target")
    if check and not classify(phi, fast=True).is_SNC:
        raise CorrespondenceError("case analysis needs a sub-natural correspondence")


def partition_case_matches(phi: Correspondence) -> list[str]:
    """Every label among B1..B4 whose identity holds for all singletons."""
    src, tgt = phi.source, phi.target
    full = tgt.top
    cls = lambda a: upper_mask(tgt.granule_masks, a)  # noqa: E731 - union of classes meeting a
    ok = {"B1": True, "B2": tgt.complement, "B3": True, "B4": tgt.complement}
    for x in src.universe:
        cx = _class_of(src, x)
        v = phi(cx)
        b1 = cls(phi.singleton(x))
        b3 = 0
        for y in src.universe.names_of(cx):
            b3 |= cls(phi.singleton(y))
        ok["B1"] &= v == b1
        ok["B2"] &= v == full & ~b1
        ok["B3"] &= v == b3
        ok["B4"] &= v == full & ~b3
    return [k for k in ("B1", "B2", "B3", "B4") if ok[k]]


def partition_case(phi: Correspondence, check: bool = True) -> str | None:
    _require(phi, "partition", "partition", check)
    matches = partition_case_matches(phi)
    return matches[0] if matches else None


def _beta(tgt: Rys, a: int) -> list[int]:
    return [m for m in tgt.granulation.distinct_masks if m & a]


def _cup(ms: list[int]) -> int:
    out = 0
    for m in ms:
        out |= m
    return out


def _cap(ms: list[int], full: int) -> int:
    out = full
    for m in ms:
        out &= m
    return out


def block_case_matches(phi: Correspondence, variant: str = "verbatim") -> list[str]:
    """Labels among C1..C8 holding for all singletons.

    ``verbatim`` uses the image of ``{x}`` inside the iterated unions and
    intersections exactly as printed; ``per-element`` uses ``{y}``.
    """
    if variant not in ("verbatim", "per-element"):
        raise CorrespondenceError(f"unknown block-case variant {variant!r}")
    src, tgt = phi.source, phi.target
    full = tgt.top
    neg = lambda a: full & ~a  # noqa: E731
    comp = tgt.complement
    ok = {f"C{k}": (comp if k % 2 == 0 else True) for k in range(1, 9)}
    for x in src.universe:
        cx = _class_of(src, x)
        v = phi(cx)
        bx = _beta(tgt, phi.singleton(x))
        cup_x, cap_x = _cup(bx), _cap(bx, full)
        ys = src.universe.names_of(cx)
        inner = (lambda y: _beta(tgt, phi.singleton(x))) if variant == "verbatim" else \
            (lambda y: _beta(tgt, phi.singleton(y)))
        big_cup = _cup([_cup(inner(y)) for y in ys])
        big_cap = _cap([_cup(inner(y)) for y in ys], full)
        big_cup_cap = _cup([_cap(inner(y), full) for y in ys])
        ok["C1"] &= v == cup_x
        ok["C2"] &= v == neg(cup_x)
        ok["C3"] &= v == cap_x
        ok["C4"] &= v == neg(cap_x)
        ok["C5"] &= v == big_cup
        ok["C6"] &= v == neg(big_cup)
        ok["C7"] &= v == big_cap
        ok["C8"] &= v == neg(big_cup_cap)
    return [k for k in ok if ok[k]]


def block_case(phi: Correspondence, variant: str = "verbatim", check: bool = True) -> str | None:
    _require(phi, "partition", "block", check)
    matches = block_case_matches(phi, variant)
    return matches[0] if matches else None


# -- approximations, representability, measures -------------------------------

@dataclass(frozen=True)
class InclusionReport:
    index: int
    lower_inclusion: bool
    upper_inclusion: bool
    pointwise_equal: bool
    equality: bool
    counterexample: dict[str, Any] | None = None


def approx_inclusion_report(phi: Correspondence) -> list[InclusionReport]:
    """Compare images of approximations with approximations of images."""
    src, tgt = phi.source, phi.target
    if src.granulation.style != "partition":
        raise CorrespondenceError("source must be classical")
    if tgt.granulation.style not in ("successor-neighborhood", "block"):
        raise CorrespondenceError("target must be a tolerance RYS")
    bounds = phi(0) == 0 and phi(src.top) == tgt.top and is_morphism(phi)
    out = []
    for i in range(tgt.n_approx):
        lo = up = eq = True
        cex = None
        for a in src.carrier:
            fl, fu = phi(src.lower(a)), phi(src.upper(a))
            tl, tu = tgt.lower(phi(a), i), tgt.upper(phi(a), i)
            if fl & ~tl:
                lo = False
                cex = cex or {"x": src.names(a), "failed": "lower"}
            if fu & ~tu:
                up = False
                cex = cex or {"x": src.names(a), "failed": "upper"}
            eq &= fl == tl and fu == tu
        out.append(InclusionReport(i, lo, up, eq, eq and bounds, cex))
    return out


@dataclass(frozen=True)
class RepresentabilityReport:
    ok: bool
    pure_unions: bool
    witnesses: dict[tuple[str, ...], Any]
    failures: list[tuple[str, ...]]


def _union_term(tgt: Rys, value: int) -> Term | None:
    parts = [g for g in _distinct_granules(tgt) if g.mask & ~value == 0]
    if _cup([g.mask for g in parts]) != value:
        return None
    if not parts:
        return EMPTY_UNION
    return Term("oplus", tuple(Term("seed", name=g.name) for g in parts))


def definite_representability(phi: Correspondence) -> RepresentabilityReport:
    """Whether each definite source element maps to a term over target granules."""
    src, tgt = phi.source, phi.target
    if src.granulation.style != "partition":
        raise CorrespondenceError("source must be classical")
    terms = generated_subalgebra(tgt, [(g.name, g.mask) for g in _distinct_granules(tgt)], target_ops(tgt))
    witnesses, failures = {}, []
    pure = True
    for b in src.definite("lu"):
        v = phi(b)
        key = tuple(src.names(b))
        u = _union_term(tgt, v)
        if u is not None:
            witnesses[key] = u.to_json()
            continue
        pure = False
        t = terms.get(v)
        if t is None:
            failures.append(key)
        else:
            witnesses[key] = t.to_json()
    return RepresentabilityReport(not failures, pure, witnesses, failures)


@dataclass(frozen=True)
class AlphaBeta:
    alpha: Fraction
    beta: Fraction | None
    beta_infinite: bool
    alpha_pair: tuple[int, int]
    beta_pair: tuple[int, int]


def alpha_beta_bounds(sigma: Correspondence) -> AlphaBeta:
    """Greatest α and least β with ``α k1(X,Y) <= k2(σX,σY) <= β k1(X,Y)``.

    An infinite β is reported when some pair has ``k1 = 0 < k2``.
    """
    src, tgt = sigma.source, sigma.target
    if src.granulation.style != "partition" or tgt.granulation.style != "partition":
        raise CorrespondenceError("α/β bounds need classical systems")
    if not is_oplus_morphism(sigma):
        raise CorrespondenceError("α/β bounds need a ⊕-morphism")
    alpha = beta = None
    apair = bpair = (0, 0)
    inf_pair = None
    for x in src.carrier:
        for y in src.carrier:
            k1 = k_mask(x, y)
            k2 = k_mask(sigma(x), sigma(y))
            if k1 == 0:
                if k2 > 0 and inf_pair is None:
                    inf_pair = (x, y)
                continue
            r = k2 / k1
            if alpha is None or r < alpha:
                alpha, apair = r, (x, y)
            if beta is None or r > beta:
                beta, bpair = r, (x, y)
    if inf_pair is not None:
        return AlphaBeta(alpha, None, True, apair, inf_pair)
    return AlphaBeta(alpha, beta, False, apair, bpair)


# -- families and pointwise algebra -------------------------------------------

FAMILIES: dict[str, Callable[[ClassificationCertificate], bool]] = {
    "SNC": lambda c: c.is_SNC,
    "SNC_s": lambda c: c.is_SNC and c.smooth,
    "SM": lambda c: c.is_SNC and c.is_oplus_morphism,
    "SM_s": lambda c: c.is_SNC and c.smooth and c.is_oplus_morphism,
    "PNC": lambda c: c.is_PNC,
    "PNC_s": lambda c: c.is_PNC and c.smooth,
    "PNM": lambda c: c.is_PNC and c.is_oplus_morphism,
    "PNM_s": lambda c: c.is_PNC and c.smooth and c.is_oplus_morphism,
    "POC": lambda c: c.is_PON,
    "POC_s": lambda c: c.is_PON and c.smooth,
    "POM": lambda c: c.is_PON and c.is_oplus_morphism,
    "POM_s": lambda c: c.is_PON and c.smooth and c.is_oplus_morphism,
}
POC_FAMILIES = ("POC", "POC_s", "POM", "POM_s")


def in_family(phi: Correspondence, family: str) -> bool:
    if family not in FAMILIES:
        raise CorrespondenceError(f"unknown family {family!r}")
    return FAMILIES[family](classify(phi, fast=True))


@dataclass(frozen=True)
class OpOutcome:
    value: Correspondence | None
    member: bool

    @property
    def defined(self) -> bool:
        return self.value is not None


def leq(f: Correspondence, g: Correspondence) -> bool:
    """Pointwise target parthood."""
    return all(f.target.leq(a, b) for a, b in zip(f.table, g.table))


def pointwise_ops(family: str, f: Correspondence, g: Correspondence) -> dict[str, OpOutcome]:
    """``f⊕g, f⊙g, ∼f, f^l, f^u`` inside ``family``.

    Results outside a general family are undefined.  In the proto-natural
    families they are always constructed; ``member`` records whether the
    result was re-verified as a member.
    """
    if f.source != g.source or f.target != g.target:
        raise CorrespondenceError("pointwise operations need a shared source and target")
    tgt = f.target
    candidates = {
        "oplus": [tgt.oplus(a, b) for a, b in zip(f.table, g.table)],
        "odot": [tgt.odot(a, b) for a, b in zip(f.table, g.table)],
        "lower": [tgt.lower(a) for a in f.table],
        "upper": [tgt.upper(a) for a in f.table],
    }
    if tgt.complement:
        candidates["comp"] = [tgt.comp(a) for a in f.table]
    out = {}
    unconditional = family in POC_FAMILIES
    for op, table in candidates.items():
        h = Correspondence(f.source, tgt, tuple(table), f"{f.name}.{op}")
        member = in_family(h, family)
        out[op] = OpOutcome(h if (member or unconditional) else None, member)
    return out


# -- enumeration helpers -------------------------------------------------------

def all_oplus_morphisms(source: Rys, target: Rys) -> Iterator[Correspondence]:
    """Every ⊕-morphism between powerset systems, via its values on ∅ and singletons."""
    n = source.universe.size
    for base in target.carrier:
        supers = [m for m in target.carrier if m & base == base]
        for s in itertools.product(supers, repeat=n):
            yield union_extension(source, target, list(s), base)


def _morphism_from_owner(source: Rys, target: Rys, base: int, owner: Iterable[int]) -> Correspondence:
    # owner[k] is the source index claiming target bit k, or -1
    s = [0] * source.universe.size
    for k, i in enumerate(owner):
        if i >= 0:
            s[i] |= 1 << k
    return union_extension(source, target, s, base)


def all_morphisms(source: Rys, target: Rys) -> Iterator[Correspondence]:
    """Every map between powerset systems preserving both ⊕ and ⊙.

    These are ``A -> base | U{t(x) : x in A}`` with the ``t(x)`` pairwise
    disjoint and disjoint from ``base``.
    """
    n, m = source.universe.size, target.universe.size
    for base in target.carrier:
        free = [k for k in range(m) if not base >> k & 1]
        for choice in itertools.product(range(-1, n), repeat=len(free)):
            owner = [-1] * m
            for k, i in zip(free, choice):
                owner[k] = i
            yield _morphism_from_owner(source, target, base, owner)


def random_morphism(source: Rys, target: Rys, rng) -> Correspondence:
    """A ⊕/⊙-morphism drawn with ``rng`` (a :class:`random.Random`)."""
    n, m = source.universe.size, target.universe.size
    base = rng.randrange(1 << m)
    owner = [-1 if base >> k & 1 else rng.randrange(-1, n) for k in range(m)]
    return _morphism_from_owner(source, target, base, owner)


def random_oplus_morphism(source: Rys, target: Rys, rng) -> Correspondence:
    base = rng.randrange(1 << target.universe.size)
    s = [rng.randrange(1 << target.universe.size) | base for _ in source.universe]
    return union_extension(source, target, s, base)
