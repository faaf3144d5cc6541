"""Rough Y-systems over powerset carriers.

A :class:`Rys` is a set model: carrier elements are subsets (bit masks) of
a finite universe, parthood is inclusion, aggregation and commonality are
union and intersection.  Approximation operators are tabulated over the
whole powerset so they can be applied to any mask.

Granular axioms are data.  Each catalog entry is a small first-order
formula (nested dicts, JSON compatible) that :func:`evaluate_formula`
interprets over the granules, carrier and operator indices of a system.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Mapping

from granrough.core_space import (
    ApproximationSpace,
    Granulation,
    Universe,
    block_granulation,
    granulation_from_relation,
    lower_mask,
    upper_mask,
)

LOWER_TAG = "union-of-granules-contained"
UPPER_TAG = "union-of-granules-meeting"


class RysError(ValueError):
    pass


@dataclass(frozen=True)
class ApproxPair:
    """One indexed ``(l_i, u_i)`` pair, tabulated over every mask."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]
    lower_tag: str = LOWER_TAG
    upper_tag: str = UPPER_TAG

    @classmethod
    def from_granules(cls, granules, size: int) -> "ApproxPair":
        masks = tuple(granules)
        n = 1 << size
        return cls(
            tuple(lower_mask(masks, m) for m in range(n)),
            tuple(upper_mask(masks, m) for m in range(n)),
        )


@dataclass(frozen=True)
class Rys:
    universe: Universe
    granulation: Granulation
    approx: tuple[ApproxPair, ...]
    carrier: tuple[int, ...] | None = None
    complement: bool = True
    axioms: tuple[str, ...] | None = None
    name: str = "rys"
    space: ApproximationSpace | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.carrier is None:
            object.__setattr__(self, "carrier", tuple(range(1 << self.universe.size)))
        if self.axioms is None:
            object.__setattr__(self, "axioms", tuple(DEFAULT_CATALOG))
        object.__setattr__(self, "approx", tuple(self.approx))
        unknown = [a for a in self.axioms if a not in DEFAULT_CATALOG]
        if unknown:
            raise RysError(f"unknown axiom names {unknown}")

    # -- signature -----------------------------------------------------
    @property
    def top(self) -> int:
        return self.universe.full

    @property
    def bottom(self) -> int | None:
        return 0 if 0 in self.carrier_set else None

    @cached_property
    def carrier_set(self) -> frozenset[int]:
        return frozenset(self.carrier)

    @cached_property
    def is_powerset(self) -> bool:
        return self.carrier == tuple(range(1 << self.universe.size))

    @staticmethod
    def leq(a: int, b: int) -> bool:
        return a & ~b == 0

    @staticmethod
    def oplus(a: int, b: int) -> int:
        return a | b

    @staticmethod
    def odot(a: int, b: int) -> int:
        return a & b

    def comp(self, a: int) -> int:
        if not self.complement:
            raise RysError("complement is not part of this signature")
        return self.universe.full & ~a

    def lower(self, a: int, i: int = 0) -> int:
        return self.approx[i].lower[a]

    def upper(self, a: int, i: int = 0) -> int:
        return self.approx[i].upper[a]

    @property
    def n_approx(self) -> int:
        return len(self.approx)

    @cached_property
    def granule_masks(self) -> tuple[int, ...]:
        return self.granulation.masks

    def names(self, mask: int) -> list[str]:
        return list(self.universe.names_of(mask))

    def is_definite(self, a: int, variant: str = "lu", i: int = 0) -> bool:
        if variant in ("l", "lu") and self.lower(a, i) != a:
            return False
        if variant in ("u", "lu") and self.upper(a, i) != a:
            return False
        return True

    def definite(self, variant: str = "lu", i: int = 0) -> tuple[int, ...]:
        return tuple(a for a in self.carrier if self.is_definite(a, variant, i))

    def is_union_of_granules(self, a: int) -> bool:
        return lower_mask(self.granule_masks, a) == a

    def check_closure(self) -> list[tuple[str, int, int | None]]:
        """Operation applications that leave the carrier (empty when closed)."""
        bad = []
        cs = self.carrier_set
        for a in self.carrier:
            for i in range(self.n_approx):
                if self.lower(a, i) not in cs:
                    bad.append((f"l{i}", a, None))
                if self.upper(a, i) not in cs:
                    bad.append((f"u{i}", a, None))
            if self.complement and self.comp(a) not in cs:
                bad.append(("comp", a, None))
            for b in self.carrier:
                if a | b not in cs:
                    bad.append(("oplus", a, b))
                if a & b not in cs:
                    bad.append(("odot", a, b))
        return bad

    def with_axioms(self, names) -> "Rys":
        return Rys(self.universe, self.granulation, self.approx, self.carrier,
                   self.complement, tuple(names), self.name, self.space)


def _single_pair_rys(space: ApproximationSpace, g: Granulation, name: str) -> Rys:
    pair = ApproxPair.from_granules(g.masks, space.universe.size)
    return Rys(space.universe, g, (pair,), name=name, space=space)


def build_classical_rys(space: ApproximationSpace, name: str = "classical") -> Rys:
    if space.kind != "equivalence":
        raise RysError("classical RYS requires an equivalence relation")
    return _single_pair_rys(space, granulation_from_relation(space.relation), name)


def build_tolerance_rys(space: ApproximationSpace, approx_style: str = "neighborhood",
                        name: str | None = None) -> Rys:
    """Tolerance RYS from successor neighborhoods or from blocks (maximal cliques)."""
    if space.kind != "tolerance":
        raise RysError("tolerance RYS requires a tolerance relation")
    if approx_style == "neighborhood":
        g = granulation_from_relation(space.relation)
    elif approx_style == "block":
        g = block_granulation(space.relation)
    else:
        raise RysError(f"unknown approximation style {approx_style!r}")
    return _single_pair_rys(space, g, name or f"tolerance-{approx_style}")


def as_tolerance_space(space: ApproximationSpace) -> ApproximationSpace:
    """View an equivalence space as a tolerance space (same pairs)."""
    return ApproximationSpace(space.universe, space.relation.with_kind("tolerance"))


# -- atoms and coatoms ---------------------------------------------------

@dataclass(frozen=True)
class AtomStructure:
    atoms: tuple[int, ...]
    coatoms: tuple[int, ...]
    x_a: tuple[int, ...]
    x_c: tuple[int, ...]
    x_ac: tuple[int, ...]
    x_r: tuple[int, ...] | None = None


def atom_structure(rys: Rys, relevant=None) -> AtomStructure:
    """Atoms, coatoms and the derived carrier parts ``X_a``, ``X_c``, ``X_ac``."""
    carrier = rys.carrier
    leq = rys.leq
    for a in carrier:
        for b in carrier:
            if a != b and leq(a, b) and leq(b, a):
                raise RysError("parthood is not antisymmetric on the carrier")
    bottom = next((z for z in carrier if all(leq(z, x) for x in carrier)), None)
    top = next((t for t in carrier if all(leq(x, t) for x in carrier)), None)
    nonzero = [x for x in carrier if x != bottom]
    nontop = [x for x in carrier if x != top]
    atoms = tuple(x for x in nonzero if not any(y != x and leq(y, x) for y in nonzero))
    coatoms = tuple(x for x in nontop if not any(y != x and leq(x, y) for y in nontop))
    bounds = {b for b in (bottom, top) if b is not None}
    x_a = tuple(x for x in carrier if x not in atoms and x not in bounds)
    x_c = tuple(x for x in carrier if x not in coatoms and x not in bounds)
    x_ac = tuple(x for x in x_a if x not in coatoms)
    return AtomStructure(atoms, coatoms, x_a, x_c, x_ac,
                         tuple(relevant) if relevant is not None else None)


# -- axiom catalog ---------------------------------------------------------

def _all(var, dom, body):
    return {"forall": var, "in": dom, "do": body}


def _some(var, dom, body):
    return {"exists": var, "in": dom, "do": body}


def _granular(t):
    return {"eq": [t, {"granular_within": t}]}


@dataclass(frozen=True)
class AxiomSpec:
    name: str
    formula: Mapping[str, Any]
    doc: str


# Default bodies.  WRA, LFU, LS and RA follow the readings documented in
# the README; the remaining names are conservative conditions that hold on
# classical spaces and can be replaced through ``catalog`` arguments.
DEFAULT_CATALOG: dict[str, AxiomSpec] = {
    spec.name: spec
    for spec in [
        AxiomSpec("WRA", _all("g", "granules", _some("i", "indices", {"and": [
            {"eq": [{"l": "g", "i": "i"}, "g"]}, {"eq": [{"u": "g", "i": "i"}, "g"]}]})),
            "each granule is lu-definite for at least one operator pair"),
        AxiomSpec("LFU", _all("x", "carrier", _all("i", "indices", {
            "eq": [{"l": "x", "i": "i"}, {"granular_within": "x"}]})),
            "lower approximations are unions of granules contained in the argument"),
        AxiomSpec("LS", {"eq": [{"granular_meeting": {"const": "1"}}, {"const": "1"}]},
                  "the granulation covers the universe"),
        AxiomSpec("RA", _all("x", "carrier", _all("i", "indices", {"and": [
            _granular({"l": "x", "i": "i"}), _granular({"u": "x", "i": "i"})]})),
            "every approximation of every element is a union of granules"),
        AxiomSpec("ACG", _all("g", "granules", _all("i", "indices", {
            "eq": [{"l": "g", "i": "i"}, "g"]})),
            "granules are lower-crisp"),
        AxiomSpec("MER", _all("g", "granules", _all("x", "carrier", _all("i", "indices", {
            "implies": [{"and": [{"part": ["x", "g"]}, {"not": {"is_empty": "x"}},
                                 {"eq": [{"l": "x", "i": "i"}, "x"]},
                                 {"eq": [{"u": "x", "i": "i"}, "x"]}]},
                        {"eq": ["x", "g"]}]}))),
            "no nonempty definite element is a proper part of a granule"),
        AxiomSpec("FU", _all("g", "granules", _all("h", "granules", _all("i", "indices", {
            "eq": [{"l": {"oplus": ["g", "h"]}, "i": "i"}, {"oplus": ["g", "h"]}]}))),
            "aggregates of two granules are lower-crisp"),
        AxiomSpec("NO", _all("g", "granules", _all("h", "granules", {
            "implies": [{"overlap": ["g", "h"]}, {"eq": ["g", "h"]}]})),
            "distinct granules do not overlap"),
        AxiomSpec("PS", _all("g", "granules", _all("x", "carrier", _all("i", "indices", {
            "implies": [{"overlap": ["g", "x"]}, {"part": ["g", {"u": "x", "i": "i"}]}]}))),
            "a granule meeting x is part of every upper approximation of x"),
        AxiomSpec("ST", _all("g", "granules", _all("x", "carrier", _all("i", "indices", {
            "implies": [{"part": ["g", "x"]}, {"part": ["g", {"l": "x", "i": "i"}]}]}))),
            "a granule part of x is part of every lower approximation of x"),
        AxiomSpec("I", _all("x", "carrier", _all("i", "indices", {"and": [
            {"eq": [{"l": {"l": "x", "i": "i"}, "i": "i"}, {"l": "x", "i": "i"}]},
            {"eq": [{"u": {"u": "x", "i": "i"}, "i": "i"}, {"u": "x", "i": "i"}]}]})),
            "approximations are idempotent"),
    ]
}


class _Env(dict):
    """Variable bindings: name -> (domain, value)."""


def _term(rys: Rys, t, env: _Env) -> int:
    if isinstance(t, str):
        try:
            return env[t][1].mask if env[t][0] == "granules" else env[t][1]
        except KeyError:
            raise RysError(f"unbound variable {t!r}") from None
    if not isinstance(t, Mapping):
        raise RysError(f"malformed term {t!r}")
    if "const" in t:
        return {"0": 0, "1": rys.top}[t["const"]]
    if "l" in t or "u" in t:
        key = "l" if "l" in t else "u"
        idx = t.get("i", 0)
        i = env[idx][1] if isinstance(idx, str) else int(idx)
        a = _term(rys, t[key], env)
        return rys.lower(a, i) if key == "l" else rys.upper(a, i)
    if "oplus" in t:
        a, b = (_term(rys, s, env) for s in t["oplus"])
        return rys.oplus(a, b)
    if "odot" in t:
        a, b = (_term(rys, s, env) for s in t["odot"])
        return rys.odot(a, b)
    if "comp" in t:
        return rys.comp(_term(rys, t["comp"], env))
    if "granular_within" in t:
        return lower_mask(rys.granule_masks, _term(rys, t["granular_within"], env))
    if "granular_meeting" in t:
        return upper_mask(rys.granule_masks, _term(rys, t["granular_meeting"], env))
    raise RysError(f"malformed term {t!r}")


def _domain(rys: Rys, name: str):
    if name == "granules":
        return rys.granulation.granules
    if name == "carrier":
        return rys.carrier
    if name == "indices":
        return range(rys.n_approx)
    raise RysError(f"unknown domain {name!r}")


def evaluate_formula(rys: Rys, f, env: _Env | None = None) -> tuple[bool, _Env]:
    """Truth value of ``f`` plus the bindings that decided it.

    For a false universal the bindings are a counterexample; for a true
    existential they are a witness.
    """
    env = _Env() if env is None else env
    if "forall" in f or "exists" in f:
        universal = "forall" in f
        var = f["forall"] if universal else f["exists"]
        dom = f["in"]
        last = env
        for value in _domain(rys, dom):
            inner = _Env(env)
            inner[var] = (dom, value)
            ok, where = evaluate_formula(rys, f["do"], inner)
            last = where
            if universal and not ok:
                return False, where
            if not universal and ok:
                return True, where
        return universal, (env if universal else last)
    if "and" in f:
        for sub in f["and"]:
            ok, where = evaluate_formula(rys, sub, env)
            if not ok:
                return False, where
        return True, env
    if "or" in f:
        for sub in f["or"]:
            ok, where = evaluate_formula(rys, sub, env)
            if ok:
                return True, where
        return False, env
    if "not" in f:
        ok, where = evaluate_formula(rys, f["not"], env)
        return not ok, where
    if "implies" in f:
        a, b = f["implies"]
        ok, _ = evaluate_formula(rys, a, env)
        if not ok:
            return True, env
        return evaluate_formula(rys, b, env)
    if "eq" in f:
        a, b = (_term(rys, t, env) for t in f["eq"])
        return a == b, env
    if "part" in f:
        a, b = (_term(rys, t, env) for t in f["part"])
        return rys.leq(a, b), env
    if "overlap" in f:
        a, b = (_term(rys, t, env) for t in f["overlap"])
        return bool(a & b), env
    if "is_empty" in f:
        return _term(rys, f["is_empty"], env) == 0, env
    raise RysError(f"malformed formula {f!r}")


@dataclass(frozen=True)
class AxiomResult:
    name: str
    holds: bool
    counterexample: dict[str, Any] | None = None


def _describe(rys: Rys, env: _Env) -> dict[str, Any]:
    out = {}
    for var, (dom, value) in env.items():
        if dom == "granules":
            out[var] = {"granule": value.name, "members": rys.names(value.mask)}
        elif dom == "carrier":
            out[var] = rys.names(value)
        else:
            out[var] = value
    return out


def check_axiom(rys: Rys, name: str, catalog: Mapping[str, AxiomSpec] | None = None) -> AxiomResult:
    catalog = DEFAULT_CATALOG if catalog is None else catalog
    if name not in catalog:
        raise RysError(f"unknown axiom {name!r}")
    holds, env = evaluate_formula(rys, catalog[name].formula)
    return AxiomResult(name, holds, None if holds else _describe(rys, env))


def satisfied_axioms(rys: Rys, catalog=None) -> frozenset[str]:
    return frozenset(a for a in rys.axioms if check_axiom(rys, a, catalog).holds)


def admissible(rys: Rys, catalog=None) -> bool:
    """WRA, LFU and LS all hold."""
    return all(check_axiom(rys, a, catalog).holds for a in ("WRA", "LFU", "LS"))


def representation_tags(rys: Rys) -> tuple[tuple[str, str], ...]:
    return tuple((p.lower_tag, p.upper_tag) for p in rys.approx)


EVOLUTION_LABELS = ("SSE", "similar", "sub-similar", "psubmilar", "pseudo-similar", "none")


@dataclass(frozen=True)
class EvolutionVerdict:
    label: str
    granular_inclusion: bool
    admissibility: bool
    equi_representability: bool
    satisfied_x: frozenset[str]
    satisfied_y: frozenset[str]

    @property
    def relations(self) -> frozenset[str]:
        """Every (non-exclusive) evolution relation the pair stands in."""
        c1, c2, c3 = self.granular_inclusion, self.admissibility, self.equi_representability
        out = set()
        if c1 and c2 and c3:
            out.add("SSE")
        if c1 and c2:
            out.add("similar")
        if c1 and c3:
            out.add("sub-similar")
        if c1:
            out.add("psubmilar")
        if c2 and c3:
            out.add("pseudo-similar")
        return frozenset(out)


def _label(c1: bool, c2: bool, c3: bool) -> str:
    if c1 and c2 and c3:
        return "SSE"
    if c1 and c2:
        return "similar"
    if c1 and c3:
        return "sub-similar"
    if c2 and c3:
        return "pseudo-similar"
    if c1:
        return "psubmilar"
    return "none"


def classify_evolution(x: Rys, y: Rys, catalog=None) -> EvolutionVerdict:
    if set(x.axioms) != set(y.axioms):
        raise RysError("systems enable different axiom sets")
    ax, ay = satisfied_axioms(x, catalog), satisfied_axioms(y, catalog)
    c1 = ax <= ay
    c2 = admissible(x, catalog) and admissible(y, catalog)
    c3 = x.n_approx == y.n_approx and representation_tags(x) == representation_tags(y)
    return EvolutionVerdict(_label(c1, c2, c3), c1, c2, c3, ax, ay)
