"""Bigness (relevance) predicates, their axioms and the rough growth relation."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator, Sequence

from granrough.correspondence import Correspondence
from granrough.orders import bits, upsets
from granrough.rys import Rys

AXIOMS = ("B1", "B2", "B3", "BC1", "BC2", "BC3", "BC4", "BC5", "BC6")
DELTAS = ("D1", "D2", "D3", "D4", "D5")
_DELTA_ALIASES = {f"Δ{k}": f"D{k}" for k in range(1, 6)} | {f"delta{k}": f"D{k}" for k in range(1, 6)}


class BignessError(ValueError):
    pass


def normalize_delta(variant: str) -> str:
    v = _DELTA_ALIASES.get(variant, variant)
    if v not in DELTAS:
        raise BignessError(f"unknown Δ variant {variant!r}")
    return v


@dataclass(frozen=True)
class FiniteStructure:
    """A finite carrier with parthood and optional l, u, ⊕, ⊙ tables, all by position.

    ``leq[i]`` is the bitmask of positions j with ``P i j``.  Parthood need
    not be reflexive or transitive, which lets the B-axioms be studied apart
    from set models.
    """

    labels: tuple[str, ...]
    leq: tuple[int, ...]
    lower: tuple[int, ...] | None = None
    upper: tuple[int, ...] | None = None
    oplus: tuple[tuple[int, ...], ...] | None = None
    odot: tuple[tuple[int, ...], ...] | None = None

    @property
    def size(self) -> int:
        return len(self.labels)

    def P(self, i: int, j: int) -> bool:
        return bool(self.leq[i] >> j & 1)

    @property
    def reflexive(self) -> bool:
        return all(self.P(i, i) for i in range(self.size))

    @property
    def transitive(self) -> bool:
        n = self.size
        return all(not (self.P(i, j) and self.P(j, k)) or self.P(i, k)
                   for i in range(n) for j in range(n) for k in range(n))

    def definite(self, variant: str) -> list[int]:
        out = []
        for i in range(self.size):
            if variant in ("l", "lu") and self.lower[i] != i:
                continue
            if variant in ("u", "lu") and self.upper[i] != i:
                continue
            out.append(i)
        return out


def structure_of(rys: Rys, i: int = 0) -> FiniteStructure:
    """Positions follow the carrier order; approximations use pair ``i``."""
    car = rys.carrier
    pos = {a: k for k, a in enumerate(car)}
    leq = tuple(sum(1 << pos[b] for b in car if rys.leq(a, b)) for a in car)
    lab = tuple("{" + ",".join(rys.names(a)) + "}" for a in car)
    lower = tuple(pos[rys.lower(a, i)] for a in car)
    upper = tuple(pos[rys.upper(a, i)] for a in car)
    oplus = tuple(tuple(pos[rys.oplus(a, b)] for b in car) for a in car)
    odot = tuple(tuple(pos[rys.odot(a, b)] for b in car) for a in car)
    return FiniteStructure(lab, leq, lower, upper, oplus, odot)


@dataclass(frozen=True)
class BignessPredicate:
    structure: FiniteStructure
    extension: int
    origin: str = "extensional"
    x0: int | None = None
    variant: str | None = None

    def __call__(self, i: int) -> bool:
        return bool(self.extension >> i & 1)

    @property
    def members(self) -> list[int]:
        return list(bits(self.extension))

    def labels(self) -> list[str]:
        return [self.structure.labels[i] for i in self.members]


def extensional(structure: FiniteStructure, members: Iterable[int]) -> BignessPredicate:
    ext = 0
    for i in members:
        if not 0 <= i < structure.size:
            raise BignessError(f"position {i} is outside the carrier")
        ext |= 1 << i
    return BignessPredicate(structure, ext)


def upset_predicate(structure: FiniteStructure, x0: int) -> BignessPredicate:
    return BignessPredicate(structure, structure.leq[x0], "upset", x0)


def _delta_side(s: FiniteStructure, variant: str) -> str | None:
    return {"D3": "l", "D4": "lu", "D5": "u"}.get(variant)


def delta_extension(s: FiniteStructure, x0: int, variant: str) -> int:
    variant = normalize_delta(variant)
    side = _delta_side(s, variant)
    if side is not None and x0 not in s.definite(side):
        raise BignessError(f"{variant} needs x0 in the δ_{side} definite elements")
    ext = 0
    for x in range(s.size):
        xl = s.lower[x]
        if variant == "D1":
            ok = all(s.P(y, xl) for y in range(s.size) if s.P(x0, y))
        elif variant == "D2":
            ok = s.P(x0, x) and s.P(s.lower[x0], xl)
        else:
            ok = s.P(x0, xl)
        if ok:
            ext |= 1 << x
    return ext


def delta_predicate(structure: FiniteStructure | Rys, x0: int, variant: str) -> BignessPredicate:
    """The Δ-defined predicate anchored at position ``x0``."""
    s = structure_of(structure) if isinstance(structure, Rys) else structure
    if not 0 <= x0 < s.size:
        raise BignessError("x0 is outside the carrier")
    v = normalize_delta(variant)
    return BignessPredicate(s, delta_extension(s, x0, v), "delta", x0, v)


# -- axioms ---------------------------------------------------------------------

def _need(s: FiniteStructure, *tables: str) -> None:
    for t in tables:
        if getattr(s, t) is None:
            raise BignessError(f"this axiom needs the {t} table")


def axiom_failure(s: FiniteStructure, ext: int, axiom: str) -> tuple[int, ...] | None:
    """First counterexample tuple (positions) for ``axiom``, or None when it holds."""
    B = lambda i: ext >> i & 1  # noqa: E731
    n = range(s.size)
    mem = list(bits(ext))
    if axiom == "B1":
        for a in mem:
            miss = s.leq[a] & ~ext
            if miss:
                return (next(bits(miss)), a)  # (x, a)
        return None
    if axiom == "B2":
        _need(s, "upper")
        return next(((x,) for x in mem if not B(s.upper[x])), None)
    if axiom == "B3":
        for x in mem:
            for a in bits(s.leq[x]):
                miss = s.leq[a] & ~ext
                if miss:
                    return (x, a, next(bits(miss)))
        return None
    if axiom in ("BC1", "BC4"):
        op = s.oplus if axiom == "BC1" else s.odot
        _need(s, "oplus" if axiom == "BC1" else "odot")
        return next(((a, b) for a in mem for b in mem if not B(op[a][b])), None)
    if axiom == "BC2":
        _need(s, "oplus")
        return next(((a, b) for a in mem for b in n if B(s.oplus[a][b]) and not B(b)), None)
    if axiom == "BC3":
        _need(s, "oplus")
        return next(((a,) for a in mem if not B(s.oplus[a][a])), None)
    if axiom == "BC5":
        _need(s, "oplus")
        return next(((a,) for a in n if B(s.oplus[a][a]) and not B(a)), None)
    if axiom == "BC6":
        _need(s, "odot")
        for b in mem:
            if not any(s.P(a, b) for a in n):
                continue
            a = next(a for a in n if s.P(a, b))
            for c in bits(s.leq[b]):
                if not B(s.odot[b][c]):
                    return (a, b, c)
        return None
    raise BignessError(f"unknown bigness axiom {axiom!r}")


def delta_definable(pred: BignessPredicate, variant: str) -> int | None:
    """An anchor x0 whose Δ-predicate equals ``pred``, or None."""
    s = pred.structure
    v = normalize_delta(variant)
    side = _delta_side(s, v)
    cands = s.definite(side) if side else range(s.size)
    return next((x0 for x0 in cands if delta_extension(s, x0, v) == pred.extension), None)


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    holds: bool
    counterexample: tuple[int, ...] | None = None
    anchor: int | None = None

    def to_json(self, s: FiniteStructure | None = None) -> dict[str, Any]:
        name = lambda i: s.labels[i] if s is not None else i  # noqa: E731
        out: dict[str, Any] = {"axiom": self.axiom, "holds": self.holds}
        if self.counterexample is not None:
            out["counterexample"] = [name(i) for i in self.counterexample]
        if self.anchor is not None:
            out["x0"] = name(self.anchor)
        return out


def check_bigness_axiom(pred: BignessPredicate, axiom: str) -> AxiomReport:
    if axiom in DELTAS or axiom in _DELTA_ALIASES:
        x0 = delta_definable(pred, axiom)
        return AxiomReport(normalize_delta(axiom), x0 is not None, anchor=x0)
    bad = axiom_failure(pred.structure, pred.extension, axiom)
    return AxiomReport(axiom, bad is None, bad)


# -- predicate families and implications -------------------------------------------

def all_predicates(s: FiniteStructure, bound: int = 16) -> Iterator[int]:
    if s.size > bound:
        raise BignessError(f"{s.size} carrier elements exceed the enumeration bound {bound}")
    return iter(range(1 << s.size))


def upset_predicates(s: FiniteStructure) -> Iterator[int]:
    """Every P-upward closed predicate, i.e. every B1-satisfier when P is a preorder."""
    return upsets(s.leq)


@dataclass(frozen=True)
class Implication:
    premise: str
    conclusion: str
    tested: int
    counterexample: int | None = None

    @property
    def holds(self) -> bool:
        return self.counterexample is None


def implication_matrix(s: FiniteStructure, family: Iterable[int],
                       axioms: Sequence[str] = ("B1", "B2", "B3")) -> dict[tuple[str, str], Implication]:
    """For each ordered axiom pair, a family member satisfying one but not the other."""
    family = list(family)
    sat = {a: [axiom_failure(s, e, a) is None for e in family] for a in axioms}
    out = {}
    for p, c in itertools.permutations(axioms, 2):
        tested = sum(sat[p])
        bad = next((e for e, sp, sc in zip(family, sat[p], sat[c]) if sp and not sc), None)
        out[(p, c)] = Implication(p, c, tested, bad)
    return out


def parthood_structures(n: int) -> Iterator[FiniteStructure]:
    """Every parthood relation on ``n`` bare points (no operation tables)."""
    labels = tuple(f"p{i}" for i in range(n))
    pairs = [(i, j) for i in range(n) for j in range(n)]
    for choice in range(1 << len(pairs)):
        leq = [0] * n
        for k, (i, j) in enumerate(pairs):
            if choice >> k & 1:
                leq[i] |= 1 << j
        yield FiniteStructure(labels, tuple(leq))


@dataclass(frozen=True)
class ImplicationSearch:
    premise: str
    conclusion: str
    structures: int
    predicates: int
    counterexample: tuple[FiniteStructure, int] | None


def search_implication(premise: str, conclusion: str, structures: Iterable[FiniteStructure]) -> ImplicationSearch:
    """Look for a structure and predicate where ``premise`` holds and ``conclusion`` fails."""
    ns = npred = 0
    for s in structures:
        ns += 1
        for e in range(1 << s.size):
            npred += 1
            if axiom_failure(s, e, premise) is None and axiom_failure(s, e, conclusion) is not None:
                return ImplicationSearch(premise, conclusion, ns, npred, (s, e))
    return ImplicationSearch(premise, conclusion, ns, npred, None)


# -- rough growth ---------------------------------------------------------------------

@dataclass(frozen=True)
class GrowthVerdict:
    holds: bool
    witness: tuple[int, int] | None = None  # (x, y) carrier elements


def rough_growth(f: Correspondence, g: Correspondence, big: Callable[[int], bool] | BignessPredicate,
                 i: int = 0) -> GrowthVerdict:
    """``Γ f g``: above every big x inside y^l, g(y) sits between f(y)^l and f(y)^u.

    ``big`` is queried on source carrier elements; a BignessPredicate built by
    :func:`structure_of` on the source is accepted directly.
    """
    if f.source != g.source or f.target != g.target:
        raise BignessError("Γ needs a shared source and target")
    src, tgt = f.source, f.target
    if isinstance(big, BignessPredicate):
        pos = {a: k for k, a in enumerate(src.carrier)}
        pred = big
        big = lambda a: pred(pos[a])  # noqa: E731
    bigs = [x for x in src.carrier if big(x)]
    for y in src.carrier:
        yl = src.lower(y, i)
        x = next((x for x in bigs if src.leq(x, yl)), None)
        if x is None:
            continue
        fy, gy = f(y), g(y)
        if not (tgt.leq(tgt.lower(fy, i), gy) and tgt.leq(gy, tgt.upper(fy, i))):
            return GrowthVerdict(False, (x, y))
    return GrowthVerdict(True)
