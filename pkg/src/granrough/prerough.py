"""Pre-rough quotient algebras, their filters, pastes, products and OCPR systems."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Iterable, Iterator, Sequence

from granrough.core_space import ApproximationSpace, lower_mask, upper_mask
from granrough.orders import bits, upsets
from granrough.rys import Rys, build_classical_rys


class PreRoughError(ValueError):
    pass


@dataclass(frozen=True)
class RoughObject:
    lower: int
    upper: int
    representative: int

    def label(self, rys: Rys) -> str:
        return "({" + ",".join(rys.names(self.lower)) + "},{" + ",".join(rys.names(self.upper)) + "})"


def _lub(leq: Sequence[int], a: int, b: int) -> int | None:
    ub = leq[a] & leq[b]
    return next((u for u in bits(ub) if leq[u] & ub == ub), None)


def _glb(leq: Sequence[int], a: int, b: int) -> int | None:
    n = len(leq)
    lb = [x for x in range(n) if leq[x] >> a & 1 and leq[x] >> b & 1]
    return next((g for g in lb if all(leq[x] >> g & 1 for x in lb)), None)


@dataclass(frozen=True)
class PreRoughAlgebra:
    """A finite algebra ``<Q, ⊑, ⊔, ⊓, L, U, ¬, 0, 1>`` stored by position.

    ``leq[i]`` is the mask of j with ``i ⊑ j``.  Join and meet are the order's
    least upper and greatest lower bounds; ``None`` marks a missing bound.
    """

    labels: tuple[str, ...]
    leq: tuple[int, ...]
    L: tuple[int, ...]
    U: tuple[int, ...]
    neg: tuple[int, ...]
    objects: tuple[RoughObject, ...] | None = field(default=None, compare=False)
    name: str = "Q"

    @classmethod
    def from_order(cls, labels, leq, L, U, neg, objects=None, name="Q") -> "PreRoughAlgebra":
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise PreRoughError("element labels must be distinct")
        return cls(labels, tuple(leq), tuple(L), tuple(U), tuple(neg),
                   tuple(objects) if objects is not None else None, name)

    @property
    def size(self) -> int:
        return len(self.labels)

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a] >> b & 1)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    @property
    def bottom(self) -> int:
        return next(x for x in range(self.size) if self.leq[x] == self.full)

    @property
    def top(self) -> int:
        return next(x for x in range(self.size) if all(self.le(y, x) for y in range(self.size)))

    @property
    def join(self) -> tuple[tuple[int | None, ...], ...]:
        return _tables(self)[0]

    @property
    def meet(self) -> tuple[tuple[int | None, ...], ...]:
        return _tables(self)[1]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise PreRoughError(f"no element labelled {label!r}") from None

    def mask_of(self, labels: Iterable[str]) -> int:
        return sum(1 << self.index(x) for x in labels)

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits(mask)]

    def to_json(self) -> dict[str, Any]:
        n = range(self.size)
        return {
            "name": self.name,
            "elements": list(self.labels),
            "order": [[self.labels[a], self.labels[b]] for a in n for b in n if a != b and self.le(a, b)],
            "L": {self.labels[a]: self.labels[self.L[a]] for a in n},
            "U": {self.labels[a]: self.labels[self.U[a]] for a in n},
            "neg": {self.labels[a]: self.labels[self.neg[a]] for a in n},
        }


@lru_cache(maxsize=4096)
def _bound_tables(leq: tuple[int, ...]):
    n = range(len(leq))
    j = tuple(tuple(_lub(leq, a, b) for b in n) for a in n)
    m = tuple(tuple(_glb(leq, a, b) for b in n) for a in n)
    return j, m


def _tables(q: PreRoughAlgebra):
    return _bound_tables(q.leq)


def _leq_from(n: int, rel) -> tuple[int, ...]:
    return tuple(sum(1 << b for b in range(n) if rel(a, b)) for a in range(n))


# -- constructions ---------------------------------------------------------------

def quotient_by_rough_equality(space: ApproximationSpace | Rys) -> PreRoughAlgebra:
    """``℘(S)/≈``: distinct (lower, upper) pairs ordered componentwise."""
    rys = space if isinstance(space, Rys) else build_classical_rys(space)
    if rys.granulation.style != "partition":
        raise PreRoughError("the rough-equality quotient needs an equivalence space")
    g = rys.granule_masks
    full = rys.top
    objs: dict[tuple[int, int], RoughObject] = {}
    for a in range(1 << rys.universe.size):
        key = (lower_mask(g, a), upper_mask(g, a))
        objs.setdefault(key, RoughObject(key[0], key[1], a))
    objects = sorted(objs.values(), key=lambda o: (bin(o.lower).count("1") + bin(o.upper).count("1"),
                                                   o.lower, o.upper))
    pos = {(o.lower, o.upper): k for k, o in enumerate(objects)}
    n = len(objects)
    leq = _leq_from(n, lambda a, b: objects[a].lower & ~objects[b].lower == 0
                    and objects[a].upper & ~objects[b].upper == 0)
    L = [pos[(o.lower, o.lower)] for o in objects]
    U = [pos[(o.upper, o.upper)] for o in objects]
    neg = [pos[(full & ~o.upper, full & ~o.lower)] for o in objects]
    return PreRoughAlgebra.from_order([o.label(rys) for o in objects], leq, L, U, neg, objects,
                                      f"quotient({rys.name})")


def chain(n: int) -> PreRoughAlgebra:
    """The 2-element Boolean algebra or the 3-element pre-rough chain ``0 < a < 1``."""
    if n == 2:
        return PreRoughAlgebra.from_order(("0", "1"), (3, 2), (0, 1), (0, 1), (1, 0), name="chain2")
    if n == 3:
        leq = _leq_from(3, lambda a, b: a <= b)
        return PreRoughAlgebra.from_order(("0", "a", "1"), leq, (0, 0, 2), (0, 2, 2), (2, 1, 0),
                                          name="chain3")
    raise PreRoughError("only the 2- and 3-element chains are provided")


def _fresh(labels: Sequence[str], stem: str) -> str:
    k = 1
    while f"{stem}{k}" in labels:
        k += 1
    return f"{stem}{k}"


def paste(q: PreRoughAlgebra) -> PreRoughAlgebra:
    """Adjoin a pair of fresh middles ``p, q`` with ``¬p = q``, ``L = 0`` and ``U = 1``."""
    n = q.size
    p_lab, q_lab = _fresh(q.labels, "p"), _fresh(q.labels, "q")
    labels = q.labels + (p_lab, q_lab)
    bot, top = q.bottom, q.top
    p, r = n, n + 1

    def rel(a: int, b: int) -> bool:
        if a < n and b < n:
            return q.le(a, b)
        return a == b or a == bot or b == top

    leq = _leq_from(n + 2, rel)
    L = q.L + (bot, bot)
    U = q.U + (top, top)
    neg = q.neg + (r, p)
    return PreRoughAlgebra.from_order(labels, leq, L, U, neg, name=f"paste({q.name})")


def product(a: PreRoughAlgebra, b: PreRoughAlgebra) -> PreRoughAlgebra:
    pairs = list(itertools.product(range(a.size), range(b.size)))
    pos = {p: k for k, p in enumerate(pairs)}
    labels = [f"({a.labels[x]},{b.labels[y]})" for x, y in pairs]
    leq = _leq_from(len(pairs), lambda s, t: a.le(pairs[s][0], pairs[t][0]) and b.le(pairs[s][1], pairs[t][1]))
    L = [pos[(a.L[x], b.L[y])] for x, y in pairs]
    U = [pos[(a.U[x], b.U[y])] for x, y in pairs]
    neg = [pos[(a.neg[x], b.neg[y])] for x, y in pairs]
    return PreRoughAlgebra.from_order(labels, leq, L, U, neg, name=f"{a.name}x{b.name}")


# -- axiom checking ---------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    holds: bool
    witness: tuple[int, ...] | None = None


def _first(cands: Iterable[tuple[int, ...]], bad) -> Check:
    w = next((c for c in cands if bad(*c)), None)
    return Check(w is None, w)


PREROUGH_AXIOMS = ("lattice", "bounded", "L_deflationary", "LL", "L_meet", "L_join", "L1", "UL",
                   "neg_involution", "neg_antitone", "de_morgan", "U_dual", "rough_determination")


def check_prerough_axioms(q: PreRoughAlgebra) -> dict[str, Check]:
    """Every pre-rough law checked exhaustively, plus distributivity reported separately.

    Laws that use ⊔ or ⊓ are evaluated only where the bound exists; a missing
    bound already fails ``lattice``.
    """
    n = range(q.size)
    J, M = q.join, q.meet
    L, U, N = q.L, q.U, q.neg
    pairs = list(itertools.product(n, n))
    triples = list(itertools.product(n, n, n))
    top = q.top
    bot = q.bottom
    out = {
        "lattice": _first(pairs, lambda a, b: J[a][b] is None or M[a][b] is None),
        "bounded": Check(all(q.le(bot, x) and q.le(x, top) for x in n)),
        "L_deflationary": _first(((a,) for a in n), lambda a: not q.le(L[a], a)),
        "LL": _first(((a,) for a in n), lambda a: L[L[a]] != L[a]),
        "L_meet": _first(pairs, lambda a, b: M[a][b] is not None and M[L[a]][L[b]] is not None
                         and L[M[a][b]] != M[L[a]][L[b]]),
        "L_join": _first(pairs, lambda a, b: J[a][b] is not None and J[L[a]][L[b]] is not None
                         and L[J[a][b]] != J[L[a]][L[b]]),
        "L1": Check(L[top] == top),
        "UL": _first(((a,) for a in n), lambda a: U[L[a]] != L[a]),
        "neg_involution": _first(((a,) for a in n), lambda a: N[N[a]] != a),
        "neg_antitone": _first(pairs, lambda a, b: q.le(a, b) and not q.le(N[b], N[a])),
        "de_morgan": _first(pairs, lambda a, b: J[a][b] is not None and M[N[a]][N[b]] is not None
                            and N[J[a][b]] != M[N[a]][N[b]]),
        "U_dual": _first(((a,) for a in n), lambda a: U[a] != N[L[N[a]]]),
        "rough_determination": _first(pairs, lambda a, b: q.le(L[a], L[b]) and q.le(U[a], U[b])
                                      and not q.le(a, b)),
    }
    out["distributive"] = _first(triples, lambda a, b, c: None not in (M[b][c], J[a][b], J[a][c])
                                 and J[a][M[b][c]] is not None and M[J[a][b]][J[a][c]] is not None
                                 and J[a][M[b][c]] != M[J[a][b]][J[a][c]])
    return out


def is_prerough(q: PreRoughAlgebra) -> bool:
    return all(c.holds for c in check_prerough_axioms(q).values())


# -- filters ---------------------------------------------------------------------

@dataclass(frozen=True)
class FilterRecord:
    K: int
    o_filter: bool
    l_filter: bool
    prime: bool
    lattice: bool
    cofine: bool
    trivial: bool

    def to_json(self, q: PreRoughAlgebra) -> dict[str, Any]:
        return {"elements": q.names(self.K), "o_filter": self.o_filter, "l_filter": self.l_filter,
                "prime": self.prime, "lattice": self.lattice, "cofine": self.cofine,
                "trivial": self.trivial}


def in_mask(mask: int, i: int) -> bool:
    return bool(mask >> i & 1)


def is_cofine(q: PreRoughAlgebra, K: int) -> bool:
    """``K∖{1}`` is cofinal in ``Q∖{1}``."""
    top = q.top
    rest = K & ~(1 << top)
    return all(q.leq[y] & rest for y in range(q.size) if y != top)


def _o1(q: PreRoughAlgebra, K: int) -> bool:
    return all(in_mask(K, q.L[x]) for x in bits(K))


def _meet_closed(q: PreRoughAlgebra, K: int) -> bool:
    M = q.meet
    mem = list(bits(K))
    return all(M[a][b] is not None and in_mask(K, M[a][b]) for a in mem for b in mem)


def _join_closed(q: PreRoughAlgebra, K: int) -> bool:
    J = q.join
    mem = list(bits(K))
    return all(J[a][b] is not None and in_mask(K, J[a][b]) for a in mem for b in mem)


def _prime(q: PreRoughAlgebra, K: int) -> bool:
    J, top = q.join, q.top
    n = range(q.size)
    for a in n:
        for b in n:
            j = J[a][b]
            if j is not None and j != top and in_mask(K, j) and not (in_mask(K, a) or in_mask(K, b)):
                return False
    return True


def filter_record(q: PreRoughAlgebra, K: int) -> FilterRecord:
    o = all(q.leq[x] & ~K == 0 for x in bits(K))
    lf = o and K != 0 and _o1(q, K)
    trivial = K in (1 << q.top, q.full)
    return FilterRecord(K, o, lf, lf and _prime(q, K),
                        lf and _join_closed(q, K) and _meet_closed(q, K),
                        is_cofine(q, K), trivial)


def enumerate_filters(q: PreRoughAlgebra, bound: int = 16, l_only: bool = True) -> list[FilterRecord]:
    """Records for the nonempty up-sets of ``q`` (only L-filters unless ``l_only`` is false)."""
    if q.size > bound:
        raise PreRoughError(f"{q.size} elements exceed the filter enumeration bound {bound}")
    out = []
    for K in upsets(q.leq):
        if K == 0:
            continue
        if l_only and not _o1(q, K):
            continue
        out.append(filter_record(q, K))
    return sorted(out, key=lambda r: (bin(r.K).count("1"), r.K))


def lattice_l_filters(q: PreRoughAlgebra, bound: int = 64) -> list[FilterRecord]:
    return [r for r in enumerate_filters(q, bound) if r.lattice]


def nontrivial_lattice_l_filters(q: PreRoughAlgebra, bound: int = 64) -> list[FilterRecord]:
    return [r for r in lattice_l_filters(q, bound) if not r.trivial]


def enumerate_u_ideals(q: PreRoughAlgebra, bound: int = 16) -> list[int]:
    """Nonempty down-sets closed under U (the dual of L-filters)."""
    if q.size > bound:
        raise PreRoughError(f"{q.size} elements exceed the ideal enumeration bound {bound}")
    n = q.size
    geq = _leq_from(n, lambda a, b: q.le(b, a))
    return sorted((I for I in upsets(geq) if I and all(in_mask(I, q.U[x]) for x in bits(I))),
                  key=lambda I: (bin(I).count("1"), I))


def _require_l_filter(q: PreRoughAlgebra, K: int) -> FilterRecord:
    r = filter_record(q, K)
    if not r.l_filter:
        raise PreRoughError("K is not an L-filter")
    return r


# -- induced structure -------------------------------------------------------------

def _weak_eq(lhs, rhs) -> bool:
    return lhs is None or rhs is None or lhs == rhs


def induced_structure(q: PreRoughAlgebra, K: int) -> dict[str, Check]:
    """Properties of the partial system induced on an L-filter ``K``.

    Partial operations on K are defined when the result stays in K.  Weak
    laws compare both sides only where both are defined.
    """
    rec = _require_l_filter(q, K)
    mem = list(bits(K))
    J, M = q.join, q.meet

    def jk(a, b):
        if a is None or b is None:
            return None
        v = J[a][b]
        return v if v is not None and in_mask(K, v) else None

    def mk(a, b):
        if a is None or b is None:
            return None
        v = M[a][b]
        return v if v is not None and in_mask(K, v) else None

    def lk(a):
        return None if a is None else q.L[a]

    pairs = list(itertools.product(mem, mem))
    triples = list(itertools.product(mem, mem, mem))
    out = {
        "join_closed": _first(pairs, lambda a, b: jk(a, b) is None),
        "meet_closed": _first(pairs, lambda a, b: mk(a, b) is None),
        "L_closed": _first(((a,) for a in mem), lambda a: not in_mask(K, q.L[a])),
        "U_closed": _first(((a,) for a in mem), lambda a: not in_mask(K, q.U[a])),
        "neg_closed": _first(((a,) for a in mem), lambda a: not in_mask(K, q.neg[a])),
        "L_deflationary": _first(((a,) for a in mem), lambda a: not q.le(q.L[a], a)),
        "LL": _first(((a,) for a in mem), lambda a: q.L[q.L[a]] != q.L[a]),
        "L1": Check(in_mask(K, q.top) and q.L[q.top] == q.top),
        "UL": _first(((a,) for a in mem), lambda a: q.U[q.L[a]] != q.L[a]),
        "L_join": _first(pairs, lambda a, b: lk(jk(a, b)) != jk(q.L[a], q.L[b])),
        "L_meet_weak": _first(pairs, lambda a, b: not _weak_eq(lk(mk(a, b)), mk(q.L[a], q.L[b]))),
        "absorption_weak": _first(pairs, lambda x, y: not _weak_eq(jk(x, mk(y, x)), x)),
        "distributive_weak": _first(triples, lambda x, y, z: not _weak_eq(
            jk(x, mk(y, z)), mk(jk(x, y), jk(x, z)))),
        "distributive_dual_weak": _first(triples, lambda x, y, z: not _weak_eq(
            mk(x, jk(y, z)), jk(mk(x, y), mk(x, z)))),
    }
    n = range(q.size)
    # a⊓b ∈ K forces a, b, La, Lb ∈ K
    out["meet_membership"] = _first(
        itertools.product(n, n),
        lambda a, b: M[a][b] is not None and in_mask(K, M[a][b])
        and not all(in_mask(K, v) for v in (a, b, q.L[a], q.L[b])))
    if rec.lattice:
        out["distributive"] = _first(triples, lambda x, y, z: J[x][M[y][z]] != M[J[x][y]][J[x][z]])
    return out


# -- supremal filters ----------------------------------------------------------------

@dataclass(frozen=True)
class SupremalReport:
    K: int
    K_plus: int
    plus_is_lattice_l_filter: bool
    cofine: bool
    plus_is_top: bool

    @property
    def equivalence_holds(self) -> bool:
        return self.cofine == self.plus_is_top


def plus(q: PreRoughAlgebra, K: int) -> int:
    """``K⁺ = {y : x ⊔ y = 1 for every x in K}``."""
    J, top = q.join, q.top
    mem = list(bits(K))
    return sum(1 << y for y in range(q.size) if all(J[x][y] == top for x in mem))


def supremal(q: PreRoughAlgebra, K: int) -> SupremalReport:
    rec = filter_record(q, K)
    if not rec.lattice:
        raise PreRoughError("K must be a lattice L-filter")
    kp = plus(q, K)
    return SupremalReport(K, kp, filter_record(q, kp).lattice, rec.cofine, kp == 1 << q.top)


def _is_boolean_lattice(elems: Sequence[int], le) -> bool:
    """Whether a finite poset is a Boolean lattice."""
    n = len(elems)
    if n == 0:
        return False
    leq = _leq_from(n, lambda a, b: le(elems[a], elems[b]))
    J = [[_lub(leq, a, b) for b in range(n)] for a in range(n)]
    M = [[_glb(leq, a, b) for b in range(n)] for a in range(n)]
    if any(v is None for row in J + M for v in row):
        return False
    bot = next(x for x in range(n) if leq[x] == (1 << n) - 1)
    top = next(x for x in range(n) if all(leq[y] >> x & 1 for y in range(n)))
    r = range(n)
    if any(J[a][M[b][c]] != M[J[a][b]][J[a][c]] for a in r for b in r for c in r):
        return False
    return all(any(J[a][b] == top and M[a][b] == bot for b in r) for a in r)


@dataclass(frozen=True)
class SupremalStructure:
    supremals: tuple[int, ...]
    boolean_under_inclusion: bool
    boolean_under_plus_order: bool
    plus_involutive: bool


def supremal_structure(q: PreRoughAlgebra, bound: int = 64) -> SupremalStructure:
    """The supremal filters (images of ``K ↦ K⁺``) and two candidate orders on them.

    The second order puts ``A <= B`` when ``B⁺ ⊆ A⁺``; both are tested for
    being Boolean and the result reported.
    """
    sups = sorted({plus(q, r.K) for r in lattice_l_filters(q, bound)})
    inc = lambda a, b: a & ~b == 0  # noqa: E731
    pmap = {s: plus(q, s) for s in sups}
    rev = lambda a, b: inc(pmap[b], pmap[a])  # noqa: E731
    return SupremalStructure(tuple(sups), _is_boolean_lattice(sups, inc),
                             _is_boolean_lattice(sups, rev) if len(set(pmap.values())) == len(sups) else False,
                             all(plus(q, pmap[s]) == s for s in sups))


def incomparability_search(q: PreRoughAlgebra, K: int) -> tuple[int, int] | None:
    """First ``a, b ≠ 1`` with ``a ⊔ b`` incomparable to every ``c ∈ K∖{1}``."""
    rec = filter_record(q, K)
    if not rec.lattice or rec.trivial:
        raise PreRoughError("K must be a nontrivial lattice L-filter")
    top = q.top
    rest = [c for c in bits(K) if c != top]
    others = [x for x in range(q.size) if x != top]
    for a in others:
        for b in others:
            j = q.join[a][b]
            if j is not None and all(not q.le(j, c) and not q.le(c, j) for c in rest):
                return a, b
    return None


# -- OCPR systems ---------------------------------------------------------------------

@dataclass(frozen=True)
class OcprSystem:
    base: PreRoughAlgebra
    K: int
    cup: tuple[tuple[int | None, ...], ...]
    cap: tuple[tuple[int | None, ...], ...]
    rel: tuple[int, ...]  # rel[x] = mask of y with x ⊲ y

    def lhd(self, x: int, y: int) -> bool:
        return bool(self.rel[x] >> y & 1)


def ocpr_build(q: PreRoughAlgebra, K: int) -> OcprSystem:
    _require_l_filter(q, K)
    cup = tuple(tuple(v if v is not None and in_mask(K, v) else None for v in row) for row in q.join)
    cap = tuple(tuple(v if v is not None and in_mask(K, v) else None for v in row) for row in q.meet)
    rel = _leq_from(q.size, lambda x, y: x == y or cap[x][y] == x or cup[x][y] == y)
    return OcprSystem(q, K, cup, cap, rel)


def verify_ocpr(o: OcprSystem) -> dict[str, Check]:
    q = o.base
    n = range(q.size)
    pairs = list(itertools.product(n, n))
    lhd = o.lhd
    mem = list(bits(o.K))
    out = {
        "reflexive": _first(((x,) for x in n), lambda x: not lhd(x, x)),
        "antisymmetric": _first(pairs, lambda x, y: x != y and lhd(x, y) and lhd(y, x)),
        "transitive": _first(itertools.product(n, n, n),
                             lambda x, y, z: lhd(x, y) and lhd(y, z) and not lhd(x, z)),
        "L_compatible": _first(pairs, lambda x, y: lhd(x, y) and not lhd(q.L[x], q.L[y])),
        "U_compatible": _first(pairs, lambda x, y: lhd(x, y) and not lhd(q.U[x], q.U[y])),
        "restriction_is_order_on_K": _first(itertools.product(mem, mem),
                                            lambda x, y: lhd(x, y) != q.le(x, y)),
    }
    return out


def absorption_failure(o: OcprSystem) -> tuple[int, int] | None:
    """First ``(x, y)`` where ``x Cup (y Cap x)`` is undefined or differs from x."""
    for x in range(o.base.size):
        for y in range(o.base.size):
            m = o.cap[y][x]
            v = None if m is None else o.cup[x][m]
            if v != x:
                return x, y
    return None


@dataclass(frozen=True)
class EmbeddingReport:
    preserves_join: bool
    preserves_L: bool
    preserves_U: bool
    closed: bool
    neg_dropped: bool


def cofine_embedding(q: PreRoughAlgebra, K: int) -> EmbeddingReport:
    """The inclusion of the system induced on a cofine L-filter K into Q.

    Order, join, L and U carry over because K is up-closed and L-closed; the
    partial meet on K agrees with Q wherever defined.  Closedness asks that
    the meet is defined in K whenever it is defined in Q, i.e. that K is
    meet-closed.
    """
    rec = _require_l_filter(q, K)
    if not rec.cofine:
        raise PreRoughError("K is not cofine")
    mem = list(bits(K))
    J, M = q.join, q.meet
    return EmbeddingReport(
        all(J[a][b] is not None and in_mask(K, J[a][b]) for a in mem for b in mem),
        all(in_mask(K, q.L[a]) for a in mem),
        all(in_mask(K, q.U[a]) for a in mem),
        all(M[a][b] is None or in_mask(K, M[a][b]) for a in mem for b in mem),
        any(not in_mask(K, q.neg[a]) for a in mem),
    )


# -- sweeps -------------------------------------------------------------------------------

def expected_quotient_size(space: ApproximationSpace) -> int:
    """Three states per class of size two or more, two per singleton class."""
    out = 1
    for m in build_classical_rys(space).granulation.distinct_masks:
        out *= 3 if bin(m).count("1") >= 2 else 2
    return out


def has_no_nontrivial_lattice_filter(q: PreRoughAlgebra, bound: int = 64) -> bool:
    return not nontrivial_lattice_l_filters(q, bound)


def paste_product_family(bases: Sequence[PreRoughAlgebra], levels: int = 2,
                         max_size: int = 15) -> Iterator[tuple[str, PreRoughAlgebra]]:
    """``(how, algebra)`` for pastes and products of the bases, up to ``levels`` deep."""
    current = list(bases)
    seen = {a.leq for a in current}
    for _level in range(levels):
        nxt = []
        for a in current:
            p = paste(a)
            if p.size <= max_size and p.leq not in seen:
                seen.add(p.leq)
                nxt.append(p)
                yield "paste", p
        pool = current + nxt
        for a, b in itertools.combinations_with_replacement(pool, 2):
            if a.size * b.size <= max_size:
                r = product(a, b)
                if r.leq not in seen:
                    seen.add(r.leq)
                    nxt.append(r)
                    yield "product", r
        current = current + nxt
