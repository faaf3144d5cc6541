"""Θ/Ω/O comparison relations, μ-classes and the filter agreement checks."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from granrough.correspondence import (
    Correspondence,
    classify,
    in_family,
    is_morphism,
)
from granrough.rys import Rys, atom_structure

KINDS = ("theta_lu", "theta_uu", "omega_l", "omega_u", "o_l", "o_u")
_CLI_KINDS = {k.replace("_", "-"): k for k in KINDS}


class ComparisonError(ValueError):
    pass


def normalize_kind(kind: str) -> str:
    k = _CLI_KINDS.get(kind.lower(), kind.lower())
    if k not in KINDS:
        raise ComparisonError(f"unknown comparison kind {kind!r}")
    return k


@dataclass(frozen=True)
class ComparisonVerdict:
    kind: str
    holds: bool
    z0: int | None = None
    i: int | None = None
    j: int | None = None
    reason: str | None = None
    symmetric: bool | None = None

    def to_json(self, source: Rys | None = None) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind, "holds": self.holds}
        if self.z0 is not None:
            out["z0"] = source.names(self.z0) if source is not None else self.z0
            out["i"] = self.i
            if self.j is not None:
                out["j"] = self.j
        if self.reason:
            out["reason"] = self.reason
        if self.symmetric is not None:
            out["symmetric"] = self.symmetric
        return out


def up_set(rys: Rys, z0: int) -> list[int]:
    """``{z : P z0 z}`` in carrier order."""
    return [z for z in rys.carrier if rys.leq(z0, z)]


def _index_choices(kind: str, n: int) -> list[tuple[int, int | None]]:
    if kind == "theta_uu":
        return [(i, j) for i in range(n) for j in range(n)]
    return [(i, None) for i in range(n)]


def _holds_at(f: Correspondence, h: Correspondence, kind: str, z: int, i: int, j: int | None) -> bool:
    tgt = f.target
    fz, hz = f(z), h(z)
    if kind == "theta_lu":
        return tgt.leq(tgt.lower(hz, i), fz) and tgt.leq(fz, tgt.upper(hz, i))
    if kind == "theta_uu":
        return tgt.leq(tgt.upper(hz, i), fz) and tgt.leq(fz, tgt.upper(hz, j))
    if kind == "omega_l":
        return tgt.leq(tgt.lower(hz, i), fz)
    if kind == "omega_u":
        return tgt.leq(tgt.upper(hz, i), fz)
    if kind == "o_l":
        return tgt.leq(fz, tgt.lower(hz, i))
    return tgt.leq(fz, tgt.upper(hz, i))


def _check_pair(f: Correspondence, h: Correspondence) -> None:
    if f.source != h.source or f.target != h.target:
        raise ComparisonError("compared correspondences need a shared source and target")


def holds_with(f: Correspondence, h: Correspondence, kind: str, z0: int, i: int,
               j: int | None = None) -> bool:
    """Re-check a witness from scratch: every z above z0 satisfies the inclusions."""
    kind = normalize_kind(kind)
    if z0 not in atom_structure(f.source).x_c:
        return False
    return all(_holds_at(f, h, kind, z, i, j) for z in up_set(f.source, z0))


def related(f: Correspondence, h: Correspondence, kind: str = "theta_lu",
            x_c: Sequence[int] | None = None) -> ComparisonVerdict:
    """Whether ``f`` is ``kind``-related to ``h``; first witness in carrier then index order."""
    kind = normalize_kind(kind)
    _check_pair(f, h)
    if x_c is None:
        x_c = atom_structure(f.source).x_c
    if not x_c:
        return ComparisonVerdict(kind, False, reason="no admissible z0")
    choices = _index_choices(kind, f.target.n_approx)
    for z0 in x_c:
        ups = up_set(f.source, z0)
        for i, j in choices:
            if all(_holds_at(f, h, kind, z, i, j) for z in ups):
                return ComparisonVerdict(kind, True, z0, i, j)
    return ComparisonVerdict(kind, False, reason="no witness")


def symmetric_theta(f: Correspondence, h: Correspondence) -> bool:
    return related(f, h, "theta_lu").holds and related(h, f, "theta_lu").holds


@dataclass(frozen=True)
class AsymmetryWitness:
    f: Correspondence
    h: Correspondence
    forward: ComparisonVerdict
    morphisms: bool


def find_asymmetry(systems: Iterable[Rys], pools) -> AsymmetryWitness | None:
    """First pair with ``f ∈ Θ_lu(h)`` and ``h ∉ Θ_lu(f)``.

    ``pools(rys)`` yields candidate self-maps on each system.
    """
    for rys in systems:
        pool = list(pools(rys))
        x_c = atom_structure(rys).x_c
        for f, h in itertools.permutations(pool, 2):
            fwd = related(f, h, "theta_lu", x_c)
            if fwd.holds and not related(h, f, "theta_lu", x_c).holds:
                return AsymmetryWitness(f, h, fwd, is_morphism(f) and is_morphism(h))
    return None


# -- μ-classes -----------------------------------------------------------------

@dataclass(frozen=True)
class Outcome:
    """A pointwise operation result; ``value`` is None when undefined."""

    value: Correspondence | None
    member: bool


@dataclass
class MuClass:
    base: Correspondence
    flavor: str
    members: list[Correspondence] = field(default_factory=list)

    def contains(self, f: Correspondence) -> bool:
        return is_morphism(f) and related(f, self.base, "theta_lu").holds

    def _pointwise(self, f: Correspondence, g: Correspondence, op) -> Outcome:
        # total target operations: the "undefined" branch never fires here
        table = tuple(op(a, b) for a, b in zip(f.table, g.table))
        h = Correspondence(f.source, f.target, table, "pointwise")
        return Outcome(h, self.contains(h))

    def add(self, f: Correspondence, g: Correspondence) -> Outcome:
        return self._pointwise(f, g, f.target.oplus)

    def mul(self, f: Correspondence, g: Correspondence) -> Outcome:
        return self._pointwise(f, g, f.target.odot)

    def iota(self) -> Outcome:
        tgt = self.base.target
        h = Correspondence(self.base.source, tgt, (tgt.top,) * len(self.base.table), "iota")
        return Outcome(h, self.contains(h))


def mu_class(h: Correspondence, flavor: str = "mu",
             candidate_pool: Iterable[Correspondence] = ()) -> MuClass:
    if flavor not in ("mu", "mu_c"):
        raise ComparisonError(f"unknown μ flavor {flavor!r}")
    cert = classify(h, fast=True)
    ok = cert.is_morphism if flavor == "mu" else cert.is_closed_morphism
    if not ok:
        raise ComparisonError("the base of a μ-class must be a morphism of the requested flavor")
    cls = MuClass(h, flavor)
    seen = set()
    for f in candidate_pool:
        if f.table not in seen and cls.contains(f):
            seen.add(f.table)
            cls.members.append(f)
    return cls


@dataclass(frozen=True)
class ClassOrder:
    leq: tuple[tuple[bool, ...], ...]
    reflexive: bool
    transitive: bool
    blocks: tuple[tuple[int, ...], ...]
    quotient_leq: tuple[tuple[bool, ...], ...]
    quotient_antisymmetric: bool

    @property
    def is_quasi_order(self) -> bool:
        return self.reflexive and self.transitive


def class_order(members: Sequence[Correspondence]) -> ClassOrder:
    """Pointwise parthood on members, its ≈-blocks and the induced quotient order."""
    n = len(members)
    le = tuple(tuple(all(f.target.leq(a, b) for a, b in zip(f.table, g.table)) for g in members)
               for f in members)
    refl = all(le[i][i] for i in range(n))
    trans = all(not (le[i][j] and le[j][k]) or le[i][k]
                for i in range(n) for j in range(n) for k in range(n))
    blocks: list[list[int]] = []
    for i in range(n):
        for blk in blocks:
            r = blk[0]
            if le[i][r] and le[r][i]:
                blk.append(i)
                break
        else:
            blocks.append([i])
    q = tuple(tuple(le[a[0]][b[0]] for b in blocks) for a in blocks)
    m = len(blocks)
    anti = all(not (q[a][b] and q[b][a]) or a == b for a in range(m) for b in range(m))
    return ClassOrder(le, refl, trans, tuple(map(tuple, blocks)), q, anti)


# -- filter agreement and lattice pointwise operations ---------------------------

@dataclass(frozen=True)
class AgreementReport:
    z0: int
    filter: tuple[int, ...]
    checked: tuple[int, ...]
    violations: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return not self.violations


def _require_classical(rys: Rys) -> None:
    if rys.granulation.style != "partition":
        raise ComparisonError("this check needs a classical system")


def filter_agreement(f: Correspondence, g: Correspondence, z0: int | None = None) -> AgreementReport:
    """Check ``g = f`` on the definite elements of the principal filter above z0."""
    _check_pair(f, g)
    _require_classical(f.source)
    if f.source != f.target:
        raise ComparisonError("filter agreement concerns self-maps")
    if not in_family(f, "SM_s"):
        raise ComparisonError("f must be a smooth sub-natural ⊕-morphism")
    if not classify(g, fast=True).is_SNC:
        raise ComparisonError("g must be sub-natural")
    if z0 is None:
        v = related(g, f, "theta_lu")
        if not v.holds:
            raise ComparisonError("hypothesis violated: g is not Θ_lu-related to f")
        z0 = v.z0
    elif not holds_with(g, f, "theta_lu", z0, 0):
        raise ComparisonError("hypothesis violated at the given z0")
    s = f.source
    h = tuple(up_set(s, z0))
    checked = tuple(x for x in h if s.is_definite(x))
    bad = tuple(x for x in checked if g(x) != f(x))
    return AgreementReport(z0, h, checked, bad)


def lattice_pointwise_ops(f: Correspondence, g: Correspondence, h: Correspondence,
                          family: str = "SM_s") -> dict[str, dict[str, Any]]:
    """Pointwise ``g⊕h, g⊙h, g^L, g^U`` for members of ``Θ_lu(f) ∩ family``.

    Each result is checked against the joint witness ``z0 ∨ z1`` of the two
    memberships (the proof's choice), by a fresh witness search, and for
    membership of ``family``.
    """
    for c in (g, h):
        _check_pair(f, c)
    if not (f.source.is_powerset and f.target.is_powerset):
        raise ComparisonError("lattice pointwise operations need lattice-ordered carriers")
    vg, vh = related(g, f, "theta_lu"), related(h, f, "theta_lu")
    if not (vg.holds and vh.holds):
        raise ComparisonError("both operands must be Θ_lu-related to f")
    if not (in_family(g, family) and in_family(h, family)):
        raise ComparisonError(f"both operands must lie in {family}")
    tgt, src = f.target, f.source
    joint = src.oplus(vg.z0, vh.z0)
    x_c = atom_structure(src).x_c
    tables = {
        "oplus": tuple(tgt.oplus(a, b) for a, b in zip(g.table, h.table)),
        "odot": tuple(tgt.odot(a, b) for a, b in zip(g.table, h.table)),
        "L": tuple(tgt.lower(a) for a in g.table),
        "U": tuple(tgt.upper(a) for a in g.table),
    }
    out = {}
    for op, table in tables.items():
        r = Correspondence(src, tgt, table, f"{g.name}.{op}")
        out[op] = {
            "value": r,
            "joint_witness": joint,
            "joint_witness_admissible": joint in x_c,
            "bounds_above_joint": all(_holds_at(r, f, "theta_lu", z, 0, None) for z in up_set(src, joint)),
            "related": related(r, f, "theta_lu").holds,
            "in_family": in_family(r, family),
        }
    return out


__all__ = [
    "AgreementReport",
    "AsymmetryWitness",
    "ClassOrder",
    "ComparisonError",
    "ComparisonVerdict",
    "KINDS",
    "MuClass",
    "Outcome",
    "class_order",
    "filter_agreement",
    "find_asymmetry",
    "holds_with",
    "lattice_pointwise_ops",
    "mu_class",
    "normalize_kind",
    "related",
    "symmetric_theta",
    "up_set",
]
