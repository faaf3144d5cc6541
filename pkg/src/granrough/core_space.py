"""Finite universes, relations, granulations and approximation operators.

Subsets are bit masks over a universe's declaration order: element ``i``
of the universe is bit ``1 << i``.  Every value here is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import networkx as nx
from more_itertools import set_partitions

RELATION_KINDS = ("equivalence", "tolerance", "general")
GRANULATION_STYLES = ("successor-neighborhood", "partition", "block")


class SpaceError(ValueError):
    """Malformed universe, relation or granulation input."""


@dataclass(frozen=True)
class Universe:
    elements: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise SpaceError("universe must contain at least one element")
        if len(set(self.elements)) != len(self.elements):
            raise SpaceError("universe element names must be unique")
        for name in self.elements:
            if not isinstance(name, str) or not name:
                raise SpaceError(f"element names must be non-empty strings, got {name!r}")

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.elements)}

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise SpaceError(f"unknown element {name!r}") from None

    def mask_of(self, names: Iterable[str]) -> int:
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return mask

    def names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(name for i, name in enumerate(self.elements) if mask >> i & 1)

    def subset(self, names: Iterable[str] = ()) -> "Subset":
        return Subset(self, self.mask_of(names))

    def powerset(self) -> list["Subset"]:
        return [Subset(self, m) for m in range(1 << self.size)]

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class Subset:
    universe: Universe
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask & ~self.universe.full:
            raise SpaceError("subset members must lie in the universe")

    @property
    def members(self) -> tuple[str, ...]:
        return self.universe.names_of(self.mask)

    def _other(self, other: "Subset") -> int:
        if other.universe != self.universe:
            raise SpaceError("universe mismatch")
        return other.mask

    def __or__(self, other: "Subset") -> "Subset":
        return Subset(self.universe, self.mask | self._other(other))

    def __and__(self, other: "Subset") -> "Subset":
        return Subset(self.universe, self.mask & self._other(other))

    def __sub__(self, other: "Subset") -> "Subset":
        return Subset(self.universe, self.mask & ~self._other(other))

    def __invert__(self) -> "Subset":
        return Subset(self.universe, self.universe.full & ~self.mask)

    def __le__(self, other: "Subset") -> bool:
        return self.mask & ~self._other(other) == 0

    def __lt__(self, other: "Subset") -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: "Subset") -> bool:
        return other <= self

    def __gt__(self, other: "Subset") -> bool:
        return other < self

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self) -> Iterator[str]:
        return iter(self.members)

    def __contains__(self, name: str) -> bool:
        return bool(self.mask >> self.universe.index(name) & 1)

    def __repr__(self) -> str:
        return "{" + ",".join(self.members) + "}"


@dataclass(frozen=True)
class Relation:
    """A binary relation on a universe, stored as element-name pairs."""

    universe: Universe
    pairs: frozenset[tuple[str, str]]
    kind: str = "general"

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset((a, b) for a, b in self.pairs))
        if self.kind not in RELATION_KINDS:
            raise SpaceError(f"unknown relation kind {self.kind!r}")
        for a, b in self.pairs:
            self.universe.index(a)
            self.universe.index(b)
        if self.kind in ("equivalence", "tolerance"):
            if not self.is_reflexive():
                raise SpaceError(f"{self.kind} relation is not reflexive")
            if not self.is_symmetric():
                raise SpaceError(f"{self.kind} relation is not symmetric")
        if self.kind == "equivalence" and not self.is_transitive():
            raise SpaceError("equivalence relation is not transitive")

    @cached_property
    def successor_masks(self) -> tuple[int, ...]:
        """Bit mask of ``{y : (x, y) in R}`` for each ``x`` in declaration order."""
        out = [0] * self.universe.size
        for a, b in self.pairs:
            out[self.universe.index(a)] |= 1 << self.universe.index(b)
        return tuple(out)

    def related(self, a: str, b: str) -> bool:
        return (a, b) in self.pairs

    def is_reflexive(self) -> bool:
        return all((x, x) in self.pairs for x in self.universe)

    def is_symmetric(self) -> bool:
        return all((b, a) in self.pairs for a, b in self.pairs)

    def is_transitive(self) -> bool:
        succ = self.successor_masks
        for i in range(self.universe.size):
            reach = 0
            for j in range(self.universe.size):
                if succ[i] >> j & 1:
                    reach |= succ[j]
            if reach & ~succ[i]:
                return False
        return True

    def with_kind(self, kind: str) -> "Relation":
        return Relation(self.universe, self.pairs, kind)


def generate_relation(universe: Universe, seed_pairs: Iterable[Sequence[str]], kind: str) -> Relation:
    """Smallest relation of ``kind`` containing ``seed_pairs``.

    Tolerance adds the reflexive-symmetric closure, equivalence additionally
    the transitive closure, and ``general`` keeps the seeds as given.
    """
    if kind not in RELATION_KINDS:
        raise SpaceError(f"unknown relation kind {kind!r}")
    pairs = set()
    for pair in seed_pairs:
        if len(pair) != 2:
            raise SpaceError(f"relation pairs must have two elements, got {pair!r}")
        a, b = pair
        universe.index(a)
        universe.index(b)
        pairs.add((a, b))
    if kind == "general":
        return Relation(universe, frozenset(pairs), kind)
    pairs |= {(x, x) for x in universe}
    pairs |= {(b, a) for a, b in pairs}
    if kind == "equivalence":
        changed = True
        while changed:
            extra = {(a, d) for a, b in pairs for c, d in pairs if b == c} - pairs
            changed = bool(extra)
            pairs |= extra
    return Relation(universe, frozenset(pairs), kind)


@dataclass(frozen=True)
class Granule:
    name: str
    subset: Subset
    generator: str | None = None

    @property
    def mask(self) -> int:
        return self.subset.mask


@dataclass(frozen=True)
class Granulation:
    universe: Universe
    granules: tuple[Granule, ...]
    style: str

    def __post_init__(self):
        object.__setattr__(self, "granules", tuple(self.granules))
        if self.style not in GRANULATION_STYLES:
            raise SpaceError(f"unknown granulation style {self.style!r}")
        masks = self.masks
        if any(g.subset.universe != self.universe for g in self.granules):
            raise SpaceError("granule over a different universe")
        if self.style == "partition":
            union = 0
            for m in masks:
                if not m or union & m:
                    raise SpaceError("partition granules must be nonempty and disjoint")
                union |= m
            if union != self.universe.full:
                raise SpaceError("partition granules must cover the universe")
        elif self.style == "block":
            if not self.covers():
                raise SpaceError("blocks must cover the universe")

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(g.mask for g in self.granules)

    @cached_property
    def distinct_masks(self) -> tuple[int, ...]:
        return tuple(dict.fromkeys(self.masks))

    def covers(self) -> bool:
        union = 0
        for m in self.masks:
            union |= m
        return union == self.universe.full

    def by_name(self, name: str) -> Granule:
        for g in self.granules:
            if g.name == name:
                return g
        raise SpaceError(f"unknown granule {name!r}")

    def __iter__(self) -> Iterator[Granule]:
        return iter(self.granules)

    def __len__(self) -> int:
        return len(self.granules)


def _class_name(universe: Universe, mask: int) -> str:
    return "[" + ",".join(universe.names_of(mask)) + "]"


def granulation_from_relation(rel: Relation) -> Granulation:
    """Successor neighborhoods of a reflexive relation.

    Equivalences give the partition into (deduplicated) classes.  Any other
    reflexive relation keeps one granule ``n(x)`` per element, duplicates
    included.
    """
    if not rel.is_reflexive():
        raise SpaceError("granulation requires a reflexive relation")
    u = rel.universe
    succ = rel.successor_masks
    if rel.kind == "equivalence":
        classes = dict.fromkeys(succ)
        granules = tuple(Granule(_class_name(u, m), Subset(u, m)) for m in classes)
        return Granulation(u, granules, "partition")
    granules = tuple(Granule(f"n({x})", Subset(u, succ[i]), x) for i, x in enumerate(u))
    return Granulation(u, granules, "successor-neighborhood")


def maximal_cliques(rel: Relation) -> list[int]:
    """Blocks of a tolerance: maximal cliques of its graph, as sorted masks."""
    graph = nx.Graph()
    graph.add_nodes_from(rel.universe)
    graph.add_edges_from((a, b) for a, b in rel.pairs if a != b)
    masks = {rel.universe.mask_of(c) for c in nx.find_cliques(graph)}
    return sorted(masks, key=lambda m: [rel.universe.index(n) for n in rel.universe.names_of(m)])


def block_granulation(rel: Relation) -> Granulation:
    if not (rel.is_reflexive() and rel.is_symmetric()):
        raise SpaceError("blocks require a tolerance relation")
    u = rel.universe
    granules = tuple(
        Granule("b(" + ",".join(u.names_of(m)) + ")", Subset(u, m)) for m in maximal_cliques(rel)
    )
    return Granulation(u, granules, "block")


def lower_mask(granules: Sequence[int], a: int) -> int:
    out = 0
    for g in granules:
        if g & ~a == 0:
            out |= g
    return out


def upper_mask(granules: Sequence[int], a: int) -> int:
    out = 0
    for g in granules:
        if g & a:
            out |= g
    return out


def _check(g: Granulation, a: Subset) -> None:
    if a.universe != g.universe:
        raise SpaceError("universe mismatch")


def lower_approx(g: Granulation, a: Subset) -> Subset:
    """Union of the granules contained in ``a``."""
    _check(g, a)
    return Subset(g.universe, lower_mask(g.masks, a.mask))


def upper_approx(g: Granulation, a: Subset) -> Subset:
    """Union of the granules meeting ``a``."""
    _check(g, a)
    return Subset(g.universe, upper_mask(g.masks, a.mask))


def definite_masks(g: Granulation, variant: str = "lu") -> list[int]:
    if variant not in ("l", "u", "lu"):
        raise SpaceError(f"unknown definiteness variant {variant!r}")
    out = []
    for m in range(1 << g.universe.size):
        if variant in ("l", "lu") and lower_mask(g.masks, m) != m:
            continue
        if variant in ("u", "lu") and upper_mask(g.masks, m) != m:
            continue
        out.append(m)
    return out


def definite_elements(g: Granulation, variant: str = "lu") -> frozenset[Subset]:
    return frozenset(Subset(g.universe, m) for m in definite_masks(g, variant))


def k_mask(x: int, y: int) -> Fraction:
    if not x:
        return Fraction(1)
    return Fraction(bin(x & y).count("1"), bin(x).count("1"))


def rough_inclusion_k(x: Subset, y: Subset) -> Fraction:
    """Degree of rough inclusion ``#(X & Y) / #X``, 1 for empty ``X``."""
    if x.universe != y.universe:
        raise SpaceError("universe mismatch")
    return k_mask(x.mask, y.mask)


def blocks_containing(g: Granulation, x: str) -> tuple[Granule, ...]:
    bit = 1 << g.universe.index(x)
    return tuple(gr for gr in g.granules if gr.mask & bit)


@dataclass(frozen=True)
class ApproximationSpace:
    universe: Universe
    relation: Relation = field(repr=False)

    def __post_init__(self):
        if self.relation.universe != self.universe:
            raise SpaceError("relation over a different universe")

    @property
    def kind(self) -> str:
        return self.relation.kind

    @classmethod
    def from_seeds(cls, elements: Sequence[str], seed_pairs, kind: str) -> "ApproximationSpace":
        u = Universe(tuple(elements))
        return cls(u, generate_relation(u, seed_pairs, kind))

    @classmethod
    def from_partition(cls, blocks: Sequence[Sequence[str]]) -> "ApproximationSpace":
        elements = [x for b in blocks for x in b]
        u = Universe(tuple(elements))
        pairs = {(a, b) for blk in blocks for a in blk for b in blk}
        return cls(u, Relation(u, frozenset(pairs), "equivalence"))


def partitions_of(n: int, prefix: str = "s") -> Iterator[ApproximationSpace]:
    """All equivalence spaces on ``{s1..sn}``, one per set partition."""
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    for blocks in set_partitions(names):
        u = Universe(tuple(names))
        pairs = {(a, b) for blk in blocks for a in blk for b in blk}
        yield ApproximationSpace(u, Relation(u, frozenset(pairs), "equivalence"))
