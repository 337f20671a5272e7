"""Finite posets, omega-labelings and order polynomials."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .enumeration import (
    _guard,
    count_assignments,
    count_intercompatible,
    count_phi,
    enumerate_mixed_graphs,
    oracle_bound,
)
from .errors import BoundExceededError, GraphError, PosetAxiomError, PreconditionError
from .graph import EDGE, MixedGraph, Orientation, is_acyclic_mixed, is_acyclic_orientation, orientations
from .polynomial import Polynomial, interpolate_counts
from .report import VerificationReport


class Poset:
    """A partial order on ``elements``; ``relation`` holds every pair u <= v
    (reflexive pairs included)."""

    __slots__ = ("elements", "relation")

    def __init__(self, elements: Iterable[str], relation: Iterable[tuple[str, str]]):
        elements = tuple(dict.fromkeys(str(e) for e in elements))
        rel = frozenset((str(u), str(v)) for u, v in relation)
        known = set(elements)
        for u, v in rel:
            if u not in known or v not in known:
                raise PosetAxiomError(f"relation {u} <= {v} mentions an unknown element")
        for e in elements:
            if (e, e) not in rel:
                raise PosetAxiomError(f"not reflexive: {e} <= {e} is missing")
        for u, v in rel:
            if u != v and (v, u) in rel:
                raise PosetAxiomError(f"not antisymmetric: {u} <= {v} and {v} <= {u}")
        for u, v in rel:
            for w in elements:
                if (v, w) in rel and (u, w) not in rel:
                    raise PosetAxiomError(f"not transitive: {u} <= {v} <= {w} but not {u} <= {w}")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "relation", rel)

    def __setattr__(self, name, value):
        raise AttributeError("Poset is immutable")

    @classmethod
    def from_relations(cls, elements: Iterable[str], pairs: Iterable[tuple[str, str]]) -> "Poset":
        """Reflexive-transitive closure of ``pairs``."""
        elements = tuple(dict.fromkeys(str(e) for e in elements))
        return cls(elements, _closure(elements, pairs))

    def leq(self, u, v) -> bool:
        return (u, v) in self.relation

    @property
    def matrix(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple((u, v) in self.relation for v in self.elements) for u in self.elements)

    def strict_pairs(self) -> list[tuple[str, str]]:
        return sorted((u, v) for u, v in self.relation if u != v)

    def longest_chain(self) -> int:
        """Number of elements in a longest chain."""
        depth: dict[str, int] = {}
        for e in natural_labeling(self).ordered():
            depth[e] = 1 + max((depth[u] for u, v in self.relation if v == e and u != e), default=0)
        return max(depth.values(), default=0)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return set(self.elements) == set(other.elements) and self.relation == other.relation

    def __hash__(self):
        return hash((frozenset(self.elements), self.relation))

    def __repr__(self):
        rels = ", ".join(f"{u}<={v}" for u, v in self.strict_pairs())
        return f"Poset({{{', '.join(self.elements)}}}; {rels})"


def _closure(elements, pairs) -> set[tuple[str, str]]:
    succ = {e: set() for e in elements}
    for u, v in pairs:
        u, v = str(u), str(v)
        if u not in succ or v not in succ:
            raise PosetAxiomError(f"relation {u} <= {v} mentions an unknown element")
        succ[u].add(v)
    rel = set()
    for start in elements:
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in succ[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        rel.update((start, y) for y in seen)
    return rel


@dataclass(frozen=True)
class OmegaLabeling:
    poset: Poset
    omega: Mapping[str, int]

    def __post_init__(self):
        n = len(self.poset)
        omega = {str(k): int(v) for k, v in dict(self.omega).items()}
        if set(omega) != set(self.poset.elements):
            raise ValueError("a labeling must label every element exactly once")
        if sorted(omega.values()) != list(range(1, n + 1)):
            raise ValueError(f"labels must form a bijection onto 1..{n}")
        object.__setattr__(self, "omega", omega)

    def __getitem__(self, e) -> int:
        return self.omega[e]

    def __hash__(self):
        return hash((self.poset, tuple(sorted(self.omega.items()))))

    def ordered(self) -> list[str]:
        """Elements sorted by label."""
        return sorted(self.omega, key=self.omega.__getitem__)

    def is_natural(self) -> bool:
        return all(self.omega[u] <= self.omega[v] for u, v in self.poset.relation)

    def constraints(self) -> tuple[list, list]:
        """(weak pairs, strict pairs) defining the order polynomial."""
        weak, strict = [], []
        for u, v in self.poset.strict_pairs():
            (weak if self.omega[u] < self.omega[v] else strict).append((u, v))
        return weak, strict


@functools.lru_cache(maxsize=65536)
def _order_polynomial(elements: tuple, weak: frozenset, strict: frozenset) -> Polynomial:
    return interpolate_counts(lambda k: count_assignments(elements, k, le=weak, lt=strict), len(elements))


def order_polynomial(p: Poset, w: OmegaLabeling | Mapping[str, int]) -> Polynomial:
    """Omega_{P,w}(k) by direct counting on k = 1..n+1, re-checked at n+2."""
    if not isinstance(w, OmegaLabeling):
        w = OmegaLabeling(p, w)
    elif w.poset != p:
        raise ValueError("the labeling belongs to a different poset")
    if len(p) > oracle_bound():
        raise BoundExceededError(f"{len(p)} elements exceeds the brute-force bound of {oracle_bound()}")
    weak, strict = w.constraints()
    return _order_polynomial(p.elements, frozenset(weak), frozenset(strict))


def count_order_maps(p: Poset, w: OmegaLabeling, k: int) -> int:
    """Omega_{P,w}(k) for one positive k, counted directly."""
    _guard(len(p), k)
    weak, strict = w.constraints()
    return count_assignments(p.elements, k, le=weak, lt=strict)


def complementary_labeling(w: OmegaLabeling) -> OmegaLabeling:
    n = len(w.poset)
    return OmegaLabeling(w.poset, {e: n + 1 - label for e, label in w.omega.items()})


def _peel(elements, succ, pick) -> dict[str, int]:
    """Label by repeatedly removing a vertex without remaining predecessors."""
    indeg = dict.fromkeys(elements, 0)
    for u in elements:
        for v in succ[u]:
            indeg[v] += 1
    remaining = list(elements)
    labels = {}
    while remaining:
        sources = [v for v in remaining if indeg[v] == 0]
        if not sources:
            raise GraphError("cycle detected: no source vertex is left to label")
        v = pick(sources)
        labels[v] = len(labels) + 1
        remaining.remove(v)
        for w in succ[v]:
            indeg[w] -= 1
    return labels


def natural_labeling(p: Poset) -> OmegaLabeling:
    """Minimal elements first, ties broken by element input order."""
    succ = {e: {v for u, v in p.relation if u == e and v != e} for e in p.elements}
    return OmegaLabeling(p, _peel(p.elements, succ, lambda sources: sources[0]))


def poset_from_orientation(o: Orientation) -> Poset:
    if not is_acyclic_orientation(o):
        raise GraphError("a cyclic orientation does not define a poset")
    return Poset.from_relations(o.base.vertices, [(u, v) for u, v, _ in o.pairs()])


def lemma5_labeling(g: MixedGraph, o: Orientation) -> OmegaLabeling:
    """A labeling of the orientation's poset whose order polynomial counts
    the colorings of ``o`` that are weak proper colorings of ``g``.

    Edge-born pairs of ``o`` are reversed (arcs kept), and sources of the
    result are peeled off with labels 1, 2, ...; ties go to the smallest
    token.
    """
    if o.base != g:
        raise GraphError("the orientation does not belong to this graph")
    succ: dict[str, set[str]] = {v: set() for v in g.vertices}
    for u, v, origin in o.pairs():
        if origin == EDGE:
            u, v = v, u
        if u == v:
            raise GraphError("cycle detected: loop in the reversed orientation")
        succ[u].add(v)
    labels = _peel(sorted(g.vertices), succ, min)
    return OmegaLabeling(poset_from_orientation(o), labels)


def verify_lemma5(g: MixedGraph, kmax: int) -> VerificationReport:
    """Per orientation: the lemma-5 labeling counts phi, its complement counts
    the intercompatible colorings."""
    if not is_acyclic_mixed(g):
        raise PreconditionError("lemma 5 needs an acyclic mixed graph")
    report = VerificationReport(g.describe(), "lemma-5")
    for i, o in enumerate(orientations(g), start=1):
        w = lemma5_labeling(g, o)
        p = w.poset
        omega = order_polynomial(p, w)
        omega_bar = order_polynomial(p, complementary_labeling(w))
        for k in range(1, kmax + 1):
            report.add(k, omega(k), count_phi(g, o, k), f"G{i} phi")
            report.add(k, omega_bar(k), count_intercompatible(g, o, k), f"G{i} intercompatible")
    return report


def verify_stanley_order(p: Poset, w: OmegaLabeling, kmax: int) -> VerificationReport:
    """Omega_{P,w}(-k) against (-1)^|P| Omega_{P,w-bar}(k), the latter counted directly."""
    if len(p) > oracle_bound():
        raise BoundExceededError(f"{len(p)} elements exceeds the brute-force bound of {oracle_bound()}")
    omega = order_polynomial(p, w)
    bar = complementary_labeling(w)
    sign = -1 if len(p) % 2 else 1
    labels = ",".join(f"{e}:{w[e]}" for e in p.elements)
    report = VerificationReport(f"{p!r} omega=({labels})", "stanley-order")
    for k in range(1, kmax + 1):
        report.add(k, omega(-k), sign * count_order_maps(p, bar, k))
    return report


def enumerate_posets(n: int) -> Iterator[Poset]:
    """Every labeled poset on v1..vn, via closures of acyclic digraphs."""
    seen = set()
    for d in enumerate_mixed_graphs(n, "pure-digraph"):
        o = orientations(d)[0]
        if not is_acyclic_orientation(o):
            continue
        p = Poset.from_relations(d.vertices, d.arcs)
        if p.relation not in seen:
            seen.add(p.relation)
            yield p


def all_labelings(p: Poset) -> Iterator[OmegaLabeling]:
    n = len(p)
    for perm in itertools.permutations(range(1, n + 1)):
        yield OmegaLabeling(p, dict(zip(p.elements, perm)))


def random_labeling(p: Poset, rng) -> OmegaLabeling:
    labels = list(range(1, len(p) + 1))
    rng.shuffle(labels)
    return OmegaLabeling(p, dict(zip(p.elements, labels)))

