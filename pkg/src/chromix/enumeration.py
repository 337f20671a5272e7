"""Brute-force counting oracles and the small-graph test universe.

Everything here enumerates colorings c: V -> [k] directly (with pruning of
partial assignments) so it can serve as an independent witness for the
deletion-contraction engine.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import BoundExceededError, GraphError
from .graph import (
    ARC,
    EDGE,
    MixedGraph,
    Orientation,
    is_acyclic_mixed,
    is_acyclic_orientation,
    orientations,
)

DEFAULT_ORACLE_BOUND = 8
DEFAULT_GENERATOR_BOUND = 5

FILTERS = ("all", "acyclic-mixed", "pure-graph", "pure-digraph")


def oracle_bound() -> int:
    raw = os.environ.get("CHROMIX_ORACLE_BOUND")
    return int(raw) if raw else DEFAULT_ORACLE_BOUND


def _guard(n: int, k: int):
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    bound = oracle_bound()
    if n > bound:
        raise BoundExceededError(f"{n} vertices exceeds the brute-force bound of {bound}")


@dataclass(frozen=True)
class Coloring:
    assignment: Mapping[str, int]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        bad = {v: c for v, c in self.assignment.items() if not 1 <= c <= self.k}
        if bad:
            raise ValueError(f"colors outside [1, {self.k}]: {bad}")

    def __getitem__(self, v):
        return self.assignment[v]


def count_assignments(vertices, k: int, le=(), lt=(), ne=()) -> int:
    """Number of maps x: vertices -> [k] with x_u <= x_v for (u, v) in ``le``,
    x_u < x_v for ``lt`` and x_u != x_v for ``ne``.

    Vertices are assigned in the given order; each new vertex only tries the
    colors allowed by its already-colored neighbours, and the last vertex is
    counted without iterating.
    """
    vertices = list(vertices)
    pos = {v: i for i, v in enumerate(vertices)}
    n = len(vertices)
    if n == 0:
        return 1
    # per vertex i: constraints against earlier vertices j < i
    lower_w = [[] for _ in range(n)]  # x_j <= x_i
    lower_s = [[] for _ in range(n)]  # x_j < x_i
    upper_w = [[] for _ in range(n)]  # x_i <= x_j
    upper_s = [[] for _ in range(n)]  # x_i < x_j
    differ = [[] for _ in range(n)]
    for kind, pairs in (("le", le), ("lt", lt), ("ne", ne)):
        for u, v in pairs:
            i, j = pos[u], pos[v]
            if i == j:
                if kind == "le":
                    continue
                return 0
            if kind == "ne":
                differ[max(i, j)].append(min(i, j))
            elif kind == "le":
                if j > i:
                    lower_w[j].append(i)
                else:
                    upper_w[i].append(j)
            else:
                if j > i:
                    lower_s[j].append(i)
                else:
                    upper_s[i].append(j)

    x = [0] * n

    def bounds(i):
        lo, hi = 1, k
        for j in lower_w[i]:
            lo = max(lo, x[j])
        for j in lower_s[i]:
            lo = max(lo, x[j] + 1)
        for j in upper_w[i]:
            hi = min(hi, x[j])
        for j in upper_s[i]:
            hi = min(hi, x[j] - 1)
        return lo, hi

    def walk(i):
        lo, hi = bounds(i)
        if lo > hi:
            return 0
        if i == n - 1:
            banned = {x[j] for j in differ[i]}
            return hi - lo + 1 - sum(1 for c in banned if lo <= c <= hi)
        total = 0
        banned = {x[j] for j in differ[i]}
        for c in range(lo, hi + 1):
            if c in banned:
                continue
            x[i] = c
            total += walk(i + 1)
        return total

    return walk(0)


def naive_count(vertices, k: int, le=(), lt=(), ne=()) -> int:
    """Same as :func:`count_assignments` by filtering all k^n maps."""
    vertices = list(vertices)
    pos = {v: i for i, v in enumerate(vertices)}
    total = 0
    for x in itertools.product(range(1, k + 1), repeat=len(vertices)):
        if all(x[pos[u]] <= x[pos[v]] for u, v in le) and all(
            x[pos[u]] < x[pos[v]] for u, v in lt
        ) and all(x[pos[u]] != x[pos[v]] for u, v in ne):
            total += 1
    return total


def proper_colorings(g: MixedGraph, k: int, strong: bool = False) -> Iterator[Coloring]:
    """Yield every weak (or strong) proper k-coloring, lexicographically."""
    _guard(g.order, k)
    for x in itertools.product(range(1, k + 1), repeat=g.order):
        c = dict(zip(g.vertices, x))
        if any(c[u] == c[v] for u, v in g.edges):
            continue
        if strong:
            ok = all(c[u] < c[v] for u, v in g.arcs)
        else:
            ok = all(c[u] <= c[v] for u, v in g.arcs)
        if ok:
            yield Coloring(c, k)


def count_weak_colorings(g: MixedGraph, k: int) -> int:
    _guard(g.order, k)
    return count_assignments(g.vertices, k, le=g.arcs, ne=g.edges)


def count_strong_colorings(g: MixedGraph, k: int) -> int:
    _guard(g.order, k)
    return count_assignments(g.vertices, k, lt=g.arcs, ne=g.edges)


def _split_pairs(g: MixedGraph, o: Orientation):
    if o.base != g:
        raise GraphError("the orientation does not belong to this graph")
    arc_born = [(u, v) for u, v, origin in o.pairs() if origin == ARC]
    edge_born = [(u, v) for u, v, origin in o.pairs() if origin == EDGE]
    return arc_born, edge_born


def count_compatible(g: MixedGraph, o: Orientation, k: int) -> int:
    arc_born, edge_born = _split_pairs(g, o)
    _guard(g.order, k)
    return count_assignments(g.vertices, k, le=arc_born + edge_born)


def count_intercompatible(g: MixedGraph, o: Orientation, k: int) -> int:
    """<= along edge-born pairs, < along arc-born pairs."""
    arc_born, edge_born = _split_pairs(g, o)
    _guard(g.order, k)
    return count_assignments(g.vertices, k, le=edge_born, lt=arc_born)


def count_phi(g: MixedGraph, o: Orientation, k: int) -> int:
    """Colorings of the orientation that are also weak proper colorings of g:
    <= along arc-born pairs, < along edge-born pairs."""
    arc_born, edge_born = _split_pairs(g, o)
    _guard(g.order, k)
    return count_assignments(g.vertices, k, le=arc_born, lt=edge_born)


def count_acyclic_orientations(g: MixedGraph) -> int:
    return sum(1 for o in orientations(g) if is_acyclic_orientation(o))


def reciprocity_rhs_weak(g: MixedGraph, k: int) -> int:
    """Pairs (coloring, intercompatible acyclic orientation)."""
    return sum(count_intercompatible(g, o, k) for o in orientations(g) if is_acyclic_orientation(o))


def reciprocity_rhs_strong(g: MixedGraph, k: int) -> int:
    """Pairs (coloring, compatible acyclic orientation)."""
    return sum(count_compatible(g, o, k) for o in orientations(g) if is_acyclic_orientation(o))


def pair_count_by_coloring(g: MixedGraph, k: int, intercompatible: bool) -> int:
    """The same pair counts as the two functions above, summed coloring by
    coloring instead of orientation by orientation."""
    _guard(g.order, k)
    acyclic = [o for o in orientations(g) if is_acyclic_orientation(o)]
    total = 0
    for x in itertools.product(range(1, k + 1), repeat=g.order):
        c = dict(zip(g.vertices, x))
        for o in acyclic:
            ok = True
            for u, v, origin in o.pairs():
                if intercompatible and origin == ARC:
                    ok = c[u] < c[v]
                else:
                    ok = c[u] <= c[v]
                if not ok:
                    break
            total += ok
    return total


def vertex_names(n: int) -> list[str]:
    return [f"v{i}" for i in range(1, n + 1)]


def enumerate_mixed_graphs(n: int, filter: str = "all", bound: int = DEFAULT_GENERATOR_BOUND) -> Iterator[MixedGraph]:
    """Every labeled mixed graph on v1..vn with at most one of
    {edge, arc ->, arc <-} per vertex pair (4^(n choose 2) graphs).

    Order: product over pairs in lexicographic order, choices ordered
    none, edge, forward arc, backward arc.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > bound:
        raise BoundExceededError(f"n={n} exceeds the generator bound of {bound}")
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}; choose from {', '.join(FILTERS)}")
    vs = vertex_names(n)
    pairs = list(itertools.combinations(vs, 2))
    if filter == "pure-graph":
        choices = (0, 1)
    elif filter == "pure-digraph":
        choices = (0, 2, 3)
    else:
        choices = (0, 1, 2, 3)
    for pick in itertools.product(choices, repeat=len(pairs)):
        edges, arcs = [], []
        for (u, v), c in zip(pairs, pick):
            if c == 1:
                edges.append((u, v))
            elif c == 2:
                arcs.append((u, v))
            elif c == 3:
                arcs.append((v, u))
        g = MixedGraph(vs, edges, arcs)
        if filter == "acyclic-mixed" and not is_acyclic_mixed(g):
            continue
        yield g


def random_mixed_graph(n: int, rng) -> MixedGraph:
    """One uniform draw from the same universe as :func:`enumerate_mixed_graphs`."""
    vs = vertex_names(n)
    edges, arcs = [], []
    for u, v in itertools.combinations(vs, 2):
        c = rng.randrange(4)
        if c == 1:
            edges.append((u, v))
        elif c == 2:
            arcs.append((u, v))
        elif c == 3:
            arcs.append((v, u))
    return MixedGraph(vs, edges, arcs)
