"""Mixed graphs G = (V, E, A) and their structural operations.

Vertices are string tokens. An edge is stored as the sorted pair of its
endpoint tokens, an arc as the ordered pair (tail, head). Both collections
have set semantics, so contraction automatically keeps a single copy of
each parallel element. A loop edge (v, v) is kept (no proper coloring can
satisfy c(v) != c(v)); a loop arc is dropped on creation (c(v) <= c(v) holds
trivially).

All values are immutable; every operation returns a new graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GraphError, MissingElementError

Edge = tuple[str, str]
Arc = tuple[str, str]

EDGE = "edge"
ARC = "arc"


def edge_key(u: str, v: str) -> Edge:
    return (u, v) if u <= v else (v, u)


class MixedGraph:
    """An immutable mixed graph.

    ``vertices`` keeps input order (it drives enumeration order of colorings
    and natural labelings); equality and hashing ignore that order.
    """

    __slots__ = ("vertices", "edges", "arcs", "_hash")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable = (), arcs: Iterable = ()):
        vs = tuple(dict.fromkeys(str(v) for v in vertices))
        es = frozenset(edge_key(str(u), str(v)) for u, v in edges)
        arc_set = frozenset((str(u), str(v)) for u, v in arcs if u != v)
        known = set(vs)
        for u, v in itertools.chain(es, arc_set):
            if u not in known or v not in known:
                raise GraphError(f"endpoint of {u!r}-{v!r} is not a vertex of the graph")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "arcs", arc_set)
        object.__setattr__(self, "_hash", hash((frozenset(vs), es, arc_set)))

    def __setattr__(self, name, value):
        raise AttributeError("MixedGraph is immutable")

    def __eq__(self, other):
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.edges == other.edges
            and self.arcs == other.arcs
            and set(self.vertices) == set(other.vertices)
        )

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (MixedGraph, (self.vertices, tuple(self.edges), tuple(self.arcs)))

    def __repr__(self):
        return f"MixedGraph({self.describe()})"

    @property
    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @property
    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def has_loop_edge(self) -> bool:
        return any(u == v for u, v in self.edges)

    def is_pure_graph(self) -> bool:
        return not self.arcs

    def is_pure_digraph(self) -> bool:
        return not self.edges

    def describe(self) -> str:
        vs = ",".join(self.vertices)
        es = ",".join(f"{u}{v}" if len(u) == len(v) == 1 else f"{u}-{v}" for u, v in self.sorted_edges)
        arcs = ",".join(f"{u}->{v}" for u, v in self.sorted_arcs)
        return f"V={{{vs}}} E={{{es}}} A={{{arcs}}}"


def _check_edge(g: MixedGraph, e) -> Edge:
    key = edge_key(*e)
    if key not in g.edges:
        raise MissingElementError(f"edge {key[0]}{key[1]} is not in the graph")
    return key


def _check_arc(g: MixedGraph, a) -> Arc:
    a = (str(a[0]), str(a[1]))
    if a not in g.arcs:
        raise MissingElementError(f"arc {a[0]}->{a[1]} is not in the graph")
    return a


def delete_edge(g: MixedGraph, e) -> MixedGraph:
    key = _check_edge(g, e)
    return MixedGraph(g.vertices, g.edges - {key}, g.arcs)


def delete_arc(g: MixedGraph, a) -> MixedGraph:
    a = _check_arc(g, a)
    return MixedGraph(g.vertices, g.edges, g.arcs - {a})


def _merge(g: MixedGraph, group: set[str], drop_edges=frozenset(), drop_arcs=frozenset()) -> MixedGraph:
    """Identify the vertices of ``group`` into its smallest token."""
    target = min(group)
    rename = {v: (target if v in group else v) for v in g.vertices}
    vertices = [v for v in g.vertices if v not in group or v == target]
    edges = {edge_key(rename[u], rename[v]) for u, v in g.edges if (u, v) not in drop_edges}
    arcs = {(rename[u], rename[v]) for u, v in g.arcs if (u, v) not in drop_arcs}
    return MixedGraph(vertices, edges, arcs)


def contract(g: MixedGraph, x, *, kind: str | None = None) -> MixedGraph:
    """Contract the edge or arc ``x``.

    When both an edge uv and an arc u->v are present, ``kind`` ("edge" or
    "arc") must say which one is meant.
    """
    u, v = str(x[0]), str(x[1])
    if kind is None:
        in_e = edge_key(u, v) in g.edges
        in_a = (u, v) in g.arcs
        if in_e and in_a:
            raise GraphError(f"{u}{v} is both an edge and an arc; pass kind='edge' or kind='arc'")
        if not (in_e or in_a):
            raise MissingElementError(f"{u}{v} is neither an edge nor an arc of the graph")
        kind = EDGE if in_e else ARC
    if kind == EDGE:
        key = _check_edge(g, (u, v))
        return _merge(g, {u, v}, drop_edges={key})
    if kind == ARC:
        a = _check_arc(g, (u, v))
        return _merge(g, {u, v}, drop_arcs={a})
    raise ValueError(f"kind must be 'edge' or 'arc', not {kind!r}")


def is_subgraph(s: MixedGraph, g: MixedGraph) -> bool:
    return set(s.vertices) <= set(g.vertices) and s.edges <= g.edges and s.arcs <= g.arcs


def contract_subgraph(g: MixedGraph, s: MixedGraph) -> MixedGraph:
    """G/S: drop the edges and arcs of S and identify all of its vertices."""
    if not s.vertices:
        raise GraphError("cannot contract an empty subgraph")
    if not is_subgraph(s, g):
        raise GraphError(f"{s.describe()} is not a subgraph of {g.describe()}")
    return _merge(g, set(s.vertices), drop_edges=s.edges, drop_arcs=s.arcs)


def reverse_arc(g: MixedGraph, a, *, report: bool = False):
    """G_a: the arc ``a`` = u->v replaced by v->u.

    If v->u is already present the two copies collapse into one. With
    ``report=True`` the return value is ``(graph, collapsed)``.
    """
    u, v = _check_arc(g, a)
    collapsed = (v, u) in g.arcs
    out = MixedGraph(g.vertices, g.edges, (g.arcs - {(u, v)}) | {(v, u)})
    return (out, collapsed) if report else out


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge of ``base``.

    ``directions[i]`` orients ``base.sorted_edges[i]`` as (tail, head).
    """

    base: MixedGraph
    directions: tuple[tuple[str, str], ...]

    def __post_init__(self):
        edges = self.base.sorted_edges
        if len(edges) != len(self.directions):
            raise GraphError("an orientation must direct every edge exactly once")
        for e, d in zip(edges, self.directions):
            if edge_key(*d) != e:
                raise GraphError(f"direction {d} does not orient edge {e}")

    @classmethod
    def from_mapping(cls, base: MixedGraph, mapping: dict) -> "Orientation":
        by_key = {edge_key(*e): (str(d[0]), str(d[1])) for e, d in mapping.items()}
        missing = [e for e in base.sorted_edges if e not in by_key]
        if missing or len(by_key) != len(base.edges):
            raise GraphError("mapping must orient exactly the edges of the graph")
        return cls(base, tuple(by_key[e] for e in base.sorted_edges))

    def direction(self, e) -> tuple[str, str]:
        key = edge_key(*e)
        for edge, d in zip(self.base.sorted_edges, self.directions):
            if edge == key:
                return d
        raise MissingElementError(f"edge {key[0]}{key[1]} is not in the base graph")

    def pairs(self) -> list[tuple[str, str, str]]:
        """Directed pairs (tail, head, origin), arcs first, origin in {"arc", "edge"}."""
        out = [(u, v, ARC) for u, v in self.base.sorted_arcs]
        out.extend((u, v, EDGE) for u, v in self.directions)
        return out

    def describe(self) -> str:
        return " ".join(f"{u}{'=>' if o == ARC else '->'}{v}" for u, v, o in self.pairs()) or "(empty)"


def orientations(g: MixedGraph) -> list[Orientation]:
    """All orientations, ordered as a binary counter over the canonical edges.

    Bit i of the counter flips the i-th non-loop edge from (a, b) with a < b
    to (b, a). Loop edges have a single direction.
    """
    edges = g.sorted_edges
    free = [i for i, (u, v) in enumerate(edges) if u != v]
    result = []
    for mask in range(1 << len(free)):
        dirs = list(edges)
        for bit, i in enumerate(free):
            if mask >> bit & 1:
                u, v = edges[i]
                dirs[i] = (v, u)
        result.append(Orientation(g, tuple(dirs)))
    return result


def has_directed_cycle(vertices: Iterable[str], pairs: Iterable[tuple]) -> bool:
    """Kahn's algorithm; a loop pair (v, v) is a cycle."""
    vertices = list(vertices)
    succ: dict[str, set[str]] = {v: set() for v in vertices}
    for p in pairs:
        u, v = p[0], p[1]
        if u == v:
            return True
        succ[u].add(v)
    indeg = dict.fromkeys(vertices, 0)
    for u in vertices:
        for v in succ[u]:
            indeg[v] += 1
    stack = [v for v in vertices if indeg[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                stack.append(v)
    return seen != len(vertices)


def is_acyclic_orientation(o: Orientation) -> bool:
    return not has_directed_cycle(o.base.vertices, o.pairs())


def is_acyclic_mixed(g: MixedGraph) -> bool:
    return all(is_acyclic_orientation(o) for o in orientations(g))


def strongly_connected_components(g: MixedGraph) -> list[tuple[str, ...]]:
    """Tarjan's algorithm on a pure digraph.

    Components are ordered by their smallest token; vertices inside a
    component keep graph order.
    """
    if g.edges:
        raise GraphError("strongly connected components need a graph without edges")
    succ: dict[str, list[str]] = {v: [] for v in g.vertices}
    for u, v in g.sorted_arcs:
        succ[u].append(v)

    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    comps: list[set[str]] = []
    counter = itertools.count()

    def visit(v):
        index[v] = low[v] = next(counter)
        stack.append(v)
        on_stack.add(v)
        for w in succ[v]:
            if w not in index:
                visit(w)
                low[v] = min(low[v], low[w])
            elif w in on_stack:
                low[v] = min(low[v], index[w])
        if low[v] == index[v]:
            comp = set()
            while True:
                w = stack.pop()
                on_stack.discard(w)
                comp.add(w)
                if w == v:
                    break
            comps.append(comp)

    for v in g.vertices:
        if v not in index:
            visit(v)
    position = {v: i for i, v in enumerate(g.vertices)}
    ordered = [tuple(sorted(c, key=position.__getitem__)) for c in comps]
    return sorted(ordered, key=min)


def induced_arc_subgraph(g: MixedGraph, vertices: Iterable[str]) -> MixedGraph:
    """The vertices together with every arc of ``g`` running between them."""
    vs = set(vertices)
    return MixedGraph([v for v in g.vertices if v in vs], (), [a for a in g.arcs if a[0] in vs and a[1] in vs])


def is_strongly_connected(g: MixedGraph) -> bool:
    return not g.edges and len(g.vertices) >= 1 and len(strongly_connected_components(g)) == 1


def iter_elements(g: MixedGraph) -> Iterator[tuple[str, tuple[str, str]]]:
    for e in g.sorted_edges:
        yield EDGE, e
    for a in g.sorted_arcs:
        yield ARC, a
