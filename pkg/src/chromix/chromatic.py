"""Weak and strong chromatic polynomials of mixed graphs, and the checks of
the identities relating them to orientations and order polynomials.

The engine works by deletion-contraction on edges,
    chi(G) = chi(G - e) - chi(G / e),
until no edge is left. A pure digraph is then reduced by contracting each
nontrivial strongly connected component (all of its vertices must share a
color), which leaves an acyclic digraph. Weak colorings of an acyclic
digraph are the order-preserving maps P -> [k] of its reachability order;
x maps to the chain of order ideals {x <= 1} <= ... <= {x <= k-1}, so they
are counted as multichains in the lattice of order ideals.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field

from .enumeration import (
    count_acyclic_orientations,
    count_compatible,
    count_phi,
    count_weak_colorings,
    count_strong_colorings,
    enumerate_mixed_graphs,
    oracle_bound,
    random_mixed_graph,
    reciprocity_rhs_strong,
    reciprocity_rhs_weak,
)
from .errors import BoundExceededError, GraphError, PreconditionError
from .graph import (
    ARC,
    EDGE,
    MixedGraph,
    contract,
    contract_subgraph,
    delete_arc,
    delete_edge,
    edge_key,
    induced_arc_subgraph,
    is_acyclic_mixed,
    is_strongly_connected,
    is_subgraph,
    orientations,
    reverse_arc,
    strongly_connected_components,
)
from .polynomial import Polynomial, interpolate_counts
from .poset import all_labelings, enumerate_posets, verify_lemma5, verify_stanley_order
from .report import THEOREMS, VerificationReport

K = Polynomial([0, 1])

SWEEP_BOUNDS = {"stanley-graph": 5, "stanley-order": 5}
DEFAULT_SWEEP_BOUND = 4


def _measure(g: MixedGraph) -> tuple[int, int]:
    return (len(g.edges), len(g.vertices))


def _descend(parent: MixedGraph, child: MixedGraph) -> MixedGraph:
    assert _measure(child) < _measure(parent), "deletion-contraction step did not shrink the graph"
    return child


@functools.lru_cache(maxsize=1 << 16)
def weak_chromatic_polynomial(g: MixedGraph) -> Polynomial:
    if g.has_loop_edge():
        return Polynomial()
    if g.edges:
        e = g.sorted_edges[0]
        minus = _descend(g, delete_edge(g, e))
        quotient = _descend(g, contract(g, e, kind=EDGE))
        return weak_chromatic_polynomial(minus) - weak_chromatic_polynomial(quotient)
    components = [c for c in strongly_connected_components(g) if len(c) > 1]
    if components:
        h = g
        for c in components:
            # other components keep their names: each merge renames only its own vertices
            h = contract_subgraph(h, induced_arc_subgraph(h, c))
        return weak_chromatic_polynomial(_descend(g, h))
    return acyclic_digraph_polynomial(g)


def _order_ideals(g: MixedGraph) -> tuple[list[int], int]:
    index = {v: i for i, v in enumerate(g.vertices)}
    below = [0] * len(index)
    for u, v in g.arcs:
        below[index[v]] |= 1 << index[u]
    ideals = {0}
    frontier = [0]
    while frontier:
        ideal = frontier.pop()
        for i, need in enumerate(below):
            bit = 1 << i
            if not ideal & bit and need & ~ideal == 0:
                grown = ideal | bit
                if grown not in ideals:
                    ideals.add(grown)
                    frontier.append(grown)
    return sorted(ideals, key=lambda m: (bin(m).count("1"), m)), (1 << len(index)) - 1


def count_order_preserving(g: MixedGraph, kmax: int) -> list[int]:
    """Weak colorings of an acyclic digraph for k = 1..kmax via multichains of order ideals."""
    ideals, full = _order_ideals(g)
    contained = [[j for j, b in enumerate(ideals) if b & ~a == 0] for a in ideals]
    chains = [1] * len(ideals)  # chains ending at each ideal, for k = 1
    top = ideals.index(full)
    counts = [chains[top]]
    for _ in range(kmax - 1):
        chains = [sum(chains[j] for j in below) for below in contained]
        counts.append(chains[top])
    return counts


def acyclic_digraph_polynomial(g: MixedGraph) -> Polynomial:
    if g.edges:
        raise GraphError("expected a digraph")
    n = g.order
    counts = count_order_preserving(g, n + 2)
    return interpolate_counts(lambda k: counts[k - 1], n)


def strong_reduction(g: MixedGraph) -> MixedGraph:
    """Add the edge uv next to every arc u->v: c(u) <= c(v) and c(u) != c(v)
    together force c(u) < c(v)."""
    return MixedGraph(g.vertices, set(g.edges) | {edge_key(u, v) for u, v in g.arcs}, g.arcs)


def strong_chromatic_polynomial(g: MixedGraph) -> Polynomial:
    return weak_chromatic_polynomial(strong_reduction(g))


def _oracle_guard(g: MixedGraph):
    if g.order > oracle_bound():
        raise BoundExceededError(f"{g.order} vertices exceeds the brute-force bound of {oracle_bound()}")


@functools.lru_cache(maxsize=1 << 16)
def weak_chromatic_via_oracle(g: MixedGraph) -> Polynomial:
    _oracle_guard(g)
    return interpolate_counts(lambda k: count_weak_colorings(g, k), g.order)


@functools.lru_cache(maxsize=1 << 14)
def strong_chromatic_via_oracle(g: MixedGraph) -> Polynomial:
    _oracle_guard(g)
    return interpolate_counts(lambda k: count_strong_colorings(g, k), g.order)


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _identity_report(subject: str, theorem: str, lhs: Polynomial, rhs: Polynomial, note: str = "") -> VerificationReport:
    """Compare two polynomials at max-degree + 2 points (more than enough to
    decide equality exactly)."""
    report = VerificationReport(subject, theorem)
    degree = max(lhs.degree, rhs.degree, 0)
    for k in range(0, degree + 2):
        report.add(k, lhs(k), rhs(k), note)
    assert report.verdict == (lhs == rhs)
    return report


def check_prop_edge_dc(g: MixedGraph, e) -> VerificationReport:
    """chi(G) = chi(G - e) - chi(G / e), every term by brute-force interpolation."""
    e = edge_key(*e)
    lhs = weak_chromatic_via_oracle(g)
    rhs = weak_chromatic_via_oracle(delete_edge(g, e)) - weak_chromatic_via_oracle(contract(g, e, kind=EDGE))
    return _identity_report(g.describe(), "prop-3.1", lhs, rhs, f"e={e[0]}{e[1]}")


def check_prop_arc_identity(g: MixedGraph, a) -> VerificationReport:
    """chi(G) + chi(G_a) = chi(G - a) + chi(G / a)."""
    a = (str(a[0]), str(a[1]))
    oracle = weak_chromatic_via_oracle
    lhs = oracle(g) + oracle(reverse_arc(g, a))
    rhs = oracle(delete_arc(g, a)) + oracle(contract(g, a, kind=ARC))
    return _identity_report(g.describe(), "prop-3.2", lhs, rhs, f"a={a[0]}->{a[1]}")


def check_strongly_connected(g: MixedGraph) -> VerificationReport:
    if not is_strongly_connected(g):
        raise PreconditionError(f"{g.describe()} is not a strongly connected digraph")
    return _identity_report(g.describe(), "prop-3.3", weak_chromatic_via_oracle(g), K)


def check_scc_contraction(g: MixedGraph, s: MixedGraph) -> VerificationReport:
    if not is_subgraph(s, g):
        raise PreconditionError(f"{s.describe()} is not a subgraph of {g.describe()}")
    if s.edges or not is_strongly_connected(s):
        raise PreconditionError(f"{s.describe()} is not a strongly connected directed subgraph")
    lhs = weak_chromatic_via_oracle(g)
    rhs = weak_chromatic_via_oracle(contract_subgraph(g, s))
    return _identity_report(g.describe(), "prop-3.4", lhs, rhs, f"S={{{','.join(s.vertices)}}}")


def verify_weak_reciprocity(g: MixedGraph, kmax: int, force: bool = False) -> VerificationReport:
    """(-1)^|V| chi(-k) against the (coloring, intercompatible acyclic orientation) pairs.

    Only claimed for acyclic mixed graphs; ``force`` runs the comparison anyway.
    """
    if not force and not is_acyclic_mixed(g):
        raise PreconditionError(f"{g.describe()} is not an acyclic mixed graph (use force to compare anyway)")
    chi = weak_chromatic_polynomial(g)
    sign = _sign(g.order)
    report = VerificationReport(g.describe(), "weak-reciprocity")
    for k in range(1, kmax + 1):
        report.add(k, sign * chi(-k), reciprocity_rhs_weak(g, k))
    return report


def verify_strong_reciprocity(g: MixedGraph, kmax: int) -> VerificationReport:
    chi = strong_chromatic_polynomial(g)
    sign = _sign(g.order)
    report = VerificationReport(g.describe(), "strong-reciprocity")
    for k in range(1, kmax + 1):
        report.add(k, sign * chi(-k), reciprocity_rhs_strong(g, k))
    return report


def verify_stanley_graph(g: MixedGraph, kmax: int) -> VerificationReport:
    if g.arcs:
        raise PreconditionError("Stanley's theorem is about graphs without arcs")
    chi = weak_chromatic_polynomial(g)
    sign = _sign(g.order)
    report = VerificationReport(g.describe(), "stanley-graph")
    for k in range(1, kmax + 1):
        report.add(k, sign * chi(-k), reciprocity_rhs_strong(g, k))
    report.add(1, sign * chi(-1), count_acyclic_orientations(g), "acyclic orientations")
    return report


def verify_lemma4(g: MixedGraph, kmax: int) -> VerificationReport:
    """chi(k) as the sum over orientations of phi(k)."""
    if not is_acyclic_mixed(g):
        raise PreconditionError(f"{g.describe()} is not an acyclic mixed graph")
    chi = weak_chromatic_polynomial(g)
    report = VerificationReport(g.describe(), "lemma-4")
    os_ = orientations(g)
    for k in range(1, kmax + 1):
        report.add(k, chi(k), sum(count_phi(g, o, k) for o in os_))
    return report


@dataclass
class SweepSummary:
    theorem: str
    n: int
    kmax: int
    universe_size: int = 0
    filtered_size: int = 0
    checks: int = 0
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "kmax": self.kmax,
            "universe_size": self.universe_size,
            "filtered_size": self.filtered_size,
            "checks": self.checks,
            "passed": self.passed,
            "failures": self.failures,
        }

    def format(self) -> str:
        lines = [
            f"theorem: {self.theorem}  n={self.n}  kmax={self.kmax}",
            f"universe: {self.universe_size}",
            f"filtered: {self.filtered_size}",
            f"checks:   {self.checks}",
            f"passed:   {self.passed}",
            f"failures: {len(self.failures)}",
        ]
        lines.extend(self.failures)
        return "\n".join(lines)


def _subjects(n: int, kmax: int, theorem: str):
    """Yield (universe member, list of report thunks) for one sweep."""
    if theorem == "stanley-order":
        for p in enumerate_posets(n):
            yield p, [functools.partial(verify_stanley_order, p, w, kmax) for w in all_labelings(p)]
        return
    flt = "pure-graph" if theorem == "stanley-graph" else "all"
    for g in enumerate_mixed_graphs(n, flt, bound=n):
        if theorem in ("weak-reciprocity", "lemma-4", "lemma-5"):
            if not is_acyclic_mixed(g):
                yield g, None
                continue
            fn = {"weak-reciprocity": verify_weak_reciprocity, "lemma-4": verify_lemma4, "lemma-5": verify_lemma5}[theorem]
            yield g, [functools.partial(fn, g, kmax)]
        elif theorem == "strong-reciprocity":
            yield g, [functools.partial(verify_strong_reciprocity, g, kmax)]
        elif theorem == "stanley-graph":
            yield g, [functools.partial(verify_stanley_graph, g, kmax)]
        elif theorem == "prop-3.1":
            yield g, [functools.partial(check_prop_edge_dc, g, e) for e in g.sorted_edges] or None
        elif theorem == "prop-3.2":
            yield g, [functools.partial(check_prop_arc_identity, g, a) for a in g.sorted_arcs] or None
        elif theorem == "prop-3.3":
            yield g, ([functools.partial(check_strongly_connected, g)] if is_strongly_connected(g) else None)
        elif theorem == "prop-3.4":
            arcs_only = MixedGraph(g.vertices, (), g.arcs)
            sccs = [c for c in strongly_connected_components(arcs_only) if len(c) > 1]
            yield g, [functools.partial(check_scc_contraction, g, induced_arc_subgraph(g, c)) for c in sccs] or None


def exhaustive_verify(n: int, kmax: int, theorem: str) -> SweepSummary:
    """Run one verifier over every labeled instance on n vertices (or elements)."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    limit = SWEEP_BOUNDS.get(theorem, DEFAULT_SWEEP_BOUND)
    if n > limit:
        raise BoundExceededError(f"n={n} exceeds the sweep bound of {limit} for {theorem}")
    summary = SweepSummary(theorem, n, kmax)
    for _, thunks in _subjects(n, kmax, theorem):
        summary.universe_size += 1
        if not thunks:
            continue
        summary.filtered_size += 1
        subject_ok = True
        for thunk in thunks:
            report = thunk()
            summary.checks += 1
            if not report.verdict:
                subject_ok = False
                summary.failures.append(report.format_table())
        summary.passed += subject_ok
    summary.failures.sort()
    return summary


def random_sample(n: int, count: int, seed: int = 0) -> list[MixedGraph]:
    rng = random.Random(seed)
    return [random_mixed_graph(n, rng) for _ in range(count)]


def clear_caches():
    weak_chromatic_polynomial.cache_clear()
    weak_chromatic_via_oracle.cache_clear()
    strong_chromatic_via_oracle.cache_clear()

