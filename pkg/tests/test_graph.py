import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromix.enumeration import enumerate_mixed_graphs
from chromix.errors import GraphError, MissingElementError
from chromix.graph import (
    MixedGraph,
    Orientation,
    contract,
    contract_subgraph,
    delete_arc,
    delete_edge,
    has_directed_cycle,
    is_acyclic_mixed,
    is_acyclic_orientation,
    orientations,
    reverse_arc,
    strongly_connected_components,
)

from conftest import graph


def test_delete_edge(fig1):
    assert delete_edge(fig1, ("u", "v")) == MixedGraph("uvw", [], [("v", "w"), ("w", "u")])
    assert delete_edge(fig1, ("v", "u")) == delete_edge(fig1, ("u", "v"))
    assert delete_edge(graph("uv"), "uv") == MixedGraph("uv")
    assert delete_edge(graph("uv vw"), "uv") == graph("vw", vertices="uvw")


def test_delete_missing_edge(fig1):
    with pytest.raises(MissingElementError):
        delete_edge(fig1, ("v", "w"))


def test_delete_arc(fig1):
    assert delete_arc(fig1, ("v", "w")) == MixedGraph("uvw", [("u", "v")], [("w", "u")])
    assert delete_arc(graph(arcs="uv"), "uv") == MixedGraph("uv")
    assert delete_arc(graph(arcs="uv vu"), "uv") == graph(arcs="vu")
    with pytest.raises(MissingElementError):
        delete_arc(fig1, ("w", "v"))


def test_contract_edge_gives_two_cycle(fig1):
    h = contract(fig1, ("u", "v"))
    # merged vertex takes the smaller token
    assert h == MixedGraph("uw", [], [("u", "w"), ("w", "u")])
    assert h.vertices == ("u", "w")


def test_contract_edge_drops_loop_arc():
    g = graph("uv", "uv")
    assert contract(g, "uv", kind="edge") == MixedGraph("u")


def test_contract_arc_keeps_loop_edge():
    g = graph("uv", "uv")
    h = contract(g, "uv", kind="arc")
    assert h.edges == {("u", "u")} and h.has_loop_edge()


def test_contract_ambiguous_needs_kind():
    with pytest.raises(GraphError):
        contract(graph("uv", "uv"), "uv")


def test_contract_triangle_merges_parallels():
    h = contract(graph("ab bc ac"), "ab")
    assert h == graph("ac")


def test_contract_missing():
    with pytest.raises(MissingElementError):
        contract(graph("ab"), "bc")


def test_contract_subgraph_whole_two_cycle():
    g = graph(arcs="xw wx")
    assert contract_subgraph(g, g) == MixedGraph("w")


def test_contract_subgraph_keeps_loop_edge(fig1):
    s = MixedGraph("uvw", [], [("v", "w"), ("w", "u")])
    h = contract_subgraph(fig1, s)
    assert h.vertices == ("u",)
    assert h.edges == {("u", "u")} and not h.arcs


def test_contract_subgraph_scc():
    g = graph(arcs="ab ba bc")
    h = contract_subgraph(g, graph(arcs="ab ba"))
    assert h == graph(arcs="ac")


def test_contract_subgraph_rejects_non_subgraph():
    with pytest.raises(GraphError):
        contract_subgraph(graph(arcs="ab"), graph(arcs="ba"))
    with pytest.raises(GraphError):
        contract_subgraph(graph(arcs="ab"), MixedGraph())


def test_reverse_arc(fig1):
    assert reverse_arc(graph(arcs="uv"), "uv") == graph(arcs="vu")
    assert reverse_arc(fig1, ("w", "u")) == MixedGraph("uvw", [("u", "v")], [("v", "w"), ("u", "w")])


def test_reverse_arc_collapse_is_reported():
    g, collapsed = reverse_arc(graph(arcs="uv vu"), "uv", report=True)
    assert g == graph(arcs="vu") and collapsed
    _, collapsed = reverse_arc(graph(arcs="uv"), "uv", report=True)
    assert not collapsed


def test_orientation_counts(fig1):
    assert len(orientations(fig1)) == 2
    assert len(orientations(graph(arcs="ab bc"))) == 1
    assert len(orientations(graph("uv vw"))) == 4


def test_fig1_orientations_acyclicity(fig1):
    g1, g2 = orientations(fig1)
    assert g1.direction(("u", "v")) == ("u", "v")
    assert not is_acyclic_orientation(g1)
    assert g2.direction(("u", "v")) == ("v", "u")
    assert is_acyclic_orientation(g2)
    assert is_acyclic_orientation(orientations(graph(arcs="uv"))[0])


def test_orientation_rejects_bad_direction(fig1):
    with pytest.raises(GraphError):
        Orientation(fig1, (("v", "w"),))
    with pytest.raises(GraphError):
        Orientation.from_mapping(fig1, {})


def test_is_acyclic_mixed(fig1):
    assert not is_acyclic_mixed(fig1)
    assert is_acyclic_mixed(graph("uv", "vw"))
    assert not is_acyclic_mixed(graph("ab bc ac"))


def test_loop_pair_is_a_cycle():
    assert has_directed_cycle("a", [("a", "a")])


def test_scc():
    assert strongly_connected_components(graph(arcs="xw wx")) == [("w", "x")]
    assert strongly_connected_components(graph(arcs="ab bc")) == [("a",), ("b",), ("c",)]
    assert strongly_connected_components(graph(arcs="ab bc ca cd")) == [("a", "b", "c"), ("d",)]
    with pytest.raises(GraphError):
        strongly_connected_components(graph("ab"))


def test_graph_rejects_unknown_endpoint():
    with pytest.raises(GraphError):
        MixedGraph("a", [("a", "b")])


def test_edge_and_arc_may_coexist():
    g = graph("uv", "uv vu")
    assert len(g.edges) == 1 and len(g.arcs) == 2


def test_equality_ignores_vertex_order():
    assert MixedGraph("ab", [("a", "b")]) == MixedGraph("ba", [("b", "a")])
    assert hash(MixedGraph("ab", [("a", "b")])) == hash(MixedGraph("ba", [("b", "a")]))


# -- properties over the small universe ---------------------------------------

SMALL = [g for n in (1, 2, 3) for g in enumerate_mixed_graphs(n)]


def _brute_directed_cycle(vertices, pairs):
    """Independent cycle test: some vertex reaches itself in <= n steps."""
    adj = {v: {b for a, b in pairs if a == v} for v in vertices}
    for start in vertices:
        frontier = set(adj[start])
        for _ in range(len(vertices)):
            if start in frontier:
                return True
            frontier = {w for x in frontier for w in adj[x]}
    return False


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_orientation_count_and_distinctness(n):
    for g in enumerate_mixed_graphs(n):
        os_ = orientations(g)
        assert len(os_) == 2 ** len(g.edges)
        assert len(set(os_)) == len(os_)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_acyclicity_against_reachability(n):
    for g in enumerate_mixed_graphs(n):
        for o in orientations(g):
            pairs = [(u, v) for u, v, _ in o.pairs()]
            assert is_acyclic_orientation(o) == (not _brute_directed_cycle(g.vertices, pairs))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_digraph_acyclic_iff_singleton_sccs(n):
    for g in enumerate_mixed_graphs(n, "pure-digraph"):
        o = orientations(g)[0]
        singletons = all(len(c) == 1 for c in strongly_connected_components(g))
        assert is_acyclic_orientation(o) == singletons


def test_deletion_contraction_sizes():
    for g in SMALL:
        for e in g.sorted_edges:
            assert delete_edge(g, e).order == g.order
            assert contract(g, e, kind="edge").order == g.order - 1


def test_double_reversal_is_identity():
    for g in SMALL:
        for u, v in g.sorted_arcs:
            h, collapsed = reverse_arc(g, (u, v), report=True)
            if not collapsed:
                assert reverse_arc(h, (v, u)) == g


def test_scc_partition_is_a_partition():
    for g in enumerate_mixed_graphs(4, "pure-digraph"):
        comps = strongly_connected_components(g)
        flat = list(itertools.chain.from_iterable(comps))
        assert sorted(flat) == sorted(g.vertices)
        assert [min(c) for c in comps] == sorted(min(c) for c in comps)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_contract_independent_of_representation(data):
    n = data.draw(st.integers(2, 4))
    g = data.draw(st.sampled_from(list(enumerate_mixed_graphs(n))))
    perm = data.draw(st.permutations(list(g.vertices)))
    shuffled = MixedGraph(perm, list(g.edges)[::-1], list(g.arcs)[::-1])
    assert shuffled == g
    for e in g.sorted_edges:
        assert contract(g, e, kind="edge") == contract(shuffled, e, kind="edge")
    for a in g.sorted_arcs:
        assert contract(g, a, kind="arc") == contract(shuffled, a, kind="arc")
