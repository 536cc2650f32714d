"""Graph type, surgery operations, predicates, and text formats."""

import pytest
from hypothesis import given, settings

import oracles
from sqfpowers.families import all_graphs
from sqfpowers.graphs import (
    BUILTIN_GRAPH_NAMES,
    Graph,
    builtin_graph,
    complement,
    connected_components,
    cycle_graph,
    complete_graph,
    disjoint_union,
    edges_within,
    format_edge_list,
    induced_subgraph,
    is_chordal,
    is_connected,
    is_forest,
    is_tree,
    isolated_vertices,
    mask_to_vertices,
    named_graphs,
    parse_edge_list,
    parse_graph6,
    parse_graphs,
    path_graph,
    proliferate_leaf,
    remove_edge,
    remove_vertices,
    star_graph,
    to_graph6,
    vertices_to_mask,
)
from strategies import graphs_st


# ---------------------------------------------------------------------------
# construction and validation

def test_from_edges_canonicalizes():
    G = Graph.from_edges(3, [(3, 1), (2, 3)])
    assert G.edge_list == ((1, 3), (2, 3))
    assert G.has_edge(1, 3) and G.has_edge(3, 1)
    assert not G.has_edge(1, 2)


def test_loops_rejected():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(2, 2)])


def test_noncanonical_edges_rejected():
    with pytest.raises(ValueError):
        Graph(3, frozenset({(2, 1)}))
    with pytest.raises(ValueError):
        Graph(3, frozenset({(1, 4)}))


def test_vertex_cap():
    with pytest.raises(ValueError):
        Graph.from_edges(65, [])
    with pytest.raises(ValueError):
        Graph.from_edges(-1, [])
    Graph.from_edges(64, [(1, 64)])  # at the cap is fine


def test_source_vertices_length_checked():
    with pytest.raises(ValueError):
        Graph(2, frozenset(), source_vertices=(1,))


def test_accessors():
    G = Graph.from_edges(4, [(1, 2), (2, 3)])
    assert list(G.vertices) == [1, 2, 3, 4]
    assert G.vertex_mask == 0b1111
    assert G.degree(2) == 2
    assert G.neighbors(2) == {1, 3}
    assert G.closed_neighbors(2) == {1, 2, 3}
    assert G.degree(4) == 0
    with pytest.raises(ValueError):
        G.degree(5)
    with pytest.raises(ValueError):
        G.neighbors(0)


def test_mask_helpers_roundtrip():
    assert vertices_to_mask([3, 1]) == 0b101
    assert mask_to_vertices(0b101) == (1, 3)
    for mask in range(64):
        assert vertices_to_mask(mask_to_vertices(mask)) == mask


# ---------------------------------------------------------------------------
# surgery

def test_induced_subgraph_full_vertex_set_is_identity():
    G = Graph.from_edges(4, [(1, 2), (3, 4)])
    assert induced_subgraph(G, G.vertices) == G


def test_induced_subgraph_relabels_order_preservingly():
    G = path_graph(5)
    H = induced_subgraph(G, [2, 4, 5])
    assert H.n == 3
    assert H.source_vertices == (2, 4, 5)
    # only the edge 4-5 survives, relabeled to 2-3
    assert H.edge_list == ((2, 3),)


def test_induced_subgraph_rejects_unknown_vertex():
    with pytest.raises(ValueError):
        induced_subgraph(path_graph(3), [1, 7])


def test_remove_vertices():
    G = cycle_graph(5)
    assert remove_vertices(G, []) == G
    H = remove_vertices(G, [1])
    assert H.n == 4 and is_tree(H)  # a 4-path
    assert remove_vertices(G, G.vertices).n == 0


def test_remove_edge():
    G = cycle_graph(4)
    H = remove_edge(G, (4, 1))
    assert H.n == 4 and len(H.edges) == 3 and is_tree(H)
    with pytest.raises(ValueError):
        remove_edge(H, (1, 4))


def test_edges_within_keeps_labels():
    G = cycle_graph(4)
    H = edges_within(G, [1, 2, 3])
    assert H.n == 4
    assert H.edge_list == ((1, 2), (2, 3))


def test_complement_small():
    assert complement(complete_graph(4)).edges == frozenset()
    assert complement(Graph.from_edges(3, [])) == complete_graph(3)
    # C5 is self-complementary
    C5 = cycle_graph(5)
    comp = complement(C5)
    assert len(comp.edges) == 5
    assert all(comp.degree(v) == 2 for v in comp.vertices)


def test_disjoint_union():
    G = disjoint_union(path_graph(2), path_graph(3))
    assert G.n == 5
    assert G.edge_list == ((1, 2), (3, 4), (4, 5))
    with pytest.raises(ValueError):
        disjoint_union(Graph.from_edges(40, []), Graph.from_edges(40, []))


def test_proliferate_leaf_postconditions():
    G = path_graph(4)  # leaf 1 hangs off support 2
    H = proliferate_leaf(G, 1, 3)
    assert H.n == 6
    assert H.degree(2) == G.degree(2) + 2  # two extra leaves
    new_leaves = [1, 5, 6]
    assert all(H.degree(v) == 1 and H.neighbors(v) == {2} for v in new_leaves)
    assert proliferate_leaf(G, 1, 1) == G


def test_proliferate_leaf_errors():
    G = path_graph(4)
    with pytest.raises(ValueError):
        proliferate_leaf(G, 2, 2)  # not a leaf
    with pytest.raises(ValueError):
        proliferate_leaf(G, 1, 0)
    with pytest.raises(ValueError):
        proliferate_leaf(Graph.from_edges(64, [(1, 2)]), 1, 2)


def test_isolated_vertices():
    G = Graph.from_edges(5, [(1, 2)])
    assert isolated_vertices(G) == {3, 4, 5}
    assert isolated_vertices(complete_graph(3)) == frozenset()


# ---------------------------------------------------------------------------
# predicates

def test_connected_components():
    G = Graph.from_edges(6, [(1, 2), (2, 3), (5, 6)])
    comps = connected_components(G)
    assert comps == [frozenset({1, 2, 3}), frozenset({4}), frozenset({5, 6})]
    assert not is_connected(G)
    assert is_connected(path_graph(4))
    assert is_connected(Graph.from_edges(0, []))


def test_forest_and_tree_predicates():
    assert is_tree(path_graph(5))
    assert is_forest(disjoint_union(path_graph(2), path_graph(3)))
    assert not is_tree(disjoint_union(path_graph(2), path_graph(3)))
    assert not is_forest(cycle_graph(3))
    assert not is_tree(Graph.from_edges(0, []))
    assert is_forest(Graph.from_edges(0, []))
    assert is_tree(Graph.from_edges(1, []))


def test_chordal_knowns():
    assert is_chordal(complete_graph(5))
    assert is_chordal(path_graph(6))
    assert is_chordal(star_graph(4))
    assert is_chordal(cycle_graph(3))
    assert not is_chordal(cycle_graph(4))
    assert not is_chordal(cycle_graph(7))
    # two triangles sharing nothing, plus a chorded 4-cycle
    assert is_chordal(Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]))


def test_chordal_matches_brute_force_exhaustively():
    # every graph on at most 8 vertices, up to isomorphism
    for n in range(1, 9):
        for G in all_graphs(n):
            assert is_chordal(G) == (not oracles.brute_has_chordless_cycle(G)), (
                f"chordality mismatch on {to_graph6(G)}"
            )


def test_constructors():
    assert path_graph(1).n == 1
    assert len(cycle_graph(3).edges) == 3
    assert star_graph(1).edge_list == ((1, 2),)
    assert len(complete_graph(5).edges) == 10
    for bad in (path_graph, complete_graph):
        with pytest.raises(ValueError):
            bad(0)
    with pytest.raises(ValueError):
        cycle_graph(2)
    with pytest.raises(ValueError):
        star_graph(0)


# ---------------------------------------------------------------------------
# builtins

def test_builtin_names_resolve():
    for name in BUILTIN_GRAPH_NAMES:
        G = builtin_graph(name)
        assert G.n >= 1
    with pytest.raises(ValueError):
        builtin_graph("petersen")


def test_builtin_shapes():
    ng = named_graphs()
    assert ng.fig1.n == 9 and len(ng.fig1.edges) == 8 and is_tree(ng.fig1)
    assert sorted(ng.fig1.degree(v) for v in ng.fig1.vertices) == [
        1, 1, 1, 1, 2, 2, 2, 3, 3,
    ]
    assert ng.fig2.n == 8 and len(ng.fig2.edges) == 8
    assert [len(c) for c in connected_components(ng.fig2)] == [4, 4]
    assert all(ng.fig2.degree(v) == 2 for v in ng.fig2.vertices)
    assert ng.h == path_graph(4)
    assert ng.h_prime == path_graph(5)
    assert ng.h_tilde == path_graph(6)
    assert ng.h_double_prime.n == 6 and is_tree(ng.h_double_prime)
    assert sorted(ng.h_double_prime.degree(v) for v in ng.h_double_prime.vertices) == [
        1, 1, 1, 2, 2, 3,
    ]
    assert builtin_graph("c7") == cycle_graph(7)


# ---------------------------------------------------------------------------
# edge-list text format

def test_parse_edge_list_with_header_and_comments():
    text = "# a comment\nn 5\n1 2\n2 3  # trailing\n\n"
    G = parse_edge_list(text)
    assert G.n == 5 and G.edge_list == ((1, 2), (2, 3))


def test_parse_edge_list_infers_n():
    G = parse_edge_list("1 2\n2 7\n")
    assert G.n == 7


def test_parse_edge_list_errors():
    with pytest.raises(ValueError):
        parse_edge_list("n 3\nn 4\n1 2\n")  # duplicate header
    with pytest.raises(ValueError):
        parse_edge_list("n 3 9\n")  # malformed header
    with pytest.raises(ValueError):
        parse_edge_list("1 2 3\n")  # not a pair
    with pytest.raises(ValueError):
        parse_edge_list("0 2\n")  # nonpositive vertex
    with pytest.raises(ValueError):
        parse_edge_list("n 3\n2 5\n")  # exceeds declared n
    with pytest.raises(ValueError):
        parse_edge_list("1 1\n")  # loop


def test_format_parse_edge_list_roundtrip():
    G = builtin_graph("fig1")
    assert parse_edge_list(format_edge_list(G)) == G
    assert format_edge_list(G).startswith("n 9\n")


# ---------------------------------------------------------------------------
# graph6 format

def test_graph6_hand_checked_encodings():
    assert to_graph6(complete_graph(4)) == "C~"
    assert to_graph6(complete_graph(3)) == "Bw"
    assert to_graph6(Graph.from_edges(1, [])) == "@"
    assert to_graph6(Graph.from_edges(2, [(1, 2)])) == "A_"
    assert to_graph6(Graph.from_edges(2, [])) == "A?"
    assert parse_graph6("C~") == complete_graph(4)
    assert parse_graph6(">>graph6<<A_") == Graph.from_edges(2, [(1, 2)])


def test_graph6_long_form():
    for n in (63, 64):
        G = Graph.from_edges(n, [(1, n), (2, 3)])
        enc = to_graph6(G)
        assert enc.startswith("~??") or enc.startswith("~?@")
        assert parse_graph6(enc) == G


def test_graph6_errors():
    with pytest.raises(ValueError):
        parse_graph6("")
    with pytest.raises(ValueError):
        parse_graph6("C")  # truncated body for n=4
    with pytest.raises(ValueError):
        parse_graph6("C~\x19")  # character below the graph6 range
    with pytest.raises(ValueError):
        parse_graph6("~?B?" + "?" * 1000)  # n = 128 exceeds the cap


@settings(max_examples=150, deadline=None)
@given(graphs_st(max_n=12))
def test_graph6_roundtrip(G):
    assert parse_graph6(to_graph6(G)) == G


def test_parse_graphs_dispatch():
    lines = "\n".join(to_graph6(G) for G in (complete_graph(4), path_graph(3)))
    parsed = parse_graphs(lines)
    assert parsed == [complete_graph(4), path_graph(3)]
    assert parse_graphs("n 3\n1 2\n") == [parse_edge_list("n 3\n1 2\n")]
    # digit-only lines are treated as an edge list even with no header
    assert parse_graphs("1 2\n") == [Graph.from_edges(2, [(1, 2)])]


# ---------------------------------------------------------------------------
# property tests

@settings(max_examples=100, deadline=None)
@given(graphs_st(max_n=9))
def test_complement_involution(G):
    assert complement(complement(G)) == G


@settings(max_examples=100, deadline=None)
@given(graphs_st(max_n=9))
def test_induced_on_everything_is_identity(G):
    assert induced_subgraph(G, G.vertices) == G
    assert remove_vertices(G, []) == G


@settings(max_examples=100, deadline=None)
@given(graphs_st(min_n=1, max_n=9))
def test_components_partition_vertices(G):
    comps = connected_components(G)
    seen = sorted(v for c in comps for v in c)
    assert seen == list(G.vertices)
