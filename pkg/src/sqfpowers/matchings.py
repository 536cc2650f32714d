"""Matching invariants of simple graphs.

A k-matching is a set of k pairwise disjoint edges.  Three numbers are
computed throughout: the matching number nu (largest k with a k-matching),
the induced matching number nu1 (largest matching whose edges pairwise form
gaps), and the restricted matching number nu0 (largest matching containing
one edge that forms a gap with every other edge of the matching).  Two edges
form a gap when no edge of the graph joins them, i.e. they induce a
2-matching.  Always nu1 <= nu0 <= nu.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graphs import (
    Edge,
    Graph,
    connected_components,
    is_tree,
    remove_vertices,
    vertices_to_mask,
)

Matching = tuple[Edge, ...]


def edge_mask(e: Edge) -> int:
    return (1 << (e[0] - 1)) | (1 << (e[1] - 1))


def enumerate_matchings(G: Graph, k: int) -> Iterator[Matching]:
    """Yield every k-matching, lexicographically by sorted edge list."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        yield ()
        return
    edges = G.edge_list
    masks = [edge_mask(e) for e in edges]
    m = len(edges)
    chosen: list[Edge] = []

    def rec(start: int, used: int) -> Iterator[Matching]:
        need = k - len(chosen)
        if need == 0:
            yield tuple(chosen)
            return
        for i in range(start, m - need + 1):
            if masks[i] & used:
                continue
            chosen.append(edges[i])
            yield from rec(i + 1, used | masks[i])
            chosen.pop()

    yield from rec(0, 0)


def is_matching(G: Graph, edges: Iterable[Edge]) -> bool:
    used = 0
    for e in edges:
        if not G.has_edge(*e):
            return False
        mask = edge_mask(e)
        if mask & used:
            return False
        used |= mask
    return True


def _nu(adj: tuple[int, ...], avail: int, memo: dict[int, int]) -> int:
    """Matching number of the subgraph on the vertices in `avail`."""
    cached = memo.get(avail)
    if cached is not None:
        return cached
    rest = avail
    v = 0
    nb = 0
    while rest:
        low = rest & -rest
        v = low.bit_length()
        nb = adj[v] & avail
        if nb:
            break
        rest ^= low
    else:
        memo[avail] = 0
        return 0
    vbit = 1 << (v - 1)
    best = _nu(adj, avail ^ vbit, memo)  # leave v unmatched
    while nb:
        wbit = nb & -nb
        nb ^= wbit
        best = max(best, 1 + _nu(adj, avail ^ vbit ^ wbit, memo))
    memo[avail] = best
    return best


def matching_number(G: Graph) -> int:
    return _nu(G.adjacency, G.vertex_mask, {})


def matching_number_within(G: Graph, vertices: Iterable[int]) -> int:
    """Matching number of the subgraph induced on the given vertices."""
    return _nu(G.adjacency, vertices_to_mask(vertices), {})


def _closed_edge_mask(G: Graph, e: Edge) -> int:
    adj = G.adjacency
    return adj[e[0]] | adj[e[1]] | edge_mask(e)


def is_gap(G: Graph, e: Edge, f: Edge) -> bool:
    """True when e and f induce a 2-matching (no edge of G joins them)."""
    for edge in (e, f):
        if not G.has_edge(*edge):
            raise ValueError(f"edge {edge} not present")
    return edge_mask(f) & _closed_edge_mask(G, e) == 0


def is_gap_free(G: Graph) -> bool:
    """No pair of edges forms a gap; equivalently nu1 <= 1."""
    return induced_matching_number(G) <= 1


def induced_matching_number(G: Graph) -> int:
    """Largest matching whose edges pairwise form gaps."""
    edges = G.edge_list
    if not edges:
        return 0
    emasks = [edge_mask(e) for e in edges]
    closed = [_closed_edge_mask(G, e) for e in edges]
    m = len(edges)

    def rec(start: int, blocked: int, count: int) -> int:
        best = count
        for i in range(start, m):
            if emasks[i] & blocked:
                continue
            best = max(best, rec(i + 1, blocked | closed[i], count + 1))
        return best

    return rec(0, 0, 0)


def restricted_matching_number(G: Graph) -> int:
    """Largest matching with an edge forming a gap with every other member.

    For each edge e the other members must pairwise be disjoint edges drawn
    from the set of edges forming a gap with e, so the answer is
    max over e of 1 + (matching number of the gap-mates of e).
    """
    edges = G.edge_list
    if not edges:
        return 0
    best = 1
    for e in edges:
        closed = _closed_edge_mask(G, e)
        mates = [f for f in edges if edge_mask(f) & closed == 0]
        if not mates:
            continue
        sub = Graph(G.n, frozenset(mates))
        best = max(best, 1 + matching_number(sub))
    return best


def has_perfect_matching(G: Graph) -> bool:
    return G.n % 2 == 0 and 2 * matching_number(G) == G.n


def tree_perfect_matching_criterion(G: Graph) -> bool:
    """Perfect-matching test for trees by vertex deletion.

    A tree has a perfect matching exactly when deleting any single vertex
    leaves exactly one odd component.
    """
    if not is_tree(G):
        raise ValueError("criterion applies to trees only")
    for v in G.vertices:
        H = remove_vertices(G, [v])
        odd = sum(1 for comp in connected_components(H) if len(comp) % 2 == 1)
        if odd != 1:
            return False
    return True


def enumerate_maximal_matchings(G: Graph) -> Iterator[Matching]:
    """Yield every maximal matching, lexicographically by sorted edge list."""
    edges = G.edge_list
    masks = [edge_mask(e) for e in edges]
    m = len(edges)
    chosen: list[Edge] = []

    def rec(start: int, used: int) -> Iterator[Matching]:
        if all(mask & used for mask in masks):
            yield tuple(chosen)
            return
        for i in range(start, m):
            if masks[i] & used:
                continue
            chosen.append(edges[i])
            yield from rec(i + 1, used | masks[i])
            chosen.pop()

    yield from rec(0, 0)


def is_equimatchable(G: Graph) -> bool:
    """Every maximal matching has maximum size."""
    nu = matching_number(G)
    return all(len(M) == nu for M in enumerate_maximal_matchings(G))


def greedy_matching_extension(G: Graph, V: Iterable[int]) -> list[Edge]:
    """Edges extending a vertex set of an equimatchable graph one step at a time.

    Returns edges e_1, ..., e_r such that adding the endpoints of e_1..e_i to V
    raises the induced matching number by exactly i, ending at nu(G).
    """
    if not is_equimatchable(G):
        raise ValueError("graph is not equimatchable")
    adj = G.adjacency
    memo: dict[int, int] = {}
    covered = vertices_to_mask(V)
    target = _nu(adj, G.vertex_mask, memo)
    current = _nu(adj, covered, memo)
    picked: list[Edge] = []
    while current < target:
        for e in G.edge_list:
            trial = covered | edge_mask(e)
            if _nu(adj, trial, memo) == current + 1:
                picked.append(e)
                covered = trial
                current += 1
                break
        else:
            raise RuntimeError("no extending edge found; equimatchable guarantee violated")
    return picked
