"""Instance families for the verification harness.

Exhaustive families enumerate pairwise non-isomorphic graphs (n <= 8, via a
minimum-over-permutations canonical edge code batched through numpy), trees
(leaf extension deduplicated by center-rooted canonical forms), and forests
without isolated vertices (multisets of trees).  Random families draw from a
recorded 64-bit seed so every run is reproducible.
"""

from __future__ import annotations

import functools
import itertools
import random
import re
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .graphs import Graph, disjoint_union, is_tree, parse_graphs
from .ideals import MonomialIdeal, minimalize, monomial

GRAPH_ENUM_CAP = 8
DEFAULT_SEED = 0x5EED5EED5EED5EED


# ---------------------------------------------------------------------------
# canonical forms

def _edge_slots(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


@functools.lru_cache(maxsize=None)
def _perm_powers(n: int) -> np.ndarray:
    """(n!, C(n,2)) float array of 2^(edge slot image) per vertex permutation.

    Codes stay below 2^28 for n <= 8, so float64 arithmetic is exact and the
    min-over-permutations reduces to fast BLAS operations.
    """
    slots = _edge_slots(n)
    index = {s: i for i, s in enumerate(slots)}
    perms = list(itertools.permutations(range(n)))
    powers = np.empty((len(perms), len(slots)), dtype=np.float64)
    for r, perm in enumerate(perms):
        for c, (i, j) in enumerate(slots):
            a, b = perm[i], perm[j]
            powers[r, c] = float(1 << index[(a, b) if a < b else (b, a)])
    return powers


def canonical_code(G: Graph) -> int:
    """Isomorphism-invariant integer: minimal edge-indicator code over relabelings."""
    if G.n > GRAPH_ENUM_CAP:
        raise ValueError(f"canonical codes support n <= {GRAPH_ENUM_CAP}")
    if G.n <= 1:
        return 0
    slots = _edge_slots(G.n)
    index = {s: i for i, s in enumerate(slots)}
    cols = [index[(u - 1, v - 1)] for u, v in G.edge_list]
    if not cols:
        return 0
    powers = _perm_powers(G.n)
    return int(powers[:, cols].sum(axis=1).min())


def _graph_from_code(n: int, code: int) -> Graph:
    slots = _edge_slots(n)
    edges = [(i + 1, j + 1) for k, (i, j) in enumerate(slots) if code >> k & 1]
    return Graph.from_edges(n, edges)


@functools.lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """Non-isomorphic graphs on exactly n vertices, canonical representatives."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > GRAPH_ENUM_CAP:
        raise ValueError(f"graph enumeration capped at n = {GRAPH_ENUM_CAP}")
    if n == 1:
        return (Graph.from_edges(1, []),)
    slots = _edge_slots(n)
    index = {s: i for i, s in enumerate(slots)}
    powers = _perm_powers(n)
    new_cols = [index[(v - 1, n - 1)] for v in range(1, n)]
    new_block = powers[:, new_cols]  # (n!, n-1)
    subsets = np.array(
        [[(s >> b) & 1 for s in range(1 << (n - 1))] for b in range(n - 1)],
        dtype=np.float64,
    )  # (n-1, 2^(n-1))
    codes: set[int] = set()
    for G in all_graphs(n - 1):
        cols = [index[(u - 1, v - 1)] for u, v in G.edge_list]
        base = powers[:, cols].sum(axis=1) if cols else np.zeros(len(powers))
        all_codes = base[:, None] + new_block @ subsets
        codes.update(int(c) for c in all_codes.min(axis=0))
    return tuple(_graph_from_code(n, c) for c in sorted(codes))


def all_graphs_up_to(n: int) -> list[Graph]:
    out: list[Graph] = []
    for k in range(1, n + 1):
        out.extend(all_graphs(k))
    return out


def tree_centers(G: Graph) -> list[int]:
    """The one or two middle vertices of a tree, by repeated leaf stripping."""
    if G.n == 1:
        return [1]
    degrees = {v: G.degree(v) for v in G.vertices}
    adj = {v: set(G.neighbors(v)) for v in G.vertices}
    layer = [v for v in G.vertices if degrees[v] == 1]
    alive = G.n
    while alive > 2:
        nxt = []
        for v in layer:
            alive -= 1
            for u in adj[v]:
                adj[u].discard(v)
                degrees[u] -= 1
                if degrees[u] == 1:
                    nxt.append(u)
            adj[v] = set()
        layer = nxt
    return sorted(layer)


def tree_canonical_form(G: Graph):
    """Nested-tuple canonical form of a tree, rooted at its center(s)."""
    if not is_tree(G):
        raise ValueError("canonical form applies to trees")

    def rooted(v: int, parent: int):
        return tuple(sorted(rooted(u, v) for u in G.neighbors(v) if u != parent))

    return min(rooted(c, 0) for c in tree_centers(G))


@functools.lru_cache(maxsize=None)
def all_trees(n: int) -> tuple[Graph, ...]:
    """Non-isomorphic trees on exactly n vertices via leaf extension."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return (Graph.from_edges(1, []),)
    seen: dict[tuple, Graph] = {}
    for T in all_trees(n - 1):
        for v in T.vertices:
            cand = Graph.from_edges(n, list(T.edge_list) + [(v, n)])
            key = tree_canonical_form(cand)
            if key not in seen:
                seen[key] = cand
    return tuple(seen[k] for k in sorted(seen))


def all_trees_up_to(n: int) -> list[Graph]:
    out: list[Graph] = []
    for k in range(1, n + 1):
        out.extend(all_trees(k))
    return out


def _partitions_min2(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 1, -1):
        for rest in _partitions_min2(n - p, p):
            yield (p,) + rest


@functools.lru_cache(maxsize=None)
def all_forests(n: int) -> tuple[Graph, ...]:
    """Non-isomorphic forests on exactly n vertices with no isolated vertices."""
    out: list[Graph] = []
    for parts in _partitions_min2(n):
        pools = []
        for size, group in itertools.groupby(parts):
            count = len(list(group))
            trees = all_trees(size)
            pools.append(
                list(itertools.combinations_with_replacement(range(len(trees)), count))
            )
            pools[-1] = [(size, combo) for combo in pools[-1]]
        for picks in itertools.product(*pools):
            forest: Graph | None = None
            for size, combo in picks:
                for idx in combo:
                    piece = all_trees(size)[idx]
                    forest = piece if forest is None else disjoint_union(forest, piece)
            assert forest is not None
            out.append(forest)
    return tuple(out)


def all_forests_up_to(n: int) -> list[Graph]:
    out: list[Graph] = []
    for k in range(2, n + 1):
        out.extend(all_forests(k))
    return out


def disjoint_edges_graph(r: int) -> Graph:
    """Perfect matching on 2r vertices: edges (1,2), (3,4), ..."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return Graph.from_edges(2 * r, [(2 * i - 1, 2 * i) for i in range(1, r + 1)])


# ---------------------------------------------------------------------------
# random families

def random_graphs(count: int, max_n: int, seed: int = DEFAULT_SEED) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        p = rng.uniform(0.1, 0.9)
        edges = [
            (u, v)
            for u in range(1, n)
            for v in range(u + 1, n + 1)
            if rng.random() < p
        ]
        out.append(Graph.from_edges(n, edges))
    return out


def random_squarefree_ideals(
    count: int,
    max_n: int = 8,
    max_gens: int = 8,
    seed: int = DEFAULT_SEED,
) -> list[MonomialIdeal]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        target = rng.randint(1, max_gens)
        masks = set()
        for _ in range(target):
            size = rng.randint(1, max(2, n - n // 3))
            masks.add(monomial(rng.sample(range(1, n + 1), min(size, n))))
        out.append(minimalize(n, masks))
    return out


# ---------------------------------------------------------------------------
# family specs for the CLI and harness

FAMILY_HELP = (
    "exhaustive-N (all graphs with <= N vertices), trees-N, forests-N, "
    "random-N-COUNT (seeded random graphs with <= N vertices), "
    "builtin (the bundled example graphs), or graph6:PATH / a graph file path"
)


def resolve_family(spec: str, seed: int = DEFAULT_SEED) -> list[Graph]:
    """Materialize a family spec into a list of graphs."""
    if spec == "builtin":
        from .graphs import BUILTIN_GRAPH_NAMES, builtin_graph

        return [builtin_graph(name) for name in BUILTIN_GRAPH_NAMES]
    m = re.fullmatch(r"exhaustive-(\d+)", spec)
    if m:
        return all_graphs_up_to(int(m.group(1)))
    m = re.fullmatch(r"trees-(\d+)", spec)
    if m:
        return all_trees_up_to(int(m.group(1)))
    m = re.fullmatch(r"forests-(\d+)", spec)
    if m:
        return all_forests_up_to(int(m.group(1)))
    m = re.fullmatch(r"random-(\d+)-(\d+)", spec)
    if m:
        return random_graphs(int(m.group(2)), int(m.group(1)), seed)
    path = spec[len("graph6:") :] if spec.startswith("graph6:") else spec
    file = Path(path)
    if file.exists():
        return parse_graphs(file.read_text())
    raise ValueError(f"cannot resolve family {spec!r}; expected {FAMILY_HELP}")
