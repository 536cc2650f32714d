"""Finite simple graphs on the vertex set {1, ..., n}.

Vertices are 1-based integers and n is capped at 64 so that vertex sets fit
into machine-word bitmasks (bit v-1 stands for vertex v).  Graphs are
immutable; every surgery operation returns a new graph.  Induced subgraphs
relabel their vertices order-preservingly to {1, ..., |W|} and remember the
original labels in ``source_vertices``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64

Edge = tuple[int, int]


def _canon_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop at vertex {u} is not allowed in a simple graph")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``edges`` holds sorted pairs (u, v) with u < v."""

    n: int
    edges: frozenset[Edge]
    # Original labels of the vertices when this graph arose as an induced
    # subgraph: source_vertices[i-1] is the old name of the new vertex i.
    # Excluded from equality so G restricted to all of V(G) still equals G.
    source_vertices: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge ({u}, {v}) is not canonical for n={self.n}")
        if self.source_vertices is not None and len(self.source_vertices) != self.n:
            raise ValueError("source_vertices length must equal n")

    @staticmethod
    def from_edges(
        n: int,
        edges: Iterable[Sequence[int]],
        source_vertices: tuple[int, ...] | None = None,
    ) -> "Graph":
        """Build a graph from unordered vertex pairs, canonicalizing each."""
        canon = frozenset(_canon_edge(u, v) for u, v in edges)
        return Graph(n, canon, source_vertices)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges sorted lexicographically; the iteration order used everywhere."""
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbor bitmask per vertex; index 0 is unused padding."""
        adj = [0] * (self.n + 1)
        for u, v in self.edges:
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        return tuple(adj)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and _canon_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adjacency[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(_mask_vertices(self.adjacency[v]))

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} outside 1..{self.n}")


def _mask_vertices(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def vertices_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def mask_to_vertices(mask: int) -> tuple[int, ...]:
    return tuple(_mask_vertices(mask))


# ---------------------------------------------------------------------------
# surgery

def induced_subgraph(G: Graph, W: Iterable[int]) -> Graph:
    """Subgraph induced on W, relabeled order-preservingly to 1..|W|.

    The old label of new vertex i is recorded as source_vertices[i-1].
    """
    keep = sorted(set(W))
    for v in keep:
        G._check_vertex(v)
    new_label = {v: i + 1 for i, v in enumerate(keep)}
    keep_set = set(keep)
    edges = [
        (new_label[u], new_label[v])
        for u, v in G.edge_list
        if u in keep_set and v in keep_set
    ]
    return Graph.from_edges(len(keep), edges, source_vertices=tuple(keep))


def remove_vertices(G: Graph, W: Iterable[int]) -> Graph:
    drop = set(W)
    return induced_subgraph(G, (v for v in G.vertices if v not in drop))


def remove_edge(G: Graph, e: Sequence[int]) -> Graph:
    edge = _canon_edge(e[0], e[1])
    if edge not in G.edges:
        raise ValueError(f"edge {edge} not present")
    return Graph(G.n, G.edges - {edge})


def edges_within(G: Graph, W: Iterable[int]) -> Graph:
    """Spanning subgraph keeping only edges with both ends in W (no relabeling)."""
    keep = set(W)
    return Graph(G.n, frozenset(e for e in G.edges if e[0] in keep and e[1] in keep))


def complement(G: Graph) -> Graph:
    edges = [
        (u, v)
        for u in G.vertices
        for v in range(u + 1, G.n + 1)
        if (u, v) not in G.edges
    ]
    return Graph.from_edges(G.n, edges)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """Disjoint union; vertices of H are shifted up by n(G)."""
    if G.n + H.n > MAX_VERTICES:
        raise ValueError("disjoint union exceeds the vertex cap")
    shifted = [(u + G.n, v + G.n) for u, v in H.edge_list]
    return Graph.from_edges(G.n + H.n, list(G.edge_list) + shifted)


def proliferate_leaf(G: Graph, a: int, t: int) -> Graph:
    """Replace the leaf a by t leaves hanging off the same support vertex."""
    if G.degree(a) != 1:
        raise ValueError(f"vertex {a} is not a leaf")
    if t < 1:
        raise ValueError("t must be >= 1")
    (support,) = G.neighbors(a)
    if G.n + t - 1 > MAX_VERTICES:
        raise ValueError("proliferation exceeds the vertex cap")
    edges = list(G.edge_list)
    for i in range(t - 1):
        edges.append((support, G.n + 1 + i))
    return Graph.from_edges(G.n + t - 1, edges)


def isolated_vertices(G: Graph) -> frozenset[int]:
    return frozenset(v for v in G.vertices if G.adjacency[v] == 0)


# ---------------------------------------------------------------------------
# predicates

def connected_components(G: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    seen = 0
    comps: list[frozenset[int]] = []
    adj = G.adjacency
    for v in G.vertices:
        bit = 1 << (v - 1)
        if seen & bit:
            continue
        comp = bit
        frontier = bit
        while frontier:
            nxt = 0
            for u in _mask_vertices(frontier):
                nxt |= adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(frozenset(_mask_vertices(comp)))
    return comps


def is_connected(G: Graph) -> bool:
    return len(connected_components(G)) <= 1


def is_forest(G: Graph) -> bool:
    return len(G.edges) == G.n - len(connected_components(G))


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and is_connected(G) and len(G.edges) == G.n - 1


def is_chordal(G: Graph) -> bool:
    """Chordality test: maximum cardinality search + perfect elimination check.

    A graph is chordal when every cycle of length at least four has a chord;
    equivalently, MCS visits vertices in the reverse of a perfect elimination
    ordering exactly when the graph is chordal.
    """
    n = G.n
    if n <= 2:
        return True
    adj = G.adjacency
    weight = [0] * (n + 1)
    selected: list[int] = []
    remaining = set(G.vertices)
    while remaining:
        # max weight, smallest label as the deterministic tie break
        v = min(remaining, key=lambda u: (-weight[u], u))
        remaining.remove(v)
        selected.append(v)
        for u in _mask_vertices(adj[v]):
            if u in remaining:
                weight[u] += 1
    # eliminate in reverse selection order; later = earlier in `selected`
    pos = {v: i for i, v in enumerate(selected)}
    for v in selected:
        later = [u for u in _mask_vertices(adj[v]) if pos[u] < pos[v]]
        for i, a in enumerate(later):
            for b in later[i + 1 :]:
                if not G.has_edge(a, b):
                    return False
    return True


# ---------------------------------------------------------------------------
# constructors

def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph.from_edges(n, edges)


def star_graph(k: int) -> Graph:
    """Star with k leaves: center 1, leaves 2..k+1."""
    if k < 1:
        raise ValueError("star needs at least one leaf")
    return Graph.from_edges(k + 1, [(1, i) for i in range(2, k + 2)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph.from_edges(n, [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)])


@dataclass(frozen=True)
class NamedGraphs:
    """The bundled example graphs used across fixtures and CLI builtins."""

    fig1: Graph  # 9-vertex tree: a 7-path with extra leaves at path vertices 3 and 5
    fig2: Graph  # two disjoint 4-cycles
    h: Graph  # 4-path
    h_prime: Graph  # 5-path
    h_double_prime: Graph  # 5-path with an extra leaf at its middle vertex
    h_tilde: Graph  # 6-path


def named_graphs() -> NamedGraphs:
    fig1 = Graph.from_edges(
        9, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (3, 8), (5, 9)]
    )
    fig2 = disjoint_union(cycle_graph(4), cycle_graph(4))
    hpp = Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)])
    return NamedGraphs(
        fig1=fig1,
        fig2=fig2,
        h=path_graph(4),
        h_prime=path_graph(5),
        h_double_prime=hpp,
        h_tilde=path_graph(6),
    )


def builtin_graph(name: str) -> Graph:
    """Look up a graph by its CLI builtin name."""
    ng = named_graphs()
    table = {
        "fig1": ng.fig1,
        "fig2": ng.fig2,
        "h": ng.h,
        "h-prime": ng.h_prime,
        "h-double-prime": ng.h_double_prime,
        "h-tilde": ng.h_tilde,
        "c7": cycle_graph(7),
    }
    if name not in table:
        raise ValueError(f"unknown builtin graph {name!r}; choose from {sorted(table)}")
    return table[name]


BUILTIN_GRAPH_NAMES = ("fig1", "fig2", "h", "h-prime", "h-double-prime", "h-tilde", "c7")


# ---------------------------------------------------------------------------
# text formats

def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    One edge per line as "u v"; '#' starts a comment; an optional header line
    "n <count>" pins the vertex count, otherwise n is the largest vertex seen.
    """
    n: int | None = None
    edges: list[Edge] = []
    max_seen = 0
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or n is not None:
                raise ValueError(f"bad header line: {raw!r}")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u < 1 or v < 1:
            raise ValueError(f"vertices must be positive: {raw!r}")
        edges.append(_canon_edge(u, v))
        max_seen = max(max_seen, u, v)
    if n is None:
        n = max_seen
    if max_seen > n:
        raise ValueError(f"edge vertex {max_seen} exceeds declared n={n}")
    return Graph.from_edges(n, edges)


def format_edge_list(G: Graph) -> str:
    lines = [f"n {G.n}"]
    lines.extend(f"{u} {v}" for u, v in G.edge_list)
    return "\n".join(lines) + "\n"


def parse_graph6(line: str) -> Graph:
    """Decode one graph in graph6 format."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ValueError(f"invalid graph6 characters in {line!r}")
    if data[0] == 63:
        if len(data) < 4:
            raise ValueError("truncated graph6 header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise ValueError(f"graph6 graph has {n} > {MAX_VERTICES} vertices")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise ValueError("truncated graph6 body")
    bits = []
    for b in body:
        bits.extend((b >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i + 1, j + 1))
            k += 1
    return Graph.from_edges(n, edges)


def to_graph6(G: Graph) -> str:
    """Encode in graph6 format."""
    n = G.n
    if n <= 62:
        header = [n]
    else:
        header = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i + 1, j + 1) in G.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        word = 0
        for bit in bits[k : k + 6]:
            word = (word << 1) | bit
        body.append(word)
    return "".join(chr(63 + b) for b in header + body)


def parse_graphs(text: str) -> list[Graph]:
    """Parse a graph file: either graph6 lines or a single edge list."""
    stripped = [ln for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if stripped and all(_looks_like_graph6(ln.strip()) for ln in stripped):
        return [parse_graph6(ln) for ln in stripped]
    return [parse_edge_list(text)]


def _looks_like_graph6(line: str) -> bool:
    if line.startswith(">>graph6<<"):
        return True
    if any(ch == " " for ch in line):
        return False
    # edge-list lines are all digits; graph6 bodies are printable ASCII >= '?'
    return not line.replace(" ", "").isdigit() and all(63 <= ord(c) <= 126 for c in line)
