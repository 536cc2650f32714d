"""Shared hypothesis strategies for property tests."""

from hypothesis import strategies as st

from sqfpowers.graphs import Graph
from sqfpowers.ideals import MonomialIdeal, minimalize, monomial


@st.composite
def graphs_st(draw, min_n: int = 0, max_n: int = 8):
    """A random labeled simple graph with min_n <= n <= max_n vertices."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    if not pairs:
        return Graph.from_edges(n, [])
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph.from_edges(n, edges)


@st.composite
def squarefree_ideals_st(draw, max_n: int = 7, degree: int | None = None,
                         max_gens: int = 8, allow_zero: bool = False):
    """A squarefree monomial ideal; all generators share one degree when set."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    d = degree if degree is not None else draw(st.integers(1, max(1, n)))
    d = min(d, n)
    supports = draw(
        st.lists(
            st.sets(st.integers(1, n), min_size=d, max_size=d),
            min_size=0 if allow_zero else 1,
            max_size=max_gens,
            unique_by=frozenset,
        )
    )
    return MonomialIdeal.from_supports(n, [tuple(sorted(s)) for s in supports])


@st.composite
def mixed_ideals_st(draw, max_n: int = 7, max_gens: int = 8):
    """A squarefree monomial ideal with generators of arbitrary degrees."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    supports = draw(
        st.lists(
            st.sets(st.integers(1, n), min_size=1, max_size=n),
            min_size=0,
            max_size=max_gens,
            unique_by=frozenset,
        )
    )
    return minimalize(n, (monomial(sorted(s)) for s in supports))
