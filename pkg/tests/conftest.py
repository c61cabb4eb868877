"""Shared hypothesis strategies for small 3-graphs."""

from itertools import combinations

from hypothesis import strategies as st

from bergesat.hypercore import Hypergraph3


@st.composite
def small_3graphs(draw, max_vertices=8, max_edges=12):
    n = draw(st.integers(min_value=3, max_value=max_vertices))
    pool = list(combinations(range(n), 3))
    count = draw(st.integers(min_value=0, max_value=min(max_edges, len(pool))))
    picked = draw(
        st.lists(
            st.sampled_from(pool), min_size=count, max_size=count, unique=True
        )
    )
    return Hypergraph3(n, tuple(sorted(picked)))


@st.composite
def small_linear_3graphs(draw, max_vertices=10, max_edges=10):
    """Linear instances only: edges kept while no pair repeats."""
    n = draw(st.integers(min_value=3, max_value=max_vertices))
    pool = list(combinations(range(n), 3))
    order = draw(st.permutations(pool))
    limit = draw(st.integers(min_value=0, max_value=max_edges))
    used = set()
    edges = []
    for e in order:
        if len(edges) == limit:
            break
        pairs = {(e[0], e[1]), (e[0], e[2]), (e[1], e[2])}
        if used & pairs:
            continue
        used |= pairs
        edges.append(e)
    return Hypergraph3(n, tuple(sorted(edges)))
