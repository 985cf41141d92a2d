"""Shared fixtures and hypothesis strategies."""

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from curvegraph import (
    make_figure1,
    rooted_decomposition,
    validate_graph,
)
from curvegraph.chains import BirthDeathChain


@pytest.fixture
def figure1():
    return make_figure1()


@pytest.fixture
def figure1_decomp(figure1):
    return rooted_decomposition(figure1, "w")


def bfs_oracle(g, source):
    """Distance map computed with frontier sets, independent of the library's."""
    seen = {source: 0}
    frontier = [source]
    step = 0
    while frontier:
        step += 1
        nxt = []
        for u in frontier:
            for v, _w in g.neighbors(u):
                if v not in seen:
                    seen[v] = step
                    nxt.append(v)
        frontier = nxt
    return seen


@st.composite
def rationals(draw, max_num=9, max_den=9):
    return Fraction(
        draw(st.integers(min_value=1, max_value=max_num)),
        draw(st.integers(min_value=1, max_value=max_den)),
    )


@st.composite
def graphs_with_root(draw, max_vertices=8):
    """Connected graph on 0..n-1: a random tree plus a few extra edges."""
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    vertex_records = [(v, draw(rationals())) for v in range(n)]
    edges = {}
    for v in range(1, n):
        u = draw(st.integers(min_value=0, max_value=v - 1))
        edges[(u, v)] = draw(rationals())
    extras = draw(
        st.lists(
            st.tuples(
                st.integers(min_value=0, max_value=n - 1),
                st.integers(min_value=0, max_value=n - 1),
            ),
            max_size=n,
        )
    )
    for u, v in extras:
        if u == v:
            continue
        pair = (min(u, v), max(u, v))
        if pair not in edges:
            edges[pair] = draw(rationals())
    edge_records = [(u, v, w) for (u, v), w in sorted(edges.items())]
    g = validate_graph(vertex_records, edge_records)
    root = draw(st.integers(min_value=0, max_value=n - 1))
    return g, root


@st.composite
def chains(draw, min_horizon=2, max_horizon=6):
    horizon = draw(st.integers(min_value=min_horizon, max_value=max_horizon))
    measures = tuple(draw(rationals()) for _ in range(horizon + 1))
    weights = tuple(draw(rationals()) for _ in range(horizon))
    return BirthDeathChain(measures=measures, weights=weights)
