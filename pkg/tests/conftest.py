import functools

import pytest
from hypothesis import strategies as st

from kcircular.corpus import multigraphs
from kcircular.graph import Multigraph


@functools.lru_cache(maxsize=None)
def corpus(max_vertices=5, max_edges=6, isolated=True):
    return tuple(multigraphs(max_vertices, max_edges, isolated=isolated))


@pytest.fixture(scope="session")
def small_corpus():
    return corpus(4, 5)


@st.composite
def random_graphs(draw, max_vertices=5, max_edges=8, min_edges=0):
    n = draw(st.integers(1, max_vertices))
    names = [str(i + 1) for i in range(n)]
    m = draw(st.integers(min_edges, max_edges))
    ends = draw(st.lists(st.tuples(st.sampled_from(names), st.sampled_from(names)), min_size=m, max_size=m))
    return Multigraph(names, [(f"e{i}", u, v) for i, (u, v) in enumerate(ends)])
