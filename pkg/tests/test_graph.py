import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netepi import (
    EmptyInputError,
    GraphFormatError,
    degree_vector,
    dump_graph,
    graph_from_rows,
    is_strongly_connected,
    load_graph,
)
from netepi.graph import Graph

from conftest import complete_graph, directed_ring, symmetric_pair, two_node


def test_load_two_node_pair():
    g = load_graph("1 2 1.0\n2 1 1.0")
    np.testing.assert_array_equal(g.adjacency, [[0.0, 1.0], [1.0, 0.0]])


def test_load_directed_three_cycle():
    # "i j w" sets a_ij: the influence of j on i.
    g = load_graph("1 2 1\n2 3 1\n3 1 1")
    np.testing.assert_array_equal(
        g.adjacency, [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    )


def test_load_empty_input():
    with pytest.raises(EmptyInputError):
        load_graph("")
    with pytest.raises(EmptyInputError):
        load_graph("# only a comment\n\n")


def test_load_header_and_comments():
    g = load_graph("# contact net\nn 3\n1 2 0.5\n2 1 2.5\n")
    assert g.n == 3
    assert g.adjacency[0, 1] == 0.5
    assert not is_strongly_connected(g)  # node 3 is isolated


@pytest.mark.parametrize(
    "text",
    [
        "1 2\n",  # missing weight
        "1 2 x\n",  # bad weight literal
        "0 2 1.0\n",  # indices are 1-based
        "1 2 0.0\n",  # nonpositive weight
        "1 2 -1.0\n",  # negative weight
        "n 2\n1 3 1.0\n",  # index out of range
        "1 2 1.0\n1 2 2.0\n",  # duplicate edge
        "n 2\nn 2\n1 2 1.0\n",  # duplicate header
    ],
)
def test_load_rejects_malformed(text):
    with pytest.raises(GraphFormatError):
        load_graph(text)


def test_graph_from_rows_validates():
    with pytest.raises(GraphFormatError):
        graph_from_rows([[0, 1], [1]])
    with pytest.raises(GraphFormatError):
        graph_from_rows([[0, -1], [1, 0]])
    g = graph_from_rows([[0, 1], [1, 0]])
    assert g.n == 2


def test_strong_connectivity_examples():
    assert is_strongly_connected(symmetric_pair())
    assert not is_strongly_connected(Graph(np.array([[0.0, 1.0], [0.0, 0.0]])))
    assert is_strongly_connected(directed_ring(3))
    # n = 1 needs a positive self-loop for irreducibility
    assert not is_strongly_connected(Graph(np.array([[0.0]])))
    assert is_strongly_connected(Graph(np.array([[0.7]])))


def test_degree_vector_examples():
    np.testing.assert_array_equal(degree_vector(symmetric_pair()), [1.0, 1.0])
    np.testing.assert_array_equal(degree_vector(complete_graph(4)), [3.0] * 4)
    np.testing.assert_array_equal(degree_vector(two_node()), [2.0, 8.0])


def test_round_trip_exact():
    g = two_node()
    assert np.array_equal(load_graph(dump_graph(g)).adjacency, g.adjacency)


@st.composite
def edge_lists(draw):
    n = draw(st.integers(min_value=2, max_value=6))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    chosen = draw(st.sets(st.sampled_from(pairs), min_size=1, max_size=len(pairs)))
    weights = draw(
        st.lists(
            st.floats(min_value=1e-6, max_value=1e6, allow_nan=False),
            min_size=len(chosen),
            max_size=len(chosen),
        )
    )
    lines = [f"n {n}"] + [f"{i} {j} {w!r}" for (i, j), w in zip(sorted(chosen), weights)]
    return "\n".join(lines)


@given(edge_lists())
@settings(max_examples=100)
def test_round_trip_property(text):
    g = load_graph(text)
    g2 = load_graph(dump_graph(g))
    assert np.array_equal(g.adjacency, g2.adjacency)


def _brute_strongly_connected(a: np.ndarray) -> bool:
    """Transitive-closure oracle: every ordered pair linked by a length>=1 path."""
    p = (a > 0).astype(int)
    n = a.shape[0]
    if n == 1:
        return bool(p[0, 0])
    closure = p.copy()
    for _ in range(n):
        closure = ((closure + closure @ p) > 0).astype(int)
    off_diag = ~np.eye(n, dtype=bool)
    return bool(np.all(closure[off_diag] > 0))


@given(st.integers(min_value=1, max_value=6), st.data())
@settings(max_examples=200)
def test_strong_connectivity_matches_brute_force(n, data):
    bits = data.draw(
        st.lists(st.integers(0, 1), min_size=n * n, max_size=n * n)
    )
    a = np.array(bits, dtype=float).reshape(n, n)
    assert is_strongly_connected(Graph(a)) == _brute_strongly_connected(a)
