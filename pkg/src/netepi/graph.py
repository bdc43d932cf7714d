"""Weighted contact digraphs and their basic structural queries.

The adjacency convention follows the contact-direction used throughout the
package: entry ``a[i, j]`` is the contact strength from node j to node i,
so row i collects everything that can infect node i. Edge-list text uses
1-based indices; in memory everything is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyInputError, GraphFormatError, ReducibleMatrixError


@dataclass(frozen=True)
class Graph:
    """Immutable weighted digraph held as a dense nonnegative matrix."""

    adjacency: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.adjacency, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphFormatError(f"adjacency must be square, got shape {a.shape}")
        if a.shape[0] < 1:
            raise GraphFormatError("graph needs at least one node")
        if not np.all(np.isfinite(a)):
            raise GraphFormatError("adjacency entries must be finite")
        if np.any(a < 0):
            raise GraphFormatError("adjacency entries must be nonnegative")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]


def load_graph(edge_list_text: str) -> Graph:
    """Parse edge-list text into a Graph.

    Each data line is ``i j w`` (1-based indices, positive weight) and sets
    a[i, j] = w. An optional header line ``n <count>`` fixes the node count;
    otherwise it is inferred as the largest index seen. Lines starting with
    '#' and blank lines are ignored. Duplicate (i, j) pairs are an error.
    """
    header_n = None
    edges = []  # (i, j, w, line_no)
    for line_no, raw in enumerate(edge_list_text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if header_n is not None:
                raise GraphFormatError(f"line {line_no}: duplicate header")
            if edges:
                raise GraphFormatError(f"line {line_no}: header must precede edges")
            if len(parts) != 2:
                raise GraphFormatError(f"line {line_no}: header must be 'n <count>'")
            try:
                header_n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {line_no}: bad node count {parts[1]!r}") from None
            if header_n < 1:
                raise GraphFormatError(f"line {line_no}: node count must be positive")
            continue
        if len(parts) != 3:
            raise GraphFormatError(f"line {line_no}: expected 'i j w', got {line!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
            w = float(parts[2])
        except ValueError:
            raise GraphFormatError(f"line {line_no}: expected 'i j w', got {line!r}") from None
        if i < 1 or j < 1:
            raise GraphFormatError(f"line {line_no}: indices are 1-based, got {i} {j}")
        if not np.isfinite(w) or w <= 0:
            raise GraphFormatError(f"line {line_no}: weight must be positive, got {parts[2]}")
        edges.append((i, j, w, line_no))

    if not edges:
        raise EmptyInputError("no edges in input")

    max_index = max(max(i, j) for i, j, _, _ in edges)
    if header_n is not None and max_index > header_n:
        bad = next(ln for i, j, _, ln in edges if max(i, j) > header_n)
        raise GraphFormatError(f"line {bad}: index exceeds declared node count {header_n}")
    n = header_n if header_n is not None else max_index

    a = np.zeros((n, n))
    seen = set()
    for i, j, w, line_no in edges:
        if (i, j) in seen:
            raise GraphFormatError(f"line {line_no}: duplicate edge ({i}, {j})")
        seen.add((i, j))
        a[i - 1, j - 1] = w
    return Graph(a)


def dump_graph(g: Graph) -> str:
    """Serialize a Graph back to edge-list text (exact round trip).

    Weights are written with repr so load_graph(dump_graph(g)) reproduces
    the adjacency matrix bit for bit.
    """
    lines = [f"n {g.n}"]
    rows, cols = np.nonzero(g.adjacency)
    for i, j in zip(rows, cols):
        lines.append(f"{i + 1} {j + 1} {float(g.adjacency[i, j])!r}")
    return "\n".join(lines) + "\n"


def graph_from_rows(rows) -> Graph:
    """Build a Graph from a matrix given as a list of rows (the JSON form)."""
    try:
        a = np.array(rows, dtype=float)
    except (TypeError, ValueError):
        raise GraphFormatError("matrix rows must be numeric and rectangular") from None
    return Graph(a)


def is_strongly_connected(g: Graph) -> bool:
    """True iff every node reaches every other node along positive-weight edges.

    Equivalently, the adjacency matrix is irreducible. For n = 1 this
    requires a positive self-loop (the 1x1 zero matrix is reducible).
    """
    a = g.adjacency
    n = g.n
    if n == 1:
        return a[0, 0] > 0
    # a[i, j] > 0 is an edge j -> i: forward reachability follows columns.
    return _reaches_all(a.T > 0) and _reaches_all(a > 0)


def _reaches_all(out_edges: np.ndarray) -> bool:
    """BFS from node 0 over the boolean out-edge matrix; True if all reached."""
    n = out_edges.shape[0]
    visited = np.zeros(n, dtype=bool)
    visited[0] = True
    frontier = visited.copy()
    while frontier.any():
        frontier = out_edges[frontier].any(axis=0) & ~visited
        visited |= frontier
    return bool(visited.all())


def require_strongly_connected(g: Graph) -> None:
    """Raise ReducibleMatrixError unless the graph is strongly connected."""
    if not is_strongly_connected(g):
        raise ReducibleMatrixError(
            "graph is not strongly connected (adjacency matrix is reducible)"
        )


def degree_vector(g: Graph) -> np.ndarray:
    """Row sums d = A @ 1; diag(d) is the degree matrix."""
    return g.adjacency.sum(axis=1)
