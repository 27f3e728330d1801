"""Exact integer engines: spanning-tree counts, closed-walk tables, Laplacian power traces.

Everything here runs in arbitrary-precision integer arithmetic.  No floating
point enters any value returned by this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .errors import DirectedUnsupportedError, RegularityRequiredError
from .graph import Graph, regular_degree

Matrix = list[list[int]]


def adjacency_matrix(g: Graph) -> Matrix:
    a = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        a[u][v] = 1
        if not g.directed:
            a[v][u] = 1
    return a


def laplacian_matrix(g: Graph) -> Matrix:
    """Degree matrix minus adjacency matrix; undirected graphs only."""
    if g.directed:
        raise DirectedUnsupportedError("the Laplacian is defined here for undirected graphs")
    lap = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        lap[u][v] -= 1
        lap[v][u] -= 1
        lap[u][u] += 1
        lap[v][v] += 1
    return lap


def _bareiss_determinant(matrix: Matrix) -> int:
    """Fraction-free determinant of a square integer matrix.

    One-step Bareiss elimination: intermediate entries stay integers and every
    division is exact.  Row swaps handle zero pivots; a fully zero pivot
    column means the determinant is zero.
    """
    m = [row[:] for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for r in range(k + 1, size):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, size):
            row_i = m[i]
            row_k = m[k]
            factor = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
        prev = pivot
    return sign * m[size - 1][size - 1]


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees, via a principal minor of the Laplacian.

    The last row and column are deleted; by the matrix-tree identity the choice
    of deleted vertex does not change the determinant.  Disconnected graphs
    give 0 and the single-vertex graph gives 1.
    """
    lap = laplacian_matrix(g)
    minor = [row[: g.n - 1] for row in lap[: g.n - 1]]
    det = _bareiss_determinant(minor)
    assert det >= 0, "Laplacian minors of undirected graphs are nonnegative"
    return det


def iter_closed_walk_counts(g: Graph) -> Iterator[int]:
    """Yield w_1, w_2, ... where w_k is the trace of the k-th adjacency power."""
    if g.directed:
        raise DirectedUnsupportedError("closed-walk counts are computed for undirected graphs")
    nbrs = [sorted(s) for s in g.neighbor_sets()]
    n = g.n
    power = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    while True:
        power = [[sum(row[u] for u in nbrs[j]) for j in range(n)] for row in power]
        yield sum(power[i][i] for i in range(n))


@dataclass(frozen=True)
class WalkTable:
    """Closed-walk counts w_1..w_max_k for one graph."""

    counts: tuple[int, ...]

    @property
    def max_k(self) -> int:
        return len(self.counts)

    def w(self, k: int) -> int:
        if not 1 <= k <= self.max_k:
            raise ValueError(f"walk order {k} outside table range 1..{self.max_k}")
        return self.counts[k - 1]


def closed_walk_counts(g: Graph, max_k: int) -> WalkTable:
    """Closed-walk counts up to order max_k, with basic sanity checks applied."""
    if max_k < 1:
        raise ValueError("max_k must be at least 1")
    walker = iter_closed_walk_counts(g)
    counts = tuple(next(walker) for _ in range(max_k))
    assert counts[0] == 0, "a simple graph has no closed walks of length 1"
    if max_k >= 2:
        assert counts[1] == 2 * g.size, "w_2 must equal twice the edge count"
    if max_k >= 3:
        assert counts[2] % 6 == 0, "w_3 must be divisible by 6"
    return WalkTable(counts)


def triangle_count(g: Graph) -> int:
    """Number of triangles, from the third closed-walk count (each triangle is walked 6 ways)."""
    return closed_walk_counts(g, 3).w(3) // 6


@dataclass(frozen=True)
class LaplacianTraceTable:
    """Traces of Laplacian powers L^1..L^max_r for one regular graph."""

    degree: int
    traces: tuple[int, ...]

    @property
    def max_r(self) -> int:
        return len(self.traces)

    def trace(self, r: int) -> int:
        if not 1 <= r <= self.max_r:
            raise ValueError(f"power {r} outside table range 1..{self.max_r}")
        return self.traces[r - 1]


def _direct_laplacian_traces(g: Graph, max_r: int) -> list[int]:
    lap = laplacian_matrix(g)
    n = g.n
    power = [row[:] for row in lap]
    traces = [sum(power[i][i] for i in range(n))]
    for _ in range(max_r - 1):
        power = [
            [sum(row[u] * lap[u][j] for u in range(n)) for j in range(n)]
            for row in power
        ]
        traces.append(sum(power[i][i] for i in range(n)))
    return traces


def laplacian_traces(g: Graph, max_r: int) -> LaplacianTraceTable:
    """Traces tr(L^r) for r = 1..max_r of a regular graph.

    Computed from closed-walk counts through the binomial expansion of
    (dI - A)^r, then cross-checked against direct matrix powers.
    """
    if max_r < 1:
        raise ValueError("max_r must be at least 1")
    d = regular_degree(g)
    if d is None:
        raise RegularityRequiredError("Laplacian trace tables are built for regular graphs")
    walks = closed_walk_counts(g, max_r) if max_r >= 1 else None
    traces = []
    for r in range(1, max_r + 1):
        total = comb(r, 0) * d**r * g.n  # i = 0 term uses tr(A^0) = n
        for i in range(1, r + 1):
            total += (-1) ** i * comb(r, i) * d ** (r - i) * walks.w(i)
        traces.append(total)
    assert traces == _direct_laplacian_traces(g, max_r), (
        "binomial-expansion traces disagree with direct matrix powers"
    )
    return LaplacianTraceTable(degree=d, traces=tuple(traces))
