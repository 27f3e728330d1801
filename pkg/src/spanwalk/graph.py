"""Immutable labeled graphs plus edge-list and graph6 ingestion.

Vertices are always 0..n-1.  Undirected edges are stored once as (u, v) with
u < v; directed graphs (accepted only by the spreading dynamics) store arcs
as ordered (tail, head) pairs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import DirectedUnsupportedError, EdgeListParseError

Edge = tuple[int, int]


@dataclass(frozen=True, repr=False)
class Graph:
    """Finite simple graph (no loops, no parallel edges) on n labeled vertices."""

    n: int
    edges: frozenset[Edge] = frozenset()
    directed: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be at least 1")
        normalized = set()
        for edge in self.edges:
            u, v = edge
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if not self.directed and u > v:
                u, v = v, u
            normalized.add((u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    def __repr__(self) -> str:
        kind = "directed " if self.directed else ""
        return f"Graph({kind}n={self.n}, m={self.size})"

    @property
    def size(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if self.directed:
            return (u, v) in self.edges
        return (min(u, v), max(u, v)) in self.edges

    def neighbor_sets(self) -> list[set[int]]:
        """Adjacency as a list of neighbor sets; undirected graphs only."""
        if self.directed:
            raise DirectedUnsupportedError("neighbor sets are defined for undirected graphs")
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return nbrs

    def in_neighbor_sets(self) -> list[set[int]]:
        """Vertices with an arc into each vertex; equals neighbor_sets() when undirected."""
        if not self.directed:
            return self.neighbor_sets()
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[v].add(u)
        return nbrs

    def degree_sequence(self) -> list[int]:
        return [len(s) for s in self.neighbor_sets()]


def parse_edge_list(text: str, directed: bool = False) -> Graph:
    """Parse the plain edge-list format.

    First non-comment line holds the vertex count; every further line holds
    one "u v" pair.  '#' starts a comment, blank lines are skipped, and
    duplicate pairs (in either orientation, when undirected) collapse.
    Errors report the offending 1-based line number.
    """
    n: int | None = None
    edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        tokens = stripped.split()
        if n is None:
            if len(tokens) != 1:
                raise EdgeListParseError("expected a single vertex count", lineno)
            try:
                n = int(tokens[0])
            except ValueError:
                raise EdgeListParseError(f"vertex count is not an integer: {tokens[0]!r}", lineno) from None
            if n < 1:
                raise EdgeListParseError(f"vertex count must be at least 1, got {n}", lineno)
            continue
        if len(tokens) != 2:
            raise EdgeListParseError(f"expected 'u v', got {stripped!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(f"endpoints are not integers: {stripped!r}", lineno) from None
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"edge ({u}, {v}) out of range for n={n}", lineno)
        if not directed and u > v:
            u, v = v, u
        edges.add((u, v))
    if n is None:
        raise EdgeListParseError("missing vertex count line")
    return Graph(n, frozenset(edges), directed)


def to_edge_list_text(g: Graph) -> str:
    """Serialize to the edge-list format; output is sorted and round-trips through parse_edge_list."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    """Parse a short-form graph6 string (undirected, n <= 62)."""
    s = text.strip()
    if not s:
        raise EdgeListParseError("empty graph6 string")
    values = []
    for ch in s:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise EdgeListParseError(f"invalid graph6 character {ch!r}")
        values.append(code)
    if values[0] == 63:
        raise EdgeListParseError("only short-form graph6 is supported (n <= 62)")
    n = values[0]
    if n < 1:
        raise EdgeListParseError("graph6 vertex count must be at least 1")
    pair_count = n * (n - 1) // 2
    need = (pair_count + 5) // 6
    if len(values) - 1 != need:
        raise EdgeListParseError(
            f"graph6 body length {len(values) - 1} does not match n={n} (expected {need})"
        )
    bits = []
    for code in values[1:]:
        for shift in range(5, -1, -1):
            bits.append((code >> shift) & 1)
    edges = set()
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.add((u, v))
            idx += 1
    return Graph(n, frozenset(edges))


def complement(g: Graph) -> Graph:
    """Complement on the same vertex set; an involution."""
    if g.directed:
        raise DirectedUnsupportedError("complement is defined for undirected graphs")
    edges = {
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (u, v) not in g.edges
    }
    return Graph(g.n, frozenset(edges))


def regular_degree(g: Graph) -> int | None:
    """Common degree when the graph is regular, else None."""
    if g.directed:
        raise DirectedUnsupportedError("regularity is checked on undirected graphs")
    degrees = g.degree_sequence()
    first = degrees[0]
    if all(d == first for d in degrees):
        return first
    return None


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A two-coloring (smaller-rooted side first per component) or None if an odd cycle exists."""
    if g.directed:
        raise DirectedUnsupportedError("bipartition is checked on undirected graphs")
    nbrs = g.neighbor_sets()
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    left = frozenset(v for v in range(g.n) if color[v] == 0)
    right = frozenset(v for v in range(g.n) if color[v] == 1)
    return left, right


def is_connected(g: Graph) -> bool:
    if g.directed:
        raise DirectedUnsupportedError("connectivity is checked on undirected graphs")
    if g.n == 1:
        return True
    nbrs = g.neighbor_sets()
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n
