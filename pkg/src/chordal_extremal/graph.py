"""Immutable simple undirected graphs on vertices ``0..n-1``."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DuplicateEdge, EdgeAbsent, EdgePresent, GraphError, LoopEdge, VertexOutOfRange

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalize an unordered pair so the smaller id comes first."""
    if u == v:
        raise LoopEdge(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple graph stored as one frozenset of neighbours per vertex.

    Instances are values: every editing function returns a new graph.
    Use :func:`from_edges` rather than calling the constructor directly;
    it enforces symmetry and irreflexivity.
    """

    order: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.adjacency) != self.order:
            raise GraphError("adjacency length does not match order")

    @property
    def size(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def vertices(self) -> range:
        return range(self.order)

    def neighbors(self, v: int) -> list[int]:
        """Neighbours of ``v`` in ascending id order."""
        return sorted(self.adjacency[v])

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[Edge]:
        """All edges, normalized and sorted."""
        return [(u, v) for u in range(self.order) for v in sorted(self.adjacency[u]) if u < v]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(b in self.adjacency[a] for a, b in combinations(vs, 2))

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.order))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.order:
        raise VertexOutOfRange(f"vertex {v} not in 0..{g.order - 1}")


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build the graph of order ``n`` with exactly the given edges."""
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        for w in (u, v):
            if not 0 <= w < n:
                raise VertexOutOfRange(f"endpoint {w} not in 0..{n - 1}")
        a, b = edge(u, v)
        if b in adj[a]:
            raise DuplicateEdge(f"edge {(a, b)} listed twice")
        adj[a].add(b)
        adj[b].add(a)
    return Graph(n, tuple(frozenset(s) for s in adj))


def validate(g: Graph) -> None:
    """Raise ``GraphError`` unless symmetry, irreflexivity and range hold."""
    for v, nbrs in enumerate(g.adjacency):
        for w in nbrs:
            if not 0 <= w < g.order:
                raise VertexOutOfRange(f"neighbour {w} of {v} out of range")
            if w == v:
                raise LoopEdge(f"loop at vertex {v}")
            if v not in g.adjacency[w]:
                raise GraphError(f"asymmetric adjacency between {v} and {w}")


def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least three vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def is_connected(g: Graph) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.order


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    comp = [-1] * g.order
    result = []
    for s in g:
        if comp[s] >= 0:
            continue
        comp[s] = len(result)
        members = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if comp[w] < 0:
                    comp[w] = comp[s]
                    members.append(w)
                    queue.append(w)
        result.append(sorted(members))
    return result


def cut_edges(g: Graph) -> list[Edge]:
    """Bridges of ``g`` via iterative low-link DFS, normalized and sorted."""
    disc = [-1] * g.order
    low = [0] * g.order
    bridges: list[Edge] = []
    timer = 0
    for root in g:
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, parent, iterator over neighbours)
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridges.append(edge(parent, v))
    return sorted(bridges)


def add_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = edge(*e)
    _check_vertex(g, u)
    _check_vertex(g, v)
    if g.has_edge(u, v):
        raise EdgePresent(f"edge {(u, v)} already present")
    adj = list(g.adjacency)
    adj[u] = adj[u] | {v}
    adj[v] = adj[v] | {u}
    return Graph(g.order, tuple(adj))


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = edge(*e)
    _check_vertex(g, u)
    _check_vertex(g, v)
    if not g.has_edge(u, v):
        raise EdgeAbsent(f"edge {(u, v)} not present")
    adj = list(g.adjacency)
    adj[u] = adj[u] - {v}
    adj[v] = adj[v] - {u}
    return Graph(g.order, tuple(adj))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g1 + g2`` with ``g2``'s vertices shifted up by ``g1.order``."""
    off = g1.order
    shifted = tuple(frozenset(w + off for w in nb) for nb in g2.adjacency)
    return Graph(g1.order + g2.order, g1.adjacency + shifted)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    off = g1.order
    left = frozenset(range(off))
    right = frozenset(range(off, off + g2.order))
    adj = tuple(nb | right for nb in g1.adjacency) + tuple(
        frozenset(w + off for w in nb) | left for nb in g2.adjacency
    )
    return Graph(off + g2.order, adj)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``, relabelled ``0..len-1`` in ascending order.

    Returns the graph and the list mapping new ids back to old ids.
    """
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    adj = tuple(frozenset(index[w] for w in g.adjacency[v] if w in index) for v in keep)
    return Graph(len(keep), adj), keep


def remove_vertex(g: Graph, v: int) -> Graph:
    _check_vertex(g, v)
    return induced_subgraph(g, (w for w in g if w != v))[0]
