"""Minimum sizes of chordal graphs with given order and minimum degree.

Write ``n = q(k+1) + r`` with ``0 <= r <= k``. Among chordal graphs of order
``n`` and minimum degree ``k`` the fewest edges is

    phi(n, k) = q * C(k+1, 2) + k*r - r*(r-1)/2

and among connected ones it is ``n - 1`` for ``k = 1``, ``phi`` when
``r != 0``, and ``phi + 1`` when ``r == 0``. The ``construct_*`` functions
build graphs attaining these values with a fixed, documented labelling.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Literal, Optional

from .errors import InvalidParameters
from .graph import (
    Edge,
    Graph,
    add_edge,
    complete_graph,
    delete_edge,
    disjoint_union,
    edge,
    join,
    path_graph,
)

FamilyTag = Literal["r0", "q1", "q2", "q3plus", "connected_r0", "path"]


@dataclass(frozen=True)
class ExtremalParams:
    n: int
    k: int
    q: int
    r: int

    @classmethod
    def of(cls, n: int, k: int) -> "ExtremalParams":
        if k < 1 or n < k + 1:
            raise InvalidParameters(f"need k >= 1 and n >= k+1, got n={n}, k={k}")
        q, r = divmod(n, k + 1)
        return cls(n, k, q, r)


@dataclass(frozen=True)
class ConstructionResult:
    graph: Graph
    predicted_size: int
    family_tag: FamilyTag
    designated_cut_edge: Optional[Edge] = None

    def to_json(self) -> dict:
        return {
            "order": self.graph.order,
            "size": self.graph.size,
            "predicted_size": self.predicted_size,
            "family_tag": self.family_tag,
            "designated_cut_edge": list(self.designated_cut_edge) if self.designated_cut_edge else None,
        }


def phi(n: int, k: int) -> int:
    p = ExtremalParams.of(n, k)
    return p.q * comb(k + 1, 2) + k * p.r - p.r * (p.r - 1) // 2


def g_hypotheses_hold(n: int, k: int) -> bool:
    """Whether the connected minimum-size formula applies to ``(n, k)``."""
    if k == 1:
        return n >= 2
    return k >= 2 and n >= k + 2


def g_formula(n: int, k: int) -> int:
    """Minimum size of a connected chordal graph of order ``n``, minimum degree ``k``."""
    if not g_hypotheses_hold(n, k):
        raise InvalidParameters(f"connected formula needs k=1, n>=2 or k>=2, n>=k+2; got n={n}, k={k}")
    if k == 1:
        return n - 1
    p = ExtremalParams.of(n, k)
    return phi(n, k) + (1 if p.r == 0 else 0)


def _append_clique(g: Graph, size: int) -> tuple[Graph, int]:
    """Disjoint union with ``K_size``; returns the graph and the first new id."""
    return disjoint_union(g, complete_graph(size)), g.order


def construct_q(n: int, k: int) -> ConstructionResult:
    """A chordal graph of order ``n``, minimum degree ``k`` and size ``phi(n, k)``.

    Labelling:

    * ``r = 0``: copies of ``K_{k+1}`` on consecutive id blocks.
    * ``q = 1``: the centre clique ``K_{2k-n+2}`` takes ids ``0..2k-n+1``,
      then the two wings ``K_{n-k-1}`` in order.
    * ``q = 2``: the ``q = 1`` graph on ``n-k-1`` vertices loses the edge
      from vertex 0 to the first wing vertex ``b``; a new ``K_{k+1}`` is
      appended and ``b`` is joined to its smallest id, giving the cut-edge.
    * ``q >= 3``: the graph for ``n-k-1`` has cut-edge ``b1 c1``; a new
      ``K_{k+1}`` with its two smallest ids ``b2, c2`` is appended, edges
      ``b1 c1`` and ``b2 c2`` are removed, and ``b2 b1``, ``c2 c1`` added.
      The new cut-edge is ``c1 c2``.
    """
    p = ExtremalParams.of(n, k)
    target = phi(n, k)
    if p.r == 0:
        g = complete_graph(k + 1)
        for _ in range(p.q - 1):
            g = disjoint_union(g, complete_graph(k + 1))
        return ConstructionResult(g, target, "r0")
    if p.q == 1:
        wing = complete_graph(n - k - 1)
        g = join(complete_graph(2 * k - n + 2), disjoint_union(wing, wing))
        return ConstructionResult(g, target, "q1")
    if p.q == 2:
        base = construct_q(n - k - 1, k).graph
        a1, b1 = 0, 2 * k - (n - k - 1) + 2
        g = delete_edge(base, (a1, b1))
        g, c1 = _append_clique(g, k + 1)
        g = add_edge(g, (b1, c1))
        return ConstructionResult(g, target, "q2", edge(b1, c1))

    prev = construct_q(n - k - 1, k)
    assert prev.designated_cut_edge is not None
    b1, c1 = prev.designated_cut_edge
    g, b2 = _append_clique(prev.graph, k + 1)
    c2 = b2 + 1
    g = delete_edge(delete_edge(g, (b1, c1)), (b2, c2))
    g = add_edge(add_edge(g, (b2, b1)), (c2, c1))
    return ConstructionResult(g, target, "q3plus", edge(c1, c2))


def construct_b(n: int, k: int) -> ConstructionResult:
    """A connected chordal graph of order ``n``, minimum degree ``k``, size ``g_formula(n, k)``.

    ``k = 1`` gives the path ``0-1-...-(n-1)``. For ``k >= 2`` and ``r != 0``
    the graph from :func:`construct_q` is already connected. For ``r = 0``:
    two copies of ``K_{k+1}`` joined by the edge ``0, k+1``; each further
    copy is spliced in by removing the current cut-edge ``a1 b1`` and the
    edge between the new copy's two smallest ids ``a2, b2``, then adding
    ``a1 a2`` and ``b1 b2``. The new cut-edge is ``a1 a2``.
    """
    target = g_formula(n, k)
    if k == 1:
        return ConstructionResult(path_graph(n), target, "path", (0, 1))
    p = ExtremalParams.of(n, k)
    if p.r != 0:
        return construct_q(n, k)
    if p.q == 2:
        g = disjoint_union(complete_graph(k + 1), complete_graph(k + 1))
        g = add_edge(g, (0, k + 1))
        return ConstructionResult(g, target, "connected_r0", (0, k + 1))
    prev = construct_b(n - k - 1, k)
    assert prev.designated_cut_edge is not None
    a1, b1 = prev.designated_cut_edge
    g, a2 = _append_clique(prev.graph, k + 1)
    b2 = a2 + 1
    g = delete_edge(delete_edge(g, (a1, b1)), (a2, b2))
    g = add_edge(add_edge(g, (a1, a2)), (b1, b2))
    return ConstructionResult(g, target, "connected_r0", edge(a1, a2))
