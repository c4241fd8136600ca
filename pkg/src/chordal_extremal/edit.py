"""Edge edits that keep a chordal graph chordal.

Three operations:

* :func:`augment_edge` finds a non-neighbour ``y`` of ``x`` such that adding
  ``xy`` keeps the graph chordal, by following chordless paths whose middle
  vertices grow into a clique.
* :func:`reduce_min_degree` deletes edges at simplicial vertices, which never
  creates a chordless cycle, until the minimum degree drops to a target.
* :func:`raise_min_degree` repeatedly augments at a deficient vertex until
  every degree reaches a target.

Each step is re-checked with the recognizer under ``assert``; running Python
with ``-O`` trusts the lemmas instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .errors import (
    DominatingVertex,
    EdgeAbsent,
    EdgeNotIncident,
    NotChordal,
    NotSimplicial,
    TargetNotBelow,
    TooFewVertices,
    VertexOutOfRange,
)
from .graph import Edge, Graph, add_edge, delete_edge, edge, min_degree
from .recognition import is_chordal, is_simplicial

EditKind = Literal["added", "deleted"]


@dataclass
class EditTrace:
    steps: list[tuple[EditKind, Edge]] = field(default_factory=list)
    initial_size: int = 0
    final_size: int = 0

    def to_json(self) -> dict:
        return {
            "steps": [{"kind": kind, "edge": list(e)} for kind, e in self.steps],
            "initial_size": self.initial_size,
            "final_size": self.final_size,
        }


def replay(g: Graph, trace: EditTrace) -> Graph:
    for kind, e in trace.steps:
        g = add_edge(g, e) if kind == "added" else delete_edge(g, e)
    return g


def _require_chordal(g: Graph) -> None:
    if not is_chordal(g):
        raise NotChordal("input graph is not chordal")


def augmentation_sequence(g: Graph, x: int) -> list[int]:
    """The endpoints ``z_1, z_2, ..., z_j`` visited while searching for ``y``.

    Starts from the chordless path ``x, y_1, z_1`` with ``y_1`` the smallest
    neighbour of ``x`` that has a neighbour outside ``N[x]`` and ``z_1`` the
    smallest such outside neighbour. While ``g + x z_i`` is not chordal, the
    recognizer's chordless cycle (which must use ``x z_i``) minus that edge is
    the next path ``x, y_{i+1}, z_{i+1}, ..., z_i``. The middle vertices
    ``y_i`` form a growing clique, so at most ``n`` rounds occur.

    When ``N[x]`` is a whole component, no such path exists; then the
    smallest vertex outside ``N[x]`` lies in another component and joining
    it adds a bridge, which keeps the graph chordal.
    """
    if not 0 <= x < g.order:
        raise VertexOutOfRange(f"vertex {x} not in 0..{g.order - 1}")
    _require_chordal(g)
    closed = g.adjacency[x] | {x}
    if len(closed) == g.order:
        raise DominatingVertex(f"vertex {x} is adjacent to every other vertex")

    start = None
    for y1 in g.neighbors(x):
        outside = [w for w in g.neighbors(y1) if w not in closed]
        if outside:
            start = (y1, outside[0])
            break
    if start is None:
        return [min(v for v in g if v not in closed)]

    y, z = start
    zs = [z]
    middles = [y]
    for _ in range(g.order):
        verdict = is_chordal(add_edge(g, (x, z)))
        if verdict:
            return zs
        cyc = list(verdict.cycle)
        i = cyc.index(x)
        cyc = cyc[i:] + cyc[:i]
        # orient so the cycle reads x, y_next, z_next, ..., z
        if cyc[1] == z:
            cyc = [x] + cyc[:0:-1]
        assert cyc[-1] == z and len(cyc) >= 4
        y, z = cyc[1], cyc[2]
        assert not g.has_edge(x, z)
        assert all(g.has_edge(y, t) for t in middles), "middle vertices must stay a clique"
        middles.append(y)
        zs.append(z)
    raise RuntimeError(f"augmentation at {x} did not terminate within {g.order} rounds")


def augment_edge(g: Graph, x: int) -> int:
    """A vertex ``y`` nonadjacent to ``x`` with ``g + xy`` chordal."""
    y = augmentation_sequence(g, x)[-1]
    assert is_chordal(add_edge(g, (x, y)))
    return y


def delete_edge_at_simplicial(g: Graph, x: int, e: tuple[int, int]) -> Graph:
    u, v = edge(*e)
    if x not in (u, v):
        raise EdgeNotIncident(f"edge {(u, v)} is not incident with {x}")
    if not g.has_edge(u, v):
        raise EdgeAbsent(f"edge {(u, v)} not present")
    _require_chordal(g)
    if not is_simplicial(g, x):
        raise NotSimplicial(f"vertex {x} is not simplicial")
    h = delete_edge(g, (u, v))
    assert is_chordal(h)
    return h


def reduce_min_degree(g: Graph, p: int) -> tuple[Graph, EditTrace]:
    """Chordal spanning subgraph with minimum degree exactly ``p``.

    One edge per round: the smallest simplicial vertex of positive degree
    loses the edge to its smallest neighbour. All degrees exceed ``p``
    before every deletion, so none drops below ``p``.
    """
    _require_chordal(g)
    if not 0 <= p < min_degree(g):
        raise TargetNotBelow(f"target {p} must satisfy 0 <= p < {min_degree(g)}")
    trace = EditTrace(initial_size=g.size)
    h = g
    while min_degree(h) > p:
        x = next(v for v in h if h.degree(v) > 0 and is_simplicial(h, v))
        e = edge(x, h.neighbors(x)[0])
        h = delete_edge_at_simplicial(h, x, e)
        trace.steps.append(("deleted", e))
    trace.final_size = h.size
    return h, trace


def raise_min_degree(g: Graph, k: int) -> tuple[Graph, EditTrace]:
    """Chordal supergraph on the same vertices with every degree at least ``k``."""
    _require_chordal(g)
    if g.order <= k:
        raise TooFewVertices(f"order {g.order} cannot support minimum degree {k}")
    trace = EditTrace(initial_size=g.size)
    h = g
    while True:
        low = [v for v in h if h.degree(v) < k]
        if not low:
            break
        v = low[0]
        y = augment_edge(h, v)
        e = edge(v, y)
        h = add_edge(h, e)
        trace.steps.append(("added", e))
    trace.final_size = h.size
    return h, trace
