"""Brute-force verification of the minimum-size formulas at small orders.

The search deliberately shares nothing with the recognizer or the
constructions: graphs are bitmask adjacency lists, and chordality is
decided by looking at every vertex subset of size >= 4 and asking whether
it induces a cycle. That check is exponential but obviously correct, which
is the point.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Literal, Optional, Sequence

from .errors import InvalidParameters, OrderTooLarge
from .extremal import g_formula, g_hypotheses_hold, phi
from .graph import Graph, from_edges
from .graph6 import to_graph6

MAX_ORDER = 8

Mode = Literal["both", "unrestricted", "connected"]


# -- naive chordality --------------------------------------------------------


@lru_cache(maxsize=None)
def _cycle_candidates(n: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Vertex subsets of size >= 4 as (bitmask, members), smallest first."""
    out = []
    for size in range(4, n + 1):
        for members in combinations(range(n), size):
            mask = 0
            for v in members:
                mask |= 1 << v
            out.append((mask, members))
    return tuple(out)


def _mask_connected(adj: Sequence[int], mask: int) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nxt |= adj[low.bit_length() - 1]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def find_induced_cycle_masks(adj: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Vertex set of an induced cycle of length >= 4, or ``None``.

    ``adj[v]`` is the neighbour bitmask of vertex ``v``.
    """
    for mask, members in _cycle_candidates(len(adj)):
        if all((adj[v] & mask).bit_count() == 2 for v in members) and _mask_connected(adj, mask):
            return members
    return None


def graph_masks(g: Graph) -> list[int]:
    masks = []
    for nb in g.adjacency:
        m = 0
        for w in nb:
            m |= 1 << w
        masks.append(m)
    return masks


def naive_is_chordal(g: Graph) -> bool:
    """Chordality by exhaustive induced-cycle search; intended for ``n <= 8``."""
    return find_induced_cycle_masks(graph_masks(g)) is None


# -- exhaustive minimum-size search ------------------------------------------


@dataclass
class OracleReport:
    n: int
    k: int
    connected_required: bool
    exact_degree: bool
    min_size: Optional[int]
    witness: Optional[str]
    witnesses_at_min: int
    graphs_examined: int
    minimizers: list[str] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return self.min_size is not None


@dataclass
class _Chunk:
    examined: int = 0
    hits: int = 0
    first: Optional[tuple[int, ...]] = None
    kept: list[tuple[int, ...]] = field(default_factory=list)


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


def _combos(P: int, m: int, lead: Optional[int]) -> Iterator[tuple[int, ...]]:
    if lead is None:
        return combinations(range(P), m)
    return ((lead,) + rest for rest in combinations(range(lead + 1, P), m - 1))


def _scan(n: int, k: int, m: int, lead: Optional[int], connected: bool, exact: bool, keep: bool) -> _Chunk:
    pairs = _pairs(n)
    bits = [(a, b, 1 << a, 1 << b) for a, b in pairs]
    full = (1 << n) - 1
    out = _Chunk()
    for combo in _combos(len(pairs), m, lead):
        out.examined += 1
        adj = [0] * n
        for idx in combo:
            a, b, ma, mb = bits[idx]
            adj[a] |= mb
            adj[b] |= ma
        low = min(x.bit_count() for x in adj)
        if low < k or (exact and low != k):
            continue
        if connected and not _mask_connected(adj, full):
            continue
        if find_induced_cycle_masks(adj) is not None:
            continue
        out.hits += 1
        if out.first is None:
            out.first = combo
        if keep:
            out.kept.append(combo)
    return out


def _scan_args(args: tuple) -> _Chunk:
    return _scan(*args)


def _combo_graph(n: int, combo: Iterable[int]) -> Graph:
    pairs = _pairs(n)
    return from_edges(n, (pairs[i] for i in combo))


def size_floor(n: int, k: int, connected_required: bool) -> int:
    """Degree-sum lower bound on the size; never uses the closed-form value."""
    floor = -(-n * k // 2)
    if connected_required:
        floor = max(floor, n - 1)
    return floor


def brute_force_min_size(
    n: int,
    k: int,
    connected_required: bool = False,
    *,
    exact_degree: bool = True,
    jobs: int = 1,
    keep_minimizers: bool = False,
) -> OracleReport:
    """Fewest edges of a chordal graph of order ``n`` with minimum degree ``k``.

    Sizes are tried upward from :func:`size_floor`; at each size every
    subset of the vertex pairs is examined in lexicographic order. The first
    size with a valid graph is the answer, the lexicographically first such
    edge set the witness, and all graphs at that size are counted.

    With ``exact_degree=False`` the degree filter becomes ``delta >= k``.
    With ``jobs > 1`` each size is split by the first pair index and the
    parts are scanned in worker processes; the merge keeps the smallest
    witness, so the report does not depend on ``jobs``.
    """
    if n > MAX_ORDER:
        raise OrderTooLarge(f"exhaustive search is limited to n <= {MAX_ORDER}, got {n}")
    if not 1 <= k < n:
        raise InvalidParameters(f"need 1 <= k < n, got n={n}, k={k}")

    P = comb(n, 2)
    examined = 0
    executor = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        for m in range(size_floor(n, k, connected_required), P + 1):
            if executor is None or m == 0:
                chunks = [_scan(n, k, m, None, connected_required, exact_degree, keep_minimizers)]
            else:
                args = [(n, k, m, lead, connected_required, exact_degree, keep_minimizers) for lead in range(P - m + 1)]
                chunks = list(executor.map(_scan_args, args))
            examined += sum(c.examined for c in chunks)
            hits = sum(c.hits for c in chunks)
            if not hits:
                continue
            first = next(c.first for c in chunks if c.first is not None)
            kept = [to_graph6(_combo_graph(n, combo)) for c in chunks for combo in c.kept]
            return OracleReport(
                n, k, connected_required, exact_degree,
                min_size=m,
                witness=to_graph6(_combo_graph(n, first)),
                witnesses_at_min=hits,
                graphs_examined=examined,
                minimizers=kept,
            )
    finally:
        if executor is not None:
            executor.shutdown()
    return OracleReport(n, k, connected_required, exact_degree, None, None, 0, examined)


# -- comparison tables -------------------------------------------------------


@dataclass
class TableRow:
    n: int
    k: int
    connected: bool
    formula_value: int
    oracle_value: Optional[int]
    match: bool
    witness_graph6: Optional[str]
    witnesses_at_min: int
    graphs_examined: int

    def to_json(self) -> dict:
        return asdict(self)


def table_pairs(n_max: int, mode: Mode = "both") -> list[tuple[int, int, bool]]:
    """The ``(n, k, connected)`` rows a table with this ``n_max`` contains."""
    rows = []
    for n in range(2, n_max + 1):
        for k in range(1, n):
            if mode in ("both", "unrestricted"):
                rows.append((n, k, False))
            if mode in ("both", "connected") and g_hypotheses_hold(n, k):
                rows.append((n, k, True))
    return rows


def verify_tables(n_max: int, mode: Mode = "both", jobs: int = 1) -> Iterator[TableRow]:
    """Compare the oracle with the closed forms for every valid pair up to ``n_max``.

    Rows are yielded as they are computed, unrestricted before connected
    for each ``(n, k)``.
    """
    if n_max > MAX_ORDER:
        raise OrderTooLarge(f"tables are limited to n_max <= {MAX_ORDER}, got {n_max}")
    if mode not in ("both", "unrestricted", "connected"):
        raise InvalidParameters(f"unknown mode {mode!r}")
    for n, k, connected in table_pairs(n_max, mode):
        expected = g_formula(n, k) if connected else phi(n, k)
        rep = brute_force_min_size(n, k, connected, jobs=jobs)
        yield TableRow(
            n, k, connected,
            formula_value=expected,
            oracle_value=rep.min_size,
            match=rep.min_size == expected,
            witness_graph6=rep.witness,
            witnesses_at_min=rep.witnesses_at_min,
            graphs_examined=rep.graphs_examined,
        )


# -- random chordal graphs ---------------------------------------------------


def random_chordal(n: int, density: float, seed: Optional[int] = None) -> Graph:
    """A chordal graph grown one simplicial vertex at a time.

    Vertex ``i`` picks a uniform earlier vertex ``u`` and attaches to ``u``
    plus each other member of ``u``'s recorded clique with probability
    ``density``. The attachment set lies inside a clique, so ``i`` is
    simplicial when added and the graph stays chordal; ``i``'s recorded
    clique is its attachment set plus itself.
    """
    if n < 1:
        raise InvalidParameters("n must be at least 1")
    if not 0.0 <= density <= 1.0:
        raise InvalidParameters(f"density must lie in [0, 1], got {density}")
    rng = random.Random(seed)
    cliques: list[list[int]] = [[0]]
    edges = []
    for i in range(1, n):
        u = rng.randrange(i)
        attach = [u] + [w for w in cliques[u] if w != u and rng.random() < density]
        edges.extend((w, i) for w in attach)
        cliques.append(sorted(attach) + [i])
    return from_edges(n, edges)
