"""Exact matching algorithms on small graphs.

The matching number of every induced subgraph comes from a single subset
DP table (see _kernels.matching_table), which keeps all derived queries --
witness extraction, factor-criticality, Gallai-Edmonds probes -- exact and
cheap at the instance sizes this package targets.  Graphs with more than
MAX_DP_VERTICES vertices fall back to networkx's blossom implementation.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graphcore import Edge, Graph, GuardError, Matching, all_edges, canonical_edge

MAX_DP_VERTICES = 24


class MatchingError(ValueError):
    """A matching with the requested property does not exist."""


@functools.lru_cache(maxsize=16)
def _dp_cached(n: int, edges: frozenset[Edge]) -> np.ndarray:
    adj = Graph(n, edges).adjacency_masks()
    return _kernels.matching_table(adj)


def _dp(g: Graph) -> np.ndarray:
    if g.n > MAX_DP_VERTICES:
        raise GuardError(f"subset DP limited to {MAX_DP_VERTICES} vertices, got {g.n}")
    return _dp_cached(g.n, g.edges)


def _nu_large(g: Graph) -> int:
    import networkx as nx

    gx = nx.Graph()
    gx.add_nodes_from(range(g.n))
    gx.add_edges_from(g.edges)
    return len(nx.max_weight_matching(gx, maxcardinality=True))


def matching_number(g: Graph) -> int:
    """nu(g), the size of a maximum matching."""
    if g.n > MAX_DP_VERTICES:
        return _nu_large(g)
    dp = _dp(g)
    return int(dp[(1 << g.n) - 1])


def _lex_min_matching_on_mask(g: Graph, dp: np.ndarray, mask: int) -> list[Edge]:
    """Lexicographically least maximum matching of the induced subgraph `mask`.

    The first edge of any maximum matching in canonical order is the least
    edge e with nu(G - V(e)) = nu(G) - 1; recurse on the remainder.
    """
    edges: list[Edge] = []
    rem = mask
    while dp[rem] > 0:
        target = int(dp[rem]) - 1
        for u, v in all_edges(g.n):
            if (rem >> u) & 1 and (rem >> v) & 1 and (u, v) in g.edges:
                nxt = rem & ~(1 << u) & ~(1 << v)
                if dp[nxt] == target:
                    edges.append((u, v))
                    rem = nxt
                    break
        else:  # pragma: no cover - dp guarantees progress
            raise AssertionError("no extendable edge found")
    return edges


def max_matching(g: Graph) -> Matching:
    """A maximum matching; ties broken toward the lexicographically least
    edge set in canonical edge order, so certificates are deterministic."""
    if g.n > MAX_DP_VERTICES:
        raise GuardError(
            f"max_matching witness extraction limited to {MAX_DP_VERTICES} vertices"
        )
    dp = _dp(g)
    return Matching(frozenset(_lex_min_matching_on_mask(g, dp, (1 << g.n) - 1)))


def is_factor_critical(g: Graph) -> bool:
    """True iff g - v has a perfect matching for every vertex v."""
    if g.n % 2 == 0 or g.n == 0:
        return False
    dp = _dp(g)
    full = (1 << g.n) - 1
    return all(2 * int(dp[full ^ (1 << v)]) == g.n - 1 for v in range(g.n))


def near_perfect_matching_avoiding(g: Graph, v: int) -> Matching:
    """A matching covering every vertex except `v` exactly."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} not in graph on {g.n} vertices")
    dp = _dp(g)
    mask = ((1 << g.n) - 1) ^ (1 << v)
    if 2 * int(dp[mask]) != g.n - 1:
        raise MatchingError(
            f"graph minus vertex {v} has no perfect matching "
            f"(nu = {int(dp[mask])}, needs {(g.n - 1) // 2})"
        )
    return Matching(frozenset(_lex_min_matching_on_mask(g, dp, mask)))


@dataclass(frozen=True)
class BipartitionedGraph:
    """A graph together with a bipartition A u B; every edge crosses sides."""

    graph: Graph
    side_A: frozenset[int]
    side_B: frozenset[int]

    def __post_init__(self):
        verts = frozenset(range(self.graph.n))
        if self.side_A | self.side_B != verts or self.side_A & self.side_B:
            raise ValueError("sides must partition the vertex set")
        for u, v in self.graph.edges:
            if (u in self.side_A) == (v in self.side_A):
                raise ValueError(f"edge ({u},{v}) does not cross the bipartition")

    @property
    def m(self) -> int:
        return len(self.side_A)

    @property
    def n_B(self) -> int:
        return len(self.side_B)

    def neighbor_masks(self) -> tuple[list[int], list[int], np.ndarray]:
        """(sorted A, sorted B, per-A bitmask of B-neighbours by B position)."""
        a_list = sorted(self.side_A)
        b_list = sorted(self.side_B)
        b_pos = {b: i for i, b in enumerate(b_list)}
        nbr = np.zeros(len(a_list), dtype=np.int64)
        for i, a in enumerate(a_list):
            for b in self.graph.neighbors(a):
                nbr[i] |= np.int64(1) << np.int64(b_pos[b])
        return a_list, b_list, nbr


DEFICIENCY_EXHAUSTIVE_LIMIT = 20


def bipartite_deficiency(bg: BipartitionedGraph) -> tuple[int, frozenset[int], Matching]:
    """Ore deficiency d = max_{S subseteq A} (|S| - |N(S)|), a witness S, and
    a maximum matching (of size |A| - d).

    For |A| <= 20 the deficiency comes from exhaustive subset enumeration;
    beyond that from the Koenig dual (alternating reachability from the
    unmatched A-vertices).  Both agree wherever both apply.
    """
    a_list, b_list, nbr = bg.neighbor_masks()
    m, nb = len(a_list), len(b_list)
    match_right = np.empty(max(nb, 1), dtype=np.int64)
    size = int(_kernels.bip_matching(nbr, nb, match_right)) if m and nb else 0
    if m <= DEFICIENCY_EXHAUSTIVE_LIMIT:
        if m == 0:
            d, s_mask = 0, 0
        else:
            d, s_mask = _kernels.deficiency_exhaustive(nbr, m)
            d, s_mask = int(d), int(s_mask)
    else:
        d = m - size
        s_mask = _koenig_witness(nbr, m, nb, match_right)
    witness = frozenset(a_list[i] for i in range(m) if (s_mask >> i) & 1)
    edges = [
        (a_list[int(match_right[b])], b_list[b]) for b in range(nb) if match_right[b] >= 0
    ]
    return d, witness, Matching.from_edges(edges)


def _koenig_witness(nbr, m, nb, match_right) -> int:
    """A-side vertices reachable from unmatched A-vertices by alternating
    paths; attains |S| - |N(S)| = |A| - nu."""
    matched_a = {int(match_right[b]) for b in range(nb) if match_right[b] >= 0}
    frontier = [a for a in range(m) if a not in matched_a]
    s_mask = 0
    for a in frontier:
        s_mask |= 1 << a
    seen_b: set[int] = set()
    while frontier:
        nxt = []
        for a in frontier:
            mask = int(nbr[a])
            while mask:
                lb = mask & (-mask)
                mask ^= lb
                b = lb.bit_length() - 1
                if b in seen_b:
                    continue
                seen_b.add(b)
                a2 = int(match_right[b])
                if a2 >= 0 and not (s_mask >> a2) & 1:
                    s_mask |= 1 << a2
                    nxt.append(a2)
        frontier = nxt
    return s_mask
