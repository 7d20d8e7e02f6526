"""Closed-form extremal numbers for matchings, their witness graphs, and
exhaustive small-scale oracles.

ext(n, k) below always means the maximum edge count of an n-vertex graph
with no matching of size k.  The closed form is the larger of two witness
families: a clique K_{2k-1} padded with isolated vertices, and the join of
K_{k-1} with an independent set on the remaining n-k+1 vertices.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from . import _kernels
from .graphcore import Graph, GuardError, all_edges
from .matching import matching_number

BRUTE_FORCE_LIMIT = 7
BRUTE_FORCE_BIPARTITE_LIMIT = 20


def _choose2(x: int) -> int:
    return math.comb(x, 2)


def clique_term(n: int, k: int) -> int:
    return _choose2(2 * k - 1)


def join_term(n: int, k: int) -> int:
    return _choose2(k - 1) + (k - 1) * (n - k + 1)


def ext_value(n: int, k: int) -> int:
    """max{C(2k-1,2), C(k-1,2) + (k-1)(n-k+1)} for n >= 2k, k >= 1."""
    if k < 1 or n < 2 * k:
        raise ValueError(f"ext(n,k) requires n >= 2k >= 2, got n={n}, k={k}")
    return max(clique_term(n, k), join_term(n, k))


def clique_witness(n: int, k: int) -> Graph:
    """K_{2k-1} plus n - 2k + 1 isolated vertices."""
    return Graph(n, frozenset((u, v) for u, v in all_edges(n) if v < 2 * k - 1))


def join_witness(n: int, k: int) -> Graph:
    """Join of K_{k-1} (vertices 0..k-2) with an independent set."""
    return Graph(n, frozenset((u, v) for u, v in all_edges(n) if u < k - 1))


@dataclass(frozen=True)
class ExtremalWitness:
    value: int
    graphs: tuple[Graph, ...]
    formula_branch: str  # "clique", "join" or "both"


def ext_matching(n: int, k: int, verify: bool = True) -> ExtremalWitness:
    """Extremal edge count for matchings of size k plus both witness graphs.

    With verify=True (the default) each witness is checked to have exactly
    `value` edges and matching number k - 1.
    """
    value = ext_value(n, k)
    ct, jt = clique_term(n, k), join_term(n, k)
    branch = "both" if ct == jt else ("clique" if ct > jt else "join")
    graphs = (clique_witness(n, k), join_witness(n, k))
    if verify:
        for g, term in zip(graphs, (ct, jt)):
            if len(g.edges) != term:
                raise AssertionError("witness edge count disagrees with formula")
            if term == value and matching_number(g) != k - 1:
                raise AssertionError("extremal witness has wrong matching number")
    return ExtremalWitness(value, graphs, branch)


def ext_bipartite_matching(m: int, n_B: int, k: int) -> int:
    """Extremal edge count m(k-1) for bipartite graphs with sides m >= n_B."""
    if not (m >= n_B >= k >= 1):
        raise ValueError(
            f"requires m >= n_B >= k >= 1 (swap sides first if m < n_B); "
            f"got m={m}, n_B={n_B}, k={k}"
        )
    return m * (k - 1)


def ext_2k_case(k: int) -> tuple[int, str]:
    """ext(2k, (k-1)K2) with its attaining branch.

    The two candidate terms differ by (k-2)(k-7)/2, so the join family wins
    for 2 <= k <= 7 and the clique family for k = 2 or k >= 7, with ties at
    k in {2, 7}.
    """
    if k < 2:
        raise ValueError(f"requires k >= 2, got {k}")
    ew = ext_matching(2 * k, k - 1, verify=2 * k <= 24)
    return ew.value, ew.formula_branch


@functools.lru_cache(maxsize=None)
def _ext_scan_cached(n: int):
    return _kernels.ext_scan(n)


def brute_force_ext(n: int, k: int) -> int:
    """max |E| over all labelled graphs on n vertices with nu < k, by
    exhaustive enumeration of all 2^C(n,2) graphs."""
    if n > BRUTE_FORCE_LIMIT:
        raise GuardError(f"brute_force_ext limited to n <= {BRUTE_FORCE_LIMIT}")
    if k < 1 or n < 2 * k:
        raise ValueError(f"requires n >= 2k >= 2, got n={n}, k={k}")
    return int(_ext_scan_cached(n)[k - 1])


@functools.lru_cache(maxsize=None)
def _ext_bipartite_scan_cached(m: int, n_B: int):
    return _kernels.ext_bipartite_scan(m, n_B)


def brute_force_ext_bipartite(m: int, n_B: int, k: int) -> int:
    """max |E| over bipartite graphs on fixed sides (m, n_B) with nu < k."""
    if m * n_B > BRUTE_FORCE_BIPARTITE_LIMIT:
        raise GuardError(
            f"bipartite brute force limited to m*n_B <= {BRUTE_FORCE_BIPARTITE_LIMIT}"
        )
    if not (m >= n_B >= k >= 1):
        raise ValueError(f"requires m >= n_B >= k >= 1, got m={m}, n_B={n_B}, k={k}")
    return int(_ext_bipartite_scan_cached(m, n_B)[k - 1])
