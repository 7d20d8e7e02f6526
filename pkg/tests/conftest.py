"""Shared pure-Python reference oracles for the test suite.

Everything here is deliberately naive (plain recursion over edge lists,
no bitmask tricks, no shared code with the package kernels) so that
agreement with the library is meaningful.
"""

import random

from rainbowmatch.graphcore import Graph, all_edges, canonical_edge


def enumerate_matchings(edges):
    """Every matching (as a frozenset of edges) of the given edge list."""
    edges = sorted(canonical_edge(u, v) for u, v in edges)

    def rec(i, used, current):
        yield frozenset(current)
        for j in range(i, len(edges)):
            u, v = edges[j]
            if u in used or v in used:
                continue
            current.append((u, v))
            yield from rec(j + 1, used | {u, v}, current)
            current.pop()

    yield from rec(0, frozenset(), [])


def reference_nu(g: Graph) -> int:
    return max(len(m) for m in enumerate_matchings(g.edges))


def reference_max_rainbow(col) -> int:
    """Maximum rainbow matching size by filtering every matching of K_n."""
    best = 0
    for m in enumerate_matchings(all_edges(col.n)):
        colors = {col.color_of(u, v) for u, v in m}
        if len(colors) == len(m):
            best = max(best, len(m))
    return best


def reference_missed_vertices(g: Graph) -> frozenset:
    """Vertices avoided by at least one maximum matching."""
    nu = reference_nu(g)
    missed = set()
    for m in enumerate_matchings(g.edges):
        if len(m) == nu:
            covered = {x for e in m for x in e}
            missed |= set(range(g.n)) - covered
    return frozenset(missed)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [e for e in all_edges(n) if rng.random() < p])
