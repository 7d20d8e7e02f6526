"""Exact rainbow matchings in edge-colored complete graphs, the extremal
colorings attaining the lower bounds, and the special gadget colorings used
in the structural case analysis.

A rainbow (totally multicolored) matching is a matching whose edges carry
pairwise distinct colors.  Maximum rainbow matching is NP-hard in general;
the solver here is an exact branch-and-bound that is fast at the instance
sizes this package targets (n <= 64, in practice n <= ~20).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import _kernels
from .extremal import ext_matching, ext_value
from .graphcore import (
    Edge,
    EdgeColoring,
    Graph,
    GuardError,
    Matching,
    all_edges,
    canonical_edge,
)

# int64 vertex bitmasks in the kernels cap the instance size
SOLVER_VERTEX_LIMIT = 62

GADGET_KINDS = ("SG1", "SG2a", "SG2b", "SG3")
LB_KINDS = ("LB_GENERIC", "LB_2K", "K4_3PM")


@dataclass(frozen=True)
class RainbowResult:
    size: int
    witness: Matching
    colors_used: frozenset[int]


def _search(col: EdgeColoring, need: int) -> tuple[int, Matching]:
    if col.n > SOLVER_VERTEX_LIMIT:
        raise GuardError(f"solver limited to {SOLVER_VERTEX_LIMIT} vertices")
    colmat = col.color_matrix()
    out_u = np.zeros(col.n // 2 + 2, dtype=np.int64)
    out_v = np.zeros(col.n // 2 + 2, dtype=np.int64)
    size = int(_kernels.rainbow_search(colmat, col.c, need, out_u, out_v))
    witness = Matching.from_edges(
        (int(out_u[i]), int(out_v[i])) for i in range(size)
    )
    return size, witness


def max_rainbow_matching(col: EdgeColoring) -> RainbowResult:
    """The exact maximum rainbow matching of an edge-colored K_n."""
    size, witness = _search(col, 0)
    colors = frozenset(col.color_of(u, v) for u, v in witness.edges)
    return RainbowResult(size, witness, colors)


def has_rainbow_k_matching(col: EdgeColoring, k: int) -> tuple[bool, Matching | None]:
    """Early-exit test for a rainbow matching of k edges."""
    if 2 * k > col.n:
        raise ValueError(f"kK2 needs 2k <= n, got k={k}, n={col.n}")
    size, witness = _search(col, k)
    if size >= k:
        return True, witness
    return False, None


def representative_subgraph(col: EdgeColoring) -> Graph:
    """One edge per color class (the lexicographically least), giving a
    rainbow spanning subgraph that carries every color."""
    chosen: dict[int, Edge] = {}
    for e, c in zip(all_edges(col.n), col.colors):
        if c not in chosen:
            chosen[c] = e
    return Graph(col.n, frozenset(chosen.values()))


@dataclass(frozen=True)
class GadgetColoring:
    """A (possibly partial) coloring of K_n built around a rainbow subgraph.

    For the LB_* and K4_3PM kinds the assignment is total.  For the SG*
    gadgets only the gadget's edges are colored (each with its own color);
    completions may reuse only colors from the existing palette.
    """

    kind: str
    k: int
    n: int
    assigned: dict[Edge, int]
    labels: dict[str, int]
    meta: dict[str, str] = field(default_factory=dict)

    @property
    def palette(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.assigned.values())))

    @property
    def num_colors(self) -> int:
        return len(set(self.assigned.values()))

    @property
    def free_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in all_edges(self.n) if e not in self.assigned)

    @property
    def is_total(self) -> bool:
        return not self.free_edges

    def to_coloring(self) -> EdgeColoring:
        if not self.is_total:
            raise ValueError(f"{self.kind} gadget is partial; complete it first")
        seq = tuple(self.assigned[e] for e in all_edges(self.n))
        return EdgeColoring(self.n, seq, self.num_colors)

    def gadget_graph(self) -> Graph:
        return Graph(self.n, frozenset(self.assigned))

    def sidecar_json(self) -> str:
        return json.dumps(
            {
                "kind": self.kind,
                "k": self.k,
                "n": self.n,
                "labels": dict(sorted(self.labels.items())),
                "palette": list(self.palette),
                "free_edges": [list(e) for e in self.free_edges],
                "meta": dict(sorted(self.meta.items())),
            },
            indent=2,
            sort_keys=True,
        )


def complete_gadget(gc: GadgetColoring, assignment: Mapping[Edge, int]) -> EdgeColoring:
    """Extend a gadget to a total coloring of K_n.

    The assignment must cover exactly the free edges and may only reuse
    colors already present in the gadget's palette (a fresh color would
    change the rainbow representative structure the gadget encodes).
    """
    palette = set(gc.palette)
    free = set(gc.free_edges)
    full = dict(gc.assigned)
    for e, c in assignment.items():
        e = canonical_edge(*e)
        if e not in free:
            raise ValueError(f"edge {e} is not a free edge of the gadget")
        if c not in palette:
            raise ValueError(f"color {c} is not in the gadget palette {sorted(palette)}")
        full[e] = c
        free.discard(e)
    if free:
        raise ValueError(f"assignment leaves {len(free)} free edges uncolored")
    seq = tuple(full[e] for e in all_edges(gc.n))
    return EdgeColoring(gc.n, seq, gc.num_colors)


def _fresh_colors(assigned: dict[Edge, int], edges: list[Edge], start: int) -> int:
    nxt = start
    for e in edges:
        assigned[e] = nxt
        nxt += 1
    return nxt


def gadget_coloring(kind: str, k: int, n: int) -> GadgetColoring:
    """The special rainbow gadgets SG1 / SG2a / SG2b / SG3.

    SG1: components K_{2k-3} (u1,u2,u3 among its vertices) and a triangle
         v1v2v3, the rest isolated; the six labelled edges carry colors
         u1u2=1, u2u3=2, u1u3=3, v1v2=4, v2v3=5, v1v3=6.
    SG2a: K_{2k-3} plus a path v1-v2-v3 (v1v2=4, v2v3=5); needs a spare
         isolated vertex v4, so n >= 2k+1.
    SG2b: K_{2k-3} minus the edge u1u3, plus a triangle v1v2v3.
    SG3: K_{2k-3} minus the edge xz on vertex set {x, z, w, ...}, plus
         pendant edges xu, xv and the two edges yw, yz of the outside
         vertex y.
    Every gadget edge gets its own color (contiguous 1..|E|); all other
    edges of K_n are free.
    """
    if kind not in GADGET_KINDS:
        raise ValueError(f"unknown gadget kind {kind!r}")
    if k < 3:
        raise ValueError(f"gadgets require k >= 3, got {k}")
    h = 2 * k - 3  # clique order
    min_n = 2 * k + 1 if kind in ("SG2a", "SG2b") else 2 * k
    if n < min_n:
        raise ValueError(f"{kind} with k={k} needs n >= {min_n}, got {n}")

    assigned: dict[Edge, int] = {}
    labels: dict[str, int] = {}

    if kind in ("SG1", "SG2a", "SG2b"):
        # clique on 0..h-1 with u1,u2,u3 = 0,1,2; second component follows
        labels.update({"u1": 0, "u2": 1, "u3": 2})
        v1, v2, v3 = h, h + 1, h + 2
        labels.update({"v1": v1, "v2": v2, "v3": v3})
        clique_edges = [e for e in all_edges(h)]
        if kind == "SG2b":
            clique_edges.remove((0, 2))  # u1u3 deleted
        if kind == "SG1":
            assigned[(0, 1)] = 1
            assigned[(1, 2)] = 2
            assigned[(0, 2)] = 3
            assigned[(v1, v2)] = 4
            assigned[(v2, v3)] = 5
            assigned[(v1, v3)] = 6
            rest = [e for e in clique_edges if e not in assigned]
            _fresh_colors(assigned, rest, 7)
        elif kind == "SG2a":
            assigned[(0, 1)] = 1
            assigned[(1, 2)] = 2
            assigned[(0, 2)] = 3
            assigned[(v1, v2)] = 4
            assigned[(v2, v3)] = 5
            rest = [e for e in clique_edges if e not in assigned]
            _fresh_colors(assigned, rest, 6)
            labels["v4"] = h + 3
        else:  # SG2b
            assigned[(0, 1)] = 1
            assigned[(1, 2)] = 2
            assigned[(v1, v2)] = 3
            assigned[(v2, v3)] = 4
            assigned[(v1, v3)] = 5
            rest = [e for e in clique_edges if e not in assigned]
            _fresh_colors(assigned, rest, 6)
            labels["v4"] = h + 3
    else:  # SG3
        # clique vertices 0..h-1 with x=0, z=1, w=2; outside y, u, v
        x, z, w = 0, 1, 2
        y, u, v = h, h + 1, h + 2
        labels.update({"x": x, "z": z, "w": w, "y": y, "u": u, "v": v})
        assigned[canonical_edge(x, u)] = 1
        assigned[canonical_edge(x, v)] = 2
        assigned[canonical_edge(y, z)] = 3
        assigned[canonical_edge(y, w)] = 4
        clique_edges = [e for e in all_edges(h)]
        clique_edges.remove((x, z))
        _fresh_colors(assigned, clique_edges, 5)

    return GadgetColoring(kind, k, n, assigned, labels)


def lower_bound_coloring(n: int, k: int) -> GadgetColoring:
    """The strongest known coloring of K_n with no rainbow k-matching.

    (4,2):         the three-perfect-matchings coloring of K_4 (3 colors);
    n=2k, k>=7:    rainbow K_{2k-3} plus three extra vertices a1,a2,a3 with
                   two mixing colors (C(2k-3,2) + 2 colors);
    otherwise:     an extremal (k-1)-matching-free graph colored rainbow,
                   complement in one extra color (ext(n,(k-1)K2)+1 colors).
    The color count always lands exactly one short of the rainbow number.
    """
    if k < 2 or n < 2 * k:
        raise ValueError(
            f"requires n >= 2k and k >= 2 (for k=1 a single color already "
            f"forces a rainbow K_2); got n={n}, k={k}"
        )
    assigned: dict[Edge, int] = {}
    labels: dict[str, int] = {}
    meta: dict[str, str] = {}

    if (n, k) == (4, 2):
        kind = "K4_3PM"
        labels = {"a1": 0, "a2": 1, "a3": 2, "a4": 3}
        assigned = {
            (0, 1): 1, (2, 3): 1,
            (0, 2): 2, (1, 3): 2,
            (0, 3): 3, (1, 2): 3,
        }
    elif n == 2 * k and k >= 7:
        kind = "LB_2K"
        h = 2 * k - 3
        a1, a2, a3 = h, h + 1, h + 2
        labels = {"a1": a1, "a2": a2, "a3": a3}
        assigned[(a1, a2)] = 1
        assigned[(a1, a3)] = 2
        assigned[(a2, a3)] = 2
        for v in range(h):
            assigned[canonical_edge(a3, v)] = 1
            assigned[canonical_edge(a1, v)] = 2
            assigned[canonical_edge(a2, v)] = 2
        _fresh_colors(assigned, all_edges(h), 3)
    else:
        kind = "LB_GENERIC"
        ew = ext_matching(n, k - 1, verify=n <= 24)
        ct = ew.graphs[0]
        jt = ew.graphs[1]
        host = jt if ew.formula_branch in ("join", "both") else ct
        meta["witness_branch"] = "join" if host is jt else "clique"
        nxt = 1
        for e in sorted(host.edges):
            assigned[e] = nxt
            nxt += 1
        for e in all_edges(n):
            if e not in assigned:
                assigned[e] = nxt
    return GadgetColoring(kind, k, n, assigned, labels, meta)


def sweep_completions(
    gc: GadgetColoring,
    k: int,
    exhaustive: bool = True,
    trials: int = 0,
    seed: int = 0,
    limit: int = 200_000_000,
) -> tuple[int, int]:
    """Check gadget completions for rainbow k-matchings.

    Returns (completions checked, completions WITHOUT a rainbow kK2).  In
    exhaustive mode every palette assignment of the free edges is tried
    (guarded by `limit`); otherwise `trials` uniform assignments.
    """
    free = gc.free_edges
    palette = np.array(gc.palette, dtype=np.int64)
    if exhaustive:
        total = len(palette) ** len(free)
        if total > limit:
            raise GuardError(f"{total} completions exceed the sweep limit {limit}")
    colmat = np.zeros((gc.n, gc.n), dtype=np.int32)
    for (u, v), c in gc.assigned.items():
        colmat[u, v] = c
        colmat[v, u] = c
    fu = np.array([e[0] for e in free], dtype=np.int64)
    fv = np.array([e[1] for e in free], dtype=np.int64)
    checked, bad, _first = _kernels.completion_sweep(
        colmat, fu, fv, palette, gc.num_colors, k, exhaustive, trials, seed
    )
    return int(checked), int(bad)
