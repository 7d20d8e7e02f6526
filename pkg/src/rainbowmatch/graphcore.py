"""Core graph, edge-coloring and matching value types plus text file I/O.

Vertices are 0-indexed integers.  Edges are stored in normal form
(min, max) and serialized in lexicographic order, so parse/serialize is a
bit-exact round trip.  Edge colorings of K_n keep one color per edge of the
complete graph, in canonical edge order, with colors 1..c and every color
used at least once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

Edge = tuple[int, int]


class FormatError(ValueError):
    """Malformed graph or coloring text; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class GuardError(ValueError):
    """An instance exceeds the size guard of an exhaustive routine."""


def canonical_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop ({u},{v})")
    return (u, v) if u < v else (v, u)


def all_edges(n: int) -> list[Edge]:
    """Edges of K_n in canonical (lexicographic) order."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def edge_index(n: int, u: int, v: int) -> int:
    """Position of edge (u,v) in the canonical edge order of K_n."""
    u, v = canonical_edge(u, v)
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop ({u},{v})")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range or not normalized")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(canonical_edge(u, v) for u, v in edges))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(u for e in self.edges if v in e for u in e if u != v)

    def adjacency_masks(self) -> np.ndarray:
        """int64 bitmask adjacency, the kernel-facing representation."""
        adj = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            adj[u] |= np.int64(1) << np.int64(v)
            adj[v] |= np.int64(1) << np.int64(u)
        return adj

    def complement(self) -> "Graph":
        return Graph(self.n, frozenset(e for e in all_edges(self.n) if e not in self.edges))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete_graph requires n >= 1")
    return Graph(n, frozenset(all_edges(n)))


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges."""

    edges: frozenset[Edge]

    def __post_init__(self):
        seen: set[int] = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop ({u},{v})")
            if u in seen or v in seen:
                raise ValueError("edges are not pairwise vertex-disjoint")
            seen.add(u)
            seen.add(v)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]]) -> "Matching":
        return cls(frozenset(canonical_edge(u, v) for u, v in edges))

    def __len__(self) -> int:
        return len(self.edges)

    def vertices(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e)

    def is_matching_of(self, g: Graph) -> bool:
        return all(e in g.edges for e in self.edges)


def normalize_colors(colors: Iterable[int]) -> tuple[int, ...]:
    """Renumber colors to 1..c by first occurrence (restricted-growth form)."""
    mapping: dict[int, int] = {}
    out = []
    for col in colors:
        if col not in mapping:
            mapping[col] = len(mapping) + 1
        out.append(mapping[col])
    return tuple(out)


@dataclass(frozen=True)
class EdgeColoring:
    """A total edge-coloring of K_n with colors 1..c, every color used.

    `colors` holds one color per edge of K_n in canonical edge order.
    """

    n: int
    colors: tuple[int, ...]
    c: int

    def __post_init__(self):
        expected = self.n * (self.n - 1) // 2
        if len(self.colors) != expected:
            raise ValueError(f"expected {expected} edge colors, got {len(self.colors)}")
        if self.c < 1 and expected > 0:
            raise ValueError("at least one color required")
        used = set(self.colors)
        if expected > 0:
            if min(used) < 1 or max(used) > self.c:
                raise ValueError("colors must lie in 1..c")
            if len(used) != self.c:
                raise ValueError("every color in 1..c must be used")

    @classmethod
    def from_sequence(cls, n: int, colors: Iterable[int]) -> "EdgeColoring":
        normalized = normalize_colors(colors)
        c = max(normalized, default=0)
        return cls(n, normalized, c)

    @classmethod
    def from_map(cls, n: int, color_of: Mapping[tuple[int, int], int]) -> "EdgeColoring":
        seq = []
        for e in all_edges(n):
            if e not in color_of:
                raise ValueError(f"edge {e} missing from coloring")
            seq.append(color_of[e])
        if len(color_of) != len(seq):
            raise ValueError("coloring mentions edges outside K_n")
        return cls.from_sequence(n, seq)

    def color_of(self, u: int, v: int) -> int:
        return self.colors[edge_index(self.n, u, v)]

    def color_matrix(self) -> np.ndarray:
        mat = np.zeros((self.n, self.n), dtype=np.int32)
        for (u, v), col in zip(all_edges(self.n), self.colors):
            mat[u, v] = col
            mat[v, u] = col
        return mat

    def color_classes(self) -> dict[int, list[Edge]]:
        classes: dict[int, list[Edge]] = {col: [] for col in range(1, self.c + 1)}
        for e, col in zip(all_edges(self.n), self.colors):
            classes[col].append(e)
        return classes

    def class_sizes(self) -> tuple[int, ...]:
        sizes = [0] * self.c
        for col in self.colors:
            sizes[col - 1] += 1
        return tuple(sorted(sizes))


# ---------------------------------------------------------------------------
# File formats
#
# Graph file:    line 1 = n; then one "u v" line per edge, 0 <= u < v < n,
#                sorted lexicographically on output.
# Coloring file: line 1 = "n c"; then "u v color" for every edge of K_n,
#                sorted lexicographically on output.  UTF-8, LF endings.
# ---------------------------------------------------------------------------


def _split_ints(text: str, count: int, lineno: int) -> list[int]:
    parts = text.split()
    if len(parts) != count:
        raise FormatError(f"expected {count} fields, got {len(parts)}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"non-integer field in {parts!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    lines = text.splitlines()
    nonempty = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not nonempty:
        raise FormatError("empty graph file")
    lineno, header = nonempty[0]
    (n,) = _split_ints(header, 1, lineno)
    if n < 0:
        raise FormatError("negative vertex count", lineno)
    edges: set[Edge] = set()
    for lineno, ln in nonempty[1:]:
        u, v = _split_ints(ln, 2, lineno)
        if u == v:
            raise FormatError(f"self-loop ({u},{v})", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex index out of range in ({u},{v})", lineno)
        e = canonical_edge(u, v)
        if e in edges:
            raise FormatError(f"duplicate edge ({u},{v})", lineno)
        edges.add(e)
    return Graph(n, frozenset(edges))


def serialize_graph(g: Graph) -> str:
    out = [str(g.n)]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def parse_coloring(text: str) -> EdgeColoring:
    lines = text.splitlines()
    nonempty = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not nonempty:
        raise FormatError("empty coloring file")
    lineno, header = nonempty[0]
    n, c = _split_ints(header, 2, lineno)
    if n < 0:
        raise FormatError("negative vertex count", lineno)
    assigned: dict[Edge, int] = {}
    for lineno, ln in nonempty[1:]:
        u, v, col = _split_ints(ln, 3, lineno)
        if u == v:
            raise FormatError(f"self-loop ({u},{v})", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex index out of range in ({u},{v})", lineno)
        if col < 1:
            raise FormatError(f"non-positive color {col}", lineno)
        e = canonical_edge(u, v)
        if e in assigned:
            raise FormatError(f"repeated edge ({u},{v})", lineno)
        assigned[e] = col
    missing = [e for e in all_edges(n) if e not in assigned]
    if missing:
        raise FormatError(f"incomplete coloring: edge {missing[0]} missing")
    seq = tuple(assigned[e] for e in all_edges(n))
    used = set(seq)
    if used == set(range(1, c + 1)):
        # already in normal form; keep byte-exact round trips
        return EdgeColoring(n, seq, c)
    return EdgeColoring.from_sequence(n, seq)


def serialize_coloring(col: EdgeColoring) -> str:
    out = [f"{col.n} {col.c}"]
    out.extend(f"{u} {v} {c}" for (u, v), c in zip(all_edges(col.n), col.colors))
    return "\n".join(out) + "\n"
