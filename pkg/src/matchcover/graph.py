"""Immutable simple undirected graphs and their line-oriented text format."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


class GraphFormatError(ValueError):
    """Malformed graph text; remembers the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are stored as (u, v) pairs with u < v in ascending order, and each
    adjacency list is sorted ascending, so all iteration is reproducible.
    Instances are immutable and safe to share between threads.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        norm: list[tuple[int, int]] = []
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise ValueError(f"edge endpoint out of range: {u}-{v}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e[0]}-{e[1]}")
            seen.add(e)
            norm.append(e)
        norm.sort()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, tuple(norm), tuple(tuple(sorted(a)) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def parse_graph(text: str) -> Graph:
    """Parse the `p <n> <m>` / `e <u> <v>` edge-list format (1-indexed).

    Comment lines start with `c`; blank lines are ignored. Errors name the
    offending line. Vertices are stored 0-indexed.
    """
    n = None
    m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(parts) != 3:
                raise GraphFormatError("header must be 'p <n> <m>'", lineno)
            try:
                n = int(parts[1])
                m = int(parts[2])
            except ValueError:
                raise GraphFormatError("header must be 'p <n> <m>'", lineno) from None
            if n < 1 or m < 0:
                raise GraphFormatError("header values out of range", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before header", lineno)
            if len(parts) != 3:
                raise GraphFormatError("edge must be 'e <u> <v>'", lineno)
            try:
                u = int(parts[1])
                v = int(parts[2])
            except ValueError:
                raise GraphFormatError("edge must be 'e <u> <v>'", lineno) from None
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise GraphFormatError(f"edge endpoint out of range: {u} {v}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            e = (min(u, v) - 1, max(u, v) - 1)
            if e in seen:
                raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
            seen.add(e)
            edges.append(e)
        else:
            raise GraphFormatError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    """Inverse of parse_graph: header plus sorted 1-indexed edge lines."""
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by the vertex set ``s``, relabelled to 0..|s|-1.

    Returns (subgraph, old_ids) where old_ids[i] is the host vertex carried
    by subgraph vertex i; old_ids is sorted ascending.
    """
    old_ids = tuple(sorted(set(s)))
    for v in old_ids:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} not in host graph")
    idx = {old: new for new, old in enumerate(old_ids)}
    sub_edges = [(idx[u], idx[v]) for u, v in g.edges if u in idx and v in idx]
    return Graph.from_edges(len(old_ids), sub_edges), old_ids


def neighbor_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``s`` adjacent to at least one vertex of ``s``."""
    inside = frozenset(s)
    out: set[int] = set()
    for v in inside:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} not in host graph")
        for w in g.adjacency[v]:
            if w not in inside:
                out.add(w)
    return frozenset(out)


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by smallest member."""
    seen = [False] * g.n
    comps: list[tuple[int, ...]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps
