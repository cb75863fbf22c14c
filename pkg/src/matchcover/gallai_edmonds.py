"""Gallai-Edmonds decomposition (D, A, C) from a maximum matching."""

from __future__ import annotations

from dataclasses import dataclass

from .blossom import Matching, augment, maximum_matching, outer_vertices
from .graph import Graph, components, induced_subgraph, neighbor_set


@dataclass(frozen=True)
class GallaiEdmonds:
    """The partition of V(G) into D, A, C plus the matching that produced it.

    d: vertices missed by some maximum matching.
    a: N(d) outside d.
    c: the rest; the matching restricted to c is perfect on c.
    d_components: components of the subgraph induced by d, by smallest member.
    d_star: members of d isolated within that subgraph.
    """

    d: frozenset[int]
    a: frozenset[int]
    c: frozenset[int]
    max_matching: Matching
    d_components: tuple[tuple[int, ...], ...]
    d_star: frozenset[int]


def decompose(g: Graph, m: Matching) -> GallaiEdmonds:
    """Decompose g using a maximum matching m.

    D is read off the final alternating forest as the outer-labelled
    vertices (blossom interiors included); rejects m if it is not maximum.
    """
    if not m.is_valid_on(g):
        raise ValueError("matching is not valid on this graph")
    if augment(g, m) is not None:
        raise ValueError("matching is not maximum: an augmenting path exists")
    d = outer_vertices(g, m)
    a = neighbor_set(g, d)
    c = frozenset(range(g.n)) - d - a
    sub, old_ids = induced_subgraph(g, d)
    d_components = tuple(
        tuple(old_ids[v] for v in comp) for comp in components(sub)
    )
    d_star = frozenset(comp[0] for comp in d_components if len(comp) == 1)
    return GallaiEdmonds(d, a, c, m, d_components, d_star)


def verify_decomposition(g: Graph, ge: GallaiEdmonds) -> bool:
    """Check the decomposition against the per-vertex definition of D.

    Each membership test recomputes a maximum matching of g minus a vertex,
    independently of the forest labels used by :func:`decompose`.
    """
    nu = len(maximum_matching(g))
    for v in range(g.n):
        keep = [w for w in range(g.n) if w != v]
        sub, _ = induced_subgraph(g, keep)
        in_d = len(maximum_matching(sub)) == nu
        if in_d != (v in ge.d):
            return False
    if ge.a != neighbor_set(g, ge.d):
        return False
    if ge.c != frozenset(range(g.n)) - ge.d - ge.a:
        return False
    if ge.d & ge.a or ge.d & ge.c or ge.a & ge.c:
        return False
    return True


def is_factor_critical(h: Graph) -> bool:
    """True iff h is connected and h minus any one vertex has a perfect matching."""
    if h.n == 0 or len(components(h)) != 1:
        return False
    if h.n % 2 == 0:
        return False
    for v in range(h.n):
        keep = [w for w in range(h.n) if w != v]
        sub, _ = induced_subgraph(h, keep)
        if not maximum_matching(sub).is_perfect_on(sub):
            return False
    return True
