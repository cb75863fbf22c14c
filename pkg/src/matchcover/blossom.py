"""Maximum matching in general graphs via blossom shrinking.

The search engine is the classic contraction scheme: grow an alternating
tree from an exposed vertex, shrink odd cycles onto their base, stop when an
augmenting path appears or the tree becomes Hungarian.  Contracted blossoms
are tracked with a union-find structure so one search costs about O(m)
rather than O(n) per contraction.  Exposed vertices are scanned in ascending
order and adjacency lists are sorted, so results are deterministic.  The
outer labelling of the final (failed) search is exposed through
:func:`outer_vertices` for the structure decomposition.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph

_UNLABELED = 0
_OUTER = 1
_INNER = 2


class Matching:
    """Pairwise vertex-disjoint edges over a host graph, kept as a mate table."""

    __slots__ = ("_mate",)

    def __init__(self, mate):
        self._mate = tuple(mate)

    @classmethod
    def empty(cls, n: int) -> "Matching":
        return cls([-1] * n)

    @classmethod
    def from_edges(cls, g: Graph, edges) -> "Matching":
        mate = [-1] * g.n
        for u, v in edges:
            if not g.has_edge(u, v):
                raise ValueError(f"{u}-{v} is not an edge of the host graph")
            if mate[u] != -1 or mate[v] != -1:
                raise ValueError(f"edge {u}-{v} shares a vertex with another edge")
            mate[u] = v
            mate[v] = u
        return cls(mate)

    @property
    def n(self) -> int:
        return len(self._mate)

    @property
    def mates(self) -> tuple[int, ...]:
        return self._mate

    def mate(self, v: int) -> int:
        return self._mate[v]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u, w in enumerate(self._mate) if u < w]

    def vertices(self) -> frozenset[int]:
        return frozenset(v for v, w in enumerate(self._mate) if w != -1)

    def covers(self, vs) -> bool:
        return all(self._mate[v] != -1 for v in vs)

    def is_perfect_on(self, g: Graph) -> bool:
        return g.n == len(self._mate) and all(w != -1 for w in self._mate)

    def is_valid_on(self, g: Graph) -> bool:
        if g.n != len(self._mate):
            return False
        for v, w in enumerate(self._mate):
            if w == -1:
                continue
            if not (0 <= w < g.n) or self._mate[w] != v or not g.has_edge(v, w):
                return False
        return True

    def __len__(self) -> int:
        return sum(1 for v, w in enumerate(self._mate) if v < w)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matching) and self._mate == other._mate

    def __hash__(self) -> int:
        return hash(self._mate)

    def __repr__(self) -> str:
        return f"Matching({self.edges()!r})"


@dataclass(frozen=True)
class AugmentingPath:
    """Alternating path between two exposed vertices; odd number of edges."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 2 or len(self.vertices) % 2 != 0:
            raise ValueError("augmenting path must have an odd number of edges")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("augmenting path must be simple")


class _Search:
    """One alternating-forest search over a fixed mate table.

    Blossom bases are merged in a union-find whose representative is forced
    to the blossom base, so base lookups stay near O(1) amortized.
    """

    __slots__ = ("adj", "mate", "n", "parent", "label", "p", "queue")

    def __init__(self, adj, mate):
        self.adj = adj
        self.mate = mate
        self.n = len(adj)
        self.parent = list(range(self.n))
        self.label = [_UNLABELED] * self.n
        self.p = [-1] * self.n
        self.queue = deque()

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def _lowest_common_base(self, a, b):
        mate, p = self.mate, self.p
        seen = set()
        a = self.find(a)
        while True:
            seen.add(a)
            if mate[a] == -1:
                break
            a = self.find(p[mate[a]])
        b = self.find(b)
        while b not in seen:
            if mate[b] == -1:
                raise RuntimeError(
                    "alternating trees crossed; matching is not maximum"
                )
            b = self.find(p[mate[b]])
        return b

    def _mark_side(self, v, b, child, merge):
        # Walk the tree path from v up to the cycle base b, recording the
        # alternate route around the cycle in p.  Union-find state must not
        # change until both sides are walked, so bases are only collected.
        mate, p, label = self.mate, self.p, self.label
        while self.find(v) != b:
            mv = mate[v]
            merge.append(v)
            merge.append(mv)
            if label[mv] == _INNER:
                label[mv] = _OUTER
                self.queue.append(mv)
            p[v] = child
            child = mv
            v = p[mv]

    def _contract(self, v, to):
        b = self._lowest_common_base(v, to)
        merge: list[int] = []
        self._mark_side(v, b, to, merge)
        self._mark_side(to, b, v, merge)
        parent = self.parent
        for x in merge:
            parent[self.find(x)] = b

    def run(self, roots, stop_on_augment):
        """Grow trees from the given exposed roots.

        Returns the far end of an augmenting path when one is found and
        stop_on_augment is set, else None after the forest is exhausted.
        """
        mate, label, p = self.mate, self.label, self.p
        for r in roots:
            label[r] = _OUTER
            self.queue.append(r)
        queue = self.queue
        while queue:
            v = queue.popleft()
            for to in self.adj[v]:
                if mate[v] == to or self.find(v) == self.find(to):
                    continue
                if label[to] == _OUTER:
                    self._contract(v, to)
                elif label[to] == _UNLABELED:
                    p[to] = v
                    if mate[to] == -1:
                        if stop_on_augment:
                            return to
                        raise RuntimeError(
                            "augmenting path found; matching is not maximum"
                        )
                    label[to] = _INNER
                    label[mate[to]] = _OUTER
                    queue.append(mate[to])
        return None


def _path_vertices(mate, p, end):
    """Walk parent links from the augmenting path's far end back to the root."""
    seq = [end]
    v = end
    while True:
        pv = p[v]
        seq.append(pv)
        nxt = mate[pv]
        if nxt == -1:
            break
        seq.append(nxt)
        v = nxt
    return seq


def _flip(mate, path):
    for i in range(0, len(path), 2):
        u, v = path[i], path[i + 1]
        mate[u] = v
        mate[v] = u


def _maximize(adj, mate):
    """Augment from every exposed vertex, ascending, until none succeeds."""
    for root in range(len(adj)):
        if mate[root] != -1:
            continue
        search = _Search(adj, mate)
        end = search.run([root], stop_on_augment=True)
        if end is not None:
            _flip(mate, _path_vertices(mate, search.p, end))


def maximum_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching, computed deterministically.

    A greedy seed pass matches each vertex to its lowest free neighbour; the
    remaining exposed vertices are then processed by tree search.
    """
    mate = [-1] * g.n
    adj = g.adjacency
    for u in range(g.n):
        if mate[u] == -1:
            for v in adj[u]:
                if mate[v] == -1:
                    mate[u] = v
                    mate[v] = u
                    break
    _maximize(adj, mate)
    return Matching(mate)


def augment(g: Graph, m: Matching) -> AugmentingPath | None:
    """An augmenting path for m, or None when m is maximum."""
    if not m.is_valid_on(g):
        raise ValueError("matching is not valid on this graph")
    mate = list(m.mates)
    for root in range(g.n):
        if mate[root] != -1:
            continue
        search = _Search(g.adjacency, mate)
        end = search.run([root], stop_on_augment=True)
        if end is not None:
            seq = _path_vertices(mate, search.p, end)
            seq.reverse()
            return AugmentingPath(tuple(seq))
    return None


def apply_augmentation(m: Matching, path: AugmentingPath) -> Matching:
    """Symmetric difference of m with the path's edges; grows m by one edge."""
    mate = list(m.mates)
    verts = path.vertices
    if mate[verts[0]] != -1 or mate[verts[-1]] != -1:
        raise ValueError("path endpoints must be exposed")
    for i in range(1, len(verts) - 1, 2):
        if mate[verts[i]] != verts[i + 1]:
            raise ValueError("path does not alternate with the matching")
    _flip(mate, list(verts))
    return Matching(mate)


def maximum_matching_covering(g: Graph, m0: Matching) -> Matching:
    """A maximum matching whose covered set contains V(m0).

    Repeated augmentation never uncovers a covered vertex, so growing m0 to
    maximum cardinality preserves its coverage.
    """
    if not m0.is_valid_on(g):
        raise ValueError("matching is not valid on this graph")
    mate = list(m0.mates)
    _maximize(g.adjacency, mate)
    return Matching(mate)


def outer_vertices(g: Graph, m: Matching) -> frozenset[int]:
    """Vertices reachable from an exposed vertex by an even alternating path.

    Blossom interiors count as reachable.  Requires m to be maximum; the
    multi-source search assumes no augmenting path exists and raises if one
    turns up.
    """
    mate = list(m.mates)
    search = _Search(g.adjacency, mate)
    roots = [v for v in range(g.n) if mate[v] == -1]
    search.run(roots, stop_on_augment=False)
    return frozenset(v for v in range(g.n) if search.label[v] == _OUTER)
