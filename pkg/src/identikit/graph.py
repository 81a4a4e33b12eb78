"""Simple undirected graphs and the vertex-identification operation.

Graphs are value-semantic: every operation returns a new graph, vertex ids
are opaque non-negative integers, and adjacency is kept symmetric and
irreflexive.  The new vertex created by an identification always receives
id ``max(existing ids) + 1`` so that identification sequences replay
deterministically.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping, AbstractSet

from .errors import EmptyComponent, MalformedWitness, SameVertex, UnknownVertex

# A witness structure: bag keyed by target-graph vertex, holding source vertices.
Bags = dict[int, frozenset[int]]


class Graph:
    """Immutable simple undirected graph with stable integer vertex ids."""

    __slots__ = ("_adj",)

    def __init__(self, adjacency: Mapping[int, Iterable[int]]):
        adj: dict[int, frozenset[int]] = {int(v): frozenset(int(u) for u in nbrs) for v, nbrs in adjacency.items()}
        for v, nbrs in adj.items():
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if u not in adj:
                    raise ValueError(f"edge endpoint {u} is not a vertex")
                if v not in adj[u]:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {u})")
        self._adj = adj

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u}, {v}) references an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        return cls(adj)

    @classmethod
    def empty(cls) -> "Graph":
        return cls({})

    # -- queries ---------------------------------------------------------------

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._adj))

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(f"vertex {v} is not in the graph") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((v, u) for v in self._adj for u in self._adj[v] if v < u))

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(frozenset((v, nbrs) for v, nbrs in self._adj.items()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def subgraph(self, keep: AbstractSet[int]) -> "Graph":
        """Induced subgraph on ``keep``."""
        missing = set(keep) - set(self._adj)
        if missing:
            raise UnknownVertex(f"vertices {sorted(missing)} are not in the graph")
        return Graph({v: self._adj[v] & keep for v in keep})

    def delete_edges(self, gone: Iterable[tuple[int, int]]) -> "Graph":
        gone_set = {(min(e), max(e)) for e in gone}
        return Graph(
            {v: {u for u in nbrs if (min(u, v), max(u, v)) not in gone_set} for v, nbrs in self._adj.items()}
        )


def identify(g: Graph, u: int, v: int) -> Graph:
    """Replace ``u`` and ``v`` by a fresh vertex adjacent to both neighborhoods.

    The pair need not be adjacent.  The fresh vertex gets id ``max + 1``.
    """
    if u == v:
        raise SameVertex(f"cannot identify vertex {u} with itself")
    if u not in g:
        raise UnknownVertex(f"vertex {u} is not in the graph")
    if v not in g:
        raise UnknownVertex(f"vertex {v} is not in the graph")
    w = max(g.vertices()) + 1
    merged = (g.neighbors(u) | g.neighbors(v)) - {u, v}
    adj: dict[int, set[int]] = {}
    for x in g.vertices():
        if x in (u, v):
            continue
        nbrs = set(g.neighbors(x)) - {u, v}
        if x in merged:
            nbrs.add(w)
        adj[x] = nbrs
    adj[w] = set(merged)
    return Graph(adj)


def apply_sequence(g: Graph, seq: Iterable[tuple[int, int]]) -> Graph:
    """Fold :func:`identify` over ``seq``; errors carry the failing step index."""
    out = g
    for i, (u, v) in enumerate(seq):
        try:
            out = identify(out, u, v)
        except (UnknownVertex, SameVertex) as exc:
            raise type(exc)(f"step {i}: {exc}") from None
    return out


def _check_bags(g: Graph, h: Graph, bags: Mapping[int, AbstractSet[int]]) -> None:
    if set(bags) != set(h.vertices()):
        raise MalformedWitness("bag keys do not match the target vertex set")
    for x, bag in bags.items():
        for v in bag:
            if v not in g:
                raise MalformedWitness(f"bag {x} contains {v}, which is not a vertex of the source graph")


def _bags_adjacent(g: Graph, a: AbstractSet[int], b: AbstractSet[int]) -> bool:
    if len(a) > len(b):
        a, b = b, a
    return any(not g.neighbors(v).isdisjoint(b) for v in a)


def verify_witness(g: Graph, h: Graph, bags: Mapping[int, AbstractSet[int]]) -> bool:
    """Check the two witness-structure conditions.

    True iff the bags are a partition of ``V(g)`` into nonempty parts and the
    bag-adjacency pattern equals ``E(h)`` exactly.  Structural violations of
    the preconditions (wrong keys, foreign members) raise
    :class:`MalformedWitness` instead of returning ``False``.
    """
    _check_bags(g, h, bags)
    total = 0
    seen: set[int] = set()
    for bag in bags.values():
        if not bag:
            return False
        total += len(bag)
        seen.update(bag)
    if total != g.n or len(seen) != g.n:
        return False  # not a partition
    keys = sorted(bags)
    for i, x in enumerate(keys):
        for y in keys[i + 1 :]:
            if _bags_adjacent(g, bags[x], bags[y]) != h.has_edge(x, y):
                return False
    return True


def quotient(g: Graph, bags: Mapping[int, AbstractSet[int]]) -> Graph:
    """Graph on the bag keys; keys adjacent iff their bags are adjacent in ``g``."""
    seen: set[int] = set()
    total = 0
    for x, bag in bags.items():
        if not bag:
            raise MalformedWitness(f"bag {x} is empty")
        for v in bag:
            if v not in g:
                raise MalformedWitness(f"bag {x} contains {v}, which is not a vertex of the source graph")
        total += len(bag)
        seen.update(bag)
    if total != g.n or len(seen) != g.n:
        raise MalformedWitness("bags do not partition the vertex set")
    owner = {v: x for x, bag in bags.items() for v in bag}
    adj: dict[int, set[int]] = {x: set() for x in bags}
    for u, v in g.edges():
        a, b = owner[u], owner[v]
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    return Graph(adj)


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, sorted by smallest member id."""
    seen: set[int] = set()
    out: list[frozenset[int]] = []
    for start in g.vertices():
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if u not in comp:
                    comp.add(u)
                    queue.append(u)
        seen |= comp
        out.append(frozenset(comp))
    return out


def _bfs_dist(g: Graph, source: int, allowed: AbstractSet[int]) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if u in allowed and u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def diameter(g: Graph, comp: AbstractSet[int] | None = None) -> int:
    """Diameter of a connected component (whole graph when ``comp`` is None)."""
    if comp is None:
        comp = frozenset(g.vertices())
    if not comp:
        raise EmptyComponent("diameter of an empty vertex set")
    comp = frozenset(comp)
    best = 0
    for v in sorted(comp):
        dist = _bfs_dist(g, v, comp)
        if len(dist) != len(comp):
            raise ValueError("diameter requires a connected component")
        best = max(best, max(dist.values()))
    return best


def eccentricity_endpoint(g: Graph, comp: AbstractSet[int]) -> tuple[int, int]:
    """(vertex, eccentricity) realizing the diameter of ``comp``, smallest id first."""
    if not comp:
        raise EmptyComponent("empty vertex set")
    best_v, best_e = -1, -1
    for v in sorted(comp):
        dist = _bfs_dist(g, v, frozenset(comp))
        ecc = max(dist.values())
        if ecc > best_e:
            best_v, best_e = v, ecc
    return best_v, best_e


def bridges(g: Graph) -> set[tuple[int, int]]:
    """All bridge edges, as (min, max) pairs, via DFS low-links."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    out: set[tuple[int, int]] = set()
    counter = 0
    for root in g.vertices():
        if root in index:
            continue
        # iterative DFS; stack holds (vertex, parent, neighbor iterator)
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]
        index[root] = low[root] = counter
        counter += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u not in index:
                    index[u] = low[u] = counter
                    counter += 1
                    stack.append((u, v, iter(sorted(g.neighbors(u)))))
                    advanced = True
                    break
                if u != parent:
                    low[v] = min(low[v], index[u])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > index[p]:
                        out.add((min(p, v), max(p, v)))
        # note: parallel edges cannot occur in a simple graph, so the
        # classic parent-skip is safe
    return out


def maximal_matching(g: Graph) -> set[tuple[int, int]]:
    """Greedy inclusion-maximal (not maximum) matching over sorted edge order."""
    used: set[int] = set()
    out: set[tuple[int, int]] = set()
    for u, v in g.edges():
        if u not in used and v not in used:
            out.add((u, v))
            used.update((u, v))
    return out


def complement(g: Graph) -> Graph:
    verts = g.vertices()
    return Graph({v: (set(verts) - {v}) - set(g.neighbors(v)) for v in verts})


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; vertices of ``b`` are shifted above those of ``a``."""
    shift = (max(a.vertices()) + 1) if a.n else 0
    adj: dict[int, set[int]] = {v: set(a.neighbors(v)) for v in a.vertices()}
    for v in b.vertices():
        adj[v + shift] = {u + shift for u in b.neighbors(v)}
    return Graph(adj)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def path_graph(n: int, start: int = 0) -> Graph:
    return Graph.from_edges(range(start, start + n), [(i, i + 1) for i in range(start, start + n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and the given number of leaves."""
    return Graph.from_edges(range(leaves + 1), [(0, i) for i in range(1, leaves + 1)])


def edgeless_graph(n: int) -> Graph:
    return Graph.from_edges(range(n), [])


def to_masks(g: Graph) -> tuple[tuple[int, ...], list[int]]:
    """Dense view: sorted vertex ids plus neighbor bitmasks indexed 0..n-1."""
    verts = g.vertices()
    index = {v: i for i, v in enumerate(verts)}
    masks = [0] * len(verts)
    for v in verts:
        i = index[v]
        for u in g.neighbors(v):
            masks[i] |= 1 << index[u]
    return verts, masks


def from_masks(masks: list[int], ids: Iterable[int] | None = None) -> Graph:
    """Inverse of :func:`to_masks`; ``ids`` defaults to ``0..n-1``."""
    labels = list(ids) if ids is not None else list(range(len(masks)))
    adj: dict[int, set[int]] = {labels[i]: set() for i in range(len(masks))}
    for i, row in enumerate(masks):
        m = row
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            adj[labels[i]].add(labels[j])
    return Graph(adj)
