"""Instance generators from the hardness constructions.

Each generator emits a deterministic graph layout (documented per function)
together with the budget that makes the output equivalent to the source
instance; round-trip tests solve both sides and compare.
"""

from __future__ import annotations

from .errors import CapacityMismatch, PreconditionViolated
from .graph import Graph, disjoint_union, path_graph
from .result import BinPackingInstance, Instance, Mode, SetCoverInstance


def gen_tree_from_independent_set(g: Graph, p: int) -> Instance:
    """Universal-vertex construction: star/tree/forest instance equivalent to
    "g has an independent set of size p".

    Layout: g's vertices keep their ids, the universal vertex gets
    ``max + 1``.  Budget is ``|V(G')| - (p + 1)``: collapsing everything
    outside the independent set leaves a star on ``p + 1`` vertices.
    """
    if p < 2:
        raise PreconditionViolated("independent-set reduction needs p >= 2")
    if p > g.n:
        raise PreconditionViolated("independent set cannot exceed the vertex count")
    u = (max(g.vertices()) + 1) if g.n else 0
    adj = {v: set(g.neighbors(v)) | {u} for v in g.vertices()}
    adj[u] = set(g.vertices())
    gp = Graph(adj)
    return Instance(gp, gp.n - (p + 1), Mode.BY_K)


def gen_linear_forest_from_bin_packing(bp: BinPackingInstance) -> tuple[Graph, Graph]:
    """Disjoint paths of the item lengths vs. k paths of the bin capacity.

    Path of length s has s+1 vertices; ids are consecutive, items first in
    input order, then the target's paths.
    """
    if sum(bp.sizes) != bp.bins * bp.capacity:
        raise CapacityMismatch("item sizes must fill the bins exactly")
    source = path_graph(bp.sizes[0] + 1)
    for s in bp.sizes[1:]:
        source = disjoint_union(source, path_graph(s + 1))
    target = path_graph(bp.capacity + 1)
    for _ in range(bp.bins - 1):
        target = disjoint_union(target, path_graph(bp.capacity + 1))
    return source, target


def gen_clique_from_set_cover(sc: SetCoverInstance) -> Instance:
    """Set-cover-to-clique construction on ``2nm + 2m - k`` vertices.

    Layout: element blocks first (element ``u`` owns ids ``[2m*u, 2m*(u+1))``),
    then one vertex per set (``2nm + j``), then the independent pad
    (``2nm + m`` onward).  Element blocks and the set block are cliques; a set
    vertex sees a whole element block iff the set contains the element; pad
    vertices (``m - k`` of them) see every element block vertex.  Budget is
    ``m - 1``.
    """
    n, m, k = sc.universe_size, len(sc.sets), sc.budget
    if m < k:
        raise PreconditionViolated("need at least k sets")
    block = 2 * m
    elem_ids = [range(block * u, block * (u + 1)) for u in range(n)]
    set_ids = [2 * n * m + j for j in range(m)]
    pad_ids = [2 * n * m + m + i for i in range(m - k)]
    adj: dict[int, set[int]] = {v: set() for u in range(n) for v in elem_ids[u]}
    adj.update({v: set() for v in set_ids})
    adj.update({v: set() for v in pad_ids})
    all_elems = [v for u in range(n) for v in elem_ids[u]]
    for i, a in enumerate(all_elems):
        for b in all_elems[i + 1 :]:
            adj[a].add(b)
            adj[b].add(a)
    for i, a in enumerate(set_ids):
        for b in set_ids[i + 1 :]:
            adj[a].add(b)
            adj[b].add(a)
    for j, s in enumerate(sc.sets):
        for u in s:
            for v in elem_ids[u]:
                adj[set_ids[j]].add(v)
                adj[v].add(set_ids[j])
    for w in pad_ids:
        for v in all_elems:
            adj[w].add(v)
            adj[v].add(w)
    return Instance(Graph(adj), m - 1, Mode.BY_K)


def gen_split_from_clique(inst: Instance) -> Instance:
    """Clique-to-{split,interval,chordal} transfer: add an independent set of
    ``2k + 2`` vertices universal to the original graph; budget unchanged."""
    g, k = inst.graph, inst.budget
    if g.n < k + 1:
        raise PreconditionViolated("clique source must have at least k+1 vertices")
    base = (max(g.vertices()) + 1) if g.n else 0
    pad = [base + i for i in range(2 * k + 2)]
    adj = {v: set(g.neighbors(v)) | set(pad) for v in g.vertices()}
    for w in pad:
        adj[w] = set(g.vertices())
    return Instance(Graph(adj), k, Mode.BY_K)


def gen_chordal_target_from_clique(inst: Instance) -> tuple[Graph, Graph]:
    """Explicit-target transfer: (G', H) with H split+interval, 2 simplicial
    vertices; G' identifies to H iff the source clique instance is YES.

    G' = source + two universal vertices ``a``, ``b`` + pendant ``a'`` on
    ``a``; H = K_{n-k} + ``x_a``, ``x_b`` adjacent to the clique + pendant
    ``x_a'`` on ``x_a``.
    """
    g, k = inst.graph, inst.budget
    n = g.n
    if n < k + 2:
        raise PreconditionViolated("explicit-target transfer needs n >= k+2")
    base = max(g.vertices()) + 1
    a, b, a_p = base, base + 1, base + 2
    adj = {v: set(g.neighbors(v)) | {a, b} for v in g.vertices()}
    adj[a] = set(g.vertices()) | {a_p}
    adj[b] = set(g.vertices())
    adj[a_p] = {a}
    gp = Graph(adj)

    q = n - k
    xa, xb, xa_p = q, q + 1, q + 2
    hadj: dict[int, set[int]] = {i: set(range(q)) - {i} for i in range(q)}
    for i in range(q):
        hadj[i] |= {xa, xb}
    hadj[xa] = set(range(q)) | {xa_p}
    hadj[xb] = set(range(q))
    hadj[xa_p] = {xa}
    return gp, Graph(hadj)
