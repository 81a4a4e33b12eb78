"""Solvers for cliques, clusters and split graphs, dual-parameter kernels,
and the generic bounded-search solver used for interval/chordal targets.

The clique solver finds a modulator S (vertex cover of the complement),
guesses how S splits across bags, and finishes on the constrained kernel.
The cluster solver groups non-clique components and reuses the clique
solver.  The split solver guesses the clique/independent sides of a small
deletion set and reduces to clique identification.  Dual (p = n - k)
kernels follow the matching/marking constructions.
"""

from __future__ import annotations

from itertools import combinations

from . import _kernels
from .acyclic import _vertex_cover_branch, solve_forest, solve_linear_forest, solve_path, solve_star, solve_tree
from .classes import GraphClass, recognize, split_partition
from .errors import NotACliqueOutsideS
from .graph import (
    Bags,
    Graph,
    complement,
    complete_graph,
    components,
    cycle_graph,
    identify,
    maximal_matching,
    quotient,
    to_masks,
)
from .result import ConstrainedInstance, Instance, Mode, SolveResult

_ACYCLIC_SOLVERS = {
    GraphClass.PATH: solve_path,
    GraphClass.LINEAR_FOREST: solve_linear_forest,
    GraphClass.STAR: solve_star,
    GraphClass.TREE: solve_tree,
    GraphClass.FOREST: solve_forest,
}

_HEREDITARY_DUAL = (GraphClass.SPLIT, GraphClass.INTERVAL, GraphClass.CHORDAL)


def _bags_by_min(parts: list[frozenset[int]]) -> Bags:
    return {min(p): p for p in parts}


def _singletons(vs) -> list[frozenset[int]]:
    return [frozenset({v}) for v in vs]


def _result_from_bags(g: Graph, parts: list[frozenset[int]]) -> SolveResult:
    bags = _bags_by_min(parts)
    return SolveResult.of(quotient(g, bags), bags)


def solve_xp_k(g: Graph, k: int, c: GraphClass) -> SolveResult:
    """Plain bounded exhaustive search: all partitions with at most k merges."""
    if k < 0:
        return SolveResult.no()
    verts, masks = to_masks(g)
    found = _kernels.best_partition_to_class(masks, c.value, min(k, max(g.n - 1, 0)))
    if found is None:
        return SolveResult.no()
    _, assign = found
    parts: dict[int, set[int]] = {}
    for i, part in enumerate(assign):
        parts.setdefault(part, set()).add(verts[i])
    return _result_from_bags(g, [frozenset(p) for p in parts.values()])


# -- cliques (parameter k) ----------------------------------------------------


def constrained_clique_kernel(g: Graph, s_set: frozenset[int], k: int) -> ConstrainedInstance:
    """Marking kernel for clique identification that keeps S-vertices apart.

    Keeps up to ``k+1`` non-neighbors per S-vertex plus ``k+1`` spare clique
    vertices; everything else outside S is deleted.  Output has at most
    ``|S|(k+2) + k + 1`` vertices.
    """
    outside = frozenset(g.vertices()) - s_set
    for u, v in combinations(sorted(outside), 2):
        if not g.has_edge(u, v):
            raise NotACliqueOutsideS(f"non-adjacent pair ({u}, {v}) outside S")
    if g.n <= len(s_set) * (k + 2) + k:
        return ConstrainedInstance(g, s_set, k)
    marked: set[int] = set()
    for v in sorted(s_set):
        non_nbrs = [u for u in sorted(outside) if not g.has_edge(u, v)]
        marked.update(non_nbrs[: k + 1])
    spare = [u for u in sorted(outside) if u not in marked][: k + 1]
    keep = s_set | marked | set(spare)
    return ConstrainedInstance(g.subgraph(keep), s_set, k)


def _constrained_clique_bags(g: Graph, s_set: frozenset[int], k: int) -> list[frozenset[int]] | None:
    """Bags for an S-constrained clique identification of g, or None."""
    inst = constrained_clique_kernel(g, s_set, k)
    sub = inst.graph
    verts, masks = to_masks(sub)
    index = {v: i for i, v in enumerate(verts)}
    sep = 0
    for v in s_set:
        sep |= 1 << index[v]
    found = _kernels.best_partition_to_class(masks, GraphClass.CLIQUE.value, min(k, max(sub.n - 1, 0)), sep)
    if found is None:
        return None
    _, assign = found
    parts: dict[int, set[int]] = {}
    for i, part in enumerate(assign):
        parts.setdefault(part, set()).add(verts[i])
    # deleted vertices were unmarked non-S vertices: each rejoins as its own
    # bag, adjacent to every other bag by the marking guarantees
    out = [frozenset(p) for p in parts.values()]
    out.extend(_singletons(set(g.vertices()) - set(sub.vertices())))
    return out


def _set_partitions(items: list[int]):
    """All set partitions, restricted-growth order."""
    if not items:
        yield []
        return
    parts: list[list[int]] = []

    def rec(i: int):
        if i == len(items):
            yield [list(p) for p in parts]
            return
        for p in parts:
            p.append(items[i])
            yield from rec(i + 1)
            p.pop()
        parts.append([items[i]])
        yield from rec(i + 1)
        parts.pop()

    yield from rec(0)


def solve_clique_k(g: Graph, k: int) -> SolveResult:
    """Clique identification: modulator + bag-split guessing + constrained kernel."""
    if k < 0 or g.n == 0:
        return SolveResult.no()
    if recognize(g, GraphClass.CLIQUE):
        return _result_from_bags(g, _singletons(g.vertices()))
    modulator = _vertex_cover_branch(complement(g), min(2 * k, g.n))
    if modulator is None:
        return SolveResult.no()
    for grouping in _set_partitions(sorted(modulator)):
        cost = sum(len(p) - 1 for p in grouping)
        if cost > k:
            continue
        merged = g
        origins: dict[int, frozenset[int]] = {v: frozenset({v}) for v in g.vertices()}
        s_now: set[int] = set()
        for part in grouping:
            cur = part[0]
            for nxt in part[1:]:
                merged = identify(merged, cur, nxt)
                fresh = max(merged.vertices())
                origins[fresh] = origins.pop(cur) | origins.pop(nxt)
                cur = fresh
            s_now.add(cur)
        bags = _constrained_clique_bags(merged, frozenset(s_now), k - cost)
        if bags is not None:
            lifted = [frozenset().union(*(origins[v] for v in bag)) for bag in bags]
            return _result_from_bags(g, lifted)
    return SolveResult.no()


def solve_cluster_k(g: Graph, k: int) -> SolveResult:
    """Cluster identification: group the non-clique components, solve each group."""
    if k < 0:
        return SolveResult.no()
    if recognize(g, GraphClass.CLUSTER):
        return _result_from_bags(g, _singletons(g.vertices()))
    comps = components(g)
    plain = [c for c in comps if recognize(g.subgraph(c), GraphClass.CLIQUE)]
    dirty = [c for c in comps if not recognize(g.subgraph(c), GraphClass.CLIQUE)]
    if len(dirty) > k:
        return SolveResult.no()
    memo: dict[frozenset[int], SolveResult] = {}

    def group_best(vs: frozenset[int]) -> SolveResult:
        # minimum-budget clique identification of the group (always solvable)
        if vs not in memo:
            sub = g.subgraph(vs)
            for j in range(len(vs)):
                res = solve_clique_k(sub, j)
                if res:
                    memo[vs] = res
                    break
        return memo[vs]

    for grouping in _set_partitions(list(range(len(dirty)))):
        budget = k
        parts: list[frozenset[int]] = [frozenset({v}) for c in plain for v in c]
        ok = True
        for group in grouping:
            res = group_best(frozenset().union(*(dirty[i] for i in group)))
            budget -= sum(len(b) - 1 for b in res.witness.values())
            if budget < 0:
                ok = False
                break
            parts.extend(res.witness.values())
        if ok:
            return _result_from_bags(g, parts)
    return SolveResult.no()


# -- dual parameterization (p = n - k) ---------------------------------------


def _trivial_yes() -> Instance:
    return Instance(complete_graph(1), 0, Mode.BY_DUAL)


def _trivial_no() -> Instance:
    return Instance(cycle_graph(4), 0, Mode.BY_DUAL)


def _choose2(p: int) -> int:
    return p * (p - 1) // 2 if p >= 2 else 0


def matching_clique_witness(g: Graph, p: int) -> Bags:
    """Bags sending matching endpoints to the edge slots of a p-clique.

    Requires a maximal matching of size at least C(p, 2); leftover vertices
    land in the first bag.
    """
    if p <= 1:
        return {0: frozenset(g.vertices())}
    matching = sorted(maximal_matching(g))
    slots = [(i, j) for i in range(p) for j in range(i + 1, p)]
    if len(matching) < len(slots):
        raise ValueError("matching too small for the clique witness")
    bags: dict[int, set[int]] = {i: set() for i in range(p)}
    used: set[int] = set()
    for (i, j), (u, v) in zip(slots, matching):
        bags[i].add(u)
        bags[j].add(v)
        used.update((u, v))
    for v in g.vertices():
        if v not in used:
            bags[0].add(v)
    return {i: frozenset(b) for i, b in bags.items()}


def kernel_dual_clique(g: Graph, p: int) -> Instance:
    """Marking kernel for dual clique identification; at most p^4 vertices."""
    k = g.n - p
    if k < 0 or g.n == 0:
        return _trivial_no()
    if p <= 1:
        return _trivial_yes()
    if g.m == 0:
        return _trivial_no()
    if len(maximal_matching(g)) >= _choose2(p):
        return _trivial_yes()
    keep = _dual_marking(g, p)
    k2 = k - (g.n - len(keep))
    if k2 < 0:
        return _trivial_no()
    return Instance(g.subgraph(keep), k2, Mode.BY_DUAL)


def _dual_marking(g: Graph, p: int, spanning_internals: bool = False) -> set[int]:
    """Vertex-cover endpoints plus up to C(p,2) marked neighbors each."""
    cover = sorted({v for e in maximal_matching(g) for v in e})
    keep = set(cover)
    quota = _choose2(p)
    for v in cover:
        outside = [u for u in sorted(g.neighbors(v)) if u not in cover]
        keep.update(outside[:quota])
    if spanning_internals:
        for comp in components(g):
            keep.update(_bfs_tree_internals(g, comp))
    return keep


def _bfs_tree_internals(g: Graph, comp: frozenset[int]) -> set[int]:
    root = min(comp)
    parent: dict[int, int | None] = {root: None}
    order = [root]
    from collections import deque

    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in sorted(g.neighbors(v)):
            if u in comp and u not in parent:
                parent[u] = v
                order.append(u)
                queue.append(u)
    internals = {parent[v] for v in order if parent[v] is not None}
    return {v for v in internals if v is not None}


def kernel_dual_cluster(g: Graph, p: int) -> Instance:
    """Dual cluster kernel: isolated-vertex removal, matching, marking."""
    k = g.n - p
    if k < 0:
        return _trivial_no()
    live = {v for v in g.vertices() if g.degree(v) > 0}
    g1 = g.subgraph(live)
    p1 = g1.n - k
    if g1.n == 0 or p1 <= 1:
        return _trivial_yes()
    if len(maximal_matching(g1)) >= _choose2(p1):
        return _trivial_yes()
    keep = _dual_marking(g1, p1, spanning_internals=True)
    k2 = k - (g1.n - len(keep))
    if k2 < 0:
        return _trivial_no()
    return Instance(g1.subgraph(keep), k2, Mode.BY_DUAL)


def _identify_to_kp(g: Graph, p: int) -> list[frozenset[int]] | None:
    """Bags sending g onto exactly K_p, by pair-slot edge assignment."""
    if g.n == 0 or p > g.n or p < 1:
        return None
    if p == 1:
        return [frozenset(g.vertices())]
    edges = g.edges()
    if len(edges) < _choose2(p):
        return None
    slots = [(i, j) for i in range(p) for j in range(i + 1, p)]
    owner: dict[int, int] = {}
    bags: list[set[int]] = [set() for _ in range(p)]

    def covered(i: int, j: int) -> bool:
        return any(not g.neighbors(v).isdisjoint(bags[j]) for v in bags[i])

    def rec(si: int) -> bool:
        if si == len(slots):
            return True
        i, j = slots[si]
        if covered(i, j):
            return rec(si + 1)
        for u, v in edges:
            for a, b in ((u, v), (v, u)):
                if owner.get(a, i) != i or owner.get(b, j) != j:
                    continue
                added = [x for x in (a, b) if x not in owner]
                owner[a], owner[b] = i, j
                bags[i].add(a)
                bags[j].add(b)
                if rec(si + 1):
                    return True
                for x in added:
                    del owner[x]
                if a in added:
                    bags[i].discard(a)
                if b in added:
                    bags[j].discard(b)
        return False

    if not rec(0):
        return None
    leftover = [v for v in g.vertices() if v not in owner]
    bags[0].update(leftover)
    return [frozenset(b) for b in bags]


def solve_clique_dual(g: Graph, p: int) -> SolveResult:
    """Can g become a clique within n - p identifications?"""
    k = g.n - p
    if k < 0 or g.n == 0:
        return SolveResult.no()
    if p <= 1:
        return _result_from_bags(g, [frozenset(g.vertices())])
    if g.m == 0:
        return SolveResult.no()
    if len(maximal_matching(g)) >= _choose2(p):
        bags = matching_clique_witness(g, p)
        return SolveResult.of(quotient(g, bags), bags)
    keep = _dual_marking(g, p)
    sub = g.subgraph(keep)
    found = _identify_to_kp(sub, p)
    if found is None:
        return SolveResult.no()
    lifted = list(found)
    extras = set(g.vertices()) - keep
    if extras:
        lifted[0] = lifted[0] | extras
    return _result_from_bags(g, lifted)


def _cluster_groupings(comp_count: int, p: int):
    """Partitions of components into at most p nonempty groups."""
    yield from _set_partitions(list(range(comp_count)))


def _cluster_exact(g: Graph, p: int) -> list[frozenset[int]] | None:
    """Bags sending g (no isolated vertices assumed not required) onto a
    cluster graph with exactly p vertices."""
    if p < 1 or p > g.n:
        return None
    comps = components(g)
    maxq_memo: dict[frozenset[int], dict[int, list[frozenset[int]] | None]] = {}

    def group_kp(ids: tuple[int, ...], q: int) -> list[frozenset[int]] | None:
        vs = frozenset().union(*(comps[i] for i in ids))
        per = maxq_memo.setdefault(vs, {})
        if q not in per:
            per[q] = _identify_to_kp(g.subgraph(vs), q)
        return per[q]

    for grouping in _cluster_groupings(len(comps), p):
        if len(grouping) > p:
            continue

        def assign(gi: int, left: int, acc: list[frozenset[int]]) -> list[frozenset[int]] | None:
            if gi == len(grouping):
                return list(acc) if left == 0 else None
            remaining_groups = len(grouping) - gi - 1
            ids = tuple(grouping[gi])
            size = sum(len(comps[i]) for i in ids)
            for q in range(min(left - remaining_groups, size), 0, -1):
                bags = group_kp(ids, q)
                if bags is not None:
                    out = assign(gi + 1, left - q, acc + bags)
                    if out is not None:
                        return out
            return None

        out = assign(0, p, [])
        if out is not None:
            return out
    return None


def solve_cluster_dual(g: Graph, p: int) -> SolveResult:
    """Can g become a cluster graph within n - p identifications?"""
    k = g.n - p
    if k < 0:
        return SolveResult.no()
    if g.n == 0:
        return _result_from_bags(g, [])
    isolated = [v for v in g.vertices() if g.degree(v) == 0]
    live = set(g.vertices()) - set(isolated)
    g1 = g.subgraph(live)
    iso_bags = _singletons(isolated)
    p1 = g1.n - k
    if g1.n == 0 or p1 <= 1:
        live_bags = [frozenset(live)] if live else []
        return _result_from_bags(g, live_bags + iso_bags)
    if len(maximal_matching(g1)) >= _choose2(p1):
        bags = matching_clique_witness(g1, p1)
        return _result_from_bags(g, list(bags.values()) + iso_bags)
    keep = _dual_marking(g1, p1, spanning_internals=True)
    sub = g1.subgraph(keep)
    found = _cluster_exact(sub, p1)
    if found is None:
        return SolveResult.no()
    # deleted marked-out vertices rejoin a bag inside their own component
    lifted = [set(b) for b in found]
    for v in sorted(live - keep):
        comp = next(c for c in components(g1) if v in c)
        host = next(i for i, b in enumerate(lifted) if b & comp)
        lifted[host].add(v)
    return _result_from_bags(g, [frozenset(b) for b in lifted] + iso_bags)


# -- split graphs -------------------------------------------------------------

_OBSTRUCTION_SIZES = (4, 5)


def _find_split_obstruction(g: Graph) -> tuple[int, ...] | None:
    """Smallest induced 2K2, C4 or C5, scanning vertex subsets in order."""
    verts = g.vertices()
    for four in combinations(verts, 4):
        sub = g.subgraph(frozenset(four))
        degs = sorted(sub.degree(v) for v in four)
        if sub.m == 2 and degs == [1, 1, 1, 1]:
            return four  # 2K2
        if sub.m == 4 and degs == [2, 2, 2, 2]:
            return four  # C4
    for five in combinations(verts, 5):
        sub = g.subgraph(frozenset(five))
        if sub.m == 5 and all(sub.degree(v) == 2 for v in five):
            return five  # C5
    return None


def split_vertex_deletion(g: Graph, h: int) -> frozenset[int] | None:
    """An inclusion-minimal set of at most h vertices whose deletion kills
    every induced 2K2, C4 and C5 (hence leaves a split graph), or None.

    The empty graph counts as obstruction-free here.
    """
    if h < 0:
        return None

    def branch(cur: Graph, budget: int) -> frozenset[int] | None:
        obs = _find_split_obstruction(cur)
        if obs is None:
            return frozenset()
        if budget <= 0:
            return None
        for v in obs:
            rest = branch(cur.subgraph(set(cur.vertices()) - {v}), budget - 1)
            if rest is not None:
                return rest | {v}
        return None

    found = branch(g, h)
    if found is None:
        return None
    out = set(found)
    for v in sorted(found):
        trimmed = out - {v}
        if _find_split_obstruction(g.subgraph(set(g.vertices()) - trimmed)) is None:
            out = trimmed
    return frozenset(out)


def solve_split_k(g: Graph, k: int) -> SolveResult:
    """Split identification via deletion-set guessing and clique reduction."""
    if k < 0:
        return SolveResult.no()
    if recognize(g, GraphClass.SPLIT):
        return _result_from_bags(g, _singletons(g.vertices()))
    if g.n == 0:
        return SolveResult.no()
    s0 = split_vertex_deletion(g, min(2 * k, g.n))
    if s0 is None:
        return SolveResult.no()
    base = g.subgraph(set(g.vertices()) - s0)
    part = split_partition(base)
    k_side = part[0] if part is not None else frozenset()
    clique_memo: dict[tuple[frozenset[int], int], SolveResult] = {}

    def clique_cached(u_set: frozenset[int]) -> SolveResult:
        key = (u_set, k)
        if key not in clique_memo:
            clique_memo[key] = solve_clique_k(g.subgraph(u_set), k)
        return clique_memo[key]

    for moved in [None] + sorted(k_side):
        clique_side = k_side - {moved} if moved is not None else k_side
        s_full = sorted(s0 | {moved} if moved is not None else s0)
        for r in range(len(s_full) + 1):
            for si in combinations(s_full, r):
                s_i = frozenset(si)
                if any(g.has_edge(a, b) for a, b in combinations(sorted(s_i), 2)):
                    continue
                nbrs: set[int] = set()
                for v in s_i:
                    nbrs |= g.neighbors(v)
                u_set = frozenset(clique_side | (set(s_full) - s_i) | nbrs)
                res = clique_cached(u_set)
                if res:
                    parts = list(res.witness.values())
                    parts.extend(_singletons(set(g.vertices()) - u_set))
                    return _result_from_bags(g, parts)
    return SolveResult.no()


# -- hereditary dual kernel and generic dual dispatch -------------------------


def kernel_dual_hereditary(g: Graph, p: int, c: GraphClass) -> Instance:
    """Dual kernel for split/interval/chordal: at most p^2 vertices survive."""
    if c not in _HEREDITARY_DUAL:
        raise ValueError(f"kernel_dual_hereditary does not apply to {c}")
    k = g.n - p
    if k < 0:
        return _trivial_no()
    if g.n == 0:
        return Instance(g, k, Mode.BY_DUAL)
    if g.m == 0:
        return _trivial_yes()
    if len(maximal_matching(g)) >= _choose2(p):
        return _trivial_yes()
    cover = {v for e in maximal_matching(g) for v in e}
    if g.n - len(cover) >= p - 1:
        return _trivial_yes()
    return Instance(g, k, Mode.BY_DUAL)


def solve_dual_generic(g: Graph, p: int, c: GraphClass) -> SolveResult:
    """Dual-parameter dispatch across all ten classes."""
    k = g.n - p
    if c in _ACYCLIC_SOLVERS:
        return _ACYCLIC_SOLVERS[c](g, k) if k >= 0 else SolveResult.no()
    if c is GraphClass.CLIQUE:
        return solve_clique_dual(g, p)
    if c is GraphClass.CLUSTER:
        return solve_cluster_dual(g, p)
    if k < 0:
        return SolveResult.no()
    if p <= 1 and g.n >= 1:
        return _result_from_bags(g, [frozenset(g.vertices())])
    if g.n == 0 or g.m == 0:
        return solve_xp_k(g, k, c)
    matching = maximal_matching(g)
    if len(matching) >= _choose2(p):
        bags = matching_clique_witness(g, p)
        return SolveResult.of(quotient(g, bags), bags)
    cover = {v for e in matching for v in e}
    if g.n - len(cover) >= p - 1:
        parts = [frozenset(cover)] + _singletons(set(g.vertices()) - cover)
        return _result_from_bags(g, parts)
    return solve_xp_k(g, k, c)
