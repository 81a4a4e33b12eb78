"""Solvers for identification into paths, linear forests, stars, trees and forests.

Paths and linear forests are polynomial via the component-diameter formula;
stars reduce to vertex cover with an isolated-vertex adjustment; forests are
kernelized (bridge/isolated deletion plus forced identifications of pairs
with large common neighborhoods) and finished by bounded exhaustive search;
trees shift the forest budget by the component count.
"""

from __future__ import annotations

from . import _kernels
from .classes import GraphClass
from .errors import SameVertex, UnknownVertex
from .graph import (
    Bags,
    Graph,
    components,
    to_masks,
    bridges,
    eccentricity_endpoint,
    identify,
    quotient,
    star_graph,
    path_graph,
    _bfs_dist,
)
from .result import ForestKernelTrace, Instance, KernelVerdict, SolveResult


def _component_layers(g: Graph, comp: frozenset[int]) -> list[set[int]]:
    """BFS layers from the smallest diameter endpoint; one bag per layer."""
    source, ecc = eccentricity_endpoint(g, comp)
    dist = _bfs_dist(g, source, comp)
    layers: list[set[int]] = [set() for _ in range(ecc + 1)]
    for v, d in dist.items():
        layers[d].add(v)
    return layers


def solve_path(g: Graph, k: int) -> SolveResult:
    """YES iff ``k >= n - ell`` where ``ell = sum of component diameters + 1``."""
    if g.n == 0:
        return SolveResult.no()
    comps = components(g)
    layer_lists = [_component_layers(g, c) for c in comps]
    ell = sum(len(layers) - 1 for layers in layer_lists) + 1
    if k < g.n - ell:
        return SolveResult.no()
    bags: Bags = {}
    pos = 0
    for layers in layer_lists:
        for j, layer in enumerate(layers):
            merged = set(bags.get(pos + j, frozenset())) | layer
            bags[pos + j] = frozenset(merged)
        pos += len(layers) - 1
    return SolveResult.of(path_graph(ell), bags)


def solve_linear_forest(g: Graph, k: int) -> SolveResult:
    """YES iff ``k >= n - sum(diam(G_i) + 1)``; one path per component."""
    if g.n == 0:
        return SolveResult.of(Graph.empty(), {}) if k >= 0 else SolveResult.no()
    comps = components(g)
    layer_lists = [_component_layers(g, c) for c in comps]
    total = sum(len(layers) for layers in layer_lists)
    if k < g.n - total:
        return SolveResult.no()
    bags: Bags = {}
    edges: list[tuple[int, int]] = []
    offset = 0
    for layers in layer_lists:
        for j, layer in enumerate(layers):
            bags[offset + j] = frozenset(layer)
            if j:
                edges.append((offset + j - 1, offset + j))
        offset += len(layers)
    return SolveResult.of(Graph.from_edges(range(offset), edges), bags)


def _vertex_cover_branch(g: Graph, budget: int) -> set[int] | None:
    """Some vertex cover of size <= budget via edge branching, or None."""
    edges = g.edges()
    if not edges:
        return set()
    if budget <= 0:
        return None
    u, v = edges[0]
    for pick in (u, v):
        rest = _vertex_cover_branch(g.subgraph(set(g.vertices()) - {pick}), budget - 1)
        if rest is not None:
            rest.add(pick)
            return rest
    return None


def solve_star(g: Graph, k: int) -> SolveResult:
    """Star identification via the vertex-cover equivalence.

    With ``p`` isolated vertices, YES iff the graph has a vertex cover of
    size at most ``k - p + 1`` (edgeless graphs: iff ``k >= n - 1``).
    """
    if g.n == 0:
        return SolveResult.no()
    if g.m == 0:
        if k < g.n - 1:
            return SolveResult.no()
        return SolveResult.of(star_graph(0), {0: frozenset(g.vertices())})
    isolated = [v for v in g.vertices() if g.degree(v) == 0]
    cover_budget = k - len(isolated) + 1
    if cover_budget < 0:
        return SolveResult.no()
    cover = _vertex_cover_branch(g, min(cover_budget, g.n))
    if cover is None:
        return SolveResult.no()
    center = frozenset(cover) | frozenset(isolated)
    leaves = sorted(set(g.vertices()) - center)
    bags: Bags = {0: center}
    for i, v in enumerate(leaves, start=1):
        bags[i] = frozenset({v})
    return SolveResult.of(star_graph(len(leaves)), bags)


class _KernelRun:
    """Internal forest-kernelization replay with origin tracking."""

    def __init__(self, g: Graph, k: int):
        self.removed_bridges: list[tuple[int, int]] = []
        self.removed_isolated: list[int] = []
        self.forced: list[tuple[int, int]] = []
        self.origins: dict[int, frozenset[int]] = {v: frozenset({v}) for v in g.vertices()}
        self.deleted_bags: list[frozenset[int]] = []
        self.graph = g
        self.budget = k
        self.verdict: KernelVerdict | None = None
        self._run()

    def _rule1(self) -> None:
        cur = self.graph
        br = bridges(cur)
        if br:
            self.removed_bridges.extend(sorted(br))
            cur = cur.delete_edges(br)
        iso = [v for v in cur.vertices() if cur.degree(v) == 0]
        if iso:
            self.removed_isolated.extend(iso)
            for v in iso:
                self.deleted_bags.append(self.origins.pop(v))
            cur = cur.subgraph(set(cur.vertices()) - set(iso))
        self.graph = cur

    def _rule2_pair(self) -> tuple[int, int] | None:
        verts = self.graph.vertices()
        for i, u in enumerate(verts):
            for v in verts[i + 1 :]:
                if len(self.graph.neighbors(u) & self.graph.neighbors(v)) > self.budget + 1:
                    return u, v
        return None

    def _run(self) -> None:
        while True:
            self._rule1()
            if self.graph.n == 0:
                self.verdict = KernelVerdict.TRIVIAL_YES
                return
            pair = self._rule2_pair()
            if pair is None:
                break
            u, v = pair
            self.forced.append((u, v))
            merged = self.origins.pop(u) | self.origins.pop(v)
            self.graph = identify(self.graph, u, v)
            self.origins[max(self.graph.vertices())] = merged
            self.budget -= 1
            if self.budget < 0:
                self.verdict = KernelVerdict.TRIVIAL_NO
                return
        k = self.budget
        bound = 2 * k + (k + 1) * (2 * k * (2 * k - 1) // 2)
        self.verdict = KernelVerdict.TRIVIAL_NO if self.graph.n > bound else KernelVerdict.REDUCED

    def trace(self) -> ForestKernelTrace:
        reduced = Instance(self.graph, self.budget) if self.verdict is KernelVerdict.REDUCED else None
        return ForestKernelTrace(
            removed_bridges=self.removed_bridges,
            removed_isolated=self.removed_isolated,
            forced_identifications=self.forced,
            final_budget=self.budget,
            verdict=self.verdict,
            reduced=reduced,
        )


def kernelize_forest(g: Graph, k: int) -> ForestKernelTrace:
    """Forest kernel: bridge/isolated deletion and forced identifications.

    Applied to a fixpoint; the reduced instance never exceeds
    ``2k + (k+1) * C(2k, 2)`` vertices.
    """
    if k < 0:
        raise ValueError("kernelize_forest requires k >= 0")
    return _KernelRun(g, k).trace()


def _min_partition_per_component(g: Graph, cls: GraphClass, cap: int) -> tuple[int, list[Bags]] | None:
    """Per-component minimum identifications into ``cls``; bags use source ids."""
    total = 0
    bag_sets: list[Bags] = []
    for comp in components(g):
        sub = g.subgraph(comp)
        verts, masks = to_masks(sub)
        found = _kernels.best_partition_to_class(masks, cls.value, cap - total)
        if found is None:
            return None
        excess, assign = found
        total += excess
        parts: dict[int, set[int]] = {}
        for i, part in enumerate(assign):
            parts.setdefault(part, set()).add(verts[i])
        bag_sets.append({p: frozenset(vs) for p, vs in parts.items()})
    return total, bag_sets


def _relabel_bags(bag_list: list[frozenset[int]]) -> Bags:
    ordered = sorted(bag_list, key=min)
    return {i: bag for i, bag in enumerate(ordered)}


def solve_forest(g: Graph, k: int) -> SolveResult:
    """Kernelize, then search each kernel component for its forest minimum."""
    if k < 0:
        return SolveResult.no()
    run = _KernelRun(g, k)
    if run.verdict is KernelVerdict.TRIVIAL_NO:
        return SolveResult.no()
    if run.verdict is KernelVerdict.TRIVIAL_YES:
        bags = _relabel_bags(list(run.origins.values()) + run.deleted_bags)
        return SolveResult.of(quotient(g, bags), bags)
    found = _min_partition_per_component(run.graph, GraphClass.FOREST, run.budget)
    if found is None:
        return SolveResult.no()
    _, bag_sets = found
    final: list[frozenset[int]] = list(run.deleted_bags)
    for comp_bags in bag_sets:
        for bag in comp_bags.values():
            final.append(frozenset().union(*(run.origins[v] for v in bag)))
    bags = _relabel_bags(final)
    return SolveResult.of(quotient(g, bags), bags)


def solve_tree(g: Graph, k: int) -> SolveResult:
    """Tree = forest with budget shifted by the component count."""
    if k < 0 or g.n == 0:
        return SolveResult.no()
    s = len(components(g))
    if s > k + 1:
        return SolveResult.no()
    sub = solve_forest(g, k - s + 1)
    if not sub:
        return SolveResult.no()
    forest, bags = sub.target, dict(sub.witness)
    reps = []
    for comp in components(forest):
        reps.append(min(comp, key=lambda x: min(bags[x])))
    if len(reps) > 1:
        merged = frozenset().union(*(bags.pop(r) for r in reps))
        bags[min(reps)] = merged
        bags = _relabel_bags(list(bags.values()))
    return SolveResult.of(quotient(g, bags), bags)
