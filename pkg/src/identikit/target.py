"""Identification with an explicit target: trees, linear forests, forests.

The tree solver guesses one source vertex per rooted leaf and grows the
remaining bags bottom-up by the regular rule (each internal bag is the
neighborhood of its children's subtree union).  The forest solver guesses a
split of the target into a core ``F'`` (around vertices of degree != 2) and
a linear-forest remainder ``L``, glues source components claimed by each
core tree through representative and connector identifications, checks each
glued piece against its tree, and packs the leftover components against
``L`` by a diameter-sum feasibility table.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .classes import GraphClass, recognize
from .errors import DisconnectedInput, TargetNotForest, TargetNotTree
from .graph import Bags, Graph, components, diameter, is_connected, quotient, verify_witness


@dataclass(frozen=True)
class RootedTree:
    """A tree rooted at one of its leaves (Lemma-style regular processing)."""

    underlying: Graph
    root: int
    parent: dict[int, int]
    children: dict[int, tuple[int, ...]]

    @property
    def rooted_leaves(self) -> tuple[int, ...]:
        return tuple(v for v in self.underlying.vertices() if v != self.root and not self.children[v])


def root_tree(t: Graph, root: int | None = None) -> RootedTree:
    """Root a tree at a leaf (smallest-id leaf when not given)."""
    if t.n == 0 or not recognize(t, GraphClass.TREE):
        raise TargetNotTree("target is not a tree")
    if root is None:
        root = min(v for v in t.vertices() if t.degree(v) <= 1)
    elif root not in t or t.degree(root) > 1:
        raise TargetNotTree(f"root {root} is not a leaf of the tree")
    parent: dict[int, int] = {}
    children: dict[int, list[int]] = {v: [] for v in t.vertices()}
    stack = [root]
    seen = {root}
    while stack:
        v = stack.pop()
        for u in sorted(t.neighbors(v)):
            if u not in seen:
                seen.add(u)
                parent[u] = v
                children[v].append(u)
                stack.append(u)
    return RootedTree(t, root, parent, {v: tuple(cs) for v, cs in children.items()})


class _TreeSearch:
    """Backtracking over leaf-bag guesses with incremental bag propagation."""

    def __init__(self, g: Graph, t: RootedTree):
        self.g = g
        self.t = t
        self.leaves = sorted(t.rooted_leaves)
        self.bags: dict[int, frozenset[int]] = {}
        self.subtree: dict[int, frozenset[int]] = {}
        self.used: set[int] = set()

    def _neighborhood(self, vs: frozenset[int]) -> frozenset[int]:
        out: set[int] = set()
        for v in vs:
            out |= self.g.neighbors(v)
        return frozenset(out - vs)

    def _build(self, x: int, bag: frozenset[int], built: list[int]) -> bool:
        """Install bag for x, then bubble up any parent whose children are done."""
        if not bag or bag & self.used:
            return False
        self.bags[x] = bag
        kids = self.t.children[x]
        self.subtree[x] = bag.union(*(self.subtree[c] for c in kids)) if kids else bag
        self.used |= bag
        built.append(x)
        y = self.t.parent.get(x)
        if y is None or y == self.t.root or y in self.bags:
            return True
        if all(c in self.bags for c in self.t.children[y]):
            union = frozenset().union(*(self.subtree[c] for c in self.t.children[y]))
            return self._build(y, self._neighborhood(union), built)
        return True

    def _undo(self, built: list[int]) -> None:
        for x in built:
            self.used -= self.bags.pop(x)
            self.subtree.pop(x, None)

    def run(self) -> Bags | None:
        t = self.t
        if t.underlying.n == 1:
            return {t.root: frozenset(self.g.vertices())}

        def rec(i: int) -> Bags | None:
            if i == len(self.leaves):
                remainder = frozenset(self.g.vertices()) - frozenset(self.used)
                if not remainder:
                    return None
                bags = dict(self.bags)
                bags[t.root] = remainder
                if verify_witness(self.g, t.underlying, bags):
                    return bags
                return None
            x = self.leaves[i]
            for v in self.g.vertices():
                if v in self.used:
                    continue
                built: list[int] = []
                if self._build(x, frozenset({v}), built):
                    found = rec(i + 1)
                    if found is not None:
                        return found
                self._undo(built)
            return None

        return rec(0)


def identify_to_tree(g: Graph, t: RootedTree) -> Bags | None:
    """Witness structure identifying connected ``g`` to the rooted tree, or None."""
    if not is_connected(g):
        raise DisconnectedInput("identify_to_tree requires a connected source graph")
    if t.underlying.n > g.n or g.n == 0:
        return None
    return _TreeSearch(g, t).run()


def identify_to_linear_forest(g: Graph, lengths: Sequence[int]) -> bool:
    """Can ``g`` be identified to the disjoint union of paths of these lengths?

    Lengths count edges.  Decided by the component-diameter feasibility
    table: a partition of the components into one group per path with
    diameter sums at least each length.
    """
    if any(l < 0 for l in lengths):
        raise ValueError("path lengths must be non-negative")
    comps = components(g)
    s, t = len(comps), len(lengths)
    if t > s or t == 0:
        return t == s  # covers the empty-target case: only the empty graph qualifies
    diams = sorted(diameter(g, c) for c in comps)
    trivial = sum(1 for l in lengths if l == 0)
    remaining = diams[trivial:]  # smallest diameters serve the trivial paths
    demands = [l for l in lengths if l > 0]
    if not demands:
        return True
    full = tuple(demands)
    cur = {tuple([0] * len(demands))}
    for d in remaining:
        nxt: set[tuple[int, ...]] = set()
        for state in cur:
            for j in range(len(demands)):
                bumped = list(state)
                bumped[j] = min(demands[j], state[j] + d)
                nxt.add(tuple(bumped))
        cur = nxt
    return full in cur


def _forest_sanity(f: Graph) -> None:
    if not recognize(f, GraphClass.FOREST):
        raise TargetNotForest("target is not a forest")


def _top_paths(f: Graph, v2: frozenset[int]) -> list[list[int]]:
    """Maximal paths between degree-!=2 vertices whose internals have degree 2."""
    paths = []
    seen_edges: set[tuple[int, int]] = set()
    for x in sorted(v2):
        for start in sorted(f.neighbors(x)):
            if (min(x, start), max(x, start)) in seen_edges:
                continue
            walk = [x, start]
            while walk[-1] not in v2:
                prev, cur = walk[-2], walk[-1]
                nxt = next(u for u in f.neighbors(cur) if u != prev)
                walk.append(nxt)
            for a, b in zip(walk, walk[1:]):
                seen_edges.add((min(a, b), max(a, b)))
            paths.append(walk)
    return paths


def _pack_leftovers(diams: list[int], demands: list[int]) -> bool:
    """Disjoint component groups with diameter sums covering each demand.

    Leftover components may stay unused (they are absorbed into existing
    bags), so this is the subset variant of the linear-forest table.
    """
    if not demands:
        return True
    cur = {tuple([0] * len(demands))}
    full = tuple(demands)
    for d in diams:
        nxt = set(cur)  # skipping the component is allowed
        for state in cur:
            for j in range(len(demands)):
                bumped = list(state)
                bumped[j] = min(demands[j], state[j] + d)
                nxt.add(tuple(bumped))
        cur = nxt
        if full in cur:
            return True
    return full in cur


class _ForestPipeline:
    def __init__(self, g: Graph, f: Graph):
        self.g = g
        self.f = f
        self.comps = components(g)
        self.diams = [diameter(g, c) for c in self.comps]
        self.v2 = frozenset(x for x in f.vertices() if f.degree(x) != 2)
        # claim budget per core vertex: |Imp(x)| is at most the leaf count
        # of the f-component containing x
        self.cap: dict[int, int] = {}
        for comp in components(f):
            leaves = sum(1 for x in comp if f.degree(x) <= 1)
            for x in comp:
                self.cap[x] = max(1, leaves)
        self.tree_memo: dict[tuple, bool] = {}
        self.claim_memo: dict[tuple, bool] = {}

    # -- gluing one claimed component set against one core tree ---------------

    def _quotient_by_groups(self, sub: Graph, groups: list[frozenset[int]]) -> Graph:
        # overlapping groups collapse into one bag (merging is transitive)
        closed: list[set[int]] = []
        for grp in groups:
            acc = set(grp)
            for other in [o for o in closed if o & acc]:
                acc |= other
                closed.remove(other)
            closed.append(acc)
        bags: Bags = {}
        grouped: set[int] = set()
        for acc in closed:
            bags[min(acc)] = frozenset(acc)
            grouped |= acc
        for v in set(sub.vertices()) - grouped:
            bags[v] = frozenset({v})
        return quotient(sub, bags)

    def _tree_check(self, piece: Graph, tree: RootedTree) -> bool:
        key = (piece.vertices(), piece.edges(), tree.underlying.vertices(), tree.underlying.edges())
        hit = self.tree_memo.get(key)
        if hit is None:
            hit = identify_to_tree(piece, tree) is not None
            self.tree_memo[key] = hit
        return hit

    def _claim_feasible(self, tree: RootedTree, comp_ids: tuple[int, ...]) -> bool:
        key = (tree.underlying.vertices(), tree.underlying.edges(), comp_ids)
        hit = self.claim_memo.get(key)
        if hit is not None:
            return hit
        result = self._claim_search(tree, comp_ids)
        self.claim_memo[key] = result
        return result

    def _claim_search(self, tree: RootedTree, comp_ids: tuple[int, ...]) -> bool:
        """Glue the claimed components into one piece, then run the tree check.

        Representative and connector identifications only matter insofar as
        they connect the claim: merging two vertices never turns an
        identifiable piece unidentifiable nor vice versa beyond connectivity
        (a witness of the merged graph expands to one of the unmerged graph).
        So it suffices to enumerate inclusion-minimal connecting merge sets:
        repeatedly merge one vertex from the first piece with one vertex
        from each piece of a chosen subset.
        """
        union_vs = frozenset().union(*(self.comps[i] for i in comp_ids))
        sub = self.g.subgraph(union_vs)

        def glue(pieces: list[frozenset[int]], groups: list[frozenset[int]]) -> bool:
            if len(pieces) == 1:
                return self._tree_check(self._quotient_by_groups(sub, groups), tree)
            first, rest = pieces[0], pieces[1:]
            for sel in _subsets(list(range(len(rest))), max_size=len(rest)):
                chosen_pieces = [rest[i] for i in sel]
                pools = [sorted(first)] + [sorted(p) for p in chosen_pieces]
                for pick in product(*pools):
                    group = frozenset(pick)
                    merged = first.union(*chosen_pieces)
                    remaining = [p for i, p in enumerate(rest) if i not in sel]
                    if glue([merged] + remaining, groups + [group]):
                        return True
            return False

        pieces = sorted((self.comps[i] for i in comp_ids), key=min)
        return glue(pieces, [])

    # -- outer enumeration -----------------------------------------------------

    def run(self) -> bool:
        f = self.f
        paths = _top_paths(f, self.v2)
        split_options = []
        for walk in paths:
            opts: list[tuple[int, int] | None] = [None]
            inner = list(range(1, len(walk) - 1))
            for ii in range(len(inner)):
                for jj in range(ii + 1, len(inner)):
                    opts.append((inner[ii], inner[jj]))
            split_options.append(opts)
        for combo in product(*split_options):
            stripped_edges: list[tuple[int, int]] = []
            dropped: set[int] = set()
            demands: list[int] = []
            for walk, choice in zip(paths, combo):
                if choice is None:
                    continue
                i, j = choice
                demands.append(j - i)
                for a, b in zip(walk[i:j], walk[i + 1 : j + 1]):
                    stripped_edges.append((a, b))
                dropped.update(walk[i + 1 : j])
            core = f.delete_edges(stripped_edges).subgraph(set(f.vertices()) - dropped)
            if self._check_split(core, demands):
                return True
        return False

    def _check_split(self, core: Graph, demands: list[int]) -> bool:
        trees = components(core)
        if len(trees) > len(self.comps):
            return False
        rooted = []
        for tv in trees:
            sub_t = core.subgraph(tv)
            rooted.append(root_tree(sub_t))

        order = sorted(range(len(trees)), key=lambda i: min(trees[i]))

        def place(pos: int, used: frozenset[int]) -> bool:
            if pos == len(order):
                leftover = [self.diams[i] for i in range(len(self.comps)) if i not in used]
                return _pack_leftovers(sorted(leftover, reverse=True), demands)
            ti = order[pos]
            tree = rooted[ti]
            tn = tree.underlying.n
            cap_sum = sum(self.cap[x] for x in self.v2 & set(tree.underlying.vertices()))
            free = [i for i in range(len(self.comps)) if i not in used]
            for claim in _subsets(free, max_size=min(len(free), cap_sum)):
                if sum(len(self.comps[i]) for i in claim) < tn:
                    continue
                if self._claim_feasible(tree, claim):
                    if place(pos + 1, used | set(claim)):
                        return True
            return False

        return place(0, frozenset())


def _subsets(items: list[int], max_size: int):
    """Nonempty subsets in increasing size then lexicographic order."""
    from itertools import combinations

    for r in range(1, max_size + 1):
        yield from combinations(items, r)


def _tree_path(t: Graph, x: int, y: int) -> list[int]:
    parent = {x: None}
    stack = [x]
    while stack:
        v = stack.pop()
        if v == y:
            break
        for u in sorted(t.neighbors(v)):
            if u not in parent:
                parent[u] = v
                stack.append(u)
    path = [y]
    while path[-1] != x:
        path.append(parent[path[-1]])
    return path[::-1]


def identify_to_forest(g: Graph, f: Graph) -> bool:
    """Does ``g`` identify to the forest ``f``?"""
    _forest_sanity(f)
    if f.n == 0:
        return g.n == 0
    if f.n > g.n or f.m > g.m or len(components(f)) > max(1, len(components(g))):
        return False
    if is_connected(g) and g.n > 0:
        if len(components(f)) > 1:
            return False
        return identify_to_tree(g, root_tree(f)) is not None
    return _ForestPipeline(g, f).run()
