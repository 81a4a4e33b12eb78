"""Exhaustive ground-truth solvers for small instances.

Everything here enumerates partitions or subsets outright; the value of the
oracle is its obviousness, and every nontrivial solver in the package is
tested against it.  Caps guard against accidental blowup and raise
:class:`BudgetExceeded` when hit.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations

from . import _kernels
from .classes import ALL_CLASSES, GraphClass
from .errors import BudgetExceeded
from .graph import Bags, Graph, to_masks

_BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597, 27644437, 190899322, 1382958545, 10480142147]


def _default_cap() -> int:
    raw = os.environ.get("IDENTIKIT_ORACLE_CAP", "")
    try:
        return int(raw) if raw else 8
    except ValueError:
        return 8


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = field(default_factory=_default_cap)
    max_partitions: int = 200_000

    def __post_init__(self) -> None:
        if self.max_vertices <= 0 or self.max_partitions <= 0:
            raise ValueError("oracle caps must be positive")

    def check_partitions(self, n: int) -> None:
        if n > self.max_vertices:
            raise BudgetExceeded(f"{n} vertices exceeds the oracle cap {self.max_vertices}")
        bell = _BELL[n] if n < len(_BELL) else float("inf")
        if bell > self.max_partitions:
            raise BudgetExceeded(f"Bell({n}) = {bell} exceeds the partition cap {self.max_partitions}")


def min_identifications_all(g: Graph, budget: OracleBudget | None = None) -> dict[GraphClass, int | None]:
    """Minimum identifications into every class at once (None = unreachable)."""
    budget = budget or OracleBudget()
    budget.check_partitions(g.n)
    _, masks = to_masks(g)
    mins = _kernels.partition_min_all(masks)
    return {c: (mins[c.value] if mins[c.value] >= 0 else None) for c in ALL_CLASSES}


def min_identifications(g: Graph, c: GraphClass, budget: OracleBudget | None = None) -> int | None:
    """Minimum number of identifications turning ``g`` into a member of ``c``.

    ``None`` means unreachable, which only happens for the empty graph
    against classes that require a vertex.
    """
    return min_identifications_all(g, budget)[c]


def identify_to(g: Graph, h: Graph, budget: OracleBudget | None = None) -> Bags | None:
    """Some witness structure certifying that ``g`` identifies to ``h``, or None.

    Deterministic: the first valid assignment of vertices (in sorted order)
    to bags (keyed by sorted target ids) is returned.
    """
    budget = budget or OracleBudget()
    if g.n > budget.max_vertices:
        raise BudgetExceeded(f"{g.n} vertices exceeds the oracle cap {budget.max_vertices}")
    _, g_masks = to_masks(g)
    h_verts, h_masks = to_masks(h)
    asg = _kernels.identify_to_assignment(g_masks, h_masks)
    if asg is None:
        return None
    g_verts = g.vertices()
    bags: dict[int, set[int]] = {x: set() for x in h_verts}
    for i, b in enumerate(asg):
        bags[h_verts[b]].add(g_verts[i])
    return {x: frozenset(vs) for x, vs in bags.items()}


def min_vertex_cover(g: Graph, budget: OracleBudget | None = None) -> int:
    """Exact minimum vertex cover size by subset enumeration."""
    budget = budget or OracleBudget()
    if g.n > budget.max_vertices + 4:
        raise BudgetExceeded(f"{g.n} vertices exceeds the vertex-cover cap {budget.max_vertices + 4}")
    edges = g.edges()
    if not edges:
        return 0
    verts = [v for v in g.vertices() if g.degree(v) > 0]
    for k in range(1, len(verts) + 1):
        for cand in combinations(verts, k):
            cover = set(cand)
            if all(u in cover or v in cover for u, v in edges):
                return k
    return len(verts)


def constrained_clique_min(g: Graph, s_set: frozenset[int], max_excess: int, budget: OracleBudget | None = None) -> int | None:
    """Ground truth for S-constrained clique identification.

    Minimum identifications (at most ``max_excess``) reaching a clique while
    never putting two vertices of ``s_set`` in one bag; None if impossible.
    """
    budget = budget or OracleBudget()
    budget.check_partitions(g.n)
    verts, masks = to_masks(g)
    index = {v: i for i, v in enumerate(verts)}
    sep = 0
    for v in s_set:
        sep |= 1 << index[v]
    found = _kernels.best_partition_to_class(masks, GraphClass.CLIQUE.value, max_excess, sep)
    return None if found is None else found[0]
