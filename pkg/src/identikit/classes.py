"""Membership tests for the ten testbed graph classes."""

from __future__ import annotations

import enum

from . import _kernels
from .graph import Graph, to_masks


class GraphClass(enum.Enum):
    """The testbed classes, all subclasses of chordal graphs.

    Edge-case conventions: the empty graph belongs to LINEAR_FOREST, FOREST,
    CLUSTER, INTERVAL and CHORDAL but not to PATH, STAR, TREE, CLIQUE or
    SPLIT (the first four require a vertex, split requires a nonempty clique
    side).  K1 belongs to all ten.
    """

    PATH = 0
    LINEAR_FOREST = 1
    STAR = 2
    TREE = 3
    FOREST = 4
    CLIQUE = 5
    CLUSTER = 6
    SPLIT = 7
    INTERVAL = 8
    CHORDAL = 9


ALL_CLASSES = tuple(GraphClass)

_BY_NAME = {c.name.lower().replace("_", "-"): c for c in GraphClass}


def class_from_name(name: str) -> GraphClass:
    """Parse a CLI-style class name such as ``linear-forest``."""
    try:
        return _BY_NAME[name.lower()]
    except KeyError:
        raise ValueError(f"unknown graph class {name!r}") from None


def membership_bits(g: Graph) -> int:
    """Bitfield of class memberships, indexed by ``GraphClass.value``."""
    _, masks = to_masks(g)
    return _kernels.classify(masks)


def recognize(g: Graph, c: GraphClass) -> bool:
    """True iff ``g`` belongs to class ``c``."""
    return bool(membership_bits(g) >> c.value & 1)


def split_partition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A (clique, independent) partition with maximum clique side, or None.

    Internal helper for the split solver; ``recognize`` remains boolean-only.
    Uses the degree-ordering fact that for split graphs the top ``m*``
    vertices by degree form a maximum clique.
    """
    if not recognize(g, GraphClass.SPLIT):
        return None
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    mstar = 0
    for i in range(1, g.n + 1):
        if g.degree(order[i - 1]) >= i - 1:
            mstar = i
    clique = frozenset(order[:mstar])
    return clique, frozenset(order[mstar:])
