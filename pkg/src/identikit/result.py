"""Shared result and instance types."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .graph import Bags, Graph


class Mode(enum.Enum):
    BY_K = "k"
    BY_DUAL = "dual"


@dataclass(frozen=True)
class Instance:
    """A solver input: graph plus identification budget.

    ``mode`` records which parameterization the budget came from; the stored
    ``budget`` is always the number of allowed identifications ``k`` (for
    dual instances the parameter is ``p = n - k``).  Over-budget values
    (``k > n``) are legal and simply relax the instance.
    """

    graph: Graph
    budget: int
    mode: Mode = Mode.BY_K

    @property
    def dual_p(self) -> int:
        return self.graph.n - self.budget


@dataclass(frozen=True)
class SolveResult:
    """YES/NO verdict, optionally with a (target, witness) certificate.

    Any attached certificate satisfies ``verify_witness(g, target, witness)``
    and uses ``g.n - target.n <= budget`` identifications.
    """

    yes: bool
    target: Graph | None = None
    witness: Bags | None = None

    def __bool__(self) -> bool:
        return self.yes

    @classmethod
    def no(cls) -> "SolveResult":
        return cls(False)

    @classmethod
    def of(cls, target: Graph, witness: Bags) -> "SolveResult":
        return cls(True, target, witness)


class KernelVerdict(enum.Enum):
    REDUCED = "reduced"
    TRIVIAL_YES = "trivial-yes"
    TRIVIAL_NO = "trivial-no"


@dataclass(frozen=True)
class ForestKernelTrace:
    """Record of one forest-kernelization run.

    ``final_budget`` equals the input budget minus the number of forced
    identifications; it can be negative exactly when the verdict is
    TRIVIAL_NO.
    """

    removed_bridges: list[tuple[int, int]]
    removed_isolated: list[int]
    forced_identifications: list[tuple[int, int]]
    final_budget: int
    verdict: KernelVerdict
    reduced: Instance | None = None


@dataclass(frozen=True)
class ConstrainedInstance:
    """Clique identification relative to a set S: bags hold at most one S-vertex."""

    graph: Graph
    s_set: frozenset[int]
    budget: int


@dataclass(frozen=True)
class SetCoverInstance:
    universe_size: int
    sets: list[frozenset[int]] = field(default_factory=list)
    budget: int = 1

    def __post_init__(self) -> None:
        if self.budget < 1:
            raise ValueError("set cover budget must be at least 1")
        for s in self.sets:
            if any(x < 0 or x >= self.universe_size for x in s):
                raise ValueError("set member outside the universe")


@dataclass(frozen=True)
class BinPackingInstance:
    sizes: tuple[int, ...]
    bins: int
    capacity: int

    def __post_init__(self) -> None:
        if any(s <= 0 for s in self.sizes):
            raise ValueError("item sizes must be positive")
        if self.bins <= 0 or self.capacity <= 0:
            raise ValueError("bin count and capacity must be positive")
