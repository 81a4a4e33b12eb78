"""identikit: solvers, kernels and oracles for vertex-identification problems."""

from ._kernels import BACKEND as kernel_backend
from .classes import GraphClass, recognize
from .graph import Graph, apply_sequence, identify, quotient, verify_witness
from .result import Instance, SolveResult

__all__ = [
    "Graph",
    "GraphClass",
    "Instance",
    "SolveResult",
    "apply_sequence",
    "identify",
    "kernel_backend",
    "quotient",
    "recognize",
    "verify_witness",
]

__version__ = "0.1.0"
