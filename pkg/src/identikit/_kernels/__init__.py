"""Kernel backend selection: compiled extension when available, pure Python otherwise.

Set ``IDENTIKIT_PURE=1`` to force the fallback.  The compiled twin only
handles graphs with at most 63 vertices (64-bit masks); larger graphs are
routed to the pure implementation transparently.
"""

from __future__ import annotations

import os

from . import pure

N_CLASSES = pure.N_CLASSES

_native = None
if os.environ.get("IDENTIKIT_PURE", "") != "1":
    try:
        from . import _native  # type: ignore[no-redef]
    except ImportError:
        _native = None

BACKEND = "native" if _native is not None else "pure"
_NATIVE_MAX_N = 63


def _impl(masks: list[int]):
    if _native is not None and len(masks) <= _NATIVE_MAX_N:
        return _native
    return pure


def classify(masks: list[int]) -> int:
    return _impl(masks).classify(masks)


def partition_min_all(masks: list[int]) -> list[int]:
    return _impl(masks).partition_min_all(masks)


def best_partition_to_class(
    masks: list[int], cls: int, max_excess: int, sep_mask: int = 0
) -> tuple[int, list[int]] | None:
    return _impl(masks).best_partition_to_class(masks, cls, max_excess, sep_mask)


def identify_to_assignment(g_masks: list[int], h_masks: list[int]) -> list[int] | None:
    return _impl(g_masks if len(g_masks) >= len(h_masks) else h_masks).identify_to_assignment(g_masks, h_masks)
