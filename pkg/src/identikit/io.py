"""Text formats: graphs and witness structures.

Graph format: first significant line is ``n m``, followed by ``m`` lines
``u v`` with 0-based vertex ids.  Blank lines and lines starting with ``#``
are ignored.  Isolated vertices are implied by ``n`` exceeding the ids that
appear on edge lines.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graph import Bags, Graph


def parse_graph(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("no header line 'n m'")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"malformed header {lines[0]!r}, expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError(f"malformed header {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise GraphFormatError("negative counts in header")
    if len(lines) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"malformed edge line {ln!r}") from None
        if u == v:
            raise GraphFormatError(f"self-loop {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
        edges.append((min(u, v), max(u, v)))
    if len(set(edges)) != len(edges):
        raise GraphFormatError("duplicate edge")
    return Graph.from_edges(range(n), edges)


def read_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_graph(g: Graph) -> str:
    """Graph in text format; vertex ids are compacted to 0..n-1 (sorted order)."""
    verts = g.vertices()
    index = {v: i for i, v in enumerate(verts)}
    out = [f"{g.n} {g.m}"]
    out.extend(f"{index[u]} {index[v]}" for u, v in sorted((index[a], index[b]) for a, b in g.edges()))
    return "\n".join(out) + "\n"


def format_witness(bags: Bags) -> str:
    out = []
    for x in sorted(bags):
        members = " ".join(str(v) for v in sorted(bags[x]))
        out.append(f"bag {x}: {members}")
    return "\n".join(out) + "\n"


def parse_witness(text: str) -> Bags:
    """Parse ``bag <id>: v1 v2 ...`` lines; all other lines are ignored.

    Ignoring non-bag lines lets a saved ``solve --witness`` output (target
    graph block followed by bags) be fed back in directly.
    """
    bags: Bags = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln.startswith("bag "):
            continue
        head, _, tail = ln[4:].partition(":")
        try:
            key = int(head.strip())
            members = frozenset(int(tok) for tok in tail.split())
        except ValueError:
            raise GraphFormatError(f"malformed bag line {ln!r}") from None
        if key in bags:
            raise GraphFormatError(f"duplicate bag {key}")
        bags[key] = members
    if not bags:
        raise GraphFormatError("no bag lines found")
    return bags


def parse_witness_file(path: str) -> Bags:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_witness(fh.read())


def parse_embedded_graph(text: str) -> Graph | None:
    """Extract the graph block (non-bag, non-comment lines) from solver output."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.strip().startswith(("#", "bag ", "YES", "NO"))]
    if not lines:
        return None
    return parse_graph("\n".join(lines))
