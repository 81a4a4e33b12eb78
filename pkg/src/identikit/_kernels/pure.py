"""Pure-Python kernel: dense bitmask graph primitives.

A "mask graph" is a list ``masks`` where ``masks[v]`` is the neighbor bitmask
of vertex ``v`` (vertices ``0..n-1``).  These functions carry the hot inner
loops of the oracle and the exhaustive solvers; the compiled twin in
``_native.pyx`` mirrors them exactly and is cross-checked by tests.

Class bit layout (must match ``identikit.classes.GraphClass`` order):
    0 path, 1 linear forest, 2 star, 3 tree, 4 forest,
    5 clique, 6 cluster, 7 split, 8 interval, 9 chordal
"""

from __future__ import annotations

BACKEND = "pure"

N_CLASSES = 10
PATH, LINEAR_FOREST, STAR, TREE, FOREST, CLIQUE, CLUSTER, SPLIT, INTERVAL, CHORDAL = range(N_CLASSES)

# classes that contain the 0-vertex graph
_EMPTY_BITS = (1 << LINEAR_FOREST) | (1 << FOREST) | (1 << CLUSTER) | (1 << INTERVAL) | (1 << CHORDAL)


def _components(masks: list[int], n: int) -> list[int]:
    """Component vertex-masks, discovered in increasing min-vertex order."""
    comps = []
    seen = 0
    for v in range(n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                u = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= masks[u]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def _is_clique_set(masks: list[int], vset: int) -> bool:
    m = vset
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        if masks[v] & vset != vset & ~(1 << v):
            return False
    return True


def _mcs_peo(masks: list[int], n: int) -> bool:
    """Chordality via maximum-cardinality search + perfect-elimination check."""
    weight = [0] * n
    numbered = 0
    picks = []
    for _ in range(n):
        best, best_w = -1, -1
        for v in range(n):
            if not (numbered >> v & 1) and weight[v] > best_w:
                best, best_w = v, weight[v]
        picks.append(best)
        numbered |= 1 << best
        nb = masks[best]
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            if not (numbered >> u & 1):
                weight[u] += 1
    elim = picks[::-1]
    pos = [0] * n
    for i, v in enumerate(elim):
        pos[v] = i
    later = 0  # vertices with elimination position > current
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (1 << elim[i + 1]) if i + 1 < n else 0
    for i, v in enumerate(elim):
        later = masks[v] & suffix[i]
        if not later:
            continue
        parent, parent_pos = -1, n + 1
        m = later
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if pos[u] < parent_pos:
                parent, parent_pos = u, pos[u]
        if (later ^ (1 << parent)) & ~masks[parent]:
            return False
    return True


def _has_asteroidal_triple(masks: list[int], n: int) -> bool:
    # labels[z][v]: component index of v in G - N[z], or -1 when v is in N[z]
    labels = []
    for z in range(n):
        closed = masks[z] | (1 << z)
        lab = [-1] * n
        cid = 0
        seen = closed
        for v in range(n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    u = (f & -f).bit_length() - 1
                    f &= f - 1
                    nxt |= masks[u]
                frontier = nxt & ~comp & ~closed
                comp |= frontier
            m = comp
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                lab[u] = cid
            cid += 1
            seen |= comp
        labels.append(lab)
    for u in range(n):
        for v in range(u + 1, n):
            if labels[u][v] < 0:
                continue
            for w in range(v + 1, n):
                if (
                    labels[w][u] >= 0
                    and labels[w][u] == labels[w][v]
                    and labels[v][u] >= 0
                    and labels[v][u] == labels[v][w]
                    and labels[u][v] == labels[u][w]
                ):
                    return True
    return False


def classify(masks: list[int]) -> int:
    """Membership bitfield over the ten testbed classes."""
    n = len(masks)
    if n == 0:
        return _EMPTY_BITS
    deg = [masks[v].bit_count() for v in range(n)]
    m2 = sum(deg)
    comps = _components(masks, n)
    ncomp = len(comps)
    forest = m2 // 2 == n - ncomp
    connected = ncomp == 1
    maxdeg = max(deg)

    bits = 0
    if forest:
        bits |= 1 << FOREST
        if maxdeg <= 2:
            bits |= 1 << LINEAR_FOREST
        if connected:
            bits |= 1 << TREE
            if maxdeg <= 2:
                bits |= 1 << PATH
            if sum(1 for d in deg if d >= 2) <= 1:
                bits |= 1 << STAR
    if m2 == n * (n - 1):
        bits |= 1 << CLIQUE
    if all(_is_clique_set(masks, c) for c in comps):
        bits |= 1 << CLUSTER
    # split: Hammer-Simeone degree-sequence characterization
    ds = sorted(deg, reverse=True)
    mstar = 0
    for i in range(1, n + 1):
        if ds[i - 1] >= i - 1:
            mstar = i
    if sum(ds[:mstar]) == mstar * (mstar - 1) + sum(ds[mstar:]):
        bits |= 1 << SPLIT
    if _mcs_peo(masks, n):
        bits |= 1 << CHORDAL
        if not _has_asteroidal_triple(masks, n):
            bits |= 1 << INTERVAL
    return bits


def _quotient_classify(masks: list[int], n: int, assign: list[int], nparts: int) -> int:
    part_mask = [0] * nparts
    row_or = [0] * nparts
    for v in range(n):
        p = assign[v]
        part_mask[p] |= 1 << v
        row_or[p] |= masks[v]
    q = [0] * nparts
    for p in range(nparts):
        x = row_or[p] & ~part_mask[p]
        if not x:
            continue
        for r in range(nparts):
            if r != p and x & part_mask[r]:
                q[p] |= 1 << r
    return classify(q)


def partition_min_all(masks: list[int]) -> list[int]:
    """Minimum identifications into each class, over every set partition.

    Returns a list indexed by class bit; -1 means unreachable.
    """
    n = len(masks)
    if n == 0:
        bits = classify([])
        return [0 if bits >> c & 1 else -1 for c in range(N_CLASSES)]
    best = [-1] * N_CLASSES
    assign = [0] * n

    def rec(i: int, nparts: int) -> None:
        if i == n:
            excess = n - nparts
            bits = _quotient_classify(masks, n, assign, nparts)
            for c in range(N_CLASSES):
                if bits >> c & 1 and (best[c] < 0 or excess < best[c]):
                    best[c] = excess
            return
        for p in range(nparts + 1):
            assign[i] = p
            rec(i + 1, nparts + 1 if p == nparts else nparts)

    rec(0, 0)
    return best


def best_partition_to_class(
    masks: list[int], cls: int, max_excess: int, sep_mask: int = 0
) -> tuple[int, list[int]] | None:
    """Lexicographically-first partition of minimum excess whose quotient is in ``cls``.

    ``excess`` is ``n - #parts`` (= identifications spent).  Partitions where
    some part holds two vertices of ``sep_mask`` are skipped.  Returns
    ``(excess, assignment)`` with ``excess <= max_excess``, or ``None``.
    """
    n = len(masks)
    if n == 0:
        return (0, []) if (classify([]) >> cls & 1) and max_excess >= 0 else None
    if max_excess < 0:
        return None
    best: list[tuple[int, list[int]] | None] = [None]
    assign = [0] * n
    part_sep = [0] * n  # number of sep vertices per part

    def rec(i: int, nparts: int) -> None:
        if best[0] is not None and best[0][0] == 0:
            return
        if i == n:
            excess = n - nparts
            if best[0] is not None and excess >= best[0][0]:
                return
            if _quotient_classify(masks, n, assign, nparts) >> cls & 1:
                best[0] = (excess, assign.copy())
            return
        is_sep = sep_mask >> i & 1
        for p in range(nparts + 1):
            bound = best[0][0] - 1 if best[0] is not None else max_excess
            new_parts = nparts + 1 if p == nparts else nparts
            if (i + 1) - new_parts > bound:
                continue
            if is_sep and p < nparts and part_sep[p]:
                continue
            assign[i] = p
            if is_sep:
                part_sep[p] += 1
            rec(i + 1, new_parts)
            if is_sep:
                part_sep[p] -= 1

    rec(0, 0)
    return best[0]


def identify_to_assignment(g_masks: list[int], h_masks: list[int]) -> list[int] | None:
    """First valid witness assignment of g-vertices to h-bags, or None.

    Assignment ``asg[v] = bag index`` (bags indexed by h-vertex ``0..nh-1``);
    enumeration is in lexicographic order of the assignment vector, so the
    result is deterministic.
    """
    ng, nh = len(g_masks), len(h_masks)
    if nh > ng:
        return None
    if nh == 0:
        return [] if ng == 0 else None
    asg = [0] * ng
    bag_mask = [0] * nh
    row_or = [0] * nh
    nonempty = 0

    def rec(v: int) -> bool:
        nonlocal nonempty
        if v == ng:
            if nonempty != nh:
                return False
            for b in range(nh):
                hm = h_masks[b]
                while hm:
                    c = (hm & -hm).bit_length() - 1
                    hm &= hm - 1
                    if c > b and not (row_or[b] & bag_mask[c]):
                        return False
            return True
        if ng - v < nh - nonempty:
            return False  # not enough vertices left to fill empty bags
        vm = g_masks[v]
        for b in range(nh):
            ok = True
            for c in range(nh):
                if c != b and not (h_masks[b] >> c & 1) and vm & bag_mask[c]:
                    ok = False
                    break
            if not ok:
                continue
            asg[v] = b
            was_empty = bag_mask[b] == 0
            bag_mask[b] |= 1 << v
            row_or[b] |= vm
            if was_empty:
                nonempty += 1
            if rec(v + 1):
                return True
            bag_mask[b] &= ~(1 << v)
            row_or[b] = 0
            bm = bag_mask[b]
            while bm:
                u = (bm & -bm).bit_length() - 1
                bm &= bm - 1
                row_or[b] |= g_masks[u]
            if was_empty:
                nonempty -= 1
        return False

    return list(asg) if rec(0) else None
