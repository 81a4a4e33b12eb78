# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel: mirrors ``pure.py`` for graphs with at most 63 vertices.

Any behavioral divergence from the pure twin is a bug; the parity test
suite drives both backends over the same inputs.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #define POPCOUNT64(x) __builtin_popcountll(x)
    #define CTZ64(x) __builtin_ctzll(x)
    """
    int POPCOUNT64(unsigned long long x) nogil
    int CTZ64(unsigned long long x) nogil

BACKEND = "native"

N_CLASSES = 10
PATH, LINEAR_FOREST, STAR, TREE, FOREST, CLIQUE, CLUSTER, SPLIT, INTERVAL, CHORDAL = range(10)

cdef int C_PATH = 0, C_LF = 1, C_STAR = 2, C_TREE = 3, C_FOREST = 4
cdef int C_CLIQUE = 5, C_CLUSTER = 6, C_SPLIT = 7, C_INTERVAL = 8, C_CHORDAL = 9

cdef int EMPTY_BITS = (1 << C_LF) | (1 << C_FOREST) | (1 << C_CLUSTER) | (1 << C_INTERVAL) | (1 << C_CHORDAL)


cdef int _components_c(uint64_t* masks, int n, uint64_t* comps) nogil:
    cdef uint64_t seen = 0, comp, frontier, nxt, f
    cdef int v, u, count = 0
    for v in range(n):
        if (seen >> v) & 1:
            continue
        comp = (<uint64_t>1) << v
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                u = CTZ64(f)
                f &= f - 1
                nxt |= masks[u]
            frontier = nxt & ~comp
            comp |= frontier
        comps[count] = comp
        count += 1
        seen |= comp
    return count


cdef bint _is_clique_set_c(uint64_t* masks, uint64_t vset) nogil:
    cdef uint64_t m = vset
    cdef int v
    while m:
        v = CTZ64(m)
        m &= m - 1
        if (masks[v] & vset) != (vset & ~((<uint64_t>1) << v)):
            return False
    return True


cdef bint _mcs_peo_c(uint64_t* masks, int n) nogil:
    cdef int weight[64]
    cdef int picks[64]
    cdef int pos[64]
    cdef uint64_t suffix[65]
    cdef uint64_t numbered = 0, nb, later
    cdef int i, v, u, best, best_w, parent, parent_pos
    for v in range(n):
        weight[v] = 0
    for i in range(n):
        best = -1
        best_w = -1
        for v in range(n):
            if not ((numbered >> v) & 1) and weight[v] > best_w:
                best = v
                best_w = weight[v]
        picks[i] = best
        numbered |= (<uint64_t>1) << best
        nb = masks[best]
        while nb:
            u = CTZ64(nb)
            nb &= nb - 1
            if not ((numbered >> u) & 1):
                weight[u] += 1
    # elimination order = reversed pick order
    for i in range(n):
        pos[picks[n - 1 - i]] = i
    suffix[n] = 0
    cdef int elim_i
    for i in range(n - 1, -1, -1):
        if i + 1 < n:
            suffix[i] = suffix[i + 1] | ((<uint64_t>1) << picks[n - 1 - (i + 1)])
        else:
            suffix[i] = 0
    for i in range(n):
        v = picks[n - 1 - i]
        later = masks[v] & suffix[i]
        if later == 0:
            continue
        parent = -1
        parent_pos = n + 1
        nb = later
        while nb:
            u = CTZ64(nb)
            nb &= nb - 1
            if pos[u] < parent_pos:
                parent = u
                parent_pos = pos[u]
        if (later ^ ((<uint64_t>1) << parent)) & ~masks[parent]:
            return False
    return True


cdef bint _has_at_c(uint64_t* masks, int n) nogil:
    cdef int labels[64][64]
    cdef uint64_t closed, comp, frontier, nxt, f, seen, m
    cdef int z, v, u, w, cid
    for z in range(n):
        closed = masks[z] | ((<uint64_t>1) << z)
        for v in range(n):
            labels[z][v] = -1
        cid = 0
        seen = closed
        for v in range(n):
            if (seen >> v) & 1:
                continue
            comp = (<uint64_t>1) << v
            frontier = comp
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    u = CTZ64(f)
                    f &= f - 1
                    nxt |= masks[u]
                frontier = nxt & ~comp & ~closed
                comp |= frontier
            m = comp
            while m:
                u = CTZ64(m)
                m &= m - 1
                labels[z][u] = cid
            cid += 1
            seen |= comp
    for u in range(n):
        for v in range(u + 1, n):
            if labels[u][v] < 0:
                continue
            for w in range(v + 1, n):
                if (labels[w][u] >= 0 and labels[w][u] == labels[w][v]
                        and labels[v][u] >= 0 and labels[v][u] == labels[v][w]
                        and labels[u][v] == labels[u][w]):
                    return True
    return False


cdef int _classify_c(uint64_t* masks, int n) nogil:
    cdef uint64_t comps[64]
    cdef int deg[64]
    cdef int ds[64]
    cdef int v, i, j, tmp, m2 = 0, maxdeg = 0, ncomp, bits = 0, big = 0
    cdef bint forest, connected, cluster
    if n == 0:
        return EMPTY_BITS
    for v in range(n):
        deg[v] = POPCOUNT64(masks[v])
        m2 += deg[v]
        if deg[v] > maxdeg:
            maxdeg = deg[v]
        if deg[v] >= 2:
            big += 1
    ncomp = _components_c(masks, n, comps)
    forest = (m2 // 2) == n - ncomp
    connected = ncomp == 1
    if forest:
        bits |= 1 << C_FOREST
        if maxdeg <= 2:
            bits |= 1 << C_LF
        if connected:
            bits |= 1 << C_TREE
            if maxdeg <= 2:
                bits |= 1 << C_PATH
            if big <= 1:
                bits |= 1 << C_STAR
    if m2 == n * (n - 1):
        bits |= 1 << C_CLIQUE
    cluster = True
    for i in range(ncomp):
        if not _is_clique_set_c(masks, comps[i]):
            cluster = False
            break
    if cluster:
        bits |= 1 << C_CLUSTER
    # split: degree sequence (descending insertion sort, n <= 63)
    for v in range(n):
        ds[v] = deg[v]
    for i in range(1, n):
        tmp = ds[i]
        j = i - 1
        while j >= 0 and ds[j] < tmp:
            ds[j + 1] = ds[j]
            j -= 1
        ds[j + 1] = tmp
    cdef int mstar = 0, lhs = 0, rhs = 0
    for i in range(1, n + 1):
        if ds[i - 1] >= i - 1:
            mstar = i
    for i in range(mstar):
        lhs += ds[i]
    for i in range(mstar, n):
        rhs += ds[i]
    if lhs == mstar * (mstar - 1) + rhs:
        bits |= 1 << C_SPLIT
    if _mcs_peo_c(masks, n):
        bits |= 1 << C_CHORDAL
        if not _has_at_c(masks, n):
            bits |= 1 << C_INTERVAL
    return bits


cdef int _quotient_classify_c(uint64_t* masks, int n, int* assign, int nparts) nogil:
    cdef uint64_t part_mask[64]
    cdef uint64_t row_or[64]
    cdef uint64_t q[64]
    cdef uint64_t x
    cdef int v, p, r
    for p in range(nparts):
        part_mask[p] = 0
        row_or[p] = 0
    for v in range(n):
        p = assign[v]
        part_mask[p] |= (<uint64_t>1) << v
        row_or[p] |= masks[v]
    for p in range(nparts):
        q[p] = 0
    for p in range(nparts):
        x = row_or[p] & ~part_mask[p]
        if x == 0:
            continue
        for r in range(nparts):
            if r != p and (x & part_mask[r]):
                q[p] |= (<uint64_t>1) << r
    return _classify_c(q, nparts)


def classify(masks):
    cdef uint64_t cm[64]
    cdef int n = len(masks)
    cdef int i
    if n > 63:
        raise ValueError("native kernel handles at most 63 vertices")
    for i in range(n):
        cm[i] = masks[i]
    return _classify_c(cm, n)


cdef void _pm_rec(uint64_t* masks, int n, int* assign, int i, int nparts, int* best) nogil:
    cdef int p, c, excess, bits
    if i == n:
        bits = _quotient_classify_c(masks, n, assign, nparts)
        excess = n - nparts
        for c in range(10):
            if (bits >> c) & 1 and (best[c] < 0 or excess < best[c]):
                best[c] = excess
        return
    for p in range(nparts + 1):
        assign[i] = p
        _pm_rec(masks, n, assign, i + 1, nparts + 1 if p == nparts else nparts, best)


def partition_min_all(masks):
    cdef uint64_t cm[64]
    cdef int assign[64]
    cdef int best[10]
    cdef int n = len(masks)
    cdef int i
    if n > 63:
        raise ValueError("native kernel handles at most 63 vertices")
    if n == 0:
        bits = EMPTY_BITS
        return [0 if (bits >> c) & 1 else -1 for c in range(10)]
    for i in range(n):
        cm[i] = masks[i]
    for i in range(10):
        best[i] = -1
    _pm_rec(cm, n, assign, 0, 0, best)
    return [best[i] for i in range(10)]


cdef struct BP:
    int best_excess
    int max_excess
    int cls
    int n
    uint64_t sep


cdef void _bp_rec(uint64_t* masks, BP* st, int* assign, int* part_sep, int* best_assign, int i, int nparts) nogil:
    cdef int p, new_parts, excess, bound, v
    cdef bint is_sep
    if st.best_excess == 0:
        return
    if i == st.n:
        excess = st.n - nparts
        if st.best_excess >= 0 and excess >= st.best_excess:
            return
        if (_quotient_classify_c(masks, st.n, assign, nparts) >> st.cls) & 1:
            st.best_excess = excess
            for v in range(st.n):
                best_assign[v] = assign[v]
        return
    is_sep = (st.sep >> i) & 1
    for p in range(nparts + 1):
        bound = st.best_excess - 1 if st.best_excess >= 0 else st.max_excess
        new_parts = nparts + 1 if p == nparts else nparts
        if (i + 1) - new_parts > bound:
            continue
        if is_sep and p < nparts and part_sep[p]:
            continue
        assign[i] = p
        if is_sep:
            part_sep[p] += 1
        _bp_rec(masks, st, assign, part_sep, best_assign, i + 1, new_parts)
        if is_sep:
            part_sep[p] -= 1


def best_partition_to_class(masks, cls, max_excess, sep_mask=0):
    cdef uint64_t cm[64]
    cdef int assign[64]
    cdef int part_sep[64]
    cdef int best_assign[64]
    cdef BP st
    cdef int n = len(masks)
    cdef int i
    if n > 63:
        raise ValueError("native kernel handles at most 63 vertices")
    if n == 0:
        return (0, []) if ((EMPTY_BITS >> <int>cls) & 1) and max_excess >= 0 else None
    if max_excess < 0:
        return None
    for i in range(n):
        cm[i] = masks[i]
        part_sep[i] = 0
    st.best_excess = -1
    st.max_excess = max_excess
    st.cls = cls
    st.n = n
    st.sep = sep_mask
    _bp_rec(cm, &st, assign, part_sep, best_assign, 0, 0)
    if st.best_excess < 0:
        return None
    return (st.best_excess, [best_assign[i] for i in range(n)])


cdef struct IT:
    int ng
    int nh
    int nonempty


cdef bint _it_rec(uint64_t* g_masks, uint64_t* h_masks, IT* st, int* asg,
                  uint64_t* bag_mask, uint64_t* row_or, int v) nogil:
    cdef int b, c, u
    cdef uint64_t vm, hm, bm
    cdef bint ok, was_empty
    if v == st.ng:
        if st.nonempty != st.nh:
            return False
        for b in range(st.nh):
            hm = h_masks[b]
            while hm:
                c = CTZ64(hm)
                hm &= hm - 1
                if c > b and not (row_or[b] & bag_mask[c]):
                    return False
        return True
    if st.ng - v < st.nh - st.nonempty:
        return False
    vm = g_masks[v]
    for b in range(st.nh):
        ok = True
        for c in range(st.nh):
            if c != b and not ((h_masks[b] >> c) & 1) and (vm & bag_mask[c]):
                ok = False
                break
        if not ok:
            continue
        asg[v] = b
        was_empty = bag_mask[b] == 0
        bag_mask[b] |= (<uint64_t>1) << v
        row_or[b] |= vm
        if was_empty:
            st.nonempty += 1
        if _it_rec(g_masks, h_masks, st, asg, bag_mask, row_or, v + 1):
            return True
        bag_mask[b] &= ~((<uint64_t>1) << v)
        row_or[b] = 0
        bm = bag_mask[b]
        while bm:
            u = CTZ64(bm)
            bm &= bm - 1
            row_or[b] |= g_masks[u]
        if was_empty:
            st.nonempty -= 1
    return False


def identify_to_assignment(g_masks, h_masks):
    cdef uint64_t gm[64]
    cdef uint64_t hm[64]
    cdef uint64_t bag_mask[64]
    cdef uint64_t row_or[64]
    cdef int asg[64]
    cdef IT st
    cdef int i
    st.ng = len(g_masks)
    st.nh = len(h_masks)
    st.nonempty = 0
    if st.ng > 63 or st.nh > 63:
        raise ValueError("native kernel handles at most 63 vertices")
    if st.nh > st.ng:
        return None
    if st.nh == 0:
        return [] if st.ng == 0 else None
    for i in range(st.ng):
        gm[i] = g_masks[i]
    for i in range(st.nh):
        hm[i] = h_masks[i]
        bag_mask[i] = 0
        row_or[i] = 0
    if _it_rec(gm, hm, &st, asg, bag_mask, row_or, 0):
        return [asg[i] for i in range(st.ng)]
    return None
