# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: all-pairs BFS, canonical adjacency masks, the labeled
tree survey, and the connected-graph census scan.

API-identical to dalpha._pykernels; outputs must match it bit for bit.
"""

import numpy as np

cdef extern from *:
    int __builtin_ctz(unsigned int x)
    int __builtin_popcount(unsigned int x)
    int __builtin_popcountll(unsigned long long x)

ctypedef unsigned int u32
ctypedef unsigned long long u64

BACKEND = "cython"

# uint64 bitstrings limit the general canonicalizer to C(n,2) <= 64 -> n <= 11;
# the kernels facade routes n = 12 to the pure-Python big-int implementation.
MAX_CANON_N = 11


def all_pairs_bfs(int n, nbrs):
    """BFS from every vertex. Entry -1 marks an unreachable pair."""
    dist_arr = np.full((n, n), -1, dtype=np.int64)
    cdef long long[:, :] dist = dist_arr
    # flatten adjacency
    cdef int m2 = 0
    cdef int v, w, i
    for v in range(n):
        m2 += len(nbrs[v])
    adj_arr = np.empty(m2, dtype=np.int32)
    start_arr = np.empty(n + 1, dtype=np.int32)
    cdef int[:] adj = adj_arr
    cdef int[:] start = start_arr
    cdef int pos = 0
    for v in range(n):
        start[v] = pos
        for w in nbrs[v]:
            adj[pos] = w
            pos += 1
    start[n] = pos
    queue_arr = np.empty(n, dtype=np.int32)
    cdef int[:] queue = queue_arr
    cdef int s, head, tail, u, d
    for s in range(n):
        dist[s, s] = 0
        head = 0
        tail = 1
        queue[0] = s
        while head < tail:
            u = queue[head]
            head += 1
            d = <int> dist[s, u] + 1
            for i in range(start[u], start[u + 1]):
                w = adj[i]
                if dist[s, w] < 0:
                    dist[s, w] = d
                    queue[tail] = w
                    tail += 1
    return dist_arr


# --- general canonical adjacency mask ---------------------------------------

cdef struct CanonState:
    int n
    int total_bits
    u32 rows[12]
    u64 keys[12]
    int cell_vert[12]     # vertices grouped by cell, cells in key-desc order
    int cell_id[12]       # cell index per position in cell_vert
    int placed[12]
    u32 placed_mask
    u64 best
    int has_best


cdef void _canon_rec(CanonState* st, int k, u64 val):
    cdef int n = st.n
    cdef int i, idx, v, first_cell
    cdef u64 nv, newbits
    cdef u32 rv
    cdef int nbits, shift
    if k == n:
        if (not st.has_best) or val > st.best:
            st.best = val
            st.has_best = 1
        return
    first_cell = -1
    nbits = k * (k + 1) // 2
    shift = st.total_bits - nbits
    for i in range(n):
        v = st.cell_vert[i]
        if (st.placed_mask >> v) & 1:
            continue
        if first_cell < 0:
            first_cell = st.cell_id[i]
        elif st.cell_id[i] != first_cell:
            break
        rv = st.rows[v]
        newbits = 0
        for idx in range(k):
            newbits = (newbits << 1) | ((rv >> st.placed[idx]) & 1)
        nv = (val << k) | newbits
        if st.has_best and nv < (st.best >> shift):
            continue
        st.placed[k] = v
        st.placed_mask |= (<u32> 1) << v
        _canon_rec(st, k + 1, nv)
        st.placed_mask ^= (<u32> 1) << v


cdef u64 _canonical_mask_c(int n, u32* rows, int anchor):
    cdef CanonState st
    cdef int v, u, i, j, tmp, nd_len
    cdef u64 key
    cdef u32 r
    cdef int degs[12]
    cdef int nd[12]
    if n == 1:
        return 0
    st.n = n
    st.total_bits = n * (n - 1) // 2
    st.placed_mask = 0
    st.has_best = 0
    st.best = 0
    for v in range(n):
        st.rows[v] = rows[v]
        degs[v] = __builtin_popcount(rows[v])
    for v in range(n):
        nd_len = 0
        r = rows[v]
        while r:
            u = __builtin_ctz(r)
            r &= r - 1
            nd[nd_len] = degs[u]
            nd_len += 1
        # sort descending (insertion)
        for i in range(1, nd_len):
            tmp = nd[i]
            j = i - 1
            while j >= 0 and nd[j] < tmp:
                nd[j + 1] = nd[j]
                j -= 1
            nd[j + 1] = tmp
        key = <u64> degs[v]
        for i in range(n - 1):
            key = (key << 4) | (<u64> (nd[i] if i < nd_len else 0))
        if v == anchor:
            key |= (<u64> 1) << 62
        st.keys[v] = key
    # order vertices by (key desc, vertex asc); assign cell ids by key runs
    cdef int order[12]
    for v in range(n):
        order[v] = v
    for i in range(1, n):
        tmp = order[i]
        j = i - 1
        while j >= 0 and (st.keys[order[j]] < st.keys[tmp] or
                          (st.keys[order[j]] == st.keys[tmp] and order[j] > tmp)):
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = tmp
    cdef int cid = 0
    for i in range(n):
        if i > 0 and st.keys[order[i]] != st.keys[order[i - 1]]:
            cid += 1
        st.cell_vert[i] = order[i]
        st.cell_id[i] = cid
    _canon_rec(&st, 0, 0)
    return st.best


def canonical_mask(int n, rows, int anchor=-1):
    """Maximum adjacency bitstring over cell-respecting relabelings.

    Same contract as the pure-Python version; n <= 11 here.
    """
    if n > MAX_CANON_N:
        raise ValueError(f"canonical_mask supports n <= {MAX_CANON_N}, got {n}")
    cdef u32 crows[12]
    cdef int v
    for v in range(n):
        crows[v] = rows[v]
    return int(_canonical_mask_c(n, crows, anchor))


def mask_to_pairs(int n, canon):
    """Decode a canonical mask back to an edge list."""
    edges = []
    cdef int total_bits = n * (n - 1) // 2
    cdef int pos = total_bits
    cdef u64 c = canon
    cdef int k, j
    for k in range(1, n):
        for j in range(k):
            pos -= 1
            if (c >> pos) & 1:
                edges.append((j, k))
    return edges


# --- labeled tree survey -----------------------------------------------------

cdef struct TreeCtx:
    int n
    int head[12]
    int nxt[24]
    int eu[12]
    int ev[12]


cdef u64 _ahu_c(TreeCtx* t, int v, int parent):
    cdef u64 kid[12]
    cdef int nk = 0
    cdef int e, w, i, j
    cdef u64 c, bits
    cdef int ln, cl
    e = t.head[v]
    while e >= 0:
        # slot 2i lives at eu[i] (far end ev[i]); slot 2i+1 at ev[i] (far end eu[i])
        w = t.eu[e >> 1] if (e & 1) else t.ev[e >> 1]
        if w != parent:
            c = _ahu_c(t, w, v)
            kid[nk] = c
            nk += 1
        e = t.nxt[e]
    # sort child codes descending
    for i in range(1, nk):
        c = kid[i]
        j = i - 1
        while j >= 0 and kid[j] < c:
            kid[j + 1] = kid[j]
            j -= 1
        kid[j + 1] = c
    bits = 1
    ln = 1
    for i in range(nk):
        cl = <int> (kid[i] >> 32)
        bits = (bits << cl) | (kid[i] & 0xFFFFFFFFu)
        ln += cl
    return ((<u64> (ln + 1)) << 32) | (bits << 1)


cdef u64 _tree_code_c(TreeCtx* t):
    """Center-rooted code of the tree held in t (edges eu/ev, n vertices)."""
    cdef int n = t.n
    cdef int deg[12]
    cdef int layer[12]
    cdef int nlayer, nnext, remaining, v, w, e, i
    cdef int nxt_layer[12]
    # rebuild adjacency heads: 2 directed slots per edge
    for v in range(n):
        t.head[v] = -1
        deg[v] = 0
    for i in range(n - 1):
        t.nxt[2 * i] = t.head[t.eu[i]]
        t.head[t.eu[i]] = 2 * i          # slot even: far endpoint ev[i]... see _ahu_c
        t.nxt[2 * i + 1] = t.head[t.ev[i]]
        t.head[t.ev[i]] = 2 * i + 1
        deg[t.eu[i]] += 1
        deg[t.ev[i]] += 1
    # NOTE: in _ahu_c, slot s at vertex x: edge i = s>>1; far endpoint is
    # ev[i] when s even (x == eu[i]) and eu[i] when s odd (x == ev[i]).
    if n == 1:
        return ((<u64> 2) << 32) | 2
    nlayer = 0
    for v in range(n):
        if deg[v] <= 1:
            layer[nlayer] = v
            nlayer += 1
    remaining = n
    while remaining > 2:
        nnext = 0
        for i in range(nlayer):
            v = layer[i]
            deg[v] = 0
            e = t.head[v]
            while e >= 0:
                w = t.eu[e >> 1] if (e & 1) else t.ev[e >> 1]
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt_layer[nnext] = w
                        nnext += 1
                e = t.nxt[e]
        remaining -= nlayer
        for i in range(nnext):
            layer[i] = nxt_layer[i]
        nlayer = nnext
    cdef u64 a, b, hi, lo, bits
    cdef int hl, ll
    if nlayer == 1:
        return _ahu_c(t, layer[0], -1)
    a = _ahu_c(t, layer[0], layer[1])
    b = _ahu_c(t, layer[1], layer[0])
    if a >= b:
        hi = a
        lo = b
    else:
        hi = b
        lo = a
    hl = <int> (hi >> 32)
    ll = <int> (lo >> 32)
    bits = ((<u64> 1) << (hl + ll + 1)) | ((hi & 0xFFFFFFFFu) << (ll + 1)) | ((lo & 0xFFFFFFFFu) << 1)
    return ((<u64> (hl + ll + 2)) << 32) | bits


def tree_code(int n, edges):
    """Center-rooted canonical code of a tree given as an edge list."""
    if n < 1 or n > 12:
        raise ValueError(f"tree_code supports 1 <= n <= 12, got {n}")
    cdef TreeCtx t
    cdef int i = 0
    cdef int u, v
    t.n = n
    for e in edges:
        if i >= n - 1:
            raise ValueError("tree_code needs exactly n-1 edges")
        u = e[0]
        v = e[1]
        if u < 0 or u >= n or v < 0 or v >= n:
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        t.eu[i] = u
        t.ev[i] = v
        i += 1
    if i != n - 1:
        raise ValueError("tree_code needs exactly n-1 edges")
    return _tree_code_c(&t)


cdef int _prufer_decode_c(int n, int* seq, TreeCtx* t):
    cdef int deg[12]
    cdef int v, i, ptr, leaf, cnt
    for v in range(n):
        deg[v] = 1
    for i in range(n - 2):
        deg[seq[i]] += 1
    ptr = 0
    leaf = -1
    for i in range(n - 2):
        if leaf < 0:
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
        v = seq[i]
        t.eu[i] = leaf
        t.ev[i] = v
        deg[leaf] -= 1
        deg[v] -= 1
        if deg[v] == 1 and v < ptr:
            leaf = v
        else:
            leaf = -1
    cnt = 0
    for v in range(n):
        if deg[v] == 1:
            if cnt == 0:
                t.eu[n - 2] = v
            else:
                t.ev[n - 2] = v
            cnt += 1
    return 0


def labeled_tree_survey(int n):
    """Iterate all n^(n-2) labeled trees; return (class count, representatives)."""
    if n == 1:
        return 1, [[]]
    if n == 2:
        return 1, [[(0, 1)]]
    if n > 12:
        raise ValueError(f"labeled tree survey supports n <= 12, got {n}")
    cdef TreeCtx t
    t.n = n
    cdef int seq[10]
    cdef int ln = n - 2
    cdef int i
    for i in range(ln):
        seq[i] = 0
    # open-addressing set of uint64 codes; 0 is the empty slot
    cdef int table_bits = 13
    cdef int table_size = 1 << table_bits
    table_arr = np.zeros(table_size, dtype=np.uint64)
    cdef u64[:] table = table_arr
    cdef u64 code, h
    cdef int count = 0
    reps = []
    cdef int done = 0
    cdef int slot
    while not done:
        _prufer_decode_c(n, seq, &t)
        code = _tree_code_c(&t)
        h = (code * <u64> 0x9E3779B97F4A7C15) >> (64 - table_bits)
        slot = <int> h
        while True:
            if table[slot] == 0:
                table[slot] = code
                count += 1
                reps.append([(t.eu[ii], t.ev[ii]) for ii in range(n - 1)])
                break
            if table[slot] == code:
                break
            slot = (slot + 1) & (table_size - 1)
        i = ln - 1
        while i >= 0 and seq[i] == n - 1:
            seq[i] = 0
            i -= 1
        if i < 0:
            done = 1
        else:
            seq[i] += 1
    return count, reps


# --- connected-graph census --------------------------------------------------


cdef int _mask_connected_c(int n, u32* rows):
    cdef u32 reach = 1
    cdef u32 nxt, r, full
    cdef int v
    full = ((<u32> 1) << n) - 1
    while True:
        nxt = reach
        r = reach
        while r:
            v = __builtin_ctz(r)
            r &= r - 1
            nxt |= rows[v]
        if nxt == reach:
            return reach == full
        reach = nxt


def connected_mask_census(int n):
    """Canonical masks of all connected graphs on n vertices, sorted.

    Gray-code scan of all edge masks with incremental degree updates; only
    masks with a non-increasing degree vector reach connectivity testing and
    canonicalization (every class has such a labeling).
    """
    if n == 1:
        return [0]
    if n > 8:
        raise ValueError(f"census scan supports n <= 8, got {n}")
    cdef int nb = n * (n - 1) // 2
    cdef int ai[28]
    cdef int aj[28]
    cdef int k = 0
    cdef int i, j, v
    for i in range(n):
        for j in range(i + 1, n):
            ai[k] = i
            aj[k] = j
            k += 1
    cdef u32 rows[12]
    cdef int deg[12]
    for v in range(n):
        rows[v] = 0
        deg[v] = 0
    # dedup table for canonical masks; sentinel is 0xFFFFFFFF (mask 0 is K_1 only)
    cdef int table_bits = 18
    cdef int table_size = 1 << table_bits
    table_arr = np.full(table_size, 0xFFFFFFFF, dtype=np.uint32)
    cdef u32[:] table = table_arr
    cdef u64 total = (<u64> 1) << nb
    cdef u64 tstep
    cdef int b, ok, slot
    cdef u32 cm
    cdef u64 h
    cdef int found = 0
    for tstep in range(1, total):
        b = __builtin_ctz(<u32> tstep)  # nb <= 28, so tstep always fits u32
        i = ai[b]
        j = aj[b]
        rows[i] ^= (<u32> 1) << j
        rows[j] ^= (<u32> 1) << i
        if (rows[i] >> j) & 1:
            deg[i] += 1
            deg[j] += 1
        else:
            deg[i] -= 1
            deg[j] -= 1
        ok = 1
        for v in range(n - 1):
            if deg[v] < deg[v + 1]:
                ok = 0
                break
        if not ok:
            continue
        if not _mask_connected_c(n, rows):
            continue
        cm = <u32> _canonical_mask_c(n, rows, -1)
        h = ((<u64> cm) * <u64> 0x9E3779B97F4A7C15) >> (64 - table_bits)
        slot = <int> h
        while True:
            if table[slot] == 0xFFFFFFFFu:
                table[slot] = cm
                found += 1
                break
            if table[slot] == cm:
                break
            slot = (slot + 1) & (table_size - 1)
    out = sorted(int(table[ii]) for ii in range(table_size) if table[ii] != 0xFFFFFFFFu)
    return out
