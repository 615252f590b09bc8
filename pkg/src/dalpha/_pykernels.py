"""Pure-Python kernel implementations.

This module mirrors the API of the compiled extension `dalpha._ckernels`
exactly; `dalpha.kernels` picks whichever is available. Everything here is
plain Python/numpy and correct at any supported size, just slower on the
two big enumeration loops (labeled-tree survey, connected-graph census).
"""

from __future__ import annotations

from collections import deque

import numpy as np

BACKEND = "python"

# Hard cap for the general canonicalizer: colors are packed 4 bits per entry
# into machine words, which is exact for degrees <= 15, i.e. n <= 12 here.
MAX_CANON_N = 12


def all_pairs_bfs(n: int, nbrs) -> np.ndarray:
    """BFS from every vertex. Entry -1 marks an unreachable pair."""
    dist = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            du = row[u] + 1
            for w in nbrs[u]:
                if row[w] < 0:
                    row[w] = du
                    q.append(w)
    return dist


# --- general canonical adjacency mask ---------------------------------------


def _color_keys(n: int, rows, degs):
    # key(v) = (deg(v), neighbor degrees sorted desc), packed 4 bits a field
    keys = []
    for v in range(n):
        nd = sorted((degs[u] for u in _bits(rows[v])), reverse=True)
        key = degs[v]
        for i in range(n - 1):
            key = (key << 4) | (nd[i] if i < len(nd) else 0)
        keys.append(key)
    return keys


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def canonical_mask(n: int, rows, anchor: int = -1) -> int:
    """Maximum adjacency bitstring over relabelings respecting invariant cells.

    rows[v] is the neighbor bitmask of v. Vertices are grouped into cells by
    (degree, sorted neighbor degrees); placements enumerate the first open
    cell only, which is sound because the grouping is an isomorphism
    invariant. The returned integer packs the upper triangle in placement
    order: the k-th placed vertex contributes its adjacency bits to placed
    vertices 0..k-1, most significant first.

    anchor >= 0 forces that vertex into a leading singleton cell, giving the
    canonical form of the vertex-rooted graph (used for symmetry tests).
    """
    if n > MAX_CANON_N:
        raise ValueError(f"canonical_mask supports n <= {MAX_CANON_N}, got {n}")
    if n == 1:
        return 0
    degs = [r.bit_count() for r in rows]
    keys = _color_keys(n, rows, degs)
    if anchor >= 0:
        keys = [k | (1 << 62) if v == anchor else k for v, k in enumerate(keys)]
    order = {}
    for v in range(n):
        order.setdefault(keys[v], []).append(v)
    cells = [order[k] for k in sorted(order, reverse=True)]
    total_bits = n * (n - 1) // 2

    best = -1
    placed = [0] * n
    placed_mask = 0

    def rec(k, val):
        nonlocal best, placed_mask
        if k == n:
            if val > best:
                best = val
            return
        for cell in cells:
            cand = [v for v in cell if not (placed_mask >> v) & 1]
            if cand:
                break
        nbits = k * (k + 1) // 2  # bits after appending the k-th row
        shift = total_bits - nbits
        for v in cand:
            rv = rows[v]
            newbits = 0
            for idx in range(k):
                newbits = (newbits << 1) | ((rv >> placed[idx]) & 1)
            nv = (val << k) | newbits
            if best >= 0 and nv < (best >> shift):
                continue
            placed[k] = v
            placed_mask |= 1 << v
            rec(k + 1, nv)
            placed_mask ^= 1 << v

    rec(0, 0)
    return best


def mask_to_pairs(n: int, canon: int):
    """Decode a canonical mask back to an edge list (inverse of the packing)."""
    edges = []
    total_bits = n * (n - 1) // 2
    pos = total_bits
    for k in range(1, n):
        for j in range(k):
            pos -= 1
            if (canon >> pos) & 1:
                edges.append((j, k))
    return edges


# --- labeled tree survey (Prufer iteration + rooted-at-center codes) --------


def _prufer_decode(n: int, seq):
    """Edge list of the labeled tree with the given Prufer sequence."""
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    ptr = 0
    leaf = -1
    for i in range(n - 2):
        if leaf < 0:
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
        v = seq[i]
        edges.append((leaf, v))
        deg[leaf] -= 1
        deg[v] -= 1
        if deg[v] == 1 and v < ptr:
            leaf = v
        else:
            leaf = -1
    last = [v for v in range(n) if deg[v] == 1]
    edges.append((last[0], last[1]))
    return edges


def _tree_centers(n: int, adj):
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in adj[v]:
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        remaining -= len(layer)
        layer = nxt
    return layer


def _ahu_rooted(v, parent, adj):
    """Packed rooted-subtree code: (bitlen << 32) | bits, bits = 1 <codes> 0."""
    kid = []
    for w in adj[v]:
        if w != parent:
            kid.append(_ahu_rooted(w, v, adj))
    kid.sort(reverse=True)
    bits = 1
    ln = 1
    for c in kid:
        cl = c >> 32
        bits = (bits << cl) | (c & 0xFFFFFFFF)
        ln += cl
    return ((ln + 1) << 32) | (bits << 1)


def tree_code(n: int, edges) -> int:
    """Isomorphism-invariant code of a free tree given as an edge list."""
    if n == 1:
        return (2 << 32) | 0b10
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    centers = _tree_centers(n, adj)
    if len(centers) == 1:
        return _ahu_rooted(centers[0], -1, adj)
    a = _ahu_rooted(centers[0], centers[1], adj)
    b = _ahu_rooted(centers[1], centers[0], adj)
    hi, lo = (a, b) if a >= b else (b, a)
    hl, ll = hi >> 32, lo >> 32
    bits = (1 << (hl + ll + 1)) | ((hi & 0xFFFFFFFF) << (ll + 1)) | ((lo & 0xFFFFFFFF) << 1)
    return ((hl + ll + 2) << 32) | bits


def labeled_tree_survey(n: int):
    """Iterate all n^(n-2) labeled trees; return (class count, representatives).

    Representatives are the first-seen edge list per isomorphism class, in
    iteration order. Exact but exponential: fine up to n=8 here, minutes at
    n=9-10; the compiled backend exists for those sizes.
    """
    if n == 1:
        return 1, [[]]
    if n == 2:
        return 1, [[(0, 1)]]
    ln = n - 2
    seq = [0] * ln
    seen = set()
    reps = []
    decode = _prufer_decode
    code_of = tree_code
    while True:
        edges = decode(n, seq)
        c = code_of(n, edges)
        if c not in seen:
            seen.add(c)
            reps.append(edges)
        i = ln - 1
        while i >= 0 and seq[i] == n - 1:
            seq[i] = 0
            i -= 1
        if i < 0:
            break
        seq[i] += 1
    return len(reps), reps


# --- connected-graph census over edge-set bitmasks --------------------------


def _pair_table(n: int):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _rows_from_mask(n: int, mask: int, pairs):
    rows = [0] * n
    k = 0
    m = mask
    while m:
        if m & 1:
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        m >>= 1
        k += 1
    return rows


def _mask_connected(n: int, rows) -> bool:
    reach = 1
    while True:
        nxt = reach
        r = reach
        while r:
            low = r & -r
            nxt |= rows[low.bit_length() - 1]
            r ^= low
        if nxt == reach:
            return reach == (1 << n) - 1
        reach = nxt


def connected_mask_census(n: int):
    """Canonical masks of all connected graphs on n vertices, sorted.

    Scans every edge-set bitmask, keeps those whose degree vector is already
    non-increasing (every isomorphism class has such a labeling, so nothing
    is lost), then dedups survivors by canonical mask.
    """
    if n == 1:
        return [0]
    pairs = _pair_table(n)
    nb = len(pairs)
    canon = set()
    chunk = 1 << 20
    for base in range(0, 1 << nb, chunk):
        cnt = min(chunk, (1 << nb) - base)
        masks = np.arange(base, base + cnt, dtype=np.int64)
        deg = np.zeros((cnt, n), dtype=np.int8)
        for k, (i, j) in enumerate(pairs):
            b = ((masks >> k) & 1).astype(np.int8)
            deg[:, i] += b
            deg[:, j] += b
        ok = np.all(deg[:, :-1] >= deg[:, 1:], axis=1)
        for mask in masks[ok]:
            mask = int(mask)
            rows = _rows_from_mask(n, mask, pairs)
            if _mask_connected(n, rows):
                canon.add(canonical_mask(n, rows))
    return sorted(canon)
