"""Canonical forms, isomorphism, and automorphism machinery for small graphs.

Three routes, each an isomorphism invariant on its own class:
  trees      -> center-rooted subtree codes (linear time, any order),
  unicyclic  -> cycle of rooted hanging-tree codes, minimized over the
                dihedral symmetries of the cycle,
  general    -> maximum adjacency bitstring over cell-respecting
                relabelings (backtracking with degree-cell pruning).
A route tag plus (n, m) prefixes every encoding, so encodings from
different routes can never collide.
"""

from __future__ import annotations

from dataclasses import dataclass

from dalpha import _pykernels, kernels
from dalpha.errors import LimitError
from dalpha.graphs import Graph, is_tree, is_unicyclic

DEFAULT_CANON_LIMIT = 10


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Opaque canonical encoding; equal iff the graphs are isomorphic."""

    data: bytes


def canonical_form(g: Graph, limit: int | None = None) -> CanonicalForm:
    """Canonical form of g. `limit` overrides the default order cap.

    Trees and unicyclic graphs use the specialized linear routes; everything
    else uses backtracking canonicalization, which is capped at n = 12 no
    matter the limit.
    """
    lim = DEFAULT_CANON_LIMIT if limit is None else limit
    if g.n > lim:
        raise LimitError(f"canonical_form limited to n <= {lim}, got n={g.n}")
    cached = g.__dict__.get("_canon")
    if cached is not None:
        return cached
    if is_tree(g):
        payload = b"T" + kernels.tree_code(g.n, g.edges).to_bytes(8, "big")
    elif is_unicyclic(g):
        payload = b"U" + _unicyclic_code(g)
    else:
        if g.n > kernels.MAX_CANON_N:
            raise LimitError(f"general canonicalization limited to n <= {kernels.MAX_CANON_N}")
        mask = kernels.canonical_mask(g.n, list(g.bit_rows))
        width = (g.n * (g.n - 1) // 2 + 7) // 8
        payload = b"G" + mask.to_bytes(max(width, 1), "big")
    form = CanonicalForm(g.n.to_bytes(2, "big") + g.m.to_bytes(2, "big") + payload)
    g.__dict__["_canon"] = form
    return form


def cycle_vertices(g: Graph) -> list:
    """The unique cycle of a unicyclic graph, in traversal order."""
    deg = list(g.degrees)
    layer = [v for v in range(g.n) if deg[v] == 1]
    while layer:
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in g.neighbors(v):
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    core = [v for v in range(g.n) if deg[v] >= 2]
    start = min(core)
    in_core = set(core)
    order = [start]
    prev = -1
    while True:
        cur = order[-1]
        nbr = [w for w in g.neighbors(cur) if w in in_core and w != prev]
        nxt = nbr[0]
        if nxt == start:
            break
        order.append(nxt)
        prev = cur
    return order


def _unicyclic_code(g: Graph) -> bytes:
    cyc = cycle_vertices(g)
    ln = len(cyc)
    cyc_set = set(cyc)
    # forest adjacency with the cycle edges removed
    adj = [[] for _ in range(g.n)]
    for u, v in g.edges:
        both = u in cyc_set and v in cyc_set
        if both:
            iu, iv = cyc.index(u), cyc.index(v)
            if (abs(iu - iv) in (1, ln - 1)):
                continue
        adj[u].append(v)
        adj[v].append(u)
    codes = [_pykernels._ahu_rooted(c, -1, adj) for c in cyc]
    best = None
    for s in range(ln):
        for step in (1, -1):
            cand = tuple(codes[(s + step * k) % ln] for k in range(ln))
            if best is None or cand < best:
                best = cand
    out = ln.to_bytes(2, "big") + b"".join(c.to_bytes(8, "big") for c in best)
    return out


def are_isomorphic(g: Graph, h: Graph, limit: int | None = None) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    lim = limit if limit is not None else max(g.n, DEFAULT_CANON_LIMIT)
    return canonical_form(g, limit=lim) == canonical_form(h, limit=lim)


def find_isomorphism(g: Graph, h: Graph):
    """Backtracking isomorphism search, independent of the canonical forms.

    Returns a vertex mapping tuple (g-vertex i -> h-vertex map[i]) or None.
    """
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return None
    n = g.n
    gdeg, hdeg = g.degrees, h.degrees
    grows, hrows = g.bit_rows, h.bit_rows
    mapping = [-1] * n
    used = [False] * n

    def rec(i):
        if i == n:
            return True
        for t in range(n):
            if used[t] or hdeg[t] != gdeg[i]:
                continue
            ok = True
            for j in range(i):
                if ((grows[i] >> j) & 1) != ((hrows[t] >> mapping[j]) & 1):
                    ok = False
                    break
            if ok:
                mapping[i] = t
                used[t] = True
                if rec(i + 1):
                    return True
                used[t] = False
        mapping[i] = -1
        return False

    return tuple(mapping) if rec(0) else None


def automorphisms(g: Graph) -> list:
    """All automorphisms of g as vertex mapping tuples (identity included)."""
    n = g.n
    deg = g.degrees
    rows = g.bit_rows
    out = []
    mapping = [-1] * n
    used = [False] * n

    def rec(i):
        if i == n:
            out.append(tuple(mapping))
            return
        for t in range(n):
            if used[t] or deg[t] != deg[i]:
                continue
            ok = True
            for j in range(i):
                if ((rows[i] >> j) & 1) != ((rows[t] >> mapping[j]) & 1):
                    ok = False
                    break
            if ok:
                mapping[i] = t
                used[t] = True
                rec(i + 1)
                used[t] = False

    rec(0)
    return out


def exists_automorphism_mapping(g: Graph, u: int, v: int) -> bool:
    """True iff some automorphism of g maps u to v.

    Implemented by comparing canonical forms of the vertex-anchored graph:
    anchoring u (resp. v) to a leading singleton cell makes the two maximum
    bitstrings equal exactly when u and v lie in the same orbit.
    """
    if u == v:
        return True
    if g.degree(u) != g.degree(v):
        return False
    if g.n > kernels.MAX_CANON_N:
        raise LimitError(f"orbit test limited to n <= {kernels.MAX_CANON_N}")
    rows = list(g.bit_rows)
    return kernels.canonical_mask(g.n, rows, anchor=u) == kernels.canonical_mask(g.n, rows, anchor=v)
