"""Simple undirected graphs and their exact distance data.

Graphs are immutable, hashable, and labeled on 0..n-1. All metric
quantities (distance matrix, transmissions, eccentricities) are computed
by per-vertex BFS and kept integer-exact; nothing in this module touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from dalpha import kernels
from dalpha.errors import GraphInputError, NotConnectedError


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    def __init__(self, n: int, edges):
        if not isinstance(n, int) or n < 1:
            raise GraphInputError(f"vertex count must be a positive integer, got {n!r}")
        es = set()
        for e in edges:
            u, v = e
            if not (isinstance(u, (int, np.integer)) and isinstance(v, (int, np.integer))):
                raise GraphInputError(f"edge endpoints must be integers, got {e!r}")
            u, v = int(u), int(v)
            if u == v:
                raise GraphInputError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge {e!r} out of range for n={n}")
            es.add((min(u, v), max(u, v)))
        self.n = n
        self.edges = tuple(sorted(es))
        nbrs = [[] for _ in range(n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self._nbrs = tuple(tuple(sorted(a)) for a in nbrs)
        self._edge_set = frozenset(self.edges)
        self._hash = hash((n, self._edge_set))

    @classmethod
    def from_edge_list(cls, n: int, edges) -> "Graph":
        return cls(n, edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int):
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    @cached_property
    def degrees(self) -> tuple:
        return tuple(len(a) for a in self._nbrs)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_set

    @cached_property
    def bit_rows(self) -> tuple:
        """Adjacency rows as bitmasks: bit j of row i set iff ij is an edge."""
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    def add_edges(self, new_edges) -> "Graph":
        return Graph(self.n, list(self.edges) + list(new_edges))

    def remove_edges(self, gone) -> "Graph":
        kill = {(min(u, v), max(u, v)) for u, v in gone}
        missing = kill - self._edge_set
        if missing:
            raise GraphInputError(f"cannot remove non-edges {sorted(missing)}")
        return Graph(self.n, [e for e in self.edges if e not in kill])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self._edge_set == other._edge_set

    def __hash__(self):
        return self._hash

    def __repr__(self):
        shown = list(self.edges[:8])
        tail = "..." if self.m > 8 else ""
        return f"Graph(n={self.n}, m={self.m}, edges={shown}{tail})"


@dataclass(frozen=True)
class DistanceProfile:
    """Exact metric data of a connected graph.

    dist is an n x n int matrix; transmissions its row sums; sigma the sum
    of distances over unordered pairs; ecc the per-vertex eccentricities.
    """

    dist: np.ndarray
    transmissions: np.ndarray
    sigma: int
    ecc: np.ndarray
    diameter: int

    @property
    def t_min(self) -> int:
        return int(self.transmissions.min())

    @property
    def t_max(self) -> int:
        return int(self.transmissions.max())


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    seen = 1
    frontier = [0]
    nbrs = g._nbrs
    visited = bytearray(g.n)
    visited[0] = 1
    while frontier:
        nxt = []
        for u in frontier:
            for w in nbrs[u]:
                if not visited[w]:
                    visited[w] = 1
                    seen += 1
                    nxt.append(w)
        frontier = nxt
    return seen == g.n


def distance_profile(g: Graph) -> DistanceProfile:
    """All-pairs BFS distances; raises NotConnectedError on disconnected input."""
    cached = g.__dict__.get("_profile")
    if cached is not None:
        return cached
    dist = kernels.all_pairs_bfs(g.n, g._nbrs)
    if (dist < 0).any():
        raise NotConnectedError("distance profile requires a connected graph")
    trans = dist.sum(axis=1)
    ecc = dist.max(axis=1)
    prof = DistanceProfile(
        dist=dist,
        transmissions=trans,
        sigma=int(trans.sum()) // 2,
        ecc=ecc,
        diameter=int(ecc.max()),
    )
    g.__dict__["_profile"] = prof
    return prof


def is_transmission_regular(g: Graph) -> bool:
    t = distance_profile(g).transmissions
    return bool((t == t[0]).all())


def is_dvdr(g: Graph) -> bool:
    """True iff some vertex of full degree n-1 leaves a regular graph when removed.

    Convention: K_1 and K_2 qualify (the removal leaves a trivially regular
    graph). For any graph with a full-degree vertex the diameter is at most 2.
    """
    n = g.n
    degs = g.degrees
    for v in range(n):
        if degs[v] != n - 1:
            continue
        rest = [degs[u] - 1 for u in range(n) if u != v]
        if not rest or all(d == rest[0] for d in rest):
            return True
    return False


def transmission_dvdr_characterization(g: Graph) -> bool:
    """Equivalent test for non-complete connected graphs: exactly the vertices
    other than one full-degree vertex share a common transmission."""
    n = g.n
    prof = distance_profile(g)
    degs = g.degrees
    for v in range(n):
        if degs[v] != n - 1:
            continue
        others = [int(prof.transmissions[u]) for u in range(n) if u != v]
        if not others or all(t == others[0] for t in others):
            return True
    return False


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_unicyclic(g: Graph) -> bool:
    return g.m == g.n and is_connected(g)


# --- named families ---------------------------------------------------------


def complete_graph(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    _require(n >= 2, f"star needs n >= 2, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_plus_edge(n: int) -> Graph:
    """Star on n vertices plus one edge between two leaves (triangle with n-3 pendants)."""
    _require(n >= 3, f"star-plus-edge needs n >= 3, got {n}")
    return star_graph(n).add_edges([(1, 2)])


def double_star(n: int, a: int) -> Graph:
    """Two adjacent centers, one carrying a pendant leaves, the other n-a-2."""
    _require(n >= 4, f"double star needs n >= 4, got {n}")
    _require(1 <= a <= (n - 2) // 2, f"double star parameter a={a} outside 1..{(n - 2) // 2} for n={n}")
    edges = [(0, 1)]
    edges += [(0, i) for i in range(2, 2 + a)]
    edges += [(1, i) for i in range(2 + a, n)]
    return Graph(n, edges)


def broom(n: int, delta: int) -> Graph:
    """Path on n-delta+1 vertices with delta-1 extra pendant vertices at one end.

    Maximum degree is exactly delta; broom(n, 2) is the path and
    broom(n, n-1) the star.
    """
    _require(n >= 3, f"broom needs n >= 3, got {n}")
    _require(2 <= delta <= n - 1, f"broom degree {delta} outside 2..{n - 1}")
    p = n - delta + 1
    edges = [(i, i + 1) for i in range(p - 1)]
    edges += [(0, p - 1 + i) for i in range(1, delta)]
    return Graph(n, edges)


def kite(n: int, omega: int) -> Graph:
    """Complete graph on omega vertices with a pendant path on n-omega vertices.

    kite(n, 2) is the path, kite(n, n) the complete graph. Clique number is
    exactly omega for omega >= 3 (and 2 when omega = 2, n >= 2).
    """
    _require(n >= 2, f"kite needs n >= 2, got {n}")
    _require(2 <= omega <= n, f"kite clique size {omega} outside 2..{n}")
    edges = [(i, j) for i in range(omega) for j in range(i + 1, omega)]
    edges += [(i, i + 1) for i in range(omega - 1, n - 1)]
    return Graph(n, edges)


def _require(cond: bool, msg: str):
    if not cond:
        raise GraphInputError(msg)
