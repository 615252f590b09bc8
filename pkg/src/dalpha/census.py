"""Exhaustive non-isomorphic enumeration of small graph families.

Trees come from the canonical level-sequence successor walk over rooted
trees followed by free-tree dedup; unicyclic graphs are trees plus one
edge, deduped; connected graphs come from the edge-mask scan in the
kernels. Labeled-generation oracles live at the bottom for cross-checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from dalpha import kernels
from dalpha._version import __version__
from dalpha.canon import are_isomorphic, canonical_form, cycle_vertices
from dalpha.errors import ConfigError, LimitError
from dalpha.graph6 import emit_graph6, parse_graph6
from dalpha.graphs import Graph, is_unicyclic

TREE_MAX_N = 12
UNICYCLIC_MAX_N = 11
CONNECTED_MAX_N = 8


@dataclass(frozen=True)
class Census:
    family: str
    n: int
    graphs: tuple
    filter: str | None = None

    @property
    def count(self) -> int:
        return len(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)


# canonical_form order cap for census work: the largest family cap
_CANON_LIMIT = TREE_MAX_N


def _canonical_sort(graphs) -> tuple:
    return tuple(sorted(graphs, key=lambda g: canonical_form(g, limit=_CANON_LIMIT).data))


def _rooted_level_sequences(n: int):
    """Every canonical level sequence of a rooted tree on n vertices, in
    lexicographically decreasing order, path first and star last."""
    if n == 1:
        yield [1]
        return
    L = list(range(1, n + 1))
    while True:
        yield L
        p = n - 1
        while p >= 0 and L[p] <= 2:
            p -= 1
        if p < 0:
            return
        q = p - 1
        while L[q] != L[p] - 1:
            q -= 1
        block = p - q
        nxt = L[:p]
        for i in range(p, n):
            nxt.append(nxt[i - block])
        L = nxt


def _edges_from_levels(L) -> list:
    # pre-order: the parent of vertex i is the latest vertex one level up
    last = {L[0]: 0}
    edges = []
    for i in range(1, len(L)):
        edges.append((last[L[i] - 1], i))
        last[L[i]] = i
    return edges


@lru_cache(maxsize=None)
def all_trees(n: int) -> Census:
    if not (1 <= n <= TREE_MAX_N):
        raise LimitError(f"tree census supports 1 <= n <= {TREE_MAX_N}, got {n}")
    seen = {}
    for L in _rooted_level_sequences(n):
        g = Graph(n, _edges_from_levels(L))
        seen.setdefault(canonical_form(g, limit=_CANON_LIMIT).data, g)
    return Census(family="trees", n=n, graphs=_canonical_sort(seen.values()))


@lru_cache(maxsize=None)
def all_unicyclic(n: int) -> Census:
    if not (3 <= n <= UNICYCLIC_MAX_N):
        raise LimitError(f"unicyclic census supports 3 <= n <= {UNICYCLIC_MAX_N}, got {n}")
    seen = {}
    for t in all_trees(n).graphs:
        for u in range(n):
            for v in range(u + 1, n):
                if not t.has_edge(u, v):
                    g = t.add_edges([(u, v)])
                    seen.setdefault(canonical_form(g, limit=_CANON_LIMIT).data, g)
    return Census(family="unicyclic", n=n, graphs=_canonical_sort(seen.values()))


@lru_cache(maxsize=None)
def all_connected(n: int) -> Census:
    if not (1 <= n <= CONNECTED_MAX_N):
        raise LimitError(f"connected census supports 1 <= n <= {CONNECTED_MAX_N}, got {n}")
    graphs = [Graph(n, kernels.mask_to_pairs(n, mask)) for mask in kernels.connected_mask_census(n)]
    return Census(family="connected", n=n, graphs=_canonical_sort(graphs))


def clique_number(g: Graph) -> int:
    """Exact maximum clique size by branch and bound on vertex bitsets."""
    if g.n > 12:
        raise LimitError("clique_number supports n <= 12")
    rows = g.bit_rows
    best = 1

    def expand(cand: int, size: int):
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if size + 1 > best:
                best = size + 1
            expand(cand & rows[v], size + 1)

    expand((1 << g.n) - 1, 0)
    return best


def _odd_cycle(g: Graph) -> bool:
    return is_unicyclic(g) and len(cycle_vertices(g)) % 2 == 1


def filter_census(c: Census, predicate: str) -> Census:
    """Sub-census under one of the predicate descriptors:

    max_degree=k   exact maximum degree
    clique=k       exact clique number
    odd_cycle      unicyclic with an odd cycle
    exclude_iso=S  drop members isomorphic to the graph6 string S
    """
    pred = predicate.strip()
    if pred == "odd_cycle":
        keep = _odd_cycle
    elif pred.startswith("max_degree="):
        k = int(pred.split("=", 1)[1])
        keep = lambda g: max(g.degrees) == k
    elif pred.startswith("clique="):
        k = int(pred.split("=", 1)[1])
        keep = lambda g: clique_number(g) == k
    elif pred.startswith("exclude_iso="):
        target = parse_graph6(pred.split("=", 1)[1])
        keep = lambda g: not are_isomorphic(g, target)
    else:
        raise ConfigError(f"unknown census predicate {predicate!r}")
    label = pred if c.filter is None else f"{c.filter} & {pred}"
    return Census(family="filtered", n=c.n, graphs=tuple(g for g in c.graphs if keep(g)), filter=label)


def save_census(c: Census, path) -> None:
    """graph6 lines at path, metadata sidecar at path + '.json'."""
    path = Path(path)
    path.write_text("".join(emit_graph6(g) + "\n" for g in c.graphs))
    sidecar = {
        "family": c.family,
        "n": c.n,
        "filter": c.filter,
        "count": c.count,
        "tool_version": __version__,
    }
    Path(str(path) + ".json").write_text(json.dumps(sidecar, indent=2, sort_keys=True) + "\n")


def load_census(path) -> Census:
    path = Path(path)
    graphs = tuple(parse_graph6(line) for line in path.read_text().splitlines() if line.strip())
    meta_path = Path(str(path) + ".json")
    family, n, filt = "connected", (graphs[0].n if graphs else 0), None
    if meta_path.exists():
        meta = json.loads(meta_path.read_text())
        family = meta.get("family", family)
        n = meta.get("n", n)
        filt = meta.get("filter")
        if meta.get("count") is not None and meta["count"] != len(graphs):
            raise ConfigError(f"sidecar says {meta['count']} graphs, file has {len(graphs)}")
    return Census(family=family, n=n, graphs=graphs, filter=filt)


def oracle_tree_census(n: int) -> tuple[int, tuple]:
    """Independent tree count and representatives from the labeled survey.

    Walks every labeled tree by sequence decoding and keeps the first
    representative of each isomorphism class; exponential in n, meant only
    to validate the census at small orders.
    """
    count, reps = kernels.labeled_tree_survey(n)
    return count, tuple(Graph(n, edges) for edges in reps)


def oracle_unicyclic_count(n: int) -> int:
    """Unicyclic count from labeled trees plus one edge; validation only."""
    _, reps = kernels.labeled_tree_survey(n)
    seen = set()
    for edges in reps:
        t = Graph(n, edges)
        for u in range(n):
            for v in range(u + 1, n):
                if not t.has_edge(u, v):
                    seen.add(canonical_form(t.add_edges([(u, v)]), limit=_CANON_LIMIT).data)
    return len(seen)
