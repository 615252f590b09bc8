"""Graph rewrites with a known effect on the distance alpha-spectral radius.

Each rewrite comes in two layers: a pure constructor that validates its
structural preconditions and returns the rewritten graph(s), and an
evaluator that solves both sides and packages the comparison as a
TransformOutcome. Monotonicity claims are checked with a strict margin,
never asserted from theory alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from dalpha.canon import exists_automorphism_mapping
from dalpha.errors import TransformError
from dalpha.graph6 import emit_graph6
from dalpha.graphs import Graph, is_connected
from dalpha.spectral import DEFAULT_TOL, Tolerances, mu_of, validate_alpha


@dataclass(frozen=True)
class TransformOutcome:
    """A rewrite with spectral radii on both sides.

    direction_claim is one of "increase", "decrease",
    "one_of_two_increases"; the last carries the alternate rewrite in
    after_b / mu_after_b and its margin is measured against the better of
    the two. claim_verified is None when the hypothesis backing the claim
    does not hold for this instance (the rewrite itself still applies).
    """

    name: str
    alpha: float
    before: Graph
    after: Graph
    mu_before: float
    mu_after: float
    direction_claim: str
    claim_verified: bool | None
    margin: float
    after_b: Graph | None = None
    mu_after_b: float | None = None

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "alpha": self.alpha,
            "before": emit_graph6(self.before),
            "after": emit_graph6(self.after),
            "mu_before": self.mu_before,
            "mu_after": self.mu_after,
            "direction_claim": self.direction_claim,
            "claim_verified": self.claim_verified,
            "margin": self.margin,
        }
        if self.after_b is not None:
            out["after_b"] = emit_graph6(self.after_b)
            out["mu_after_b"] = self.mu_after_b
        return out


def is_pendant_edge(g: Graph, u: int, v: int) -> bool:
    return g.has_edge(u, v) and (g.degree(u) == 1 or g.degree(v) == 1)


def is_quasi_pendant(g: Graph, v: int) -> bool:
    return any(g.degree(w) == 1 for w in g.neighbors(v))


def is_cut_edge(g: Graph, u: int, v: int) -> bool:
    """True when removing uv disconnects the graph."""
    if not g.has_edge(u, v):
        return False
    seen = [False] * g.n
    seen[u] = True
    stack = [u]
    while stack:
        w = stack.pop()
        for z in g.neighbors(w):
            if (w, z) in ((u, v), (v, u)):
                continue
            if not seen[z]:
                seen[z] = True
                stack.append(z)
    return not seen[v]


def pendant_paths_at(g: Graph, v: int) -> list:
    """Lengths of the pendant paths hanging at v, sorted.

    A pendant path needs its anchor to have degree at least 3, interior
    vertices of degree 2 and a degree-1 endpoint; anything else (a branch
    vertex, or a walk that closes back into a cycle) disqualifies.
    """
    if g.degree(v) < 3:
        return []
    out = []
    for w in g.neighbors(v):
        prev, cur, length = v, w, 1
        while g.degree(cur) == 2:
            a, b = g.neighbors(cur)
            prev, cur = cur, (b if a == prev else a)
            length += 1
        if g.degree(cur) == 1:
            out.append(length)
    return sorted(out)


def contract_cut_edge_to_pendant(g: Graph, u: int, v: int) -> Graph:
    """Merge u into v across a non-pendant cut edge, then hang u back on v
    as a pendant vertex. Order is preserved."""
    if not g.has_edge(u, v):
        raise TransformError(f"{u}-{v} is not an edge")
    if g.degree(u) == 1 or g.degree(v) == 1:
        raise TransformError(f"{u}-{v} is a pendant edge")
    if not is_cut_edge(g, u, v):
        raise TransformError(f"{u}-{v} is not a cut edge")
    edges = [e for e in g.edges if u not in e]
    edges += [(v, w) for w in g.neighbors(u) if w != v]
    edges.append((u, v))
    return Graph(g.n, edges)


def evaluate_cut_edge_contraction(g: Graph, u: int, v: int, alpha,
                                  tol: Tolerances = DEFAULT_TOL) -> TransformOutcome:
    """Claimed strict decrease when u or v is quasi-pendant; with neither,
    the rewrite still runs but the claim is left unasserted."""
    a = validate_alpha(alpha)
    after = contract_cut_edge_to_pendant(g, u, v)
    mu_b = mu_of(g, a)
    mu_a = mu_of(after, a)
    margin = mu_b - mu_a
    if is_quasi_pendant(g, u) or is_quasi_pendant(g, v):
        verified = margin > tol.strict(mu_b)
    else:
        verified = None
    return TransformOutcome(
        name="contract_cut_edge",
        alpha=a,
        before=g,
        after=after,
        mu_before=mu_b,
        mu_after=mu_a,
        direction_claim="decrease",
        claim_verified=verified,
        margin=margin,
    )


def _common_anchor(parts: list, what: str) -> int:
    inter = parts[0] & parts[1]
    if len(inter) != 1:
        raise TransformError(f"{what}: parts 0 and 1 share {sorted(inter)}, expected exactly one vertex")
    (u,) = inter
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if parts[i] & parts[j] != {u}:
                raise TransformError(f"{what}: parts {i} and {j} do not intersect exactly in {{{u}}}")
    return u


def _check_cover(g: Graph, parts: list, what: str):
    union = set().union(*parts)
    if union != set(range(g.n)):
        raise TransformError(f"{what}: parts cover {sorted(union)}, not all {g.n} vertices")
    for e in g.edges:
        if not any(e[0] in p and e[1] in p for p in parts):
            raise TransformError(f"{what}: edge {e} lies in no part")


def relocate_branches(g: Graph, partition, K, v_prime: int, v_dprime: int) -> tuple[Graph, Graph]:
    """Detach the branches indexed by K from their shared anchor and re-root
    them at v_prime (first result) or v_dprime (second result).

    partition lists the vertex sets of branches meeting pairwise in one
    anchor vertex; indices are 0-based and K must pick from 2 onward, so
    the first two branches (hosting v_prime and v_dprime) always stay put.
    """
    parts = [set(p) for p in partition]
    if len(parts) < 3:
        raise TransformError(f"need at least 3 branches, got {len(parts)}")
    for i, p in enumerate(parts):
        if len(p) < 2:
            raise TransformError(f"branch {i} is trivial (needs at least 2 vertices)")
    u = _common_anchor(parts, "branch relocation")
    _check_cover(g, parts, "branch relocation")
    K = sorted(set(K))
    if not K:
        raise TransformError("K is empty")
    if K[0] < 2 or K[-1] >= len(parts):
        raise TransformError(f"K={K} must index branches 2..{len(parts) - 1}")
    if v_prime not in parts[0] or v_prime == u:
        raise TransformError(f"v_prime={v_prime} must lie in branch 0 and differ from the anchor {u}")
    if v_dprime not in parts[1] or v_dprime == u:
        raise TransformError(f"v_dprime={v_dprime} must lie in branch 1 and differ from the anchor {u}")
    moved = sorted(w for i in K for w in parts[i] if w != u and g.has_edge(u, w))
    base = g.remove_edges((u, w) for w in moved)
    ga = base.add_edges((v_prime, w) for w in moved)
    gb = base.add_edges((v_dprime, w) for w in moved)
    for tag, h in (("first", ga), ("second", gb)):
        if not is_connected(h):
            raise TransformError(f"{tag} relocation output is disconnected")
    return ga, gb


def evaluate_branch_relocation(g: Graph, partition, K, v_prime: int, v_dprime: int, alpha,
                               tol: Tolerances = DEFAULT_TOL) -> TransformOutcome:
    a = validate_alpha(alpha)
    ga, gb = relocate_branches(g, partition, K, v_prime, v_dprime)
    mu_b = mu_of(g, a)
    mu_1 = mu_of(ga, a)
    mu_2 = mu_of(gb, a)
    margin = max(mu_1, mu_2) - mu_b
    return TransformOutcome(
        name="relocate_branches",
        alpha=a,
        before=g,
        after=ga,
        mu_before=mu_b,
        mu_after=mu_1,
        direction_claim="one_of_two_increases",
        claim_verified=margin > tol.strict(mu_b),
        margin=margin,
        after_b=gb,
        mu_after_b=mu_2,
    )


def transfer_neighbor_sets(g: Graph, partition, u_prime: int, v_prime: int) -> tuple[Graph, Graph]:
    """Two-anchor neighbor transfer across a bridge-like middle part.

    partition is (P1, P2, P3) with P1 and P3 sharing exactly one vertex u,
    P2 and P3 sharing exactly one vertex v, P1 and P2 disjoint, and uv an
    edge. The middle neighbors of u move to u_prime (a P1 neighbor of u)
    while v's middle neighbors move to u, giving the first result; the
    second result moves u's middle neighbors to v and v's to v_prime.
    """
    parts = [set(p) for p in partition]
    if len(parts) != 3:
        raise TransformError(f"need exactly 3 parts, got {len(parts)}")
    p1, p2, p3 = parts
    if p1 & p2:
        raise TransformError(f"parts 0 and 1 must be disjoint, share {sorted(p1 & p2)}")
    if len(p1 & p3) != 1:
        raise TransformError("parts 0 and 2 must share exactly one vertex")
    if len(p2 & p3) != 1:
        raise TransformError("parts 1 and 2 must share exactly one vertex")
    (u,) = p1 & p3
    (v,) = p2 & p3
    _check_cover(g, parts, "neighbor transfer")
    if len(p1) < 2:
        raise TransformError("part 0 minus its anchor is trivial")
    if len(p2) < 2:
        raise TransformError("part 1 minus its anchor is trivial")
    if len(p3) < 3:
        raise TransformError("part 2 minus both anchors is trivial")
    if not g.has_edge(u, v):
        raise TransformError(f"anchors {u} and {v} must be adjacent")
    if u_prime == u or u_prime not in p1 or not g.has_edge(u, u_prime):
        raise TransformError(f"u_prime={u_prime} must be a part-0 neighbor of {u}")
    if v_prime == v or v_prime not in p2 or not g.has_edge(v, v_prime):
        raise TransformError(f"v_prime={v_prime} must be a part-1 neighbor of {v}")
    mid_u = sorted(w for w in g.neighbors(u) if w in p3 and w != v)
    mid_v = sorted(w for w in g.neighbors(v) if w in p3 and w != u)
    base = g.remove_edges([(u, w) for w in mid_u] + [(v, w) for w in mid_v])
    ga = base.add_edges([(u_prime, w) for w in mid_u] + [(u, w) for w in mid_v])
    gb = base.add_edges([(v, w) for w in mid_u] + [(v_prime, w) for w in mid_v])
    for tag, h in (("first", ga), ("second", gb)):
        if not is_connected(h):
            raise TransformError(f"{tag} transfer output is disconnected")
    return ga, gb


def evaluate_neighbor_transfer(g: Graph, partition, u_prime: int, v_prime: int, alpha,
                               tol: Tolerances = DEFAULT_TOL) -> TransformOutcome:
    a = validate_alpha(alpha)
    ga, gb = transfer_neighbor_sets(g, partition, u_prime, v_prime)
    mu_b = mu_of(g, a)
    mu_1 = mu_of(ga, a)
    mu_2 = mu_of(gb, a)
    margin = max(mu_1, mu_2) - mu_b
    return TransformOutcome(
        name="transfer_neighbor_sets",
        alpha=a,
        before=g,
        after=ga,
        mu_before=mu_b,
        mu_after=mu_1,
        direction_claim="one_of_two_increases",
        claim_verified=margin > tol.strict(mu_b),
        margin=margin,
        after_b=gb,
        mu_after_b=mu_2,
    )


def attach_pendant_path(g: Graph, u: int, length: int) -> Graph:
    """New path of the given length hanging at u; length 0 is a no-op."""
    if not (0 <= u < g.n):
        raise TransformError(f"vertex {u} out of range")
    if length < 0:
        raise TransformError("length must be nonnegative")
    if length == 0:
        return g
    edges = list(g.edges)
    prev = u
    for i in range(length):
        edges.append((prev, g.n + i))
        prev = g.n + i
    return Graph(g.n + length, edges)


def _with_path_pair(h: Graph, u: int, p: int, q: int) -> Graph:
    return attach_pendant_path(attach_pendant_path(h, u, p), u, q)


def shift_pendant_path_pair(h: Graph, u: int, p: int, q: int, alpha,
                            tol: Tolerances = DEFAULT_TOL) -> TransformOutcome:
    """Compare two pendant paths (p, q) at one vertex against (p+1, q-1).

    For p >= q >= 1 on a nontrivial connected host the longer-lopsided
    split has strictly larger spectral radius.
    """
    if h.n < 2:
        raise TransformError("host graph must have at least 2 vertices")
    if not is_connected(h):
        raise TransformError("host graph must be connected")
    if not (p >= q >= 1):
        raise TransformError(f"need p >= q >= 1, got p={p}, q={q}")
    a = validate_alpha(alpha)
    before = _with_path_pair(h, u, p, q)
    after = _with_path_pair(h, u, p + 1, q - 1)
    mu_b = mu_of(before, a)
    mu_a = mu_of(after, a)
    margin = mu_a - mu_b
    return TransformOutcome(
        name="shift_pendant_path_pair",
        alpha=a,
        before=before,
        after=after,
        mu_before=mu_b,
        mu_after=mu_a,
        direction_claim="increase",
        claim_verified=margin > tol.strict(mu_b),
        margin=margin,
    )


def _with_two_site_paths(h: Graph, u: int, v: int, p: int, q: int) -> Graph:
    return attach_pendant_path(attach_pendant_path(h, u, p), v, q)


def shift_two_site_pendant_paths(h: Graph, u: int, v: int, p: int, q: int, alpha,
                                 tol: Tolerances = DEFAULT_TOL) -> TransformOutcome:
    """Compare pendant paths of lengths p at u and q at v against p+1 and q-1.

    Requires uv to be an edge of a host on at least 3 vertices carrying an
    automorphism that maps u to v; without one the claim has no backing and
    this raises.
    """
    if h.n < 3:
        raise TransformError("host graph must have at least 3 vertices")
    if not is_connected(h):
        raise TransformError("host graph must be connected")
    if not h.has_edge(u, v):
        raise TransformError(f"{u}-{v} must be an edge of the host")
    if not (p >= q >= 1):
        raise TransformError(f"need p >= q >= 1, got p={p}, q={q}")
    if not exists_automorphism_mapping(h, u, v):
        raise TransformError(f"no automorphism of the host maps {u} to {v}")
    a = validate_alpha(alpha)
    before = _with_two_site_paths(h, u, v, p, q)
    after = _with_two_site_paths(h, u, v, p + 1, q - 1)
    mu_b = mu_of(before, a)
    mu_a = mu_of(after, a)
    margin = mu_a - mu_b
    return TransformOutcome(
        name="shift_two_site_pendant_paths",
        alpha=a,
        before=before,
        after=after,
        mu_before=mu_b,
        mu_after=mu_a,
        direction_claim="increase",
        claim_verified=margin > tol.strict(mu_b),
        margin=margin,
    )
