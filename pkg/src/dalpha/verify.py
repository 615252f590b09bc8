"""Executable checks of the extremal results over exhaustive censuses.

Each check sweeps a census across an alpha grid, finds the extremal
member, and verifies it is the predicted graph, unique within the tie
band, with a runner-up margin beyond the strict tolerance. run_suite
bundles every check plus the bounds and transform property sweeps into a
deterministic, serializable report list.
"""

from __future__ import annotations

import json
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from dalpha.bounds import all_bound_reports, check_nonmaximal_eigenvalues
from dalpha.canon import are_isomorphic
from dalpha.census import all_connected, all_trees, all_unicyclic, filter_census
from dalpha.errors import ConfigError
from dalpha.graph6 import emit_graph6
from dalpha.graphs import (
    Graph,
    broom,
    cycle_graph,
    complete_graph,
    distance_profile,
    kite,
    path_graph,
    star_graph,
    star_plus_edge,
)
from dalpha.spectral import DEFAULT_TOL, Tolerances, full_spectrum, mu_of
from dalpha.transforms import (
    evaluate_branch_relocation,
    evaluate_cut_edge_contraction,
    evaluate_neighbor_transfer,
    is_cut_edge,
    is_quasi_pendant,
    shift_pendant_path_pair,
    shift_two_site_pendant_paths,
)

DEFAULT_ALPHA_GRID = (0.0, 0.1, 0.2, 0.25, 0.3, 0.4, 0.5, 0.6, 0.7, 0.75, 0.8, 0.9)


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    n_range: tuple
    alpha_grid: tuple
    census_size: int
    verdict: str
    witnesses: tuple
    margin: float | None
    failures: tuple
    exploratory: bool = False

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "n_range": list(self.n_range),
            "alpha_grid": [_f15(a) for a in self.alpha_grid],
            "census_size": self.census_size,
            "verdict": self.verdict,
            "witnesses": [_clean(w) for w in self.witnesses],
            "margin": _f15(self.margin),
            "failures": [_clean(f) for f in self.failures],
            "exploratory": self.exploratory,
        }


def _f15(x):
    if x is None or isinstance(x, (str, int, bool)):
        return x
    if not math.isfinite(x):
        return None
    return float(f"{x:.15g}")


def _clean(d: dict) -> dict:
    return {k: _f15(v) for k, v in sorted(d.items())}


def _pmap(fn, items, workers: int):
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items))


def _min_margin(cur, new):
    if new is None:
        return cur
    return new if cur is None else min(cur, new)


def _extremal_sweep(theorem_id: str, n: int, graphs, target: Graph, alphas, minimize: bool,
                    tol: Tolerances = DEFAULT_TOL, workers: int = 1,
                    exploratory: bool = False) -> TheoremReport:
    """Generic unique-extremum check: over graphs, for each alpha, the
    extremal member must be isomorphic to target, alone in its tie band,
    and separated from the rest by more than the strict tolerance."""
    graphs = list(graphs)
    witnesses, failures = [], []
    overall = None
    sign = 1.0 if minimize else -1.0
    for a in alphas:
        mus = _pmap(lambda g: mu_of(g, a), graphs, workers)
        keyed = [sign * m for m in mus]
        best_i = min(range(len(graphs)), key=lambda i: keyed[i])
        best_mu = mus[best_i]
        band = tol.tie(best_mu)
        attain = [i for i in range(len(graphs)) if keyed[i] <= keyed[best_i] + band]
        rest = [keyed[i] for i in range(len(graphs)) if i not in attain]
        margin = (min(rest) - keyed[best_i]) if rest else None
        overall = _min_margin(overall, margin)
        best = graphs[best_i]
        if len(attain) != 1:
            failures.append({"alpha": a, "n": n, "reason": f"{len(attain)} graphs tie for the extremum",
                             "graph6": emit_graph6(best)})
        elif not are_isomorphic(best, target):
            failures.append({"alpha": a, "n": n, "reason": "extremal graph is not the predicted one",
                             "graph6": emit_graph6(best), "expected": emit_graph6(target)})
        if margin is not None and margin <= tol.strict(best_mu):
            failures.append({"alpha": a, "n": n, "reason": "runner-up margin below strict tolerance",
                             "graph6": emit_graph6(best), "margin": margin})
        witnesses.append({"alpha": a, "n": n, "graph6": emit_graph6(best), "mu": best_mu, "margin": margin})
    return TheoremReport(
        theorem_id=theorem_id,
        n_range=(n,),
        alpha_grid=tuple(alphas),
        census_size=len(graphs),
        verdict="pass" if not failures else "fail",
        witnesses=tuple(witnesses),
        margin=overall,
        failures=tuple(failures),
        exploratory=exploratory,
    )


def check_tree_min(n: int, alphas=DEFAULT_ALPHA_GRID, tol: Tolerances = DEFAULT_TOL,
                   workers: int = 1) -> TheoremReport:
    """The star uniquely minimizes the spectral radius among trees (n >= 4)."""
    if n < 4:
        raise ConfigError(f"tree minimum check needs n >= 4, got {n}")
    return _extremal_sweep("tree_min_star", n, all_trees(n).graphs, star_graph(n),
                           alphas, minimize=True, tol=tol, workers=workers)


def _double_star_split(g: Graph) -> int | None:
    """For a diameter-3 tree, the smaller center's leaf count; else None."""
    prof = distance_profile(g)
    if g.n < 4 or g.m != g.n - 1 or prof.diameter != 3:
        return None
    centers = [v for v in range(g.n) if g.degree(v) >= 2]
    if len(centers) != 2:
        return None
    return min(g.degree(v) for v in centers) - 1


def check_tree_second_min(n: int, alphas=DEFAULT_ALPHA_GRID, tol: Tolerances = DEFAULT_TOL,
                          workers: int = 1) -> TheoremReport:
    """Among trees other than the star, the minimizer is a double star
    (two adjacent centers sharing all leaves); which split wins is
    recorded per alpha, not asserted."""
    if n < 5:
        raise ConfigError(f"second-minimum check needs n >= 5, got {n}")
    star = star_graph(n)
    rest = [g for g in all_trees(n).graphs if not are_isomorphic(g, star)]
    witnesses, failures = [], []
    overall = None
    for a in alphas:
        mus = _pmap(lambda g: mu_of(g, a), rest, workers)
        best_i = min(range(len(rest)), key=lambda i: mus[i])
        best_mu = mus[best_i]
        best = rest[best_i]
        split = _double_star_split(best)
        if split is None:
            failures.append({"alpha": a, "n": n, "reason": "minimizer is not a double star",
                             "graph6": emit_graph6(best)})
        others = [mus[i] for i in range(len(rest)) if _double_star_split(rest[i]) is None]
        margin = (min(others) - best_mu) if others else None
        if margin is not None and margin <= tol.strict(best_mu):
            failures.append({"alpha": a, "n": n, "reason": "a non-double-star tree comes too close",
                             "margin": margin})
        overall = _min_margin(overall, margin)
        witnesses.append({"alpha": a, "n": n, "graph6": emit_graph6(best), "mu": best_mu,
                          "split": split, "margin": margin})
    return TheoremReport(
        theorem_id="tree_second_min_double_star",
        n_range=(n,),
        alpha_grid=tuple(alphas),
        census_size=len(rest),
        verdict="pass" if not failures else "fail",
        witnesses=tuple(witnesses),
        margin=overall,
        failures=tuple(failures),
    )


def check_unicyclic_min(n: int, alphas=DEFAULT_ALPHA_GRID, tol: Tolerances = DEFAULT_TOL,
                        workers: int = 1) -> TheoremReport:
    """The star plus an edge uniquely minimizes among unicyclic graphs for
    n >= 8; smaller n runs the same sweep flagged exploratory (the claim
    is actually false at small orders, where the cycle wins)."""
    if n < 3:
        raise ConfigError(f"unicyclic minimum check needs n >= 3, got {n}")
    return _extremal_sweep("unicyclic_min_star_plus_edge", n, all_unicyclic(n).graphs,
                           star_plus_edge(n), alphas, minimize=True, tol=tol,
                           workers=workers, exploratory=n < 8)


def check_max_degree_max(n: int, delta: int, alphas=DEFAULT_ALPHA_GRID,
                         tol: Tolerances = DEFAULT_TOL, workers: int = 1,
                         family: str = "trees") -> TheoremReport:
    """The broom uniquely maximizes at fixed maximum degree (n >= 5)."""
    if n < 5:
        raise ConfigError(f"max-degree check needs n >= 5, got {n}")
    if not (2 <= delta <= n - 1):
        raise ConfigError(f"max-degree check needs 2 <= delta <= n-1, got {delta}")
    base = all_trees(n) if family == "trees" else all_connected(n)
    census = filter_census(base, f"max_degree={delta}")
    return _extremal_sweep(f"max_degree_broom_{family}", n, census.graphs, broom(n, delta),
                           alphas, minimize=False, tol=tol, workers=workers)


def check_global_max(n: int, alphas=DEFAULT_ALPHA_GRID, tol: Tolerances = DEFAULT_TOL,
                     workers: int = 1, family: str = "connected") -> TheoremReport:
    """The path maximizes, the 3-broom is the unique runner-up, and the
    chain broom < path is strict; for the connected family the cycle is
    also compared directly against the broom."""
    if n < 4:
        raise ConfigError(f"global maximum check needs n >= 4, got {n}")
    base = all_trees(n) if family == "trees" else all_connected(n)
    graphs = list(base.graphs)
    path = path_graph(n)
    b3 = broom(n, 3)
    witnesses, failures = [], []
    overall = None
    for a in alphas:
        mus = _pmap(lambda g: mu_of(g, a), graphs, workers)
        order = sorted(range(len(graphs)), key=lambda i: -mus[i])
        top, second = order[0], order[1]
        band = tol.tie(mus[top])
        attain = [i for i in order if mus[i] >= mus[top] - band]
        if len(attain) != 1 or not are_isomorphic(graphs[top], path):
            failures.append({"alpha": a, "n": n, "reason": "maximizer is not the path alone",
                             "graph6": emit_graph6(graphs[top])})
        band2 = tol.tie(mus[second])
        attain2 = [i for i in order[1:] if mus[i] >= mus[second] - band2]
        if len(attain2) != 1 or not are_isomorphic(graphs[second], b3):
            failures.append({"alpha": a, "n": n, "reason": "second maximizer is not the 3-broom alone",
                             "graph6": emit_graph6(graphs[second])})
        chain = mus[top] - mus[second]
        third_gap = (mus[second] - mus[order[2]]) if len(order) > 2 else None
        for tag, gap in (("path above broom", chain), ("broom above third", third_gap)):
            if gap is not None and gap <= tol.strict(mus[top]):
                failures.append({"alpha": a, "n": n, "reason": f"{tag}: margin below strict tolerance",
                                 "margin": gap})
        overall = _min_margin(_min_margin(overall, chain), third_gap)
        wit = {"alpha": a, "n": n, "graph6": emit_graph6(graphs[top]), "mu": mus[top],
               "second_graph6": emit_graph6(graphs[second]), "second_mu": mus[second],
               "margin": chain}
        if family == "connected":
            cyc_gap = mu_of(b3, a) - mu_of(cycle_graph(n), a)
            if cyc_gap <= tol.strict(mus[second]):
                failures.append({"alpha": a, "n": n,
                                 "reason": "cycle not strictly below the 3-broom", "margin": cyc_gap})
            overall = _min_margin(overall, cyc_gap)
            wit["cycle_gap"] = cyc_gap
        witnesses.append(wit)
    return TheoremReport(
        theorem_id=f"global_max_path_{family}",
        n_range=(n,),
        alpha_grid=tuple(alphas),
        census_size=len(graphs),
        verdict="pass" if not failures else "fail",
        witnesses=tuple(witnesses),
        margin=overall,
        failures=tuple(failures),
    )


def check_clique_max(n: int, omega: int, alphas=DEFAULT_ALPHA_GRID,
                     tol: Tolerances = DEFAULT_TOL, workers: int = 1) -> TheoremReport:
    """The kite uniquely maximizes at fixed clique number."""
    if not (2 <= omega <= n):
        raise ConfigError(f"clique check needs 2 <= omega <= n, got omega={omega}, n={n}")
    census = filter_census(all_connected(n), f"clique={omega}")
    return _extremal_sweep(f"clique_max_kite_w{omega}", n, census.graphs, kite(n, omega),
                           alphas, minimize=False, tol=tol, workers=workers)


def check_odd_unicyclic_max(n: int, alphas=DEFAULT_ALPHA_GRID, tol: Tolerances = DEFAULT_TOL,
                            workers: int = 1) -> TheoremReport:
    """The 3-kite uniquely maximizes among odd-cycle unicyclic graphs."""
    if n < 3:
        raise ConfigError(f"odd-cycle check needs n >= 3, got {n}")
    census = filter_census(all_unicyclic(n), "odd_cycle")
    return _extremal_sweep("odd_unicyclic_max_kite", n, census.graphs, kite(n, 3),
                           alphas, minimize=False, tol=tol, workers=workers)


def bounds_census_sweep(alphas=DEFAULT_ALPHA_GRID, tol: Tolerances = DEFAULT_TOL,
                        tree_ns=(8, 9, 10), unicyclic_ns=(8, 9), connected_ns=(4, 5, 6, 7),
                        workers: int = 1) -> TheoremReport:
    """Every bound, equality characterization (both directions), eigenvalue
    interval, spectral gap and strict transmission-gap inequality, over
    the whole census pool. Zero tolerance for violations."""
    pool: list[tuple[Graph, int]] = []
    for n in connected_ns:
        pool += [(g, n) for g in all_connected(n).graphs]
    for n in tree_ns:
        pool += [(g, n) for g in all_trees(n).graphs]
    for n in unicyclic_ns:
        pool += [(g, n) for g in all_unicyclic(n).graphs]

    def examine(item):
        g, n = item
        local_fail = []
        local_margin = None
        for a in alphas:
            for rep in all_bound_reports(g, a, tol).values():
                if not rep.holds:
                    local_fail.append({"alpha": a, "n": n, "graph6": emit_graph6(g),
                                       "reason": f"bound {rep.name} violated", "margin": rep.gap})
                if rep.equality_predicted is not None and rep.equality_observed is not None \
                        and rep.equality_predicted != rep.equality_observed:
                    local_fail.append({"alpha": a, "n": n, "graph6": emit_graph6(g),
                                       "reason": f"equality characterization mismatch for {rep.name}: "
                                                 f"predicted {rep.equality_predicted}, observed {rep.equality_observed}"})
                if rep.equality_predicted is False or rep.strict:
                    local_margin = _min_margin(local_margin, rep.gap)
            spec = full_spectrum(g, a, tol)
            if g.n >= 2:
                if spec.spectral_gap is not None and spec.spectral_gap <= 0:
                    local_fail.append({"alpha": a, "n": n, "graph6": emit_graph6(g),
                                       "reason": "largest eigenvalue not simple"})
                interval = check_nonmaximal_eigenvalues(g, a, spec.eigenvalues, tol)
                if not interval.all_in_interval or not interval.all_abs_capped:
                    local_fail.append({"alpha": a, "n": n, "graph6": emit_graph6(g),
                                       "reason": "nonmaximal eigenvalue escapes its interval"})
        return local_fail, local_margin

    results = _pmap(examine, pool, workers)
    failures = [f for fails, _ in results for f in fails]
    overall = None
    for _, m in results:
        overall = _min_margin(overall, m)
    return TheoremReport(
        theorem_id="bounds_census_sweep",
        n_range=tuple(sorted(set(list(tree_ns) + list(unicyclic_ns) + list(connected_ns)))),
        alpha_grid=tuple(alphas),
        census_size=len(pool),
        verdict="pass" if not failures else "fail",
        witnesses=(),
        margin=overall,
        failures=tuple(failures[:50]),
    )


def _prufer_edges(n: int, seq) -> list:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    ptr = 0
    leaf = -1
    for v in seq:
        if leaf == -1:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            leaf = -1
    u, w = (v for v in range(n) if degree[v] == 1)
    edges.append((u, w))
    return edges


def _random_tree(rng: random.Random, n: int) -> Graph:
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    return Graph(n, _prufer_edges(n, [rng.randrange(n) for _ in range(n - 2)]))


def _with_random_extra_edge(rng: random.Random, g: Graph) -> Graph:
    non = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if not non:
        return g
    return g.add_edges([non[rng.randrange(len(non))]])


def _gen_contract(rng: random.Random):
    while True:
        g = _random_tree(rng, rng.randint(5, 12))
        if rng.random() < 0.4:
            g = _with_random_extra_edge(rng, g)
        cands = [(u, v) for (u, v) in g.edges
                 if g.degree(u) >= 2 and g.degree(v) >= 2
                 and (is_quasi_pendant(g, u) or is_quasi_pendant(g, v))
                 and is_cut_edge(g, u, v)]
        if cands:
            u, v = cands[rng.randrange(len(cands))]
            return g, u, v


def _glued_branches(rng: random.Random, k: int, budget: int):
    """k random branch trees sharing vertex 0; returns (graph, parts)."""
    sizes = [1] * k
    spare = budget - k
    for _ in range(spare):
        i = rng.randrange(k)
        if sizes[i] < 3:
            sizes[i] += 1
    parts, edges = [], []
    nxt = 1
    for s in sizes:
        labels = [0] + list(range(nxt, nxt + s))
        nxt += s
        t = _random_tree(rng, s + 1)
        edges += [(labels[a], labels[b]) for (a, b) in t.edges]
        parts.append(tuple(sorted(labels)))
    return Graph(nxt, edges), parts


def _gen_relocate(rng: random.Random):
    k = rng.randint(3, 4)
    g, parts = _glued_branches(rng, k, rng.randint(k, 11))
    kk = tuple(sorted(rng.sample(range(2, k), rng.randint(1, k - 2))))
    v1 = rng.choice([w for w in parts[0] if w != 0])
    v2 = rng.choice([w for w in parts[1] if w != 0])
    return g, tuple(parts), kk, v1, v2


def _gen_shift_pair(rng: random.Random):
    q = rng.randint(1, 2)
    p = rng.randint(q, q + 2)
    hn = rng.randint(2, 12 - p - q)
    h = _random_tree(rng, hn)
    if hn >= 3 and rng.random() < 0.4:
        h = _with_random_extra_edge(rng, h)
    return h, rng.randrange(hn), p, q


def _gen_transfer(rng: random.Random):
    n3 = rng.randint(3, 6)
    mid = _random_tree(rng, n3)
    if n3 >= 4 and rng.random() < 0.3:
        mid = _with_random_extra_edge(rng, mid)
    u, v = mid.edges[rng.randrange(mid.m)]
    n1 = rng.randint(1, 2)
    n2 = rng.randint(1, min(2, 12 - n3 - n1))
    t1 = _random_tree(rng, n1 + 1)
    t2 = _random_tree(rng, n2 + 1)
    side1 = [u] + list(range(n3, n3 + n1))
    side2 = [v] + list(range(n3 + n1, n3 + n1 + n2))
    edges = list(mid.edges)
    edges += [(side1[a], side1[b]) for (a, b) in t1.edges]
    edges += [(side2[a], side2[b]) for (a, b) in t2.edges]
    g = Graph(n3 + n1 + n2, edges)
    parts = (tuple(sorted(side1)), tuple(sorted(side2)), tuple(range(n3)))
    u_prime = rng.choice([w for w in side1 if w != u and g.has_edge(u, w)])
    v_prime = rng.choice([w for w in side2 if w != v and g.has_edge(v, w)])
    return g, parts, u_prime, v_prime


def _gen_two_site(rng: random.Random):
    while True:
        style = rng.choice(("mirror", "complete", "cycle"))
        if style == "complete":
            h, u, v = complete_graph(rng.randint(3, 5)), 0, 1
        elif style == "cycle":
            h, u, v = cycle_graph(rng.randint(3, 6)), 0, 1
        else:
            r = rng.randint(2, 4)
            base = _random_tree(rng, r)
            edges = list(base.edges) + [(a + r, b + r) for (a, b) in base.edges] + [(0, r)]
            h, u, v = Graph(2 * r, edges), 0, r
        q = rng.randint(1, 2)
        p = rng.randint(q, q + 2)
        if h.n + p + q <= 12:
            return h, u, v, p, q


_TRANSFORM_SWEEPS = (
    ("contract_cut_edge", _gen_contract, lambda inst, a, tol: evaluate_cut_edge_contraction(*inst, a, tol)),
    ("relocate_branches", _gen_relocate, lambda inst, a, tol: evaluate_branch_relocation(*inst, a, tol)),
    ("shift_pendant_path_pair", _gen_shift_pair, lambda inst, a, tol: shift_pendant_path_pair(*inst, a, tol)),
    ("transfer_neighbor_sets", _gen_transfer, lambda inst, a, tol: evaluate_neighbor_transfer(*inst, a, tol)),
    ("shift_two_site_pendant_paths", _gen_two_site, lambda inst, a, tol: shift_two_site_pendant_paths(*inst, a, tol)),
)


def transform_property_sweep(name: str, instances: int, seed: int, alphas=DEFAULT_ALPHA_GRID,
                             tol: Tolerances = DEFAULT_TOL) -> TheoremReport:
    """Seeded random applicable instances of one rewrite; the claimed
    direction must verify strictly on every single one."""
    entry = next((e for e in _TRANSFORM_SWEEPS if e[0] == name), None)
    if entry is None:
        raise ConfigError(f"unknown transformation {name!r}")
    _, gen, run = entry
    rng = random.Random(seed)
    failures, witnesses = [], []
    overall = None
    for i in range(instances):
        a = alphas[i % len(alphas)]
        out = run(gen(rng), a, tol)
        overall = _min_margin(overall, out.margin)
        if out.claim_verified is not True:
            failures.append({"alpha": a, "reason": "claimed direction not verified",
                             "graph6": emit_graph6(out.before), "margin": out.margin})
    if instances:
        witnesses.append({"instances": instances, "seed": seed})
    return TheoremReport(
        theorem_id=f"transform_{name}",
        n_range=(),
        alpha_grid=tuple(alphas),
        census_size=instances,
        verdict="pass" if not failures else "fail",
        witnesses=tuple(witnesses),
        margin=overall,
        failures=tuple(failures[:50]),
    )


@dataclass(frozen=True)
class SuiteConfig:
    alphas: tuple = DEFAULT_ALPHA_GRID
    tree_min_ns: tuple = (4, 5, 6, 7, 8, 9)
    tree_second_ns: tuple = (5, 6, 7, 8, 9)
    unicyclic_min_ns: tuple = (8, 9)
    unicyclic_exploratory_ns: tuple = (5, 6, 7)
    max_degree_tree_ns: tuple = (5, 6, 7, 8, 9, 10)
    max_degree_connected_ns: tuple = (5, 6, 7)
    global_connected_ns: tuple = (4, 5, 6, 7)
    global_tree_ns: tuple = (4, 5, 6, 7, 8, 9, 10)
    clique_ns: tuple = (4, 5, 6, 7)
    odd_cycle_ns: tuple = (4, 5, 6, 7, 8, 9)
    bounds_tree_ns: tuple = (8, 9, 10)
    bounds_unicyclic_ns: tuple = (8, 9)
    bounds_connected_ns: tuple = (4, 5, 6, 7)
    transform_instances: int = 200
    seed: int = 20260819
    workers: int = 1
    include_bounds_sweep: bool = True
    include_transforms: bool = True
    tol: Tolerances = field(default_factory=Tolerances)


def _validate_config(cfg: SuiteConfig):
    if not cfg.alphas:
        raise ConfigError("alpha grid is empty")
    for a in cfg.alphas:
        if not (0.0 <= float(a) < 1.0):
            raise ConfigError(f"alpha {a} outside [0, 1)")
    if cfg.transform_instances < 0:
        raise ConfigError("transform_instances must be nonnegative")


def run_suite(cfg: SuiteConfig = SuiteConfig()) -> list:
    """Every theorem check, the bounds sweep and the transform sweeps,
    in a fixed deterministic order."""
    _validate_config(cfg)
    a, w, tol = cfg.alphas, cfg.workers, cfg.tol
    reports = []
    for n in cfg.tree_min_ns:
        reports.append(check_tree_min(n, a, tol, w))
    for n in cfg.tree_second_ns:
        reports.append(check_tree_second_min(n, a, tol, w))
    for n in cfg.unicyclic_min_ns:
        reports.append(check_unicyclic_min(n, a, tol, w))
    for n in cfg.unicyclic_exploratory_ns:
        reports.append(check_unicyclic_min(n, a, tol, w))
    for n in cfg.max_degree_tree_ns:
        for delta in range(2, n):
            reports.append(check_max_degree_max(n, delta, a, tol, w, family="trees"))
    for n in cfg.max_degree_connected_ns:
        for delta in range(2, n):
            reports.append(check_max_degree_max(n, delta, a, tol, w, family="connected"))
    for n in cfg.global_tree_ns:
        reports.append(check_global_max(n, a, tol, w, family="trees"))
    for n in cfg.global_connected_ns:
        reports.append(check_global_max(n, a, tol, w, family="connected"))
    for n in cfg.clique_ns:
        for omega in range(2, n + 1):
            reports.append(check_clique_max(n, omega, a, tol, w))
    for n in cfg.odd_cycle_ns:
        reports.append(check_odd_unicyclic_max(n, a, tol, w))
    if cfg.include_bounds_sweep:
        reports.append(bounds_census_sweep(a, tol, cfg.bounds_tree_ns, cfg.bounds_unicyclic_ns,
                                           cfg.bounds_connected_ns, w))
    if cfg.include_transforms:
        for i, (name, _, _) in enumerate(_TRANSFORM_SWEEPS):
            reports.append(transform_property_sweep(name, cfg.transform_instances,
                                                    cfg.seed * 1000003 + i, a, tol))
    return reports


def suite_passed(reports) -> bool:
    return all(r.verdict == "pass" for r in reports if not r.exploratory)


def reports_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"


def reports_to_csv(reports) -> str:
    lines = ["theorem_id,n,alpha,verdict,margin,witness"]
    for r in reports:
        if r.witnesses:
            for wit in r.witnesses:
                n = wit.get("n", ";".join(str(x) for x in r.n_range))
                alpha = wit.get("alpha", "")
                margin = wit.get("margin", r.margin)
                g6 = wit.get("graph6", "")
                lines.append(f"{r.theorem_id},{n},{_f15(alpha)},{r.verdict},{_f15(margin)},{g6}")
        else:
            n = ";".join(str(x) for x in r.n_range)
            lines.append(f"{r.theorem_id},{n},,{r.verdict},{_f15(r.margin)},")
    return "\n".join(lines) + "\n"
