"""Closed-form bounds on the distance alpha-spectral radius.

Every function returns a BoundReport pairing the bound value with the
computed spectral radius, whether the inequality holds at the package
tolerances, and (where a characterization is available) whether equality
is predicted structurally and observed numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from dalpha.errors import DalphaError
from dalpha.graphs import (
    Graph,
    distance_profile,
    is_complete,
    is_dvdr,
    is_transmission_regular,
    is_unicyclic,
    star_plus_edge,
)
from dalpha.spectral import DEFAULT_TOL, Tolerances, mu_of, validate_alpha


@dataclass(frozen=True)
class BoundReport:
    """One bound evaluated against the true spectral radius.

    gap is mu - value for lower bounds and value - mu for upper bounds,
    so a valid bound always has gap >= 0 up to roundoff. For a strict
    bound, holds demands gap > 0; otherwise gap >= -tie_band suffices.
    equality_predicted is None when the source result states only a
    sufficient condition rather than a characterization.
    """

    name: str
    kind: str
    value: float
    mu: float
    holds: bool
    gap: float
    strict: bool = False
    equality_predicted: bool | None = None
    equality_observed: bool | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "value": self.value,
            "mu": self.mu,
            "holds": self.holds,
            "gap": self.gap,
            "strict": self.strict,
            "equality_predicted": self.equality_predicted,
            "equality_observed": self.equality_observed,
        }


def _report(name, kind, value, mu, tol, strict=False, equality_predicted=None) -> BoundReport:
    gap = (mu - value) if kind == "lower" else (value - mu)
    holds = gap > 0.0 if strict else gap >= -tol.tie(value)
    observed = None if strict else bool(abs(gap) <= tol.tie(value))
    return BoundReport(
        name=name,
        kind=kind,
        value=float(value),
        mu=float(mu),
        holds=bool(holds),
        gap=float(gap),
        strict=strict,
        equality_predicted=equality_predicted,
        equality_observed=observed,
    )


def _mu(g: Graph, alpha: float, mu) -> float:
    return mu_of(g, alpha) if mu is None else float(mu)


def interpolated_mean(s: float, t: float, alpha: float) -> float:
    """(alpha*(s+t) + sqrt(alpha^2*(s+t)^2 - 4*(2*alpha-1)*s*t)) / 2.

    Geometric mean of s and t at alpha=0, arithmetic mean at alpha=1/2;
    nondecreasing in both arguments for s, t >= 0.
    """
    disc = alpha * alpha * (s + t) ** 2 - 4.0 * (2.0 * alpha - 1.0) * s * t
    return 0.5 * (alpha * (s + t) + math.sqrt(max(disc, 0.0)))


def bound_mean_transmission(g: Graph, alpha, tol: Tolerances = DEFAULT_TOL, mu=None) -> BoundReport:
    """mu >= (sum of transmissions)/n, equality iff transmission regular."""
    a = validate_alpha(alpha)
    prof = distance_profile(g)
    value = 2.0 * prof.sigma / g.n
    return _report("mean_transmission_lower", "lower", value, _mu(g, a, mu), tol,
                   equality_predicted=is_transmission_regular(g))


def bound_order_lower(g: Graph, alpha, tol: Tolerances = DEFAULT_TOL, mu=None) -> BoundReport:
    """mu >= n - 1, equality iff the graph is complete."""
    a = validate_alpha(alpha)
    return _report("order_lower", "lower", float(g.n - 1), _mu(g, a, mu), tol,
                   equality_predicted=is_complete(g))


def bound_two_degrees_lower(g: Graph, alpha, tol: Tolerances = DEFAULT_TOL, mu=None) -> BoundReport:
    """Lower bound from the two largest degrees.

    With Delta >= Delta' the top two degrees, mu >= interpolated_mean of
    2n-2-Delta and 2n-2-Delta'. Equality iff the graph is regular with
    diameter at most 2.
    """
    if g.n < 2:
        raise DalphaError("two-degree bound needs at least 2 vertices")
    a = validate_alpha(alpha)
    degs = sorted(g.degrees, reverse=True)
    value = interpolated_mean(2 * g.n - 2 - degs[0], 2 * g.n - 2 - degs[1], a)
    prof = distance_profile(g)
    eq = degs[0] == degs[-1] and prof.diameter <= 2
    return _report("two_degrees_lower", "lower", value, _mu(g, a, mu), tol, equality_predicted=eq)


def _diameter_transmission_cap(n: int, d: int, small_deg: int) -> float:
    # largest transmission a vertex of the given degree can have when the
    # diameter is d: degree neighbors at distance 1, then 2, 3, ..., d for
    # the rest, which telescopes to the closed form below
    return d * n - d * (d - 1) / 2.0 - 1.0 - small_deg * (d - 1)


def bound_degree_diameter_upper(g: Graph, alpha, tol: Tolerances = DEFAULT_TOL, mu=None) -> BoundReport:
    """Upper bound from the diameter and the two smallest degrees.

    Equality iff the graph is regular with diameter at most 2.
    """
    if g.n < 2:
        raise DalphaError("degree-diameter bound needs at least 2 vertices")
    a = validate_alpha(alpha)
    degs = sorted(g.degrees)
    prof = distance_profile(g)
    d = prof.diameter
    s = _diameter_transmission_cap(g.n, d, degs[0])
    t = _diameter_transmission_cap(g.n, d, degs[1])
    value = interpolated_mean(s, t, a)
    eq = degs[0] == degs[-1] and d <= 2
    return _report("degree_diameter_upper", "upper", value, _mu(g, a, mu), tol, equality_predicted=eq)


def rowsum_matrix_bounds(A) -> tuple[float, float]:
    """Row-sum refinement bounds on the spectral radius of a nonnegative matrix.

    Returns (lower, upper). The lower bound corrects the maximum row sum
    using the cheapest column entry seen from the other rows; the upper
    bound corrects the minimum row sum likewise. Both are sufficient-only:
    they can be exact without any structural condition holding.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("expected a square matrix")
    if (A < 0).any():
        raise ValueError("expected a nonnegative matrix")
    n = A.shape[0]
    if n == 1:
        return float(A[0, 0]), float(A[0, 0])
    r = A.sum(axis=1)
    idx = np.arange(n)

    q = int(np.argmax(r))
    others = idx != q
    m = float(np.min(r[others] - A[others, q]))
    t = float(np.min(A[others, q]))
    aqq = float(A[q, q])
    lo = 0.5 * (aqq + m + math.sqrt((m - aqq) ** 2 + 4.0 * t * (float(r[q]) - aqq)))

    p = int(np.argmin(r))
    others = idx != p
    ell = float(np.max(r[others] - A[others, p]))
    s = float(np.max(A[others, p]))
    app = float(A[p, p])
    hi = 0.5 * (app + ell + math.sqrt((ell - app) ** 2 + 4.0 * s * (float(r[p]) - app)))
    return lo, hi


def _transmission_rowsum_lower_at(g: Graph, alpha: float, v: int) -> float:
    # v must attain the maximum transmission
    prof = distance_profile(g)
    tv = prof.transmissions.astype(float)
    others = np.arange(g.n) != v
    m2 = float(np.min(tv[others] - (1.0 - alpha) * prof.dist[others, v]))
    tmax = float(prof.t_max)
    return 0.5 * (m2 + alpha * tmax + math.sqrt((m2 - alpha * tmax) ** 2 + 4.0 * (1.0 - alpha) ** 2 * tmax))


def _transmission_rowsum_upper_at(g: Graph, alpha: float, u: int) -> float:
    # u must attain the minimum transmission
    prof = distance_profile(g)
    tv = prof.transmissions.astype(float)
    others = np.arange(g.n) != u
    m1 = float(np.max(tv[others] - (1.0 - alpha) * prof.dist[others, u]))
    tmin = float(prof.t_min)
    ecc = float(prof.ecc[u])
    return 0.5 * (m1 + alpha * tmin + math.sqrt((m1 - alpha * tmin) ** 2 + 4.0 * (1.0 - alpha) ** 2 * ecc * tmin))


def bound_transmission_rowsum(g: Graph, alpha, tol: Tolerances = DEFAULT_TOL, mu=None) -> tuple[BoundReport, BoundReport]:
    """Transmission-based row-sum bounds, tightened over all extremal vertices.

    Lower equality iff the graph is complete; upper equality iff some
    vertex of degree n-1 leaves a regular graph when removed.
    """
    if g.n < 2:
        raise DalphaError("transmission row-sum bounds need at least 2 vertices")
    a = validate_alpha(alpha)
    prof = distance_profile(g)
    muv = _mu(g, a, mu)
    lo = max(_transmission_rowsum_lower_at(g, a, v)
             for v in range(g.n) if prof.transmissions[v] == prof.t_max)
    hi = min(_transmission_rowsum_upper_at(g, a, u)
             for u in range(g.n) if prof.transmissions[u] == prof.t_min)
    lo_rep = _report("transmission_rowsum_lower", "lower", lo, muv, tol,
                     equality_predicted=is_complete(g))
    hi_rep = _report("transmission_rowsum_upper", "upper", hi, muv, tol,
                     equality_predicted=is_dvdr(g))
    return lo_rep, hi_rep


def bound_max_transmission_upper(g: Graph, alpha, tol: Tolerances = DEFAULT_TOL, mu=None) -> BoundReport:
    """mu <= T_max, equality iff transmission regular."""
    a = validate_alpha(alpha)
    prof = distance_profile(g)
    return _report("max_transmission_upper", "upper", float(prof.t_max), _mu(g, a, mu), tol,
                   equality_predicted=is_transmission_regular(g))


def transmission_gap_floor(g: Graph, alpha) -> float:
    """The guaranteed gap T_max - mu for a graph that is not transmission regular."""
    if is_transmission_regular(g):
        raise DalphaError("gap floor applies only to graphs that are not transmission regular")
    a = validate_alpha(alpha)
    prof = distance_profile(g)
    n = float(g.n)
    tmax = float(prof.t_max)
    two_sigma = 2.0 * float(prof.sigma)
    excess = n * tmax - two_sigma
    num = (1.0 - a) * n * tmax * excess
    den = (1.0 - a) * n * n * tmax + 4.0 * float(prof.sigma) * excess
    return num / den


def bound_transmission_gap_upper(g: Graph, alpha, tol: Tolerances = DEFAULT_TOL, mu=None) -> BoundReport:
    """Strict upper bound mu < T_max - gap_floor for non transmission-regular graphs."""
    a = validate_alpha(alpha)
    prof = distance_profile(g)
    value = float(prof.t_max) - transmission_gap_floor(g, a)
    return _report("transmission_gap_upper", "upper", value, _mu(g, a, mu), tol, strict=True)


@dataclass(frozen=True)
class EigenvalueIntervalReport:
    """Containment check for every eigenvalue below the spectral radius."""

    lo: float
    hi: float
    abs_cap: float
    eigenvalues: tuple
    all_in_interval: bool
    all_abs_capped: bool

    def to_dict(self) -> dict:
        return {
            "lo": self.lo,
            "hi": self.hi,
            "abs_cap": self.abs_cap,
            "eigenvalues": list(self.eigenvalues),
            "all_in_interval": self.all_in_interval,
            "all_abs_capped": self.all_abs_capped,
        }


def nonmaximal_eigenvalue_interval(g: Graph, alpha) -> tuple[float, float, float]:
    """(lo, hi, abs_cap) bracketing every eigenvalue except the largest."""
    a = validate_alpha(alpha)
    prof = distance_profile(g)
    tmin = float(prof.t_min)
    tmax = float(prof.t_max)
    lo = 2.0 * a * tmin - tmax + (1.0 - a) * (g.n - 2)
    hi = tmax - (1.0 - a) * g.n
    abs_cap = tmax - (1.0 - a) * (g.n - 2)
    return lo, hi, abs_cap


def check_nonmaximal_eigenvalues(g: Graph, alpha, eigenvalues, tol: Tolerances = DEFAULT_TOL) -> EigenvalueIntervalReport:
    """Verify a computed spectrum against the nonmaximal-eigenvalue interval.

    eigenvalues must be the full spectrum in nonincreasing order; the
    leading entry (the spectral radius) is excluded from the check.
    """
    lo, hi, abs_cap = nonmaximal_eigenvalue_interval(g, alpha)
    rest = np.asarray(eigenvalues, dtype=float)[1:]
    band_lo = tol.tie(lo)
    band_hi = tol.tie(hi)
    in_interval = bool(np.all(rest >= lo - band_lo) and np.all(rest <= hi + band_hi))
    capped = bool(np.all(np.abs(rest) <= abs_cap + tol.tie(abs_cap)))
    return EigenvalueIntervalReport(
        lo=lo,
        hi=hi,
        abs_cap=abs_cap,
        eigenvalues=tuple(float(x) for x in rest),
        all_in_interval=in_interval,
        all_abs_capped=capped,
    )


def star_plus_edge_pair_sum(n: int) -> int:
    """Sum of pairwise distances of the star with one extra edge: n^2 - 2n."""
    if n < 3:
        raise ValueError("needs n >= 3")
    return n * n - 2 * n


def unicyclic_pair_sum_floor(g: Graph, tol: Tolerances = DEFAULT_TOL) -> BoundReport:
    """For a unicyclic graph on n >= 6 vertices other than the star plus an
    edge, the sum of pairwise distances is at least n^2 - n - 4."""
    from dalpha.canon import are_isomorphic

    if not is_unicyclic(g):
        raise DalphaError("pair-sum floor applies only to unicyclic graphs")
    if g.n < 6:
        raise DalphaError("pair-sum floor needs at least 6 vertices")
    if are_isomorphic(g, star_plus_edge(g.n)):
        raise DalphaError("pair-sum floor excludes the star plus an edge")
    prof = distance_profile(g)
    value = float(g.n * g.n - g.n - 4)
    sigma = float(prof.sigma)
    gap = sigma - value
    return BoundReport(
        name="unicyclic_pair_sum_floor",
        kind="lower",
        value=value,
        mu=sigma,
        holds=bool(gap >= 0.0),
        gap=gap,
        strict=False,
        equality_predicted=None,
        equality_observed=bool(gap == 0.0),
    )


def all_bound_reports(g: Graph, alpha, tol: Tolerances = DEFAULT_TOL) -> dict[str, BoundReport]:
    """Every spectral-radius bound applicable to the graph, keyed by name."""
    a = validate_alpha(alpha)
    mu = mu_of(g, a)
    out: dict[str, BoundReport] = {}
    for rep in (
        bound_mean_transmission(g, a, tol, mu),
        bound_order_lower(g, a, tol, mu),
        bound_max_transmission_upper(g, a, tol, mu),
    ):
        out[rep.name] = rep
    if g.n >= 2:
        for rep in (
            bound_two_degrees_lower(g, a, tol, mu),
            bound_degree_diameter_upper(g, a, tol, mu),
        ):
            out[rep.name] = rep
        lo_rep, hi_rep = bound_transmission_rowsum(g, a, tol, mu)
        out[lo_rep.name] = lo_rep
        out[hi_rep.name] = hi_rep
    if not is_transmission_regular(g):
        rep = bound_transmission_gap_upper(g, a, tol, mu)
        out[rep.name] = rep
    return out
