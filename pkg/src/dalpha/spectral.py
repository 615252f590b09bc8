"""Spectra of the distance alpha-matrix A = alpha*T + (1-alpha)*D.

T is the diagonal matrix of transmissions and D the distance matrix of a
connected graph; alpha ranges over [0, 1). A is symmetric, nonnegative and
irreducible, so its largest eigenvalue mu is simple with a positive unit
eigenvector (the Perron vector).

Two independent routes compute mu: a dense symmetric eigensolver
(full_spectrum) and power iteration with a Rayleigh-quotient stop
(spectral_radius). They are cross-checked, never merged.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from dalpha.errors import AlphaDomainError, ConvergenceError, DalphaError
from dalpha.graphs import Graph, DistanceProfile, distance_profile


@dataclass(frozen=True)
class Tolerances:
    """Scale factors for the package-wide numeric tolerances."""

    residual_scale: float = 1e-10
    strict_scale: float = 1e-9
    tie_scale: float = 1e-7

    def residual(self, t_max: float) -> float:
        return self.residual_scale * (1.0 + t_max)

    def strict(self, mu: float) -> float:
        return self.strict_scale * (1.0 + abs(mu))

    def tie(self, value: float) -> float:
        return self.tie_scale * (1.0 + abs(value))


DEFAULT_TOL = Tolerances()

POWER_ITERATION_CAP_PER_VERTEX = 100


@dataclass(frozen=True)
class AlphaMatrix:
    """The matrix alpha*T + (1-alpha)*D with its ingredients."""

    alpha: float
    entries: np.ndarray
    profile: DistanceProfile


@dataclass(frozen=True)
class SpectralResult:
    mu: float
    perron: np.ndarray
    residual: float
    method: str
    eigenvalues: np.ndarray | None = None
    spectral_gap: float | None = None
    trivial: bool = False


def validate_alpha(alpha) -> float:
    try:
        a = float(alpha)
    except (TypeError, ValueError) as exc:
        raise AlphaDomainError(f"alpha must be a real number, got {alpha!r}") from exc
    if not (0.0 <= a < 1.0) or not np.isfinite(a):
        raise AlphaDomainError(f"alpha must lie in [0, 1), got {alpha!r}")
    return a


def alpha_matrix(g: Graph, alpha) -> AlphaMatrix:
    a = validate_alpha(alpha)
    prof = distance_profile(g)
    entries = a * np.diag(prof.transmissions.astype(float)) + (1.0 - a) * prof.dist.astype(float)
    return AlphaMatrix(alpha=a, entries=entries, profile=prof)


def _trivial_result(method: str) -> SpectralResult:
    return SpectralResult(
        mu=0.0,
        perron=np.array([1.0]),
        residual=0.0,
        method=method,
        eigenvalues=np.array([0.0]),
        spectral_gap=None,
        trivial=True,
    )


def full_spectrum(g: Graph, alpha, tol: Tolerances = DEFAULT_TOL) -> SpectralResult:
    """All eigenvalues (nonincreasing) plus the positive unit Perron vector."""
    am = alpha_matrix(g, alpha)
    if g.n == 1:
        return _trivial_result("dense")
    w, vecs = np.linalg.eigh(am.entries)
    eigenvalues = w[::-1].copy()
    mu = float(eigenvalues[0])
    x = vecs[:, -1]
    if x[np.argmax(np.abs(x))] < 0:
        x = -x
    if not (x > 0).all():
        raise DalphaError("Perron vector came out non-positive; matrix not irreducible?")
    residual = float(np.max(np.abs(am.entries @ x - mu * x)))
    bar = tol.residual(am.profile.t_max)
    if residual > bar:
        raise ConvergenceError(f"dense eigensolver residual {residual:.3e} above {bar:.3e}", residual)
    return SpectralResult(
        mu=mu,
        perron=x,
        residual=residual,
        method="dense",
        eigenvalues=eigenvalues,
        spectral_gap=float(eigenvalues[0] - eigenvalues[1]),
    )


def spectral_radius(g: Graph, alpha, tol: Tolerances = DEFAULT_TOL) -> SpectralResult:
    """Power iteration from the all-ones vector; independent of full_spectrum.

    Stops when the eigenequation residual of the Rayleigh pair drops below
    tolerance; raises ConvergenceError (with the last residual) if the
    iteration cap of 100*n is exhausted first.
    """
    am = alpha_matrix(g, alpha)
    if g.n == 1:
        return _trivial_result("power")
    A = am.entries
    n = g.n
    x = np.full(n, 1.0 / np.sqrt(n))
    bar = tol.residual(am.profile.t_max)
    residual = np.inf
    for _ in range(POWER_ITERATION_CAP_PER_VERTEX * n):
        y = A @ x
        q = float(x @ y)
        residual = float(np.max(np.abs(y - q * x)))
        if residual <= bar:
            return SpectralResult(mu=q, perron=x, residual=residual, method="power")
        x = y / np.linalg.norm(y)
    raise ConvergenceError(f"power iteration did not reach residual {bar:.3e} in {100 * n} steps", residual)


def rayleigh(g: Graph, alpha, x) -> float:
    """Pairwise-form quadratic value sum_{u<v} d(u,v)*(alpha*(x_u^2+x_v^2) + 2(1-alpha)*x_u*x_v).

    x must be a unit vector; by the variational principle the value is at
    most mu, with equality exactly at the Perron vector.
    """
    a = validate_alpha(alpha)
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise ValueError(f"vector length {x.shape} does not match n={g.n}")
    if abs(float(x @ x) - 1.0) > 1e-8:
        raise ValueError("rayleigh requires a unit vector")
    prof = distance_profile(g)
    iu, iv = np.triu_indices(g.n, 1)
    d = prof.dist[iu, iv].astype(float)
    return float(np.sum(d * (a * (x[iu] ** 2 + x[iv] ** 2) + 2.0 * (1.0 - a) * x[iu] * x[iv])))


def eigenequation_residual(g: Graph, alpha, mu: float, x) -> float:
    """max_u |sum_v d(u,v)*(alpha*x_u + (1-alpha)*x_v) - mu*x_u|."""
    a = validate_alpha(alpha)
    x = np.asarray(x, dtype=float)
    prof = distance_profile(g)
    lhs = a * prof.transmissions.astype(float) * x + (1.0 - a) * (prof.dist.astype(float) @ x)
    return float(np.max(np.abs(lhs - mu * x)))


def alpha_energy(g: Graph, alpha, tol: Tolerances = DEFAULT_TOL) -> float:
    """Sum of |eigenvalue - 2*alpha*sigma/n| over the whole spectrum."""
    a = validate_alpha(alpha)
    res = full_spectrum(g, a, tol)
    prof = distance_profile(g)
    shift = 2.0 * a * prof.sigma / g.n
    return float(np.sum(np.abs(res.eigenvalues - shift)))


@lru_cache(maxsize=200_000)
def mu_of(g: Graph, alpha: float) -> float:
    """Cached spectral radius via the dense route (sweeps reuse this heavily)."""
    return full_spectrum(g, alpha).mu
