import math
import random

import numpy as np
import pytest

from dalpha.errors import AlphaDomainError, ConvergenceError
from dalpha.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    distance_profile,
    path_graph,
    star_graph,
)
from dalpha.canon import automorphisms
from dalpha.spectral import (
    Tolerances,
    alpha_energy,
    alpha_matrix,
    eigenequation_residual,
    full_spectrum,
    mu_of,
    rayleigh,
    spectral_radius,
    validate_alpha,
)

GRID = (0.0, 0.1, 0.25, 0.5, 0.75, 0.9)


def test_validate_alpha_accepts_half_open_interval():
    assert validate_alpha(0) == 0.0
    assert validate_alpha(0.999) == 0.999
    for bad in (1.0, -0.01, 2, float("nan"), float("inf"), "x", None):
        with pytest.raises(AlphaDomainError):
            validate_alpha(bad)


def test_alpha_matrix_entries():
    am = alpha_matrix(path_graph(3), 0.5)
    expect = 0.5 * np.diag([3, 2, 3]) + 0.5 * np.array([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    assert np.allclose(am.entries, expect)


def test_path3_spectrum_closed_form():
    # eigenvalues of the plain distance matrix of the 3-path
    s = full_spectrum(path_graph(3), 0.0)
    root3 = math.sqrt(3.0)
    assert abs(s.mu - (1 + root3)) < 1e-10
    assert np.allclose(s.eigenvalues, [1 + root3, 1 - root3, -2.0], atol=1e-10)


def test_complete_graph_radius_is_order_minus_one():
    for n in range(2, 9):
        for a in GRID:
            assert abs(mu_of(complete_graph(n), a) - (n - 1)) < 1e-10


def test_cycle_radius_is_common_transmission():
    for n in range(3, 10):
        t = (n * n - 1) // 4 if n % 2 else n * n // 4
        for a in GRID:
            assert abs(mu_of(cycle_graph(n), a) - t) < 1e-10


def test_two_vertex_spectrum():
    for a in GRID:
        s = full_spectrum(complete_graph(2), a)
        assert np.allclose(s.eigenvalues, [1.0, 2 * a - 1], atol=1e-12)


def test_radius_is_weighted_by_alpha_between_extremes(connected_small):
    # row sums of the alpha-matrix are the transmissions for every alpha,
    # so mu always sits between min and max transmission
    for graphs in connected_small.values():
        for g in graphs[:10]:
            prof = distance_profile(g)
            for a in GRID:
                mu = mu_of(g, a)
                assert prof.t_min - 1e-9 <= mu <= prof.t_max + 1e-9


def test_row_sums_equal_transmissions(connected_small):
    for graphs in connected_small.values():
        for g in graphs[:10]:
            prof = distance_profile(g)
            for a in GRID:
                rows = alpha_matrix(g, a).entries.sum(axis=1)
                assert np.allclose(rows, prof.transmissions, atol=1e-12)


def test_eigenvalue_sum_matches_trace(connected_small):
    for graphs in connected_small.values():
        for g in graphs:
            prof = distance_profile(g)
            for a in GRID:
                s = full_spectrum(g, a)
                total = float(np.sum(s.eigenvalues))
                expect = 2.0 * a * prof.sigma
                assert abs(total - expect) <= 1e-8 * (1 + abs(expect))


def test_adding_an_edge_strictly_decreases_radius(connected_small):
    rng = random.Random(2)
    for n, graphs in connected_small.items():
        for g in rng.sample(graphs, min(6, len(graphs))):
            non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
            if not non_edges:
                continue
            e = rng.choice(non_edges)
            bigger = g.add_edges([e])
            for a in (0.0, 0.5, 0.9):
                assert mu_of(bigger, a) < mu_of(g, a) - 1e-12


def test_perron_vector_positive_unit_and_symmetric(connected_small):
    for graphs in connected_small.values():
        for g in graphs[:8]:
            autos = automorphisms(g)
            for a in (0.0, 0.5):
                s = full_spectrum(g, a)
                assert (s.perron > 0).all()
                assert abs(float(s.perron @ s.perron) - 1.0) < 1e-10
                for eta in autos:
                    for u in range(g.n):
                        assert abs(s.perron[u] - s.perron[eta[u]]) < 1e-8


def test_rayleigh_never_exceeds_radius(connected_small):
    rng = np.random.default_rng(17)
    for graphs in connected_small.values():
        for g in graphs[:5]:
            for a in (0.0, 0.5, 0.9):
                mu = mu_of(g, a)
                for _ in range(20):
                    x = rng.normal(size=g.n)
                    x /= np.linalg.norm(x)
                    assert rayleigh(g, a, x) <= mu + 1e-10


def test_rayleigh_attains_radius_at_perron():
    g = star_graph(6)
    for a in GRID:
        s = full_spectrum(g, a)
        assert abs(rayleigh(g, a, s.perron) - s.mu) < 1e-9


def test_rayleigh_validates_input():
    g = path_graph(4)
    with pytest.raises(ValueError):
        rayleigh(g, 0.5, np.ones(4))  # not unit
    with pytest.raises(ValueError):
        rayleigh(g, 0.5, np.ones(3) / math.sqrt(3))


def test_spectral_gap_positive(connected_small):
    for graphs in connected_small.values():
        for g in graphs:
            for a in (0.0, 0.5):
                assert full_spectrum(g, a).spectral_gap > 0


def test_single_vertex_is_flagged_trivial():
    for fn in (full_spectrum, spectral_radius):
        s = fn(Graph(1, []), 0.3)
        assert s.trivial and s.mu == 0.0 and list(s.perron) == [1.0]


def test_power_iteration_agrees_with_dense(connected_small):
    for graphs in connected_small.values():
        for g in graphs[:10]:
            for a in GRID:
                dense = full_spectrum(g, a)
                power = spectral_radius(g, a)
                assert power.method == "power" and dense.method == "dense"
                assert abs(power.mu - dense.mu) <= 1e-8 * (1 + abs(dense.mu))


def test_power_iteration_worst_case_paths():
    # slowest-mixing family in range: long paths at high alpha
    for n in (9, 10, 11, 12):
        for a in (0.0, 0.9):
            dense = full_spectrum(path_graph(n), a)
            power = spectral_radius(path_graph(n), a)
            assert abs(power.mu - dense.mu) <= 1e-8 * (1 + dense.mu)


def test_power_iteration_reports_nonconvergence():
    g = path_graph(8)
    hard = Tolerances(residual_scale=1e-30)
    with pytest.raises(ConvergenceError) as err:
        spectral_radius(g, 0.5, hard)
    assert err.value.residual is not None and err.value.residual > 0


def test_eigenequation_residual_detects_wrong_radius():
    g = cycle_graph(5)
    s = full_spectrum(g, 0.25)
    assert eigenequation_residual(g, 0.25, s.mu, s.perron) < 1e-10
    assert eigenequation_residual(g, 0.25, s.mu + 0.5, s.perron) > 0.1


def test_alpha_energy_matches_manual_sum():
    g = star_graph(5)
    for a in GRID:
        s = full_spectrum(g, a)
        shift = 2.0 * a * distance_profile(g).sigma / g.n
        manual = float(np.sum(np.abs(np.asarray(s.eigenvalues) - shift)))
        assert abs(alpha_energy(g, a) - manual) < 1e-12


def test_mu_of_matches_full_spectrum():
    g = star_graph(7)
    assert mu_of(g, 0.4) == full_spectrum(g, 0.4).mu
