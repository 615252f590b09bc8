import pytest

from dalpha.canon import are_isomorphic
from dalpha.census import all_trees
from dalpha.errors import ConfigError
from dalpha.graph6 import parse_graph6
from dalpha.graphs import broom, kite, path_graph, star_graph
from dalpha.verify import (
    DEFAULT_ALPHA_GRID,
    SuiteConfig,
    TheoremReport,
    _extremal_sweep,
    bounds_census_sweep,
    check_clique_max,
    check_global_max,
    check_max_degree_max,
    check_odd_unicyclic_max,
    check_tree_min,
    check_tree_second_min,
    check_unicyclic_min,
    reports_to_csv,
    reports_to_json,
    run_suite,
    suite_passed,
    transform_property_sweep,
)

GRID = (0.0, 0.5, 0.9)

SMALL_CFG = SuiteConfig(
    alphas=GRID,
    tree_min_ns=(4, 5),
    tree_second_ns=(5,),
    unicyclic_min_ns=(8,),
    unicyclic_exploratory_ns=(5,),
    max_degree_tree_ns=(5,),
    max_degree_connected_ns=(5,),
    global_connected_ns=(4,),
    global_tree_ns=(5,),
    clique_ns=(4,),
    odd_cycle_ns=(5,),
    bounds_tree_ns=(6,),
    bounds_unicyclic_ns=(6,),
    bounds_connected_ns=(4,),
    transform_instances=5,
    seed=11,
)


def test_tree_min_identifies_star():
    rep = check_tree_min(5, GRID)
    assert rep.verdict == "pass" and rep.census_size == 3
    assert rep.margin > 0
    assert len(rep.witnesses) == len(GRID)
    for wit in rep.witnesses:
        assert are_isomorphic(parse_graph6(wit["graph6"]), star_graph(5))


def test_inverted_claim_fails_with_witness():
    # harness self-test: claiming the path is the tree minimizer must fail
    # and the failure must name the actual extremal graph
    rep = _extremal_sweep("selftest", 5, all_trees(5).graphs, path_graph(5),
                          GRID, minimize=True)
    assert rep.verdict == "fail"
    assert rep.failures
    bad = rep.failures[0]
    assert bad["reason"] == "extremal graph is not the predicted one"
    assert are_isomorphic(parse_graph6(bad["graph6"]), star_graph(5))


def test_tree_second_min_records_split():
    rep = check_tree_second_min(6, GRID)
    assert rep.verdict == "pass"
    for wit in rep.witnesses:
        assert wit["split"] >= 1
    assert rep.margin > 0


def test_unicyclic_min_exploratory_flag():
    small = check_unicyclic_min(5, GRID)
    assert small.exploratory and small.verdict == "fail"
    big = check_unicyclic_min(8, GRID)
    assert not big.exploratory and big.verdict == "pass"


def test_family_maximizer_checks():
    rep = check_max_degree_max(6, 3, GRID)
    assert rep.verdict == "pass"
    assert are_isomorphic(parse_graph6(rep.witnesses[0]["graph6"]), broom(6, 3))
    rep = check_clique_max(5, 3, GRID)
    assert rep.verdict == "pass"
    assert are_isomorphic(parse_graph6(rep.witnesses[0]["graph6"]), kite(5, 3))
    rep = check_odd_unicyclic_max(6, GRID)
    assert rep.verdict == "pass"
    assert are_isomorphic(parse_graph6(rep.witnesses[0]["graph6"]), kite(6, 3))


def test_global_max_connected_family():
    rep = check_global_max(5, GRID, family="connected")
    assert rep.verdict == "pass"
    for wit in rep.witnesses:
        assert are_isomorphic(parse_graph6(wit["graph6"]), path_graph(5))
        assert are_isomorphic(parse_graph6(wit["second_graph6"]), broom(5, 3))
        assert wit["cycle_gap"] > 0
    tree_rep = check_global_max(5, GRID, family="trees")
    assert tree_rep.verdict == "pass"
    assert "cycle_gap" not in tree_rep.witnesses[0]


def test_parameter_validation():
    with pytest.raises(ConfigError):
        check_tree_min(3)
    with pytest.raises(ConfigError):
        check_tree_second_min(4)
    with pytest.raises(ConfigError):
        check_max_degree_max(6, 1)
    with pytest.raises(ConfigError):
        check_max_degree_max(6, 6)
    with pytest.raises(ConfigError):
        check_clique_max(5, 6)
    with pytest.raises(ConfigError):
        run_suite(SuiteConfig(alphas=()))
    with pytest.raises(ConfigError):
        run_suite(SuiteConfig(alphas=(0.5, 1.0)))
    with pytest.raises(ConfigError):
        run_suite(SuiteConfig(transform_instances=-1))


def test_transform_sweeps_small():
    for name in ("contract_cut_edge", "relocate_branches", "shift_pendant_path_pair",
                 "transfer_neighbor_sets", "shift_two_site_pendant_paths"):
        rep = transform_property_sweep(name, 8, seed=7, alphas=GRID)
        assert rep.verdict == "pass", name
        assert rep.census_size == 8
        assert rep.margin > 0
    with pytest.raises(ConfigError):
        transform_property_sweep("swap_everything", 5, seed=1)


def test_transform_sweep_seed_determinism():
    a = transform_property_sweep("contract_cut_edge", 10, seed=3, alphas=GRID)
    b = transform_property_sweep("contract_cut_edge", 10, seed=3, alphas=GRID)
    assert a == b


def test_bounds_sweep_small_profile():
    rep = bounds_census_sweep(GRID, tree_ns=(6,), unicyclic_ns=(6,), connected_ns=(4,))
    assert rep.verdict == "pass"
    assert not rep.failures
    assert rep.margin > 0


def test_suite_passed_ignores_exploratory():
    ok = TheoremReport("a", (5,), GRID, 1, "pass", (), 1.0, ())
    exp_fail = TheoremReport("b", (5,), GRID, 1, "fail", (), None, (), exploratory=True)
    hard_fail = TheoremReport("c", (5,), GRID, 1, "fail", (), None, ())
    assert suite_passed([ok, exp_fail])
    assert not suite_passed([ok, hard_fail])


def test_run_suite_deterministic_report():
    first = run_suite(SMALL_CFG)
    second = run_suite(SMALL_CFG)
    assert reports_to_json(first) == reports_to_json(second)
    assert suite_passed(first)
    explor = [r for r in first if r.exploratory]
    assert explor and all(r.verdict == "fail" for r in explor)


def test_reports_to_csv_shape():
    reports = [check_tree_min(4, GRID), check_unicyclic_min(5, GRID)]
    csv = reports_to_csv(reports)
    lines = csv.splitlines()
    assert lines[0] == "theorem_id,n,alpha,verdict,margin,witness"
    assert len(lines) == 1 + sum(max(len(r.witnesses), 1) for r in reports)
    assert all(len(line.split(",")) == 6 for line in lines)


def test_report_serialization_handles_nonfinite():
    rep = TheoremReport("x", (4,), (0.0,), 1, "pass", (), float("nan"), ())
    assert rep.to_dict()["margin"] is None
    rep = TheoremReport("x", (4,), (1 / 3,), 1, "pass", (), 1 / 3, ())
    d = rep.to_dict()
    assert d["margin"] == float(f"{1 / 3:.15g}")


def test_default_grid_is_valid():
    assert all(0.0 <= a < 1.0 for a in DEFAULT_ALPHA_GRID)
    assert len(set(DEFAULT_ALPHA_GRID)) == len(DEFAULT_ALPHA_GRID)
