import io
import json
import math
import sys

import pytest

from dalpha.canon import are_isomorphic
from dalpha.cli import main
from dalpha.census import filter_census, all_trees
from dalpha.graph6 import emit_graph6, parse_graph6
from dalpha.graphs import cycle_graph, path_graph, star_graph
from dalpha.spectral import mu_of
from dalpha.verify import TheoremReport

P4 = emit_graph6(path_graph(4))
C4 = emit_graph6(cycle_graph(4))


def run(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_version_flag():
    with pytest.raises(SystemExit) as e:
        main(["--version"])
    assert e.value.code == 0


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 2


def test_compute_stdin_json(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys,
                       ["compute", "--alpha", "0", "--alpha", "0.5"], stdin=P4 + "\n")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 2
    rec = records[0]
    assert rec["index"] == 0 and rec["graph6"] == P4 and rec["n"] == 4
    assert abs(rec["mu"] - mu_of(path_graph(4), 0.0)) < 1e-12
    assert rec["sigma"] == 10 and sorted(rec["transmissions"]) == [4, 4, 6, 6]
    assert len(rec["spectrum"]) == 4 and len(rec["perron"]) == 4
    assert rec["trivial"] is False and rec["energy"] > 0


def test_compute_trivial_single_vertex(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["compute", "--alpha", "0.5"], stdin="@\n")
    assert code == 0
    rec = json.loads(out.splitlines()[0])
    assert rec["trivial"] is True and rec["mu"] == 0.0 and rec["spectrum"] == [0.0]


def test_compute_continues_past_bad_lines(monkeypatch, capsys):
    stdin = "!!notgraph6\n" + P4 + "\n"
    code, out, _ = run(monkeypatch, capsys, ["compute", "--alpha", "0.5"], stdin=stdin)
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert "error" in records[0] and records[0]["index"] == 0
    assert records[1]["index"] == 1 and "mu" in records[1]


def test_compute_disconnected_becomes_error_record(monkeypatch, capsys):
    g6 = emit_graph6(parse_graph6(P4).remove_edges([(1, 2)]))
    code, out, _ = run(monkeypatch, capsys, ["compute", "--alpha", "0.5"], stdin=g6 + "\n")
    assert code == 0
    rec = json.loads(out.splitlines()[0])
    assert rec["error"].startswith("NotConnectedError")


def test_compute_csv(monkeypatch, capsys):
    stdin = P4 + "\nbad(\n"
    code, out, _ = run(monkeypatch, capsys,
                       ["compute", "--alpha", "0.5", "--format", "csv"], stdin=stdin)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "index,graph6,n,alpha,mu,energy,error"
    assert len(lines) == 3
    assert lines[1].startswith(f"0,{P4},4,0.5,")
    assert '"' in lines[2]  # the error cell is quoted


def test_compute_reads_files(monkeypatch, capsys, tmp_path):
    f = tmp_path / "in.g6"
    f.write_text(P4 + "\n" + C4 + "\n")
    out_path = tmp_path / "out.ndjson"
    code, _, _ = run(monkeypatch, capsys,
                     ["compute", "--alpha", "0.25", str(f), "--out", str(out_path)])
    assert code == 0
    records = [json.loads(line) for line in out_path.read_text().splitlines()]
    assert [r["index"] for r in records] == [0, 1]


def test_compute_rejects_bad_alpha(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["compute", "--alpha", "1.0"], stdin="")
    assert code == 2 and "error" in err
    code, _, _ = run(monkeypatch, capsys, ["compute", "--alpha", "-0.1"], stdin="")
    assert code == 2


def test_compute_nonconvergence_exit(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys,
                       ["compute", "--alpha", "0.5", "--tol-residual", "1e-30"],
                       stdin=P4 + "\n")
    assert code == 3
    rec = json.loads(out.splitlines()[0])
    assert rec["error"].startswith("ConvergenceError")


def test_negative_tolerance_is_config_error(monkeypatch, capsys):
    code, _, _ = run(monkeypatch, capsys,
                     ["compute", "--tol-strict", "-1"], stdin=P4 + "\n")
    assert code == 2


def test_bad_workers_env(monkeypatch, capsys):
    monkeypatch.setenv("DALPHA_WORKERS", "many")
    code, _, err = run(monkeypatch, capsys, ["compute"], stdin="")
    assert code == 2 and "DALPHA_WORKERS" in err


def test_workers_env_applies(monkeypatch, capsys):
    monkeypatch.setenv("DALPHA_WORKERS", "2")
    code, out, _ = run(monkeypatch, capsys, ["compute", "--alpha", "0.5"],
                       stdin=P4 + "\n" + C4 + "\n")
    assert code == 0
    assert [json.loads(x)["index"] for x in out.splitlines()] == [0, 1]


def test_bounds_record_shape(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["bounds", "--alpha", "0.5"], stdin=C4 + "\n")
    assert code == 0
    rec = json.loads(out.splitlines()[0])
    assert all(b["holds"] for b in rec["bounds"].values())
    # the 4-cycle is transmission regular: gap bound skipped, others at equality
    assert "transmission_gap_upper" in rec["skipped"]
    assert rec["bounds"]["max_transmission_upper"]["equality_observed"] is True
    assert rec["eigenvalue_interval"]["all_in_interval"] is True


def test_bounds_csv(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys,
                       ["bounds", "--alpha", "0", "--format", "csv"], stdin=P4 + "\n")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "index,graph6,n,alpha,all_hold,bounds,min_gap,error"
    assert lines[1].split(",")[4] == "True"


def test_census_stdout(monkeypatch, capsys):
    code, out, err = run(monkeypatch, capsys, ["census", "--family", "trees", "--n", "5"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert "3 graphs" in err
    assert any(are_isomorphic(parse_graph6(s), star_graph(5)) for s in lines)


def test_census_filtered_to_file(monkeypatch, capsys, tmp_path):
    path = tmp_path / "t6.g6"
    code, _, err = run(monkeypatch, capsys,
                       ["census", "--family", "trees", "--n", "6",
                        "--filter", "max_degree=3", "--out", str(path)])
    assert code == 0
    want = filter_census(all_trees(6), "max_degree=3")
    lines = [s for s in path.read_text().splitlines() if s]
    assert len(lines) == want.count
    meta = json.loads((tmp_path / "t6.g6.json").read_text())
    assert meta["count"] == want.count and meta["filter"] == "max_degree=3"
    assert f"{want.count} graphs" in err


def test_census_bad_family_and_limit(monkeypatch, capsys):
    code, _, _ = run(monkeypatch, capsys, ["census", "--family", "planar", "--n", "5"])
    assert code == 2
    code, _, _ = run(monkeypatch, capsys, ["census", "--family", "trees", "--n", "40"])
    assert code == 2


def test_transform_inline_graph(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys,
                       ["transform", "--name", "contract_cut_edge", "--graph", P4,
                        "--u", "1", "--v", "2", "--alpha", "0.25"])
    assert code == 0
    doc = json.loads(out)
    assert doc["direction_claim"] == "decrease" and doc["claim_verified"] is True
    assert are_isomorphic(parse_graph6(doc["after"]), star_graph(4))


def test_transform_from_stdin_with_parts(monkeypatch, capsys):
    from dalpha.graphs import Graph

    g6 = emit_graph6(Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)]))
    code, out, _ = run(monkeypatch, capsys,
                       ["transform", "--name", "relocate_branches",
                        "--parts", "0,1|0,2|0,3,4", "--k", "2",
                        "--v-prime", "1", "--v-dprime", "2"], stdin=g6 + "\n")
    assert code == 0
    doc = json.loads(out)
    assert doc["direction_claim"] == "one_of_two_increases"
    assert "after_b" in doc and doc["claim_verified"] is True


def test_transform_missing_parameter(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys,
                       ["transform", "--name", "contract_cut_edge", "--graph", P4])
    assert code == 2 and "--u" in err


def test_transform_precondition_failure(monkeypatch, capsys):
    code, _, _ = run(monkeypatch, capsys,
                     ["transform", "--name", "contract_cut_edge", "--graph", P4,
                      "--u", "0", "--v", "1"])
    assert code == 2


def test_transform_unknown_name(monkeypatch, capsys):
    code, _, _ = run(monkeypatch, capsys,
                     ["transform", "--name", "mystery", "--graph", P4])
    assert code == 2


def test_transform_no_input(monkeypatch, capsys):
    code, _, _ = run(monkeypatch, capsys,
                     ["transform", "--name", "contract_cut_edge", "--u", "1", "--v", "2"],
                     stdin="")
    assert code == 2


def test_transform_bad_parts_string(monkeypatch, capsys):
    code, _, _ = run(monkeypatch, capsys,
                     ["transform", "--name", "relocate_branches", "--graph", P4,
                      "--parts", "a|b", "--k", "2", "--v-prime", "1", "--v-dprime", "2"])
    assert code == 2


def test_verify_quick(monkeypatch, capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, _, err = run(monkeypatch, capsys,
                       ["verify", "--quick", "--instances", "6",
                        "--alpha", "0", "--alpha", "0.5",
                        "--out", str(out_path)])
    assert code == 0
    reports = json.loads(out_path.read_text())
    assert isinstance(reports, list) and reports
    assert {"theorem_id", "verdict", "witnesses"} <= set(reports[0])
    assert "PASS" in err and "(exploratory)" in err


def test_verify_csv_format(monkeypatch, capsys, tmp_path):
    out_path = tmp_path / "report.csv"
    code, _, _ = run(monkeypatch, capsys,
                     ["verify", "--quick", "--instances", "4", "--alpha", "0.5",
                      "--format", "csv", "--out", str(out_path)])
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == "theorem_id,n,alpha,verdict,margin,witness"
    assert len(lines) > 10


def test_verify_exit_one_on_failure(monkeypatch, capsys):
    fail = TheoremReport("broken", (5,), (0.5,), 1, "fail", (), None, ())
    monkeypatch.setattr("dalpha.cli.run_suite", lambda cfg: [fail])
    code, _, err = run(monkeypatch, capsys, ["verify"])
    assert code == 1 and "FAIL" in err
