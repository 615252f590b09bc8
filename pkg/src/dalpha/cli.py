"""Command line interface.

Record-oriented commands (compute, bounds) stream graph6 lines from files
or stdin, emit one JSON object (or CSV row) per record in input order,
and keep going past malformed or disconnected lines by emitting error
records. verify runs the full theorem suite; census materializes graph
families; transform applies a single rewrite.

Exit codes: 0 ok, 1 verification failure, 2 usage or configuration
error, 3 numeric non-convergence.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from dalpha._version import __version__
from dalpha.bounds import all_bound_reports, check_nonmaximal_eigenvalues
from dalpha.census import all_connected, all_trees, all_unicyclic, filter_census, save_census
from dalpha.errors import (
    AlphaDomainError,
    ConfigError,
    ConvergenceError,
    DalphaError,
    Graph6Error,
    GraphInputError,
    LimitError,
    NotConnectedError,
    TransformError,
)
from dalpha.graph6 import emit_graph6, parse_graph6
from dalpha.graphs import Graph, distance_profile, is_transmission_regular
from dalpha.spectral import Tolerances, full_spectrum, validate_alpha
from dalpha.transforms import (
    evaluate_branch_relocation,
    evaluate_cut_edge_contraction,
    evaluate_neighbor_transfer,
    shift_pendant_path_pair,
    shift_two_site_pendant_paths,
)
from dalpha.verify import (
    DEFAULT_ALPHA_GRID,
    SuiteConfig,
    reports_to_csv,
    reports_to_json,
    run_suite,
    suite_passed,
)

_BATCH = 256


def _f15(x):
    if isinstance(x, float):
        return None if not math.isfinite(x) else float(f"{x:.15g}")
    return x


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(float(v)) for v in obj]
    if isinstance(obj, (np.floating, np.integer)):
        obj = obj.item()
    return _f15(obj)


def _default_workers() -> int:
    raw = os.environ.get("DALPHA_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ConfigError(f"DALPHA_WORKERS must be an integer, got {raw!r}")


def _tolerances(args) -> Tolerances:
    kw = {}
    if getattr(args, "tol_residual", None) is not None:
        kw["residual_scale"] = args.tol_residual
    if getattr(args, "tol_strict", None) is not None:
        kw["strict_scale"] = args.tol_strict
    tol = Tolerances(**kw)
    if tol.residual_scale <= 0 or tol.strict_scale <= 0 or tol.tie_scale <= 0:
        raise ConfigError("tolerance scales must be positive")
    return tol


def _alphas(args) -> list:
    raw = args.alpha if args.alpha else list(DEFAULT_ALPHA_GRID)
    return [validate_alpha(a) for a in raw]


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", encoding="ascii"), True


def _input_lines(paths):
    """Yield (index, line) over all inputs; '-' means stdin."""
    idx = 0
    for path in paths or ["-"]:
        stream = sys.stdin if path == "-" else open(path, "r", encoding="ascii")
        try:
            for line in stream:
                line = line.strip()
                if line:
                    yield idx, line
                    idx += 1
        finally:
            if stream is not sys.stdin:
                stream.close()


def _batched(it, size):
    batch = []
    for item in it:
        batch.append(item)
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


def _map_records(fn, items, workers):
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items))


def _record_error(index, line, exc) -> dict:
    return {"index": index, "graph6": line, "error": f"{type(exc).__name__}: {exc}"}


class _RecordRunner:
    """Shared streaming loop for compute and bounds."""

    def __init__(self, args, per_graph):
        self.alphas = _alphas(args)
        self.tol = _tolerances(args)
        self.workers = args.workers
        self.per_graph = per_graph
        self.saw_nonconvergence = False

    def record(self, item):
        index, line = item
        try:
            g = parse_graph6(line)
            return self.per_graph(index, line, g, self.alphas, self.tol)
        except ConvergenceError as e:
            self.saw_nonconvergence = True
            return [_record_error(index, line, e)]
        except (Graph6Error, GraphInputError, NotConnectedError, DalphaError) as e:
            return [_record_error(index, line, e)]

    def run(self, args, csv_header, csv_row):
        out, close = _open_out(args.out)
        try:
            if args.format == "csv":
                print(csv_header, file=out)
            for batch in _batched(_input_lines(args.inputs), _BATCH):
                for records in _map_records(self.record, batch, self.workers):
                    for rec in records:
                        if args.format == "csv":
                            print(csv_row(rec), file=out)
                        else:
                            print(json.dumps(_jsonable(rec), sort_keys=True), file=out)
        finally:
            if close:
                out.close()
        return 3 if self.saw_nonconvergence else 0


def _compute_one(index, line, g: Graph, alphas, tol) -> list:
    prof = distance_profile(g)
    records = []
    for a in alphas:
        spec = full_spectrum(g, a, tol)
        shift = 2.0 * a * prof.sigma / g.n
        energy = float(sum(abs(ev - shift) for ev in spec.eigenvalues))
        records.append({
            "index": index,
            "graph6": line,
            "n": g.n,
            "alpha": a,
            "mu": spec.mu,
            "spectrum": list(spec.eigenvalues),
            "perron": list(spec.perron),
            "transmissions": list(prof.transmissions),
            "sigma": prof.sigma,
            "energy": energy,
            "trivial": spec.trivial,
        })
    return records


def cmd_compute(args) -> int:
    runner = _RecordRunner(args, _compute_one)

    def row(rec):
        if "error" in rec:
            return f'{rec["index"]},{rec["graph6"]},,,,,"{rec["error"]}"'
        return (f'{rec["index"]},{rec["graph6"]},{rec["n"]},{_f15(rec["alpha"])},'
                f'{_f15(rec["mu"])},{_f15(rec["energy"])},')

    return runner.run(args, "index,graph6,n,alpha,mu,energy,error", row)


def _bounds_one(index, line, g: Graph, alphas, tol) -> list:
    records = []
    for a in alphas:
        reports = {name: rep.to_dict() for name, rep in all_bound_reports(g, a, tol).items()}
        skipped = {}
        if is_transmission_regular(g):
            skipped["transmission_gap_upper"] = "graph is transmission regular; the gap bound does not apply"
        rec = {"index": index, "graph6": line, "n": g.n, "alpha": a,
               "bounds": reports, "skipped": skipped}
        if g.n >= 2:
            spec = full_spectrum(g, a, tol)
            rec["eigenvalue_interval"] = check_nonmaximal_eigenvalues(g, a, spec.eigenvalues, tol).to_dict()
        records.append(rec)
    return records


def cmd_bounds(args) -> int:
    runner = _RecordRunner(args, _bounds_one)

    def row(rec):
        if "error" in rec:
            return f'{rec["index"]},{rec["graph6"]},,,,,,"{rec["error"]}"'
        worst = min((b["gap"] for b in rec["bounds"].values() if b["gap"] is not None), default=None)
        ok = all(b["holds"] for b in rec["bounds"].values())
        return (f'{rec["index"]},{rec["graph6"]},{rec["n"]},{_f15(rec["alpha"])},'
                f'{ok},{len(rec["bounds"])},{_f15(worst)},')

    return runner.run(args, "index,graph6,n,alpha,all_hold,bounds,min_gap,error", row)


def cmd_verify(args) -> int:
    cfg = SuiteConfig(
        alphas=tuple(_alphas(args)),
        transform_instances=args.instances,
        seed=args.seed,
        workers=args.workers,
        tol=_tolerances(args),
    )
    if args.quick:
        cfg = SuiteConfig(
            alphas=cfg.alphas,
            tree_min_ns=(4, 5, 6),
            tree_second_ns=(5, 6),
            unicyclic_min_ns=(8,),
            unicyclic_exploratory_ns=(5,),
            max_degree_tree_ns=(5, 6),
            max_degree_connected_ns=(5,),
            global_connected_ns=(4, 5),
            global_tree_ns=(4, 5, 6),
            clique_ns=(4, 5),
            odd_cycle_ns=(4, 5, 6),
            bounds_tree_ns=(8,),
            bounds_unicyclic_ns=(8,),
            bounds_connected_ns=(4, 5, 6),
            transform_instances=min(args.instances, 25),
            seed=args.seed,
            workers=args.workers,
            tol=cfg.tol,
        )
    reports = run_suite(cfg)
    out, close = _open_out(args.out)
    try:
        out.write(reports_to_csv(reports) if args.format == "csv" else reports_to_json(reports))
    finally:
        if close:
            out.close()
    for r in reports:
        tag = " (exploratory)" if r.exploratory else ""
        print(f"{r.verdict.upper():4s} {r.theorem_id} n={','.join(str(x) for x in r.n_range)}{tag}",
              file=sys.stderr)
    return 0 if suite_passed(reports) else 1


def cmd_census(args) -> int:
    maker = {"trees": all_trees, "unicyclic": all_unicyclic, "connected": all_connected}
    if args.family not in maker:
        raise ConfigError(f"unknown family {args.family!r}; choose trees, unicyclic or connected")
    census = maker[args.family](args.n)
    for expr in args.filter or []:
        census = filter_census(census, expr)
    if args.out in (None, "-"):
        for g in census.graphs:
            print(emit_graph6(g))
    else:
        save_census(census, args.out)
    print(f"{census.count} graphs ({census.family}, n={census.n}"
          + (f", filter={census.filter}" if census.filter else "") + ")", file=sys.stderr)
    return 0


def _read_single_graph(args) -> Graph:
    if args.graph:
        return parse_graph6(args.graph)
    for _, line in _input_lines(args.inputs):
        return parse_graph6(line)
    raise ConfigError("no input graph: pass --graph or a graph6 file/stdin")


def _parse_parts(raw: str) -> tuple:
    try:
        return tuple(tuple(int(x) for x in chunk.split(",")) for chunk in raw.split("|"))
    except ValueError:
        raise ConfigError(f"cannot parse partition {raw!r}; expected like '0,1,2|0,3|0,4,5'")


def _require(args, names):
    missing = [n for n in names if getattr(args, n.replace("-", "_"), None) is None]
    if missing:
        raise ConfigError(f"transform {args.name} needs --" + ", --".join(missing))


def cmd_transform(args) -> int:
    g = _read_single_graph(args)
    a = validate_alpha(args.alpha)
    tol = _tolerances(args)
    name = args.name
    if name == "contract_cut_edge":
        _require(args, ["u", "v"])
        out = evaluate_cut_edge_contraction(g, args.u, args.v, a, tol)
    elif name == "relocate_branches":
        _require(args, ["parts", "k", "v-prime", "v-dprime"])
        kk = tuple(int(x) for x in args.k.split(","))
        out = evaluate_branch_relocation(g, _parse_parts(args.parts), kk, args.v_prime, args.v_dprime, a, tol)
    elif name == "transfer_neighbor_sets":
        _require(args, ["parts", "u-prime", "v-prime"])
        out = evaluate_neighbor_transfer(g, _parse_parts(args.parts), args.u_prime, args.v_prime, a, tol)
    elif name == "shift_pendant_path_pair":
        _require(args, ["u", "p", "q"])
        out = shift_pendant_path_pair(g, args.u, args.p, args.q, a, tol)
    elif name == "shift_two_site_pendant_paths":
        _require(args, ["u", "v", "p", "q"])
        out = shift_two_site_pendant_paths(g, args.u, args.v, args.p, args.q, a, tol)
    else:
        raise ConfigError(f"unknown transform {name!r}")
    stream, close = _open_out(args.out)
    try:
        print(json.dumps(_jsonable(out.to_dict()), sort_keys=True, indent=2), file=stream)
    finally:
        if close:
            stream.close()
    return 0


def _add_io(p):
    p.add_argument("--out", default="-", help="output path, '-' for stdout (default)")
    p.add_argument("--format", choices=("json", "csv"), default="json",
                   help="output format (default json)")


def _add_tol(p):
    p.add_argument("--tol-residual", type=float, default=None, metavar="S",
                   help="residual tolerance scale (default 1e-10)")
    p.add_argument("--tol-strict", type=float, default=None, metavar="S",
                   help="strict-inequality tolerance scale (default 1e-9)")


def _add_workers(p):
    p.add_argument("--workers", type=int, default=None,
                   help="worker threads (default: DALPHA_WORKERS or 1)")


def _add_alpha(p):
    p.add_argument("--alpha", type=float, action="append", metavar="A",
                   help="alpha value in [0,1); repeatable (default: the standard 12-point grid)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dalpha",
        description="Distance alpha-matrix spectra: computation, bounds, rewrites and exhaustive verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="spectra, transmissions and energy per graph and alpha")
    p.add_argument("inputs", nargs="*", help="graph6 files, '-' for stdin (default)")
    _add_alpha(p), _add_io(p), _add_tol(p), _add_workers(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("bounds", help="evaluate every spectral-radius bound per graph and alpha")
    p.add_argument("inputs", nargs="*", help="graph6 files, '-' for stdin (default)")
    _add_alpha(p), _add_io(p), _add_tol(p), _add_workers(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run the extremal-theorem verification suite")
    _add_alpha(p), _add_io(p), _add_tol(p), _add_workers(p)
    p.add_argument("--seed", type=int, default=20260819, help="seed for the transform sweeps")
    p.add_argument("--instances", type=int, default=200,
                   help="random instances per transformation (default 200)")
    p.add_argument("--quick", action="store_true", help="reduced ranges for a fast smoke run")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="emit a graph family as graph6 lines")
    p.add_argument("--family", required=True, help="trees, unicyclic or connected")
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--filter", action="append", metavar="EXPR",
                   help="max_degree=K, clique=K, odd_cycle or exclude_iso=G6; repeatable")
    p.add_argument("--out", default="-", help="output path (writes a JSON sidecar next to it)")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("transform", help="apply one rewrite and report the spectral effect")
    p.add_argument("inputs", nargs="*", help="graph6 file holding the input graph, '-' for stdin")
    p.add_argument("--name", required=True,
                   help="contract_cut_edge, relocate_branches, transfer_neighbor_sets, "
                        "shift_pendant_path_pair or shift_two_site_pendant_paths")
    p.add_argument("--graph", help="input graph as a graph6 string (alternative to file/stdin)")
    p.add_argument("--alpha", type=float, default=0.5, help="alpha value (default 0.5)")
    p.add_argument("--u", type=int, help="first vertex")
    p.add_argument("--v", type=int, help="second vertex")
    p.add_argument("--p", type=int, help="longer pendant path length")
    p.add_argument("--q", type=int, help="shorter pendant path length")
    p.add_argument("--parts", help="partition as comma lists joined by '|', e.g. '0,1,2|0,3|0,4,5'")
    p.add_argument("--k", help="comma list of branch indexes to relocate (2-based slots)")
    p.add_argument("--v-prime", type=int, dest="v_prime", help="target vertex in branch 0 / part 1")
    p.add_argument("--v-dprime", type=int, dest="v_dprime", help="target vertex in branch 1")
    p.add_argument("--u-prime", type=int, dest="u_prime", help="target neighbor in part 0")
    _add_io(p), _add_tol(p)
    p.set_defaults(func=cmd_transform)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", None) is None:
        try:
            args.workers = _default_workers()
        except ConfigError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except ConvergenceError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (ConfigError, LimitError, TransformError, Graph6Error, GraphInputError,
            NotConnectedError, AlphaDomainError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
