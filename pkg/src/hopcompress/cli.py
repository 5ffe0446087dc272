"""Command-line interface: gen, compress, verify, eval, bench.

Exit codes: 0 success, 1 invalid configuration, 2 I/O failure,
3 internal self-check failure (a bug), 4 verification found violations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .compress import ProportionFunction, verify
from .datagen import BUILTIN_NAMES, FamilySpec, builtin, gen_gnm
from .errors import EdgeListFormatError, HopCompressError, SizeLimitError
from .evaluate import (
    bench_orderings,
    compression_ratio,
    run_strategy,
    sp_histogram_timed,
    stretch_check,
)
from .graph import Graph, canonical_edge, load_edge_list, write_edge_list
from .orderings import SaParams

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2
EXIT_INTERNAL = 3
EXIT_VIOLATION = 4

JOBS_ENV_VAR = "HOPCOMPRESS_JOBS"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # invalid flags/values are configuration errors
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_CONFIG)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load_graph(path: str) -> Graph:
    if path in BUILTIN_NAMES:
        return builtin(path)
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return load_edge_list(handle)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO) from exc
    except EdgeListFormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_CONFIG) from exc


def _parse_pf(text: str) -> ProportionFunction:
    try:
        return ProportionFunction.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"invalid --p value {text!r}: {exc}", EXIT_CONFIG) from exc


def _sa_params(args, seed: int) -> SaParams:
    try:
        return SaParams(
            iterations=args.sa_iters, t0=args.sa_t0, alpha=args.sa_alpha, seed=seed
        )
    except ValueError as exc:
        raise CliError(f"invalid SA parameters: {exc}", EXIT_CONFIG) from exc


def _write_text(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}", EXIT_IO) from exc


def _default_jobs() -> int:
    env = os.environ.get(JOBS_ENV_VAR)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise CliError(f"bad {JOBS_ENV_VAR} value {env!r}", EXIT_CONFIG) from None
    return 1


def cmd_compress(args) -> int:
    pf = _parse_pf(args.p)
    g = _load_graph(args.input)
    sa = _sa_params(args, args.seed)
    try:
        result = run_strategy(g, pf, args.ordering, seed=args.seed, sa_params=sa)
    except SizeLimitError as exc:
        raise CliError(str(exc), EXIT_CONFIG) from exc
    gc = Graph.from_edges(g.n, result.kept, labels=g.labels)
    report = verify(g, gc, pf)
    if not report.ok:
        print(
            f"internal error: output fails verification ({report.violations[0]})",
            file=sys.stderr,
        )
        return EXIT_INTERNAL

    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as handle:
                write_edge_list(gc, handle)
        except OSError as exc:
            raise CliError(f"cannot write {args.output}: {exc}", EXIT_IO) from exc

    ratio = Fraction(g.m - gc.m, g.m) if g.m else Fraction(0)
    payload = {
        "input": args.input,
        "n": g.n,
        "m": g.m,
        "kept": gc.m,
        "ratio": float(ratio),
        "ratio_exact": str(ratio),
        "p": str(pf),
        "t": pf.t,
        "strategy": result.strategy,
        "seed": result.seed,
        "seconds": result.seconds,
        "verified": report.ok,
    }
    text = json.dumps(payload, indent=2) + "\n"
    if args.report:
        _write_text(args.report, text)
    print(text, end="")
    return EXIT_OK


def cmd_verify(args) -> int:
    pf = _parse_pf(args.p)
    g = _load_graph(args.original)
    g_labels = g.labels if g.labels is not None else tuple(range(g.n))
    dense = {label: i for i, label in enumerate(g_labels)}

    compressed_path = args.compressed
    edges = []
    try:
        with open(compressed_path, "r", encoding="utf-8") as handle:
            raw = load_edge_list(handle)
    except OSError as exc:
        raise CliError(f"cannot read {compressed_path}: {exc}", EXIT_IO) from exc
    except EdgeListFormatError as exc:
        raise CliError(f"{compressed_path}: {exc}", EXIT_CONFIG) from exc
    labels = raw.labels or ()
    for u, v in raw.edges():
        lu, lv = labels[u], labels[v]
        if lu not in dense or lv not in dense:
            print(f"edge ({lu}, {lv}) uses a vertex absent from the original")
            return EXIT_VIOLATION
        edges.append(canonical_edge(dense[lu], dense[lv]))
    extra = [e for e in edges if not g.has_edge(*e)]
    if extra:
        lu, lv = (g_labels[x] for x in extra[0])
        print(f"edge ({lu}, {lv}) is not present in the original graph")
        return EXIT_VIOLATION

    gc = Graph.from_edges(g.n, edges, labels=g.labels)
    report = verify(g, gc, pf)
    if report.ok:
        print("ok")
        return EXIT_OK
    for violation in report.violations:
        label = g_labels[violation.vertex]
        print(
            f"violation: vertex {label} level {violation.level}: "
            f"{violation.achieved} reachable, needs {violation.required}"
        )
    return EXIT_VIOLATION


def cmd_gen(args) -> int:
    try:
        spec = FamilySpec(count=args.count, n=args.n, m=args.m, seed=args.seed)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_CONFIG) from exc
    outdir = Path(args.outdir)
    try:
        outdir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise CliError(f"cannot create {outdir}: {exc}", EXIT_IO) from exc
    for i in range(spec.count):
        g = gen_gnm(spec.n, spec.m, spec.seed + i)
        path = outdir / f"gnm_n{spec.n}_m{spec.m}_{i:03d}.txt"
        try:
            with open(path, "w", encoding="utf-8") as handle:
                write_edge_list(g, handle)
        except OSError as exc:
            raise CliError(f"cannot write {path}: {exc}", EXIT_IO) from exc
    print(f"wrote {spec.count} instance(s) to {outdir}")
    return EXIT_OK


def cmd_eval(args) -> int:
    if args.metric == "sp-hist":
        g = _load_graph(args.graph)
        hist_g, secs_g = sp_histogram_timed(g)
        if args.compressed is None:
            print(f"{'length':>8} {'pairs':>12}")
            for length, count in hist_g.lengths.items():
                print(f"{length:>8} {count:>12}")
            print(f"{'disc':>8} {hist_g.disconnected:>12}")
            print(f"bfs seconds: {secs_g:.6f}")
            return EXIT_OK
        gc = _load_graph(args.compressed)
        hist_c, secs_c = sp_histogram_timed(gc)
        all_lengths = sorted(set(hist_g.lengths) | set(hist_c.lengths))
        print(f"{'length':>8} {'original':>12} {'compressed':>12}")
        for length in all_lengths:
            print(
                f"{length:>8} {hist_g.lengths.get(length, 0):>12} "
                f"{hist_c.lengths.get(length, 0):>12}"
            )
        print(f"{'disc':>8} {hist_g.disconnected:>12} {hist_c.disconnected:>12}")
        speedup = secs_g / secs_c if secs_c > 0 else float("inf")
        print(f"bfs seconds: original {secs_g:.6f}, compressed {secs_c:.6f}, speed-up {speedup:.3f}")
        return EXIT_OK
    if args.metric == "stretch":
        g = _load_graph(args.graph)
        gc = _load_graph(args.compressed)
        report = stretch_check(g, gc, args.t)
        print(f"ok: {report.ok}  max stretch: {report.max_stretch}")
        return EXIT_OK if report.ok else EXIT_VIOLATION
    if args.metric == "ratio":
        g = _load_graph(args.graph)
        gc = _load_graph(args.compressed)
        try:
            ratio = compression_ratio(g, gc)
        except (ValueError, HopCompressError) as exc:
            raise CliError(str(exc), EXIT_CONFIG) from exc
        print(f"{float(ratio):.4f} ({ratio})")
        return EXIT_OK
    raise CliError(f"unknown eval metric {args.metric!r}", EXIT_CONFIG)


def cmd_bench(args) -> int:
    pf = _parse_pf(args.p)
    try:
        n, m, count = (int(part) for part in args.family.split(","))
        family = FamilySpec(count=count, n=n, m=m, seed=args.seed)
    except ValueError as exc:
        raise CliError(f"invalid --family value {args.family!r}: {exc}", EXIT_CONFIG) from exc
    strategies = [s.strip() for s in args.strategies.split(",") if s.strip()]
    sa = _sa_params(args, args.seed)
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    try:
        report = bench_orderings(
            family, pf, strategies, sa_params=sa, jobs=jobs
        )
    except ValueError as exc:
        raise CliError(str(exc), EXIT_CONFIG) from exc
    except RuntimeError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print(report.format_table(), end="")
    if args.report:
        _write_text(args.report, report.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hopcompress", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_compress = sub.add_parser("compress", help="compress a graph", add_help=True)
    p_compress.add_argument("input", help="edge-list file or builtin name")
    p_compress.add_argument("--p", required=True, help='proportions, e.g. "0.5,1" or "1/2,1"')
    p_compress.add_argument(
        "--ordering", default="random", choices=["random", "basic", "basic-random", "lp", "ec", "sa"]
    )
    p_compress.add_argument("--seed", type=int, default=0)
    p_compress.add_argument("-o", "--output", help="write the kept edge list here")
    p_compress.add_argument("--report", help="write the JSON run report here")
    _add_sa_flags(p_compress)
    p_compress.set_defaults(func=cmd_compress)

    p_verify = sub.add_parser("verify", help="check a compressed graph")
    p_verify.add_argument("original")
    p_verify.add_argument("compressed")
    p_verify.add_argument("--p", required=True)
    p_verify.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", help="generate random instances")
    p_gen.add_argument("outdir")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--m", type=int, required=True)
    p_gen.add_argument("--count", type=int, default=1)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.set_defaults(func=cmd_gen)

    p_eval = sub.add_parser("eval", help="graph metrics")
    eval_sub = p_eval.add_subparsers(dest="metric", required=True)
    p_hist = eval_sub.add_parser("sp-hist", help="shortest-path length histogram")
    p_hist.add_argument("graph")
    p_hist.add_argument("compressed", nargs="?")
    p_hist.set_defaults(func=cmd_eval)
    p_stretch = eval_sub.add_parser("stretch", help="removed-edge detour check")
    p_stretch.add_argument("graph")
    p_stretch.add_argument("compressed")
    p_stretch.add_argument("--t", type=int, required=True)
    p_stretch.set_defaults(func=cmd_eval)
    p_ratio = eval_sub.add_parser("ratio", help="deleted-edge fraction")
    p_ratio.add_argument("graph")
    p_ratio.add_argument("compressed")
    p_ratio.set_defaults(func=cmd_eval)

    p_bench = sub.add_parser("bench", help="compare ordering strategies")
    p_bench.add_argument("--family", required=True, help="N,M,COUNT")
    p_bench.add_argument("--p", required=True)
    p_bench.add_argument("--strategies", default="basic,lp,ec,sa")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--jobs", type=int, default=None, help=f"defaults to ${JOBS_ENV_VAR} or 1")
    p_bench.add_argument("--report", help="write the JSON report here")
    _add_sa_flags(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def _add_sa_flags(parser) -> None:
    parser.add_argument("--sa-iters", type=int, default=1000)
    parser.add_argument("--sa-t0", type=float, default=10.0)
    parser.add_argument("--sa-alpha", type=float, default=0.99)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except HopCompressError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
