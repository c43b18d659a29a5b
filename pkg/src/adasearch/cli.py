"""Command-line entry point.

Subcommands:
    gen     write a generated dataset file from a distribution spec
    search  run one query against a dataset file and print the result
    bench   run a benchmark suite and emit a report

Exit codes: 0 success, 1 usage error, 2 data error (parse / not sorted /
out of range), 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import secrets
import sys

from . import bench as bench_mod
from .bench import ADAPTIVE, SuiteConfig, TRIAL_ALGORITHMS, emit_report, run_suite
from .dataset import DatasetError, load_dataset
from .distributions import DistributionSpec, InvalidSpec, KINDS, generate
from .engine import EngineConfig, SearchEngine
from .search import KERNELS
from .selector import SelectorConfig

EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_selector_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tau", type=float, default=1.0,
                   help="uniformity threshold for choosing interpolation (default 1.0)")
    p.add_argument("--min-interp-len", type=int, default=16,
                   help="minimum dataset length for interpolation (default 16)")
    p.add_argument("--gap-samples", type=int, default=4096,
                   help="maximum gaps examined by the selector (default 4096)")
    p.add_argument("--cache-size", type=int, default=1024,
                   help="result cache capacity (default 1024)")


def _engine_config(args, override=None) -> EngineConfig:
    selector = SelectorConfig(tau=args.tau, min_interp_len=args.min_interp_len,
                              max_gap_samples=args.gap_samples)
    return EngineConfig(selector=selector, cache_capacity=args.cache_size,
                        override=override)


def build_parser() -> _Parser:
    parser = _Parser(prog="adasearch")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a dataset file")
    gen.add_argument("--kind", choices=KINDS, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument("--out", default="-", help="output path, '-' for stdout")
    gen.add_argument("--lo", type=int, default=None, help="uniform/clustered key range low")
    gen.add_argument("--hi", type=int, default=None, help="uniform/clustered key range high")
    gen.add_argument("--clusters", type=int, default=None)
    gen.add_argument("--spread", type=float, default=None)
    gen.add_argument("--scale", type=float, default=None, help="exponential scale")
    gen.add_argument("--zipf-s", type=float, default=None, help="zipf exponent")
    gen.add_argument("--universe", type=int, default=None, help="zipf universe size")

    search = sub.add_parser("search", help="search a dataset file for one target")
    search.add_argument("dataset", help="path to a line-delimited integer dataset")
    search.add_argument("target", type=int)
    search.add_argument("--algorithm", choices=sorted(KERNELS), default=None,
                        help="force a kernel instead of adaptive selection")
    _add_selector_flags(search)

    bench = sub.add_parser("bench", help="run the benchmark suite")
    bench.add_argument("--seed", type=int, default=None,
                       help="suite seed; generated from entropy if absent")
    bench.add_argument("--format", choices=(bench_mod.TABLE, bench_mod.CSV, bench_mod.JSONL),
                       default=bench_mod.TABLE)
    bench.add_argument("--out", default="-", help="report path, '-' for stdout")
    bench.add_argument("--queries", type=int, default=1000)
    bench.add_argument("--sizes", type=int, nargs="+", default=None)
    bench.add_argument("--distributions", nargs="+", choices=KINDS, default=None)
    bench.add_argument("--algorithms", nargs="+", choices=TRIAL_ALGORITHMS, default=None)
    bench.add_argument("--query-mode", choices=("members", "mixed", "repeated"),
                       default="members")
    bench.add_argument("--repeat-fraction", type=float, default=0.0)
    _add_selector_flags(bench)
    return parser


def _write_out(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)


def _cmd_gen(args) -> int:
    params = {}
    for key, val in (("lo", args.lo), ("hi", args.hi), ("clusters", args.clusters),
                     ("spread", args.spread), ("scale", args.scale),
                     ("s", args.zipf_s), ("m", args.universe)):
        if val is not None:
            params[key] = val
    seed = args.seed if args.seed is not None else secrets.randbits(63)
    if args.seed is None:
        print(f"seed: {seed}", file=sys.stderr)
    ds = generate(DistributionSpec(args.kind, args.n, seed, params))
    lines = "".join(f"{v}\n" for v in ds.values)
    _write_out(args.out, lines)
    return 0


def _cmd_search(args) -> int:
    with open(args.dataset, "r", encoding="utf-8") as f:
        ds = load_dataset(f)
    engine = SearchEngine(_engine_config(args, override=args.algorithm))
    reg = engine.register(ds)
    qr = engine.search(reg, args.target)
    print(f"found: {qr.outcome.index is not None}")
    print(f"index: {qr.outcome.index if qr.outcome.index is not None else -1}")
    print(f"probes: {qr.outcome.trace.probes}")
    print(f"algorithm: {qr.algorithm_used}")
    print(f"selected: {reg.choice.algorithm} ({reg.choice.reason})")
    return 0


def _cmd_bench(args) -> int:
    seed = args.seed if args.seed is not None else secrets.randbits(63)
    if args.seed is None:
        print(f"seed: {seed}", file=sys.stderr)
    cfg = SuiteConfig(
        distributions=tuple(args.distributions) if args.distributions else SuiteConfig.distributions,
        sizes=tuple(args.sizes) if args.sizes else SuiteConfig.sizes,
        algorithms=tuple(args.algorithms) if args.algorithms else SuiteConfig.algorithms,
        queries=args.queries,
        query_mode=args.query_mode,
        repeat_fraction=args.repeat_fraction,
        seed=seed,
        engine=_engine_config(args),
    )
    records = run_suite(cfg)
    _write_out(args.out, emit_report(records, args.format))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "search":
            return _cmd_search(args)
        return _cmd_bench(args)
    except (DatasetError, OverflowError, InvalidSpec, FileNotFoundError) as exc:
        print(f"adasearch: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"adasearch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"adasearch: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
