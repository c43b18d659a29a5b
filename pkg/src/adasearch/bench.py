"""Benchmark harness: trials, suites, and report emission.

A trial runs one algorithm against one generated dataset and query stream and
aggregates probe counts, found rate, cache hit rate, and wall time. Within a
suite cell the competing algorithms receive the identical dataset and query
stream, so probe differences are attributable to the algorithm alone.
"""

from __future__ import annotations

import io
import json
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .dataset import SortedDataset
from .distributions import (
    DistributionSpec,
    EXPONENTIAL,
    MEMBERS,
    QuerySpec,
    UNIFORM,
    generate,
    generate_queries,
)
from .engine import EngineConfig, SearchEngine
from .search import BINARY, INTERPOLATION, LINEAR
from .selector import SelectorConfig

ADAPTIVE = "adaptive"

TRIAL_ALGORITHMS = (BINARY, INTERPOLATION, LINEAR, ADAPTIVE)

CSV_HEADER = "algorithm,distribution,n,queries,found_rate,mean_probes,p99_probes,cache_hit_rate,wall_time_ns,seed"

TABLE = "table"
CSV = "csv"
JSONL = "jsonl"


class UnknownFormat(ValueError):
    pass


class SpotCheckError(AssertionError):
    """A query's found-ness disagreed with the first-occurrence oracle."""


@dataclass(frozen=True)
class TrialRecord:
    algorithm: str
    distribution: str
    n: int
    queries: int
    found_rate: float
    mean_probes: float
    p99_probes: float
    cache_hit_rate: Optional[float]
    wall_time_ns: int
    seed: str


def first_occurrence(values_arr: np.ndarray, target: int) -> int:
    """Index of the first occurrence of target, or -1. Bisection-free
    semantics of a left-to-right scan, used for fast found-ness spot checks."""
    i = int(np.searchsorted(values_arr, target, side="left"))
    if i < len(values_arr) and int(values_arr[i]) == target:
        return i
    return -1


def _linear_probe_counts(values_arr: np.ndarray, targets: list[int]) -> tuple[list[int], list[bool]]:
    """Probe counts a first-occurrence scan would incur, computed in bulk.

    Equivalent to running search.linear_search per target (index + 1 probes on
    a find, n probes on a miss); verified against the kernel in the tests.
    """
    n = len(values_arr)
    t = np.asarray(targets, dtype=np.int64)
    idx = np.searchsorted(values_arr, t, side="left")
    found = (idx < n) & (values_arr[np.minimum(idx, n - 1)] == t) if n else np.zeros(len(t), bool)
    probes = np.where(found, idx + 1, n)
    return probes.tolist(), found.tolist()


def run_trial(
    engine_cfg: EngineConfig,
    spec: DistributionSpec,
    query_spec: QuerySpec,
    algorithm: str = ADAPTIVE,
    dataset: SortedDataset | None = None,
    targets: list[int] | None = None,
) -> TrialRecord:
    """Execute one benchmark cell. A pre-generated dataset/target stream may
    be passed in so paired trials share them exactly."""
    if algorithm not in TRIAL_ALGORITHMS:
        raise ValueError(f"unknown trial algorithm: {algorithm!r}")
    ds = dataset if dataset is not None else generate(spec)
    if targets is None:
        targets = generate_queries(ds, query_spec)
    values_arr = np.asarray(ds.values, dtype=np.int64)

    cache_hit_rate: Optional[float] = None
    if algorithm == LINEAR:
        t0 = time.perf_counter_ns()
        probes, found = _linear_probe_counts(values_arr, targets)
        wall = time.perf_counter_ns() - t0
    else:
        override = None if algorithm == ADAPTIVE else algorithm
        cfg = EngineConfig(selector=engine_cfg.selector,
                           cache_capacity=engine_cfg.cache_capacity,
                           override=override)
        engine = SearchEngine(cfg)
        reg = engine.register(ds)
        search = engine.search
        probes = []
        found = []
        t0 = time.perf_counter_ns()
        for target in targets:
            qr = search(reg, target)
            probes.append(qr.outcome.trace.probes)
            found.append(qr.outcome.index is not None)
        wall = time.perf_counter_ns() - t0
        if algorithm == ADAPTIVE:
            cache_hit_rate = engine.report().cache.hit_rate

    # found-ness spot check on a random 1% subsample
    if targets:
        check_rng = np.random.default_rng(query_spec.seed + 0x5F07)
        k = max(1, len(targets) // 100)
        for i in check_rng.integers(0, len(targets), size=k):
            expected = first_occurrence(values_arr, targets[i]) >= 0
            if found[i] != expected:
                raise SpotCheckError(
                    f"query {targets[i]}: {algorithm} found={found[i]}, oracle found={expected}")

    q = len(targets)
    return TrialRecord(
        algorithm=algorithm,
        distribution=spec.summary(),
        n=len(ds),
        queries=q,
        found_rate=(sum(found) / q) if q else 0.0,
        mean_probes=(sum(probes) / q) if q else 0.0,
        p99_probes=float(np.percentile(probes, 99)) if q else 0.0,
        cache_hit_rate=cache_hit_rate,
        wall_time_ns=int(wall),
        seed=f"{spec.seed}/{query_spec.seed}",
    )


@dataclass(frozen=True)
class SuiteConfig:
    distributions: tuple[str, ...] = (UNIFORM, EXPONENTIAL)
    sizes: tuple[int, ...] = (2**10, 2**14, 2**18, 2**20)
    algorithms: tuple[str, ...] = (BINARY, INTERPOLATION, LINEAR, ADAPTIVE)
    queries: int = 1000
    query_mode: str = MEMBERS
    repeat_fraction: float = 0.0
    seed: int = 0
    engine: EngineConfig = field(default_factory=EngineConfig)


def _cell_seeds(base_seed: int, cell_index: int) -> tuple[int, int]:
    # deterministic per-cell derivation; dataset and query streams independent
    s = base_seed * 1_000_003 + cell_index * 2
    return s, s + 1


def run_suite(cfg: SuiteConfig) -> list[TrialRecord]:
    """One TrialRecord per (distribution, size, algorithm) cell; dataset and
    query stream are generated once per (distribution, size) group and shared
    across algorithms. Fails fast on the first generation error."""
    records: list[TrialRecord] = []
    cell_index = 0
    for kind in cfg.distributions:
        for n in cfg.sizes:
            ds_seed, q_seed = _cell_seeds(cfg.seed, cell_index)
            cell_index += 1
            spec = DistributionSpec(kind, n, ds_seed)
            qs = QuerySpec(cfg.queries, cfg.query_mode, cfg.repeat_fraction, q_seed)
            try:
                ds = generate(spec)
                targets = generate_queries(ds, qs)
            except Exception as exc:
                raise RuntimeError(f"suite cell ({kind}, n={n}) failed: {exc}") from exc
            for algorithm in cfg.algorithms:
                records.append(run_trial(cfg.engine, spec, qs, algorithm,
                                         dataset=ds, targets=targets))
    return records


def _row_fields(r: TrialRecord) -> list[str]:
    return [
        r.algorithm,
        r.distribution,
        str(r.n),
        str(r.queries),
        f"{r.found_rate:.4f}",
        f"{r.mean_probes:.2f}",
        f"{r.p99_probes:.2f}",
        "" if r.cache_hit_rate is None else f"{r.cache_hit_rate:.4f}",
        str(r.wall_time_ns),
        r.seed,
    ]


def emit_report(records: list[TrialRecord], fmt: str = TABLE) -> str:
    if fmt == CSV:
        lines = [CSV_HEADER]
        lines += [",".join(_row_fields(r)) for r in records]
        return "\n".join(lines) + "\n"
    if fmt == JSONL:
        out = io.StringIO()
        for r in records:
            out.write(json.dumps({
                "algorithm": r.algorithm,
                "distribution": r.distribution,
                "n": r.n,
                "queries": r.queries,
                "found_rate": round(r.found_rate, 4),
                "mean_probes": round(r.mean_probes, 2),
                "p99_probes": round(r.p99_probes, 2),
                "cache_hit_rate": None if r.cache_hit_rate is None else round(r.cache_hit_rate, 4),
                "wall_time_ns": r.wall_time_ns,
                "seed": r.seed,
            }) + "\n")
        return out.getvalue()
    if fmt == TABLE:
        header = CSV_HEADER.split(",")
        rows = [_row_fields(r) for r in records]
        widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
                  for i, h in enumerate(header)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
        lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
        return "\n".join(lines) + "\n"
    raise UnknownFormat(f"unknown report format: {fmt!r}")


def parse_csv(text: str) -> list[TrialRecord]:
    lines = [ln for ln in text.splitlines() if ln]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError("missing or malformed csv header")
    records = []
    for line in lines[1:]:
        f = line.split(",")
        records.append(TrialRecord(
            algorithm=f[0], distribution=f[1], n=int(f[2]), queries=int(f[3]),
            found_rate=float(f[4]), mean_probes=float(f[5]), p99_probes=float(f[6]),
            cache_hit_rate=None if f[7] == "" else float(f[7]),
            wall_time_ns=int(f[8]), seed=f[9],
        ))
    return records


def parse_jsonl(text: str) -> list[TrialRecord]:
    records = []
    for line in text.splitlines():
        if not line:
            continue
        d = json.loads(line)
        records.append(TrialRecord(
            algorithm=d["algorithm"], distribution=d["distribution"],
            n=d["n"], queries=d["queries"], found_rate=d["found_rate"],
            mean_probes=d["mean_probes"], p99_probes=d["p99_probes"],
            cache_hit_rate=d["cache_hit_rate"], wall_time_ns=d["wall_time_ns"],
            seed=d["seed"],
        ))
    return records
