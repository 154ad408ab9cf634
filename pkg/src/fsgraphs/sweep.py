"""Sweeps comparing oracle predictions against brute-force component counts."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .catalog import enumerate_connected_graphs, enumerate_trees, partitions_of
from .explorer import component_count
from .graph import (
    Graph,
    Partition,
    book,
    classify,
    complete_bipartite,
    complete_multipartite,
    cycle_graph,
    encode_graph6,
    parse_graph6,
    read_graph6_file,
    size_cap,
    stopwatch,
)
from .oracle import SIX, kappa, predict, predict_two_components

MODES = ("connectivity", "two_components", "kappa")
SOURCES = ("builtin", "trees", "cycles", "stopwatch")
FILTERS = ("all", "tree", "non_tree", "cycle", "bipartite", "non_bipartite")


@dataclass
class SweepConfig:
    n_min: int = 4
    n_max: int = 4
    mode: str = "connectivity"
    # "builtin", "trees", "cycles", "stopwatch" or a graph6 file path
    source: str = "builtin"
    graph_filter: str = "all"
    min_t: int = 2
    max_t: int | None = None
    k1: int | None = None
    exclude_star: bool = False
    # keep only instances whose X has no (n - k_t)-bridge
    require_no_top_bridge: bool = False
    parallelism: int = 1
    output: str | None = None
    format: str = "jsonl"
    record_timings: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.source not in SOURCES and not Path(self.source).is_file():
            raise ValueError(f"source {self.source!r} is neither builtin nor a readable file")
        if self.graph_filter not in FILTERS:
            raise ValueError(f"graph_filter must be one of {FILTERS}")
        if not 1 <= self.n_min <= self.n_max <= size_cap():
            raise ValueError(f"need 1 <= n_min <= n_max <= {size_cap()}")
        if self.format not in ("jsonl", "csv"):
            raise ValueError("format must be jsonl or csv")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")
        if self.mode == "connectivity":
            for n in range(self.n_min, self.n_max + 1):
                if n >= 4 and not self.partitions(n):
                    raise ValueError(f"no admissible partition for n={n}")

    def partitions(self, n: int) -> list[Partition]:
        out = []
        for p in partitions_of(n, max(self.min_t, 2), self.max_t):
            if self.k1 is not None and p.parts[0] != self.k1:
                continue
            if self.exclude_star and p.parts[-1] == n - 1:
                continue
            out.append(p)
        return out


def load_config(path: str | Path) -> SweepConfig:
    """JSON object, or `key = value` lines with # comments."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        raw = json.loads(text)
    else:
        raw = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            raw[key] = _coerce(value)
    known = {f.name for f in dataclasses.fields(SweepConfig)}
    unknown = set(raw) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return SweepConfig(**raw)


def _coerce(value: str):
    low = value.lower()
    if low in ("true", "yes"):
        return True
    if low in ("false", "no"):
        return False
    if low in ("none", "null", ""):
        return None
    try:
        return int(value)
    except ValueError:
        return value


def _graphs(cfg: SweepConfig, n: int) -> list[Graph]:
    if cfg.source == "builtin":
        return list(enumerate_connected_graphs(n))
    if cfg.source == "trees":
        return list(enumerate_trees(n))
    if cfg.source == "cycles":
        return [cycle_graph(n)] if n >= 3 else []
    if cfg.source == "stopwatch":
        return [stopwatch(n)] if n >= 4 else []
    return [g for g in _file_graphs(cfg.source) if g.n == n]


_file_cache: dict[str, list[Graph]] = {}


def _file_graphs(path: str) -> list[Graph]:
    if path not in _file_cache:
        _file_cache[path] = read_graph6_file(path)
    return _file_cache[path]


def _keep(cfg: SweepConfig, prof) -> bool:
    f = cfg.graph_filter
    return (
        f == "all"
        or (f == "tree" and prof.is_tree)
        or (f == "non_tree" and not prof.is_tree)
        or (f == "cycle" and prof.is_cycle)
        or (f == "bipartite" and prof.bipartite)
        or (f == "non_bipartite" and not prof.bipartite)
    )


def work_items(cfg: SweepConfig) -> Iterator[tuple[str, str, str]]:
    """(mode, graph6, partition-or-k) triples in report order."""
    for n in range(cfg.n_min, cfg.n_max + 1):
        if n < 4:
            continue
        for X in _graphs(cfg, n):
            prof = classify(X)
            if not _keep(cfg, prof):
                continue
            g6 = encode_graph6(X)
            if cfg.mode == "connectivity":
                for p in cfg.partitions(n):
                    if cfg.require_no_top_bridge and prof.max_bridge_length >= n - p.parts[-1]:
                        continue
                    yield cfg.mode, g6, str(p)
            elif cfg.mode == "two_components":
                for k in range(2, n // 2 + 1):
                    yield cfg.mode, g6, str(k)
            else:
                yield cfg.mode, g6, ""


def run_instance(item: tuple[str, str, str], record_timings: bool = False) -> dict:
    mode, g6, param = item
    start = time.perf_counter()
    X = parse_graph6(g6)
    prof = classify(X)
    rec: dict = {"graph6": g6, "n": X.n}
    try:
        if mode == "connectivity":
            p = Partition.parse(param)
            pred = predict(X, p, prof)
            summary = component_count(X, complete_multipartite(p))
            rec.update(partition=str(p), profile=prof.as_dict(), prediction=pred.as_dict(),
                       brute={"count": summary.component_count, "sizes": list(summary.component_sizes)},
                       match=pred.matches(summary.component_count))
        elif mode == "two_components":
            k = int(param)
            pred = predict_two_components(X, k, prof)
            count = component_count(X, complete_bipartite(k, X.n - k)).component_count
            rec.update(partition=f"{k},{X.n - k}", profile=prof.as_dict(), prediction=pred.as_dict(),
                       brute={"count": count}, match=pred.matches(count))
        else:
            least = brute_least_book_k(X)
            predicted = kappa(X, prof)
            rec.update(profile=prof.as_dict(),
                       prediction={"kappa": _num(predicted)},
                       brute={"least_k": _num(least)},
                       match=least == predicted)
    except ValueError as exc:
        rec.update(error=str(exc), match=None)
    if record_timings:
        rec["runtime_s"] = round(time.perf_counter() - start, 6)
    return rec


def _num(x: float) -> int | str:
    return "inf" if x == math.inf else int(x)


def brute_least_book_k(X: Graph) -> float:
    for k in range(1, X.n):
        if component_count(X, book(k, X.n)).component_count == 1:
            return k
    return math.inf


@dataclass
class Report:
    records: list[dict] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        return {
            "summary": True,
            "instances": len(self.records),
            "mismatches": sum(1 for r in self.records if r.get("match") is False),
            "undecided": sum(1 for r in self.records if r.get("match") is None and "error" not in r),
            "errors": sum(1 for r in self.records if "error" in r),
            "exception_hits": sum(1 for r in self.records
                                  if r.get("prediction", {}).get("verdict") == SIX),
        }

    @property
    def passed(self) -> bool:
        return self.summary["mismatches"] == 0

    def to_jsonl(self) -> str:
        lines = [json.dumps(r, sort_keys=True) for r in self.records]
        lines.append(json.dumps(self.summary, sort_keys=True))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        cols = ["graph6", "n", "partition", "verdict", "case", "brute", "match"]
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in self.records:
            pred, brute = r.get("prediction", {}), r.get("brute", {})
            w.writerow([
                r["graph6"], r["n"], r.get("partition", ""),
                pred.get("verdict", pred.get("kappa", "")), pred.get("case", ""),
                brute.get("count", brute.get("least_k", "")), r.get("match"),
            ])
        return buf.getvalue()

    def write(self, path: str | Path, fmt: str = "jsonl") -> None:
        Path(path).write_text(self.to_csv() if fmt == "csv" else self.to_jsonl())


def _run_timed(item):
    return run_instance(item, True)


def run_sweep(cfg: SweepConfig) -> Report:
    items = list(work_items(cfg))
    fn = _run_timed if cfg.record_timings else run_instance
    if cfg.parallelism > 1:
        with ProcessPoolExecutor(cfg.parallelism) as pool:
            records = list(pool.map(fn, items, chunksize=16))
    else:
        records = [fn(item) for item in items]
    report = Report(records)
    if cfg.output:
        report.write(cfg.output, cfg.format)
    return report
