"""Command-line front end.

    fsgraphs predict <graph6> <partition>
    fsgraphs brute <graph6> <partition>
    fsgraphs verify <graph6> <partition>
    fsgraphs kappa <graph6>
    fsgraphs path <graph6> <partition> <sigma> <sigma2>
    fsgraphs exchangeable <graph6> <partition> <u> <v> <sigma>
    fsgraphs sweep --config <file>

Partitions are comma-separated class sizes ("1,2,3"), bijections
comma-separated image lists ("2,0,1,3"). Exit status: 0 success or match,
1 mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys

from .explorer import component_count, exchangeable, parse_bijection, swap_path
from .graph import Partition, complete_multipartite, parse_graph6, set_size_cap
from .oracle import kappa, predict
from .sweep import load_config, run_sweep

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _instance(args):
    X = parse_graph6(args.graph6)
    p = Partition.parse(args.partition)
    if p.n != X.n:
        raise ValueError(f"partition {p} sums to {p.n}, graph has {X.n} vertices")
    return X, p


def _summary_dict(s) -> dict:
    return {
        "instance": list(s.instance),
        "components": s.component_count,
        "sizes": list(s.component_sizes),
        "representatives": [list(r) for r in s.representatives],
    }


def cmd_predict(args) -> int:
    X, p = _instance(args)
    _emit(predict(X, p).as_dict())
    return EXIT_OK


def cmd_brute(args) -> int:
    X, p = _instance(args)
    _emit(_summary_dict(component_count(X, complete_multipartite(p))))
    return EXIT_OK


def cmd_verify(args) -> int:
    X, p = _instance(args)
    pred = predict(X, p)
    summary = component_count(X, complete_multipartite(p))
    match = pred.matches(summary.component_count)
    _emit({"prediction": pred.as_dict(), "brute": _summary_dict(summary), "match": match})
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_kappa(args) -> int:
    k = kappa(parse_graph6(args.graph6))
    _emit({"kappa": "inf" if k == math.inf else int(k)})
    return EXIT_OK


def cmd_path(args) -> int:
    X, p = _instance(args)
    sigma = parse_bijection(args.sigma, X.n)
    tau = parse_bijection(args.tau, X.n)
    swaps = swap_path(X, complete_multipartite(p), sigma, tau)
    _emit({"path": None if swaps is None else [list(e) for e in swaps]})
    return EXIT_OK


def cmd_exchangeable(args) -> int:
    X, p = _instance(args)
    sigma = parse_bijection(args.sigma, X.n)
    for y in (args.u, args.v):
        if not 0 <= y < X.n:
            raise ValueError(f"Y-vertex {y} out of range")
    _emit({"exchangeable": exchangeable(X, complete_multipartite(p), args.u, args.v, sigma)})
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    if args.output:
        cfg.output = args.output
    if args.parallelism:
        cfg.parallelism = args.parallelism
    report = run_sweep(cfg)
    if not cfg.output:
        sys.stdout.write(report.to_csv() if cfg.format == "csv" else report.to_jsonl())
    else:
        _emit(report.summary)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fsgraphs", description=__doc__.split("\n")[0])
    ap.add_argument("--cap", type=int, help="override the vertex cap (default 10)")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_instance(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph6")
        sp.add_argument("partition")
        sp.set_defaults(fn=fn)
        return sp

    with_instance("predict", cmd_predict, "closed-form connectivity prediction")
    with_instance("brute", cmd_brute, "exhaustive component analysis")
    with_instance("verify", cmd_verify, "predict, brute force, compare")
    sp = sub.add_parser("kappa", help="least k with FS(X, B_{k,n-k}) connected")
    sp.add_argument("graph6")
    sp.set_defaults(fn=cmd_kappa)
    sp = with_instance("path", cmd_path, "shortest friendly-swap sequence")
    sp.add_argument("sigma")
    sp.add_argument("tau")
    sp = with_instance("exchangeable", cmd_exchangeable, "exchangeability of two Y-vertices")
    sp.add_argument("u", type=int)
    sp.add_argument("v", type=int)
    sp.add_argument("sigma")
    sp = sub.add_parser("sweep", help="oracle vs brute force over many instances")
    sp.add_argument("--config", required=True)
    sp.add_argument("--output")
    sp.add_argument("--parallelism", type=int)
    sp.set_defaults(fn=cmd_sweep)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        if args.cap:
            set_size_cap(args.cap)
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
