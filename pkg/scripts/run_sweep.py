#!/usr/bin/env python3
"""Run a sweep from a config file and print the summary line.

    python scripts/run_sweep.py configs/cycles.txt [--parallelism 4] [--output out.jsonl]
"""
import argparse
import json
import sys
from pathlib import Path

from fsgraphs.sweep import load_config, run_sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("config")
    ap.add_argument("--parallelism", type=int)
    ap.add_argument("--output")
    args = ap.parse_args()
    cfg = load_config(args.config)
    if args.parallelism:
        cfg.parallelism = args.parallelism
    if args.output:
        cfg.output = args.output
    if cfg.output:
        Path(cfg.output).parent.mkdir(parents=True, exist_ok=True)
    report = run_sweep(cfg)
    print(json.dumps(report.summary, sort_keys=True))
    for r in report.records:
        if r.get("match") is False:
            print("mismatch:", json.dumps(r, sort_keys=True))
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
