#!/usr/bin/env python3
"""Run every verification check and print a summary table."""
import argparse
import json
import sys

from adtgames.verify import CHECKS, GenConfig, check


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--depth", type=int, default=4)
    ap.add_argument("--term-depth", type=int, default=5)
    ap.add_argument("--arity", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--only", nargs="*", choices=sorted(CHECKS), help="subset of checks")
    ap.add_argument("--json", metavar="FILE", help="also write the reports here")
    args = ap.parse_args()

    reports = []
    print(f"{'check':<18} {'kind':<7} {'tried':>6} {'skipped':>8} {'evals':>10} {'time':>8}  result")
    for name in args.only or CHECKS:
        spec = CHECKS[name]
        depth = args.depth if spec.kind == "game" else args.term_depth
        cfg = GenConfig(seed=args.seed, max_depth=depth, max_arity=args.arity,
                        instance_count=args.count)
        r = check(name, cfg, workers=args.workers)
        reports.append(r)
        print(f"{name:<18} {spec.kind:<7} {r.instances_tried:>6} {len(r.skipped):>8} "
              f"{r.evaluations:>10} {r.elapsed:>7.2f}s  {'ok' if r.ok else 'COUNTEREXAMPLE'}")
        if not r.ok:
            print(json.dumps(r.counterexample, indent=2))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=2)
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
