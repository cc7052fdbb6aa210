"""Run the full identity suite with timings; optionally sweep larger sizes.

    python scripts/run_identity_suite.py --hermite 80 --addition 30 --laguerre 40 --json out.json
"""

import argparse
import json
import time

from hwpoly.checks import SUITES, SuiteConfig, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--hermite", type=int, default=50)
    ap.add_argument("--addition", type=int, default=20)
    ap.add_argument("--laguerre", type=int, default=30)
    ap.add_argument("--operator", type=int, default=20)
    ap.add_argument("--json", help="write reports and timings here")
    args = ap.parse_args()

    config = SuiteConfig(args.hermite, args.addition, args.laguerre, args.operator)
    rows = []
    for name in SUITES:
        start = time.perf_counter()
        report = run_suite(name, config)
        elapsed = time.perf_counter() - start
        print(f"{elapsed:7.2f}s  {report}")
        rows.append({"suite": name, "seconds": elapsed, **report.to_dict()})
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)
    raise SystemExit(0 if all(r["passed"] for r in rows) else 1)


if __name__ == "__main__":
    main()
