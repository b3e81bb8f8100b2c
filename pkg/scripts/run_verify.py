"""Run the exhaustive suites and write the JSON report next to a text summary.

    python3 scripts/run_verify.py --out results/verify.json
"""

import argparse
import json
import sys
from pathlib import Path

from fincond.verify import Bounds, run_verify


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--max-coeff", type=int, default=5)
    ap.add_argument("--max-scalar", type=int, default=4)
    ap.add_argument("--shards", type=int, default=1)
    ap.add_argument("--only", nargs="*", help="suite names to run (default: all)")
    ap.add_argument("--out", type=Path, default=Path("results/verify.json"))
    args = ap.parse_args()

    report = run_verify(Bounds(args.max_degree, args.max_coeff, args.max_scalar), args.shards, args.only)
    print(report.format())
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(report.to_json(), indent=2) + "\n")
    print(f"report written to {args.out}")
    return 0 if report.ok else 3


if __name__ == "__main__":
    sys.exit(main())
