"""Evaluate every fixture expectation and report timings.

    python scripts/fixture_sweep.py [--json]
"""
import argparse
import json
import sys
import time

from incidence.expectations import evaluate
from incidence.fixtures import all_fixtures


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="print one JSON record per fixture")
    args = ap.parse_args()
    failures = 0
    for spec in all_fixtures():
        start = time.perf_counter()
        c = spec.build()
        built = time.perf_counter() - start
        outcomes = evaluate(spec, c)
        elapsed = time.perf_counter() - start
        bad = [o for o in outcomes if not o.ok]
        failures += len(bad)
        if args.json:
            print(json.dumps({
                "fixture": spec.name, "objects": c.n_objects, "morphisms": c.n_morphisms,
                "build_s": round(built, 4), "total_s": round(elapsed, 4),
                "expectations": len(outcomes), "failed": [
                    {"prop": o.expectation.prop, "arg": o.expectation.arg,
                     "expected": o.expectation.expected, "actual": o.actual} for o in bad],
            }, sort_keys=True))
            continue
        status = "ok" if not bad else f"{len(bad)} FAILED"
        print(f"{spec.name:24} {c.n_objects:4} obj {c.n_morphisms:5} mor "
              f"{len(outcomes):3} checks  {elapsed * 1000:8.1f} ms  {status}")
        for o in bad:
            e = o.expectation
            print(f"    {e.prop}({e.arg or ''}): expected {e.expected!r}, got {o.actual!r}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
