"""Run the whole invariant battery at a chosen scale."""

import argparse
import time

from resolvedim.verify import SUITES, VerifyContext, run_suites


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=4)
    parser.add_argument("--samples", type=int, default=15)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    ctx = VerifyContext(max_order=args.max_order, samples=args.samples, seed=args.seed)
    started = time.perf_counter()
    results = run_suites(None, ctx)
    elapsed = time.perf_counter() - started

    for r in results:
        status = "ok  " if r.ok else "FAIL"
        print(f"{status} {r.suite:<18} {r.checked:>6} checks  {SUITES[r.suite][1]}")
        for c in r.failures[:3]:
            print(f"      {c.instance}: {c.detail}")
    passed = sum(1 for r in results if r.ok)
    print(f"\n{passed}/{len(results)} suites passed in {elapsed:.1f}s")


if __name__ == "__main__":
    main()
