#!/usr/bin/env python3
"""Run every verification suite and print one line per assertion.

Usage: python scripts/run_harness.py [seed] [prec]
"""

import sys
import time

from padic_tate.harness import RunConfig, exp_suite, balls_suite, lattice_suite, \
    tate_suite, weierstrass_suite


def main() -> int:
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
    prec = int(sys.argv[2]) if len(sys.argv) > 2 else 40
    t0 = time.time()
    failures = 0
    runs = [
        ("exp p=2", exp_suite, RunConfig(p=2, prec=prec, ext="eisenstein:e=2,c=-1", seed=seed), {}),
        ("exp p=3", exp_suite, RunConfig(p=3, prec=prec, ext="eisenstein:e=2,c=-1", seed=seed), {}),
        ("exp p=5", exp_suite, RunConfig(p=5, prec=prec, ext="eisenstein:e=4,c=-1", seed=seed), {}),
        ("tate q=25", tate_suite, RunConfig(p=5, prec=prec, seed=seed), {"q_literal": "5^2"}),
        ("tate q=9", tate_suite, RunConfig(p=3, prec=prec, seed=seed), {"q_literal": "3^2"}),
        ("weierstrass", weierstrass_suite, RunConfig(p=5, prec=prec, seed=seed), {}),
        ("balls", balls_suite, RunConfig(p=5, prec=prec, seed=seed), {}),
        ("lattice", lattice_suite, RunConfig(p=5, prec=prec, seed=seed), {}),
    ]
    for label, suite, cfg, kwargs in runs:
        report = suite(cfg, **kwargs)
        for rec in report.records:
            mark = "ok " if rec.ok else "FAIL"
            print(f"[{label}] {mark} {rec.name}: {rec.measured} (need {rec.threshold})")
            failures += 0 if rec.ok else 1
        print(f"[{label}] {'PASS' if report.ok else 'FAIL'} "
              f"({len(report.records)} checks, {report.elapsed:.2f}s)")
    print(f"total: {time.time() - t0:.1f}s, failures: {failures}")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
