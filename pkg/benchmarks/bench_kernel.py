"""Compare the compiled and pure-Python monomial kernels.

Runs the same workloads in two subprocesses (one per backend), asserts the
outputs are byte-identical, and prints a timing table. Usage:

    python3 benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def _workload_monomial_ops():
    """Tight loop over raw kernel operations."""
    import random

    from syzal._kernel import (cmp_grevlex, mono_div, mono_divides, mono_lcm,
                               mono_mul)

    rng = random.Random(7)
    monos = [tuple(rng.randint(0, 6) for _ in range(4)) for _ in range(400)]
    acc = 0
    for a in monos:
        for b in monos:
            acc += cmp_grevlex(a, b)
            if mono_divides(a, b):
                acc += sum(mono_div(b, a))
            acc += sum(mono_mul(a, b)) + sum(mono_lcm(a, b))
    return acc


def _workload_groebner():
    """Basis completion and syzygies for the r=3 toric fixture."""
    from syzal import GradedMatrix, buchberger, syzygies, toric_ht

    M = toric_ht(3)
    G = buchberger(M.relations.columns(), ambient=M.F0)
    S = syzygies(G)
    lts = sorted((pos, mono) for (pos, mono), _c in G.lead_terms())
    return [lts, S.source.rank,
            GradedMatrix.from_columns(
                M.F0, G.elements,
                [e.degree() for e in G.elements]).compose(S).is_zero()]


def _workload_resolution():
    """Minimal resolution and Betti data of the mutant fixture."""
    from syzal import fingerprint, mutant_hht

    fp = fingerprint(mutant_hht())
    return fp.to_json()


def _workload_ab_report():
    """Full Atiyah-Bredon report for the r=3 toric fixture."""
    from syzal import ab_report, toric_hht, toric_ht

    return ab_report(toric_hht(3), toric_ht(3)).to_json()


WORKLOADS = {
    "monomial-ops": _workload_monomial_ops,
    "groebner": _workload_groebner,
    "resolution": _workload_resolution,
    "ab-report": _workload_ab_report,
}


def run_worker(repeat: int) -> None:
    import syzal

    out = {"backend": syzal.BACKEND, "tasks": {}}
    for name, fn in WORKLOADS.items():
        best = None
        result = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            result = fn()
            elapsed = time.perf_counter() - t0
            best = elapsed if best is None else min(best, elapsed)
        out["tasks"][name] = {
            "seconds": best,
            "digest": json.dumps(result, sort_keys=True),
        }
    print(json.dumps(out))


def spawn(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    if pure:
        env["SYZAL_PURE"] = "1"
    else:
        env.pop("SYZAL_PURE", None)
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--worker",
         "--repeat", str(repeat)],
        capture_output=True, text=True, env=env, check=True)
    return json.loads(proc.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="runs per task, best time kept")
    parser.add_argument("--worker", action="store_true",
                        help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.worker:
        run_worker(args.repeat)
        return 0

    compiled = spawn(pure=False, repeat=args.repeat)
    pure = spawn(pure=True, repeat=args.repeat)
    if compiled["backend"] == pure["backend"]:
        print(f"note: compiled backend unavailable, comparing "
              f"{compiled['backend']} against itself")

    mismatches = []
    width = max(len(n) for n in WORKLOADS)
    print(f"{'task':<{width}}  {'compiled':>10}  {'pure':>10}  {'speedup':>8}")
    for name in WORKLOADS:
        c = compiled["tasks"][name]
        p = pure["tasks"][name]
        if c["digest"] != p["digest"]:
            mismatches.append(name)
        speedup = p["seconds"] / c["seconds"] if c["seconds"] else float("inf")
        print(f"{name:<{width}}  {c['seconds']:>9.4f}s  {p['seconds']:>9.4f}s"
              f"  {speedup:>7.2f}x")
    if mismatches:
        print(f"OUTPUT MISMATCH between backends in: {', '.join(mismatches)}")
        return 1
    print(f"backends agree on all {len(WORKLOADS)} workloads "
          f"({compiled['backend']} vs {pure['backend']})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
