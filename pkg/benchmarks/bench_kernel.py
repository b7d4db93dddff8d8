#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Runs each workload in a subprocess so the kernel choice happens the same way
it does for users: at import, honoring QZETA_PURE_PYTHON.

    python benchmarks/bench_kernel.py            # both kernels, all workloads
    python benchmarks/bench_kernel.py --impl ext # one kernel only
"""

import argparse
import json
import os
import subprocess
import sys
import time

WORKLOADS = ["series_mul", "expand_weight9", "tsum_lemma", "bareiss_rank"]


def run_workload(name):
    import random

    from qzeta import kernel
    from qzeta.expand import Expander
    from qzeta.indices import enumerate_admissible
    from qzeta.ranklab import build_Ak, rank_exact
    from qzeta.relations import verify_cyclic_lemma

    t0 = time.perf_counter()
    if name == "series_mul":
        rng = random.Random(1)
        a = [rng.randint(-999, 999) for _ in range(400)]
        b = [rng.randint(-999, 999) for _ in range(400)]
        for _ in range(60):
            kernel.mul_trunc(a, b, 399)
    elif name == "expand_weight9":
        ex = Expander()
        for idx in enumerate_admissible(9)[:24]:
            ex.modified(idx, 269)
    elif name == "tsum_lemma":
        ex = Expander()
        for idx in [(2, 1), (3, 1), (2, 2), (2, 1, 1), (3, 2)]:
            verify_cyclic_lemma(idx, 40, ex)
    elif name == "bareiss_rank":
        rank_exact(build_Ak(8, n_extra=40, expander=Expander()))
    else:
        raise SystemExit(f"unknown workload {name}")
    return time.perf_counter() - t0, kernel.IMPLEMENTATION


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--impl", choices=("ext", "pure", "both"), default="both")
    ap.add_argument("--workload", default=None, help="run a single workload")
    ap.add_argument("--_child", default=None, help=argparse.SUPPRESS)
    args = ap.parse_args()

    if args._child:
        secs, impl = run_workload(args._child)
        print(json.dumps({"workload": args._child, "impl": impl, "seconds": secs}))
        return

    impls = ["ext", "pure"] if args.impl == "both" else [args.impl]
    workloads = [args.workload] if args.workload else WORKLOADS
    results = {}
    for impl in impls:
        env = dict(os.environ)
        env.pop("QZETA_PURE_PYTHON", None)
        if impl == "pure":
            env["QZETA_PURE_PYTHON"] = "1"
        for wl in workloads:
            out = subprocess.run(
                [sys.executable, __file__, "--_child", wl],
                env=env,
                capture_output=True,
                text=True,
                check=True,
            )
            rec = json.loads(out.stdout.strip().splitlines()[-1])
            assert rec["impl"] == impl, f"kernel selection failed: {rec}"
            results[(impl, wl)] = rec["seconds"]

    print(f"{'workload':<16}" + "".join(f"{i:>10}" for i in impls) + "   speedup")
    for wl in workloads:
        row = f"{wl:<16}"
        for impl in impls:
            row += f"{results[(impl, wl)]:>10.3f}"
        if len(impls) == 2:
            ratio = results[("pure", wl)] / max(results[("ext", wl)], 1e-9)
            row += f"   {ratio:>6.2f}x"
        print(row)


if __name__ == "__main__":
    main()
