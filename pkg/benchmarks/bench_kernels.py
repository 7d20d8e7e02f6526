"""Timing comparison of the compiled kernels against the pure-Python path.

The same module code runs in both modes; RAINBOW_NO_NUMBA=1 turns every
@njit decorator into an identity wrapper.  The script re-executes itself
in a subprocess for each mode and prints a side-by-side table.  Workloads
are scaled down so the interpreted mode finishes in reasonable time.

Usage: python benchmarks/bench_kernels.py
"""

import json
import os
import subprocess
import sys
import time


def workloads():
    import numpy as np

    from rainbowmatch import _kernels
    from rainbowmatch.graphcore import complete_graph

    def subset_dp():
        adj = complete_graph(16).adjacency_masks()
        _kernels.matching_table(adj)

    def ge_scan():
        _kernels.ge_exhaustive_scan(5)

    def rainbow_solver():
        from rainbowmatch.rainbow import has_rainbow_k_matching, lower_bound_coloring

        col = lower_bound_coloring(12, 5).to_coloring()
        has_rainbow_k_matching(col, 5)

    def oracle():
        _kernels.f_oracle_search(5, 2, 10_000_000)

    def completion_sweep():
        from rainbowmatch.rainbow import gadget_coloring, sweep_completions

        gc = gadget_coloring("SG1", 3, 6)
        sweep_completions(gc, 3, exhaustive=False, trials=2000, seed=0)

    def sampling():
        out = np.zeros((7, 7), dtype=np.int32)
        _kernels.sample_surjective_colorings(7, 8, 3, 2000, 0, out)

    return [
        ("subset dp, K_16", subset_dp),
        ("GE exhaustive scan, n=5", ge_scan),
        ("rainbow solver, (12,5) extremal", rainbow_solver),
        ("f oracle, (5,2)", oracle),
        ("completion sweep, 2000 trials", completion_sweep),
        ("color sampling, 2000 trials", sampling),
    ]


def run_mode() -> None:
    results = {}
    loads = workloads()
    for name, fn in loads:
        fn()  # warm-up (jit compile in numba mode)
        t0 = time.perf_counter()
        fn()
        results[name] = time.perf_counter() - t0
    print(json.dumps(results))


def main() -> None:
    rows = {}
    for label, flag in (("numba", "0"), ("pure", "1")):
        env = dict(os.environ, RAINBOW_NO_NUMBA=flag)
        proc = subprocess.run(
            [sys.executable, __file__, "--mode"],
            capture_output=True,
            text=True,
            env=env,
        )
        if proc.returncode != 0:
            sys.stderr.write(proc.stderr)
            sys.exit(1)
        rows[label] = json.loads(proc.stdout.strip().splitlines()[-1])

    width = max(len(name) for name in rows["numba"])
    print(f"{'workload':<{width}}  {'numba':>10}  {'pure':>10}  {'speedup':>8}")
    for name, t_numba in rows["numba"].items():
        t_pure = rows["pure"][name]
        ratio = t_pure / t_numba if t_numba > 0 else float("inf")
        print(f"{name:<{width}}  {t_numba:>9.4f}s  {t_pure:>9.4f}s  {ratio:>7.1f}x")


if __name__ == "__main__":
    if "--mode" in sys.argv:
        run_mode()
    else:
        main()
