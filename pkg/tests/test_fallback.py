"""The kernels must give identical answers with numba disabled
(RAINBOW_NO_NUMBA=1 switches every @njit to a plain Python function)."""

import json
import os
import subprocess
import sys

SCRIPT = r"""
import json, random
from rainbowmatch import _kernels
from rainbowmatch.antiramsey import exact_f_oracle, verify_upper_bound_sampled
from rainbowmatch.gallai import decompose, exhaustive_scan, verify_structure
from rainbowmatch.graphcore import EdgeColoring, Graph, all_edges
from rainbowmatch.matching import matching_number, max_matching
from rainbowmatch.rainbow import gadget_coloring, max_rainbow_matching, sweep_completions

out = {"numba": _kernels.USE_NUMBA}

rng = random.Random(99)
nus = []
for _ in range(20):
    n = rng.randint(2, 8)
    g = Graph.from_edges(n, [e for e in all_edges(n) if rng.random() < 0.5])
    nus.append((matching_number(g), sorted(max_matching(g).edges)))
out["nu"] = nus

rng = random.Random(7)
sizes = []
for _ in range(10):
    n = rng.randint(3, 7)
    m = n * (n - 1) // 2
    col = EdgeColoring.from_sequence(n, [rng.randint(1, 4) for _ in range(m)])
    r = max_rainbow_matching(col)
    sizes.append((r.size, sorted(r.witness.edges)))
out["rainbow"] = sizes

res = exact_f_oracle(4, 2)
out["oracle"] = [res.f, res.nodes, list(res.certificate.colors)]
out["ge_scan"] = list(exhaustive_scan(4))
out["sweep"] = list(
    sweep_completions(gadget_coloring("SG1", 3, 6), 3, exhaustive=False, trials=40, seed=3)
)
out["sample"] = verify_upper_bound_sampled(6, 3, trials=50, seed=5).counterexamples
print(json.dumps(out, sort_keys=True))
"""


def _run(no_numba: bool) -> dict:
    env = dict(os.environ)
    env["RAINBOW_NO_NUMBA"] = "1" if no_numba else "0"
    proc = subprocess.run(
        [sys.executable, "-c", SCRIPT],
        capture_output=True,
        text=True,
        env=env,
        timeout=600,
    )
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout)


def test_pure_python_fallback_parity():
    with_numba = _run(no_numba=False)
    without = _run(no_numba=True)
    assert with_numba.pop("numba") is True
    assert without.pop("numba") is False
    assert with_numba == without
