"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as the
criteria complete.  Frozen expected values were derived once from the
independent brute-force oracles in this repository and are asserted
exactly; timing budgets are asserted with generous slack below the stated
limits so a regression to interpreted-speed code paths fails loudly.
"""

import os
import random
import subprocess
import sys
import time

import pytest

from conftest import random_graph
from rainbowmatch.antiramsey import (
    exact_f_oracle,
    rb_formula,
    verify_lower_bound,
    verify_upper_bound_sampled,
)
from rainbowmatch.extremal import (
    brute_force_ext,
    brute_force_ext_bipartite,
    ext_value,
)
from rainbowmatch.gallai import brute_force_D, decompose, exhaustive_scan, verify_structure
from rainbowmatch.graphcore import Graph, parse_coloring, serialize_coloring
from rainbowmatch.matching import BipartitionedGraph, bipartite_deficiency, matching_number
from rainbowmatch.rainbow import (
    gadget_coloring,
    has_rainbow_k_matching,
    lower_bound_coloring,
    sweep_completions,
)

HERE = os.path.dirname(os.path.abspath(__file__))


def _report(num: int, ok: bool, detail: str, elapsed: float) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"\ncriterion {num}: {status} ({elapsed:.1f}s) {detail}", flush=True)
    assert ok, f"criterion {num} failed: {detail}"


def test_criterion_1_formula_fixtures():
    t0 = time.time()
    fixtures = {
        (4, 2): 4, (5, 2): 2, (6, 3): 7, (8, 4): 15,
        (10, 4): 19, (14, 7): 58, (16, 8): 81,
    }
    bad = [(n, k) for (n, k), rb in fixtures.items() if rb_formula(n, k).rb != rb]
    elapsed = time.time() - t0
    _report(1, not bad and elapsed < 1.0, f"7 fixtures, mismatches: {bad}", elapsed)


def test_criterion_2_oracle_agreement():
    t0 = time.time()
    failures = []
    for n, k in [(4, 2), (5, 2), (6, 2), (6, 3)]:
        res = exact_f_oracle(n, k)
        if not res.exact:
            failures.append((n, k, "budget exhausted"))
            continue
        if res.f + 1 != rb_formula(n, k).rb:
            failures.append((n, k, f"oracle f={res.f}"))
        # certificate re-validates: round trip, attains f, no rainbow kK2
        cert = parse_coloring(serialize_coloring(res.certificate))
        if cert.c != res.f or has_rainbow_k_matching(cert, k)[0]:
            failures.append((n, k, "certificate invalid"))
    elapsed = time.time() - t0
    _report(2, not failures and elapsed < 900, f"4 cases, failures: {failures}", elapsed)


def test_criterion_3_lower_bound_suite():
    t0 = time.time()
    grid = [(4, 2)] + [(n, k) for k in range(3, 9) for n in range(2 * k, 21)]
    failures = []
    for n, k in grid:
        col = lower_bound_coloring(n, k).to_coloring()
        if col.c != rb_formula(n, k).rb - 1:
            failures.append((n, k, "color count"))
        elif has_rainbow_k_matching(col, k)[0]:
            failures.append((n, k, "rainbow found"))
    elapsed = time.time() - t0
    _report(
        3, not failures and elapsed < 120,
        f"{len(grid)} colorings, failures: {failures}", elapsed,
    )


def test_criterion_4_upper_bound_sampling():
    t0 = time.time()
    failures = []
    for n, k in [(6, 3), (7, 3), (8, 4), (9, 4)]:
        rep = verify_upper_bound_sampled(n, k, trials=10_000, seed=1)
        if not rep.ok:
            failures.append((n, k, rep.counterexamples))
    elapsed = time.time() - t0
    _report(4, not failures and elapsed < 300, f"4x10^4 samples, failures: {failures}", elapsed)


def test_criterion_5_gallai_edmonds():
    t0 = time.time()
    mismatches, prop_failures, first_bad = exhaustive_scan(7)
    exhaustive_ok = (mismatches, prop_failures, first_bad) == (0, 0, -1)
    t_exhaustive = time.time() - t0

    t1 = time.time()
    rng = random.Random(2024)
    sample_bad = []
    for n in range(8, 13):
        for _ in range(1000):
            g = random_graph(rng, n, rng.choice([0.2, 0.35, 0.5, 0.7]))
            dec = decompose(g)
            if dec.D != brute_force_D(g) or not verify_structure(g, dec).ok:
                sample_bad.append(g)
    t_samples = time.time() - t1
    ok = (
        exhaustive_ok
        and not sample_bad
        and t_exhaustive < 1800
        and t_samples < 60
    )
    _report(
        5, ok,
        f"2^21 graphs exhaustive ({t_exhaustive:.1f}s), 5000 samples "
        f"({t_samples:.1f}s), bad: {len(sample_bad)}",
        t_exhaustive + t_samples,
    )


def test_criterion_6_extremal_oracles():
    t0 = time.time()
    failures = []
    for n in range(2, 8):
        for k in range(1, n // 2 + 1):
            if brute_force_ext(n, k) != ext_value(n, k):
                failures.append(("general", n, k))
    cases = 0
    for m in range(1, 21):
        for n_b in range(1, m + 1):
            if m * n_b > 20:
                continue
            for k in range(1, n_b + 1):
                cases += 1
                if brute_force_ext_bipartite(m, n_b, k) != m * (k - 1):
                    failures.append(("bipartite", m, n_b, k))
    elapsed = time.time() - t0
    _report(
        6, not failures and elapsed < 120,
        f"n<=7 general + {cases} bipartite cases, failures: {failures}", elapsed,
    )


def test_criterion_7_ore_deficiency():
    t0 = time.time()
    rng = random.Random(555)
    failures = 0
    for _ in range(1000):
        ma = rng.randint(1, 10)
        nb = rng.randint(1, 10)
        edges = [
            (a, ma + b)
            for a in range(ma)
            for b in range(nb)
            if rng.random() < rng.choice([0.2, 0.4, 0.7])
        ]
        g = Graph.from_edges(ma + nb, edges)
        bg = BipartitionedGraph(g, frozenset(range(ma)), frozenset(range(ma, ma + nb)))
        d, _witness, m = bipartite_deficiency(bg)
        if len(m) != ma - d or len(m) != matching_number(g):
            failures += 1
    elapsed = time.time() - t0
    _report(7, failures == 0 and elapsed < 60, f"1000 graphs, failures: {failures}", elapsed)


def test_criterion_8_gadget_completions():
    t0 = time.time()
    checked, bad = sweep_completions(gadget_coloring("SG1", 3, 6), 3, exhaustive=True)
    exhaustive_ok = checked == 6**9 and bad == 0
    t_exhaustive = time.time() - t0
    details = [f"SG1(3,6) exhaustive {checked} completions, {bad} bad"]

    sampled_ok = True
    for kind, k, n in [("SG1", 4, 8), ("SG2a", 3, 7), ("SG2b", 3, 7)]:
        c2, b2 = sweep_completions(
            gadget_coloring(kind, k, n), k, exhaustive=False, trials=100_000, seed=12
        )
        details.append(f"{kind}({k},{n}) {c2} sampled, {b2} bad")
        if c2 < 100_000 or b2 != 0:
            sampled_ok = False
    elapsed = time.time() - t0
    ok = exhaustive_ok and sampled_ok and t_exhaustive < 600
    _report(8, ok, "; ".join(details), elapsed)


def test_criterion_9_determinism():
    t0 = time.time()
    script = os.path.join(HERE, "_determinism_probe.py")
    outputs = []
    for hash_seed in ("1", "2"):
        env = dict(os.environ)
        env["PYTHONHASHSEED"] = hash_seed
        proc = subprocess.run(
            [sys.executable, script],
            capture_output=True,
            env=env,
            timeout=900,
        )
        assert proc.returncode == 0, proc.stderr.decode()
        outputs.append(proc.stdout)
    elapsed = time.time() - t0
    ok = outputs[0] == outputs[1] and len(outputs[0]) > 0
    _report(9, ok, f"two runs, {len(outputs[0])} bytes each", elapsed)
