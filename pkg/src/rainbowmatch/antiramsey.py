"""Rainbow numbers rb(n, kK2): closed form, exhaustive oracle, and
lower/upper bound verification harnesses.

rb(n, kK2) is the least color count that forces a rainbow k-matching in
every edge-coloring of K_n; f(n, kK2) = rb - 1 is the anti-Ramsey number,
the most colors a rainbow-kK2-free coloring can use.  The closed form:

    rb(n, kK2) = 1                       k = 1
               = 4                       (n, k) = (4, 2)
               = 2                       k = 2, n >= 5
               = ext(n, (k-1)K2) + 3     n = 2k and k >= 7
               = ext(n, (k-1)K2) + 2     otherwise (k >= 3)
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field, replace

import numpy as np

from . import _kernels
from .extremal import ext_value
from .graphcore import EdgeColoring, GuardError
from .rainbow import has_rainbow_k_matching, lower_bound_coloring

DEFAULT_ORACLE_BUDGET = 5_000_000_000
ORACLE_VERTEX_LIMIT = 6

BRANCH_K2_TRIVIAL = "K2_TRIVIAL"
BRANCH_K4_SPECIAL = "K4_SPECIAL"
BRANCH_K2_LARGE = "K2_LARGE"
BRANCH_TWO_K_BIG_K = "TWO_K_BIG_K"
BRANCH_GENERIC = "GENERIC"


@dataclass(frozen=True)
class VerificationFlags:
    lower_checked: bool = False
    oracle_checked: bool = False
    upper_sampled: bool = False


@dataclass(frozen=True)
class RbRecord:
    n: int
    k: int
    rb: int
    branch: str
    certificate: str | None = None
    verified: VerificationFlags = field(default_factory=VerificationFlags)

    @property
    def f(self) -> int:
        return self.rb - 1

    @property
    def regime(self) -> str:
        """large_n = the previously settled range n >= 3k+3; small_n = the
        remaining 2k <= n < 3k+3."""
        return "large_n" if self.n >= 3 * self.k + 3 else "small_n"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "rb": self.rb,
            "f": self.f,
            "branch": self.branch,
            "regime": self.regime,
            "lower_checked": self.verified.lower_checked,
            "oracle_checked": self.verified.oracle_checked,
            "upper_sampled": self.verified.upper_sampled,
            "certificate_path": self.certificate or "",
        }


def rb_formula(n: int, k: int) -> RbRecord:
    """The exact rainbow number rb(n, kK2) for n >= 2k, k >= 1."""
    if k < 1 or n < 2 * k:
        raise ValueError(f"rb(n,kK2) requires n >= 2k >= 2, got n={n}, k={k}")
    if k == 1:
        return RbRecord(n, k, 1, BRANCH_K2_TRIVIAL)
    if (n, k) == (4, 2):
        return RbRecord(n, k, 4, BRANCH_K4_SPECIAL)
    if k == 2:
        return RbRecord(n, k, 2, BRANCH_K2_LARGE)
    if n == 2 * k and k >= 7:
        return RbRecord(n, k, ext_value(n, k - 1) + 3, BRANCH_TWO_K_BIG_K)
    return RbRecord(n, k, ext_value(n, k - 1) + 2, BRANCH_GENERIC)


@dataclass(frozen=True)
class OracleResult:
    f: int
    certificate: EdgeColoring
    nodes: int
    exact: bool


def exact_f_oracle(
    n: int,
    k: int,
    budget: int = DEFAULT_ORACLE_BUDGET,
    force: bool = False,
) -> OracleResult:
    """Exhaustive anti-Ramsey number f(n, kK2) with an attaining certificate.

    Enumerates colorings of K_n as restricted-growth strings over the
    canonical edge order (color-permutation symmetry broken exactly once),
    pruning every prefix that already contains a rainbow k-matching.  If the
    node budget runs out the result is flagged inexact and is only a lower
    bound on f.
    """
    if n > ORACLE_VERTEX_LIMIT and not force:
        raise GuardError(
            f"oracle guarded at n <= {ORACLE_VERTEX_LIMIT} (pass force=True to override)"
        )
    if k < 1 or n < 2 * k:
        raise ValueError(f"requires n >= 2k >= 2, got n={n}, k={k}")
    best, colors, nodes, exact = _kernels.f_oracle_search(n, k, budget)
    certificate = EdgeColoring.from_sequence(n, (int(c) for c in colors))
    return OracleResult(int(best), certificate, int(nodes), bool(exact))


def verify_lower_bound(n: int, k: int) -> bool:
    """Build the extremal coloring and certify it: exactly rb - 1 colors and
    no rainbow k-matching (by the exact solver)."""
    record = rb_formula(n, k)
    gc = lower_bound_coloring(n, k)
    col = gc.to_coloring()
    if col.c != record.rb - 1:
        return False
    found, _witness = has_rainbow_k_matching(col, k)
    return not found


@dataclass(frozen=True)
class SamplingReport:
    n: int
    k: int
    rb: int
    trials: int
    seed: int
    counterexamples: int
    first_counterexample: EdgeColoring | None = None

    @property
    def ok(self) -> bool:
        return self.counterexamples == 0


def verify_upper_bound_sampled(
    n: int, k: int, trials: int, seed: int
) -> SamplingReport:
    """Sample uniform surjective colorings of K_n with exactly rb colors;
    every one of them must contain a rainbow k-matching."""
    record = rb_formula(n, k)
    rb = record.rb
    if rb > n * (n - 1) // 2:
        raise ValueError(f"rb={rb} exceeds the edge count of K_{n}")
    out = np.zeros((n, n), dtype=np.int32)
    bad = int(_kernels.sample_surjective_colorings(n, rb, k, trials, seed, out))
    first = None
    if bad:
        seq = [int(out[u, v]) for u in range(n) for v in range(u + 1, n)]
        first = EdgeColoring.from_sequence(n, seq)
    return SamplingReport(n, k, rb, trials, seed, bad, first)


def rb_table(k_max: int, n_max: int) -> list[RbRecord]:
    """All records with 1 <= k <= k_max and 2k <= n <= n_max."""
    if k_max < 1 or n_max < 2:
        raise ValueError("parameters must be positive")
    records = []
    for k in range(1, k_max + 1):
        for n in range(2 * k, n_max + 1):
            records.append(rb_formula(n, k))
    return records


CSV_COLUMNS = [
    "n", "k", "rb", "f", "branch", "regime",
    "lower_checked", "oracle_checked", "upper_sampled", "certificate_path",
]


def render_csv(records: list[RbRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow(r.to_dict())
    return buf.getvalue()


def render_json(records: list[RbRecord]) -> str:
    return json.dumps([r.to_dict() for r in records], indent=2, sort_keys=True) + "\n"


def mark_verified(record: RbRecord, **flags: bool) -> RbRecord:
    return replace(record, verified=replace(record.verified, **flags))
