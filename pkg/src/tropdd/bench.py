"""Seeded random instances and the hypergraph-vs-residuation benchmark.

Random systems: each entry of ``A`` and ``B`` is ``-oo`` with probability
``1 - density`` and otherwise an integer drawn uniformly from ``[lo, hi]``.
Rows whose left side is entirely ``-oo`` hold for every point and are drawn
again.
"""

from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import asdict, dataclass, fields
from typing import Iterable, Sequence

from .dd import DDStats, compute_extreme
from .semiring import NEG_INF, IneqSystem

MAX_ROW_RETRIES = 1000


def random_system(
    d: int,
    n: int,
    seed: int,
    density: float = 0.7,
    lo: int = -10,
    hi: int = 10,
) -> IneqSystem:
    if d < 1 or n < 1:
        raise ValueError("need d >= 1 and n >= 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    if lo > hi:
        raise ValueError("empty coefficient range")
    rng = random.Random(seed)

    def entry():
        return rng.randint(lo, hi) if rng.random() < density else NEG_INF

    a_rows, b_rows = [], []
    for _ in range(n):
        for _ in range(MAX_ROW_RETRIES):
            a = tuple(entry() for _ in range(d))
            b = tuple(entry() for _ in range(d))
            if any(x is not NEG_INF for x in a):
                break
        else:
            raise ValueError(f"no non-vacuous row after {MAX_ROW_RETRIES} draws (density {density})")
        a_rows.append(a)
        b_rows.append(b)
    return IneqSystem(tuple(a_rows), tuple(b_rows), d)


@dataclass
class BenchRecord:
    label: str
    d: int
    n: int
    seed: int
    final: int
    inter_mean: float
    time_hypergraph: float
    time_residuation: float
    status: str

    @property
    def ratio(self) -> float:
        return self.time_hypergraph / self.time_residuation


@dataclass(frozen=True)
class BenchCase:
    d: int
    n: int
    seed: int
    density: float = 0.7

    @property
    def label(self) -> str:
        return f"rnd-d{self.d}-n{self.n}-s{self.seed}"


def parse_bench_spec(text: str) -> list[BenchCase]:
    """One case per line: ``d n seed [density]``; ``#`` starts a comment."""
    cases = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if len(line) not in (3, 4):
            raise ValueError(f"line {lineno}: expected 'd n seed [density]'")
        try:
            d, n, seed = (int(w) for w in line[:3])
            density = float(line[3]) if len(line) == 4 else 0.7
        except ValueError:
            raise ValueError(f"line {lineno}: malformed numbers") from None
        cases.append(BenchCase(d, n, seed, density))
    return cases


def run_case(case: BenchCase) -> BenchRecord:
    sys = random_system(case.d, case.n, case.seed, case.density)
    stats = DDStats()
    t0 = time.perf_counter()
    fast = compute_extreme(sys, filter="hypergraph", stats=stats, workers=1)
    t1 = time.perf_counter()
    slow = compute_extreme(sys, filter="residuation", workers=1)
    t2 = time.perf_counter()
    return BenchRecord(
        label=case.label,
        d=case.d,
        n=case.n,
        seed=case.seed,
        final=len(fast),
        inter_mean=stats.mean_intermediate,
        time_hypergraph=max(t1 - t0, 1e-9),
        time_residuation=max(t2 - t1, 1e-9),
        status="OK" if fast == slow else "FAILED",
    )


def run_bench(cases: Iterable[BenchCase | Sequence]) -> list[BenchRecord]:
    """Run every case in order; disagreement between filters is recorded, not raised."""
    out = []
    for c in cases:
        if not isinstance(c, BenchCase):
            c = BenchCase(*c)
        out.append(run_case(c))
    return out


def records_to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    names = [f.name for f in fields(BenchRecord)]
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(names + ["ratio"])
    for r in records:
        row = asdict(r)
        row["inter_mean"] = f"{r.inter_mean:.2f}"
        row["time_hypergraph"] = f"{r.time_hypergraph:.6f}"
        row["time_residuation"] = f"{r.time_residuation:.6f}"
        writer.writerow([row[k] for k in names] + [f"{r.ratio:.4g}"])
    return buf.getvalue()
