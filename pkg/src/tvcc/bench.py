"""Cost of the minor-GCD test versus the state-graph oracle as memory grows.

The family is the rate-1/2 encoder G = [1+D^m, (1+D^m)(1+D)], which is
catastrophic for every m.  The GCD route is measured in coefficient bit
operations, the oracle in transition-graph edges, alongside wall time.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .catastrophic import periodic_check
from .encoder import PeriodicEncoder, TimeInvariantEncoder
from .gf2poly import Poly, count_ops
from .oracle import oracle_check, realize
from .polymatrix import PolyMatrix

__all__ = ["BenchRow", "bench_family", "run_bench", "loglog_slope", "doubling_ratios"]


@dataclass(frozen=True)
class BenchRow:
    m: int
    gcd_ops: int
    gcd_seconds: float
    oracle_edges: int
    oracle_seconds: float
    gcd_verdict: str
    oracle_verdict: str


def bench_family(m: int) -> PeriodicEncoder:
    a = Poly(1 | (1 << m))
    g = PolyMatrix.from_rows([[a, a * Poly(0b11)]])
    return PeriodicEncoder.time_invariant(TimeInvariantEncoder(g))


def run_bench(m_values=range(2, 15)) -> list[BenchRow]:
    rows = []
    for m in m_values:
        e = bench_family(m)
        t0 = time.perf_counter()
        with count_ops() as ops:
            report = periodic_check(e)
        t1 = time.perf_counter()
        graph = realize(e)
        res = oracle_check(graph)
        t2 = time.perf_counter()
        rows.append(
            BenchRow(m, ops[0], t1 - t0, res.edges_visited, t2 - t1,
                     str(report.verdict), str(res.verdict))
        )
    return rows


def loglog_slope(xs, ys) -> float:
    """Least-squares slope of log(y) against log(x)."""
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])


def doubling_ratios(ys) -> list[float]:
    return [b / a for a, b in zip(ys, ys[1:])]
