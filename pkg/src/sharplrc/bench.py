"""Random-code benchmark: sharp structures of seeded random [n, k] codes.

Each trial draws uniform k x n matrices of rank k until both the code and its
dual have minimum distance greater than one, then times ``sharp_structure``.
``candidates`` is the number of vectors drawn from the enumerator before the
construction stopped.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import astuple, dataclass, fields

import numpy as np

from .code import LinearCode, random_full_rank
from .errors import CodeError
from .gf import field_of_order
from .recovery import sharp_structure

MAX_REDRAWS = 10_000


@dataclass(frozen=True)
class BenchRecord:
    q: int
    n: int
    k: int
    trial: int
    elapsed_ms: float
    candidates: int
    loc: int
    dual_distance: int


def draw_code(field, n, k, rng):
    """Random full-rank code with d(C) > 1 and d(C^perp) > 1."""
    for _ in range(MAX_REDRAWS):
        C = LinearCode.from_generator(field, random_full_rank(field, k, n, rng), allow_degenerate=True)
        if not C.is_degenerate() and not C.has_distance_one():
            return C
    raise CodeError(f"no [{n},{k}] code over GF({field.q}) with both distances > 1 in {MAX_REDRAWS} draws")


def run_trial(field, n, k, trial, seed, stop="sharp", limit=None):
    rng = np.random.default_rng([seed, trial])
    C = draw_code(field, n, k, rng)
    t0 = time.perf_counter()
    S = sharp_structure(C, stop=stop, limit=limit)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return BenchRecord(field.q, n, k, trial, elapsed, S.candidates, S.locality, S.dual_distance)


def bench(q, n, k, trials, seed=0, stop="sharp", limit=None):
    if not 0 < k < n:
        raise CodeError(f"need 0 < k < n, got n={n} k={k}")
    field = field_of_order(q)
    return [run_trial(field, n, k, t, seed, stop, limit) for t in range(trials)]


def to_csv(records, timing=True):
    names = [f.name for f in fields(BenchRecord)]
    if not timing:
        names.remove("elapsed_ms")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(names)
    for r in records:
        row = dict(zip([f.name for f in fields(BenchRecord)], astuple(r)))
        if timing:
            row["elapsed_ms"] = f"{r.elapsed_ms:.3f}"
        w.writerow([row[c] for c in names])
    return buf.getvalue()


def averages(records):
    return {
        "trials": len(records),
        "mean_candidates": float(np.mean([r.candidates for r in records])),
        "mean_elapsed_ms": float(np.mean([r.elapsed_ms for r in records])),
        "max_elapsed_ms": float(np.max([r.elapsed_ms for r in records])),
        "mean_loc": float(np.mean([r.loc for r in records])),
        "mean_dual_distance": float(np.mean([r.dual_distance for r in records])),
    }
