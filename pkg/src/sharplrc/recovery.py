"""Sharp recovery structures, erasure repair and the locality bounds around them.

For each coordinate i the structure holds a dual codeword ``w_i`` with
``i in supp(w_i)``; its recovery set is ``R_i = supp(w_i) minus {i}`` and an
erased ``x_i`` is ``-(w_i)_i^{-1} * sum_{j in R_i} (w_i)_j x_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import ceil
from typing import Optional

import numpy as np

from .code import LinearCode, budget
from .errors import (
    BudgetExceeded,
    DegenerateCode,
    DistanceOne,
    LRCError,
    NotACodeword,
    RecoverySetErased,
    Stalled,
)
from .oracle import CodeOracle
from .order import sort_key
from .testset import compute_test_set


@dataclass(frozen=True)
class RecoveryStructure:
    code: LinearCode
    words: tuple  # w_1 .. w_n, tuples of codes
    sets: tuple  # R_1 .. R_n, frozensets of 1-based coordinates
    by_construction: bool = True  # built by sharp_structure, hence sharp
    candidates: Optional[int] = None
    testset_size: Optional[int] = None

    @property
    def n(self):
        return self.code.n

    @property
    def localities(self):
        return [len(r) for r in self.sets]

    @property
    def locality(self):
        return max(self.localities)

    @property
    def dual_distance(self):
        """Lightest word of the structure; the dual distance when the structure is sharp."""
        return min(sum(1 for v in w if v) for w in self.words)

    def recovery_set(self, i):
        return self.sets[i - 1]

    def word(self, i):
        return self.words[i - 1]

    def report(self, optimal=None):
        lines = []
        for i in range(1, self.n + 1):
            R = ",".join(str(j) for j in sorted(self.sets[i - 1]))
            w = ",".join(str(c) for c in self.words[i - 1])
            lines.append(f"i={i} loc={len(self.sets[i - 1])} R={R} w={w}")
        opt = {True: "yes", False: "no", None: "unknown"}[optimal]
        lines.append(f"summary loc={self.locality} dual_distance={self.dual_distance} optimal={opt}")
        return "\n".join(lines) + "\n"

    def check(self):
        """Raise if some w_i is not a dual codeword through i or R_i fails the rank test."""
        C, F = self.code, self.code.field
        W = np.array(self.words, dtype=np.int64)
        if np.any(F.matmul(C.G, W.T)):
            raise LRCError("a structure word is not orthogonal to the code")
        for i in range(1, self.n + 1):
            w, R = self.words[i - 1], self.sets[i - 1]
            if not w[i - 1] or i in R:
                raise LRCError(f"coordinate {i} is not covered by its word")
            if not {j + 1 for j, c in enumerate(w) if c} - {i} <= R:
                raise LRCError(f"R_{i} misses part of supp(w_{i})")
            if C.projection_rank(R) != C.projection_rank(R | {i}):
                raise LRCError(f"R_{i} is not a recovery set")
        return self


def sharp_structure(code, *, stop="sharp", divisibility="scalar", wmax=None, limit=None):
    """Sharp recovery structure of ``code`` from a test set of its dual.

    The test set is grown from the rows of the parity-check matrix; for each
    coordinate the lightest word through it is kept.  Ties go to the word whose
    sorted support is lexicographically smallest (recovery sets lean on low
    coordinates), then to the smallest word in the order.
    """
    if code.is_degenerate():
        raise DegenerateCode("degenerate codes have coordinates that need no recovery")
    if code.has_distance_one():
        raise DistanceOne("the code has minimum distance 1; some coordinate has no recovery set")
    F = code.field
    cap = budget(limit)
    T = compute_test_set(F, code.H, stop=stop, divisibility=divisibility, wmax=wmax, max_candidates=cap)
    if T.stopped_by == "budget":
        raise BudgetExceeded(f"test-set construction needs more than {cap} candidates")
    words, sets = [], []
    for i in range(1, code.n + 1):
        through = T.covering(i)
        if not through:
            raise DistanceOne(f"no word found through coordinate {i}")
        best = min(through, key=lambda e: (e.weight, sorted(e.support), sort_key(F, e.word)))
        words.append(best.word)
        sets.append(best.support - {i})
    S = RecoveryStructure(code, tuple(words), tuple(sets), stop != "cover", T.candidates, len(T))
    return S.check()


def widen(S, rng):
    """Copy of ``S`` with one random extra coordinate added to every R_i (where possible)."""
    sets = []
    for i, R in enumerate(S.sets, 1):
        free = sorted(set(range(1, S.n + 1)) - R - {i})
        sets.append(R | {int(rng.choice(free))} if free else R)
    return replace(S, sets=tuple(sets), by_construction=False)


def _erased(x):
    return {j + 1 for j, v in enumerate(x) if v is None}


def _solve(S, x, i):
    F = S.code.field
    w = S.words[i - 1]
    acc = 0
    for j in range(S.n):
        if j != i - 1 and w[j]:
            acc = F.add(acc, F.mul(w[j], x[j]))
    return int(F.neg(F.mul(F.inv(w[i - 1]), acc)))


def recover(x, S, i=None):
    """Value of the erased coordinate ``i`` of ``x`` (erasures are ``None``).

    ``i`` defaults to the single erased position.  When the completed word has
    no other erasures it is checked against the code.
    """
    x = list(x)
    missing = _erased(x)
    if i is None:
        if len(missing) != 1:
            raise ValueError(f"expected exactly one erasure, found {len(missing)}")
        (i,) = missing
    blocked = S.sets[i - 1] & missing
    if blocked:
        raise RecoverySetErased(f"positions {sorted(blocked)} of R_{i} are erased")
    value = _solve(S, x, i)
    if missing <= {i}:
        x[i - 1] = value
        if not S.code.is_codeword(x):
            raise NotACodeword("repaired word fails the parity checks; the surviving entries are corrupt")
    return value


def recover_multi(x, S):
    """Fill every erasure reachable by repeated single-erasure repair."""
    x = list(x)
    pending = _erased(x)
    while pending:
        ready = [i for i in sorted(pending) if not S.sets[i - 1] & pending]
        if not ready:
            raise Stalled(pending, partial=x)
        for i in ready:
            if S.sets[i - 1] & pending:
                continue
            x[i - 1] = _solve(S, x, i)
            pending.discard(i)
    if not S.code.is_codeword(x):
        raise NotACodeword("repaired word fails the parity checks; the surviving entries are corrupt")
    return tuple(int(v) for v in x)


def singleton_bound_check(n, k, d, r):
    """k + d + ceil(k / r) <= n + 2."""
    return k + d + ceil(k / r) <= n + 2


def min_distance(code, limit=None):
    return code.min_distance_exhaustive(limit)


def locality_lower_bounds(code, S, d=None):
    """Best lower bound on loc(C): the Singleton-like bound and dual distance - 1."""
    if d is None:
        d = min_distance(code)
    n, k = code.n, code.k
    by_singleton = next(r for r in range(1, k + 1) if singleton_bound_check(n, k, d, r))
    return max(by_singleton, S.dual_distance - 1)


@dataclass(frozen=True)
class Classification:
    sharp: Optional[bool]
    sharp_verified: bool
    optimal: Optional[bool]
    min_distance: Optional[int]


def classify(S, limit=None):
    """Sharpness (oracle-checked within budget) and optimality of a structure.

    Optimal means k + d + ceil(k / loc) = n + 2 for the structure's locality;
    either flag is None when it cannot be decided within the budget.
    """
    C = S.code
    lim = budget(limit)
    d = None
    if C.field.q**C.k <= lim:
        d = C.min_distance_exhaustive(lim)
    optimal = None if d is None else C.k + d + ceil(C.k / S.locality) == C.n + 2
    sharp, verified = (True if S.by_construction else None), False
    if C.field.q ** (C.n - C.k) <= lim:
        truth = CodeOracle(C, lim).localities()
        sharp, verified = S.localities == truth, True
    return Classification(sharp, verified, optimal, d)
