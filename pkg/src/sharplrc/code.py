"""Linear codes over GF(q): generator/parity-check pairs, duals, projections."""

from __future__ import annotations

import os

import numpy as np

from .errors import BudgetExceeded, DegenerateCode, IndexOutOfRange, LengthMismatch, RankError, ZeroMatrix

DEFAULT_BUDGET = 1 << 24


def budget(value=None):
    """Enumeration budget: explicit value, else ``$LRC_BUDGET``, else 2^24."""
    if value is not None:
        return int(value)
    env = os.environ.get("LRC_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def support(x):
    """1-based support of a vector."""
    return {j + 1 for j, v in enumerate(x) if v}


def weight(x):
    return int(np.count_nonzero(np.asarray(x)))


def _independent_rows(field, rows):
    keep = []
    for row in rows:
        if field.rank(np.array(keep + [row])) > len(keep):
            keep.append(row)
    return keep


class LinearCode:
    """An [n, k] linear code over ``field`` given by generator ``G`` and parity-check ``H``.

    Build instances with :meth:`from_generator` or :meth:`from_parity_check`;
    both verify rank(G) = k, rank(H) = n - k and G H^T = 0.  Codes with an
    all-zero coordinate are rejected unless ``allow_degenerate`` is set (the
    dual of a code of minimum distance 1 is such a code).
    """

    def __init__(self, field, G, H, allow_degenerate=False):
        G = np.asarray(G, dtype=np.int64)
        H = np.asarray(H, dtype=np.int64)
        self.field = field
        self.n = G.shape[1]
        self.k = G.shape[0]
        if H.shape[1] != self.n:
            raise LengthMismatch("G and H have different lengths")
        if field.rank(G) != self.k or field.rank(H) != self.n - self.k:
            raise RankError("generator/parity-check ranks are inconsistent")
        if self.k and H.shape[0] and np.any(field.matmul(G, H.T)):
            raise RankError("G H^T != 0")
        zero_cols = [j + 1 for j in range(self.n) if not np.any(G[:, j])]
        if zero_cols and not allow_degenerate:
            raise DegenerateCode(f"coordinates {zero_cols} are zero in every codeword")
        G.setflags(write=False)
        H.setflags(write=False)
        self.G, self.H = G, H

    @classmethod
    def from_generator(cls, field, G, allow_degenerate=False):
        G = np.atleast_2d(np.asarray(G, dtype=np.int64))
        n = G.shape[1]
        rows = [list(r) for r in G if np.any(r)]
        if not rows:
            raise ZeroMatrix("generator matrix has no nonzero row")
        basis = np.array(_independent_rows(field, rows), dtype=np.int64)
        H = field.null_space(basis, n)
        return cls(field, basis, H.reshape(-1, n), allow_degenerate)

    @classmethod
    def from_parity_check(cls, field, H, allow_degenerate=False):
        H = np.atleast_2d(np.asarray(H, dtype=np.int64))
        n = H.shape[1]
        rows = [list(r) for r in H if np.any(r)]
        H = np.array(_independent_rows(field, rows), dtype=np.int64).reshape(-1, n)
        G = field.null_space(H, n)
        if G.shape[0] == 0:
            raise ZeroMatrix("parity-check matrix defines the zero code")
        return cls(field, G, H, allow_degenerate)

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over GF({self.field.q}))"

    @property
    def redundancy(self):
        return self.n - self.k

    def dual(self):
        if self.n == self.k:
            raise ZeroMatrix("the dual of the full space is the zero code")
        return LinearCode(self.field, self.H, self.G, allow_degenerate=True)

    def is_degenerate(self):
        return bool(np.any(~np.any(self.G, axis=0)))

    def has_distance_one(self):
        """True iff some unit vector e_i is a codeword (column i of H is zero)."""
        if self.H.shape[0] == 0:
            return True
        return bool(np.any(~np.any(self.H, axis=0)))

    def _vector(self, x):
        x = np.asarray(x, dtype=np.int64)
        if x.shape != (self.n,):
            raise LengthMismatch(f"expected length {self.n}, got {x.shape}")
        return x

    def encode(self, message):
        m = np.asarray(message, dtype=np.int64).reshape(1, self.k)
        return self.field.matmul(m, self.G)[0]

    def syndrome(self, x):
        x = self._vector(x)
        if self.H.shape[0] == 0:
            return np.zeros(0, dtype=np.int64)
        return self.field.matmul(self.H, x.reshape(-1, 1))[:, 0]

    def is_codeword(self, x):
        return not np.any(self.syndrome(x))

    def projection_rank(self, coords):
        """dim of the projection onto the 1-based coordinate set ``coords``."""
        cols = sorted(coords)
        for c in cols:
            if not 1 <= c <= self.n:
                raise IndexOutOfRange(f"coordinate {c} outside 1..{self.n}")
        if not cols:
            return 0
        return self.field.rank(self.G[:, [c - 1 for c in cols]])

    def same_code(self, other):
        if self.field != other.field or self.n != other.n or self.k != other.k:
            return False
        return not np.any(self.field.matmul(other.G, self.H.T)) if self.H.shape[0] else True

    def random_codeword(self, rng):
        return self.encode(self.field.random(rng, self.k))

    def codeword_blocks(self, limit=None, block=1 << 15):
        """All q^k codewords, as successive 2-D arrays of at most ``block`` rows."""
        q, k = self.field.q, self.k
        total = q**k
        if total > budget(limit):
            raise BudgetExceeded(f"q^k = {total} exceeds the enumeration budget {budget(limit)}")
        powers = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
        for start in range(0, total, block):
            idx = np.arange(start, min(total, start + block), dtype=np.int64)
            coeffs = (idx[:, None] // powers) % q
            yield self.field.matmul(coeffs, self.G)

    def min_distance_exhaustive(self, limit=None):
        best = self.n + 1
        for blk in self.codeword_blocks(limit):
            w = np.count_nonzero(blk, axis=1)
            w = w[w > 0]
            if w.size:
                best = min(best, int(w.min()))
        return best


def min_distance_exhaustive(code, limit=None):
    return code.min_distance_exhaustive(limit)


def random_full_rank(field, k, n, rng):
    """Uniform k x n matrix over ``field``, redrawn until it has rank k."""
    while True:
        m = field.random(rng, (k, n))
        if field.rank(m) == k:
            return m


__all__ = [
    "LinearCode",
    "budget",
    "min_distance_exhaustive",
    "random_full_rank",
    "support",
    "weight",
]
