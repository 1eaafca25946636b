"""Brute-force ground truth for locality and minimal-codeword claims.

Everything here works by enumerating whole codes, so it only scales to
q^k (or q^(n-k) for dual questions) within the enumeration budget.  It uses
the field and code primitives but none of the test-set or recovery machinery.
"""

from __future__ import annotations

from math import comb

import numpy as np

from .errors import IndexOutOfRange, NotACodeword, Unrecoverable


def enumerate_codewords(code, limit=None):
    """Yield every codeword of ``code`` once, as a tuple of codes."""
    for blk in code.codeword_blocks(limit):
        for row in blk:
            yield tuple(int(v) for v in row)


def _masks(words):
    bits = 1 << np.arange(words.shape[1], dtype=np.int64)
    return ((words != 0) * bits).sum(axis=1)


def _mask(x):
    return sum(1 << j for j, v in enumerate(x) if v)


class CodeOracle:
    """Exhaustive view of a code and its dual; enumerations are done once and cached."""

    def __init__(self, code, limit=None):
        self.code = code
        self.limit = limit
        self._words = None
        self._dual_words = None

    @property
    def words(self):
        if self._words is None:
            self._words = np.concatenate(list(self.code.codeword_blocks(self.limit)))
        return self._words

    @property
    def dual_words(self):
        if self._dual_words is None:
            self._dual_words = np.concatenate(list(self.code.dual().codeword_blocks(self.limit)))
        return self._dual_words

    def min_distance(self):
        w = np.count_nonzero(self.words, axis=1)
        return int(w[w > 0].min())

    def dual_distance(self):
        w = np.count_nonzero(self.dual_words, axis=1)
        return int(w[w > 0].min())

    def localities(self):
        """``loc_i`` for every coordinate: lightest dual word through i, minus one."""
        dw = self.dual_words
        wts = np.count_nonzero(dw, axis=1)
        out = []
        for i in range(self.code.n):
            through = wts[dw[:, i] != 0]
            if through.size == 0:
                raise Unrecoverable(f"no dual codeword covers coordinate {i + 1}")
            out.append(int(through.min()) - 1)
        return out

    def loc_exact(self, i):
        self._check(i)
        dw = self.dual_words
        through = np.count_nonzero(dw[dw[:, i - 1] != 0], axis=1)
        if through.size == 0:
            raise Unrecoverable(f"no dual codeword covers coordinate {i}")
        return int(through.min()) - 1

    def _check(self, i):
        if not 1 <= i <= self.code.n:
            raise IndexOutOfRange(f"coordinate {i} outside 1..{self.code.n}")

    # -- minimality ------------------------------------------------------
    def _support_masks(self, dual):
        words = self.dual_words if dual else self.words
        return np.unique(_masks(words))

    def is_minimal(self, x, dual=False):
        """No nonzero codeword has support strictly inside supp(x)."""
        target = self.code.dual() if dual else self.code
        if not target.is_codeword(x) or not any(x):
            raise NotACodeword("minimality is defined for nonzero codewords")
        mx = _mask(x)
        m = self._support_masks(dual)
        inside = (m != 0) & ((m & ~mx) == 0) & (m != mx)
        return not bool(inside.any())

    def is_i_minimal(self, x, i, dual=False):
        """i in supp(x) and no codeword through i has support strictly inside supp(x)."""
        target = self.code.dual() if dual else self.code
        if not target.is_codeword(x) or not any(x):
            raise NotACodeword("minimality is defined for nonzero codewords")
        self._check(i)
        bit = 1 << (i - 1)
        mx = _mask(x)
        if not mx & bit:
            return False
        m = self._support_masks(dual)
        inside = ((m & bit) != 0) & ((m & ~mx) == 0) & (m != mx)
        return not bool(inside.any())

    # -- recovery sets ----------------------------------------------------
    def in_column_span(self, R, i):
        """Column i of G is a combination of the columns indexed by R."""
        G, F = self.code.G, self.code.field
        target = G[:, i - 1 : i]
        if not R:
            return not np.any(target)
        A = np.concatenate([G[:, [j - 1 for j in sorted(R)]], target], axis=1)
        _, pivots = F.rref(A)
        return len(R) not in pivots

    def recovery_set_equiv(self, R, i):
        R = set(R)
        for j in R | {i}:
            self._check(j)
        if i in R:
            raise ValueError("the coordinate must not belong to its recovery set")
        by_span = self.in_column_span(R, i)
        by_rank = self.code.projection_rank(R) == self.code.projection_rank(R | {i})
        allowed = _mask([1 if j + 1 in R or j + 1 == i else 0 for j in range(self.code.n)])
        m = self._support_masks(dual=True)
        bit = 1 << (i - 1)
        by_dual = bool((((m & bit) != 0) & ((m & ~allowed) == 0)).any())
        return by_span, by_rank, by_dual


def loc_exact(code, i, limit=None):
    return CodeOracle(code, limit).loc_exact(i)


def is_minimal(code, x, limit=None):
    return CodeOracle(code, limit).is_minimal(x)


def is_i_minimal(code, x, i, limit=None):
    return CodeOracle(code, limit).is_i_minimal(x, i)


def recovery_set_equiv(code, R, i, limit=None):
    return CodeOracle(code, limit).recovery_set_equiv(R, i)


def d_bound(n, k, q):
    """Upper bound on the number of candidate vectors: sum_{i<=n-k+1} C(n,i)(q-1)^i."""
    return sum(comb(n, i) * (q - 1) ** i for i in range(0, n - k + 2))
