"""Groebner test sets of linear codes and reduction by them.

A test set for a code D is a list of syzygies ``lead - trail`` (codewords of D
written as a difference with ``trail`` strictly below ``lead`` in the
weight/exponent-lex order).  Reducing a vector by its words walks down the
order inside the vector's coset of D; with a complete test set the walk ends at
the coset minimum, which is zero exactly for codewords.

Construction streams candidate vectors in increasing order.  A candidate whose
one-coordinate restrictions are all coset minima and whose coset was already
seen becomes a new lead, paired with the minimum of that coset as its trail;
a candidate opening a new coset becomes that coset's minimum.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateCode, LengthMismatch, ParseError
from .gf import BOTTOM
from .order import enumerate_upto, sort_key

STOP_MODES = ("full", "sharp", "cover")


@dataclass(frozen=True)
class Syzygy:
    lead: tuple
    trail: tuple
    word: tuple

    @property
    def weight(self):
        return sum(1 for v in self.word if v)

    @property
    def support(self):
        return frozenset(j + 1 for j, v in enumerate(self.word) if v)


def divides(field, g, w):
    """True iff some nonzero scalar ``lam`` gives ``w_j = lam * g_j`` on supp(g)."""
    if len(g) != len(w):
        raise LengthMismatch("vectors of different length")
    supp = [j for j, v in enumerate(g) if v]
    if not supp:
        return True
    if any(w[j] == 0 for j in supp):
        return False
    ratios = {(int(field.log[w[j]]) - int(field.log[g[j]])) % (field.q - 1) for j in supp}
    return len(ratios) == 1


class _Syndromes:
    """Coset keys for D = rowspace(M): the product with a parity-check matrix of D."""

    def __init__(self, field, M):
        n = M.shape[1]
        P = field.null_space(M, n)
        self.field = field
        self.binary = field.q == 2
        if self.binary:
            bits = 1 << np.arange(P.shape[0], dtype=object)
            self.cols = [int(sum(int(b) for b, v in zip(bits, P[:, j]) if v)) for j in range(n)]
        else:
            # contrib[j, c] = syndrome of c * e_j
            codes = np.arange(field.q, dtype=np.int64)
            self.contrib = np.stack([field.mul(codes[:, None], P[:, j][None, :]) for j in range(n)])
        self.zero = 0 if self.binary else np.zeros(P.shape[0], dtype=np.int64).tobytes()
        self.redundancy = P.shape[0]

    def __call__(self, v, supp):
        if self.binary:
            s = 0
            for j in supp:
                s ^= self.cols[j]
            return s
        if not supp:
            return self.zero
        rows = self.contrib[supp, [v[j] for j in supp]]
        return self.field.sum(rows, axis=0).tobytes()


class TestSet:
    """A finished (immutable) test set together with its construction statistics.

    ``complete`` is True when the candidate stream was exhausted, i.e. the set
    certifies membership for every vector; early-stopped sets still carry
    every lead found so far.
    """

    __test__ = False  # not a pytest class

    def __init__(
        self,
        field,
        n,
        elements,
        *,
        candidates=0,
        complete=False,
        wmax=None,
        stop="full",
        divisibility="scalar",
        cosets=None,
        stopped_by=None,
    ):
        self.field = field
        self.n = n
        self.elements = list(elements)
        self.candidates = candidates
        self.complete = complete
        self.wmax = wmax
        self.stop = stop
        self.divisibility = divisibility
        self.cosets = cosets
        self.stopped_by = stopped_by  # "exhausted", "sharp", "cover" or "budget"
        if self.elements:
            self._leads = np.array([e.lead for e in self.elements], dtype=np.int64)
            self._words = np.array([e.word for e in self.elements], dtype=np.int64)
        else:
            self._leads = np.zeros((0, n), dtype=np.int64)
            self._words = np.zeros((0, n), dtype=np.int64)
        self._by_lead = {e.lead: e for e in self.elements}
        self._lead_logs = field.log[self._leads]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"TestSet({len(self)} elements, n={self.n}, q={self.field.q}, complete={self.complete})"

    @property
    def leads(self):
        return [e.lead for e in self.elements]

    def element(self, lead):
        return self._by_lead[tuple(lead)]

    def words(self):
        return [e.word for e in self.elements]

    def covering(self, i):
        """Elements whose word has coordinate ``i`` (1-based) in its support."""
        return [e for e in self.elements if e.word[i - 1]]

    def min_weight_through(self, i):
        ws = [e.weight for e in self.covering(i)]
        return min(ws) if ws else None

    def covered(self):
        out = set()
        for e in self.elements:
            out |= e.support
        return out

    # ------------------------------------------------------------- reduction
    def _dividing_steps(self, x):
        """Rows ``(idx, lam)`` with ``lam * lead`` agreeing with ``x`` on supp(lead)."""
        if not len(self.elements):
            return []
        F = self.field
        L, Llog = self._leads, self._lead_logs
        on = L != 0
        xlog = F.log[x]
        if F.q == 2:
            hit = np.nonzero(((L == x) | ~on).all(axis=1))[0]
            return [(int(i), 1) for i in hit]
        ok = ((x != 0)[None, :] | ~on).all(axis=1)
        diff = np.where(on, (xlog[None, :] - Llog) % (F.q - 1), -1)
        first = diff[np.arange(len(L)), on.argmax(axis=1)]
        same = ((diff == first[:, None]) | ~on).all(axis=1)
        hit = np.nonzero(ok & same)[0]
        return [(int(i), int(F.exp[first[i]])) for i in hit]

    def _best_step(self, x):
        """Smallest ``x - lam * t`` over all words and scalars, if it is below ``x``."""
        F = self.field
        if not len(self.elements):
            return None
        lams = np.arange(1, F.q, dtype=np.int64)
        cand = F.sub(x[None, None, :], F.mul(lams[:, None, None], self._words[None, :, :]))
        cand = cand.reshape(-1, self.n)
        wts = np.count_nonzero(cand, axis=1)
        wx = int(np.count_nonzero(x))
        low = wts.min()
        if low > wx:
            return None
        cand = cand[wts == low]
        exps = F.log[cand]
        if low == wx:
            xe = F.log[x]
            differ = exps != xe
            has = differ.any(axis=1)
            pos = differ.argmax(axis=1)
            below = has & (exps[np.arange(len(exps)), pos] < xe[pos])
            if not below.any():
                return None
            cand, exps = cand[below], exps[below]
        return cand[np.lexsort(exps.T[::-1])[0]]

    def reduce(self, x, exhaustive=None):
        """Reduce ``x`` by the test set (repeated strictly decreasing steps).

        Each step subtracts a scalar multiple of a test-set word and lands
        strictly lower in the order.  Steps through leads dividing ``x`` are
        tried first; ``exhaustive`` then falls back to every word and scalar.
        It defaults to False only for complete sets built with exact
        divisibility, where dividing leads provably reach the coset minimum.
        """
        x = np.asarray(x, dtype=np.int64).copy()
        if x.shape != (self.n,):
            raise LengthMismatch(f"expected length {self.n}")
        if exhaustive is None:
            exhaustive = not (self.complete and self.divisibility == "exact")
        F = self.field
        while True:
            key = sort_key(F, x)
            for idx, lam in self._dividing_steps(x):
                y = F.sub(x, F.mul(lam, self._words[idx]))
                if sort_key(F, y) < key:
                    x = y
                    break
            else:
                y = None
            if y is not None:
                continue
            if exhaustive:
                step = self._best_step(x)
                if step is not None:
                    x = step
                    continue
            return tuple(int(v) for v in x)

    def is_member(self, x):
        return not any(self.reduce(x))

    # -------------------------------------------------------- serialisation
    def to_text(self):
        fmt = lambda v: " ".join(str(int(c)) for c in v)
        return "".join(f"lead={fmt(e.lead)} trail={fmt(e.trail)} word={fmt(e.word)}\n" for e in self.elements)

    @classmethod
    def from_text(cls, field, text, **kw):
        pat = re.compile(r"^lead=([\d ]+) trail=([\d ]+) word=([\d ]+)$")
        elements = []
        n = None
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            m = pat.match(line.strip())
            if not m:
                raise ParseError("expected 'lead=... trail=... word=...'", lineno)
            vecs = [tuple(int(t) for t in g.split()) for g in m.groups()]
            if len({len(v) for v in vecs}) != 1 or (n is not None and len(vecs[0]) != n):
                raise ParseError("inconsistent vector lengths", lineno)
            if any(c >= field.q for v in vecs for c in v):
                raise ParseError(f"entry outside GF({field.q})", lineno)
            n = len(vecs[0])
            lead, trail, word = vecs
            if tuple(int(c) for c in field.sub(np.array(lead), np.array(trail))) != word:
                raise ParseError("word != lead - trail", lineno)
            elements.append(Syzygy(lead, trail, word))
        if n is None:
            raise ParseError("empty test set")
        return cls(field, n, elements, **kw)


def reduce(x, T):
    return T.reduce(x)


def is_member(x, T):
    return T.is_member(x)


def _projective(field, v, first):
    return tuple(int(c) for c in field.mul(field.inv(v[first]), np.array(v, dtype=np.int64)))


def _finalised(best, plateau):
    # a lighter word through i (weight w) is found by the end of plateau w//2 + 1
    return all(b is not None and (b - 1) // 2 + 1 <= plateau for b in best)


def compute_test_set(field, M, *, wmax=None, stop="full", divisibility="scalar", max_candidates=None):
    """Test set of the code generated by the rows of ``M``.

    ``stop`` selects the termination rule:

    ``"full"``
        exhaust every candidate of weight <= ``wmax``; the result certifies
        membership for all vectors.
    ``"sharp"``
        stop at the first weight plateau after which, for every coordinate i,
        no codeword through i can be lighter than the lightest word already
        found through i.
    ``"cover"``
        stop as soon as the words found cover every coordinate.

    ``divisibility="scalar"`` also skips candidates that are a nonzero
    multiple of a lead already found (see :func:`divides`); ``"exact"`` only
    skips candidates having a lead as a restriction.

    ``wmax`` defaults to ``n - r + 1`` (r = rank of ``M``), which bounds the
    weight of every lead.
    """
    if stop not in STOP_MODES:
        raise ValueError(f"stop must be one of {STOP_MODES}")
    if divisibility not in ("scalar", "exact"):
        raise ValueError("divisibility must be 'scalar' or 'exact'")
    scalar = divisibility == "scalar" and field.q > 2
    M = np.atleast_2d(np.asarray(M, dtype=np.int64))
    n = M.shape[1]
    basis, pivots = field.rref(M)
    r = len(pivots)
    zero_cols = [j + 1 for j in range(n) if not np.any(basis[:, j])] if r else list(range(1, n + 1))
    if zero_cols:
        raise DegenerateCode(f"coordinates {zero_cols} are zero in every word of the code")
    if wmax is None:
        wmax = n - r + 1
    syndrome = _Syndromes(field, basis)

    zero = (0,) * n
    minima = {syndrome.zero: zero}
    normal = {zero}
    elements = []
    projective = set()
    best = [None] * n
    covered = set()
    candidates = 0
    plateau = 0
    complete = True
    reason = "exhausted"
    for v in enumerate_upto(n, field, wmax):
        supp = [j for j in range(n) if v[j]]
        w = len(supp)
        if w != plateau:
            if stop == "sharp" and plateau and _finalised(best, plateau):
                complete, reason = False, "sharp"
                break
            plateau = w
        if max_candidates is not None and candidates >= max_candidates:
            complete, reason = False, "budget"
            break
        candidates += 1
        # every one-coordinate restriction of v was classified earlier; one
        # that is not a coset minimum is divisible by a lead, hence so is v
        if any(v[:j] + (0,) + v[j + 1 :] not in normal for j in supp):
            continue
        if scalar:
            key = _projective(field, v, supp[0])
            if key in projective:
                continue
        s = syndrome(v, supp)
        trail = minima.get(s)
        if trail is None:
            minima[s] = v
            normal.add(v)
            continue
        word = tuple(int(c) for c in field.sub(np.array(v), np.array(trail)))
        e = Syzygy(v, trail, word)
        elements.append(e)
        if scalar:
            projective.add(key)
        wt = e.weight
        for j, c in enumerate(word):
            if c and (best[j] is None or wt < best[j]):
                best[j] = wt
        if stop == "cover":
            covered |= e.support
            if len(covered) == n:
                complete, reason = False, "cover"
                break
    return TestSet(
        field,
        n,
        elements,
        candidates=candidates,
        complete=complete,
        wmax=wmax,
        stop=stop,
        divisibility=divisibility,
        cosets=len(minima),
        stopped_by=reason,
    )


__all__ = ["BOTTOM", "Syzygy", "TestSet", "compute_test_set", "divides", "is_member", "reduce"]
