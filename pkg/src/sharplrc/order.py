"""The weight-then-exponent-lex total order on GF(q)^n and its lazy enumerator.

``x < y`` when ``wt(x) < wt(y)``, or the weights agree and the vector of
discrete logs of ``x`` precedes that of ``y`` lexicographically, with the log
of zero (``BOTTOM``) below every exponent.
"""

from __future__ import annotations

import enum
from math import comb

import numpy as np

from .errors import LengthMismatch
from .gf import BOTTOM


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def exponent_vector(field, x):
    return tuple(int(e) for e in field.log[np.asarray(x, dtype=np.int64)])


def sort_key(field, x):
    """Key realising the order: ``sorted(vs, key=lambda v: sort_key(F, v))``."""
    exps = exponent_vector(field, x)
    return (sum(e != BOTTOM for e in exps), exps)


def compare(field, x, y):
    if len(x) != len(y):
        raise LengthMismatch(f"lengths {len(x)} and {len(y)} differ")
    kx, ky = sort_key(field, x), sort_key(field, y)
    if kx < ky:
        return Ordering.LESS
    return Ordering.EQUAL if kx == ky else Ordering.GREATER


def precedes(field, x, y):
    return sort_key(field, x) < sort_key(field, y)


def count_upto(n, q, wmax):
    return sum(comb(n, i) * (q - 1) ** i for i in range(1, wmax + 1))


def _fixed_weight(n, w, codes):
    # lex over (BOTTOM, 0, 1, ..., q-2): at each position a zero comes first,
    # then the powers of zeta in exponent order
    if w == 0:
        yield (0,) * n
        return
    if n == w:
        for tail in _fixed_weight_full(n, codes):
            yield tail
        return
    for rest in _fixed_weight(n - 1, w, codes):
        yield (0,) + rest
    for c in codes:
        for rest in _fixed_weight(n - 1, w - 1, codes):
            yield (c,) + rest


def _fixed_weight_full(n, codes):
    if n == 0:
        yield ()
        return
    for c in codes:
        for rest in _fixed_weight_full(n - 1, codes):
            yield (c,) + rest


def enumerate_weight(n, field, w):
    """All vectors of weight exactly ``w``, increasing in the order."""
    codes = tuple(int(c) for c in field.exp[: field.q - 1])
    return _fixed_weight(n, w, codes)


def enumerate_upto(n, field, wmax):
    """Nonzero vectors of weight <= ``wmax`` as tuples of codes, strictly increasing."""
    for w in range(1, min(wmax, n) + 1):
        yield from enumerate_weight(n, field, w)
