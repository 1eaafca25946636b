"""Table-driven arithmetic in GF(p^m).

Elements are canonical integer codes: the polynomial sum(c_j * beta^j), with
beta a root of the chosen primitive polynomial, is stored as sum(c_j * p^j).
Zero is code 0 and one is code 1.  Arrays of codes (numpy ``int64``) are the
working representation for vectors and matrices; :class:`FieldElement` wraps a
single code for operator-style scalar arithmetic.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DegreeMismatch, DivisionByZero, FieldError, FieldMismatch, NotPrime, NotPrimitive

#: Discrete log of zero.  Sorts below every genuine exponent.
BOTTOM = -1

MAX_ORDER = 1 << 16
_TABLE_LIMIT = 1 << 10
_DEFAULT_LIMIT = 1 << 10


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _powers_of_root(p, m, poly):
    """Codes of beta^0, beta^1, ... until the sequence repeats (at most p^m)."""
    q = p**m
    low = [(-c) % p for c in poly[:m]]  # beta^m = -(c0 + ... + c_{m-1} beta^{m-1})
    coeffs = [1] + [0] * (m - 1)
    out = []
    for _ in range(q):
        out.append(sum(c * p**j for j, c in enumerate(coeffs)))
        top = coeffs[-1]
        coeffs = [0] + coeffs[:-1]
        coeffs = [(c + top * l) % p for c, l in zip(coeffs, low)]
    return out


def _is_primitive(p, m, poly):
    q = p**m
    powers = _powers_of_root(p, m, poly)
    cycle = powers[: q - 1]
    if 0 in cycle or len(set(cycle)) != q - 1:
        return False
    return powers[q - 1] == 1


@functools.lru_cache(maxsize=None)
def default_primpoly(p, m):
    """Smallest monic primitive polynomial of degree ``m`` over GF(p).

    Candidates are scanned by the integer value of their low coefficients
    ``c0 + c1*p + ...``, so GF(4) gets x^2+x+1 and GF(8) gets x^3+x+1.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p**m > _DEFAULT_LIMIT:
        raise NotPrimitive(f"no built-in polynomial for q={p**m}; pass primpoly explicitly")
    for low in itertools.product(range(p), repeat=m):
        poly = tuple(reversed(low)) + (1,)
        if _is_primitive(p, m, poly):
            return poly
    raise NotPrimitive(f"no primitive polynomial of degree {m} over GF({p})")  # pragma: no cover


def field_of_order(q):
    """GF(q) with the default primitive polynomial; ``q`` must be a prime power."""
    q = int(q)
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise NotPrime(f"{q} is not a prime power")
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise NotPrime(f"{q} is not a prime power")
    return GF(p, m)


class GF:
    """The finite field GF(p^m) with primitive element ``zeta`` = root of ``primpoly``.

    ``primpoly`` lists coefficients lowest degree first and must be monic of
    degree ``m``.  Instances are immutable once built.
    """

    def __init__(self, p, m=1, primpoly=None):
        p, m = int(p), int(m)
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
        q = p**m
        if q > MAX_ORDER:
            raise FieldError(f"q={q} exceeds the supported maximum {MAX_ORDER}")
        if primpoly is None:
            primpoly = default_primpoly(p, m)
        primpoly = tuple(int(c) for c in primpoly)
        if len(primpoly) != m + 1:
            raise DegreeMismatch(f"primpoly {primpoly} has degree {len(primpoly) - 1}, expected {m}")
        if any(not 0 <= c < p for c in primpoly):
            raise DegreeMismatch(f"primpoly coefficients must lie in [0, {p})")
        if primpoly[-1] != 1:
            raise DegreeMismatch(f"primpoly {primpoly} is not monic")
        if not _is_primitive(p, m, primpoly):
            raise NotPrimitive(f"{primpoly} is not primitive over GF({p})")

        self.p, self.m, self.q = p, m, q
        self.primpoly = primpoly
        powers = _powers_of_root(p, m, primpoly)[: q - 1]
        self.exp = np.array(powers + powers, dtype=np.int64)  # doubled: no mod on log sums
        self.exp.setflags(write=False)
        log = np.full(q, BOTTOM, dtype=np.int64)
        log[self.exp[: q - 1]] = np.arange(q - 1)
        log.setflags(write=False)
        self.log = log

        pw = p ** np.arange(m, dtype=np.int64)
        self._digits = (np.arange(q, dtype=np.int64)[:, None] // pw) % p
        self._pw = pw
        self._add = self._neg = self._mul = None
        codes = np.arange(q, dtype=np.int64)
        self._neg = self._digit_op(codes, None, lambda a, b: -a)
        if q <= _TABLE_LIMIT:
            self._add = self._digit_op(codes[:, None], codes[None, :], np.add)
            self._mul = self._mul_logs(codes[:, None], codes[None, :])

    # ------------------------------------------------------------------ basics
    @property
    def order(self):
        return self.q

    @property
    def zeta(self):
        return int(self.exp[1])

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.m, self.primpoly) == (other.p, other.m, other.primpoly)

    def __hash__(self):
        return hash((self.p, self.m, self.primpoly))

    def __repr__(self):
        return f"GF({self.p}^{self.m}, primpoly={list(self.primpoly)})"

    def __call__(self, code):
        return FieldElement(self, code)

    def elements(self):
        return [FieldElement(self, c) for c in range(self.q)]

    # ------------------------------------------------------ vectorised kernels
    def _digit_op(self, a, b, op):
        da = self._digits[a]
        db = None if b is None else self._digits[b]
        return ((op(da, db) % self.p) * self._pw).sum(axis=-1)

    def _mul_logs(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la, lb = self.log[a], self.log[b]
        out = self.exp[np.where(la < 0, 0, la) + np.where(lb < 0, 0, lb)]
        return np.where((la < 0) | (lb < 0), 0, out)

    def add(self, a, b):
        if self._add is not None:
            return self._add[a, b]
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self._digit_op(np.asarray(a), np.asarray(b), np.add)

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self._neg[b])

    def mul(self, a, b):
        if self._mul is not None:
            return self._mul[a, b]
        return self._mul_logs(a, b)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("zero has no inverse")
        out = self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]
        return int(out) if out.ndim == 0 else out

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        a = int(a)
        if a == 0:
            if e < 0:
                raise DivisionByZero("zero has no inverse")
            return 1 if e == 0 else 0
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    def dlog(self, a):
        """Exponent ``e`` in [0, q-2] with zeta^e = a, or ``BOTTOM`` for zero."""
        out = self.log[a]
        return int(out) if np.ndim(out) == 0 else out

    def nonzero(self):
        return range(1, self.q)

    # ------------------------------------------------------- linear algebra
    def dot(self, x, y):
        """Inner product of two 1-D code arrays."""
        prods = self.mul(np.asarray(x), np.asarray(y))
        return int(self.sum(prods, axis=0)) if np.ndim(prods) else int(prods)

    def sum(self, a, axis=0):
        a = np.asarray(a, dtype=np.int64)
        a = np.moveaxis(a, axis, 0)
        if a.shape[0] == 0:
            return np.zeros(a.shape[1:], dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=0)
        if self.m == 1:
            return a.sum(axis=0) % self.p
        acc = a[0]
        for row in a[1:]:
            acc = self.add(acc, row)
        return acc

    def matmul(self, a, b):
        """Matrix product of 2-D code arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a @ b) % self.p
        acc = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for t in range(a.shape[1]):
            acc = self.add(acc, self.mul(a[:, t, None], b[t][None, :]))
        return acc

    def scale(self, lam, x):
        return self.mul(lam, np.asarray(x, dtype=np.int64))

    def random(self, rng, shape, nonzero=False):
        if nonzero:
            return rng.integers(1, self.q, size=shape, dtype=np.int64)
        return rng.integers(0, self.q, size=shape, dtype=np.int64)

    def rref(self, a):
        """Reduced row-echelon form.  Returns ``(R, pivots)``; zero rows are dropped."""
        r = np.array(a, dtype=np.int64, copy=True).reshape(len(a), -1) if len(a) else np.zeros((0, 0), np.int64)
        rows, cols = r.shape
        pivots = []
        row = 0
        for col in range(cols):
            if row == rows:
                break
            nz = np.nonzero(r[row:, col])[0]
            if nz.size == 0:
                continue
            piv = row + nz[0]
            if piv != row:
                r[[row, piv]] = r[[piv, row]]
            r[row] = self.mul(self.inv(int(r[row, col])), r[row])
            for other in range(rows):
                if other != row and r[other, col]:
                    r[other] = self.sub(r[other], self.mul(int(r[other, col]), r[row]))
            pivots.append(col)
            row += 1
        return r[:row], pivots

    def rank(self, a):
        a = np.asarray(a, dtype=np.int64)
        if a.size == 0:
            return 0
        return len(self.rref(a)[1])

    def null_space(self, a, n=None):
        """Basis (as rows) of ``{x : a @ x = 0}``; ``n`` is needed when ``a`` has no rows."""
        a = np.asarray(a, dtype=np.int64)
        if n is None:
            n = a.shape[1]
        if a.size == 0:
            return np.eye(n, dtype=np.int64)
        r, pivots = self.rref(a)
        free = [c for c in range(n) if c not in pivots]
        basis = np.zeros((len(free), n), dtype=np.int64)
        for idx, f in enumerate(free):
            basis[idx, f] = 1
            for prow, pc in enumerate(pivots):
                basis[idx, pc] = self.neg(int(r[prow, f]))
        return basis


@dataclass(frozen=True)
class FieldElement:
    """A single element of a :class:`GF`, supporting ``+ - * / **``."""

    field: GF
    code: int

    def __post_init__(self):
        code = int(self.code)
        if not 0 <= code < self.field.q:
            raise ValueError(f"code {code} outside [0, {self.field.q})")
        object.__setattr__(self, "code", code)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.code
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.q if self.field.m == 1 else int(other)
        return NotImplemented

    def _wrap(self, code):
        return FieldElement(self.field, int(code))

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.code))

    def __neg__(self):
        return self._wrap(self.field.neg(self.code))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.code, o))

    def __pow__(self, e):
        return self._wrap(self.field.pow(self.code, int(e)))

    def inverse(self):
        return self._wrap(self.field.inv(self.code))

    def dlog(self):
        return self.field.dlog(self.code)

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        return self.code

    def __index__(self):
        return self.code

    def __repr__(self):
        return f"{self.field.q}:{self.code}"
