"""Plain-text code files.

::

    # comments and blank lines are ignored
    field q=4 p=2 m=2 primpoly=1,1,1
    code n=9 k=4
    G
    1 0 0 0 2 3 2 3 1
    ...

The third line is ``G`` (k generator rows) or ``H`` (n-k parity-check rows);
entries are canonical field codes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .code import LinearCode
from .errors import FieldError, ParseError, RankError
from .gf import GF

_FIELD = re.compile(r"^field q=(\d+) p=(\d+) m=(\d+) primpoly=(\d+(?:,\d+)*)$")
_CODE = re.compile(r"^code n=(\d+) k=(\d+)$")


@dataclass(frozen=True)
class CodeFile:
    field: GF
    n: int
    k: int
    kind: str  # "G" or "H"
    rows: tuple  # tuple of tuples of codes

    def to_code(self):
        rows = np.array(self.rows, dtype=np.int64).reshape(len(self.rows), self.n)
        if self.kind == "G":
            code = LinearCode.from_generator(self.field, rows)
        else:
            code = LinearCode.from_parity_check(self.field, rows)
        if code.k != self.k:
            raise RankError(f"header says k={self.k} but the matrix gives k={code.k}")
        return code

    def format(self):
        F = self.field
        out = [
            f"field q={F.q} p={F.p} m={F.m} primpoly={','.join(map(str, F.primpoly))}",
            f"code n={self.n} k={self.k}",
            self.kind,
        ]
        out += [" ".join(str(c) for c in row) for row in self.rows]
        return "\n".join(out) + "\n"

    @classmethod
    def from_code(cls, code, kind="G"):
        M = code.G if kind == "G" else code.H
        return cls(code.field, code.n, code.k, kind, tuple(tuple(int(c) for c in r) for r in M))


def parse_codefile(text):
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if len(lines) < 3:
        raise ParseError("expected field, code and matrix-kind lines", lines[-1][0] if lines else None)
    (no, head), (no2, dims), (no3, kind) = lines[:3]
    m = _FIELD.match(head)
    if not m:
        raise ParseError("expected 'field q=<q> p=<p> m=<m> primpoly=<c0,...,cm>'", no)
    q, p, deg = (int(g) for g in m.groups()[:3])
    poly = [int(c) for c in m.group(4).split(",")]
    field = GF(p, deg, poly)
    if field.q != q:
        raise FieldError(f"line {no}: q={q} but p^m={field.q}")
    m = _CODE.match(dims)
    if not m:
        raise ParseError("expected 'code n=<n> k=<k>'", no2)
    n, k = int(m.group(1)), int(m.group(2))
    if kind not in ("G", "H"):
        raise ParseError("expected matrix kind 'G' or 'H'", no3)
    rows = []
    for lineno, line in lines[3:]:
        try:
            row = tuple(int(t) for t in line.split(" "))
        except ValueError:
            raise ParseError("matrix entries must be integers separated by single spaces", lineno) from None
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected n={n}", lineno)
        if any(not 0 <= c < q for c in row):
            raise ParseError(f"entry outside [0, {q})", lineno)
        rows.append(row)
    expected = k if kind == "G" else n - k
    if len(rows) != expected:
        raise ParseError(f"{kind} needs {expected} rows, found {len(rows)}", lines[-1][0])
    return CodeFile(field, n, k, kind, tuple(rows))


def parse_code(source):
    """LinearCode from a code file path or its text."""
    return load_codefile(source).to_code()


def load_codefile(source):
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source):
        source = Path(source).read_text(encoding="utf-8")
    return parse_codefile(source)


def format_code(code, kind="G"):
    return CodeFile.from_code(code, kind).format()
