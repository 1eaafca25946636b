"""Command-line interface: ``sharplrc <subcommand> ...``.

Exit status is 0 on success, 1 on domain errors (including oracle mismatches)
and 2 on usage errors.  ``LRC_BUDGET`` overrides the enumeration budget.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import bench as _bench
from .code import budget
from .codefile import parse_code
from .errors import LRCError, ParseError
from .gf import field_of_order
from .oracle import CodeOracle
from .recovery import classify, recover, recover_multi, sharp_structure
from .testset import compute_test_set


def parse_word(text, q=None):
    """``"0,1,?,2"`` -> ``[0, 1, None, 2]``."""
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok == "?":
            out.append(None)
            continue
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"bad word entry {tok!r}; use integers or '?'") from None
        if v < 0 or (q is not None and v >= q):
            raise ParseError(f"word entry {v} outside the field")
        out.append(v)
    return out


def _fmt(x):
    return ",".join(str(int(v)) for v in x)


def cmd_analyze(args, out):
    C = parse_code(args.code)
    lim = budget()
    print(f"field q={C.field.q} p={C.field.p} m={C.field.m}", file=out)
    print(f"n={C.n} k={C.k} redundancy={C.redundancy}", file=out)
    d = C.min_distance_exhaustive(lim) if C.field.q**C.k <= lim else None
    dd = None
    if C.k < C.n and C.field.q ** (C.n - C.k) <= lim:
        dd = C.dual().min_distance_exhaustive(lim)
    print(f"d={'unknown' if d is None else d} dual_distance={'unknown' if dd is None else dd}", file=out)
    return 0


def cmd_structure(args, out):
    C = parse_code(args.code)
    S = sharp_structure(C, stop=args.stop)
    verdict = classify(S)
    out.write(S.report(verdict.optimal))
    if args.full_testset:
        T = compute_test_set(C.field, C.H, stop="full")
        print(f"testset elements={len(T)} candidates={T.candidates}", file=out)
    return 0


def cmd_recover(args, out):
    C = parse_code(args.code)
    x = parse_word(args.word, C.field.q)
    if len(x) != C.n:
        raise ParseError(f"word has {len(x)} entries, the code has length {C.n}")
    S = sharp_structure(C)
    missing = [j + 1 for j, v in enumerate(x) if v is None]
    if len(missing) == 1:
        (i,) = missing
        x[i - 1] = recover(x, S, i)
        print(f"x_{i}={x[i - 1]}", file=out)
        full = x
    else:
        full = recover_multi(x, S)
    print(f"word={_fmt(full)}", file=out)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(_fmt(full) + "\n")
    return 0


def cmd_bench(args, out):
    records = _bench.bench(args.q, args.n, args.k, args.trials, args.seed, stop=args.stop)
    text = _bench.to_csv(records, timing=not args.no_timing)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    avg = _bench.averages(records)
    print(" ".join(f"{k}={v:.3f}" if isinstance(v, float) else f"{k}={v}" for k, v in avg.items()), file=sys.stderr)
    return 0


def _verify(C, lim):
    """Mismatch descriptions between sharp_structure and the oracle for one code."""
    S = sharp_structure(C)
    O = CodeOracle(C, lim)
    truth = O.localities()
    bad = [f"loc_{i} structure={a} oracle={b}" for i, (a, b) in enumerate(zip(S.localities, truth), 1) if a != b]
    if S.dual_distance != O.dual_distance():
        bad.append(f"dual_distance structure={S.dual_distance} oracle={O.dual_distance()}")
    return S, bad


def cmd_oracle_verify(args, out):
    lim = budget()
    codes = []
    if args.code:
        codes.append(parse_code(args.code))
    else:
        F = field_of_order(args.q)
        for t in range(args.trials):
            rng = np.random.default_rng([args.seed, t])
            codes.append(_bench.draw_code(F, args.n, args.k, rng))
    mismatches = 0
    for t, C in enumerate(codes):
        S, bad = _verify(C, lim)
        status = "ok" if not bad else "MISMATCH"
        print(f"code={t} q={C.field.q} n={C.n} k={C.k} loc={S.locality} dual_distance={S.dual_distance} {status}", file=out)
        for line in bad:
            print(f"  {line}", file=out)
        mismatches += bool(bad)
    print(f"verified={len(codes)} mismatches={mismatches}", file=out)
    return 1 if mismatches else 0


def build_parser():
    ap = argparse.ArgumentParser(prog="sharplrc", description="Sharp recovery structures for linear codes.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="code parameters, d and dual distance")
    p.add_argument("--code", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("structure", help="sharp recovery structure report")
    p.add_argument("--code", required=True)
    p.add_argument("--stop", choices=["sharp", "full", "cover"], default="sharp")
    p.add_argument("--full-testset", action="store_true", help="also build the complete test set of the dual")
    p.set_defaults(func=cmd_structure)

    p = sub.add_parser("recover", help="repair erased coordinates (marked '?')")
    p.add_argument("--code", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("bench", help="random-code benchmark, CSV output")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv")
    p.add_argument("--stop", choices=["sharp", "full", "cover"], default="sharp")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms for byte-stable output")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle-verify", help="compare structures with brute force")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--code")
    src.add_argument("--random", action="store_true")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--k", type=int, default=4)
    p.set_defaults(func=cmd_oracle_verify)
    return ap


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (LRCError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def cli_dispatch(argv, out=None):
    """Run the CLI and return the exit status instead of raising SystemExit."""
    try:
        return main(argv, out)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
