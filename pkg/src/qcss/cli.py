"""Command line front end.

Subcommands:
  build    generate a sequence set and export it (json or csv bundle)
  verify   sweep a set and check the family's claims, exit 0/1
  profile  dump per-pair correlation magnitudes as csv
  bounds   evaluate the correlation lower bounds for given (M, K, N)
  table    print the parameter table of all six families

Diagnostics go to stderr, data to stdout or the requested file.  Exit codes:
0 success / claims pass, 1 claim failure, 2 invalid parameters, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

import numpy as np

from . import __version__
from .galois import build_tower
from .constructions import CSSet, FAMILIES, PolySpec, generate, matrix_labels
from .correlation import (analyze, bound_liu, bound_periodic, bound_welch,
                          liu_applicable, profile_rows, sweep)

_HEADER_KEYS = ("construction", "p", "n", "q", "M", "K", "N", "L", "mode",
                "peak_claimed", "alphabet_claimed", "tool_version")


def _paint(s: str, code: str) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return s
    return f"\x1b[{code}m{s}\x1b[0m"


def _err(msg: str) -> None:
    print(f"qcss: {msg}", file=sys.stderr)


# -- export bundles -----------------------------------------------------------

def bundle_header(cs: CSSet) -> dict:
    M, K, N = cs.exps.shape
    head = {
        "construction": cs.id, "p": cs.ctx.p, "n": cs.ctx.n, "q": cs.ctx.q,
        "M": M, "K": K, "N": N, "L": cs.L, "mode": cs.mode,
        "peak_claimed": cs.claimed[3], "alphabet_claimed": cs.alphabet_claimed,
        "tool_version": __version__,
    }
    head.update(cs.extra)
    return head


def write_bundle(cs: CSSet, path: str, fmt: str) -> None:
    """Serialize a set; byte-identical output for identical inputs."""
    if fmt == "json":
        doc = {"header": bundle_header(cs), "matrices": cs.exps.tolist()}
        data = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    elif fmt == "csv":
        lines = [f"# {k}={v}" for k, v in sorted(bundle_header(cs).items())]
        lines.append("m,k,t,exp")
        M, K, N = cs.exps.shape
        for m in range(M):
            for k in range(K):
                row = cs.exps[m, k]
                for t in range(N):
                    lines.append(f"{m},{k},{t},{row[t]}")
        data = "\n".join(lines) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(data)


def load_bundle(path: str) -> CSSet:
    """Re-import an exported set, rebuilding the field context."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        head = doc["header"]
        exps = np.asarray(doc["matrices"], dtype=np.int64)
    else:
        head = {}
        rows = []
        for line in text.splitlines():
            if line.startswith("#"):
                k, _, v = line[1:].strip().partition("=")
                head[k] = v
            elif line and not line.startswith("m,"):
                rows.append(tuple(int(x) for x in line.split(",")))
        for key in ("p", "n", "q", "M", "K", "N", "L", "peak_claimed",
                    "alphabet_claimed"):
            if key in head:
                head[key] = int(head[key])
        M, K, N = head["M"], head["K"], head["N"]
        exps = np.zeros((M, K, N), dtype=np.int64)
        for m, k, t, e in rows:
            exps[m, k, t] = e
    fid = head["construction"]
    if fid not in FAMILIES:
        raise ValueError(f"unknown construction {fid!r} in bundle")
    fam = FAMILIES[fid]
    ctx = build_tower(head["p"], head["n"])
    dims = fam.dims(ctx.q)
    if exps.shape != dims[:3]:
        raise ValueError(f"bundle shape {exps.shape} does not match {fid} at q={ctx.q}")
    L = fam.unit_order(ctx.p, ctx.q)
    if head.get("L", L) != L:
        raise ValueError(f"bundle order L={head.get('L')} does not match {L}")
    if exps.min() < 0 or exps.max() >= L:
        raise ValueError("bundle exponents out of range")
    extra = {k: v for k, v in head.items() if k not in _HEADER_KEYS}
    return CSSet(id=fid, ctx=ctx, mode=fam.mode, L=L, exps=exps,
                 claimed=dims, alphabet_claimed=fam.alphabet(ctx.p, ctx.q),
                 params=matrix_labels(fid, ctx.q), extra=extra)


# -- shared argument handling ----------------------------------------------------

def _add_set_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--construction", required=True, choices=sorted(FAMILIES),
                    help="family id")
    sp.add_argument("-p", type=int, required=True, help="prime characteristic")
    sp.add_argument("-n", type=int, required=True, help="extension degree")
    sp.add_argument("--f-poly", default=None,
                    help="comma-separated F_q coefficient indices, low degree "
                         "first (construction C only)")


def _make_set(args) -> CSSet:
    ctx = build_tower(args.p, args.n)
    kwargs = {}
    if args.f_poly is not None:
        if args.construction != "C":
            raise ValueError("--f-poly only applies to construction C")
        try:
            coeffs = tuple(int(c) for c in args.f_poly.split(","))
        except ValueError:
            raise ValueError(f"bad --f-poly {args.f_poly!r}: need integers")
        kwargs["f"] = PolySpec(coeffs)
    return generate(args.construction, ctx, **kwargs)


def parse_pairs(spec: str, M: int) -> list[tuple[int, int]]:
    if spec == "all":
        return [(m1, m2) for m1 in range(M) for m2 in range(M)]
    out = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        m = re.fullmatch(r"(\d+)x(\d+)", part)
        if not m:
            raise ValueError(f"bad pair {part!r}: expected like 0x1 or 'all'")
        a, b = int(m.group(1)), int(m.group(2))
        if a >= M or b >= M:
            raise ValueError(f"pair {part} out of range for M={M}")
        out.append((a, b))
    if not out:
        raise ValueError("empty pair list")
    return out


# -- subcommands ------------------------------------------------------------------

def cmd_build(args) -> int:
    try:
        cs = _make_set(args)
    except ValueError as e:
        _err(str(e))
        return 2
    fmt = args.format
    if fmt is None:
        fmt = "csv" if args.out.endswith(".csv") else "json"
    try:
        write_bundle(cs, args.out, fmt)
    except OSError as e:
        _err(f"cannot write {args.out}: {e}")
        return 3
    M, K, N = cs.exps.shape
    _err(f"wrote {args.construction} set ({M} matrices of {K} x {N}, "
         f"L={cs.L}) to {args.out}")
    return 0


def cmd_verify(args) -> int:
    try:
        cs = _make_set(args)
        rep = analyze(cs, workers=args.parallel)
    except ValueError as e:
        _err(str(e))
        return 2
    print(rep.summary())
    if rep.claims_pass:
        print(f"claims: {_paint('PASS', '32')}")
        return 0
    print(f"claims: {_paint('FAIL', '31')}")
    return 1


def cmd_profile(args) -> int:
    try:
        cs = _make_set(args)
        rep = sweep(cs, workers=args.parallel)
        pairs = parse_pairs(args.pairs, cs.exps.shape[0])
    except ValueError as e:
        _err(str(e))
        return 2
    lines = ["m1,m2,tau,magnitude,kind,max_corr"]
    for m1, m2, tau, mag, kind in profile_rows(cs, pairs):
        lines.append(f"{m1},{m2},{tau},{mag:.9f},{kind},{rep.max_corr:.9f}")
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as e:
        _err(f"cannot write {args.out}: {e}")
        return 3
    _err(f"wrote {len(lines) - 1} profile rows to {args.out}")
    return 0


def cmd_bounds(args) -> int:
    M, K, N = args.M, args.K, args.N
    if M < 1 or K < 1 or N < 1:
        _err(f"M, K, N must be positive, got ({M}, {K}, {N})")
        return 2
    try:
        rows = []
        if args.mode in ("periodic", "both"):
            rows.append(("periodic set-size bound", bound_periodic(M, K, N), ""))
        if args.mode in ("aperiodic", "both"):
            rows.append(("aperiodic Welch-style bound", bound_welch(M, K, N), ""))
            ok, why = liu_applicable(M, K, N)
            if ok:
                rows.append(("aperiodic set-size bound", bound_liu(M, K, N), ""))
            else:
                rows.append(("aperiodic set-size bound", None, why))
    except ValueError as e:
        _err(str(e))
        return 2
    print(f"bounds for M={M}, K={K}, N={N}")
    for name, value, note in rows:
        if value is None:
            print(f"  {name:<28} {'-':>10}  inapplicable: {note}")
        else:
            tag = "  degenerate: M = K" if M == K else ""
            print(f"  {name:<28} {value:>10.4f}{tag}")
    return 0


def cmd_table(args) -> int:
    cols = ("id", "mode", "M", "K", "N", "peak", "alphabet", "constraints")
    rows = [cols]
    for fid in ("C", "A", "B", "D", "E", "F"):
        fam = FAMILIES[fid]
        rows.append((fid, fam.mode) + fam.dims_str
                    + (fam.alphabet_str, fam.constraint_str))
    widths = [max(len(r[i]) for r in rows) for i in range(len(cols))]
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qcss",
        description="quasi-complementary sequence sets over finite fields")
    ap.add_argument("--version", action="version", version=f"qcss {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="generate a set and export it")
    _add_set_args(b)
    b.add_argument("--out", required=True, help="output path")
    b.add_argument("--format", choices=("json", "csv"), default=None,
                   help="bundle format (default: from file suffix)")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="sweep a set and check its claims")
    _add_set_args(v)
    v.add_argument("--parallel", type=int, default=1, metavar="W",
                   help="worker processes for the sweep")
    v.set_defaults(func=cmd_verify)

    pr = sub.add_parser("profile", help="per-pair correlation magnitudes as csv")
    _add_set_args(pr)
    pr.add_argument("--pairs", required=True,
                    help="'all' or comma-separated m1xm2 pairs, e.g. 0x1,0x2")
    pr.add_argument("--out", required=True, help="output csv path")
    pr.add_argument("--parallel", type=int, default=1, metavar="W",
                    help="worker processes for the sweep")
    pr.set_defaults(func=cmd_profile)

    bo = sub.add_parser("bounds", help="evaluate correlation lower bounds")
    bo.add_argument("--M", type=int, required=True, help="number of matrices")
    bo.add_argument("--K", type=int, required=True, help="rows per matrix")
    bo.add_argument("--N", type=int, required=True, help="sequence length")
    bo.add_argument("--mode", choices=("periodic", "aperiodic", "both"),
                    default="both")
    bo.set_defaults(func=cmd_bounds)

    t = sub.add_parser("table", help="print the family parameter table")
    t.set_defaults(func=cmd_table)
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())
