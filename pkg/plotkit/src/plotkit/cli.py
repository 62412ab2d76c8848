"""plotkit command line: render profile CSVs to images.

    plotkit render prof.csv --out plots/ [--pairs 0x1,0x2] [--tag C] [--ext png]

Exit codes: 0 success, 2 bad arguments or malformed CSV, 3 I/O error.
"""

from __future__ import annotations

import argparse
import re
import sys

from .render import ProfileFormatError, render


def _parse_pairs(spec: str) -> list[tuple[int, int]]:
    out = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        m = re.fullmatch(r"(\d+)x(\d+)", part)
        if not m:
            raise ValueError(f"bad pair {part!r}: expected like 0x1")
        out.append((int(m.group(1)), int(m.group(2))))
    if not out:
        raise ValueError("empty pair list")
    return out


def cmd_render(args) -> int:
    pairs = None
    try:
        if args.pairs is not None:
            pairs = _parse_pairs(args.pairs)
    except ValueError as e:
        print(f"plotkit: {e}", file=sys.stderr)
        return 2
    try:
        written = render(args.csv, args.out, pairs=pairs, tag=args.tag,
                         ext=args.ext)
    except ProfileFormatError as e:
        print(f"plotkit: malformed profile {args.csv}: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"plotkit: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"plotkit: {e}", file=sys.stderr)
        return 3
    for path in written:
        print(path)
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="plotkit",
                                 description="render qcss correlation profiles")
    sub = ap.add_subparsers(dest="command", required=True)
    r = sub.add_parser("render", help="render a profile csv to bar charts")
    r.add_argument("csv", help="profile csv from `qcss profile`")
    r.add_argument("--out", required=True, help="output directory")
    r.add_argument("--pairs", default=None,
                   help="comma-separated m1xm2 pairs (default: all in file)")
    r.add_argument("--tag", default=None,
                   help="construction tag for filenames (default: csv stem)")
    r.add_argument("--ext", default="png", choices=("png", "svg", "pdf"))
    r.set_defaults(func=cmd_render)
    args = ap.parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())
