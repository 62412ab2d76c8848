"""Parse qcss profile CSVs and render per-pair correlation bar charts.

Input is the CSV written by `qcss profile`: a header line

    m1,m2,tau,magnitude,kind,max_corr

followed by one row per (pair, shift).  Each selected (m1, m2, kind) group
becomes one image: bars of |correlation| against the shift tau, with the
set-wide peak drawn as a horizontal line.  Parsing is strict; any malformed
line is reported with its 1-based row number.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

EXPECTED_HEADER = "m1,m2,tau,magnitude,kind,max_corr"
KINDS = ("auto", "cross")


class ProfileFormatError(ValueError):
    """Raised with the offending 1-based row number in .row."""

    def __init__(self, row: int, message: str):
        super().__init__(f"row {row}: {message}")
        self.row = row


@dataclass(frozen=True)
class ProfileRow:
    m1: int
    m2: int
    tau: int
    magnitude: float
    kind: str
    max_corr: float


def parse_profile(path: str) -> list[ProfileRow]:
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ProfileFormatError(1, "empty file")
    if lines[0].strip() != EXPECTED_HEADER:
        raise ProfileFormatError(1, f"bad header, expected {EXPECTED_HEADER!r}")
    rows = []
    for i, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 6:
            raise ProfileFormatError(i, f"expected 6 fields, got {len(parts)}")
        try:
            m1, m2, tau = int(parts[0]), int(parts[1]), int(parts[2])
            magnitude, max_corr = float(parts[3]), float(parts[5])
        except ValueError as e:
            raise ProfileFormatError(i, str(e)) from None
        kind = parts[4]
        if kind not in KINDS:
            raise ProfileFormatError(i, f"kind must be one of {KINDS}, got {kind!r}")
        if magnitude < 0 or max_corr < 0:
            raise ProfileFormatError(i, "magnitudes cannot be negative")
        if tau < 0:
            raise ProfileFormatError(i, "shift cannot be negative")
        rows.append(ProfileRow(m1, m2, tau, magnitude, kind, max_corr))
    if not rows:
        raise ProfileFormatError(2, "no data rows")
    return rows


def _group(rows: list[ProfileRow]):
    groups: dict[tuple[int, int, str], list[ProfileRow]] = {}
    for r in rows:
        groups.setdefault((r.m1, r.m2, r.kind), []).append(r)
    return groups


def render(csv_path: str, out_dir: str, pairs: list[tuple[int, int]] | None = None,
           tag: str | None = None, ext: str = "png") -> list[str]:
    """Render one bar chart per selected (m1, m2, kind) group.

    pairs=None renders every pair present in the file.  Returns the written
    file paths, one per group, named <tag>_<m1>x<m2>_<kind>.<ext>; the tag
    defaults to the CSV filename stem.
    """
    rows = parse_profile(csv_path)
    if tag is None:
        tag = os.path.splitext(os.path.basename(csv_path))[0]
    groups = _group(rows)
    if pairs is not None:
        wanted = set(pairs)
        missing = wanted - {(m1, m2) for m1, m2, _ in groups}
        if missing:
            raise ValueError(f"pairs not present in profile: {sorted(missing)}")
        groups = {key: g for key, g in groups.items() if (key[0], key[1]) in wanted}
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for (m1, m2, kind), g in sorted(groups.items()):
        g = sorted(g, key=lambda r: r.tau)
        taus = [r.tau for r in g]
        mags = [r.magnitude for r in g]
        peak = g[0].max_corr
        fig, ax = plt.subplots(figsize=(6, 3.2))
        ax.bar(taus, mags, width=0.8, color="#4878a8", label="|correlation|")
        ax.axhline(peak, color="#b24745", linestyle="--", linewidth=1.2,
                   label=f"set peak {peak:g}")
        ax.set_xlabel("shift tau")
        ax.set_ylabel("|correlation|")
        ax.set_title(f"{tag}: pair ({m1}, {m2}) {kind}")
        ax.set_xticks(taus)
        ax.set_ylim(0, max(peak, max(mags)) * 1.15 + 1e-9)
        ax.legend(loc="upper right", fontsize=8)
        fig.tight_layout()
        path = os.path.join(out_dir, f"{tag}_{m1}x{m2}_{kind}.{ext}")
        fig.savefig(path)
        plt.close(fig)
        written.append(path)
    return written
