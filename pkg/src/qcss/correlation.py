"""Correlation analysis: exact sums, full sweeps, lower bounds, claim checks.

Set-level correlation sums are accumulated as integer histograms of
root-of-unity exponents (ExactSum), so deciding "this sum is exactly zero"
or "exactly -q" never goes through floating point.  Magnitudes are read out
in floating point only at the end.

Aperiodic sweeps scan shifts 0 <= tau < N over ordered matrix pairs; the
magnitude at a negative shift equals the magnitude at the positive shift
with the pair swapped, so nothing is missed.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .characters import ExactSum, unit_roots
from .constructions import FAMILIES, CSSet

SWEEP_CAP_Q = 16        # exhaustive sweeps above this are formula-mode territory
MAG_TOL = 1e-6          # magnitude comparison tolerance
BUCKET_DECIMALS = 6     # histogram bucketing of magnitudes


# -- exact correlation sums ----------------------------------------------------

def periodic_corr(x, y, tau: int, L: int) -> ExactSum:
    """Cyclic correlation of two exponent rows at shift tau, as an ExactSum."""
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("rows must be 1-D and equally long")
    d = (x - np.roll(y, -tau % x.size)) % L
    return ExactSum.from_exponents(d, L)


def aperiodic_corr(x, y, tau: int, L: int) -> ExactSum:
    """One-sided overlap correlation at shift tau, -N < tau < N."""
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("rows must be 1-D and equally long")
    n = x.size
    if not -n < tau < n:
        raise ValueError(f"shift {tau} out of range for length {n}")
    if tau >= 0:
        d = (x[: n - tau] - y[tau:]) % L
    else:
        d = (x[-tau:] - y[: n + tau]) % L
    return ExactSum.from_exponents(d, L)


def set_corr(X, Y, tau: int, mode: str, L: int) -> ExactSum:
    """Row-summed correlation between two K x N matrices at shift tau."""
    X = np.asarray(X, dtype=np.int64)
    Y = np.asarray(Y, dtype=np.int64)
    if X.shape != Y.shape or X.ndim != 2:
        raise ValueError("matrices must be 2-D with equal shape")
    n = X.shape[1]
    if mode == "periodic":
        d = (X - np.roll(Y, -tau % n, axis=1)) % L
    elif mode == "aperiodic":
        if not -n < tau < n:
            raise ValueError(f"shift {tau} out of range for length {n}")
        if tau >= 0:
            d = (X[:, : n - tau] - Y[:, tau:]) % L
        else:
            d = (X[:, -tau:] - Y[:, : n + tau]) % L
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return ExactSum.from_exponents(d, L)


# -- vectorized magnitude kernel ------------------------------------------------

def _mags_against_all(exps: np.ndarray, m1: int, tau: int, L: int,
                      mode: str, roots: np.ndarray,
                      offsets: np.ndarray) -> np.ndarray:
    """Magnitudes of the set-correlation of matrix m1 against every matrix,
    at shift tau, via one histogram per opposing matrix."""
    M, K, N = exps.shape
    X = exps[m1]
    if mode == "aperiodic":
        d = (X[None, :, : N - tau] - exps[:, :, tau:]) % L
    else:
        d = (X[None, :, :] - np.roll(exps, -tau, axis=2)) % L
    flat = d.reshape(M, -1)
    counts = np.bincount((flat + offsets).ravel(), minlength=M * L).reshape(M, L)
    return np.abs(counts @ roots)


def _sweep_chunk(exps: np.ndarray, L: int, mode: str,
                 m1_range: Iterable[int]):
    M, K, N = exps.shape
    roots = unit_roots(L)
    offsets = (np.arange(M, dtype=np.int64) * L)[:, None]
    auto_max, auto_wit = 0.0, None
    cross_max, cross_wit = 0.0, None
    hist: Counter = Counter()
    for m1 in m1_range:
        for tau in range(N):
            mags = _mags_against_all(exps, m1, tau, L, mode, roots, offsets)
            rounded = np.round(mags, BUCKET_DECIMALS)
            if tau:
                v = float(mags[m1])
                hist[float(rounded[m1])] += 1
                if v > auto_max:
                    auto_max, auto_wit = v, (m1, m1, tau)
            # cross terms: all m2 != m1 at every tau
            c = mags.copy()
            c[m1] = -1.0
            j = int(np.argmax(c))
            v = float(c[j])
            if v > cross_max:
                cross_max, cross_wit = v, (m1, j, tau)
            for m2 in range(M):
                if m2 != m1:
                    hist[float(rounded[m2])] += 1
    return auto_max, auto_wit, cross_max, cross_wit, hist


@dataclass
class BoundInfo:
    name: str
    value: Optional[float]
    applicable: bool
    note: str


@dataclass
class CorrReport:
    """Everything a sweep learned about one generated set."""

    id: str
    p: int
    n: int
    q: int
    mode: str
    M: int
    K: int
    N: int
    L: int
    claimed: tuple[int, int, int, int]
    auto_max: float = 0.0
    cross_max: float = 0.0
    max_corr: float = 0.0
    auto_witness: Optional[tuple[int, int, int]] = None
    cross_witness: Optional[tuple[int, int, int]] = None
    witness: Optional[tuple[int, int, int]] = None
    hist: dict = field(default_factory=dict)
    bounds: list[BoundInfo] = field(default_factory=list)
    rho: Optional[float] = None
    rho_bound: str = ""
    band: str = ""
    alphabet_measured: int = 0
    alphabet_claimed: int = 0
    claims_pass: Optional[bool] = None
    failures: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def summary(self) -> str:
        lines = [
            f"family {self.id} over F_{self.q} (p={self.p}, n={self.n}), {self.mode} mode",
            f"  claimed  (M, K, N, peak) = {self.claimed}",
            f"  measured (M, K, N) = ({self.M}, {self.K}, {self.N}), "
            f"peak = {self.max_corr:.6f} at (m1, m2, tau) = {self.witness}",
            f"  auto max = {self.auto_max:.6f}, cross max = {self.cross_max:.6f}",
            f"  alphabet: measured {self.alphabet_measured}, claimed {self.alphabet_claimed}",
            "  magnitude histogram:",
        ]
        for v in sorted(self.hist):
            lines.append(f"    {v:>12.6f}  x {self.hist[v]}")
        lines.append("  bounds:")
        for b in self.bounds:
            if b.applicable:
                lines.append(f"    {b.name:<28} {b.value:>10.4f}  {b.note}")
            else:
                lines.append(f"    {b.name:<28} {'-':>10}  inapplicable: {b.note}")
        if self.rho is not None:
            lines.append(f"  optimality rho = {self.rho:.4f} vs {self.rho_bound} [{self.band}]")
        for w in self.warnings:
            lines.append(f"  warning: {w}")
        for f_ in self.failures:
            lines.append(f"  FAILED: {f_}")
        lines.append(f"  elapsed {self.elapsed:.2f}s")
        return "\n".join(lines)


def sweep(cs: CSSet, workers: int = 1, cap: int = SWEEP_CAP_Q) -> CorrReport:
    """Exhaustive correlation sweep of a generated set.

    Auto terms cover every matrix at shifts 1..N-1; cross terms cover every
    ordered pair at shifts 0..N-1.  Chunks of matrices can be swept in
    parallel worker processes; results merge deterministically in matrix
    order, so the report is identical for any worker count.
    """
    ctx = cs.ctx
    if ctx.q > cap:
        raise ValueError(
            f"sweep is exhaustive and capped at q <= {cap}; "
            f"use the bound/trend formulas for larger fields")
    M, K, N = cs.exps.shape
    t0 = time.perf_counter()
    if workers <= 1 or M < 2 * workers:
        parts = [_sweep_chunk(cs.exps, cs.L, cs.mode, range(M))]
    else:
        ranges = [range(i, M, workers) for i in range(workers)]
        # round-robin ranges keep chunk sizes balanced
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futs = [pool.submit(_sweep_chunk, cs.exps, cs.L, cs.mode, r)
                    for r in ranges]
            parts = [f.result() for f in futs]
    auto_max, auto_wit = 0.0, None
    cross_max, cross_wit = 0.0, None
    hist: Counter = Counter()
    for am, aw, cm, cw, h in parts:
        if aw is not None and (am > auto_max
                               or (am == auto_max and _wit_key(aw) < _wit_key(auto_wit))):
            auto_max, auto_wit = am, aw
        if cw is not None and (cm > cross_max
                               or (cm == cross_max and _wit_key(cw) < _wit_key(cross_wit))):
            cross_max, cross_wit = cm, cw
        hist.update(h)
    if cross_max >= auto_max:
        max_corr, witness = cross_max, cross_wit
    else:
        max_corr, witness = auto_max, auto_wit
    rep = CorrReport(
        id=cs.id, p=ctx.p, n=ctx.n, q=ctx.q, mode=cs.mode,
        M=M, K=K, N=N, L=cs.L, claimed=cs.claimed,
        auto_max=auto_max, cross_max=cross_max, max_corr=max_corr,
        auto_witness=auto_wit, cross_witness=cross_wit, witness=witness,
        hist=dict(sorted(hist.items())),
        alphabet_measured=cs.alphabet_count(),
        alphabet_claimed=cs.alphabet_claimed,
    )
    rep.elapsed = time.perf_counter() - t0
    return rep


def _wit_key(w):
    # witnesses compare in scan order (m1, tau, m2); None sorts last
    if w is None:
        return (float("inf"),)
    m1, m2, tau = w
    return (m1, tau, m2)


def profile_rows(cs: CSSet, pairs: list[tuple[int, int]]):
    """Yield (m1, m2, tau, magnitude, kind) for the requested ordered pairs.

    Auto pairs skip tau = 0 (the trivial K*N peak); cross pairs include it.
    Rows come out grouped per pair, shifts ascending.
    """
    M, K, N = cs.exps.shape
    roots = unit_roots(cs.L)
    offsets = (np.arange(M, dtype=np.int64) * cs.L)[:, None]
    cache: dict[int, np.ndarray] = {}
    for m1, m2 in pairs:
        if m1 not in cache:
            cache[m1] = np.stack([
                _mags_against_all(cs.exps, m1, tau, cs.L, cs.mode, roots, offsets)
                for tau in range(N)])
        mags = cache[m1]
        kind = "auto" if m1 == m2 else "cross"
        for tau in range(1 if m1 == m2 else 0, N):
            yield m1, m2, tau, float(mags[tau, m2]), kind


# -- float oracle ---------------------------------------------------------------

def float_corr_maxima(cs: CSSet) -> tuple[float, float, float]:
    """Recompute (max, auto max, cross max) by direct complex accumulation.

    Independent of the histogram path: entries are mapped to complex doubles
    first and every correlation is a plain multiply-accumulate.
    """
    U = np.exp(2j * np.pi * cs.exps / cs.L)
    M, K, N = U.shape
    auto = cross = 0.0
    for m1 in range(M):
        X = U[m1]
        for tau in range(N):
            if cs.mode == "aperiodic":
                s = (X[None, :, : N - tau] * np.conj(U[:, :, tau:])).sum(axis=(1, 2))
            else:
                s = (X[None] * np.conj(np.roll(U, -tau, axis=2))).sum(axis=(1, 2))
            mags = np.abs(s)
            if tau:
                auto = max(auto, float(mags[m1]))
            mags[m1] = -1.0
            cross = max(cross, float(mags.max()))
    return max(auto, cross), auto, cross


# -- lower bounds and optimality --------------------------------------------------

def _check_sizes(M: int, K: int, N: int) -> None:
    if K < 1 or N < 1:
        raise ValueError(f"need K >= 1 and N >= 1, got K={K}, N={N}")
    if M < K:
        raise ValueError(f"need M >= K, got M={M}, K={K}")


def bound_periodic(M: int, K: int, N: int) -> float:
    """Set-size lower bound on the periodic correlation peak."""
    _check_sizes(M, K, N)
    return K * N * math.sqrt((M / K - 1) / (M * N - 1))


def bound_welch(M: int, K: int, N: int) -> float:
    """Welch-style lower bound on the aperiodic correlation peak."""
    _check_sizes(M, K, N)
    return K * N * math.sqrt((M / K - 1) / (M * (2 * N - 1) - 1))


def liu_applicable(M: int, K: int, N: int) -> tuple[bool, str]:
    """Preconditions of the sharper aperiodic bound: M >= 3K, K >= 2, N >= 2."""
    if K < 2:
        return False, f"needs K >= 2, got K={K}"
    if N < 2:
        return False, f"needs N >= 2, got N={N}"
    if M < 3 * K:
        return False, f"needs M >= 3K, got M={M} < {3 * K}"
    return True, ""


def bound_liu(M: int, K: int, N: int) -> float:
    """Sharper aperiodic lower bound, valid for M >= 3K, K >= 2, N >= 2."""
    ok, why = liu_applicable(M, K, N)
    if not ok:
        raise ValueError(f"aperiodic bound inapplicable: {why}")
    return math.sqrt(K * N * (1 - 2 * math.sqrt(K / (3 * M))))


def optimality_band(rho: float) -> str:
    if rho <= 1 + MAG_TOL:
        return "optimal"
    if rho <= 2:
        return "near-optimal"
    return "not near-optimal"


def attach_bounds(rep: CorrReport) -> CorrReport:
    """Fill in the bound table and the optimality factor for a report.

    Periodic sets are measured against the periodic set-size bound; aperiodic
    sets against the sharper aperiodic bound when its preconditions hold,
    falling back to the Welch-style bound otherwise.
    """
    M, K, N = rep.M, rep.K, rep.N
    per = BoundInfo("periodic set-size bound", None, rep.mode == "periodic",
                    "" if rep.mode == "periodic" else "set is aperiodic-mode")
    wel = BoundInfo("aperiodic Welch-style bound", None, rep.mode == "aperiodic",
                    "" if rep.mode == "aperiodic" else "set is periodic-mode")
    ok, why = liu_applicable(M, K, N)
    liu = BoundInfo("aperiodic set-size bound", None,
                    rep.mode == "aperiodic" and ok,
                    why if not ok else ("" if rep.mode == "aperiodic"
                                        else "set is periodic-mode"))
    per.value = bound_periodic(M, K, N)
    wel.value = bound_welch(M, K, N)
    if ok:
        liu.value = bound_liu(M, K, N)
    rep.bounds = [per, wel, liu]
    if rep.mode == "periodic":
        ref = per
    elif liu.applicable:
        ref = liu
    else:
        ref = wel
        rep.warnings.append(
            f"sharper aperiodic bound inapplicable ({liu.note}); using Welch-style bound")
    if ref.value and ref.value > 0:
        rep.rho = rep.max_corr / ref.value
        rep.rho_bound = f"{ref.name} {ref.value:.4f}"
        rep.band = optimality_band(rep.rho)
    return rep


def rho_trend(family_id: str, p: int, n_list) -> tuple[list[tuple[int, float]], list[str]]:
    """Formula-mode optimality factors (q, rho) for a family at growing q.

    No sets are generated: claimed peaks divide the applicable bound.  Field
    sizes where the family or the bound is undefined are skipped with a note.
    """
    fam = FAMILIES[family_id]
    points: list[tuple[int, float]] = []
    notes: list[str] = []
    for n in n_list:
        q = p ** n
        if family_id == "C" and n < 2:
            notes.append(f"q={q}: family C needs n > 1")
            continue
        if family_id in ("E", "F") and q <= 2:
            notes.append(f"q={q}: family {family_id} needs q > 2")
            continue
        M, K, N, peak = fam.dims(q)
        if fam.mode == "periodic":
            b = bound_periodic(M, K, N)
        else:
            ok, why = liu_applicable(M, K, N)
            if not ok:
                notes.append(f"q={q}: {why}")
                continue
            b = bound_liu(M, K, N)
        if b <= 0:
            notes.append(f"q={q}: bound degenerates to 0")
            continue
        points.append((q, peak / b))
    return points, notes


# -- claim verification ------------------------------------------------------------

def reference_value_set(cs: CSSet) -> list[float]:
    """Magnitudes every nontrivial correlation sum of the family may take."""
    q = cs.ctx.q
    if cs.id == "C":
        p = cs.ctx.p
        vals = {1.0, float(q - 1)}
        vals |= {float(abs(q * np.exp(2j * np.pi * j / p) + 1)) for j in range(p)}
        return sorted(vals)
    if cs.id == "E":
        return [0.0, float(q - 1)]
    return [0.0, float(q)]


def verify_claims(cs: CSSet, rep: CorrReport) -> CorrReport:
    """Check a sweep report against the family's claims.

    Failures: wrong shape, wrong peak, histogram values outside the family's
    value set.  A measured alphabet smaller than claimed is downgraded to a
    warning when the claim exceeds the unit-root order L (the claim then
    counts symbol slots that a single lcm order cannot distinguish).
    """
    Mc, Kc, Nc, peak = cs.claimed
    if (rep.M, rep.K, rep.N) != (Mc, Kc, Nc):
        rep.failures.append(
            f"shape ({rep.M}, {rep.K}, {rep.N}) != claimed ({Mc}, {Kc}, {Nc})")
    if abs(rep.max_corr - peak) > MAG_TOL:
        rep.failures.append(
            f"peak {rep.max_corr:.6f} != claimed {peak} (tol {MAG_TOL})")
    refs = reference_value_set(cs)
    for v in rep.hist:
        if min(abs(v - r) for r in refs) > MAG_TOL:
            rep.failures.append(
                f"histogram value {v:.6f} outside the family value set {refs}")
    if rep.alphabet_measured != rep.alphabet_claimed:
        msg = (f"alphabet measured {rep.alphabet_measured} != "
               f"claimed {rep.alphabet_claimed}")
        if rep.alphabet_claimed > cs.L:
            rep.warnings.append(msg + f" (claim exceeds unit-root order L={cs.L})")
        else:
            rep.failures.append(msg)
    rep.claims_pass = not rep.failures
    return rep


def analyze(cs: CSSet, workers: int = 1, cap: int = SWEEP_CAP_Q) -> CorrReport:
    """sweep + bounds + claim verification in one call."""
    rep = sweep(cs, workers=workers, cap=cap)
    attach_bounds(rep)
    return verify_claims(cs, rep)
