"""Generators for six families of quasi-complementary sequence sets.

Every family produces M matrices of shape K x N whose entries are roots of
unity.  A set is stored as a CSSet: one integer array of exponents modulo a
single order L (the lcm of the orders of the unit-root factors), plus the
family's claimed parameters (M, K, N, peak correlation).

Families and their parameters in terms of q = p^n:

  C   periodic    (q^2, q-1, q-1, q+1)            alphabet p        needs n > 1
  A   aperiodic   ((q+1)^2, q, q, q)              alphabet p(q+1)
  B   aperiodic   (q(q+1), q, q, q)               alphabet p
  D   aperiodic   ((q-1)(q+2), q, q+1, q)         alphabet p(q+2)
  E   aperiodic   ((q-1)^2, q-1, q-1, q-1)        alphabet q-1      needs q > 2
  F   aperiodic   (q(q-1), q, q-2, q)             alphabet p(q-1)   needs q > 2
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Callable, Optional, Sequence

import numpy as np

from .galois import FieldCtx
from .characters import UnitSymbol, msequence


@dataclass
class CSSet:
    """A generated sequence set: exponent tensor plus claimed parameters.

    exps[m, k, t] in [0, L) encodes the entry exp(2*pi*i*exps[m,k,t]/L) of
    row k, position t of matrix m.  params[m] is the (a, b) label the family
    assigns to matrix m.  extra carries provenance strings for export and is
    not part of equality.
    """

    id: str
    ctx: FieldCtx
    mode: str                      # "periodic" or "aperiodic"
    L: int
    exps: np.ndarray               # (M, K, N) int64
    claimed: tuple[int, int, int, int]   # (M, K, N, peak)
    alphabet_claimed: int
    params: list[tuple[int, int]]
    extra: dict = field(default_factory=dict)

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.exps.shape

    def matrix(self, m: int) -> np.ndarray:
        return self.exps[m]

    def row(self, m: int, k: int) -> np.ndarray:
        return self.exps[m, k]

    def symbol(self, m: int, k: int, t: int) -> UnitSymbol:
        return UnitSymbol(int(self.exps[m, k, t]), self.L)

    def alphabet_count(self) -> int:
        """Number of distinct unit roots actually used."""
        return int(np.unique(self.exps).size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CSSet):
            return NotImplemented
        return (self.id == other.id and self.ctx == other.ctx
                and self.mode == other.mode and self.L == other.L
                and self.claimed == other.claimed
                and self.alphabet_claimed == other.alphabet_claimed
                and self.params == other.params
                and bool(np.array_equal(self.exps, other.exps)))


@dataclass(frozen=True)
class Family:
    """Static per-family metadata: parameter formulas and constraints."""

    id: str
    mode: str
    dims: Callable[[int], tuple[int, int, int, int]]    # q -> (M, K, N, peak)
    alphabet: Callable[[int, int], int]                 # (p, q) -> claimed size
    unit_order: Callable[[int, int], int]               # (p, q) -> L
    dims_str: tuple[str, str, str, str]
    alphabet_str: str
    constraint_str: str
    precondition: Callable[[FieldCtx], Optional[str]]   # None when satisfied


FAMILIES: dict[str, Family] = {
    "C": Family(
        "C", "periodic",
        lambda q: (q * q, q - 1, q - 1, q + 1),
        lambda p, q: p,
        lambda p, q: p,
        ("p^2n", "p^n - 1", "p^n - 1", "p^n + 1"), "p",
        "n > 1; shaping polynomial f such that f(z*x) - f(x) permutes F_q for every z != 1",
        lambda ctx: None if ctx.n > 1 else f"requires extension degree n > 1, got n={ctx.n}",
    ),
    "A": Family(
        "A", "aperiodic",
        lambda q: ((q + 1) ** 2, q, q, q),
        lambda p, q: p * (q + 1),
        lambda p, q: lcm(p, q + 1),
        ("(p^n + 1)^2", "p^n", "p^n", "p^n"), "p(p^n + 1)",
        "none",
        lambda ctx: None,
    ),
    "B": Family(
        "B", "aperiodic",
        lambda q: (q * (q + 1), q, q, q),
        lambda p, q: p,
        lambda p, q: p,
        ("p^n(p^n + 1)", "p^n", "p^n", "p^n"), "p",
        "none",
        lambda ctx: None,
    ),
    "D": Family(
        "D", "aperiodic",
        lambda q: ((q - 1) * (q + 2), q, q + 1, q),
        lambda p, q: p * (q + 2),
        lambda p, q: lcm(p, q + 2),
        ("(p^n - 1)(p^n + 2)", "p^n", "p^n + 1", "p^n"), "p(p^n + 2)",
        "none",
        lambda ctx: None,
    ),
    "E": Family(
        "E", "aperiodic",
        lambda q: ((q - 1) ** 2, q - 1, q - 1, q - 1),
        lambda p, q: q - 1,
        lambda p, q: q - 1,
        ("(p^n - 1)^2", "p^n - 1", "p^n - 1", "p^n - 1"), "p^n - 1",
        "p^n > 2",
        lambda ctx: None if ctx.q > 2 else f"requires field order q > 2, got q={ctx.q}",
    ),
    "F": Family(
        "F", "aperiodic",
        lambda q: (q * (q - 1), q, q - 2, q),
        lambda p, q: p * (q - 1),
        lambda p, q: lcm(p, q - 1),
        ("p^n(p^n - 1)", "p^n", "p^n - 2", "p^n"), "p(p^n - 1)",
        "p^n > 2",
        lambda ctx: None if ctx.q > 2 else f"requires field order q > 2, got q={ctx.q}",
    ),
}


def matrix_labels(family_id: str, q: int) -> list[tuple[int, int]]:
    """The (a, b) label of each matrix, in generation order."""
    if family_id == "C":
        return [(a, b) for a in range(q) for b in range(q)]
    if family_id == "A":
        return [(a, b) for a in range(q + 1) for b in range(q + 1)]
    if family_id == "B":
        return [(a, b) for a in range(q + 1) for b in range(q)]
    if family_id == "D":
        return [(a, b) for a in range(q - 1) for b in range(q + 2)]
    if family_id == "E":
        return [(a, b) for a in range(q - 1) for b in range(q - 1)]
    if family_id == "F":
        return [(i, b) for i in range(q - 1) for b in range(q)]
    raise KeyError(f"unknown family {family_id!r}")


# -- shaping polynomials for family C -----------------------------------------

@dataclass(frozen=True)
class PolySpec:
    """A polynomial over F_q: coefficient element indices, low degree first."""

    coeffs: tuple[int, ...]

    def degree(self) -> int:
        d = len(self.coeffs) - 1
        while d > 0 and self.coeffs[d] == 0:
            d -= 1
        return d

    def validate(self, ctx: FieldCtx) -> None:
        if not self.coeffs:
            raise ValueError("empty coefficient vector")
        if any(not 0 <= c < ctx.q for c in self.coeffs):
            raise ValueError("coefficient index out of range for F_q")
        if self.degree() >= ctx.q:
            raise ValueError(f"degree {self.degree()} must be below q={ctx.q}")

    def eval(self, ctx: FieldCtx, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, x), c)
        return acc


def check_perm_difference(f: PolySpec, ctx: FieldCtx) -> tuple[bool, Optional[int]]:
    """Does x -> f(z*x) - f(x) permute F_q for every z != 1?

    Returns (True, None) or (False, first violating z in element order).
    Exhaustive over all z and x.
    """
    f.validate(ctx)
    q = ctx.q
    fv = [f.eval(ctx, x) for x in range(q)]
    for z in range(q):
        if z == 1:
            continue
        seen = set()
        for x in range(q):
            seen.add(ctx.sub(fv[ctx.mul(z, x)], fv[x]))
        if len(seen) != q:
            return False, z
    return True, None


def _check_enum(given, canonical: list[int], what: str) -> list[int]:
    # optional caller-supplied enumeration order; must be a permutation
    if given is None:
        return canonical
    given = [int(v) for v in given]
    if sorted(given) != canonical:
        raise ValueError(f"{what} order must be a permutation of {canonical[:4]}...")
    return given


def _finish(fid, ctx, exps, extra=None) -> CSSet:
    fam = FAMILIES[fid]
    arr = np.asarray(exps, dtype=np.int64)
    return CSSet(
        id=fid, ctx=ctx, mode=fam.mode,
        L=fam.unit_order(ctx.p, ctx.q), exps=arr,
        claimed=fam.dims(ctx.q),
        alphabet_claimed=fam.alphabet(ctx.p, ctx.q),
        params=matrix_labels(fid, ctx.q),
        extra=extra or {},
    )


def gen_periodic_C(ctx: FieldCtx, f: Optional[PolySpec] = None,
                   d_order: Optional[Sequence[int]] = None) -> CSSet:
    """Family C: q^2 matrices of shape (q-1) x (q-1), entries p-th roots.

    Matrix (a, b), row d (nonzero), position t carries the exponent
    Tr(d * (f(alpha^t) + a) + b * alpha^t) of zeta_p.
    """
    fam = FAMILIES["C"]
    msg = fam.precondition(ctx)
    if msg:
        raise ValueError(f"construction C: {msg}")
    if f is None:
        f = PolySpec((0, 1))
    ok, z = check_perm_difference(f, ctx)
    if not ok:
        raise ValueError(
            f"construction C: f(z*x) - f(x) is not a permutation of F_q at z={z}")
    q = ctx.q
    ds = _check_enum(d_order, ctx.elements(include_zero=False), "d")
    N = q - 1
    tr, mul, add = ctx.trace_to_prime, ctx.mul, ctx.add
    apow = [ctx.pow(ctx.alpha, t) for t in range(N)]
    fvals = [f.eval(ctx, x) for x in apow]
    exps = []
    for a in range(q):
        fa = [add(v, a) for v in fvals]
        for b in range(q):
            bt = [mul(b, x) for x in apow]
            exps.append([[tr(add(mul(d, fa[t]), bt[t])) for t in range(N)]
                         for d in ds])
    return _finish("C", ctx, exps,
                   extra={"f_poly": ",".join(map(str, f.coeffs))})


def gen_A(ctx: FieldCtx, d_order: Optional[Sequence[int]] = None) -> CSSet:
    """Family A: (q+1)^2 matrices of shape q x q over the p(q+1)-th roots.

    Row d of matrix (a, b) combines the additive character of d times an
    m-sequence window with a (q+1)-ary linear phase in t.
    """
    q, p = ctx.q, ctx.p
    L = lcm(p, q + 1)
    wp, wu = L // p, L // (q + 1)
    s = msequence(ctx)
    period = q * q - 1
    ds = _check_enum(d_order, ctx.elements(), "d")
    tr, mul = ctx.trace_to_prime, ctx.mul
    exps = []
    for a in range(q + 1):
        win = [s[(a * (q - 1) + t) % period] for t in range(q)]
        base = [[tr(mul(d, w)) for w in win] for d in ds]
        for b in range(q + 1):
            phase = [(b * t) % (q + 1) * wu for t in range(q)]
            exps.append([[(bk[t] * wp + phase[t]) % L for t in range(q)]
                         for bk in base])
    return _finish("A", ctx, exps)


def gen_B(ctx: FieldCtx, d_order: Optional[Sequence[int]] = None) -> CSSet:
    """Family B: q(q+1) matrices of shape q x q over the p-th roots.

    Same m-sequence windows as family A, but the phase factor is an additive
    character of b * alpha^t gated off at the final position, keeping the
    alphabet at p symbols.
    """
    q = ctx.q
    s = msequence(ctx)
    period = q * q - 1
    ds = _check_enum(d_order, ctx.elements(), "d")
    tr, mul, add = ctx.trace_to_prime, ctx.mul, ctx.add
    # alpha^t for t < q-1, gated to 0 at t = q-1
    gate = [ctx.pow(ctx.alpha, t) for t in range(q - 1)] + [0]
    exps = []
    for a in range(q + 1):
        win = [s[(a * (q - 1) + t) % period] for t in range(q)]
        for b in range(q):
            bg = [mul(b, g) for g in gate]
            exps.append([[tr(add(mul(d, win[t]), bg[t])) for t in range(q)]
                         for d in ds])
    return _finish("B", ctx, exps)


def gen_D(ctx: FieldCtx, d_order: Optional[Sequence[int]] = None) -> CSSet:
    """Family D: (q-1)(q+2) matrices of shape q x (q+1) over p(q+2)-th roots.

    m-sequence windows are taken with stride q+1 and the linear phase runs
    over the (q+2)-th roots.
    """
    q, p = ctx.q, ctx.p
    L = lcm(p, q + 2)
    wp, wu = L // p, L // (q + 2)
    s = msequence(ctx)
    period = q * q - 1
    ds = _check_enum(d_order, ctx.elements(), "d")
    tr, mul = ctx.trace_to_prime, ctx.mul
    N = q + 1
    exps = []
    for a in range(q - 1):
        win = [s[(a * (q + 1) + t) % period] for t in range(N)]
        base = [[tr(mul(d, w)) for w in win] for d in ds]
        for b in range(q + 2):
            phase = [(b * t) % (q + 2) * wu for t in range(N)]
            exps.append([[(bk[t] * wp + phase[t]) % L for t in range(N)]
                         for bk in base])
    return _finish("D", ctx, exps)


def find_trace_zero(ctx: FieldCtx) -> int:
    """The unique e in [0, q] with RelTr(beta^e) = 0.

    The zeros of the relative-trace m-sequence sit exactly q+1 apart, so a
    single window determines them all.
    """
    hits = [e for e in range(ctx.q + 1)
            if ctx.rel_trace(ctx.fq2_pow(ctx.beta, e)) == 0]
    if len(hits) != 1:
        raise RuntimeError(f"expected one trace zero in [0, q], found {hits}")
    return hits[0]


def phi_map(x: int, ctx: FieldCtx) -> int:
    """Default relabeling bijection F_q -> {0..q-1}: 0 -> 0, alpha^i -> i+1."""
    if x == 0:
        return 0
    return ctx.dlog(x) + 1


def _phi_table(ctx: FieldCtx, phi) -> list[int]:
    q = ctx.q
    if phi is None:
        tab = [phi_map(x, ctx) for x in range(q)]
    elif callable(phi):
        tab = [int(phi(x)) for x in range(q)]
    else:
        tab = [int(v) for v in phi]
        if len(tab) != q:
            raise ValueError(f"phi table must list all {q} elements")
    if tab[0] != 0:
        raise ValueError("phi must send 0 to 0")
    if sorted(tab) != list(range(q)):
        raise ValueError("phi must be a bijection onto 0..q-1")
    return tab


def gen_E(ctx: FieldCtx, phi=None,
          row_order: Optional[Sequence[int]] = None) -> CSSet:
    """Family E: (q-1)^2 matrices of shape (q-1) x (q-1), (q-1)-th roots.

    Entries come from relabeled zero-free m-sequence windows (each window of
    q-1 symbols strictly between consecutive trace zeros) with a linear phase.
    phi may override the relabeling bijection; it must fix 0.
    """
    fam = FAMILIES["E"]
    msg = fam.precondition(ctx)
    if msg:
        raise ValueError(f"construction E: {msg}")
    q = ctx.q
    L = q - 1
    e0 = find_trace_zero(ctx)
    tab = _phi_table(ctx, phi)
    s = msequence(ctx)
    period = q * q - 1
    rows = _check_enum(row_order, list(range(q - 1)), "row")
    exps = []
    for a in range(q - 1):
        us = []
        for t in range(q - 1):
            u = s[(e0 + a * (q + 1) + t + 1) % period]
            if u == 0:
                raise RuntimeError("zero symbol inside a zero-free window")
            us.append(tab[u])
        for b in range(q - 1):
            exps.append([[(k * us[t] + b * t) % L for t in range(q - 1)]
                         for k in rows])
    return _finish("E", ctx, exps)


def gen_F(ctx: FieldCtx, d_order: Optional[Sequence[int]] = None) -> CSSet:
    """Family F: q(q-1) matrices of shape q x (q-2) over the p(q-1)-th roots.

    A multiplicative character in t modulated by additive characters of
    d * (alpha^t + b); every matrix has ideal aperiodic autocorrelation.
    """
    fam = FAMILIES["F"]
    msg = fam.precondition(ctx)
    if msg:
        raise ValueError(f"construction F: {msg}")
    q, p = ctx.q, ctx.p
    L = lcm(p, q - 1)
    wp, wm = L // p, L // (q - 1)
    ds = _check_enum(d_order, ctx.elements(), "d")
    tr, mul, add = ctx.trace_to_prime, ctx.mul, ctx.add
    N = q - 2
    apow = [ctx.pow(ctx.alpha, t) for t in range(N)]
    # trace part depends on (b, d, t) only
    tpart = {b: [[tr(mul(d, add(x, b))) for x in apow] for d in ds]
             for b in range(q)}
    exps = []
    for i in range(q - 1):
        mphase = [(i * t) % (q - 1) * wm for t in range(N)]
        for b in range(q):
            tb = tpart[b]
            exps.append([[(tb_l[t] * wp + mphase[t]) % L for t in range(N)]
                         for tb_l in tb])
    return _finish("F", ctx, exps)


_GENERATORS = {
    "C": gen_periodic_C,
    "A": gen_A,
    "B": gen_B,
    "D": gen_D,
    "E": gen_E,
    "F": gen_F,
}


def generate(family_id: str, ctx: FieldCtx, **kwargs) -> CSSet:
    """Dispatch to the family generator; kwargs pass through."""
    if family_id not in _GENERATORS:
        raise KeyError(f"unknown family {family_id!r}; choose from {sorted(_GENERATORS)}")
    return _GENERATORS[family_id](ctx, **kwargs)


def alphabet_count(cs: CSSet) -> int:
    return cs.alphabet_count()
