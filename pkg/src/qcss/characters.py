"""Exact arithmetic with roots of unity, field characters, and m-sequences.

A single root of unity is a UnitSymbol (exponent mod L).  A finite sum of
roots of unity is an ExactSum: an integer histogram counting how often each
exponent occurs.  Sums stay exact for as long as possible; deciding whether
a sum equals an integer is done by reducing the histogram modulo the L-th
cyclotomic polynomial, which is the zero test in Z[x]/(Phi_L).  Floating
point only enters when a magnitude is finally read out.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .galois import FieldCtx


@dataclass(frozen=True)
class UnitSymbol:
    """exp(2*pi*i*exp/order), stored exactly as an exponent mod order."""

    exp: int
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        object.__setattr__(self, "exp", self.exp % self.order)

    def value(self) -> complex:
        return complex(np.exp(2j * np.pi * self.exp / self.order))


def unit_mul(s1: UnitSymbol, s2: UnitSymbol) -> UnitSymbol:
    if s1.order != s2.order:
        raise ValueError(f"mixed orders {s1.order} and {s2.order}; lift first")
    return UnitSymbol(s1.exp + s2.exp, s1.order)


def unit_conj(s: UnitSymbol) -> UnitSymbol:
    return UnitSymbol(-s.exp, s.order)


def lift(s: UnitSymbol, order: int) -> UnitSymbol:
    """Re-express s in the group of order-th roots; order must be a multiple."""
    if order % s.order:
        raise ValueError(f"cannot lift order {s.order} into order {order}")
    return UnitSymbol(s.exp * (order // s.order), order)


@lru_cache(maxsize=None)
def cyclotomic_poly(L: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_L, low-to-high, computed by exact division
    of x^L - 1 by the product of Phi_d over proper divisors d of L."""
    if L == 1:
        return (-1, 1)
    num = [0] * (L + 1)
    num[0] = -1
    num[L] = 1
    for d in range(1, L):
        if L % d == 0:
            num = _poly_div_exact(num, cyclotomic_poly(d))
    return tuple(num)


def _poly_div_exact(num: list[int], den) -> list[int]:
    # den is monic with integer coefficients; remainder must vanish
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("division was not exact")
    return out


@lru_cache(maxsize=None)
def unit_roots(L: int) -> np.ndarray:
    """Complex L-th roots of unity, index j -> exp(2*pi*i*j/L)."""
    return np.exp(2j * np.pi * np.arange(L) / L)


class ExactSum:
    """Integer histogram of root-of-unity exponents mod L.

    counts[j] is the (possibly negative, after subtraction) multiplicity of
    exp(2*pi*i*j/L).  Magnitude readout is floating point with relative
    error below 1e-9 * sum(|counts|); equality with integers is exact.
    """

    __slots__ = ("L", "counts")

    def __init__(self, L: int, counts=None):
        if L < 1:
            raise ValueError("L must be positive")
        self.L = L
        if counts is None:
            self.counts = np.zeros(L, dtype=np.int64)
        else:
            counts = np.asarray(counts, dtype=np.int64)
            if counts.shape != (L,):
                raise ValueError("counts must have length L")
            self.counts = counts.copy()

    @classmethod
    def from_exponents(cls, exps, L: int) -> "ExactSum":
        exps = np.asarray(exps, dtype=np.int64) % L
        return cls(L, np.bincount(exps.ravel(), minlength=L))

    def add_symbol(self, s: UnitSymbol, weight: int = 1) -> None:
        if s.order != self.L:
            raise ValueError("symbol order does not match histogram order")
        self.counts[s.exp] += weight

    def __add__(self, other: "ExactSum") -> "ExactSum":
        if self.L != other.L:
            raise ValueError("mixed orders")
        return ExactSum(self.L, self.counts + other.counts)

    def __sub__(self, other: "ExactSum") -> "ExactSum":
        if self.L != other.L:
            raise ValueError("mixed orders")
        return ExactSum(self.L, self.counts - other.counts)

    def conj(self) -> "ExactSum":
        idx = (-np.arange(self.L)) % self.L
        return ExactSum(self.L, self.counts[idx])

    def total(self) -> int:
        return int(self.counts.sum())

    def value(self) -> complex:
        return complex(self.counts @ unit_roots(self.L))

    def magnitude(self) -> float:
        return float(abs(self.counts @ unit_roots(self.L)))

    def reduced(self) -> tuple[int, ...]:
        """Canonical residue of the histogram modulo Phi_L (exact integers)."""
        phi = cyclotomic_poly(self.L)
        deg = len(phi) - 1
        r = [int(c) for c in self.counts]
        for i in range(len(r) - 1, deg - 1, -1):
            c = r[i]
            if c:
                r[i] = 0
                for j in range(deg):
                    r[i - deg + j] -= c * phi[j]
        return tuple(r[:deg])

    def is_zero(self) -> bool:
        """Exact test: does the sum equal 0 as a complex number?"""
        return not any(self.reduced())

    def equals_int(self, v: int) -> bool:
        """Exact test: does the sum equal the rational integer v?"""
        shifted = ExactSum(self.L, self.counts)
        shifted.counts[0] -= v
        return shifted.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactSum):
            return NotImplemented
        return self.L == other.L and bool(np.array_equal(self.counts, other.counts))

    def __repr__(self):
        return f"ExactSum(L={self.L}, counts={self.counts.tolist()})"


def magnitude(s: ExactSum) -> float:
    return s.magnitude()


# -- field characters --------------------------------------------------------

def additive_char(a: int, x: int, ctx: FieldCtx) -> UnitSymbol:
    """chi_a(x) = zeta_p ** Tr(a*x); chi_0 is identically 1."""
    return UnitSymbol(ctx.trace_to_prime(ctx.mul(a, x)), ctx.p)


def mult_char(j: int, x: int, ctx: FieldCtx) -> UnitSymbol:
    """phi_j(alpha^k) = zeta_{q-1} ** (j*k); undefined at 0."""
    if x == 0:
        raise ValueError("multiplicative characters are undefined at 0")
    return UnitSymbol(j * ctx.dlog(x), ctx.q - 1)


def quadratic_char(x: int, ctx: FieldCtx) -> UnitSymbol:
    """The order-2 multiplicative character (odd q only): +1 on squares."""
    if ctx.q % 2 == 0:
        raise ValueError("quadratic character needs odd field order")
    return mult_char((ctx.q - 1) // 2, x, ctx)


def char_sum_additive(a: int, ctx: FieldCtx) -> ExactSum:
    """Histogram of chi_a(x) over all x in F_q (orthogonality oracle)."""
    out = ExactSum(ctx.p)
    for x in range(ctx.q):
        out.add_symbol(additive_char(a, x, ctx))
    return out


def char_sum_mult(j: int, ctx: FieldCtx) -> ExactSum:
    """Histogram of phi_j(x) over all nonzero x (orthogonality oracle)."""
    out = ExactSum(ctx.q - 1)
    for x in range(1, ctx.q):
        out.add_symbol(mult_char(j, x, ctx))
    return out


# -- m-sequences over F_q -----------------------------------------------------

def msequence(ctx: FieldCtx, r: int = 2) -> list[int]:
    """The F_q-valued m-sequence s(j) = RelTr(beta^j), j = 0 .. q^r - 2.

    Only the quadratic case r = 2 is supported; beta is the canonical
    generator of F_q2 from the tower.  Every window of q + 1 consecutive
    symbols (cyclically) contains exactly one zero.
    """
    if r != 2:
        raise ValueError("only r = 2 is supported")
    q = ctx.q
    period = q * q - 1
    bq = ctx.fq2_pow(ctx.beta, q)
    out = []
    y = 1   # beta^j
    z = 1   # beta^(q*j)
    for _ in range(period):
        s = ctx.fq2_add(y, z)
        if s >= q:
            raise RuntimeError("relative trace left the base field")  # cannot happen
        out.append(s)
        y = ctx.fq2_mul(y, ctx.beta)
        z = ctx.fq2_mul(z, bq)
    return out
