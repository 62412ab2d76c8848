"""Field tower: construction determinism, arithmetic axioms, traces, dlog."""

import pytest
from hypothesis import given, settings, strategies as st

from qcss.galois import FieldCtx, build_tower, first_irreducible, is_prime, prime_factors


def test_is_prime_small():
    assert [m for m in range(2, 30) if is_prime(m)] == \
        [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1)
    assert not is_prime(0)


def test_prime_factors():
    assert prime_factors(80) == [2, 5]
    assert prime_factors(63) == [3, 7]
    assert prime_factors(97) == [97]


def test_first_irreducible_known():
    # classic lex-smallest moduli
    assert first_irreducible(2, 1) == (0, 1)
    assert first_irreducible(2, 2) == (1, 1, 1)
    assert first_irreducible(2, 3) == (1, 1, 0, 1)
    assert first_irreducible(3, 2) == (1, 0, 1)
    assert first_irreducible(2, 4) == (1, 1, 0, 0, 1)


def test_build_validation():
    with pytest.raises(ValueError):
        build_tower(4, 2)           # not prime
    with pytest.raises(ValueError):
        build_tower(2, 0)
    with pytest.raises(ValueError):
        build_tower(2, 25)          # 2^25 over the order cap


def test_build_deterministic():
    a = build_tower(3, 2)
    b = build_tower(3, 2)
    assert a == b
    assert a._exp == b._exp
    assert a._trace == b._trace
    # element enumeration is the int order
    assert a.elements() == list(range(9))
    assert a.elements(include_zero=False) == list(range(1, 9))


def test_frozen_structure():
    # anchors for the deterministic searches
    c9 = build_tower(3, 2)
    assert (c9.h, c9.m, c9.beta, c9.alpha) == ((1, 0, 1), (4, 0), 10, 5)
    c8 = build_tower(2, 3)
    assert (c8.h, c8.m, c8.beta, c8.alpha) == ((1, 1, 0, 1), (1, 1), 10, 7)


def test_generator_orders(ctx9):
    q = ctx9.q
    # beta runs through all of F_q2^* exactly once
    seen = set()
    y = 1
    for _ in range(q * q - 1):
        seen.add(y)
        y = ctx9.fq2_mul(y, ctx9.beta)
    assert y == 1
    assert len(seen) == q * q - 1
    # alpha = beta^(q+1) has order q-1
    assert ctx9.fq2_pow(ctx9.beta, q + 1) == ctx9.alpha
    assert ctx9.pow(ctx9.alpha, q - 1) == 1
    assert all(ctx9.pow(ctx9.alpha, j) != 1 for j in range(1, q - 1))


def test_subgroup_order_example(ctx8):
    # beta^(q+1) = beta^9 generates the base field's multiplicative group
    a = ctx8.fq2_pow(ctx8.beta, 9)
    assert a == ctx8.alpha
    powers = {ctx8.pow(a, j) for j in range(7)}
    assert len(powers) == 7
    assert ctx8.pow(a, 7) == 1


@pytest.mark.parametrize("p,n", [(2, 3), (3, 2), (5, 1)])
def test_inverse_exhaustive(p, n):
    ctx = build_tower(p, n)
    for x in range(1, ctx.q):
        assert ctx.mul(x, ctx.inv(x)) == 1
    with pytest.raises(ZeroDivisionError):
        ctx.inv(0)


def test_fq2_inverse_exhaustive(ctx4):
    qq = ctx4.q * ctx4.q
    for y in range(1, qq):
        assert ctx4.fq2_mul(y, ctx4.fq2_inv(y)) == 1
    with pytest.raises(ZeroDivisionError):
        ctx4.fq2_inv(0)


@settings(max_examples=200, deadline=None, derandomize=True)
@given(a=st.integers(0, 8), b=st.integers(0, 8), c=st.integers(0, 8))
def test_field_axioms_f9(a, b, c):
    ctx = build_tower(3, 2)
    assert ctx.add(a, b) == ctx.add(b, a)
    assert ctx.mul(a, b) == ctx.mul(b, a)
    assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
    assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
    assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
    assert ctx.add(a, ctx.neg(a)) == 0
    assert ctx.sub(a, b) == ctx.add(a, ctx.neg(b))


@settings(max_examples=200, deadline=None, derandomize=True)
@given(y1=st.integers(0, 63), y2=st.integers(0, 63), y3=st.integers(0, 63))
def test_fq2_axioms_f64(y1, y2, y3):
    ctx = build_tower(2, 3)
    assert ctx.fq2_mul(y1, y2) == ctx.fq2_mul(y2, y1)
    assert ctx.fq2_mul(ctx.fq2_mul(y1, y2), y3) == ctx.fq2_mul(y1, ctx.fq2_mul(y2, y3))
    assert ctx.fq2_add(y1, ctx.fq2_neg(y1)) == 0
    assert ctx.fq2_mul(y1, ctx.fq2_add(y2, y3)) == \
        ctx.fq2_add(ctx.fq2_mul(y1, y2), ctx.fq2_mul(y1, y3))


def test_pow_and_dlog(ctx9):
    for x in range(1, 9):
        assert ctx9.pow(ctx9.alpha, ctx9.dlog(x)) == x
    with pytest.raises(ValueError):
        ctx9.dlog(0)
    assert ctx9.pow(0, 0) == 1
    assert ctx9.pow(0, 5) == 0
    with pytest.raises(ZeroDivisionError):
        ctx9.pow(0, -1)
    # negative exponents
    for x in range(1, 9):
        assert ctx9.pow(x, -1) == ctx9.inv(x)


def test_trace_properties(small_towers):
    for q, ctx in small_towers.items():
        p = ctx.p
        fibers = {}
        for x in range(q):
            t = ctx.trace_to_prime(x)
            assert 0 <= t < p
            fibers[t] = fibers.get(t, 0) + 1
        # trace is onto F_p with equal fibers of size q/p
        assert fibers == {c: q // p for c in range(p)}
        for x in range(q):
            for y in range(q):
                s = ctx.trace_to_prime(ctx.add(x, y))
                assert s == (ctx.trace_to_prime(x) + ctx.trace_to_prime(y)) % p
            # Frobenius invariance
            assert ctx.trace_to_prime(ctx.pow(x, p) if x else 0) == ctx.trace_to_prime(x)


def test_trace_f4_example(ctx4):
    # the non-constant elements of F_4 have absolute trace 1
    omega = 2   # the residue class of x
    assert ctx4.trace_to_prime(omega) == 1
    assert ctx4.trace_to_prime(ctx4.mul(omega, omega)) == 1
    assert ctx4.trace_to_prime(0) == 0
    assert ctx4.trace_to_prime(1) == 0


def test_rel_trace(small_towers):
    for q, ctx in small_towers.items():
        # always lands in the base field, and restricted to it is scaling by 2
        for y in range(q * q):
            z = ctx.rel_trace(y)
            assert 0 <= z < q
        for x in range(q):
            assert ctx.rel_trace(x) == ctx.add(x, x)
        # F_q-linearity: RelTr(c*y) = c*RelTr(y) for c in F_q
        c, y = 2 % q, q + 1
        lhs = ctx.rel_trace(ctx.fq2_mul(c, y))
        assert lhs == ctx.mul(c, ctx.rel_trace(y))


def test_frobenius_fixed_field(small_towers):
    for q, ctx in small_towers.items():
        fixed = [y for y in range(q * q) if ctx.fq2_pow(y, q) == y]
        assert fixed == list(range(q))


def test_coeffs_roundtrip(ctx8):
    for x in range(8):
        c = ctx8.coeffs(x)
        assert len(c) == 3 and all(0 <= ci < 2 for ci in c)
        assert ctx8.from_coeffs(c) == x
    with pytest.raises(ValueError):
        ctx8.from_coeffs((1, 0))         # wrong length
    with pytest.raises(ValueError):
        ctx8.from_coeffs((2, 0, 0))      # digit out of range
    with pytest.raises(ValueError):
        ctx8.coeffs(8)
