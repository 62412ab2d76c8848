"""Finite field tower arithmetic: F_p inside F_q = F_p[x]/(h) inside F_q2 = F_q[y]/(m).

Elements of F_q are stored as plain ints in [0, q): the base-p digits of the
int, least significant first, are the coefficients of the residue polynomial.
Under this encoding 0 is the zero element, 1 is the multiplicative identity,
and the constants 0..p-1 are exactly the prime subfield.  Elements of F_q2
are ints in [0, q^2) encoded as lo + q*hi.

All structural choices (modulus h, quadratic modulus m, generator beta) are
made by deterministic smallest-first search, so two towers built with the
same (p, n) agree table for table.
"""

from __future__ import annotations

ORDER_CAP = 2 ** 20


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime divisors of m, ascending."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


# -- dense polynomials over Z_p, coefficients low-to-high ------------------

def _int_digits(v: int, p: int) -> list[int]:
    if v == 0:
        return [0]
    out = []
    while v:
        out.append(v % p)
        v //= p
    return out


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a modulo monic b, over Z_p."""
    r = [c % p for c in a]
    db = len(b) - 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            r[i] = 0
            for j in range(db):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    return r


def _is_irreducible(h: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree up to deg(h)/2."""
    n = len(h) - 1
    if n == 1:
        return True
    if h[0] == 0:   # divisible by x
        return False
    for d in range(1, n // 2 + 1):
        for v in range(p ** d):
            g = _int_digits(v, p)
            g += [0] * (d - len(g)) + [1]
            if all(c == 0 for c in _poly_mod(h, g, p)):
                return False
    return True


def first_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n over Z_p.

    The low coefficients (c_0, ..., c_{n-1}) are scanned as ascending base-p
    integers c_0 + c_1 p + ....
    """
    for v in range(p ** n):
        low = _int_digits(v, p)
        h = low + [0] * (n - len(low)) + [1]
        if _is_irreducible(h, p):
            return tuple(h)
    raise RuntimeError(f"no irreducible of degree {n} over Z_{p}")  # unreachable


class FieldCtx:
    """Immutable arithmetic context for the tower F_p < F_q < F_q2.

    Construction precomputes discrete-log/antilog tables for F_q and the
    absolute trace table F_q -> F_p, so mul/inv/pow/dlog/trace are O(1)
    lookups afterwards.  beta generates the full multiplicative group of
    F_q2 and alpha = beta^(q+1) generates that of F_q.
    """

    def __init__(self, p: int, n: int, order_cap: int = ORDER_CAP):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if n < 1:
            raise ValueError(f"extension degree n={n} must be >= 1")
        q = p ** n
        if q > order_cap:
            raise ValueError(f"field order p^n={q} exceeds cap {order_cap}")
        self.p = p
        self.n = n
        self.q = q
        self.h = first_irreducible(p, n)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self.m = self._first_irreducible_quadratic()
        self.beta = self._find_beta()
        a = self.fq2_pow(self.beta, q + 1)
        lo, hi = a % q, a // q
        if hi:
            raise RuntimeError("beta^(q+1) landed outside F_q")   # cannot happen
        self.alpha = lo
        self._build_tables()

    # -- base F_q arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        out = 0
        shift = 1
        while a or b:
            out += ((a + b) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        out = 0
        shift = 1
        while a:
            d = a % p
            if d:
                out += (p - d) * shift
            a //= p
            shift *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_poly(self, a: int, b: int) -> int:
        # schoolbook product + reduction mod h; only used before the dlog
        # tables exist (modulus search, generator search, table bootstrap)
        if a == 0 or b == 0:
            return 0
        p, n, h = self.p, self.n, self.h
        da = _int_digits(a, p)
        db = _int_digits(b, p)
        prod = [0] * (len(da) + len(db) - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        for i in range(len(prod) - 1, n - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(n):
                    prod[i - n + j] = (prod[i - n + j] - c * h[j]) % p
        out = 0
        for i in range(min(n, len(prod)) - 1, -1, -1):
            out = out * p + prod[i]
        return out

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is None:
            return self._mul_poly(a, b)
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of 0 in F_q")
            return 0
        return self._exp[(e * self._log[a]) % (self.q - 1)]

    def dlog(self, x: int) -> int:
        """Exponent i with alpha^i = x, for nonzero x."""
        if x == 0:
            raise ValueError("dlog of 0 is undefined")
        return self._log[x]

    def trace_to_prime(self, x: int) -> int:
        """Absolute trace F_q -> F_p, returned as an int in [0, p)."""
        return self._trace[x]

    def elements(self, include_zero: bool = True) -> list[int]:
        """All of F_q in canonical coefficient-lex order (= int order here)."""
        return list(range(0 if include_zero else 1, self.q))

    def coeffs(self, x: int) -> tuple[int, ...]:
        if not 0 <= x < self.q:
            raise ValueError(f"element index {x} out of range")
        d = _int_digits(x, self.p)
        return tuple(d + [0] * (self.n - len(d)))

    def from_coeffs(self, c) -> int:
        c = list(c)
        if len(c) != self.n or any(not 0 <= ci < self.p for ci in c):
            raise ValueError("need exactly n coefficients in [0, p)")
        out = 0
        for ci in reversed(c):
            out = out * self.p + ci
        return out

    # -- quadratic extension F_q2 --------------------------------------------

    def fq2_make(self, lo: int, hi: int) -> int:
        return lo + self.q * hi

    def fq2_parts(self, y: int) -> tuple[int, int]:
        return y % self.q, y // self.q

    def fq2_add(self, y1: int, y2: int) -> int:
        q = self.q
        return self.add(y1 % q, y2 % q) + q * self.add(y1 // q, y2 // q)

    def fq2_neg(self, y: int) -> int:
        q = self.q
        return self.neg(y % q) + q * self.neg(y // q)

    def fq2_sub(self, y1: int, y2: int) -> int:
        return self.fq2_add(y1, self.fq2_neg(y2))

    def fq2_mul(self, y1: int, y2: int) -> int:
        q = self.q
        a0, a1 = y1 % q, y1 // q
        b0, b1 = y2 % q, y2 // q
        c0 = self.mul(a0, b0)
        c1 = self.add(self.mul(a0, b1), self.mul(a1, b0))
        c2 = self.mul(a1, b1)
        if c2:
            # y^2 = -(m1*y + m0)
            m0, m1 = self.m
            c0 = self.sub(c0, self.mul(c2, m0))
            c1 = self.sub(c1, self.mul(c2, m1))
        return c0 + q * c1

    def fq2_pow(self, y: int, e: int) -> int:
        if y == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of 0 in F_q2")
            return 0
        if e < 0:
            y = self.fq2_inv(y)
            e = -e
        out = 1
        while e:
            if e & 1:
                out = self.fq2_mul(out, y)
            y = self.fq2_mul(y, y)
            e >>= 1
        return out

    def fq2_inv(self, y: int) -> int:
        if y == 0:
            raise ZeroDivisionError("inverse of 0 in F_q2")
        return self.fq2_pow(y, self.q * self.q - 2)

    def rel_trace(self, y: int) -> int:
        """Relative trace F_q2 -> F_q: y + y^q.  Always lands in F_q."""
        z = self.fq2_add(y, self.fq2_pow(y, self.q))
        if z >= self.q:
            raise RuntimeError("relative trace left the base field")  # cannot happen
        return z

    # -- construction-time searches ------------------------------------------

    def _first_irreducible_quadratic(self) -> tuple[int, int]:
        """Smallest (m0 + q*m1) with y^2 + m1*y + m0 root-free over F_q."""
        q = self.q
        for idx in range(q * q):
            m0, m1 = idx % q, idx // q
            ok = True
            for x in range(q):
                v = self.add(self.add(self._mul_poly(x, x), self._mul_poly(m1, x)), m0)
                if v == 0:
                    ok = False
                    break
            if ok:
                return (m0, m1)
        raise RuntimeError("no irreducible quadratic found")  # unreachable

    def _find_beta(self) -> int:
        """Smallest-index element of F_q2 of full order q^2 - 1."""
        top = self.q * self.q - 1
        checks = [top // ell for ell in prime_factors(top)]
        for g in range(1, self.q * self.q):
            if all(self.fq2_pow(g, c) != 1 for c in checks):
                return g
        raise RuntimeError("no generator found")  # unreachable

    def _build_tables(self) -> None:
        q, p, n = self.q, self.p, self.n
        exp = [1]
        x = 1
        for _ in range(q - 2):
            x = self._mul_poly(x, self.alpha)
            exp.append(x)
        log = [-1] * q
        for i, v in enumerate(exp):
            log[v] = i
        if any(log[v] < 0 for v in range(1, q)):
            raise RuntimeError("alpha does not generate the multiplicative group")
        self._exp, self._log = exp, log
        # Frobenius x -> x^p, then trace as the sum of the n Frobenius iterates
        frob = [0] * q
        for v in range(1, q):
            frob[v] = exp[(p * log[v]) % (q - 1)]
        trace = [0] * q
        for v in range(q):
            acc = v
            t = v
            for _ in range(n - 1):
                t = frob[t]
                acc = self.add(acc, t)
            if acc >= p:
                raise RuntimeError("trace left the prime field")  # cannot happen
            trace[v] = acc
        self._trace = trace

    # -------------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.n, self.h, self.m, self.beta, self.alpha) == \
               (other.p, other.n, other.h, other.m, other.beta, other.alpha)

    def __hash__(self):
        return hash((self.p, self.n, self.h, self.m, self.beta))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, n={self.n}, q={self.q})"


def build_tower(p: int, n: int, order_cap: int = ORDER_CAP) -> FieldCtx:
    """Build the deterministic tower F_p < F_{p^n} < F_{p^2n}."""
    return FieldCtx(p, n, order_cap)
