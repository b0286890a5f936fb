"""Exact arithmetic in small finite fields GF(p^d), polynomial-basis representation.

Elements are encoded as plain Python ints: the coefficient vector
(c_0, ..., c_{d-1}), constant term first, is packed as sum(c_i * p**i).
A :class:`FieldCtx` owns the modulus and the lookup tables; all operations
are pure and the context is immutable after construction, so it is safe to
share between threads.
"""

from __future__ import annotations

import itertools

import numpy as np


class FieldError(Exception):
    pass


class NonPrimeCharacteristic(FieldError):
    pass


class DegreeOutOfRange(FieldError):
    pass


class DivisionByZero(FieldError):
    pass


# Desk-scale guard: tables are dense in the field order.
MAX_ORDER = 1 << 24


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# Dense polynomial arithmetic over Z_p, coefficient lists constant term first.
# Only used during context construction (modulus search, generator search).


def _poly_trim(a):
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            f = (c * inv_lead) % p
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - f * mod[j]) % p
    return _poly_trim(a[:dm] or [0])


def _poly_mulmod(a, b, mod, p):
    return _poly_mod(_poly_mul(a, b, p), mod, p)


def _poly_powmod(base, e, mod, p):
    result = [1]
    base = _poly_mod(base, mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while b != [0]:
        a, b = b, _poly_mod(a, b, p)
    return a


def _is_irreducible(coeffs, p):
    """Rabin irreducibility test for a monic polynomial over Z_p."""
    d = len(coeffs) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if coeffs[0] == 0:  # divisible by x
        return False
    x = [0, 1]
    # x^(p^d) == x mod f
    t = _poly_powmod(x, p ** d, coeffs, p)
    if _poly_trim([(ti - xi) % p for ti, xi in itertools.zip_longest(t, x, fillvalue=0)]) != [0]:
        return False
    # gcd(x^(p^(d/r)) - x, f) == 1 for every prime r | d
    r = 2
    dd = d
    primes = set()
    while dd > 1:
        if dd % r == 0:
            primes.add(r)
            while dd % r == 0:
                dd //= r
        r += 1
    for r in primes:
        t = _poly_powmod(x, p ** (d // r), coeffs, p)
        diff = _poly_trim(
            [(ti - xi) % p for ti, xi in itertools.zip_longest(t, x, fillvalue=0)]
        )
        g = _poly_gcd(coeffs, diff, p)
        if len(g) > 1:
            return False
    return True


def _smallest_irreducible(p, d):
    """Smallest monic irreducible of degree d over Z_p.

    Candidates are ordered lexicographically on the coefficient tuple
    (c_0, ..., c_{d-1}), constant term first; deterministic across runs.
    """
    for tail in itertools.product(range(p), repeat=d):
        coeffs = list(tail) + [1]
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise FieldError(f"no irreducible polynomial of degree {d} over Z_{p}")  # unreachable


def _prime_factors(n):
    out = set()
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.add(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.add(n)
    return sorted(out)


class FieldCtx:
    """GF(p^d) with a fixed polynomial-basis modulus and dense lookup tables.

    Multiplicative structure is tabulated through exp/log with respect to the
    first primitive element in enumeration order; this is an internal
    acceleration only, the exposed representation is the coefficient vector.
    """

    def __init__(self, p: int, d: int):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if not 1 <= d <= 12:
            raise DegreeOutOfRange(f"extension degree {d} outside [1, 12]")
        order = p ** d
        if order > MAX_ORDER:
            raise DegreeOutOfRange(f"field order {p}^{d} exceeds desk-scale cap")
        self.p = p
        self.d = d
        self.order = order
        self.modulus = _smallest_irreducible(p, d)
        self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _int_to_poly(self, a):
        out = []
        for _ in range(self.d):
            out.append(a % self.p)
            a //= self.p
        return _poly_trim(out)

    def _poly_to_int(self, coeffs):
        out = 0
        for c in reversed(coeffs):
            out = out * self.p + c
        return out

    def _raw_mul(self, a, b):
        return self._poly_to_int(
            _poly_mulmod(self._int_to_poly(a), self._int_to_poly(b), list(self.modulus), self.p)
        )

    def _raw_pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return r

    def _find_generator(self):
        m = self.order - 1
        factors = _prime_factors(m) if m > 1 else []
        for g in range(1, self.order):
            if all(self._raw_pow(g, m // r) != 1 for r in factors):
                return g
        raise FieldError("no generator found")  # unreachable

    def _build_tables(self):
        p, d, q = self.p, self.d, self.order
        m = q - 1
        g = self._find_generator()
        exp = np.empty(2 * m if m > 1 else 2, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        e = 1
        for i in range(m):
            exp[i] = e
            log[e] = i
            e = self._raw_mul(e, g)
        exp[m:] = exp[: len(exp) - m]
        self._exp = exp
        self._log = log
        self._generator = g
        # negation table via digit arithmetic
        digits = np.empty((q, d), dtype=np.int64)
        t = np.arange(q)
        for i in range(d):
            digits[:, i] = t % p
            t = t // p
        pows = p ** np.arange(d)
        self._digits = digits
        self._pows = pows
        self._neg = ((-digits) % p) @ pows
        # dense addition table for small odd characteristic
        if p != 2 and q <= 1024:
            self._add_table = ((digits[:, None, :] + digits[None, :, :]) % p) @ pows
        else:
            self._add_table = None
        inv = np.zeros(q, dtype=np.int64)
        if m > 1:
            nz = np.arange(1, q)
            inv[nz] = exp[(m - log[nz]) % m]
        else:
            inv[1:] = 1
        self._inv = inv

    # -- representation ------------------------------------------------------

    def coeffs(self, a: int) -> tuple:
        """Coefficient vector of a, constant term first, length d."""
        return tuple(int(x) for x in self._digits[a])

    def from_coeffs(self, coeffs) -> int:
        out = 0
        for c in reversed([c % self.p for c in coeffs]):
            out = out * self.p + c
        if out >= self.order:
            raise FieldError("coefficient vector longer than extension degree")
        return out

    def to_str(self, a: int) -> str:
        """Base-p digit string, constant term first (JSON serialization form)."""
        digs = [str(int(x)) for x in self._digits[a]]
        return "".join(digs) if self.p <= 10 else ",".join(digs)

    def from_str(self, s: str) -> int:
        digs = [int(c) for c in (s.split(",") if "," in s or self.p > 10 else s)]
        return self.from_coeffs(digs)

    def elements(self) -> list:
        """All p^d elements in deterministic order; starts 0, 1."""
        return list(range(self.order))

    # -- scalar arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return int(self._add_table[a, b])
        p = self.p
        out, m = 0, 1
        for _ in range(self.d):
            out += ((a + b) % p) * m
            a //= p
            b //= p
            m *= p
        return out

    def neg(self, a: int) -> int:
        return int(self._neg[a])

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, int(self._neg[b]))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return int(self._inv[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        m = self.order - 1
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise DivisionByZero("negative power of zero")
            return 0
        if m == 0:
            return 1
        return int(self._exp[(k * int(self._log[a])) % m])

    def frobenius(self, a: int, r: int) -> int:
        """a^(p^r), an automorphism fixing the prime subfield."""
        return self.pow(a, self.p ** r)

    def scalar(self, c: int) -> int:
        """Image of the integer c in the prime subfield."""
        return c % self.p

    # -- vectorized arithmetic on numpy arrays of encoded elements ------------

    def vadd(self, A, B):
        if self.p == 2:
            return np.bitwise_xor(A, B)
        if self._add_table is not None:
            return self._add_table[A, B]
        return ((self._digits[A] + self._digits[B]) % self.p) @ self._pows

    def vneg(self, A):
        return self._neg[A]

    def vsub(self, A, B):
        if self.p == 2:
            return np.bitwise_xor(A, B)
        return self.vadd(A, self._neg[B])

    def vmul(self, A, B):
        A = np.asarray(A)
        B = np.asarray(B)
        out = self._exp[(self._log[A] + self._log[B]) % max(self.order - 1, 1)]
        return np.where((A == 0) | (B == 0), 0, out)

    def vinv(self, A):
        return self._inv[A]

    def vpow(self, A, k: int):
        A = np.asarray(A)
        m = max(self.order - 1, 1)
        out = self._exp[(k * self._log[A]) % m]
        if k == 0:
            return np.ones_like(A)
        return np.where(A == 0, 0, out)

    def __repr__(self):
        return f"FieldCtx(p={self.p}, d={self.d}, modulus={self.modulus})"


def ctx_create(p: int, d: int) -> FieldCtx:
    """Field context with the smallest monic irreducible modulus of degree d."""
    return FieldCtx(p, d)
