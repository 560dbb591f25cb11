"""Arithmetic in GF(p) and GF(p^m) for odd p.

Elements are integers in ``[0, p^m)``.  The base-p digits of an element are
its coordinates in the polynomial basis ``1, a, a^2, ..., a^(m-1)`` where
``a`` is the class of ``x`` modulo the defining polynomial; digit ``k`` is
the coefficient of ``a^k``.  Index 0 is zero and index 1 is one.

Multiplication goes through exp/log tables built once per field.  Trace and
the quadratic character are table lookups.  Character sums are evaluated in
complex floating point and are only meant for verification.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

MAX_ORDER = 1 << 20


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    r = math.isqrt(n)
    return all(n % f for f in range(3, r + 1, 2))


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p, coefficient lists with the constant term first --

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: list[int], mod: list[int], p: int) -> list[int]:
    """Remainder of ``a`` divided by the monic polynomial ``mod``."""
    a = _trim([c % p for c in a])
    deg = len(mod) - 1
    while len(a) - 1 >= deg and a:
        c = a[-1]
        shift = len(a) - 1 - deg
        for i, mc in enumerate(mod):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return poly_mod(prod, mod, p)


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division of a monic polynomial by every monic polynomial of
    degree 1..deg/2."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for k in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=k):
            if not poly_mod(poly, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> list[int]:
    """Smallest monic irreducible of degree ``m``, ordering candidates
    lexicographically by coefficient vector with the constant term first."""
    for low in product(range(p), repeat=m):
        poly = list(low) + [1]
        if is_irreducible(poly, p):
            return poly
    raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")  # unreachable


@dataclass(frozen=True)
class FieldParams:
    p: int
    m: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.m


class ExtensionField:
    """The field GF(p^m) with a deterministic modulus and primitive element.

    Use :func:`build_field` rather than constructing this directly; it caches
    one instance per ``(p, m)``.
    """

    def __init__(self, p: int, m: int):
        if not isinstance(p, int) or not is_prime(p) or p == 2:
            raise FieldError(f"p must be an odd prime, got {p}")
        if not isinstance(m, int) or m < 1:
            raise FieldError(f"m must be a positive integer, got {m}")
        if p ** m > MAX_ORDER:
            raise FieldError(f"p^m = {p ** m} exceeds the table cap {MAX_ORDER}")

        self.p = p
        self.m = m
        self.q = q = p ** m
        self.params = FieldParams(p, m, tuple(smallest_irreducible(p, m)))
        self._powers = p ** np.arange(m, dtype=np.int64)

        idx = np.arange(q, dtype=np.int64)
        self.digits = (idx[:, None] // self._powers[None, :]) % p
        self.digits.flags.writeable = False

        self.generator = self._find_primitive()
        self.exp_table, self.log_table = self._build_tables(self.generator)
        self.trace_table = self._build_trace()
        self.square_table = np.zeros(q, dtype=np.int8)
        self.square_table[1:] = np.where(self.log_table[1:] % 2 == 0, 1, -1)
        for t in (self.exp_table, self.log_table, self.trace_table, self.square_table):
            t.flags.writeable = False

    def __repr__(self) -> str:
        return f"ExtensionField(p={self.p}, m={self.m}, modulus={list(self.params.modulus)})"

    # -- conversions --

    def to_poly(self, x: int) -> list[int]:
        return _trim([int(c) for c in self.digits[x]])

    def from_poly(self, coeffs) -> int:
        coeffs = list(coeffs) + [0] * (self.m - len(coeffs))
        return int(sum((c % self.p) * self.p ** k for k, c in enumerate(coeffs[: self.m])))

    def _slow_mul(self, x: int, y: int) -> int:
        mod = list(self.params.modulus)
        return self.from_poly(poly_mulmod(self.to_poly(x), self.to_poly(y), mod, self.p))

    def _slow_pow(self, x: int, e: int) -> int:
        result, base = 1, x
        while e:
            if e & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return result

    def _find_primitive(self) -> int:
        n = self.q - 1
        if n == 1:
            return 1
        cofactors = [n // r for r in prime_factors(n)]
        for g in range(1, self.q):
            if all(self._slow_pow(g, c) != 1 for c in cofactors):
                return g
        raise FieldError("no primitive element found")  # unreachable for a field

    def _build_tables(self, g: int):
        n = self.q - 1
        exp_table = np.zeros(n, dtype=np.int64)
        log_table = np.full(self.q, -1, dtype=np.int64)
        x = 1
        for i in range(n):
            exp_table[i] = x
            log_table[x] = i
            x = self._slow_mul(x, g)
        if x != 1 or len(set(exp_table.tolist())) != n:
            raise FieldError("generator does not have full order")
        return exp_table, log_table

    def _build_trace(self) -> np.ndarray:
        n = self.q - 1
        nz = np.arange(1, self.q)
        logs = self.log_table[nz]
        acc = np.zeros((n, self.m), dtype=np.int64)
        for i in range(self.m):
            conj = self.exp_table[(logs * self.p ** i) % n]
            acc = (acc + self.digits[conj]) % self.p
        if np.any(acc[:, 1:]):
            raise FieldError("trace left the prime subfield")
        trace = np.zeros(self.q, dtype=np.int64)
        trace[1:] = acc[:, 0]
        return trace

    # -- scalar arithmetic --

    def _check(self, *xs: int) -> None:
        for x in xs:
            if not 0 <= x < self.q:
                raise FieldError(f"{x} is not an element of GF({self.p}^{self.m})")

    def encode(self, digits) -> np.ndarray:
        return np.asarray(digits, dtype=np.int64) @ self._powers

    def add(self, x: int, y: int) -> int:
        self._check(x, y)
        return int(self.encode((self.digits[x] + self.digits[y]) % self.p))

    def sub(self, x: int, y: int) -> int:
        self._check(x, y)
        return int(self.encode((self.digits[x] - self.digits[y]) % self.p))

    def neg(self, x: int) -> int:
        self._check(x)
        return int(self.encode((-self.digits[x]) % self.p))

    def mul(self, x: int, y: int) -> int:
        self._check(x, y)
        if x == 0 or y == 0:
            return 0
        return int(self.exp_table[(self.log_table[x] + self.log_table[y]) % (self.q - 1)])

    def inv(self, x: int) -> int:
        self._check(x)
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.exp_table[(-self.log_table[x]) % (self.q - 1)])

    def pow(self, x: int, e: int) -> int:
        self._check(x)
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        return int(self.exp_table[(self.log_table[x] * e) % (self.q - 1)])

    def trace(self, x: int) -> int:
        self._check(x)
        return int(self.trace_table[x])

    def quadratic_character(self, x: int) -> int:
        self._check(x)
        return int(self.square_table[x])

    def from_prime(self, c: int) -> int:
        """Embed an element of F_p (its digit vector is ``(c, 0, ..., 0)``)."""
        return c % self.p

    # -- vectorized arithmetic on index arrays --

    def add_arr(self, x, y) -> np.ndarray:
        x, y = np.asarray(x), np.asarray(y)
        return ((self.digits[x] + self.digits[y]) % self.p) @ self._powers

    def mul_arr(self, x, y) -> np.ndarray:
        x, y = np.broadcast_arrays(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))
        zero = (x == 0) | (y == 0)
        e = (self.log_table[x] + self.log_table[y]) % (self.q - 1)
        return np.where(zero, 0, self.exp_table[e])

    def pow_arr(self, x, e: int) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        if e == 0:
            return np.ones_like(x)
        return np.where(x == 0, 0, self.exp_table[(self.log_table[x] * e) % (self.q - 1)])

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)


@lru_cache(maxsize=None)
def build_field(p: int, m: int) -> ExtensionField:
    """Deterministic GF(p^m): smallest irreducible modulus, smallest
    primitive element.  Instances are cached and immutable."""
    return ExtensionField(p, m)


# -- characters and Gauss sums --

def zeta(p: int, k) -> complex:
    return np.exp(2j * np.pi * np.asarray(k) / p)


def additive_character(f: ExtensionField, b: int, x: int) -> complex:
    """chi_b(x) = zeta_p^Tr(bx)."""
    return complex(zeta(f.p, f.trace(f.mul(b, x))))


def legendre(c: int, p: int) -> int:
    """Quadratic character of F_p, with 0 mapped to 0."""
    c %= p
    if c == 0:
        return 0
    return 1 if pow(c, (p - 1) // 2, p) == 1 else -1


def gauss_sum_bruteforce(f: ExtensionField) -> complex:
    c = np.arange(1, f.q)
    terms = f.square_table[c] * zeta(f.p, f.trace_table[c])
    return complex(terms.sum())


def gauss_sum_closed_form(p: int, m: int) -> complex:
    """(-1)^(m-1) * i^((p-1)^2 m / 4) * p^(m/2)."""
    sign = -1 if (m - 1) % 2 else 1
    unit = (1, 1j, -1, -1j)[((p - 1) ** 2 * m // 4) % 4]
    return complex(sign * unit * p ** (m / 2))


def quadratic_sum(f: ExtensionField, a2: int, a1: int, a0: int) -> complex:
    """Sum over c of chi(a2 c^2 + a1 c + a0), by enumeration."""
    if a2 == 0:
        raise FieldError("leading coefficient must be nonzero")
    c = np.arange(f.q)
    val = f.add_arr(f.add_arr(f.mul_arr(a2, f.mul_arr(c, c)), f.mul_arr(a1, c)), np.full(f.q, a0))
    return complex(zeta(f.p, f.trace_table[val]).sum())


def quadratic_sum_closed_form(f: ExtensionField, a2: int, a1: int, a0: int) -> complex:
    """G_m * eta(a2) * chi(a0 - a1^2 / (4 a2))."""
    if a2 == 0:
        raise FieldError("leading coefficient must be nonzero")
    four_a2 = f.mul(f.from_prime(4), a2)
    shift = f.sub(a0, f.mul(f.mul(a1, a1), f.inv(four_a2)))
    return gauss_sum_closed_form(f.p, f.m) * f.quadratic_character(a2) * additive_character(f, 1, shift)


def is_close(x: complex, y: complex, tol: float = 1e-9) -> bool:
    return cmath.isfinite(x) and cmath.isfinite(y) and abs(x - y) < tol
