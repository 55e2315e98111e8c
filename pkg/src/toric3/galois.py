"""Exact arithmetic in GF(q) for prime powers q <= 64.

Elements are plain ints.  For prime q they are residues mod p.  For
extension fields GF(p^m) an element encodes its coefficient vector in
base p (value = sum c_i * p^i), so addition is digit-wise mod p and
multiplication runs through discrete-log tables built from a pinned
primitive polynomial.  Pinning the modulus makes exp/log tables, and
hence every column ordering and JSON output downstream, reproducible.

All units are powers of the generator ``alpha``; ``exp``/``log`` tables
are mutually inverse on units.  Full q x q add/mul tables are
precomputed (q <= 64, so at most 4096 entries each) because the
zero-counting kernels index them with numpy.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

import numpy as np

from .errors import DivisionByZero, NotPrimePower, UnsupportedOrder, ZeroArgument

# Primitive polynomials, coefficients low -> high degree, leading 1 included.
# One per supported extension order; verified primitive at build time.
_PRIMITIVE_POLY = {
    4: (2, (1, 1, 1)),            # x^2 + x + 1
    8: (2, (1, 1, 0, 1)),         # x^3 + x + 1
    9: (3, (2, 1, 1)),            # x^2 + x + 2
    16: (2, (1, 1, 0, 0, 1)),     # x^4 + x + 1
    25: (5, (2, 1, 1)),           # x^2 + x + 2
    27: (3, (1, 2, 0, 1)),        # x^3 + 2x + 1
    32: (2, (1, 0, 1, 0, 0, 1)),  # x^5 + x^2 + 1
    49: (7, (3, 1, 1)),           # x^2 + x + 3
    64: (2, (1, 1, 0, 0, 0, 0, 1)),  # x^6 + x + 1
}

MAX_ORDER = 64


def _factor_prime_power(q: int):
    """Return (p, m) with q = p^m and p prime, or None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            n = q
            while n % p == 0:
                n //= p
                m += 1
            if n != 1:
                return None
            # p is the smallest divisor, hence prime
            return p, m
    return None


class FieldSpec:
    """GF(q) with exp/log tables over a fixed primitive element.

    Not constructed directly; use :func:`make_field`.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...] | None, alpha: int):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus  # None for prime fields
        self.alpha = alpha
        self.alpha_order = self.q - 1
        self._build_tables()

    # -- table construction -------------------------------------------------

    def _digits(self, v: int) -> list[int]:
        d = []
        for _ in range(self.m):
            d.append(v % self.p)
            v //= self.p
        return d

    def _undigits(self, d) -> int:
        v = 0
        for c in reversed(d):
            v = v * self.p + c
        return v

    def _add_raw(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        da, db = self._digits(a), self._digits(b)
        return self._undigits([(x + y) % self.p for x, y in zip(da, db)])

    def _mul_alpha_raw(self, a: int) -> int:
        """Multiply by the generator without log tables (bootstrap only)."""
        if self.m == 1:
            return (a * self.alpha) % self.p
        d = [0] + self._digits(a)  # multiply by x
        lead = d[self.m]
        mod = self.modulus
        return self._undigits([(d[i] - lead * mod[i]) % self.p for i in range(self.m)])

    def _build_tables(self):
        q = self.q
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        v = 1
        for i in range(q - 1):
            if log[v] != -1:
                raise UnsupportedOrder(
                    f"modulus for q={q} is not primitive (cycle length {i})"
                )
            exp[i] = v
            log[v] = i
            v = self._mul_alpha_raw(v)
        if v != 1:
            raise UnsupportedOrder(f"generator for q={q} does not close its cycle")
        self.exp_table = exp
        self.log_table = log

        add = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                s = self._add_raw(a, b)
                add[a, b] = s
                add[b, a] = s
        self.add_table = add

        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(1, q):
            la = log[a]
            for b in range(1, q):
                mul[a, b] = exp[(la + log[b]) % (q - 1)]
        self.mul_table = mul

        neg = np.zeros(q, dtype=np.int64)
        for a in range(q):
            # -a is the unique b with a + b = 0
            neg[a] = int(np.where(add[a] == 0)[0][0])
        self.neg_table = neg

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return int(self.exp_table[(-self.log_table[a]) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        """a^e for any integer e; negative exponents need a != 0."""
        if a == 0:
            if e < 0:
                raise DivisionByZero("0 to a negative power")
            return 1 if e == 0 else 0
        return int(self.exp_table[(self.log_table[a] * e) % (self.q - 1)])

    def log(self, a: int) -> int:
        if a == 0:
            raise ZeroArgument("log of 0")
        return int(self.log_table[a])

    def exp(self, i: int) -> int:
        return int(self.exp_table[i % (self.q - 1)])

    def units(self) -> list[int]:
        """Units in generator-power order alpha^0, alpha^1, ..."""
        return [int(x) for x in self.exp_table]

    def elements(self) -> list[int]:
        return list(range(self.q))

    def __repr__(self):
        return f"FieldSpec(q={self.q}, p={self.p}, m={self.m}, alpha={self.alpha})"


def _smallest_primitive_root(p: int) -> int:
    for g in range(2, p):
        x, order = g, 1
        while x != 1:
            x = x * g % p
            order += 1
        if order == p - 1:
            return g
    raise UnsupportedOrder(f"no primitive root found mod {p}")


@lru_cache(maxsize=None)
def make_field(q: int) -> FieldSpec:
    """Build GF(q), 3 <= q <= 64, q a prime power.

    Extension fields use a pinned primitive polynomial; prime fields use
    the smallest primitive root mod p.
    """
    pm = _factor_prime_power(q)
    if pm is None:
        raise NotPrimePower(f"q={q} is not a prime power")
    p, m = pm
    if q < 3 or q > MAX_ORDER:
        raise UnsupportedOrder(f"q={q} outside supported range [3, {MAX_ORDER}]")
    if m == 1:
        return FieldSpec(p, 1, None, _smallest_primitive_root(p))
    if q not in _PRIMITIVE_POLY:
        raise UnsupportedOrder(f"no primitive polynomial pinned for q={q}")
    _, coeffs = _PRIMITIVE_POLY[q]
    return FieldSpec(p, m, coeffs, p)  # alpha encodes the polynomial x


def solve_power(field: FieldSpec, t: int, a: int) -> set[int]:
    """All units y with y^t = a.

    The solution set has size gcd(t, q-1) when a is a t-th power and is
    empty otherwise.
    """
    if a == 0:
        raise ZeroArgument("solve_power requires a nonzero right-hand side")
    if t < 1:
        raise ValueError("t must be >= 1")
    n = field.q - 1
    la = field.log(a)
    g = gcd(t, n)
    if la % g != 0:
        return set()
    # solve t*i = la mod n
    t1, n1 = t // g, n // g
    i0 = (la // g) * pow(t1, -1, n1) % n1
    return {field.exp(i0 + j * n1) for j in range(g)}


def power_image(field: FieldSpec, t: int) -> set[int]:
    """The subgroup {y^t : y a unit}; size (q-1)/gcd(t, q-1).

    Despite being called an automorphism in some sources, y -> y^t is
    only a homomorphism of the unit group for general t.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    n = field.q - 1
    g = gcd(t, n)
    return {field.exp(g * j) for j in range(n // g)}
