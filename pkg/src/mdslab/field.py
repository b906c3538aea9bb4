"""Arithmetic in GF(2^m), 2 <= m <= 8.

Elements are plain ints in ``[0, 2^m)``; bit ``i`` is the coefficient of
``x^i`` in the polynomial basis, so ``0x6`` is ``x^2 + x``.  Addition is XOR.
Multiplication and inversion go through log/antilog tables; dense numpy
tables (``mul_table``, ``inv_table``) back the vectorized kernels.
"""

from __future__ import annotations

import numpy as np

MIN_DEGREE = 2
MAX_DEGREE = 8

# Polynomials used in the published appendices; other degrees fall back to
# the smallest irreducible polynomial.
PREFERRED_POLYS = {3: 0xB, 4: 0x13}


class FieldError(ValueError):
    """Invalid field parameters."""


def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def poly_mulmod(a: int, b: int, poly: int, m: int) -> int:
    """Schoolbook carry-less multiply of ``a`` and ``b`` reduced modulo ``poly``.

    Kept independent of the table path so it can serve as a test oracle.
    """
    prod = 0
    for i in range(m):
        if (b >> i) & 1:
            prod ^= a << i
    for d in range(2 * m - 2, m - 1, -1):
        if (prod >> d) & 1:
            prod ^= poly << (d - m)
    return prod


def _poly_mod(a: int, b: int) -> int:
    db = poly_degree(b)
    while a and poly_degree(a) >= db:
        a ^= b << (poly_degree(a) - db)
    return a


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree 1 .. deg(poly) // 2."""
    deg = poly_degree(poly)
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in range(1 << d, 1 << (d + 1)):
            if _poly_mod(poly, f) == 0:
                return False
    return True


def smallest_irreducible(m: int) -> int:
    for p in range(1 << m, 1 << (m + 1)):
        if is_irreducible(p):
            return p
    raise FieldError(f"no irreducible polynomial of degree {m}")  # pragma: no cover


def default_poly(m: int) -> int:
    return PREFERRED_POLYS.get(m) or smallest_irreducible(m)


class GF:
    """The field GF(2^m) defined by an irreducible polynomial.

    Immutable once built; share one instance freely across threads.

    >>> F = GF(3, 0xB)
    >>> F.mul(2, 4), F.inv(2), F.sqrt(2)
    (3, 5, 6)
    """

    def __init__(self, m: int, poly: int | None = None) -> None:
        if not MIN_DEGREE <= m <= MAX_DEGREE:
            raise FieldError(f"extension degree m={m} outside [{MIN_DEGREE}, {MAX_DEGREE}]")
        if poly is None:
            poly = default_poly(m)
        if poly_degree(poly) != m:
            raise FieldError(f"polynomial {poly:#x} has degree {poly_degree(poly)}, expected {m}")
        if not is_irreducible(poly):
            raise FieldError(f"polynomial {poly:#x} is reducible over GF(2)")
        self.m = m
        self.poly = poly
        self.order = 1 << m

        q1 = self.order - 1
        self.generator = self._find_generator()
        exp = [0] * (2 * q1)
        log = [0] * self.order
        v = 1
        for i in range(q1):
            exp[i] = exp[i + q1] = v
            log[v] = i
            v = poly_mulmod(v, self.generator, poly, m)
        self._exp = exp
        self._log = log

        q = self.order
        mt = np.zeros((q, q), dtype=np.uint8)
        lg = np.array(log)
        ex = np.array(exp, dtype=np.uint8)
        nz = np.arange(1, q)
        mt[1:, 1:] = ex[lg[nz][:, None] + lg[nz][None, :]]
        inv = np.zeros(q, dtype=np.uint8)
        inv[1:] = ex[(q1 - lg[nz]) % q1]
        sq = np.array([self._sqrt_slow(a) for a in range(q)], dtype=np.uint8)
        for t in (mt, inv, sq):
            t.flags.writeable = False
        self.mul_table = mt
        self.inv_table = inv
        self.sqrt_table = sq
        self._sqrt = [int(s) for s in sq]

    def _find_generator(self) -> int:
        q1 = self.order - 1
        primes = [p for p in range(2, q1 + 1) if q1 % p == 0 and all(p % d for d in range(2, p))]
        for g in range(2, self.order):
            if all(self._pow_slow(g, q1 // p) != 1 for p in primes):
                return g
        return 1  # only reached for q1 == 1, i.e. never for m >= 2

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = poly_mulmod(r, a, self.poly, self.m)
            a = poly_mulmod(a, a, self.poly, self.m)
            e >>= 1
        return r

    def _sqrt_slow(self, a: int) -> int:
        # squaring is the Frobenius automorphism, so sqrt(a) = a^(2^(m-1))
        return self._pow_slow(a, 1 << (self.m - 1))

    def __repr__(self) -> str:
        return f"GF(2^{self.m}, poly={self.poly:#x})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and (self.m, self.poly) == (other.m, other.poly)

    def __hash__(self) -> int:
        return hash((self.m, self.poly))

    def __reduce__(self):
        return (GF, (self.m, self.poly))

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def nonzero(self) -> range:
        return range(1, self.order)

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise FieldError(f"{a!r} is not an element of {self!r}")
        return a

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no multiplicative inverse")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def sqrt(self, a: int) -> int:
        return self._sqrt[a]

    def log(self, a: int) -> int:
        """Discrete log of ``a`` to the base ``self.generator``."""
        if a == 0:
            raise ValueError("log(0) is undefined")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % (self.order - 1)]


def make_context(m: int, poly: int | None = None) -> GF:
    """Build a field, defaulting to 0xb / 0x13 for m = 3 / 4."""
    return GF(m, poly)
