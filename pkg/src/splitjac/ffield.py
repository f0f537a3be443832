"""Finite fields F_{p^k} for small k, with scalar elements and numpy
vectorised arithmetic over whole arrays of elements.

Elements are coefficient vectors (c_0, ..., c_{k-1}) in F_p[z]/(m(z)) where
m is the first monic irreducible of degree k in the enumeration order of its
lower coefficients read as base-p digits.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _has_root(coeffs, p):
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            return True
    return False


def _irreducible_modulus(p: int, k: int) -> tuple[int, ...]:
    """Coefficients c_0..c_{k-1} of a monic irreducible z^k + ... over F_p."""
    if k == 1:
        return (0,)
    if k > 3:
        raise ValueError("only extension degrees up to 3 are supported")
    for n in range(p**k):
        low = tuple((n // p**i) % p for i in range(k))
        if low[0] == 0:
            continue
        # degree 2 and 3 polynomials are irreducible iff they have no root
        if not _has_root(low + (1,), p):
            return low
    raise ArithmeticError("no irreducible polynomial found")


class GF:
    """The field with p^k elements."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = _irreducible_modulus(p, k)
        self.zero = GFElem(self, (0,) * k)
        self.one = GFElem(self, (1,) + (0,) * (k - 1))
        self.name = f"GF({p}^{k})"

    def __repr__(self):
        return self.name

    def __eq__(self, o):
        return isinstance(o, GF) and (o.p, o.k) == (self.p, self.k)

    def __hash__(self):
        return hash((self.p, self.k))

    def __call__(self, x) -> "GFElem":
        if isinstance(x, GFElem):
            if x.field != self:
                raise TypeError("element of a different field")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            v = x.numerator * pow(x.denominator, -1, self.p) % self.p
            return GFElem(self, (v,) + (0,) * (self.k - 1))
        if isinstance(x, int):
            return GFElem(self, (x % self.p,) + (0,) * (self.k - 1))
        if isinstance(x, (tuple, list)):
            if len(x) != self.k:
                raise ValueError("wrong number of coordinates")
            return GFElem(self, tuple(int(c) % self.p for c in x))
        raise TypeError(f"cannot map {x!r} into {self}")

    def from_code(self, n: int) -> "GFElem":
        return GFElem(self, tuple((n // self.p**i) % self.p for i in range(self.k)))

    def elements(self):
        for n in range(self.q):
            yield self.from_code(n)

    def generator(self) -> "GFElem":
        """Smallest-code generator of the multiplicative group."""
        order = self.q - 1
        primes = [r for r in range(2, order + 1) if order % r == 0 and is_prime(r)]
        for n in range(1, self.q):
            g = self.from_code(n)
            if all(g ** (order // r) != self.one for r in primes):
                return g
        raise ArithmeticError("no generator")

    # vectorised helpers -------------------------------------------------

    def all_elements(self) -> np.ndarray:
        """Array of shape (q, k) listing every element, index = code."""
        n = np.arange(self.q, dtype=np.int64)
        return np.stack([(n // self.p**i) % self.p for i in range(self.k)], axis=1)

    def vconst(self, x, n: int) -> np.ndarray:
        e = self(x)
        return np.tile(np.array(e.c, dtype=np.int64), (n, 1))

    def codes(self, a: np.ndarray) -> np.ndarray:
        w = self.p ** np.arange(self.k, dtype=np.int64)
        return (a % self.p) @ w

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p, k = self.p, self.k
        if k == 1:
            return (a * b) % p
        n = a.shape[0]
        prod = np.zeros((n, 2 * k - 1), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                prod[:, i + j] += a[:, i] * b[:, j]
        prod %= p
        m = self.modulus
        for d in range(2 * k - 2, k - 1, -1):
            top = prod[:, d]
            for i in range(k):
                prod[:, d - k + i] -= top * m[i]
            prod[:, d] = 0
            prod %= p
        return prod[:, :k]

    def vadd(self, a, b):
        return (a + b) % self.p

    def vsub(self, a, b):
        return (a - b) % self.p

    def vpow(self, a: np.ndarray, e: int) -> np.ndarray:
        r = np.zeros_like(a)
        r[:, 0] = 1
        b = a.copy()
        while e:
            if e & 1:
                r = self.vmul(r, b)
            b = self.vmul(b, b)
            e >>= 1
        return r

    def vchi(self, a: np.ndarray) -> np.ndarray:
        """Quadratic character: 0 at zero, else a^((q-1)/2) read as +1/-1."""
        zero = ~a.any(axis=1)
        e = self.vpow(a, (self.q - 1) // 2)
        one = (e[:, 0] == 1) & ~e[:, 1:].any(axis=1)
        out = np.where(one, 1, -1)
        out[zero] = 0
        return out

    def veval(self, coeffs, xs: np.ndarray) -> np.ndarray:
        """Evaluate a polynomial with coefficients in this field (lowest first)."""
        n = xs.shape[0]
        acc = np.zeros((n, self.k), dtype=np.int64)
        for c in reversed(list(coeffs)):
            acc = self.vadd(self.vmul(acc, xs), self.vconst(c, n))
        return acc

    @lru_cache(maxsize=None)
    def sqrt_table(self) -> np.ndarray:
        """code of a square -> code of one square root (-1 for non-squares)."""
        xs = self.all_elements()
        sq = self.codes(self.vmul(xs, xs))
        table = np.full(self.q, -1, dtype=np.int64)
        table[sq[::-1]] = np.arange(self.q, dtype=np.int64)[::-1]
        return table


class GFElem:
    __slots__ = ("field", "c")

    def __init__(self, field: GF, c: tuple):
        self.field = field
        self.c = c

    def _lift(self, o):
        if isinstance(o, GFElem):
            if o.field != self.field:
                raise TypeError("elements of different fields")
            return o
        return self.field(o)

    def __add__(self, o):
        o = self._lift(o)
        p = self.field.p
        return GFElem(self.field, tuple((a + b) % p for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return GFElem(self.field, tuple((-a) % p for a in self.c))

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        F = self.field
        p, k = F.p, F.k
        prod = [0] * (2 * k - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    prod[i + j] += a * b
        for d in range(2 * k - 2, k - 1, -1):
            top = prod[d] % p
            if top:
                for i in range(k):
                    prod[d - k + i] -= top * F.modulus[i]
            prod[d] = 0
        return GFElem(F, tuple(x % p for x in prod[:k]))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        r = self.field.one
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def inverse(self):
        if not self:
            raise ZeroDivisionError(f"division by zero in {self.field}")
        return self ** (self.field.q - 2)

    def __truediv__(self, o):
        return self * self._lift(o).inverse()

    def __rtruediv__(self, o):
        return self._lift(o) * self.inverse()

    def __bool__(self):
        return any(self.c)

    def __eq__(self, o):
        if isinstance(o, GFElem):
            return self.field == o.field and self.c == o.c
        if isinstance(o, (int, Fraction)):
            try:
                return self == self.field(o)
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def code(self) -> int:
        return sum(a * self.field.p**i for i, a in enumerate(self.c))

    def chi(self) -> int:
        if not self:
            return 0
        return 1 if self ** ((self.field.q - 1) // 2) == self.field.one else -1

    def __repr__(self):
        if self.field.k == 1:
            return f"{self.c[0]}"
        return f"{list(self.c)}"


def reduce_rational(x, p: int) -> int:
    """x mod p for a rational with denominator prime to p."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ZeroDivisionError(f"denominator of {x} vanishes mod {p}")
    return x.numerator * pow(x.denominator, -1, p) % p

