"""Independent reference computations for the tests.

Nothing here imports the package: these are slow, direct versions built on
plain integers and sympy, so agreement with the library is a real check.
"""
from __future__ import annotations

import math
from fractions import Fraction

import sympy


def squarefree_class(x: Fraction) -> tuple[int, int]:
    """(sign, squarefree kernel) of a nonzero rational, via sympy.factorint."""
    x = Fraction(x)
    n = x.numerator * x.denominator
    sign = -1 if n < 0 else 1
    core = 1
    for p, e in sympy.factorint(abs(n)).items():
        if e % 2:
            core *= p
    return sign, core


def disc(coeffs_low_first) -> Fraction:
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t**k
               for k, c in enumerate(map(Fraction, coeffs_low_first)))
    return Fraction(str(sympy.discriminant(expr, t)))


def resultant(a, b) -> Fraction:
    """Determinant of the Sylvester matrix (coefficients lowest first)."""
    a = [sympy.Rational(str(Fraction(c))) for c in a]
    b = [sympy.Rational(str(Fraction(c))) for c in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + a[::-1] + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + b[::-1] + [0] * (size - n - 1 - i))
    return Fraction(str(sympy.Matrix(rows).det()))


def rational_roots(coeffs_low_first) -> list[Fraction]:
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(str(Fraction(c))) * t**k for k, c in enumerate(coeffs_low_first))
    return sorted(Fraction(str(r)) for r in sympy.roots(sympy.Poly(expr, t), filter="Q"))


def _red(c, p):
    c = Fraction(c)
    return c.numerator * pow(c.denominator, -1, p) % p


def _chi(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def count_hyperelliptic(coeffs, p: int) -> int:
    """Points of the smooth model of y^2 = h(x) over F_p (odd p, good reduction)."""
    h = [_red(c, p) for c in coeffs]
    while h and h[-1] == 0:
        h.pop()
    total = 0
    for x in range(p):
        v = 0
        for c in reversed(h):
            v = (v * x + c) % p
        total += 1 + _chi(v, p)
    deg = len(h) - 1
    if deg % 2:
        total += 1
    else:
        total += 1 + _chi(h[-1], p)
    return total


class Fp2:
    """F_{p^2} = F_p(sqrt n) with n a non-residue; elements are pairs (a, b)."""

    def __init__(self, p):
        self.p = p
        self.n = next(n for n in range(2, p) if _chi(n, p) == -1)

    def elements(self):
        return [(a, b) for a in range(self.p) for b in range(self.p)]

    def mul(self, x, y):
        p, n = self.p, self.n
        return ((x[0] * y[0] + n * x[1] * y[1]) % p, (x[0] * y[1] + x[1] * y[0]) % p)

    def add(self, x, y):
        return ((x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p)


def count_hyperelliptic_p2(coeffs, p: int) -> int:
    """Same as count_hyperelliptic over F_{p^2}, by a square table."""
    F = Fp2(p)
    els = F.elements()
    sq = {}
    for y in els:
        s = F.mul(y, y)
        sq[s] = sq.get(s, 0) + 1
    h = [(_red(c, p), 0) for c in coeffs]
    while h and h[-1] == (0, 0):
        h.pop()
    total = 0
    for x in els:
        v = (0, 0)
        for c in reversed(h):
            v = F.add(F.mul(v, x), c)
        total += sq.get(v, 0)
    deg = len(h) - 1
    # every element of F_p is a square in F_{p^2}
    total += 1 if deg % 2 else 2
    return total


def count_diagonal_quartic(coeffs, p: int) -> int:
    """Projective points over F_p of aX^4+bY^4+cZ^4+dX^2Y^2+eX^2Z^2+fY^2Z^2 = 0."""
    a, b, c, d, e, f = (_red(x, p) for x in coeffs)

    def F(X, Y, Z):
        X2, Y2, Z2 = X * X, Y * Y, Z * Z
        return (a * X2 * X2 + b * Y2 * Y2 + c * Z2 * Z2 + d * X2 * Y2 + e * X2 * Z2 + f * Y2 * Z2) % p

    n = sum(1 for x in range(p) for y in range(p) if F(x, y, 1) == 0)
    n += sum(1 for y in range(p) if F(1, y, 0) == 0)
    n += F(0, 1, 0) == 0
    return n


def count_long_weierstrass(a1, a2, a3, a4, a6, p: int) -> int:
    a1, a2, a3, a4, a6 = (_red(x, p) for x in (a1, a2, a3, a4, a6))
    n = 1
    for x in range(p):
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y - (x**3 + a2 * x * x + a4 * x + a6)) % p == 0:
                n += 1
    return n


def jacobian_order_g2(N1: int, N2: int, q: int) -> int:
    """#J(F_q) for genus 2 as L(1), L(T) = 1 - s1 T + e2 T^2 - q s1 T^3 + q^2 T^4."""
    s1 = q + 1 - N1
    s2 = q * q + 1 - N2
    e2 = (s1 * s1 - s2) // 2
    return 1 - s1 + e2 - q * s1 + q * q


def weil_upper(q: int, g: int) -> float:
    return (1 + math.sqrt(q)) ** (2 * g)


def elliptic_add(A, B, P, Q):
    """Chord and tangent on y^2 = x^3 + A x^2 + B x written without the library."""
    if P is None:
        return Q
    if Q is None:
        return P
    (x1, y1), (x2, y2) = P, Q
    if x1 == x2 and y1 == -y2:
        return None
    if P == Q:
        m = (3 * x1 * x1 + 2 * A * x1 + B) / (2 * y1)
    else:
        m = (y2 - y1) / (x2 - x1)
    x3 = m * m - A - x1 - x2
    return x3, -(y1 + m * (x3 - x1))


def point_order(A, B, P, bound=12):
    R = P
    for n in range(1, bound + 1):
        if R is None:
            return n
        R = elliptic_add(A, B, R, P)
    return None
