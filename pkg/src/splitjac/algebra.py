"""Exact rationals, square classes, univariate polynomials and the splitting
algebra of a cubic, together with root matchings between two cubics.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import mpmath

Rat = Fraction

TRIAL_BOUND = 10**6


class InconclusiveFactorization(ArithmeticError):
    """Raised when a square class cannot be certified within the trial bound."""


def rat(x) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rat_str(x) -> str:
    return str(rat(x))


# ---------------------------------------------------------------------------
# square classes

_primes: dict = {"limit": 0, "list": []}


def _primes_upto(n: int) -> list[int]:
    if _primes["limit"] >= n:
        return _primes["list"]
    import numpy as np

    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    _primes["list"] = np.nonzero(sieve)[0].tolist()
    _primes["limit"] = n
    return _primes["list"]


def _squarefree_int(n: int, bound: int) -> tuple[int, int]:
    """Split n > 0 as sf * c**2 with sf squarefree."""
    sf, cof = 1, 1
    if n == 1:
        return 1, 1
    for p in _primes_upto(bound):
        if p * p > n:
            break
        if n % p:
            continue
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        cof *= p ** (e // 2)
        if e % 2:
            sf *= p
    if n == 1:
        return sf, cof
    # every prime factor of n exceeds min(bound, sqrt(n))
    r = math.isqrt(n)
    if r * r == n:
        return sf, cof * r
    if n < bound**3:
        # at most two prime factors above the bound, not a square
        return sf * n, cof
    raise InconclusiveFactorization(
        f"cofactor {n} has no prime factor below {bound}; square class not certified"
    )


@dataclass(frozen=True)
class SquareClass:
    """x = sign * squarefree * cofactor**2 with squarefree a positive squarefree integer."""

    sign: int
    squarefree: int
    cofactor: Fraction = Fraction(1)

    @property
    def key(self) -> tuple[int, int]:
        return (self.sign, self.squarefree)

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        g = math.gcd(self.squarefree, other.squarefree)
        return SquareClass(
            self.sign * other.sign,
            (self.squarefree // g) * (other.squarefree // g),
            self.cofactor * other.cofactor * g,
        )

    def is_square(self) -> bool:
        return self.sign == 1 and self.squarefree == 1

    def value(self) -> Fraction:
        return self.sign * self.squarefree * self.cofactor**2


def squarefree_part(x, bound: int = TRIAL_BOUND) -> SquareClass:
    """Square class of a nonzero rational, certified by trial division."""
    x = rat(x)
    if x == 0:
        raise ValueError("zero has no square class")
    sign = 1 if x > 0 else -1
    n, d = abs(x.numerator), x.denominator
    sn, cn = _squarefree_int(n, bound)
    sd, cd = _squarefree_int(d, bound)
    g = math.gcd(sn, sd)
    sf = (sn // g) * (sd // g)
    # x = sn cn^2 / (sd cd^2) and sn/sd = sf / (sd/g)^2
    cof = Fraction(cn, cd * (sd // g))
    return SquareClass(sign, sf, cof)


def isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def rational_sqrt(x) -> Fraction | None:
    x = rat(x)
    if x < 0:
        return None
    a = isqrt_exact(x.numerator)
    b = isqrt_exact(x.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def is_square(x) -> bool:
    """True for rational squares, including 0."""
    return rational_sqrt(x) is not None


# ---------------------------------------------------------------------------
# Gaussian rationals, used for points defined over Q(i)


class QI:
    """Element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = rat(re) if not isinstance(re, Fraction) else re
        self.im = rat(im) if not isinstance(im, Fraction) else im

    @staticmethod
    def _c(x):
        if isinstance(x, QI):
            return x
        return QI(rat(x), Fraction(0))

    def __add__(self, o):
        o = QI._c(o)
        return QI(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return QI(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-QI._c(o))

    def __rsub__(self, o):
        return QI._c(o) - self

    def __mul__(self, o):
        o = QI._c(o)
        return QI(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self):
        n = self.re**2 + self.im**2
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return QI(self.re / n, -self.im / n)

    def __truediv__(self, o):
        return self * QI._c(o).inverse()

    def __rtruediv__(self, o):
        return QI._c(o) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        r = QI(1)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def conj(self):
        return QI(self.re, -self.im)

    def __eq__(self, o):
        if isinstance(o, (int, Fraction, QI)):
            o = QI._c(o)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"QI({self.re}, {self.im})"

    def to_pair(self):
        return [rat_str(self.re), rat_str(self.im)]


# ---------------------------------------------------------------------------
# coefficient domains


class _Rationals:
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        return rat(x)

    def __repr__(self):
        return "QQ"


QQ = _Rationals()


class DomainMismatch(TypeError):
    pass


class Poly:
    """Dense univariate polynomial, coefficients stored lowest degree first.

    The domain is QQ or a finite field object exposing ``zero``, ``one`` and a
    conversion call.
    """

    __slots__ = ("c", "dom")

    def __init__(self, coeffs: Iterable = (), dom=QQ):
        cs = [dom(x) for x in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.c = tuple(cs)
        self.dom = dom

    @classmethod
    def x(cls, dom=QQ):
        return cls([0, 1], dom)

    @classmethod
    def const(cls, a, dom=QQ):
        return cls([a], dom)

    @classmethod
    def from_roots(cls, roots, dom=QQ):
        p = cls([1], dom)
        for r in roots:
            p = p * cls([-dom(r), 1], dom)
        return p

    # basic structure
    @property
    def deg(self) -> int:
        return len(self.c) - 1

    def __len__(self):
        return len(self.c)

    def __getitem__(self, i):
        return self.c[i] if 0 <= i < len(self.c) else self.dom.zero

    @property
    def lc(self):
        return self.c[-1] if self.c else self.dom.zero

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, o):
        if isinstance(o, Poly):
            return self.dom is o.dom and self.c == o.c
        if isinstance(o, (int, Fraction)):
            return self == Poly([o], self.dom)
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Poly({[str(a) for a in self.c]}, {self.dom!r})"

    def _lift(self, o) -> "Poly":
        if isinstance(o, Poly):
            if o.dom is not self.dom:
                raise DomainMismatch(f"cannot combine polynomials over {self.dom!r} and {o.dom!r}")
            return o
        return Poly([o], self.dom)

    # arithmetic
    def __add__(self, o):
        o = self._lift(o)
        n = max(len(self.c), len(o.c))
        return Poly([self[i] + o[i] for i in range(n)], self.dom)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-a for a in self.c], self.dom)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        if not self.c or not o.c:
            return Poly([], self.dom)
        out = [self.dom.zero] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in enumerate(o.c):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.dom)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        r = Poly([1], self.dom)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def scale(self, a):
        return Poly([a * x for x in self.c], self.dom)

    def divmod(self, o):
        o = self._lift(o)
        if not o.c:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        q = [self.dom.zero] * max(len(r) - len(o.c) + 1, 0)
        inv = self.dom.one / o.lc
        for k in range(len(r) - len(o.c), -1, -1):
            a = r[k + len(o.c) - 1] * inv
            q[k] = a
            if a:
                for j, b in enumerate(o.c):
                    r[k + j] = r[k + j] - a * b
        return Poly(q, self.dom), Poly(r[: len(o.c) - 1], self.dom)

    def __floordiv__(self, o):
        return self.divmod(o)[0]

    def __mod__(self, o):
        return self.divmod(o)[1]

    def exact_div(self, o):
        q, r = self.divmod(o)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __call__(self, x):
        acc = None
        for a in reversed(self.c):
            acc = a if acc is None else acc * x + a
        if acc is None:
            return self.dom.zero if not isinstance(x, Poly) else Poly([], x.dom)
        if isinstance(x, Poly) and not isinstance(acc, Poly):
            return Poly([acc], x.dom)
        return acc

    def compose(self, q: "Poly") -> "Poly":
        acc = Poly([], self.dom)
        for a in reversed(self.c):
            acc = acc * q + a
        return acc

    def derivative(self):
        return Poly([i * self.c[i] for i in range(1, len(self.c))], self.dom)

    def monic(self):
        if not self.c:
            return self
        return self.scale(self.dom.one / self.lc)

    def map_coeffs(self, fn, dom):
        return Poly([fn(a) for a in self.c], dom)

    def to_json(self):
        return [rat_str(a) for a in self.c]


def poly(coeffs, dom=QQ) -> Poly:
    return Poly(coeffs, dom)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def poly_resultant(a: Poly, b: Poly):
    """Resultant via the Euclidean algorithm over a field."""
    dom = a._lift(b).dom
    if not a or not b:
        return dom.zero
    sign = dom.one
    res = dom.one
    while True:
        da, db = a.deg, b.deg
        if db == 0:
            return sign * res * b.lc**da
        r = a % b
        if not r:
            return dom.zero
        if (da * db) % 2:
            sign = -sign
        res = res * b.lc ** (da - r.deg)
        a, b = b, r


def poly_disc(p: Poly):
    """Discriminant (-1)^(n(n-1)/2) Res(p, p') / lc(p)."""
    n = p.deg
    if n < 1:
        raise ValueError("discriminant needs degree at least 1")
    if n == 1:
        return p.dom.one
    r = poly_resultant(p, p.derivative())
    s = -1 if (n * (n - 1) // 2) % 2 else 1
    return s * r / p.lc


def is_squarefree(p: Poly) -> bool:
    return poly_gcd(p, p.derivative()).deg == 0


class _PolyOps:
    """Bundle of polynomial operations over Q and finite fields."""

    add = staticmethod(lambda a, b: a + b)
    mul = staticmethod(lambda a, b: a * b)
    eval = staticmethod(lambda a, x: a(x))
    compose = staticmethod(lambda a, b: a.compose(b))
    gcd = staticmethod(poly_gcd)
    resultant = staticmethod(poly_resultant)
    disc = staticmethod(poly_disc)
    squarefree_test = staticmethod(is_squarefree)


poly_ops = _PolyOps()


def clear_denominators(p: Poly) -> tuple[Poly, int]:
    """Return (m * p, m) with m the lcm of the coefficient denominators."""
    m = 1
    for a in p.c:
        m = m * a.denominator // math.gcd(m, a.denominator)
    return p.scale(Fraction(m)), m


def integral_monic(p: Poly) -> tuple[Poly, int]:
    """Monic p of degree n -> (P, m) with P(X) = m^n p(X/m) monic integral."""
    p = p.monic()
    n = p.deg
    m = 1
    for i, a in enumerate(p.c[:-1]):
        e = n - i
        d = a.denominator
        # smallest k with d | k^e, built from the prime powers of d
        k = 1
        for q, v in _factor_small(d):
            k *= q ** (-(-v // e))
        m = m * k // math.gcd(m, k)
    return Poly([a * Fraction(m) ** (n - i) for i, a in enumerate(p.c)]), m


def _factor_small(n: int):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def rational_roots(p: Poly) -> list[Fraction]:
    """Distinct rational roots, sorted ascending.

    Numerical approximations are rounded to integers of an integral monic
    model, and every candidate is checked exactly, so the result is complete.
    """
    if p.deg < 1:
        return []
    roots = []
    q = p
    while q.deg >= 1 and not q.c[0]:
        roots.append(Fraction(0))
        q = Poly(q.c[1:])
    if q.deg >= 1:
        P, m = integral_monic(q)
        if P.deg == 1:
            cands = {-P.c[0]}
        else:
            digits = max(len(str(abs(int(a)))) for a in P.c) + 30
            with mpmath.workdps(digits):
                approx = mpmath.polyroots(
                    [int(a) for a in reversed(P.c)], maxsteps=400, extraprec=4 * digits
                )
            cands = set()
            for z in approx:
                re = mpmath.re(z)
                r = int(mpmath.nint(re))
                for c in (r - 1, r, r + 1):
                    cands.add(Fraction(c))
        for c in cands:
            if P(c) == 0:
                roots.append(c / m)
    return sorted(set(roots))


# ---------------------------------------------------------------------------
# splitting algebra Q[u, v] / (f(u), (f(v) - f(u)) / (v - u))


class SplitAlgebra:
    """Six-dimensional algebra in which a monic cubic f has the roots u, v and
    w = -c2 - u - v.  Basis u^i v^j with i < 3 and j < 2 (index i + 3j).
    """

    def __init__(self, f: Poly):
        if f.deg != 3 or f.dom is not QQ:
            raise ValueError("split_algebra needs a rational cubic")
        if not is_squarefree(f):
            raise ValueError("split_algebra needs a squarefree cubic")
        self.f = f.monic()
        c0, c1, c2, _ = self.f.c
        self.c0, self.c1, self.c2 = c0, c1, c2

    def elem(self, coords) -> "SAElem":
        return SAElem(self, [rat(a) for a in coords])

    def const(self, a) -> "SAElem":
        return self.elem([a, 0, 0, 0, 0, 0])

    @property
    def u(self):
        return self.elem([0, 1, 0, 0, 0, 0])

    @property
    def v(self):
        return self.elem([0, 0, 0, 1, 0, 0])

    @property
    def w(self):
        return self.elem([-self.c2, -1, 0, -1, 0, 0])

    def roots(self):
        return (self.u, self.v, self.w)

    def _reduce(self, grid):
        """grid[i][j] for u^i v^j, i <= 6, j <= 2 -> 6 coordinates."""
        c0, c1, c2 = self.c0, self.c1, self.c2
        g = [list(row) + [Fraction(0)] * (3 - len(row)) for row in grid]
        while len(g) < 9:
            g.append([Fraction(0)] * 3)
        # v^2 = -(u + c2) v - (u^2 + c2 u + c1)
        for i in range(len(g) - 3, -1, -1):
            a = g[i][2]
            if not a:
                continue
            g[i][2] = Fraction(0)
            g[i + 1][1] -= a
            g[i][1] -= a * c2
            g[i + 2][0] -= a
            g[i + 1][0] -= a * c2
            g[i][0] -= a * c1
        # u^3 = -c2 u^2 - c1 u - c0
        for i in range(len(g) - 1, 2, -1):
            for j in (0, 1):
                a = g[i][j]
                if not a:
                    continue
                g[i][j] = Fraction(0)
                g[i - 1][j] -= a * c2
                g[i - 2][j] -= a * c1
                g[i - 3][j] -= a * c0
        return [g[i][j] for j in (0, 1) for i in range(3)]

    def mul(self, a, b):
        grid = [[Fraction(0)] * 3 for _ in range(5)]
        for ja in (0, 1):
            for ia in range(3):
                x = a[ia + 3 * ja]
                if not x:
                    continue
                for jb in (0, 1):
                    for ib in range(3):
                        y = b[ib + 3 * jb]
                        if y:
                            grid[ia + ib][ja + jb] += x * y
        return self._reduce(grid)

    def mult_matrix(self, a):
        cols = []
        for k in range(6):
            e = [Fraction(0)] * 6
            e[k] = Fraction(1)
            cols.append(self.mul(a, e))
        return [[cols[k][r] for k in range(6)] for r in range(6)]


def solve_linear(M, b):
    """Exact Gauss-Jordan solve of the square system M x = b."""
    n = len(M)
    A = [list(row) + [b[i]] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        A[col], A[piv] = A[piv], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                fac = A[r][col]
                A[r] = [x - fac * y for x, y in zip(A[r], A[col])]
    return [A[r][n] for r in range(n)]


class SAElem:
    __slots__ = ("alg", "x")

    def __init__(self, alg: SplitAlgebra, coords):
        self.alg = alg
        self.x = list(coords)

    def _c(self, o):
        if isinstance(o, SAElem):
            return o
        return self.alg.const(o)

    def __add__(self, o):
        o = self._c(o)
        return SAElem(self.alg, [a + b for a, b in zip(self.x, o.x)])

    __radd__ = __add__

    def __neg__(self):
        return SAElem(self.alg, [-a for a in self.x])

    def __sub__(self, o):
        return self + (-self._c(o))

    def __rsub__(self, o):
        return self._c(o) - self

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return SAElem(self.alg, [a * o for a in self.x])
        return SAElem(self.alg, self.alg.mul(self.x, o.x))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        r = self.alg.const(1)
        for _ in range(e):
            r = r * self
        return r

    def __truediv__(self, o):
        if isinstance(o, (int, Fraction)):
            return SAElem(self.alg, [a / o for a in self.x])
        M = self.alg.mult_matrix(o.x)
        try:
            return SAElem(self.alg, solve_linear(M, self.x))
        except ZeroDivisionError:
            raise ZeroDivisionError("element of the splitting algebra is not invertible") from None

    def __rtruediv__(self, o):
        return self._c(o) / self

    def is_rational(self) -> bool:
        return not any(self.x[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element of the splitting algebra is not a rational constant")
        return self.x[0]

    def is_zero(self):
        return not any(self.x)

    def __eq__(self, o):
        if isinstance(o, (int, Fraction, SAElem)):
            return self.x == self._c(o).x
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.x))

    def __repr__(self):
        return f"SAElem({[str(a) for a in self.x]})"


def split_algebra(f: Poly) -> SplitAlgebra:
    return SplitAlgebra(f)


# ---------------------------------------------------------------------------
# root matchings


@dataclass
class Matching:
    """A Galois-compatible bijection between the roots of f and of g.

    ``match_poly`` p satisfies g(p(x)) = 0 mod f(x) and sends each root of f
    to its partner.  ``kind`` is "split", "semisplit" or "irreducible";
    ``perm`` (split) lists the partner index of each sorted rational root of
    f, ``sign`` (semisplit) is +1/-1 for the two pairings of the conjugate
    roots.
    """

    kind: str
    f: Poly
    g: Poly
    match_poly: Poly
    perm: tuple | None = None
    sign: int | None = None
    roots_f: tuple = field(default=(), repr=False)
    roots_g: tuple = field(default=(), repr=False)

    def verify(self) -> bool:
        return not (self.g.compose(self.match_poly) % self.f)

    def describe(self) -> dict:
        out = {"kind": self.kind, "matchPoly": self.match_poly.to_json()}
        if self.perm is not None:
            out["perm"] = list(self.perm)
        if self.sign is not None:
            out["sign"] = self.sign
        return out

    def inverse(self) -> "Matching":
        """Matching from g back to f."""
        if self.kind == "split":
            inv = [0, 0, 0]
            for i, j in enumerate(self.perm):
                inv[j] = i
            pairs = [(self.roots_g[j], self.roots_f[i]) for j, i in enumerate(inv)]
            return Matching(
                "split", self.g, self.f, _interpolate(pairs), tuple(inv), None,
                self.roots_g, self.roots_f,
            )
        # invert p modulo g: the inverse q is the unique poly of degree < 3 with
        # q(p(x)) = x mod f; solve for q's coefficients in the splitting algebra
        alg = SplitAlgebra(self.f)
        imgs = [_apply(self.match_poly, a) for a in alg.roots()]
        # q(b_i) = a_i: Vandermonde over the algebra is awkward, use linear algebra
        # on coordinates: q0 + q1 b + q2 b^2 = u must hold identically
        b = imgs[0]
        basis = [alg.const(1), b, b * b]
        target = alg.u
        rows = [[basis[k].x[r] for k in range(3)] for r in range(6)]
        q = _least_solve(rows, target.x)
        mp = Poly(q)
        m = Matching(self.kind, self.g, self.f, mp, None,
                     self.sign, self.roots_g, self.roots_f)
        if not m.verify():
            raise ArithmeticError("matching inverse failed verification")
        return m


def _least_solve(rows, rhs):
    """Solve an overdetermined consistent system exactly."""
    ncol = len(rows[0])
    A = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(A)):
        if A[i][ncol]:
            raise ArithmeticError("inconsistent system")
    sol = [Fraction(0)] * ncol
    for i, c in enumerate(piv_cols):
        sol[c] = A[i][ncol]
    return sol


def _apply(p: Poly, a):
    acc = None
    for c in reversed(p.c):
        acc = a.alg.const(c) if acc is None else acc * a + c
    return acc if acc is not None else a.alg.const(0)


def _interpolate(pairs) -> Poly:
    out = Poly([])
    for i, (xi, yi) in enumerate(pairs):
        term = Poly([yi])
        for j, (xj, _) in enumerate(pairs):
            if j != i:
                term = term * Poly([-xj, 1]) * (Fraction(1) / (xi - xj))
        out = out + term
    return out


def _check_cubic(f: Poly, name: str) -> Poly:
    if f.dom is not QQ or f.deg != 3:
        raise ValueError(f"{name} must be a rational cubic")
    if not is_squarefree(f):
        raise ValueError(f"{name} is not squarefree")
    return f.monic()


def match_roots(
    f: Poly,
    g: Poly,
    precision_bits: int = 256,
    height_bound: int = 10**12,
) -> list[Matching]:
    """All root matchings between two cubics with the same discriminant class.

    Split cubics give all six permutations, semisplit ones the two pairings of
    the conjugate roots, irreducible ones every polynomial field isomorphism
    found numerically and confirmed exactly.
    """
    f = _check_cubic(f, "f")
    g = _check_cubic(g, "g")
    if squarefree_part(poly_disc(f)).key != squarefree_part(poly_disc(g)).key:
        raise ValueError("discriminants of f and g lie in different square classes")
    rf, rg = rational_roots(f), rational_roots(g)
    if len(rf) != len(rg):
        return []
    out: list[Matching] = []
    if len(rf) == 3:
        for perm in itertools.permutations(range(3)):
            pairs = [(rf[i], rg[perm[i]]) for i in range(3)]
            m = Matching("split", f, g, _interpolate(pairs), perm, None, tuple(rf), tuple(rg))
            out.append(m)
        return out
    if len(rf) == 1:
        r, s = rf[0], rg[0]
        qf = f.exact_div(Poly([-r, 1]))
        qg = g.exact_div(Poly([-s, 1]))
        bf, bg = qf.c[1], qg.c[1]
        Df = bf**2 - 4 * qf.c[0]
        Dg = bg**2 - 4 * qg.c[0]
        k = rational_sqrt(Dg / Df)
        if k is None:
            return []
        for sign in (1, -1):
            # conjugate root rho of f goes to (-bg + sign*k*(2 rho + bf)) / 2
            L = Poly([(-bg + sign * k * bf) / 2, sign * k])
            p = L + qf.scale((s - L(r)) / qf(r))
            m = Matching("semisplit", f, g, p, None, sign, (r,), (s,))
            if m.verify():
                out.append(m)
        return out
    return _match_irreducible(f, g, precision_bits, height_bound)


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    v = Fraction(int(man)) * (Fraction(2) ** int(exp))
    return -v if sign else v


def _match_irreducible(f, g, bits, height_bound):
    out = []
    seen = set()
    with mpmath.workprec(bits):
        ra = sorted(mpmath.polyroots([mpmath.mpf(_to_mpf(a)) for a in reversed(f.c)],
                                     maxsteps=500, extraprec=bits),
                    key=lambda z: (mpmath.re(z), mpmath.im(z)))
        rb = sorted(mpmath.polyroots([mpmath.mpf(_to_mpf(a)) for a in reversed(g.c)],
                                     maxsteps=500, extraprec=bits),
                    key=lambda z: (mpmath.re(z), mpmath.im(z)))
        V = mpmath.matrix([[1, a, a * a] for a in ra])
        tol = mpmath.mpf(2) ** (-bits // 2)
        for perm in itertools.permutations(range(3)):
            rhs = mpmath.matrix([rb[perm[i]] for i in range(3)])
            try:
                sol = mpmath.lu_solve(V, rhs)
            except ZeroDivisionError:
                continue
            if any(abs(mpmath.im(c)) > tol * (1 + abs(c)) for c in sol):
                continue
            coeffs = [_mpf_to_fraction(mpmath.re(c)).limit_denominator(height_bound) for c in sol]
            p = Poly(coeffs)
            if p.c in seen:
                continue
            m = Matching("irreducible", f, g, p)
            if p.deg >= 1 and m.verify():
                seen.add(p.c)
                out.append(m)
    return out


def _to_mpf(a: Fraction):
    return mpmath.mpf(a.numerator) / a.denominator
