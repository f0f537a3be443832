"""Weierstrass curves, the chord-tangent law and 2-torsion bookkeeping.

Coefficients may live in Q, Q(i) or a finite field: the group law only uses
field arithmetic and truth testing of elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, SquareClass, _factor_small, rat, rat_str, rational_roots, squarefree_part


class _Infinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "O"

    def __reduce__(self):
        return (_Infinity, ())


O = _Infinity()


def is_infinity(P) -> bool:
    return P is O


class NotOnCurve(ValueError):
    pass


@dataclass(frozen=True)
class LongWeierstrass:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: object = Fraction(0)
    a2: object = Fraction(0)
    a3: object = Fraction(0)
    a4: object = Fraction(0)
    a6: object = Fraction(0)

    model = "long"

    @property
    def coeffs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b2(self):
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self):
        a1, a2, a3, a4, a6 = self.coeffs
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @property
    def disc(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def c4(self):
        return self.b2 * self.b2 - 24 * self.b4

    @property
    def j(self):
        return self.c4**3 / self.disc

    def as_long(self) -> "LongWeierstrass":
        return self

    def contains(self, P) -> bool:
        if P is O:
            return True
        x, y = P
        a1, a2, a3, a4, a6 = self.coeffs
        return not (y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6))

    def neg(self, P):
        if P is O:
            return O
        x, y = P
        return (x, -y - self.a1 * x - self.a3)

    def add(self, P, Q):
        if P is O:
            return Q
        if Q is O:
            return P
        a1, a2, a3, a4, a6 = self.coeffs
        x1, y1 = P
        x2, y2 = Q
        if not (x1 - x2):
            if not (y1 + y2 + a1 * x2 + a3):
                return O
            den = 2 * y1 + a1 * x1 + a3
            lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
            nu = (-x1 * x1 * x1 + a4 * x1 + 2 * a6 - a3 * y1) / den
        else:
            lam = (y2 - y1) / (x2 - x1)
            nu = (y1 * x2 - y2 * x1) / (x2 - x1)
        x3 = lam * lam + a1 * lam - a2 - x1 - x2
        y3 = -(lam + a1) * x3 - nu - a3
        return (x3, y3)

    def sub(self, P, Q):
        return self.add(P, self.neg(Q))

    def mul(self, n: int, P):
        if n < 0:
            return self.mul(-n, self.neg(P))
        R = O
        while n:
            if n & 1:
                R = self.add(R, P)
            P = self.add(P, P)
            n >>= 1
        return R

    def to_json(self):
        return {"model": "long", "coeffs": [_elem_json(a) for a in self.coeffs]}


@dataclass(frozen=True)
class BForm:
    """y^2 = x (x^2 + A x + B)."""

    A: object
    B: object

    model = "bform"

    @property
    def delta(self):
        return self.A * self.A - 4 * self.B

    @property
    def disc(self):
        return 16 * self.B * self.B * self.delta

    @property
    def j(self):
        return self.as_long().j

    def as_long(self) -> LongWeierstrass:
        z = self.A - self.A
        return LongWeierstrass(z, self.A, z, self.B, z)

    def cubic(self) -> Poly:
        return Poly([0, self.B, self.A, 1])

    def contains(self, P):
        return self.as_long().contains(P)

    def neg(self, P):
        return self.as_long().neg(P)

    def add(self, P, Q):
        return self.as_long().add(P, Q)

    def sub(self, P, Q):
        return self.as_long().sub(P, Q)

    def mul(self, n, P):
        return self.as_long().mul(n, P)

    def to_json(self):
        return {"model": "bform", "coeffs": [_elem_json(self.A), _elem_json(self.B)]}


def _elem_json(a):
    if isinstance(a, (int, Fraction)):
        return rat_str(a)
    if hasattr(a, "to_pair"):
        return a.to_pair()
    return repr(a)


def curve_from_json(d):
    coeffs = [rat(c) for c in d["coeffs"]]
    if d["model"] == "bform":
        return BForm(*coeffs)
    if d["model"] == "long":
        return LongWeierstrass(*coeffs)
    raise ValueError(f"unknown curve model {d['model']!r}")


def point_to_json(P):
    if P is O:
        return ["inf"]
    return [_elem_json(P[0]), _elem_json(P[1])]


def point_from_json(v):
    if v == ["inf"] or v == "inf":
        return O
    return (rat(v[0]), rat(v[1]))


def group_law(E, P, Q):
    return E.add(P, Q)


def nonsingular(E) -> bool:
    return bool(E.disc)


def from_kubert(b, c) -> LongWeierstrass:
    """y^2 + (1 - c) xy - b y = x^3 - b x^2, with (0, 0) the marked point."""
    b, c = rat(b), rat(c)
    return LongWeierstrass(1 - c, -b, -b, Fraction(0), Fraction(0))


def complete_square(E) -> Poly:
    """Monic cubic f with E isomorphic to y^2 = f(x) via y -> y + (a1 x + a3)/2."""
    E = E.as_long()
    a1, a2, a3, a4, a6 = (rat(a) for a in E.coeffs)
    lin = Poly([a3 / 2, a1 / 2])
    return Poly([a6, a4, a2, 1]) + lin * lin


def to_completed(E, P):
    """Image of a point of E on y^2 = complete_square(E)."""
    if P is O:
        return O
    E = E.as_long()
    x, y = P
    return (x, y + (E.a1 * x + E.a3) / 2)


@dataclass(frozen=True)
class BFormSubstitution:
    """x = e^2 X + x0 and y + (a1 x + a3)/2 = e^3 Y."""

    x0: Fraction
    e: Fraction

    def forward(self, E, P):
        if P is O:
            return O
        x, y = to_completed(E, P)
        return ((x - self.x0) / self.e**2, y / self.e**3)

    def backward(self, E, P):
        if P is O:
            return O
        E = E.as_long()
        X, Y = P
        x = self.e**2 * X + self.x0
        return (x, self.e**3 * Y - (E.a1 * x + E.a3) / 2)


def _integral_scale(A: Fraction, B: Fraction) -> Fraction:
    """Smallest m > 0 with A m^2 and B m^4 integral."""
    m = 1
    primes = {q for q, _ in _factor_small(A.denominator)} | {q for q, _ in _factor_small(B.denominator)}
    for q in primes:
        va = _val(A.denominator, q)
        vb = _val(B.denominator, q)
        m *= q ** max(-(-va // 2), -(-vb // 4))
    return Fraction(m)


def _val(n, q):
    v = 0
    while n % q == 0 and n:
        n //= q
        v += 1
    return v


def to_bform(E, T, integral: bool = False):
    """Move the 2-torsion point T of E to (0, 0) of a B-form curve.

    Returns the curve and the substitution used.  With ``integral`` the
    result is rescaled to integral A, B.
    """
    E = E.as_long()
    f = complete_square(E)
    x0 = rat(T[0]) if T is not O else None
    if x0 is None or f(x0) != 0:
        raise ValueError("to_bform needs a rational 2-torsion point")
    g = f.compose(Poly([x0, 1]))
    A, B = g.c[2] if len(g.c) > 2 else Fraction(0), g[1]
    e = Fraction(1)
    if integral:
        m = _integral_scale(A, B)
        A, B, e = A * m * m, B * m**4, 1 / m
    if B == 0:
        raise ValueError("singular curve")
    return BForm(A, B), BFormSubstitution(x0, e)


def curve_invariants(E) -> dict:
    L = E.as_long()
    out = {"disc": L.disc, "j": L.j if L.disc else None, "c4": L.c4}
    if isinstance(L.disc, Fraction) and L.disc:
        out["discClass"] = squarefree_part(L.disc)
    return out


@dataclass(frozen=True)
class OrderCertificate:
    kind: str  # "Finite" or "InfiniteOrder"
    order: int | None = None

    def to_json(self):
        return {"kind": self.kind, "order": self.order}


MAZUR_BOUND = 12


def order_certificate(E, P, bound: int = MAZUR_BOUND) -> OrderCertificate:
    """Exact order of a rational point, or InfiniteOrder when nP != O for n <= 12."""
    if not E.contains(P):
        raise NotOnCurve(f"{P} is not on the curve")
    R = P
    for n in range(1, bound + 1):
        if R is O:
            return OrderCertificate("Finite", n)
        R = E.add(R, P)
    return OrderCertificate("InfiniteOrder")


@dataclass
class TwoTorsion:
    pattern: str  # "Split", "Semisplit" or "Irreducible"
    points: list

    def to_json(self):
        return {"pattern": self.pattern, "points": [point_to_json(P) for P in self.points]}


def two_torsion(E) -> TwoTorsion:
    L = E.as_long()
    f = complete_square(L)
    roots = rational_roots(f)
    pts = [(r, -(L.a1 * r + L.a3) / 2) for r in roots]
    pattern = {3: "Split", 1: "Semisplit", 0: "Irreducible"}[len(roots)]
    return TwoTorsion(pattern, pts)


def quadratic_twist(E: BForm, D) -> BForm:
    """y^2 = x (x^2 + D A x + D^2 B), the twist by Q(sqrt D)."""
    D = rat(D) if isinstance(D, (int, str)) else D
    return BForm(D * E.A, D * D * E.B)


def weierstrass_from_cubic(f: Poly):
    """y^2 = f(x) with f a cubic of any leading coefficient a -> monic model.

    Returns (E, point_map) where (x, y) -> (a x, a y).
    """
    if f.deg != 3:
        raise ValueError("need a cubic")
    d, c, b, a = f.c
    E = LongWeierstrass(Fraction(0), b, Fraction(0), a * c, a * a * d)

    def pmap(P):
        if P is O:
            return O
        return (a * P[0], a * P[1])

    return E, pmap


def bform_square_class_data(E: BForm) -> dict[str, SquareClass]:
    return {"B": squarefree_part(E.B), "delta": squarefree_part(E.delta)}
