"""Genus-3 curves whose Jacobian is (2,2,2)-isogenous to E1 x E2 x E3.

Each E_i is a B-form curve y^2 = x(x^2 + A_i x + B_i) with Q_i = (0, 0), and
a second 2-torsion point P_i is encoded by d_i = -(A_i + 2 x_{P_i}), a square
root of Delta_i = A_i^2 - 4 B_i.  Only the product R = d1 d2 d3 has to be
rational, so the individual d_i are kept as surds c * sqrt(D).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import SquareClass, rat, rat_str, rational_sqrt, squarefree_part
from .elliptic import BForm
from .ffcount import HyperComposite, QuarticCurve
from .families import instantiate


class InvalidTriple(ValueError):
    pass


class ConditionFails(ValueError):
    """A square root demanded by a closed-form solver does not exist over Q."""


# ---------------------------------------------------------------------------
# surds


@dataclass(frozen=True)
class Surd:
    """c * sqrt(D) with D a squarefree integer; sqrt(D) = i sqrt(|D|) for D < 0."""

    c: Fraction
    D: int = 1

    def __post_init__(self):
        object.__setattr__(self, "c", rat(self.c))
        if self.D == 0:
            raise ValueError("radicand must be nonzero")
        if self.c == 0:
            object.__setattr__(self, "D", 1)

    @classmethod
    def sqrt(cls, x, sign: int = 1) -> "Surd":
        """sign * sqrt(x), with the radicand reduced to its squarefree class."""
        x = rat(x)
        if x == 0:
            return cls(Fraction(0))
        sc = squarefree_part(x)
        return cls(sign * abs(sc.cofactor), sc.sign * sc.squarefree)

    @property
    def is_rational(self) -> bool:
        return self.D == 1

    def rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.c

    def square(self) -> Fraction:
        return self.c * self.c * self.D

    def __neg__(self):
        return Surd(-self.c, self.D)

    def __mul__(self, other):
        if not isinstance(other, Surd):
            return Surd(self.c * rat(other), self.D)
        a, b = self.D, other.D
        g = math.gcd(abs(a), abs(b))
        # sqrt(a) sqrt(b) = sqrt(ab) unless both are negative
        sign = -1 if (a < 0 and b < 0) else 1
        D = (a // g) * (b // g)
        if a < 0 and b < 0:
            D = abs(D)
        return Surd(sign * self.c * other.c * g, D)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Surd):
            # 1 / (c sqrt D) = sqrt(D) / (c D)
            inv = Surd(1 / (other.c * other.D), other.D)
            return self * inv
        return Surd(self.c / rat(other), self.D)

    def __rtruediv__(self, other):
        return Surd(rat(other)) / self

    def __eq__(self, other):
        if not isinstance(other, Surd):
            other = Surd(rat(other))
        return self.c == other.c and (self.D == other.D or self.c == 0)

    def __hash__(self):
        return hash((self.c, self.D))

    def __str__(self):
        if self.D == 1:
            return rat_str(self.c)
        return f"{rat_str(self.c)}*sqrt({self.D})"

    def to_json(self):
        return str(self)


def as_surd(x) -> Surd:
    return x if isinstance(x, Surd) else Surd(rat(x))


def d_from_point(E: BForm, xP) -> Fraction:
    """d = -(A + 2 x_P) for a rational 2-torsion point P != (0, 0)."""
    xP = rat(xP)
    if xP == 0 or E.cubic()(xP) != 0:
        raise InvalidTriple(f"x = {xP} is not a nonzero 2-torsion abscissa")
    return -(E.A + 2 * xP)


def d_from_sign(E: BForm, sign: int) -> Surd:
    return Surd.sqrt(E.delta, sign)


# ---------------------------------------------------------------------------
# triples


@dataclass(frozen=True)
class GlueTriple:
    E1: BForm
    E2: BForm
    E3: BForm
    d1: Surd
    d2: Surd
    d3: Surd

    def __post_init__(self):
        for n in (1, 2, 3):
            object.__setattr__(self, f"d{n}", as_surd(getattr(self, f"d{n}")))
        for n, E, d in zip((1, 2, 3), self.curves, self.ds):
            if E.B == 0:
                raise InvalidTriple(f"B{n} = 0")
            if E.delta == 0:
                raise InvalidTriple(f"Delta{n} = 0")
            if d.square() != E.delta:
                raise InvalidTriple(f"d{n}^2 = {d.square()} differs from Delta{n} = {E.delta}")
        if not (self.d1 * self.d2 * self.d3).is_rational:
            raise InvalidTriple("Delta1 Delta2 Delta3 is not a rational square")

    @property
    def curves(self):
        return (self.E1, self.E2, self.E3)

    @property
    def ds(self):
        return (self.d1, self.d2, self.d3)

    @property
    def R(self) -> Fraction:
        return (self.d1 * self.d2 * self.d3).rational()

    @property
    def A(self):
        return tuple(rat(E.A) for E in self.curves)

    @property
    def B(self):
        return tuple(rat(E.B) for E in self.curves)

    @property
    def Delta(self):
        return tuple(rat(E.delta) for E in self.curves)

    def lambdas(self):
        return tuple(Surd(A) / d for A, d in zip(self.A, self.ds))

    def flip(self, i: int) -> "GlueTriple":
        """Negate d_i (choose the other non-marked 2-torsion point on E_i)."""
        ds = list(self.ds)
        ds[i] = -ds[i]
        return GlueTriple(*self.curves, *ds)

    def to_json(self):
        return {
            "curves": [E.to_json() for E in self.curves],
            "d": [str(d) for d in self.ds],
            "R": rat_str(self.R),
        }


def triple_from_instances(*pairs) -> GlueTriple:
    """Build from (curve, d) pairs where d is a rational, a Surd or a sign (+1/-1)."""
    curves, ds = [], []
    for E, d in pairs:
        curves.append(E)
        if isinstance(d, int) and d in (1, -1):
            ds.append(d_from_sign(E, d))
        else:
            ds.append(as_surd(d))
    return GlueTriple(*curves, *ds)


# ---------------------------------------------------------------------------
# twisting factor


def _twisting_delta_form(tr: GlueTriple) -> Fraction:
    A1, A2, A3 = tr.A
    D1, D2, D3 = tr.Delta
    return tr.R * (A1 * A1 / D1 + A2 * A2 / D2 + A3 * A3 / D3 - 1) - 2 * A1 * A2 * A3


def _twisting_lambda_form(tr: GlueTriple) -> Fraction:
    l1, l2, l3 = tr.lambdas()
    quad = l1.square() + l2.square() + l3.square() - 1
    cross = (l1 * l2 * l3).rational()
    return tr.R * (quad - 2 * cross)


def twisting_factor(tr: GlueTriple) -> Fraction:
    T = _twisting_delta_form(tr)
    T2 = _twisting_lambda_form(tr)
    assert T == T2, f"twisting factor forms disagree: {T} vs {T2}"
    return T


def twisting_values_over_signs(tr: GlueTriple) -> set:
    out = set()
    for signs in itertools.product((1, -1), repeat=3):
        ds = [d * s for d, s in zip(tr.ds, signs)]
        out.add(twisting_factor(GlueTriple(*tr.curves, *ds)))
    return out


# ---------------------------------------------------------------------------
# T = 0: hyperelliptic composite


def hyper_coefficients(tr: GlueTriple):
    """The a, b, c coefficients of W^2 Z^2 = a X^4 + b Y^4 + c Z^4."""
    R = tr.R
    B1, B2, B3 = tr.B
    r1, r2, r3 = (b / D for b, D in zip(tr.B, tr.Delta))
    a = (R * B1 / 2) * (-r1 + r2 + r3)
    b = (R * B2 / 2) * (r1 - r2 + r3)
    c = (R * B3 / 2) * (r1 + r2 - r3)
    return a, b, c


def glue_hyper(tr: GlueTriple) -> HyperComposite:
    T = twisting_factor(tr)
    if T != 0:
        raise ValueError(f"twisting factor is {T}, not 0; use glue_quartic")
    A1, A2, A3 = tr.A
    B1, B2, B3 = tr.B
    a, b, c = hyper_coefficients(tr)
    roots = []
    for name, prod in (("B2B3", B2 * B3), ("B1B3", B1 * B3), ("B1B2", B1 * B2)):
        r = rational_sqrt(1 / prod) if prod > 0 else None
        if r is None:
            raise InvalidTriple(f"{name} = {prod} is not a rational square; inconsistent triple")
        roots.append(r)
    for s1, s2, s3 in itertools.product((1, -1), repeat=3):
        d, e, f = s1 * roots[0], s2 * roots[1], s3 * roots[2]
        if A1 == -a * e * f and A2 == -b * d * f and A3 == -c * d * e:
            return HyperComposite(a, b, c, d, e, f)
    raise AssertionError("no sign vector satisfies A1 = -aef, A2 = -bdf, A3 = -cde")


def composite_relations(tr: GlueTriple, H: HyperComposite) -> dict:
    A1, A2, A3 = tr.A
    B1, B2, B3 = tr.B
    a, b, c, d, e, f = H.coeffs
    return {
        "B2B3 d^2 = 1": B2 * B3 * d * d == 1,
        "B1B3 e^2 = 1": B1 * B3 * e * e == 1,
        "B1B2 f^2 = 1": B1 * B2 * f * f == 1,
        "A1 = -aef": A1 == -a * e * f,
        "A2 = -bdf": A2 == -b * d * f,
        "A3 = -cde": A3 == -c * d * e,
    }


# ---------------------------------------------------------------------------
# T != 0: plane quartic


@dataclass(frozen=True)
class QuarticGlue:
    curve: QuarticCurve
    T: Fraction
    square_class: SquareClass

    @property
    def isogenous_over_Q(self) -> bool:
        return self.square_class.is_square()

    @property
    def field(self) -> str:
        if self.isogenous_over_Q:
            return "Q"
        return f"Q(sqrt({self.square_class.sign * self.square_class.squarefree}))"

    def to_json(self):
        return {
            "model": self.curve.to_json(),
            "T": rat_str(self.T),
            "isogenousOver": self.field,
        }


def glue_quartic(tr: GlueTriple) -> QuarticGlue:
    T = twisting_factor(tr)
    if T == 0:
        raise ValueError("twisting factor is 0; use glue_hyper")
    A1, A2, A3 = tr.A
    B1, B2, B3 = tr.B
    D1, D2, D3 = tr.Delta
    R = tr.R
    d = (-A1 * A2 + A3 * R / D3) / 2
    e = (-A1 * A3 + A2 * R / D2) / 2
    f = (-A2 * A3 + A1 * R / D1) / 2
    C = QuarticCurve(B1, B2, B3, d, e, f, T=T)
    q = C.nonsingularity_quantities()
    expected = [B1, B2, B3, T * R / (4 * D3), T * R / (4 * D2), T * R / (4 * D1), T * T / 16]
    assert list(q.values()) == expected, "nonsingularity quantities do not match T"
    bad = [k for k, v in q.items() if v == 0]
    if bad:
        raise AssertionError(f"quartic is singular: {', '.join(bad)} vanish")
    return QuarticGlue(C, T, squarefree_part(T))


def projective_equal(u, v) -> bool:
    """Coefficient vectors equal up to a nonzero scalar (pairwise cross-products)."""
    u, v = list(u), list(v)
    if len(u) != len(v) or not any(u) or not any(v):
        return False
    return all(u[i] * v[j] == u[j] * v[i] for i in range(len(u)) for j in range(len(u)))


# ---------------------------------------------------------------------------
# closed-form parameter solvers


def _sqrt_or_fail(x, what: str) -> Fraction:
    r = rational_sqrt(x)
    if r is None:
        raise ConditionFails(f"{what} = {rat_str(rat(x))} is not a rational square")
    return r


def t_from_22(rhs) -> Fraction:
    """Solve (t+1)/(t-1) = rhs."""
    rhs = rat(rhs)
    if rhs in (1, -1):
        raise ConditionFails(f"right-hand side {rhs} gives no admissible t")
    return (rhs + 1) / (rhs - 1)


def solve_22(E1: BForm, E2: BForm, d1, d2, sign: int = 1) -> GlueTriple:
    """Third curve y^2 = x(x-1)(x-t) with d3 = 1 - t making T = 0.

    Needs B1 B2 a square and d1 d2 rational.
    """
    s = _sqrt_or_fail(E1.B * E2.B, "B1 B2")
    r = (as_surd(d1) * as_surd(d2))
    if not r.is_rational:
        raise ConditionFails("Delta1 Delta2 is not a rational square")
    rhs = (E1.A * E2.A + 4 * sign * s) / r.rational()
    t0 = t_from_22(rhs)
    E3 = instantiate("bform", "2x2", t0).curve
    return GlueTriple(E1, E2, E3, d1, d2, Surd(1 - t0))


def t_from_24(A1, B1, A2, B2, r, signs=(1, 1)) -> Fraction:
    """t = (A1 +- 2 sqrt B1)(A2 +- 2 sqrt B2) / r with r = d1 d2."""
    b1 = _sqrt_or_fail(B1, "B1")
    b2 = _sqrt_or_fail(B2, "B2")
    return (rat(A1) + 2 * signs[0] * b1) * (rat(A2) + 2 * signs[1] * b2) / rat(r)


def solve_24(E1: BForm, E2: BForm, d1, d2, signs=(1, 1)) -> GlueTriple:
    """Third curve of type (2,4) with d3 = 4t making T = 0."""
    r = as_surd(d1) * as_surd(d2)
    if not r.is_rational:
        raise ConditionFails("Delta1 Delta2 is not a rational square")
    t0 = t_from_24(E1.A, E1.B, E2.A, E2.B, r.rational(), signs)
    E3 = instantiate("bform", "2x4", t0).curve
    return GlueTriple(E1, E2, E3, d1, d2, Surd(4 * t0))


def square_condition_42(r) -> Fraction:
    """(r+1) t^2 + (2-6r) t + (r+1) has rational roots iff this is a square."""
    return 2 * (1 - rat(r))


def t_from_42(r) -> list[Fraction]:
    """Rational roots of (r+1) t^2 + (2-6r) t + (r+1)."""
    r = rat(r)
    if r == -1:
        raise ConditionFails("r = -1 leaves no quadratic to solve")
    disc = (2 - 6 * r) ** 2 - 4 * (r + 1) ** 2
    root = _sqrt_or_fail(disc, "discriminant")
    _sqrt_or_fail(square_condition_42(r), "2(1 - r)")
    return sorted({(-(2 - 6 * r) + sg * root) / (2 * (r + 1)) for sg in (1, -1)})


def t_param_42(z, A1, B1, Delta1) -> tuple[Fraction, Fraction]:
    """Point (t, w) on w^2 = 4(t-1)^2 A1^2 + 16 t Delta1 from a parameter z."""
    z, A1, B1, Delta1 = rat(z), rat(A1), rat(B1), rat(Delta1)
    if z == 0 or A1 == 0:
        raise ConditionFails("z and A1 must be nonzero")
    t0 = (z + 4 * B1) * (z - Delta1) / (A1 * A1 * z)
    w = 2 * (z * z + 4 * B1 * Delta1) / (A1 * z)
    return t0, w


def selfpair_42(E1: BForm, d1, z) -> GlueTriple:
    """E1 = E2, d1 = d2 and a (4,2) third curve with d3 = (t-1)^2; T is a square."""
    t0, _ = t_param_42(z, E1.A, E1.B, E1.delta)
    E3 = instantiate("bform", "4x2", t0).curve
    return GlueTriple(E1, E1, E3, d1, d1, Surd((t0 - 1) ** 2))


def selfpair_condition(A, d) -> Fraction:
    """T up to squares for E1 = E2 = E3 and d1 = d2 = d3 = d."""
    return -(2 * rat(A) + rat(d))


def s_from_24a(A1, B1, Delta1, signs=(1, 1)) -> Fraction:
    """s = (+-A1 +- 2 sqrt B1) / sqrt Delta1."""
    b1 = _sqrt_or_fail(B1, "B1")
    r = _sqrt_or_fail(Delta1, "Delta1")
    return (signs[0] * rat(A1) + 2 * signs[1] * b1) / r
