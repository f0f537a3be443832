"""Genus-2 curves whose Jacobian is (2,2)-isogenous to a product E x F of
elliptic curves, built from a matching of their 2-torsion.

Both curves are given as monic cubics (y^2 = f(x), y^2 = g(x)).  Symmetric
expressions in the roots are computed in the splitting algebra of f, where
the roots of g are images of the roots of f under the matching polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    Matching,
    Poly,
    SAElem,
    SplitAlgebra,
    _apply,
    is_square,
    match_roots,
    poly_disc,
    rational_roots,
)
from .elliptic import BForm, LongWeierstrass, complete_square
from .ffcount import HyperellipticCurve


class IsomorphismMatching(ValueError):
    """The matching is induced by an isomorphism, so the glued curve degenerates."""


@dataclass
class GlueResult:
    f: Poly
    g: Poly
    matching: Matching
    h: Poly
    A: Fraction
    B: Fraction
    a1: object
    a2: object
    b1: object
    b2: object
    fbar: Poly
    gbar: Poly
    t1: Fraction
    t2: Fraction
    s1: Fraction
    s2: Fraction
    method: str = "algebra"

    @property
    def curve(self) -> HyperellipticCurve:
        return HyperellipticCurve(self.h)

    def to_json(self):
        return {
            "h": self.h.to_json(),
            "A": str(self.A),
            "B": str(self.B),
            "t1": str(self.t1),
            "t2": str(self.t2),
            "s1": str(self.s1),
            "s2": str(self.s2),
            "fbar": self.fbar.to_json(),
            "gbar": self.gbar.to_json(),
            "matching": self.matching.describe(),
            "method": self.method,
        }


def as_cubic(E) -> Poly:
    if isinstance(E, Poly):
        if E.deg != 3:
            raise ValueError("expected a cubic")
        return E.monic()
    if isinstance(E, (BForm, LongWeierstrass)):
        return complete_square(E)
    raise TypeError(f"cannot read a cubic from {E!r}")


def _is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, SAElem) else x == 0


def _rational(x, name) -> Fraction:
    if isinstance(x, SAElem):
        if not x.is_rational():
            raise ArithmeticError(f"{name} is not rational; the matching is not Galois compatible")
        return x.rational()
    return Fraction(x)


def _core(alpha, beta, Df, Dg):
    """Quantities of the gluing construction from ordered roots."""
    a1_, a2_, a3_ = alpha
    b1_, b2_, b3_ = beta
    a1 = (
        (a3_ - a2_) ** 2 / (b3_ - b2_)
        + (a2_ - a1_) ** 2 / (b2_ - b1_)
        + (a1_ - a3_) ** 2 / (b1_ - b3_)
    )
    b1 = (
        (b3_ - b2_) ** 2 / (a3_ - a2_)
        + (b2_ - b1_) ** 2 / (a2_ - a1_)
        + (b1_ - b3_) ** 2 / (a1_ - a3_)
    )
    a2 = a1_ * (b3_ - b2_) + a2_ * (b1_ - b3_) + a3_ * (b2_ - b1_)
    b2 = b1_ * (a3_ - a2_) + b2_ * (a1_ - a3_) + b3_ * (a2_ - a1_)
    for name, val in (("a1", a1), ("a2", a2), ("b1", b1), ("b2", b2)):
        if _is_zero(val):
            raise IsomorphismMatching(
                f"{name} = 0: the matching comes from an isomorphism of curves"
            )
    A = _rational(Dg * a1 / a2, "A")
    B = _rational(Df * b1 / b2, "B")
    # the three quadratic factors c2 x^2 + c0
    facs = []
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        c2 = A * (alpha[j] - alpha[i]) * (alpha[i] - alpha[k])
        c0 = B * (beta[j] - beta[i]) * (beta[i] - beta[k])
        facs.append((c2, c0))

    def expand(pairs):
        # product of (p x + q) for (p, q) in pairs, coefficients low first
        out = [1]
        for p_, q_ in pairs:
            new = [0] * (len(out) + 1)
            for n, c in enumerate(out):
                new[n] = new[n] + c * q_
                new[n + 1] = new[n + 1] + c * p_
            out = new
        return [_rational(-c, "coefficient") for c in out]

    gbar = Poly(expand(facs))
    fbar = Poly(expand([(c0, c2) for c2, c0 in facs]))
    h = Poly([gbar[n // 2] if n % 2 == 0 else 0 for n in range(7)])
    t1 = -(A / B) * _rational(b2 / b1, "b2/b1")
    t2 = _rational(
        (
            b1_ * (b3_ - b2_) ** 2 / (a3_ - a2_)
            + b2_ * (b1_ - b3_) ** 2 / (a1_ - a3_)
            + b3_ * (b2_ - b1_) ** 2 / (a2_ - a1_)
        )
        / b1,
        "t2",
    )
    s1 = -(B / A) * _rational(a2 / a1, "a2/a1")
    s2 = _rational(
        (
            a1_ * (a3_ - a2_) ** 2 / (b3_ - b2_)
            + a2_ * (a1_ - a3_) ** 2 / (b1_ - b3_)
            + a3_ * (a2_ - a1_) ** 2 / (b2_ - b1_)
        )
        / a1,
        "s2",
    )
    return dict(A=A, B=B, a1=a1, a2=a2, b1=b1, b2=b2, gbar=gbar, fbar=fbar, h=h,
                t1=t1, t2=t2, s1=s1, s2=s2)


def glue(E, F, matching: Matching | None = None, method: str = "auto") -> GlueResult:
    """Glue y^2 = f and y^2 = g along a 2-torsion matching.

    ``method`` is "algebra", "split" (rational roots, split matchings only)
    or "auto" (split fast path when possible).
    """
    f, g = as_cubic(E), as_cubic(F)
    if matching is None:
        ms = match_roots(f, g)
        if not ms:
            raise ValueError("no matching between the 2-torsion of the two curves")
        matching = ms[0]
    if matching.f != f or matching.g != g:
        raise ValueError("matching was built for different cubics")
    if not matching.verify():
        raise ValueError("matching polynomial does not send roots of f to roots of g")
    Df, Dg = poly_disc(f), poly_disc(g)
    if method == "auto":
        method = "split" if matching.kind == "split" else "algebra"
    if method == "split":
        if matching.kind != "split":
            raise ValueError("the split fast path needs a split matching")
        alpha = [Fraction(a) for a in matching.roots_f]
        beta = [matching.roots_g[j] for j in matching.perm]
    else:
        alg = SplitAlgebra(f)
        alpha = list(alg.roots())
        beta = [_apply(matching.match_poly, a) for a in alpha]
    q = _core(alpha, beta, Df, Dg)
    return GlueResult(f, g, matching, method=method, **q)


def cover_identities(r: GlueResult) -> dict:
    """The three polynomial identities behind the covering maps."""
    Df, Dg = poly_disc(r.f), poly_disc(r.g)
    lhs_g = r.g.compose(Poly([r.t2, r.t1]))
    rhs_g = r.gbar.scale((Df / r.B**3) ** 2)
    lhs_f = r.f.compose(Poly([r.s2, r.s1]))
    rhs_f = r.fbar.scale((Dg / r.A**3) ** 2)
    x2 = Poly([0, 0, 1])
    return {
        "g(t1 u + t2) = (Df/B^3)^2 gbar(u)": lhs_g == rhs_g,
        "f(s1 u + s2) = (Dg/A^3)^2 fbar(u)": lhs_f == rhs_f,
        "h(x) = gbar(x^2)": r.h == r.gbar.compose(x2),
    }


def is_identity_matching(m: Matching) -> bool:
    return m.f == m.g and m.match_poly == Poly([0, 1])


def self_glue_rotation(E, index: int = 0) -> GlueResult:
    """Glue a curve to itself along a non-identity Galois-stable matching.

    Irreducible 2-division cubics need a square discriminant (a rotation of
    the roots); a semisplit cubic uses the swap of its two conjugate roots.
    """
    f = as_cubic(E)
    roots = rational_roots(f)
    if len(roots) == 3:
        raise ValueError("wrong pattern: the 2-torsion is split, use glue with an explicit matching")
    if not roots and not is_square(poly_disc(f)):
        raise ValueError("rotation not Galois-equivariant: the discriminant is not a square")
    ms = [m for m in match_roots(f, f) if not is_identity_matching(m)]
    if not ms:
        raise ValueError("no non-identity matching")
    return glue(f, f, ms[index % len(ms)])


def reversed_sextic(h: Poly) -> Poly:
    """x^6 h(1/x)."""
    c = list(h.c) + [Fraction(0)] * (7 - len(h.c))
    return Poly(c[::-1])


def glue_both_orientations(E, F, matching: Matching) -> dict:
    """Glue (E, F, psi) and (F, E, psi^-1) and compare the sextics."""
    r1 = glue(E, F, matching)
    r2 = glue(F, E, matching.inverse())
    same = r1.h == r2.h
    ratio = None
    rev = reversed_sextic(r2.h)
    if rev.deg == r1.h.deg and r1.h.lc:
        lam = rev.lc / r1.h.lc
        if rev == r1.h.scale(lam):
            ratio = lam
    return {"forward": r1, "backward": r2, "identical": same, "reversed_ratio": ratio}
