"""Point counts over F_{p^k} and Jacobian orders from the zeta function.

Supported models: elliptic curves (B-form or long Weierstrass), y^2 = h(x),
plane quartics in X^2, Y^2, Z^2, and the genus-3 double cover of a conic
W^2 Z^2 = a X^4 + b Y^4 + c Z^4, d X^2 + e Y^2 + f Z^2 = 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import Poly, is_square, poly_disc, rat, rat_str
from .elliptic import BForm, LongWeierstrass, complete_square, quadratic_twist
from .ffield import GF, is_prime, reduce_rational

ENUMERATION_BUDGET = 10**6


class BadReduction(ArithmeticError):
    """The model does not have good reduction at the requested prime."""


# ---------------------------------------------------------------------------
# models


@dataclass(frozen=True)
class HyperellipticCurve:
    """y^2 = h(x) with h squarefree over Q."""

    h: Poly

    @property
    def genus(self) -> int:
        return (self.h.deg - 1) // 2

    def to_json(self):
        return {"model": "hyperelliptic", "coeffs": self.h.to_json()}


@dataclass(frozen=True)
class QuarticCurve:
    """a X^4 + b Y^4 + c Z^4 + d X^2 Y^2 + e X^2 Z^2 + f Y^2 Z^2 = 0."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction
    T: Fraction | None = None

    genus = 3

    @property
    def coeffs(self):
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def nonsingularity_quantities(self) -> dict:
        a, b, c, d, e, f = self.coeffs
        return {
            "a": a,
            "b": b,
            "c": c,
            "d^2-4ab": d * d - 4 * a * b,
            "e^2-4ac": e * e - 4 * a * c,
            "f^2-4bc": f * f - 4 * b * c,
            "af^2+be^2+cd^2-4abc-def": a * f * f + b * e * e + c * d * d - 4 * a * b * c - d * e * f,
        }

    def is_nonsingular(self) -> bool:
        return all(v != 0 for v in self.nonsingularity_quantities().values())

    def __call__(self, X, Y, Z):
        a, b, c, d, e, f = self.coeffs
        X2, Y2, Z2 = X * X, Y * Y, Z * Z
        return a * X2 * X2 + b * Y2 * Y2 + c * Z2 * Z2 + d * X2 * Y2 + e * X2 * Z2 + f * Y2 * Z2

    def to_json(self):
        out = {"model": "quartic", "coeffs": [rat_str(x) for x in self.coeffs]}
        if self.T is not None:
            out["T"] = rat_str(self.T)
        return out


@dataclass(frozen=True)
class HyperComposite:
    """W^2 Z^2 = a X^4 + b Y^4 + c Z^4 on the conic d X^2 + e Y^2 + f Z^2 = 0."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction

    genus = 3

    @property
    def coeffs(self):
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def to_json(self):
        return {"model": "hypercomposite", "coeffs": [rat_str(x) for x in self.coeffs]}


def model_from_json(d: dict):
    kind = d["model"]
    cs = [rat(c) for c in d["coeffs"]]
    if kind == "hyperelliptic":
        return HyperellipticCurve(Poly(cs))
    if kind == "quartic":
        return QuarticCurve(*cs, T=rat(d["T"]) if "T" in d else None)
    if kind == "hypercomposite":
        return HyperComposite(*cs)
    if kind == "bform":
        return BForm(*cs)
    if kind == "long":
        return LongWeierstrass(*cs)
    raise ValueError(f"unknown model {kind!r}")


def genus_of(model) -> int:
    if isinstance(model, (BForm, LongWeierstrass)):
        return 1
    return model.genus


# ---------------------------------------------------------------------------
# reduction mod p


def _pval(x: Fraction, p: int) -> int:
    if x == 0:
        return 10**9
    v = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def _weighted_shift(coeffs, weights, p: int) -> int:
    """Smallest e >= 0 with v_p(c_i) + e * w_i >= 0 for all i."""
    e = 0
    for c, w in zip(coeffs, weights):
        v = _pval(c, p)
        if v < 0:
            if w <= 0:
                raise BadReduction(f"coefficient {c} has {p} in its denominator")
            e = max(e, -(v // w))
    return e


def _red(x, p):
    return reduce_rational(x, p)


def _cubic_mod_p(f: Poly, p: int) -> list[int]:
    """Monic cubic y^2 = f(x), rescaled at p to integral form, reduced mod p."""
    c0, c1, c2 = f[0], f[1], f[2]
    e = _weighted_shift([c0, c1, c2], [6, 4, 2], p)
    m = Fraction(p) ** e
    g = [c0 * m**6, c1 * m**4, c2 * m**2, Fraction(1)]
    return [_red(x, p) for x in g]


def _disc_mod_p(coeffs: list[int], p: int) -> int:
    F = GF(p)
    P = Poly([F(c) for c in coeffs], F)
    return poly_disc(P).c[0] if P.deg > 0 else 0


def _check_p(p: int):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        raise ValueError("p = 2 is not supported")


def reduce_model(model, p: int):
    """(kind, data) over F_p for the counting routines, or BadReduction."""
    _check_p(p)
    if isinstance(model, (BForm, LongWeierstrass)):
        f = complete_square(model)
        g = _cubic_mod_p(f, p)
        if _disc_mod_p(g, p) == 0:
            raise BadReduction(f"disc(E) = 0 mod {p}")
        return "y2", (g, 3)
    if isinstance(model, HyperellipticCurve):
        h = model.h
        e = _weighted_shift(h.c, [2] * len(h.c), p)
        m = Fraction(p) ** (2 * e)
        g = [_red(c * m, p) for c in h.c]
        formal = h.deg + (h.deg % 2)
        # one root may move to infinity; a second one there is a singularity
        while g and g[-1] == 0:
            g.pop()
        if len(g) - 1 < formal - 1:
            raise BadReduction(f"h drops to degree {len(g) - 1} mod {p}")
        if _disc_mod_p(g, p) == 0:
            raise BadReduction(f"disc(h) = 0 mod {p}")
        return "y2", (g, formal)
    if isinstance(model, QuarticCurve):
        e = _weighted_shift(model.coeffs, [1] * 6, p)
        m = Fraction(p) ** e
        cs = [c * m for c in model.coeffs]
        red = QuarticCurve(*[Fraction(_red(c, p)) for c in cs])
        for name, v in red.nonsingularity_quantities().items():
            if v % p == 0:
                raise BadReduction(f"{name} = 0 mod {p}")
        return "quartic", [_red(c, p) for c in cs]
    if isinstance(model, HyperComposite):
        G = composite_octic_mod_p(model, p)
        return "y2", (G, 8)
    raise TypeError(f"cannot count points on {type(model).__name__}")


def composite_octic_mod_p(model: HyperComposite, p: int) -> list[int]:
    """Binary octic G over F_p (t^0..t^8) with the composite birational to v^2 = G."""
    a, b, c, d, e, f = model.coeffs
    ea = _weighted_shift([a, b, c], [2, 2, 2], p)
    ed = _weighted_shift([d, e, f], [1, 1, 1], p)
    ma, md = Fraction(p) ** (2 * ea), Fraction(p) ** ed
    A = [_red(x * ma, p) for x in (a, b, c)]
    D = [_red(x * md, p) for x in (d, e, f)]
    if any(x == 0 for x in D):
        raise BadReduction(f"conic coefficient = 0 mod {p}")
    if any(x == 0 for x in A):
        raise BadReduction(f"quartic coefficient = 0 mod {p}")
    F = GF(p)
    P0 = _conic_point(D, p)
    i = next(j for j in range(3) if P0[j])
    others = [j for j in range(3) if j != i]
    t = Poly([F(0), F(1)], F)
    one = Poly([F(1)], F)
    Dv = [Poly([], F)] * 3
    Dv[others[0]] = t
    Dv[others[1]] = one
    Q = sum((D[j] * Dv[j] * Dv[j] for j in range(3)), Poly([], F))
    Bl = sum((D[j] * P0[j] * Dv[j] for j in range(3)), Poly([], F))
    coords = [Q * P0[j] - Bl * Dv[j] * 2 for j in range(3)]
    G = sum((A[j] * coords[j] ** 4 for j in range(3)), Poly([], F))
    cs = [G[k].c[0] for k in range(9)]
    if cs[8] == 0 and cs[7] == 0:
        raise BadReduction(f"branch octic drops below degree 7 mod {p}")
    Gu = Poly([F(x) for x in cs], F)
    if poly_disc(Gu) == 0:
        raise BadReduction(f"branch octic is not squarefree mod {p}")
    return cs


def _conic_point(D, p):
    d, e, f = D
    for x in range(p):
        for y in range(p):
            if (d * x * x + e * y * y + f) % p == 0:
                return (x, y, 1)
    for x in range(p):
        if (d * x * x + e) % p == 0:
            return (x, 1, 0)
    return (1, 0, 0) if d % p == 0 else None


# ---------------------------------------------------------------------------
# counting


def _count_y2(F: GF, coeffs: list[int], formal_deg: int) -> int:
    """#{(x, y)} on y^2 = G(x) over F plus the points above infinity."""
    xs = F.all_elements()
    vals = F.veval([F(c) for c in coeffs], xs)
    affine = F.q + int(F.vchi(vals).sum())
    lc = coeffs[formal_deg] if formal_deg < len(coeffs) else 0
    if formal_deg % 2:
        inf = 1
    else:
        inf = 1 + F(lc).chi()
    return affine + inf


def _count_quartic(F: GF, cs: list[int]) -> int:
    """Projective points on a X^4 + b Y^4 + c Z^4 + d X^2Y^2 + e X^2Z^2 + f Y^2Z^2."""
    a, b, c, d, e, f = (F(x) for x in cs)
    xs = F.all_elements()
    n = F.q
    x2 = F.vmul(xs, xs)
    beta = F.vadd(F.vmul(F.vconst(d, n), x2), F.vconst(f, n))
    gamma = F.vadd(F.vadd(F.vmul(F.vconst(a, n), F.vmul(x2, x2)), F.vmul(F.vconst(e, n), x2)),
                   F.vconst(c, n))
    total = _count_biquadratic(F, b, beta, gamma).sum()
    # Z = 0, X = 1:  b y^4 + d y^2 + a
    total += _count_biquadratic(F, b, F.vconst(d, 1), F.vconst(a, 1)).sum()
    return int(total)


def _count_biquadratic(F: GF, alpha, beta, gamma) -> np.ndarray:
    """For each row, #{y : alpha y^4 + beta y^2 + gamma = 0} with alpha != 0."""
    n = beta.shape[0]
    al = F.vconst(alpha, n)
    disc = F.vsub(F.vmul(beta, beta), F.vmul(F.vconst(4, n), F.vmul(al, gamma)))
    chi_d = F.vchi(disc)
    inv2a = F.vconst(1 / (2 * alpha), n)
    table = F.sqrt_table()
    root_code = table[F.codes(disc)]
    root_code = np.where(root_code < 0, 0, root_code)
    all_el = F.all_elements()
    r = all_el[root_code]
    neg_b = F.vsub(np.zeros_like(beta), beta)
    u_plus = F.vmul(F.vadd(neg_b, r), inv2a)
    u_minus = F.vmul(F.vsub(neg_b, r), inv2a)
    c_plus = 1 + F.vchi(u_plus)
    c_minus = 1 + F.vchi(u_minus)
    return np.where(chi_d < 0, 0, np.where(chi_d == 0, c_plus, c_plus + c_minus))


def count_curve(model, p: int, k: int = 1) -> int:
    """Number of F_{p^k}-points on the smooth model of a curve with good reduction."""
    kind, data = reduce_model(model, p)
    if p**k > ENUMERATION_BUDGET:
        raise ValueError(f"field of size {p}^{k} exceeds the enumeration budget")
    F = GF(p, k)
    if kind == "y2":
        coeffs, deg = data
        return _count_y2(F, coeffs, deg)
    return _count_quartic(F, data)


def count_brute(model, p: int, k: int = 1) -> int:
    """Slow reference count by direct enumeration (small fields only)."""
    kind, data = reduce_model(model, p)
    F = GF(p, k)
    els = list(F.elements())
    if kind == "quartic":
        a, b, c, d, e, f = (F(x) for x in data)

        def form(X, Y, Z):
            X2, Y2, Z2 = X * X, Y * Y, Z * Z
            return a * X2 * X2 + b * Y2 * Y2 + c * Z2 * Z2 + d * X2 * Y2 + e * X2 * Z2 + f * Y2 * Z2

        pts = [(x, y, F.one) for x in els for y in els]
        pts += [(F.one, y, F.zero) for y in els] + [(F.zero, F.one, F.zero)]
        return sum(1 for P in pts if not form(*P))
    coeffs, deg = data
    G = Poly([F(c) for c in coeffs], F)
    squares = {}
    for y in els:
        squares[y * y] = squares.get(y * y, 0) + 1
    affine = sum(squares.get(G(x), 0) for x in els)
    lc = F(coeffs[deg]) if deg < len(coeffs) else F.zero
    inf = 1 if deg % 2 else 1 + lc.chi()
    return affine + inf


# ---------------------------------------------------------------------------
# Jacobian orders


def weil_bounds(q: int, g: int) -> tuple[int, int, int]:
    """(a, b) with (sqrt q +- 1)^(2g) = a +- b sqrt q; also returns q."""
    a = b = 0
    n = 2 * g
    for j in range(n + 1):
        cnt = math.comb(n, j)
        if j % 2 == 0:
            a += cnt * q ** (j // 2)
        else:
            b += cnt * q ** (j // 2)
    return a, b, q


def in_weil_interval(m: int, q: int, g: int) -> bool:
    a, b, q = weil_bounds(q, g)
    hi = m - a <= 0 or (m - a) ** 2 <= b * b * q
    lo = a - m <= 0 or (a - m) ** 2 <= b * b * q
    return hi and lo


def weil_interval_float(q: int, g: int) -> tuple[float, float]:
    r = math.sqrt(q)
    return (r - 1) ** (2 * g), (r + 1) ** (2 * g)


@dataclass
class ZetaCertificate:
    genus: int
    p: int
    counts: list
    jacobian_order: int
    in_weil_interval: bool

    def to_json(self):
        return {
            "genus": self.genus,
            "p": self.p,
            "counts": list(self.counts),
            "jacobianOrder": self.jacobian_order,
        }


def jacobian_order_from_counts(counts, p: int, g: int) -> int:
    s = [p**j + 1 - counts[j - 1] for j in range(1, g + 1)]
    if g == 1:
        return counts[0]
    if g == 2:
        s1, s2 = s
        e1 = s1
        e2 = Fraction(s1 * s1 - s2, 2)
        val = 1 - e1 + e2 - p * e1 + p * p
    elif g == 3:
        s1, s2, s3 = s
        e1 = s1
        e2 = Fraction(s1 * s1 - s2, 2)
        e3 = Fraction(s1**3 - 3 * s1 * s2 + 2 * s3, 6)
        val = 1 - e1 + e2 - e3 + p * e2 - p * p * e1 + p**3
    else:
        raise ValueError("genus must be 1, 2 or 3")
    if Fraction(val).denominator != 1:
        raise ArithmeticError("point counts are inconsistent with a zeta function")
    return int(val)


def jacobian_order(model_or_counts, p: int, g: int | None = None) -> ZetaCertificate:
    """#J(F_p) from N_1..N_g; accepts a model (counted here) or a list of counts."""
    if isinstance(model_or_counts, (list, tuple)):
        counts = list(model_or_counts)
        if g is None:
            g = len(counts)
    else:
        g = genus_of(model_or_counts) if g is None else g
        counts = [count_curve(model_or_counts, p, k) for k in range(1, g + 1)]
    if len(counts) < g:
        raise ValueError(f"need {g} point counts, got {len(counts)}")
    order = jacobian_order_from_counts(counts, p, g)
    ok = in_weil_interval(order, p, g)
    if not ok:
        raise ArithmeticError(f"#J = {order} lies outside the Weil interval for p = {p}")
    return ZetaCertificate(g, p, counts[:g], order, ok)


# ---------------------------------------------------------------------------
# product checks and torsion


def _twist_if_needed(E, T, p):
    if T is None:
        return E
    if reduce_rational(T, p) == 0:
        raise BadReduction(f"T = 0 mod {p}")
    if GF(p)(rat(T)).chi() == 1:
        return E
    return quadratic_twist(E, T)


@dataclass
class ProductCheck:
    p: int
    jacobian_order: int
    factor_counts: list
    twisted: bool

    @property
    def product(self) -> int:
        return math.prod(self.factor_counts)

    @property
    def ok(self) -> bool:
        return self.jacobian_order == self.product

    def to_json(self):
        return {
            "p": self.p,
            "jacobianOrder": self.jacobian_order,
            "factorCounts": self.factor_counts,
            "twisted": self.twisted,
            "pass": self.ok,
        }


def product_check(C, Es, p: int, twist=None) -> ProductCheck:
    """Compare #J_C(F_p) with the product of #E_i(F_p).

    With ``twist`` = T, each E_i is replaced by its quadratic twist by T when T
    is not a square mod p.
    """
    cert = jacobian_order(C, p)
    twisted = twist is not None and GF(p)(rat(twist)).chi() == -1
    counts = [count_curve(_twist_if_needed(E, twist, p), p) for E in Es]
    return ProductCheck(p, cert.jacobian_order, counts, twisted)


def good_primes(models, count: int, start: int = 3, limit: int = 400, twist=None) -> list[int]:
    """The first primes p >= start at which every model reduces well."""
    out = []
    p = start
    while len(out) < count and p <= limit:
        if is_prime(p) and p > 2:
            try:
                for m in models:
                    reduce_model(m, p)
                if twist is not None and reduce_rational(twist, p) == 0:
                    raise BadReduction("T = 0")
                out.append(p)
            except (BadReduction, ZeroDivisionError):
                pass
        p += 1
    return out


@dataclass
class TorsionCheck:
    N: int
    p: int
    jacobian_order: int
    divisible: bool
    unique_multiple: bool

    def to_json(self):
        return {
            "N": self.N,
            "p": self.p,
            "jacobianOrder": self.jacobian_order,
            "divisible": self.divisible,
            "uniqueMultiple": self.unique_multiple,
        }


def multiples_in_weil_interval(N: int, q: int, g: int) -> list[int]:
    lo, hi = weil_interval_float(q, g)
    kmin = max(1, int(lo // N) - 1)
    kmax = int(hi // N) + 2
    return [k * N for k in range(kmin, kmax + 1) if in_weil_interval(k * N, q, g)]


def torsion_divisibility(C, N: int, primes) -> list[TorsionCheck]:
    out = []
    g = genus_of(C)
    for p in primes:
        cert = jacobian_order(C, p, g)
        mults = multiples_in_weil_interval(N, p, g)
        out.append(
            TorsionCheck(N, p, cert.jacobian_order, cert.jacobian_order % N == 0, len(mults) == 1)
        )
    return out


def is_square_mod(T, p: int) -> bool:
    return GF(p)(rat(T)).chi() == 1


def rational_is_square(T) -> bool:
    return is_square(T)
