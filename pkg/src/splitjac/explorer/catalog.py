"""Named example constructions and the facts each one must reproduce.

Every example is a recipe: it builds its curves with the library, records
the construction (models, parameters, counts) and checks a list of facts.
Facts are tagged "published" (a value stated for the construction),
"derived" (found by an independent computation here) or "direct" (true
by construction).  Anchors are short mathematical landmarks.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Callable

from ..algebra import Poly, is_square, match_roots, poly_disc, rat_str, rational_sqrt, squarefree_part
from ..elliptic import BForm, LongWeierstrass, order_certificate, two_torsion
from ..families import delta_poly, get_family, instantiate
from ..ffcount import (
    HyperellipticCurve,
    QuarticCurve,
    count_curve,
    good_primes,
    jacobian_order,
    multiples_in_weil_interval,
    product_check,
    rational_is_square,
)
from ..glue2 import as_cubic, cover_identities, glue, self_glue_rotation
from ..glue3 import (
    GlueTriple,
    Surd,
    composite_relations,
    d_from_point,
    d_from_sign,
    glue_hyper,
    glue_quartic,
    projective_equal,
    solve_22,
    twisting_factor,
)
from ..torsionlab import halving_condition, perm_from_matching
from .search import (
    SearchQuery,
    delta_class_search,
    parabola_third_point,
    rationals_by_height,
    search,
    square_values,
)

PUBLISHED, DERIVED, DIRECT = "published", "derived", "direct"


@dataclass
class Fact:
    description: str
    anchor: str
    tag: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self):
        out = {"description": self.description, "anchor": self.anchor, "tag": self.tag,
               "pass": bool(self.passed)}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    example: str
    facts: list = field(default_factory=list)
    record: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return bool(self.facts) and all(f.passed for f in self.facts)

    @property
    def failures(self) -> list:
        return [f for f in self.facts if not f.passed]

    def add(self, description, anchor, tag, passed, **detail):
        self.facts.append(Fact(description, anchor, tag, bool(passed), _jsonable(detail)))
        return bool(passed)

    def to_json(self):
        return {"example": self.example, "facts": [f.to_json() for f in self.facts],
                "record": _jsonable(self.record), "pass": self.ok}


def _jsonable(x):
    if isinstance(x, Q):
        return rat_str(x)
    if isinstance(x, Surd):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return x


@dataclass
class NamedExample:
    id: str
    summary: str
    recipe: Callable[["Report", int], None]


def _E(label, t):
    return instantiate("kubert", label, t)


def _F(label, t):
    return instantiate("bform", label, t)


# ---------------------------------------------------------------------------
# shared fact groups


def _torsion_facts(rep: Report, C, N: int, primes, anchor: str, tag=PUBLISHED):
    orders = {}
    for p in primes:
        J = jacobian_order(C, p).jacobian_order
        orders[p] = J
        rep.add(f"{N} divides #J(F_{p})", anchor, tag, J % N == 0, p=p, jacobianOrder=J)
    rep.record.setdefault("jacobianOrders", {}).update(orders)
    rep.record["N"] = N
    return orders


def _product_facts(rep: Report, C, Es, primes, anchor: str, twist=None):
    checks = []
    for p in primes:
        pc = product_check(C, Es, p, twist=twist)
        checks.append(pc.to_json())
        what = "#J(F_p) = prod of #E_i(F_p)" + (" (twisted by T where needed)" if twist is not None else "")
        rep.add(f"{what} at p = {p}", anchor, DERIVED, pc.ok, jacobianOrder=pc.jacobian_order,
                factorCounts=pc.factor_counts)
    rep.record.setdefault("productChecks", []).extend(checks)


def _glue2_block(rep: Report, E, F, matching, N: int | None, nprimes: int, anchor: str):
    r = glue(E, F, matching)
    ids = cover_identities(r)
    rep.add("quotient-cover identities hold", "g(t1 u + t2), f(s1 u + s2), h(x) = gbar(x^2)",
            DIRECT, all(ids.values()))
    C = r.curve
    primes = good_primes([C, E, F], nprimes)
    rep.record.update({"E": E.to_json(), "F": F.to_json(), "glue": r.to_json(), "primes": primes})
    _product_facts(rep, C, [E, F], primes, anchor)
    if N:
        _torsion_facts(rep, C, N, primes, anchor)
    return r, C, primes


def _glue3_block(rep: Report, tr: GlueTriple, N: int, nprimes: int, anchor: str):
    T = twisting_factor(tr)
    rep.record["triple"] = tr.to_json()
    rep.record["T"] = T
    if T == 0:
        C = glue_hyper(tr)
        rel = composite_relations(tr, C)
        rep.add("T = 0 composite satisfies its invariant relations", "W^2 Z^2 = aX^4 + bY^4 + cZ^4",
                DIRECT, all(rel.values()), relations=rel)
        twist = None
    else:
        QG = glue_quartic(tr)
        C = QG.curve
        rep.add("plane quartic is nonsingular", "a, b, c, d^2-4ab, ... nonzero", DIRECT,
                C.is_nonsingular())
        twist = None if rational_is_square(T) else T
    rep.record["model"] = C.to_json()
    primes = good_primes([C, *tr.curves], nprimes, twist=twist)
    rep.record["primes"] = primes
    _product_facts(rep, C, list(tr.curves), primes, anchor, twist=twist)
    _torsion_facts(rep, C, N, primes, anchor)
    return C, T, primes


def _matching_for_perm(E, F, perm, xs_E, xs_F):
    for m in match_roots(as_cubic(E), as_cubic(F)):
        if m.kind == "split" and perm_from_matching(m, xs_E, xs_F) == tuple(perm):
            return m
    raise ValueError(f"no split matching with permutation {perm}")


def _two_torsion_point(E, x):
    return next(P for P in two_torsion(E).points if P[0] == x)


def _gain_block(rep, I1, I2, perm, i, j, N, nprimes, anchor):
    E, F = I1.curve, I2.curve
    xE, xF = I1.two_torsion_x, I2.two_torsion_x
    P, Qp = _two_torsion_point(E, xE[i]), _two_torsion_point(F, xF[j])
    rep.add(f"(T{i + 1}, T'{j + 1}) has a half rational on the glued surface",
            "iota(P) matches iota'(Q) under the permutation", DERIVED,
            halving_condition(E, F, perm, P, Qp, xE, xF), perm=list(perm))
    rep.add("the two curves are not isomorphic", "j(E) != j(F)", DIRECT, E.j != F.j)
    m = _matching_for_perm(E, F, perm, xE, xF)
    return _glue2_block(rep, E, F, m, N, nprimes, anchor)


# ---------------------------------------------------------------------------
# recipes


def _x0_22(rep: Report, nprimes: int):
    h = Poly([242, 0, 26, 0, -10, 0, -2])
    X = Poly([0, 1])
    lhs = Poly([])
    for k, c in enumerate(h.c):
        lhs = lhs + (Poly([-4, 1]) ** k * X ** (6 - k)).scale(c)
    lhs = lhs.scale(Q(1, 256))
    rhs = Poly([8, -4, 2, 1]) * Poly([-4, 4, -2, 1])
    rep.record.update({"h": h.to_json(), "transformed": lhs.to_json(), "target": rhs.to_json()})
    rep.add("(x, y) = (1 - 4/X, 16Y/X^3) turns y^2 = -2x^6-10x^4+26x^2+242 into "
            "Y^2 = (X^3+2X^2-4X+8)(X^3-2X^2+4X-4)", "(x,y) = (1-4/X, 16Y/X^3)", PUBLISHED, lhs == rhs)
    C1, C2 = HyperellipticCurve(h), HyperellipticCurve(rhs)
    primes = good_primes([C1, C2], nprimes)
    same = all(jacobian_order(C1, p).jacobian_order == jacobian_order(C2, p).jacobian_order
               for p in primes)
    rep.add("both models have equal #J(F_p) at good primes", "isomorphic models", DERIVED, same,
            primes=primes)


def _torsion63(rep: Report, nprimes: int):
    t, u = Q(-16, 3), Q(4)
    rep.add("(t, u) = (-16/3, 4) found by the height-20 class search", "Delta_7(t) = Delta_9(u) mod squares",
            PUBLISHED, any(s.t == t and s.u == u for s in delta_class_search(7, 9, 20)))
    cls = squarefree_part(delta_poly("7")(t)), squarefree_part(delta_poly("9")(u))
    rep.add("both discriminant classes are -741", "cubic field of discriminant -2964", PUBLISHED,
            cls[0].key == cls[1].key == (-1, 741) and -2964 % 741 == 0 and is_square(Q(-2964, -741)))
    E, F = _E("7", t).curve, _E("9", u).curve
    ms = match_roots(as_cubic(E), as_cubic(F))
    rep.add("the 2-division fields are isomorphic", "irreducible cubic matching", DERIVED, len(ms) >= 1)
    _, C, primes = _glue2_block(rep, E, F, ms[0], 63, nprimes, "63 | #J")
    D = HyperellipticCurve(Poly([-146398496, 0, 79136353, 0, -197570, 0, 897]))
    J5 = jacobian_order(D, 5)
    rep.add("#J(F_5) = 63 for y^2 = 897x^6-197570x^4+79136353x^2-146398496", "#J(F_5) = 63",
            PUBLISHED, J5.jacobian_order == 63, counts=J5.counts)
    rep.add("63 is the only multiple of 63 in the Weil interval at q = 5", "(1 + sqrt 5)^4",
            PUBLISHED, multiples_in_weil_interval(63, 5, 2) == [63])
    cmp = good_primes([C, D], 5)
    rep.add("the displayed model matches the glued curve at 5 good primes", "point-count agreement",
            DERIVED, all(jacobian_order(C, p).jacobian_order == jacobian_order(D, p).jacobian_order
                         for p in cmp), primes=cmp)


def _torsion49(rep: Report, nprimes: int):
    t, u = Q(7), Q(-14, 13)
    rep.add("(t, u) = (7, -14/13) survives the same-curve exclusions", "u != t, 1/(1-t), (t-1)/t",
            PUBLISHED, any(s.t == t and s.u == u for s in delta_class_search(7, 7, 20)))
    E, F = _E("7", t).curve, _E("7", u).curve
    ms = match_roots(as_cubic(E), as_cubic(F))
    rep.add("the 2-division fields are isomorphic", "irreducible cubic matching", DERIVED, len(ms) >= 1)
    _, C, primes = _glue2_block(rep, E, F, ms[0], 49, nprimes, "49 | #J")
    D = HyperellipticCurve(Poly([869675859, 0, 3232987, 0, 3025, 0, 1]))
    rep.add("#J(F_5) = 49 for y^2 = x^6+3025x^4+3232987x^2+869675859", "#J(F_5) = 49", PUBLISHED,
            jacobian_order(D, 5).jacobian_order == 49)
    e5 = [count_curve(E, 5), count_curve(F, 5)]
    rep.add("both elliptic factors have 7 points over F_5, the only multiple of 7 allowed",
            "#E(F_5) = 7", PUBLISHED, e5 == [7, 7] and multiples_in_weil_interval(7, 5, 1) == [7],
            counts=e5)
    cmp = good_primes([C, D], 5)
    rep.add("the displayed model matches the glued curve at 5 good primes", "point-count agreement",
            DERIVED, all(jacobian_order(C, p).jacobian_order == jacobian_order(D, p).jacobian_order
                         for p in cmp), primes=cmp)


def _odd_pair(rep, labE, t, labF, u, N, disc_class, nprimes):
    E, F = _E(labE, t).curve, _E(labF, u).curve
    cE, cF = squarefree_part(poly_disc(as_cubic(E))), squarefree_part(poly_disc(as_cubic(F)))
    rep.add(f"discriminant classes agree ({disc_class})", "same quadratic resolvent", PUBLISHED,
            cE.key == cF.key and cE.sign * cE.squarefree == disc_class)
    ms = match_roots(as_cubic(E), as_cubic(F))
    rep.add("the cubic fields are isomorphic", "irreducible cubic matching", PUBLISHED, len(ms) >= 1)
    _glue2_block(rep, E, F, ms[0], N, nprimes, f"{N} | #J")


def _torsion35(rep: Report, nprimes: int):
    _odd_pair(rep, "7", Q(-1), "5", Q(1, 26), 35, -26, nprimes)
    rep.add("the cubic field discriminant -104 lies in the class -26", "discriminant -104", PUBLISHED,
            is_square(Q(-104, -26)))


def _torsion45(rep: Report, nprimes: int):
    _odd_pair(rep, "9", Q(-5), "5", Q(93, 10), 45, -930, nprimes)


def _torsion60(rep: Report, nprimes: int):
    t = Q(1, 3)
    key = squarefree_part(delta_poly("12")(t)).key
    fam = get_family("kubert", "10")
    E12 = _E("12", t).curve
    us = []
    for u in rationals_by_height(10):
        if fam.degenerate_factor(u) or not delta_poly("10")(u):
            continue
        if squarefree_part(delta_poly("10")(u)).key == key and _E("10", u).curve.j != E12.j:
            us.append(u)
    rep.record["searchHits"] = us
    rep.add("the t = 1/3 fibre has a non-isomorphic point of height <= 10",
            "(2t^2-2t+1)(6t^2-6t+1)y^2 = (2u-1)(4u^2-2u-1)", DERIVED, bool(us))
    u = us[0]
    rep.record["u"] = u
    F = _E("10", u).curve
    ms = match_roots(as_cubic(E12), as_cubic(F))
    _glue2_block(rep, E12, F, ms[0], 60, nprimes, "60 | #J")


def _quartic864(rep: Report, nprimes: int):
    s = Q(1, 5)
    octic = Poly([3, 0, 56, 0, 6, 0, 0, 0, -1])
    rep.add("(s, y) = (+-1/5, 1432/625) on y^2 = -s^8+6s^4+56s^2+3", "(s,y) = (1/5, 1432/625)",
            PUBLISHED, octic(s) == Q(1432, 625) ** 2 and octic(-s) == octic(s))
    t = (3 + s * s) / (1 - s * s)
    rep.add("t = (3+s^2)/(1-s^2) = 19/6", "t = 19/6", PUBLISHED, t == Q(19, 6))
    I = _F("2x6", t)
    E = I.curve
    xP = (t - 3) * (t + 1) ** 3
    rep.add("x(P) = (t-3)(t+1)^3 is a square", "x-coordinate of P square", PUBLISHED,
            E.cubic()(xP) == 0 and is_square(xP))
    d = 16 * t
    tr = GlueTriple(E, E, E, d, d, d)
    T = twisting_factor(tr)
    rep.add("twisting factor is a square", "w^2 = t^4-6t^2-4t-3", DERIVED, rational_is_square(T), T=T)
    QG = glue_quartic(tr)
    target = (15625, 15625, 15625, -96914, -96914, -96914)
    rep.add("glued quartic equals 15625(X^4+Y^4+Z^4)-96914(X^2Y^2+X^2Z^2+Y^2Z^2) projectively",
            "quartic gluing formulas", PUBLISHED, projective_equal(QG.curve.coeffs, target))
    C = QuarticCurve(*map(Q, target))
    counts = [count_curve(C, 7, k) for k in (1, 2, 3)]
    J = jacobian_order(counts, 7, 3).jacobian_order
    rep.record.update({"model": C.to_json(), "countsF7": counts, "E": E.to_json(),
                       "triple": tr.to_json(), "T": T})
    rep.add("#J(F_7) = 1728 from counts over F_7, F_49, F_343", "12^3 = 1728", PUBLISHED, J == 1728,
            counts=counts)
    e7 = count_curve(E, 7)
    rep.add("#E(F_7) = 12 and 12 is the only multiple of 12 in the Hasse interval", "#E(F_7) = 12",
            PUBLISHED, e7 == 12 and multiples_in_weil_interval(12, 7, 1) == [12])
    rep.add("864 divides #J(F_7)", "6 * 12 * 12 = 864", PUBLISHED, J % 864 == 0)
    primes = good_primes([C, E], nprimes)
    _product_facts(rep, C, [E, E, E], primes, "J isogenous to E^3")


def _conductor2940(rep: Report, nprimes: int):
    E1, E3 = BForm(Q(-11), Q(32)), BForm(Q(-31), Q(240))
    d1 = d_from_sign(E1, 1)
    d3 = d_from_point(E3, 15)
    tr = GlueTriple(E1, E1, E3, d1, d1, d3)
    T = twisting_factor(tr)
    rep.add("twisting factor T = 32^2", "T = 32^2", PUBLISHED, T == 1024, T=T)
    QG = glue_quartic(tr)
    rep.add("glued quartic equals 2X^4+2Y^4+15Z^4+3X^2Y^2-11X^2Z^2-11Y^2Z^2 projectively",
            "quartic gluing formulas", PUBLISHED, projective_equal(QG.curve.coeffs, (2, 2, 15, 3, -11, -11)))
    rep.record.update({"triple": tr.to_json(), "model": QG.to_json()})
    primes = good_primes([QG.curve, E1, E3], nprimes)
    _product_facts(rep, QG.curve, [E1, E1, E3], primes, "J isogenous to E1 x E1 x E3")


def _rank28(rep: Report, nprimes: int):
    E = BForm(Q(2429469980725060), Q(275130703388172136833647756388))
    rep.add("(0,0) is the only rational 2-torsion point", "semisplit 2-torsion", PUBLISHED,
            two_torsion(E).pattern == "Semisplit")
    r = self_glue_rotation(E)
    rep.add("the swap matching glues E to itself", "swap of the conjugate 2-torsion points", DIRECT,
            r.matching.kind == "semisplit")
    rep.add("quotient-cover identities hold", "g(t1 u + t2), f(s1 u + s2), h(x) = gbar(x^2)", DIRECT,
            all(cover_identities(r).values()))
    C = r.curve
    primes = good_primes([C, E], nprimes, start=11)
    rep.record.update({"E": E.to_json(), "glue": r.to_json(), "primes": primes})
    _product_facts(rep, C, [E, E], primes, "J isogenous to E x E")


def _surface128(rep: Report, nprimes: int):
    P = Poly([-1, 0, 8]) * Poly([1, 8, 8])
    fam = get_family("kubert", "2x8")
    hits = []
    for s in search(SearchQuery("squareRatio", [P], [P], 20, [lambda t, u: t == u])):
        if fam.degenerate_factor(s.t) or fam.degenerate_factor(s.u):
            continue
        if _E("2x8", s.t).curve.j != _E("2x8", s.u).curve.j:
            hits.append((s.t, s.u))
    rep.record["searchHits"] = hits
    rep.add("a non-isomorphic point on (8t^2-1)(8t^2+8t+1)y^2 = (8u^2-1)(8u^2+8u+1), height <= 20",
            "(u,y) = (t,-1) has infinite order", DERIVED, bool(hits))
    t, u = hits[0]
    rep.record.update({"t": t, "u": u})
    _gain_block(rep, _E("2x8", t), _E("2x8", u), (0, 1, 2), 1, 1, 128, nprimes, "128 | #J")


def _system72(rep: Report, nprimes: int):
    fam = get_family("kubert", "2x6")
    found = None
    for u in rationals_by_height(6):
        if fam.degenerate_factor(u) or (u + 3) * (u - 5) == 0:
            continue
        for y in rationals_by_height(6):
            if y <= 0:
                continue
            t = (u - 3) * y * y + 3
            if t == u or fam.degenerate_factor(t) or (t + 3) * (t - 5) == 0:
                continue
            if is_square((t + 3) * (t - 5) / ((u + 3) * (u - 5))) and _E("2x6", t).curve.j != _E("2x6", u).curve.j:
                found = (t, u, y)
                break
        if found:
            break
    rep.add("the system 2(t-3) = 2(u-3)y^2, (t+3)(t-5) = (u+3)(u-5)z^2 has a point",
            "(y,z) = (-1,1) has infinite order", DERIVED, found is not None)
    t, u, y = found
    rep.record.update({"t": t, "u": u, "y": y})
    _gain_block(rep, _E("2x6", t), _E("2x6", u), (0, 1, 2), 0, 0, 72, nprimes, "72 | #J")


def _curve96(rep: Report, nprimes: int):
    y = Q(2, 9)
    t = 3 - y * y / 2
    u, z = Q(1, 3), Q(44, 9)
    rep.add("y = 2/9 gives t = 241/81", "2(t-3) = -y^2", DIRECT, t == Q(241, 81))
    lhs = (y * y - 12) * (y * y + 4)
    rhs = 4 * (8 * u * u - 1) * (8 * u * u + 8 * u + 1) * z * z
    rep.add("(u, z) = (1/3, 44/9) on (y^2-12)(y^2+4) = 4(8u^2-1)(8u^2+8u+1)z^2", "(u,z) = (1/3,44/9)",
            PUBLISHED, lhs == rhs)
    rep.record.update({"t": t, "u": u})
    _gain_block(rep, _E("2x6", t), _E("2x8", u), (1, 2, 0), 0, 1, 96, nprimes, "96 | #J")


def _hyper_2_30(rep: Report, nprimes: int):
    w, x = Q(1, 3), Q(16, 3)
    rep.add("(w, x) = (1/3, 16/3) on x^2 = 2(33w^2-1)(9-33w^2)", "(w,x) = (1/3,16/3)", PUBLISHED,
            x * x == 2 * (33 * w * w - 1) * (9 - 33 * w * w))
    u = (33 * w * w - 1) / (9 - 33 * w * w)
    v = x / (2 * (9 - 33 * w * w))
    rep.add("u = 1/2 and u = 2v^2", "u = 2v^2", DIRECT, u == Q(1, 2) and u == 2 * v * v)
    E1, E2 = _F("10", 2).curve, _F("6", u).curve
    rep.add("B1 = -2^9 and Delta1 = 11 * 3^5", "F_10^2", PUBLISHED, E1.B == -(2**9) and E1.delta == 11 * 3**5)
    tr = solve_22(E1, E2, d_from_sign(E1, -1), d_from_sign(E2, 1), 1)
    _glue3_block(rep, tr, 60, nprimes, "Z/2 x Z/30")


def _hyper_8_8(rep: Report, nprimes: int):
    P = Poly([-1, -2, 1]) * Poly([-1, 2, 1])
    fam = get_family("bform", "8x2")
    hits = []
    trivial = lambda t, u: u in (t, -t) or t * u in (1, -1)
    for s in search(SearchQuery("squareRatio", [P], [P], 40, [trivial])):
        if fam.degenerate_factor(s.t) or fam.degenerate_factor(s.u):
            continue
        if _F("8x2", s.t).curve.j != _F("8x2", s.u).curve.j:
            hits.append((s.t, s.u))
    rep.record["searchHits"] = hits[:8]
    rep.add("a non-isomorphic point on (u^2-2u-1)(u^2+2u-1)w^2 = (v^2-2v-1)(v^2+2v-1)",
            "(v,w) = (-u,1) has infinite order", DERIVED, bool(hits))
    sect = all(P(-x) == P(x) for x in (Q(2), Q(3), Q(5, 7)))
    rep.add("(v, w) = (-u, 1) lies on the surface", "(v,w) = (-u,1)", PUBLISHED, sect)
    u, v = hits[0]
    E1, E2 = _F("8x2", u).curve, _F("8x2", v).curve
    rep.add("B1 B2 and Delta1 Delta2 are squares", "conditions for T = 0 with E3 of type (2,2)",
            DERIVED, is_square(E1.B * E2.B) and is_square(E1.delta * E2.delta))
    tr = solve_22(E1, E2, d_from_sign(E1, -1), d_from_sign(E2, 1), 1)
    rep.record.update({"u": u, "v": v})
    _glue3_block(rep, tr, 128, nprimes, "Z/2 x Z/8 x Z/8")


def _pick_ds(E1, E2, r, l12):
    """Square roots d1, d2 of Delta1, Delta2 with d1 d2 = r and A1 A2 / (d1 d2) = l12."""
    for s1, s2 in itertools.product((1, -1), repeat=2):
        d1, d2 = d_from_sign(E1, s1), d_from_sign(E2, s2)
        if d1 * d2 == Surd(r) and (Surd(E1.A) / d1) * (Surd(E2.A) / d2) == Surd(l12):
            return d1, d2
    return None


def _quartic_two_curves(rep, E1, E2, r, l1sq, l2sq, l12, quart, den, N, nprimes, H=300):
    rep.add(f"lambda1^2 = {rat_str(l1sq)}, lambda2^2 = {rat_str(l2sq)}", "lambda_i = A_i/d_i", PUBLISHED,
            E1.A**2 / E1.delta == l1sq and E2.A**2 / E2.delta == l2sq)
    ds = _pick_ds(E1, E2, r, l12)
    rep.add(f"d1, d2 can be chosen with d1 d2 = {rat_str(Q(r))} and lambda1 lambda2 = {rat_str(l12)}",
            "sign choice", PUBLISHED, ds is not None)
    d1, d2 = ds
    ts = [s.t for s in square_values(quart, H) if s.t not in (0, 1, -1)]
    rep.record["searchHits"] = ts
    rep.add("w^2 = q(t) has a point with t != 0, +-1", "genus-1 curve w^2 = q(t)", DERIVED, bool(ts))
    t = ts[0]
    E3 = _F("4x2", t).curve
    tr = GlueTriple(E1, E2, E3, d1, d2, Surd((t - 1) ** 2))
    T = twisting_factor(tr)
    rep.add("T = q(t) / (c (t-1)^2)", "closed form of T", PUBLISHED, T == quart(t) / den(t), t=t, T=T)
    rep.add("T is a square", "isogeny over Q", DERIVED, rational_is_square(T))
    rep.record["t"] = t
    _glue3_block(rep, tr, N, nprimes, f"{N} | #J")


def _quartic_4_40(rep: Report, nprimes: int):
    q = Poly([-1922, 118024, 29940, 118024, -1922])
    _quartic_two_curves(rep, _F("10", Q(-1, 2)).curve, _F("8", Q(1, 2)).curve, 4,
                        Q(-625, 2048), Q(-49, 32), Q(175, 256), q,
                        lambda t: 2**10 * (t - 1) ** 2, 160, nprimes)


def _quartic_4_60(rep: Report, nprimes: int):
    q = Poly([-177710460, 433908240, 216604440, 433908240, -177710460])
    _quartic_two_curves(rep, _F("10", Q(-1, 3)).curve, _F("12", Q(1, 3)).curve, Q(625, 59049),
                        Q(-485809, 759375), Q(-3721, 375), Q(-42517, 16875), q,
                        lambda t: 3**16 * 5**2 * (t - 1) ** 2, 240, nprimes)


def _quartic_2_4_24(rep: Report, nprimes: int):
    E1, E2 = _F("8x2", 2).curve, _F("2x6", Q(1, 4)).curve
    rep.add("F_{6,2}^{1/4} is read as F_{2,6}^{1/4} with d2 = +4", "label identification", DIRECT,
            E2.delta == 16)
    lam = (Surd(E1.A) / Surd(256), Surd(E2.A) / Surd(4))
    rep.add("lambda1 = 47/128, lambda2 = 863/512 for d1 = 256, d2 = 4", "lambda_i = A_i/d_i", PUBLISHED,
            lam == (Surd(Q(47, 128)), Surd(Q(863, 512))))
    q = Poly([1104601, 2371804, 9824406, 2371804, 1104601])
    ts = [s.t for s in square_values(q, 40) if s.t not in (0, 1, -1)]
    rep.record["searchHits"] = ts
    rep.add("w^2 = q(t) has a point with t != 0, +-1", "genus-1 curve w^2 = q(t)", DERIVED, bool(ts))
    t = ts[0]
    tr = GlueTriple(E1, E2, _F("4x2", t).curve, 256, 4, (t - 1) ** 2)
    T = twisting_factor(tr)
    rep.add("T = q(t) / (2^8 (t-1)^2)", "closed form of T", PUBLISHED, T == q(t) / (256 * (t - 1) ** 2),
            t=t, T=T)
    rep.record["t"] = t
    _glue3_block(rep, tr, 192, nprimes, "192 | #J")


def _quartic_6_6_6(rep: Report, nprimes: int):
    q = Poly([-3, -4, -6, 0, 1])
    small = [(s.t, s.witness[0]) for s in square_values(q, 20)]
    rep.add("w^2 = t^4-6t^2-4t-3 has the points t = -3 and t = 19/6", "genus-1 curve", DERIVED,
            {p[0] for p in small} >= {Q(-3), Q(19, 6)})
    t, w = parabola_third_point(q, (Q(-3), Q(6)), (Q(19, 6), Q(-179, 36)))
    rep.add("third point through (-3, 6) and (19/6, -179/36) lies on the curve", "chord construction",
            DERIVED, w * w == q(t), t=t)
    E = _F("2x6", t).curve
    tr = GlueTriple(E, E, E, 16 * t, 16 * t, 16 * t)
    rep.add("T = -d^3 (lambda-1)^2 (2 lambda+1)", "E1 = E2 = E3", DIRECT,
            twisting_factor(tr) == -(16 * t) ** 3 * (E.A / (16 * t) - 1) ** 2 * (2 * E.A / (16 * t) + 1))
    rep.add("T is a square", "isogeny over Q", DERIVED, rational_is_square(twisting_factor(tr)))
    c243 = LongWeierstrass(Q(0), Q(0), Q(0), Q(0), Q(-48))
    rep.add("(4, 4) has infinite order on y^2 = x^3 - 48", "generator (4,4)", PUBLISHED,
            order_certificate(c243, (Q(4), Q(4))).kind == "InfiniteOrder")
    rep.record["t"] = t
    _glue3_block(rep, tr, 216, nprimes, "Z/6 x Z/6 x Z/6")


def _quartic_4_8_8(rep: Report, nprimes: int):
    E1 = _F("8x2", 2).curve
    rep.add("A1 = 2 * 47 and Delta1 = 2^16", "F_{8,2}^2", PUBLISHED, E1.A == 94 and E1.delta == 2**16)
    s, z = Q(5929, 64), Q(20520885, 512)
    rep.add("(5929/64, 20520885/512) on z^2 = s^3+5983s^2+16777216s", "non-torsion point", PUBLISHED,
            z * z == s**3 + 5983 * s * s + 16777216 * s)
    t = s / 4096
    w = z / 512
    rep.add("s = 4096t, z = 512w lands on w^2 = 4t(Delta1(t+1)^2 - 4A1^2 t)", "equation for (2,4)",
            DIRECT, w * w == 4 * t * (E1.delta * (t + 1) ** 2 - 4 * E1.A**2 * t))
    tr = GlueTriple(E1, E1, _F("2x4", t).curve, 256, 256, 4 * t)
    rep.add("T is a square", "isogeny over Q", DERIVED, rational_is_square(twisting_factor(tr)))
    rep.record["t"] = t
    _glue3_block(rep, tr, 256, nprimes, "Z/4 x Z/8 x Z/8")


def _gain512(rep: Report, nprimes: int):
    I = _F("2x8", 2)
    E1 = I.curve
    rep.add("Delta1 = 30625 and 4 B1 = 82944", "y^2 = x(x+Delta1)(x-4B1)", PUBLISHED,
            E1.delta == 30625 and 4 * E1.B == 82944)
    x, y = Q(-21600), Q(4514400)
    rep.add("(-21600, 4514400) on y^2 = x(x+30625)(x-82944)", "non-torsion point", PUBLISHED,
            y * y == x * (x + 30625) * (x - 82944))
    d1 = d_from_point(E1, -16 * 2**4)
    cond = lambda s: (s * s + 1) ** 2 * E1.A**2 - 4 * s * s * E1.delta
    fam = get_family("bform", "4x2a")
    ss = [s for s in rationals_by_height(40)
          if not fam.degenerate_factor(s) and s != 0 and rational_sqrt(cond(s)) is not None]
    rep.record["searchHits"] = ss
    rep.add("w^2 = (s^2+1)^2 A1^2 - 4s^2 Delta1 has a usable point", "genus-1 curve in (s, w)",
            DERIVED, bool(ss))
    s = ss[0]
    tr = GlueTriple(E1, E1, _F("4x2a", s).curve, d1, d1, (s * s + 1) ** 2)
    rep.add("T is a square", "isogeny over Q", DERIVED, rational_is_square(twisting_factor(tr)))
    rep.record["s"] = s
    _glue3_block(rep, tr, 512, nprimes, "512 | #J")


def _selfglue13(rep: Report, nprimes: int):
    E = LongWeierstrass(Q(0), Q(0), Q(0), Q(-169), Q(845))
    f = as_cubic(E)
    D = poly_disc(f)
    rep.add("the 2-division cubic is irreducible with discriminant 13^4", "Galois group A_3",
            PUBLISHED, D == 13**4 and two_torsion(E).pattern == "Irreducible")
    r = self_glue_rotation(E)
    rep.add("quotient-cover identities hold", "g(t1 u + t2), f(s1 u + s2), h(x) = gbar(x^2)", DIRECT,
            all(cover_identities(r).values()))
    C = r.curve
    primes = good_primes([C, E], nprimes)
    rep.record.update({"E": E.to_json(), "glue": r.to_json(), "primes": primes})
    _product_facts(rep, C, [E, E], primes, "J isogenous to E x E")


CATALOG: dict[str, NamedExample] = {
    ex.id: ex
    for ex in [
        NamedExample("x0_22", "genus-2 model identity for X_0(22)", _x0_22),
        NamedExample("torsion63", "genus-2 curve with a rational 63-torsion point", _torsion63),
        NamedExample("torsion49", "genus-2 curve with Z/7 x Z/7", _torsion49),
        NamedExample("torsion35_curve", "35-torsion from E_7^-1 and E_5^(1/26)", _torsion35),
        NamedExample("torsion45_curve", "45-torsion from E_9^-5 and E_5^(93/10)", _torsion45),
        NamedExample("torsion60_t13", "60-torsion on the t = 1/3 fibre", _torsion60),
        NamedExample("quartic864", "plane quartic with 864 rational torsion points", _quartic864),
        NamedExample("conductor2940_model", "quartic from y^2 = x^3-11x^2+32x and x^3-31x^2+240x",
                     _conductor2940),
        NamedExample("rank28_glue", "self-gluing along the swap of a semisplit 2-torsion", _rank28),
        NamedExample("surface128", "2-power gain for E_{2,8} x E_{2,8}", _surface128),
        NamedExample("system72", "2-power gain for E_{2,6} x E_{2,6}", _system72),
        NamedExample("curve96", "2-power gain for E_{2,6} x E_{2,8} with a rotated matching", _curve96),
        NamedExample("hyper_2_30", "hyperelliptic genus 3 with Z/2 x Z/30", _hyper_2_30),
        NamedExample("hyper_8_8_gluepoints", "hyperelliptic genus 3 from F_{8,2}^u, F_{8,2}^v", _hyper_8_8),
        NamedExample("quartic_4_40", "plane quartic with Z/4 x Z/40", _quartic_4_40),
        NamedExample("quartic_2_4_24", "plane quartic with Z/2 x Z/4 x Z/24", _quartic_2_4_24),
        NamedExample("quartic_4_60", "plane quartic with Z/4 x Z/60", _quartic_4_60),
        NamedExample("quartic_6_6_6", "plane quartic with (Z/6)^3", _quartic_6_6_6),
        NamedExample("quartic_4_8_8", "plane quartic with Z/4 x Z/8 x Z/8", _quartic_4_8_8),
        NamedExample("gain_512_point", "quartic over the F_{2,8}^2 self pair, 512 points", _gain512),
        NamedExample("selfglue_13", "self-gluing of y^2 = x^3-169x+845", _selfglue13),
    ]
}


def verify_named(example_id: str, nprimes: int = 3) -> Report:
    if example_id not in CATALOG:
        raise KeyError(f"unknown example {example_id!r}; known: {', '.join(CATALOG)}")
    rep = Report(example_id)
    try:
        CATALOG[example_id].recipe(rep, nprimes)
    except Exception as exc:  # a crashing recipe is a failed fact, not a crash of the report
        rep.add(f"recipe raised {type(exc).__name__}: {exc}", "recipe", DIRECT, False)
    return rep


def verify_all(nprimes: int = 3) -> list[Report]:
    return [verify_named(k, nprimes) for k in CATALOG]
