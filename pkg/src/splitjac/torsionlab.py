"""Descent bookkeeping for curves with full rational 2-torsion, finite
abelian group quotients, the 3-torsion companion of a curve with trivial
2-torsion, and the count of maximal isotropic subgroups of (Z/2)^6.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, SquareClass, rat, rational_roots, squarefree_part
from .elliptic import O, LongWeierstrass, complete_square, order_certificate


class PatternError(ValueError):
    """The curve does not have the 2-torsion pattern the operation needs."""


# ---------------------------------------------------------------------------
# iota on curves with full rational 2-torsion


@dataclass(frozen=True)
class IotaValue:
    classes: tuple  # three SquareClass entries, one per T_i

    @property
    def key(self):
        return tuple(c.key for c in self.classes)

    def norm_ok(self) -> bool:
        a, b, c = self.classes
        return (a * b * c).is_square()

    def signed(self) -> tuple[int, int, int]:
        """Each class as a signed squarefree integer."""
        return tuple(c.sign * c.squarefree for c in self.classes)

    def __eq__(self, other):
        return isinstance(other, IotaValue) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def to_json(self):
        return list(self.signed())


def torsion_abscissas(E, xs=None) -> list[Fraction]:
    """x-coordinates T1, T2, T3 of the nonzero 2-torsion; checked when supplied."""
    f = complete_square(E)
    if xs is None:
        xs = rational_roots(f)
        if len(xs) != 3:
            raise PatternError("the 2-torsion is not all rational")
        return xs
    xs = [rat(x) for x in xs]
    if len(xs) != 3 or len(set(xs)) != 3 or any(f(x) != 0 for x in xs):
        raise PatternError("the given abscissas are not the three 2-torsion x's")
    return xs


def iota(E, P, xs=None) -> IotaValue:
    """Classes of x_P - x_{T_i}; the component of a 2-torsion P is forced by the norm."""
    if P is O:
        raise ValueError("iota is not defined at the point at infinity")
    xs = torsion_abscissas(E, xs)
    xP = rat(P[0])
    if not E.contains(P):
        raise ValueError(f"{P} is not on the curve")
    diffs = [xP - x for x in xs]
    if 0 in diffs:
        j = diffs.index(0)
        others = [squarefree_part(d) for d in diffs if d != 0]
        forced = others[0] * others[1]
        forced = SquareClass(forced.sign, forced.squarefree)
        cls = []
        k = 0
        for i in range(3):
            if i == j:
                cls.append(forced)
            else:
                cls.append(others[k])
                k += 1
        return IotaValue(tuple(cls))
    return IotaValue(tuple(squarefree_part(d) for d in diffs))


def perm_from_matching(m, xs_E, xs_F) -> tuple[int, int, int]:
    """Translate a split Matching into a permutation of the labels T_i -> T'_j."""
    if m.kind != "split":
        raise PatternError("need a split matching")
    image = {rat(m.roots_f[i]): rat(m.roots_g[m.perm[i]]) for i in range(3)}
    return tuple(list(map(rat, xs_F)).index(image[rat(x)]) for x in xs_E)


def halving_condition(E, F, perm, P, Q, xs_E=None, xs_F=None) -> bool:
    """True iff (P, Q) has a half on E x F that is rational on the glued surface.

    ``perm[i] = j`` means the matching sends T_i to T'_j.
    """
    if sorted(perm) != [0, 1, 2]:
        raise PatternError(f"{perm} is not a bijection of the 2-torsion")
    a = iota(E, P, xs_E)
    b = iota(F, Q, xs_F)
    return all(a.classes[i].key == b.classes[perm[i]].key for i in range(3))


def halving_field(E, S, others=None) -> tuple[SquareClass, SquareClass]:
    """Classes of x_S - x_T and x_S - x_U for the 2-torsion point S.

    Without ``others`` the remaining roots are taken in increasing order.
    """
    f = complete_square(E)
    xS = rat(S[0] if isinstance(S, tuple) else S)
    if f(xS) != 0:
        raise PatternError(f"x = {xS} is not a 2-torsion abscissa")
    if others is None:
        roots = rational_roots(f)
        if len(roots) != 3:
            raise PatternError("the 2-torsion is not all rational")
        others = [r for r in roots if r != xS]
    xT, xU = (rat(x) for x in others)
    if f(xT) != 0 or f(xU) != 0 or len({xS, xT, xU}) != 3:
        raise PatternError("T and U must be the other two 2-torsion points")
    return squarefree_part(xS - xT), squarefree_part(xS - xU)


# ---------------------------------------------------------------------------
# finite abelian groups


def smith_diagonal(rows: list[list[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form of an integer matrix."""
    M = [list(map(int, r)) for r in rows if any(r)]
    if not M:
        return []
    m, n = len(M), len(M[0])
    diag = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        while True:
            # pivot: smallest nonzero entry in the remaining block
            piv = None
            for i in range(r, m):
                for j in range(c, n):
                    if M[i][j] and (piv is None or abs(M[i][j]) < abs(M[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                return diag
            i, j = piv
            M[r], M[i] = M[i], M[r]
            for row in M:
                row[c], row[j] = row[j], row[c]
            p = M[r][c]
            done = True
            for i in range(r + 1, m):
                q = M[i][c] // p
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[r])]
                if M[i][c]:
                    done = False
            for j in range(c + 1, n):
                q = M[r][j] // p
                if q:
                    for row in M:
                        row[j] -= q * row[c]
                if M[r][j]:
                    done = False
            if done:
                # divisibility: fold a non-divisible entry into the pivot row
                bad = next(
                    (i for i in range(r + 1, m) for j in range(c + 1, n) if M[i][j] % p),
                    None,
                )
                if bad is None:
                    diag.append(abs(p))
                    r += 1
                    break
                M[r] = [a + b for a, b in zip(M[r], M[bad])]
    return diag


@dataclass(frozen=True)
class AbGroup:
    invariants: tuple[int, ...]

    def __post_init__(self):
        inv = tuple(int(n) for n in self.invariants if int(n) != 1)
        if any(n <= 0 for n in inv):
            raise ValueError("invariant factors must be positive")
        if any(inv[i + 1] % inv[i] for i in range(len(inv) - 1)):
            raise ValueError(f"{inv}: each factor must divide the next")
        object.__setattr__(self, "invariants", inv)

    @classmethod
    def from_orders(cls, orders) -> "AbGroup":
        """Normalize any list of cyclic orders to invariant factors."""
        n = len(orders)
        return cls(tuple(x for x in smith_diagonal([[o if i == j else 0 for j in range(n)]
                                                    for i, o in enumerate(orders)])))

    @property
    def order(self) -> int:
        return math.prod(self.invariants)

    def __str__(self):
        return " x ".join(f"Z/{n}" for n in self.invariants) or "0"


def two_torsion_basis(G: AbGroup) -> list[tuple[int, ...]]:
    inv = G.invariants
    return [tuple(n // 2 if k == i else 0 for k in range(len(inv))) for i, n in enumerate(inv) if n % 2 == 0]


def quotient(orders: list[int], relations: list[list[int]]) -> AbGroup:
    """(Z/n_1 x ... x Z/n_r) / <relations>."""
    r = len(orders)
    rows = [[o if i == j else 0 for j in range(r)] for i, o in enumerate(orders)]
    rows += [list(v) for v in relations]
    return AbGroup(tuple(d for d in smith_diagonal(rows)))


def _is_graph(pairs, GE: AbGroup, GF: AbGroup) -> bool:
    """The subgroup spanned by the pairs projects injectively to both sides."""

    def span(vecs, mods):
        out = {tuple(0 for _ in mods)}
        for v in vecs:
            out |= {tuple((a + b) % m for a, b, m in zip(w, v, mods)) for w in out}
        return out

    both = list(GE.invariants) + list(GF.invariants)
    H = span([tuple(x) + tuple(y) for x, y in pairs], both)
    ne = len(GE.invariants)
    left = {h[:ne] for h in H}
    right = {h[ne:] for h in H}
    return len(left) == len(H) == len(right)


def torsion_image_structure(GE, GF, identify_special: bool = True, pairs=None) -> AbGroup:
    """Image of G_E x G_F on the glued surface: the quotient by the graph of the matching.

    ``pairs`` lists identified 2-torsion elements (coordinates in the given
    invariant-factor presentations).  Without it, groups Z/2 x Z/2N are paired
    on their 2-torsion bases, the special point N*(0,1) going to the other
    special point when ``identify_special`` and to the non-special basis
    point otherwise.
    """
    GE = GE if isinstance(GE, AbGroup) else AbGroup(tuple(GE))
    GF = GF if isinstance(GF, AbGroup) else AbGroup(tuple(GF))
    if pairs is None:
        bE, bF = two_torsion_basis(GE), two_torsion_basis(GF)
        if len(bE) != len(bF) or not bE:
            raise ValueError("2-torsion ranks differ; give the pairs explicitly")
        # the special point is the 2-torsion point of the largest cyclic factor
        if identify_special or len(bE) == 1:
            pairs = list(zip(bE, bF))
        else:
            pairs = list(zip(bE, bF[::-1]))
    if not _is_graph(pairs, GE, GF):
        raise ValueError("the identification is not the graph of an isomorphism")
    rels = []
    for x, y in pairs:
        rels.append(list(x) + list(y))
    return quotient(list(GE.invariants) + list(GF.invariants), rels)


# ---------------------------------------------------------------------------
# 3-torsion companion of y^2 = x^3 + A x + B


@dataclass
class Add3Certificate:
    A: Fraction
    B: Fraction
    t: Fraction
    s: Poly  # element of Q[T]/(T^3 + A T + B), as a polynomial in T
    residue: Poly  # s^3 + (s + t)^2 reduced mod the cubic
    curve: LongWeierstrass
    point: tuple

    @property
    def ok(self) -> bool:
        return self.residue.deg < 0

    def to_json(self):
        return {
            "A": str(self.A),
            "B": str(self.B),
            "t": str(self.t),
            "s": self.s.to_json(),
            "certificate": self.ok,
        }


def add3torsion_partner(A, B) -> Add3Certificate:
    """t with y^2 = x^3 + (x + t)^2 sharing the 2-torsion module of y^2 = x^3 + A x + B."""
    A, B = rat(A), rat(B)
    if A == 0 or B == 0:
        raise ValueError("A and B must both be nonzero")
    f = Poly([B, A, 0, 1])
    if 4 * A**3 + 27 * B**2 == 0:
        raise ValueError("x^3 + A x + B is not squarefree")
    if rational_roots(f):
        raise ValueError("x^3 + A x + B has a rational root: the 2-torsion is not trivial")
    t = -(B * B) / A**3
    T = Poly([0, 1])
    # 1/T = -(T^2 + A)/B in the cubic algebra
    inv_T = Poly([A, 0, 1]).scale(-1 / B)
    q = (inv_T.scale(B / A) * inv_T.scale(B / A)) % f
    s = (-q) % f
    residue = (s * s * s + (s + Poly([t])) * (s + Poly([t]))) % f
    assert ((T * inv_T) % f) == Poly([1])
    E = LongWeierstrass(Fraction(0), Fraction(1), Fraction(0), 2 * t, t * t)
    return Add3Certificate(A, B, t, s, residue, E, (Fraction(0), t))


def partner_point_order(c: Add3Certificate) -> int | None:
    return order_certificate(c.curve, c.point).order


# ---------------------------------------------------------------------------
# maximal isotropic subgroups of E1[2] x E2[2] x E3[2]


def _pair(v, w) -> int:
    s = 0
    for i in range(3):
        a1, b1 = (v >> (2 * i)) & 1, (v >> (2 * i + 1)) & 1
        a2, b2 = (w >> (2 * i)) & 1, (w >> (2 * i + 1)) & 1
        s ^= (a1 & b2) ^ (a2 & b1)
    return s


def maximal_isotropics() -> list[frozenset]:
    """All maximal isotropic subgroups of (Z/2)^6 with the product Weil pairing.

    Vectors are 6-bit integers, two bits per factor.
    """
    found = set()
    for v1, v2, v3 in itertools.combinations(range(1, 64), 3):
        if _pair(v1, v2) or _pair(v1, v3) or _pair(v2, v3):
            continue
        span = frozenset({0, v1, v2, v3, v1 ^ v2, v1 ^ v3, v2 ^ v3, v1 ^ v2 ^ v3})
        if len(span) == 8:
            found.add(span)
    return sorted(found, key=sorted)


def is_nonsplit(G) -> bool:
    """No nonzero element of G lives in a single factor."""
    masks = (0b000011, 0b001100, 0b110000)
    return not any(v and (v & ~m) == 0 for v in G for m in masks)


def isotropic_census() -> dict:
    gs = maximal_isotropics()
    ns = [G for G in gs if is_nonsplit(G)]
    return {"total": len(gs), "nonsplit": len(ns), "split": len(gs) - len(ns)}
