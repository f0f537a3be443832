"""Bounded-height searches for rational points on the parameter varieties.

Rationals are enumerated by height max(|p|, q), then by numerator, so the
output order is reproducible.  The main search shapes:

* class joins: pairs (t, u) with P_k(t) * Q_k(u) a square for every k,
  found by bucketing both sides on their square classes;
* univariate square tests: t with q(t) a square (genus-1 quartics and the
  like), returning the square root as witness;
* custom predicates returning a witness tuple or None.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..algebra import InconclusiveFactorization, Poly, rat, rat_str, rational_sqrt, squarefree_part


def rationals_by_height(H: int, start: int = 1):
    """Every rational of height in [start, H], ordered by height then numerator."""
    for h in range(max(1, start), H + 1):
        row = set()
        for q in range(1, h + 1):
            for p in (h, -h) if q < h else ():
                if math.gcd(p, q) == 1:
                    row.add(Fraction(p, q))
            if q == h:
                for p in range(-h, h + 1):
                    if math.gcd(p, q) == 1:
                        row.add(Fraction(p, q))
        yield from sorted(row, key=lambda x: (x.numerator, x.denominator))


def height(x) -> int:
    x = rat(x)
    return max(abs(x.numerator), x.denominator)


def _canon_key(x: Fraction):
    return (height(x), x.numerator, x.denominator)


@dataclass
class SearchQuery:
    """What to search for.

    ``kind`` is "squareRatio" (``left``/``right`` are lists of polynomials
    whose values must agree up to squares), "genus1" (``left[0]`` is the
    polynomial that must take a square value) or "custom" (``left[0]`` is a
    predicate x -> witness tuple or None).  ``exclude`` holds callables
    (t, u) -> bool marking excluded relations; ``degenerate`` lists
    polynomials whose zeros are skipped on each side.
    """

    kind: str
    left: list
    right: list = field(default_factory=list)
    H: int = 20
    exclude: list = field(default_factory=list)
    degenerate_left: list = field(default_factory=list)
    degenerate_right: list = field(default_factory=list)
    label: str = ""

    def __post_init__(self):
        if self.H < 1:
            raise ValueError("height bound must be at least 1")
        if self.kind not in ("squareRatio", "genus1", "custom"):
            raise ValueError(f"unknown search kind {self.kind!r}")


@dataclass(frozen=True)
class Solution:
    t: Fraction
    u: Fraction | None = None
    witness: tuple = ()

    def to_json(self):
        out = {"t": rat_str(self.t)}
        if self.u is not None:
            out["u"] = rat_str(self.u)
        if self.witness:
            out["witness"] = [rat_str(w) for w in self.witness]
        return out


def _class_key(polys, degenerate, x):
    if any(d(x) == 0 for d in degenerate):
        return None
    key = []
    for P in polys:
        v = P(x)
        if v == 0:
            return None
        try:
            key.append(squarefree_part(v).key)
        except InconclusiveFactorization:
            return None
    return tuple(key)


def _keys_for(args):
    polys, degenerate, xs = args
    return [(x, _class_key(polys, degenerate, x)) for x in xs]


def _class_table(polys, degenerate, xs, shards: int):
    if shards <= 1:
        return _keys_for((polys, degenerate, xs))
    parts = [[x for x in xs if x.numerator % shards == r] for r in range(shards)]
    with ProcessPoolExecutor(max_workers=shards) as ex:
        chunks = list(ex.map(_keys_for, [(polys, degenerate, part) for part in parts]))
    merged = [pair for chunk in chunks for pair in chunk]
    merged.sort(key=lambda pair: _canon_key(pair[0]))
    return merged


def search(query: SearchQuery, shards: int = 1) -> list[Solution]:
    """All solutions up to the height bound, in canonical order."""
    xs = list(rationals_by_height(query.H))
    if query.kind in ("genus1", "custom"):
        P = query.left[0]
        out = []
        for x in xs:
            if any(d(x) == 0 for d in query.degenerate_left):
                continue
            if query.kind == "genus1":
                r = rational_sqrt(P(x))
                wit = None if r is None else (r,)
            else:
                wit = P(x)
            if wit is not None:
                out.append(Solution(x, witness=tuple(wit)))
        return out
    left = _class_table(query.left, query.degenerate_left, xs, shards)
    right = _class_table(query.right, query.degenerate_right, xs, shards)
    buckets: dict = {}
    for u, key in right:
        if key is not None:
            buckets.setdefault(key, []).append(u)
    out = []
    for t, key in left:
        if key is None:
            continue
        for u in buckets.get(key, ()):
            if any(ex(t, u) for ex in query.exclude):
                continue
            wit = tuple(rational_sqrt(Q(u) / P(t)) for P, Q in zip(query.left, query.right))
            out.append(Solution(t, u, wit))
    out.sort(key=lambda s: (_canon_key(s.t), _canon_key(s.u)))
    return out


def same_curve_relations(t: Fraction, u: Fraction) -> bool:
    """u = t, 1/(1 - t) or (t - 1)/t: the same 7-torsion curve with another generator."""
    rels = [t]
    if t != 1:
        rels.append(1 / (1 - t))
    if t != 0:
        rels.append((t - 1) / t)
    return u in rels


def delta_class_search(N: int, M: int, H: int = 20, exclude_same: bool | None = None,
                       shards: int = 1) -> list[Solution]:
    """(t, u) with Delta_N(t) Delta_M(u) a nonzero square, both curves nondegenerate."""
    from ..families import delta_poly, get_family

    fN, fM = get_family("kubert", str(N)), get_family("kubert", str(M))
    excl = []
    if exclude_same is None:
        exclude_same = N == M
    if exclude_same:
        excl.append(same_curve_relations if N == 7 else (lambda t, u: t == u))
    query = SearchQuery(
        "squareRatio", [delta_poly(str(N))], [delta_poly(str(M))], H, excl,
        fN.factors, fM.factors, f"Delta_{N} ~ Delta_{M}",
    )
    return search(query, shards)


def square_values(P: Poly | Callable, H: int, degenerate=()) -> list[Solution]:
    """t of height <= H with P(t) a rational square."""
    query = SearchQuery("genus1", [P], H=H, degenerate_left=list(degenerate))
    return search(query)


def parabola_third_point(q: Poly, P1, P2):
    """Third t-root of w = t^2 + a t + b through two points of w^2 = q(t), q monic quartic.

    Returns (t3, w3) or None when the parabola is tangent at infinity (a = 0).
    """
    if q.deg != 4 or q.lc != 1:
        raise ValueError("need a monic quartic")
    (t1, w1), (t2, w2) = P1, P2
    if t1 == t2:
        raise ValueError("points must have distinct t")
    a = ((w1 - t1 * t1) - (w2 - t2 * t2)) / (t1 - t2)
    b = w1 - t1 * t1 - a * t1
    c0, c1, c2, c3, _ = q.c
    # (t^2+at+b)^2 - q(t) = (2a - c3) t^3 + (a^2 + 2b - c2) t^2 + ...
    lead = 2 * a - c3
    if lead == 0:
        return None
    t3 = -(a * a + 2 * b - c2) / lead - t1 - t2
    return t3, t3 * t3 + a * t3 + b
