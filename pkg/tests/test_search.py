import math
from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from splitjac.algebra import Poly
from splitjac.explorer.search import (
    SearchQuery,
    delta_class_search,
    height,
    parabola_third_point,
    rationals_by_height,
    same_curve_relations,
    search,
    square_values,
)


def _is_rational_square(x: Q) -> bool:
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d


@pytest.mark.parametrize("H", [1, 2, 5, 12])
def test_rationals_by_height_is_complete_and_ordered(H):
    xs = list(rationals_by_height(H))
    brute = {Q(p, q) for p in range(-H, H + 1) for q in range(1, H + 1)}
    assert len(xs) == len(set(xs)) == len(brute)
    assert set(xs) == brute
    hs = [height(x) for x in xs]
    assert hs == sorted(hs)
    assert xs[:3] == [Q(-1), Q(0), Q(1)]


def test_rationals_by_height_start():
    assert all(height(x) >= 4 for x in rationals_by_height(6, start=4))
    assert list(rationals_by_height(3, start=3)) == [
        x for x in rationals_by_height(3) if height(x) == 3]


def test_square_values_matches_brute_force():
    P = Poly([1, 0, 0, 0, 1])  # t^4 + 1
    P2 = Poly([-2, 0, 1, 1])
    for poly in (P, P2):
        sols = square_values(poly, 15)
        assert [s.t for s in sols] == [x for x in rationals_by_height(15) if _is_rational_square(poly(x))]
        for s in sols:
            assert s.witness[0] ** 2 == poly(s.t)


def test_square_values_skips_degenerate_points():
    P = Poly([0, 0, 1])
    assert Q(0) not in [s.t for s in square_values(P, 3, degenerate=[Poly([0, 1])])]


def test_class_join_agrees_with_pairwise_check():
    left, right = [Poly([1, 1])], [Poly([2, 0, 1])]
    query = SearchQuery("squareRatio", left, right, H=6)
    got = {(s.t, s.u) for s in search(query)}
    xs = list(rationals_by_height(6))
    want = {(t, u) for t in xs for u in xs
            if left[0](t) and right[0](u) and _is_rational_square(left[0](t) * right[0](u))}
    assert got == want


def test_sharded_search_is_deterministic():
    one = delta_class_search(7, 7, H=7, shards=1)
    two = delta_class_search(7, 7, H=7, shards=2)
    assert [s.to_json() for s in one] == [s.to_json() for s in two]
    for s in one:
        assert not same_curve_relations(s.t, s.u)


def test_same_curve_relations():
    t = Q(3)
    assert same_curve_relations(t, t)
    assert same_curve_relations(t, 1 / (1 - t))
    assert same_curve_relations(t, (t - 1) / t)
    assert not same_curve_relations(t, Q(5))
    assert same_curve_relations(Q(1), Q(1)) and same_curve_relations(Q(0), Q(1))


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5).filter(bool),
       st.lists(st.integers(-9, 9), min_size=3, max_size=3, unique=True))
def test_parabola_third_point(a, b, k, roots):
    # q = w^2 + k (t - r1)(t - r2)(t - r3) meets w = t^2 + a t + b exactly at the r_i
    w = Poly([b, a, 1])
    q = w * w + Poly.from_roots(roots).scale(k)
    r1, r2, r3 = map(Q, roots)
    t3, w3 = parabola_third_point(q, (r1, w(r1)), (r2, w(r2)))
    assert t3 == r3 and w3 == w(r3)
    assert w3 * w3 == q(t3)


def test_parabola_third_point_errors():
    q = Poly([1, 0, 0, 0, 1])
    # w = t^2 + 1 through both points: the cubic term cancels
    assert parabola_third_point(q, (Q(0), Q(1)), (Q(1), Q(2))) is None
    with pytest.raises(ValueError):
        parabola_third_point(Poly([1, 0, 0, 0, 2]), (Q(0), Q(1)), (Q(1), Q(2)))
    with pytest.raises(ValueError):
        parabola_third_point(q, (Q(0), Q(1)), (Q(0), Q(-1)))


def test_search_spec_validation():
    with pytest.raises(ValueError):
        SearchQuery("genus1", [Poly([1])], H=0)
    with pytest.raises(ValueError):
        SearchQuery("lattice", [Poly([1])])
    custom = SearchQuery("custom", [lambda x: (x,) if x.denominator == 3 else None], H=3)
    assert [s.t for s in search(custom)] == [Q(-2, 3), Q(-1, 3), Q(1, 3), Q(2, 3)]
