import random
from fractions import Fraction as Q

import pytest
from hypothesis import assume, given, settings, strategies as st

import oracles
from splitjac.algebra import Poly, match_roots
from splitjac.elliptic import BForm, LongWeierstrass
from splitjac.families import DegenerateParameter, instantiate
from splitjac.ffcount import HyperellipticCurve, good_primes, jacobian_order, product_check
from splitjac.glue2 import (
    IsomorphismMatching,
    as_cubic,
    cover_identities,
    glue,
    glue_both_orientations,
    reversed_sextic,
    self_glue_rotation,
)


def _first_good(f, g):
    for m in match_roots(f, g):
        try:
            return glue(f, g, m)
        except IsomorphismMatching:
            continue
    return None


def test_small_split_example():
    f, g = Poly([0, -1, 0, 1]), Poly([0, -4, 0, 1])
    ms = match_roots(f, g)
    # the order-preserving matching is x -> 2x, an isomorphism over Q(sqrt 2)
    with pytest.raises(IsomorphismMatching):
        glue(f, g, ms[0])
    r = _first_good(f, g)
    assert all(cover_identities(r).values())
    assert r.h.deg == 6
    # the sextic is even: it factors through x -> x^2
    assert all(c == 0 for c in r.h.c[1::2])


def test_split_fast_path_agrees_with_algebra():
    f, g = Poly.from_roots([-1, 0, 2]), Poly.from_roots([-3, 1, 5])
    for m in match_roots(f, g):
        try:
            a = glue(f, g, m, method="algebra")
        except IsomorphismMatching:
            continue
        b = glue(f, g, m, method="split")
        assert a.h == b.h and (a.t1, a.t2, a.s1, a.s2) == (b.t1, b.t2, b.s1, b.s2)


@settings(max_examples=25)
@given(st.lists(st.integers(-12, 12), min_size=6, max_size=6, unique=True))
def test_product_property_on_random_split_pairs(roots):
    # #J_C = #E #F computed entirely with the oracle counts
    f, g = Poly.from_roots(roots[:3]), Poly.from_roots(roots[3:])
    r = _first_good(f, g)
    assume(r is not None)
    h = r.curve.h
    bad = int(oracles.disc(f.c)) * int(oracles.disc(g.c))
    for p in good_primes([r.curve], 4, start=5):
        if bad % p == 0:
            continue
        ef = oracles.count_hyperelliptic(f.c, p) * oracles.count_hyperelliptic(g.c, p)
        n1 = oracles.count_hyperelliptic(h.c, p)
        n2 = oracles.count_hyperelliptic_p2(h.c, p)
        assert oracles.jacobian_order_g2(n1, n2, p) == ef


def test_irreducible_pair_matches_point_counts():
    E = instantiate("kubert", "7", Q(-16, 3)).curve
    F = instantiate("kubert", "9", Q(4)).curve
    ms = match_roots(as_cubic(E), as_cubic(F))
    assert len(ms) == 1 and ms[0].kind == "irreducible"
    r = glue(E, F, ms[0])
    assert all(cover_identities(r).values())
    C = r.curve
    for p in good_primes([C, E, F], 3):
        assert product_check(C, [E, F], p).ok
    # J has a rational point of order 63: 63 | #J(F_p)
    for p in good_primes([C], 4):
        assert jacobian_order(C, p).jacobian_order % 63 == 0


def test_semisplit_pair():
    rng = random.Random(3)
    found = 0
    while found < 2:
        t = Q(rng.randint(-20, 20), rng.randint(1, 9))
        try:
            E = instantiate("bform", "4", t).curve
        except DegenerateParameter:
            continue
        f = as_cubic(E)
        ms = match_roots(f, f)
        for m in ms:
            if m.kind == "semisplit" and m.match_poly != Poly([0, 1]):
                try:
                    r = glue(f, f, m)
                except IsomorphismMatching:
                    continue
                C = r.curve
                for p in good_primes([C, E], 2):
                    assert product_check(C, [E, E], p).ok
                found += 1


def test_self_glue_rotation_curve_with_square_discriminant():
    # y^2 = x^3 - 169x + 845 has a cyclic 2-division field
    L = LongWeierstrass(Q(0), Q(0), Q(0), Q(-169), Q(845))
    r = self_glue_rotation(L)
    C = r.curve
    for p in good_primes([C, L], 3):
        assert product_check(C, [L, L], p).ok
    with pytest.raises(ValueError):
        self_glue_rotation(LongWeierstrass(Q(0), Q(0), Q(0), Q(0), Q(-2)))
    with pytest.raises(ValueError):
        self_glue_rotation(BForm(Q(0), Q(-1)))


def test_orientation_swap_gives_the_reversed_sextic():
    f, g = Poly.from_roots([-1, 0, 2]), Poly.from_roots([-3, 1, 5])
    m = next(m for m in match_roots(f, g) if m.perm == (1, 2, 0))
    both = glue_both_orientations(f, g, m)
    r1, r2 = both["forward"], both["backward"]
    assert reversed_sextic(reversed_sextic(r1.h)) == r1.h
    # the two curves are isomorphic: equal #J at good primes
    C1, C2 = HyperellipticCurve(r1.h), HyperellipticCurve(r2.h)
    for p in good_primes([C1, C2], 3):
        assert jacobian_order(C1, p).jacobian_order == jacobian_order(C2, p).jacobian_order


def test_rejects_mismatched_matching():
    f, g = Poly.from_roots([-1, 0, 2]), Poly.from_roots([-3, 1, 5])
    m = match_roots(f, g)[0]
    with pytest.raises(ValueError):
        glue(g, f, m)
