from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

import oracles
from splitjac.algebra import (
    InconclusiveFactorization,
    Poly,
    is_square,
    is_squarefree,
    match_roots,
    poly_disc,
    poly_gcd,
    poly_resultant,
    rat,
    rat_str,
    rational_roots,
    rational_sqrt,
    split_algebra,
    squarefree_part,
)

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x.numerator) < 10**6)
nonzero = rationals.filter(lambda x: x != 0)
small_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=6).map(Poly)


def test_rat_parsing_and_printing():
    assert rat("-16/3") == Q(-16, 3)
    assert rat(7) == Q(7)
    assert rat_str(Q(6, 2)) == "3"
    assert rat_str(Q(-1, 5)) == "-1/5"
    with pytest.raises((ValueError, ZeroDivisionError)):
        rat("1/0")


@given(nonzero)
def test_squarefree_part_matches_factorint(x):
    assert squarefree_part(x).key == oracles.squarefree_class(x)


@given(nonzero, nonzero)
def test_square_classes_multiply(x, y):
    assert (squarefree_part(x) * squarefree_part(y)).key == squarefree_part(x * y).key


@given(nonzero)
def test_squares_are_squares(x):
    assert is_square(x * x)
    assert rational_sqrt(x * x) == abs(x)
    assert squarefree_part(x * x).is_square()


def test_squarefree_part_known():
    assert squarefree_part(Q(-2964)).key == (-1, 741)
    assert squarefree_part(Q(50, 3)).key == (1, 6)
    assert not is_square(-1)
    assert rational_sqrt(Q(1432, 625) ** 2) == Q(1432, 625)


def test_squarefree_part_gives_up_on_huge_cofactors():
    big = (2**61 - 1) * (2**89 - 1)
    with pytest.raises(InconclusiveFactorization):
        squarefree_part(big, bound=1000)


def test_poly_arithmetic():
    p = Poly([1, 2, 3])
    q = Poly([0, 1])
    assert p + q == Poly([1, 3, 3])
    assert p * q == Poly([0, 1, 2, 3])
    assert (p * q).divmod(q) == (p, Poly([]))
    assert p(2) == 17
    assert p.compose(Poly([1, 1])) == Poly([6, 8, 3])
    assert p.derivative() == Poly([2, 6])
    assert Poly([2, 4]).monic() == Poly([Q(1, 2), 1])
    assert Poly([0, 0]).deg < 0


@given(small_polys, small_polys.filter(lambda p: p.deg >= 0))
def test_division_identity(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.deg < b.deg


@given(small_polys, small_polys)
def test_resultant_against_sympy(a, b):
    if a.deg < 1 or b.deg < 1:
        return
    assert poly_resultant(a, b) == oracles.resultant(a.c, b.c)


@given(small_polys)
def test_discriminant_against_sympy(a):
    if a.deg < 2:
        return
    assert poly_disc(a) == oracles.disc(a.c)


def test_gcd_and_squarefree():
    a = Poly.from_roots([1, 2, 3])
    b = Poly.from_roots([2, 3, 5])
    assert poly_gcd(a, b) == Poly.from_roots([2, 3])
    assert is_squarefree(a)
    assert not is_squarefree(a * Poly.from_roots([1]))


@given(st.lists(rationals, min_size=1, max_size=4, unique=True), st.integers(1, 5))
def test_rational_roots_recovers_roots(roots, lead):
    p = Poly.from_roots(roots).scale(lead) * Poly([1, 0, 1])  # x^2 + 1 has no rational roots
    assert rational_roots(p) == sorted(roots)


def test_rational_roots_against_sympy():
    f = Poly([-146398496, 0, 79136353, 0, -197570, 0, 897])
    assert rational_roots(f) == oracles.rational_roots(f.c)
    g = Poly([Q(-3, 4), Q(1, 2), 2, 1])
    assert rational_roots(g) == oracles.rational_roots(g.c)


def test_split_algebra_roots_multiply_like_numbers():
    f = Poly.from_roots([-1, 0, 2])
    A = split_algebra(f)
    u, v, w = A.u, A.v, A.w
    assert (u + v + w).rational() == 1
    assert (u * v * w).is_zero()


def _check_matchings(f, g, expected):
    ms = match_roots(f, g)
    assert len(ms) == expected
    for m in ms:
        assert m.verify()
        # g(match_poly(x)) vanishes modulo f, by a fresh computation
        assert not (g.compose(m.match_poly) % f.monic())
    return ms


def test_match_roots_split_gives_all_six():
    ms = _check_matchings(Poly.from_roots([-1, 0, 1]), Poly.from_roots([-2, 0, 2]), 6)
    assert sorted(m.perm for m in ms) == sorted(
        [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)])


def test_match_roots_semisplit_gives_two():
    f = Poly.from_roots([1]) * Poly([-2, 0, 1])
    g = Poly.from_roots([3]) * Poly([-8, 0, 1])
    ms = _check_matchings(f, g, 2)
    assert {m.sign for m in ms} == {1, -1}


def test_match_roots_irreducible_cyclic_cubic():
    # x^3 - 3x + 1 is cyclic: three automorphisms
    f = Poly([1, -3, 0, 1])
    _check_matchings(f, f, 3)


def test_match_roots_non_galois_cubic_identity_only():
    f = Poly([-2, 0, 0, 1])
    ms = _check_matchings(f, f, 1)
    assert ms[0].match_poly == Poly([0, 1])


def test_match_roots_rejects_different_discriminant_class():
    with pytest.raises(ValueError):
        match_roots(Poly([-2, 0, 0, 1]), Poly([-1, -1, 0, 1]))


def test_match_roots_inverse_round_trip():
    f = Poly([1, -3, 0, 1])
    for m in match_roots(f, f):
        assert m.inverse().verify()
