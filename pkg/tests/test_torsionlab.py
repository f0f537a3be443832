import itertools
import math
from fractions import Fraction as Q

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form

from splitjac.elliptic import O, BForm
from splitjac.torsionlab import (
    AbGroup,
    PatternError,
    add3torsion_partner,
    halving_condition,
    halving_field,
    iota,
    is_nonsplit,
    isotropic_census,
    maximal_isotropics,
    partner_point_order,
    quotient,
    smith_diagonal,
    torsion_image_structure,
    _pair,
)

# y^2 = x^3 - 25x has rank one, generated mod torsion by (-4, 6)
CONGRUENT = BForm(Q(0), Q(-25))
P0 = (Q(-4), Q(6))


def _multiples(E, P, n):
    out, R = [], P
    for _ in range(n):
        out.append(R)
        R = E.add(R, P)
    return out


def test_iota_is_a_homomorphism():
    E = CONGRUENT
    T = (Q(0), Q(0))
    pts = _multiples(E, P0, 3) + [E.add(P0, T), T, (Q(5), Q(0)), (Q(-5), Q(0))]
    for P, R in itertools.product(pts, repeat=2):
        S = E.add(P, R)
        if S is O or P == R:
            continue
        a, b, c = iota(E, P), iota(E, R), iota(E, S)
        assert tuple((x * y).key for x, y in zip(a.classes, b.classes)) == c.key
        assert a.norm_ok()
    # doubles land in the trivial class
    two_p = E.add(P0, P0)
    assert iota(E, two_p).key == ((1, 1),) * 3


def test_iota_at_two_torsion_uses_the_norm():
    # y^2 = x(x - 1)(x + 1) at (0, 0): the T_2 = 0 entry is forced to be (-1)(1)
    E = BForm(Q(0), Q(-1))
    v = iota(E, (Q(0), Q(0)))
    assert v.signed() == (1, -1, -1)
    assert v.norm_ok()
    with pytest.raises(ValueError):
        iota(E, O)
    with pytest.raises(PatternError):
        iota(BForm(Q(0), Q(1)), (Q(0), Q(0)))
    with pytest.raises(PatternError):
        iota(E, (Q(0), Q(0)), xs=[0, 1, 2])


def test_halving_condition():
    E = CONGRUENT
    ident = (0, 1, 2)
    assert halving_condition(E, E, ident, P0, P0)
    assert not halving_condition(E, E, ident, P0, (Q(0), Q(0)))
    # a doubled point pairs with any doubled point
    D = E.add(P0, P0)
    assert halving_condition(E, E, (1, 0, 2), D, E.add(D, D))
    with pytest.raises(PatternError):
        halving_condition(E, E, (0, 0, 1), P0, P0)


def test_halving_field():
    a, b = halving_field(CONGRUENT, (Q(0), Q(0)))
    assert (a.key, b.key) == ((1, 5), (-1, 5))
    with pytest.raises(PatternError):
        halving_field(CONGRUENT, (Q(1), Q(0)))


@settings(max_examples=40)
@given(st.lists(st.lists(st.integers(-12, 12), min_size=3, max_size=3), min_size=1, max_size=4))
def test_smith_diagonal_matches_sympy(rows):
    M = sympy.Matrix(rows)
    snf = smith_normal_form(M, domain=sympy.ZZ)
    expected = [abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0]
    assert sorted(smith_diagonal(rows)) == sorted(expected)


def _brute_quotient_order(orders, relations):
    span = {tuple(0 for _ in orders)}
    for v in relations:
        span |= {tuple((a + k * b) % m for a, b, m in zip(w, v, orders)) for w in span for k in range(math.lcm(*orders))}
    total = 1
    for o in orders:
        total *= o
    return total // len(span)


@settings(max_examples=40)
@given(st.lists(st.integers(1, 6), min_size=1, max_size=3).flatmap(
    lambda os: st.tuples(st.just(os), st.lists(st.tuples(*[st.integers(0, o - 1) for o in os]), max_size=2))))
def test_quotient_order_by_enumeration(data):
    orders, rels = data
    G = quotient(orders, [list(r) for r in rels])
    assert G.order == _brute_quotient_order(orders, rels)


def test_abgroup_normalises():
    assert AbGroup.from_orders([4, 6]).invariants == (2, 12)
    assert AbGroup.from_orders([2, 3]).invariants == (6,)
    assert str(AbGroup((2, 24))) == "Z/2 x Z/24"
    with pytest.raises(ValueError):
        AbGroup((4, 6))


@pytest.mark.parametrize("ge,gf", [((2, 6), (2, 8)), ((2, 6), (2, 6)), ((2, 4), (2, 8)), ((2, 2), (2, 8))])
def test_image_structure_has_the_right_order(ge, gf):
    for flag in (True, False):
        G = torsion_image_structure(ge, gf, flag)
        assert G.order * 4 == math.prod(ge) * math.prod(gf)


def test_image_structure_rejects_non_isomorphisms():
    with pytest.raises(ValueError):
        torsion_image_structure((2, 6), (8,))
    with pytest.raises(ValueError):
        torsion_image_structure((2, 6), (2, 8), pairs=[((1, 3), (0, 4)), ((1, 3), (1, 0))])


def test_add3_partner():
    c = add3torsion_partner(-169, 845)
    assert c.ok
    assert partner_point_order(c) == 3
    assert c.curve.contains(c.point)
    assert c.to_json()["certificate"] is True
    with pytest.raises(ValueError):
        add3torsion_partner(-1, 0)
    with pytest.raises(ValueError):
        add3torsion_partner(-7, 6)  # (x - 1)(x - 2)(x + 3)


def test_maximal_isotropics():
    gs = maximal_isotropics()
    for G in gs:
        assert len(G) == 8
        assert all(_pair(v, w) == 0 for v in G for w in G)
    # Lagrangians of a 6-dimensional symplectic F_2-space: (2 + 1)(4 + 1)(8 + 1)
    assert len(gs) == 3 * 5 * 9
    census = isotropic_census()
    assert census["total"] == 135 and census["split"] + census["nonsplit"] == 135
    assert not is_nonsplit(frozenset({0, 0b01, 0b0100, 0b010000, 0b0101, 0b010001, 0b010100, 0b010101}))
