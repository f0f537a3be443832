from fractions import Fraction as Q

import numpy as np
import pytest
from hypothesis import given, strategies as st

from splitjac.ffield import GF, is_prime, reduce_rational

FIELDS = [(3, 1), (5, 1), (7, 2), (5, 3), (11, 2), (3, 3)]


@pytest.mark.parametrize("p,k", FIELDS)
def test_field_axioms_by_exhaustion(p, k):
    F = GF(p, k)
    els = list(F.elements())
    assert len(els) == p**k
    nonzero = [x for x in els if x]
    for x in nonzero[:20]:
        assert x * x.inverse() == F.one
        assert x ** (F.q - 1) == F.one
    # exactly half the nonzero elements are squares
    assert sum(x.chi() == 1 for x in nonzero) == (F.q - 1) // 2


@pytest.mark.parametrize("p,k", FIELDS)
def test_generator_has_full_order(p, k):
    F = GF(p, k)
    g = F.generator()
    seen = set()
    x = F.one
    for _ in range(F.q - 1):
        seen.add(x.code())
        x = x * g
    assert len(seen) == F.q - 1


@pytest.mark.parametrize("p,k", FIELDS)
def test_vectorised_ops_match_scalar(p, k):
    F = GF(p, k)
    a = F.all_elements()
    b = np.roll(a, 7, axis=0)
    prod = F.vmul(a, b)
    sums = F.vadd(a, b)
    chi = F.vchi(a)
    for i in range(0, F.q, max(1, F.q // 25)):
        x, y = F.from_code(i), F.from_code(int(F.codes(b[i:i + 1])[0]))
        assert F.codes(prod[i:i + 1])[0] == (x * y).code()
        assert F.codes(sums[i:i + 1])[0] == (x + y).code()
        assert chi[i] == x.chi()


@given(st.integers(-10**6, 10**6), st.integers(1, 10**4), st.sampled_from([3, 5, 7, 11, 13, 101]))
def test_reduce_rational(n, d, p):
    if Q(n, d).denominator % p == 0:
        with pytest.raises(ZeroDivisionError):
            reduce_rational(Q(n, d), p)
        return
    r = reduce_rational(Q(n, d), p)
    assert (r * d - n) % p == 0


def test_rejects_bad_characteristic():
    with pytest.raises(ValueError):
        GF(2)
    with pytest.raises(ValueError):
        GF(9)
    with pytest.raises(ValueError):
        GF(3, 4)
    assert is_prime(343) is False and is_prime(7)


def test_prime_subfield_characters_in_extensions():
    # every element of F_p is a square in F_{p^2}
    F = GF(7, 2)
    assert all(F(a).chi() == 1 for a in range(1, 7))
    F3 = GF(7, 3)
    assert [F3(a).chi() for a in range(1, 7)] == [GF(7)(a).chi() for a in range(1, 7)]
