import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dsskit.contfrac import ContinuedFraction, canonicalize, convergents, evaluate, from_fraction


@pytest.mark.parametrize("p,q,coeffs", [
    (10, 23, (0, 2, 3, 3)),
    (1, 1, (0, 1)),
    (0, 1, (0,)),
    (1, 2, (0, 2)),
    (3, 5, (0, 1, 1, 2)),
    (5, 8, (0, 1, 1, 1, 2)),
])
def test_known_expansions(p, q, coeffs):
    cf = from_fraction(p, q)
    assert cf.coeffs == coeffs
    assert cf.value() == (p, q)


def test_depth_and_parity():
    cf = from_fraction(10, 23)
    assert cf.depth == 3 and cf.parity == "odd" and not cf.is_even
    assert from_fraction(0, 1).depth == 0 and from_fraction(0, 1).is_even
    assert str(cf) == "[0,2,3,3]"


def test_convergent_table():
    # k = -1 .. 3
    assert convergents(from_fraction(10, 23)) == [(1, 0), (0, 1), (1, 2), (3, 7), (10, 23)]


@pytest.mark.parametrize("bad", [(1, 2), (0, 0), (0, 2, 1), ()])
def test_rejects_noncanonical(bad):
    with pytest.raises(ValueError):
        ContinuedFraction(bad)


@pytest.mark.parametrize("p,q", [(3, 2), (2, 4), (1, 0), (-1, 3)])
def test_from_fraction_rejects(p, q):
    with pytest.raises(ValueError):
        from_fraction(p, q)


def test_canonicalize_merges_trailing_one():
    assert canonicalize([0, 2, 1]).coeffs == (0, 3)
    assert canonicalize([0, 1]).coeffs == (0, 1)
    assert canonicalize([0, 1, 1]).coeffs == (0, 2)


def test_evaluate_allows_zero_coefficients():
    # [0, 0, 1, 1] = 0 + 1/(0 + 1/(1 + 1/1)) = 2
    assert evaluate([0, 0, 1, 1]) == 2


fractions = st.integers(1, 500).flatmap(lambda q: st.tuples(st.integers(0, q), st.just(q))).filter(
    lambda t: math.gcd(*t) == 1)


@given(fractions)
def test_roundtrip_and_determinant(t):
    p, q = t
    cf = from_fraction(p, q)
    assert cf.fraction() == Fraction(p, q)
    assert from_fraction(*cf.value()) == cf
    table = convergents(cf)
    for k in range(1, len(table)):
        (p1, q1), (p0, q0) = table[k], table[k - 1]
        # table row k holds index k - 1; the determinant alternates in sign
        assert p1 * q0 - p0 * q1 == (-1) ** k


@given(st.lists(st.integers(1, 9), min_size=1, max_size=8))
def test_canonical_value_is_preserved(u):
    raw = [0] + u
    assert canonicalize(raw).fraction() == evaluate(raw)
