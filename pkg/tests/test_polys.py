"""Exact Laurent polynomial arithmetic."""

import doctest
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corelattice import polys
from corelattice.polys import LaurentPoly, LaurentPoly2

laurent_polys = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=5).map(LaurentPoly)


def test_module_doctests():
    result = doctest.testmod(polys)
    assert result.attempted > 0 and result.failed == 0


def test_canonical_form_drops_zeros():
    p = LaurentPoly({0: 1, 3: 0, -2: 5})
    assert p.items() == [(-2, 5), (0, 1)]
    assert (p - p).is_zero
    assert LaurentPoly.zero() == LaurentPoly({5: 0})


def test_arithmetic_and_evaluation():
    q = LaurentPoly.monomial(1)
    p = (LaurentPoly.one() + q) ** 3
    assert p == LaurentPoly({0: 1, 1: 3, 2: 3, 3: 1})
    assert p(1) == 8
    assert p(Fraction(1, 2)) == Fraction(27, 8)
    lp = LaurentPoly.monomial(-2, 4)
    assert lp(2) == 1
    assert (3 * q) == LaurentPoly({1: 3})


def test_divexact():
    num = LaurentPoly({0: 1, 1: 2, 2: 1})
    den = LaurentPoly({0: 1, 1: 1})
    assert num.divexact(den) == den
    with pytest.raises(ArithmeticError):
        LaurentPoly({0: 1, 2: 1}).divexact(den)
    shifted = LaurentPoly.monomial(-3) * num
    assert shifted.divexact(den) == LaurentPoly.monomial(-3) * den
    with pytest.raises(ZeroDivisionError):
        num.divexact(LaurentPoly.zero())


@settings(max_examples=200, deadline=None)
@given(laurent_polys, laurent_polys)
def test_divexact_inverts_multiplication(p, d):
    if d.is_zero:
        return
    assert (p * d).divexact(d) == p


def test_subs_power_and_serialization():
    p = LaurentPoly({0: 1, 1: 2, 3: -1})
    assert p.subs_power(3) == LaurentPoly({0: 1, 3: 2, 9: -1})
    pairs = p.to_pairs()
    assert pairs == [[0, "1"], [1, "2"], [3, "-1"]]
    assert LaurentPoly.from_pairs(pairs) == p
    assert str(LaurentPoly({0: 1, 2: 1})) == "1 + q^2"


def test_bivariate_arithmetic():
    q = LaurentPoly2.monomial(1, 0)
    t = LaurentPoly2.monomial(0, 1)
    p = q * q + q * t + t * t
    assert p.total() == 3
    assert p.swapped() == p
    asym = q * q + t
    assert asym.swapped() != asym
    assert (p - p).is_zero
    inv = LaurentPoly2.monomial(-1, 1)
    assert inv * q == t


def test_bivariate_serialization_and_transform():
    p = LaurentPoly2({(0, 0): 1, (2, -1): 3})
    triples = p.to_triples()
    assert triples == [[0, 0, "1"], [2, -1, "3"]]
    assert LaurentPoly2.from_triples(triples) == p
    mapped = p.map_exponents(lambda e, f: (f, e))
    assert mapped == p.swapped()
    with pytest.raises(ValueError):
        LaurentPoly2({(0, 0): 1, (1, 0): 1}).map_exponents(lambda e, f: (0, 0))
