"""Quasipolynomial fitting, lattice-point counting, and core polynomials."""

from fractions import Fraction
from math import comb

import pytest

from corelattice import ehrhart as E
from corelattice.errors import FitValidationError


def test_lagrange_coefficients():
    coeffs = E.lagrange_coefficients([(0, 1), (1, 2), (2, 5)])  # x^2 + 1
    assert E.poly_eval(coeffs, 0) == 1
    assert E.poly_eval(coeffs, 1) == 2
    assert E.poly_eval(coeffs, 2) == 5
    assert coeffs == (Fraction(1), Fraction(0), Fraction(1))
    with pytest.raises(ValueError):
        E.lagrange_coefficients([(0, 1), (0, 2)])


def test_poly_divexact():
    num = (Fraction(-1), Fraction(0), Fraction(1))  # x^2 - 1
    den = (Fraction(1), Fraction(1))  # x + 1
    assert E.poly_divexact(num, den) == (Fraction(-1), Fraction(1))
    with pytest.raises(ArithmeticError):
        E.poly_divexact((Fraction(1), Fraction(1)), (Fraction(0), Fraction(1)))


def test_triangle_counts_and_quasipolynomial():
    tri = E.halved_right_triangle()
    assert [tri.count(t) for t in range(1, 5)] == [2, 4, 6, 9]
    fit = E.fit_quasipolynomial({t: tri.count(t) for t in range(1, 9)}, 2, 2)
    assert fit.constituents[0] == (Fraction(1), Fraction(1), Fraction(1, 4))
    assert fit.constituents[1] == (Fraction(3, 4), Fraction(1), Fraction(1, 4))
    assert fit.degree == 2
    assert fit.evaluate(10) == (100 + 40 + 4) / 4
    assert fit.to_json_dict() == {
        "period": 2,
        "constituents": [["1", "1", "1/4"], ["3/4", "1", "1/4"]],
    }


def test_fit_constant_series():
    fit = E.fit_quasipolynomial({t: 7 for t in range(1, 6)}, 1, 0)
    assert fit.degree == 0 and fit.evaluate(123) == 7


def test_quasipolynomial_json_round_trip():
    tri = E.halved_right_triangle()
    fit = E.fit_quasipolynomial({t: tri.count(t) for t in range(1, 9)}, 2, 2)
    again = E.Quasipolynomial.from_json_dict(fit.to_json_dict())
    assert again == fit
    assert again.evaluate(9) == fit.evaluate(9)


def test_fitted_count_matches_catalan_formula_beyond_samples():
    from corelattice.simplex import rational_catalan

    f, _, _ = E.fit_core_polynomials(4)
    for b in (15, 19, 23):
        assert E.poly_eval(f, b) == rational_catalan(4, b)


def test_fit_validation_errors():
    tri = E.halved_right_triangle()
    samples = {t: tri.count(t) for t in range(1, 9)}
    with pytest.raises(FitValidationError):
        E.fit_quasipolynomial(samples, 1, 2)  # wrong period
    with pytest.raises(ValueError):
        E.fit_quasipolynomial({1: 1, 2: 2}, 1, 2)  # too few samples


def test_standard_simplex_polynomial():
    for n in (2, 3):
        sim = E.standard_simplex(n)
        fit = E.fit_quasipolynomial({b: sim.count(b) for b in range(1, n + 4)}, 1, n)
        for b in range(1, 9):
            assert fit.evaluate(b) == comb(n + b, b)


def test_vertices_and_bad_polytopes():
    seg = E.unit_segment()
    assert seg.vertices() == [(Fraction(0),), (Fraction(1),)]
    tri = E.halved_right_triangle()
    assert (Fraction(1, 2), Fraction(0)) in tri.vertices()
    with pytest.raises(ValueError):
        E.RationalPolytope.from_inequalities(1, [((1,), 1)])  # unbounded


def test_interior_counts():
    seg = E.unit_segment()
    assert [seg.count(t, interior=True) for t in range(1, 5)] == [0, 1, 2, 3]
    tri = E.halved_right_triangle()
    assert tri.count(2, interior=True) == 0
    assert tri.count(4, interior=True) == 1  # only (1, 1) satisfies 2x + y < 4 strictly


def test_reciprocity_checks():
    assert E.reciprocity_check(E.unit_segment(), 12)
    assert E.reciprocity_check(E.halved_right_triangle(), 16, period=2)
    assert E.reciprocity_check(E.standard_simplex(2), 14)
    assert E.reciprocity_check(E.unit_segment(), 16, weight={(2,): 1})
    assert E.reciprocity_check(E.halved_right_triangle(), 20, period=2, weight={(1, 0): 1, (0, 1): 1})
    with pytest.raises(ValueError):
        E.reciprocity_check(E.unit_segment(), 3)


def test_weighted_sums():
    seg = E.unit_segment()
    # sum of squares over [0, t] and its interior
    assert seg.weighted_sum(4, {(2,): 1}) == 1 + 4 + 9 + 16
    assert seg.weighted_sum(4, {(2,): 1}, interior=True) == 1 + 4 + 9
    assert seg.weighted_sum(3, {(1,): 1}, negate=True) == -(1 + 2 + 3)


def test_core_series():
    assert E.core_count_series(3, 1, 4) == {1: 1, 4: 5, 7: 12, 10: 22}
    assert E.core_count_series(2, 1, 4) == {1: 1, 3: 2, 5: 3, 7: 4}
    assert E.core_qsum_series(3, 1, 2) == {1: 0, 4: 10}
    with pytest.raises(ValueError):
        E.core_count_series(4, 2, 3)


def test_fit_core_polynomials():
    f, g, p = E.fit_core_polynomials(3)
    # counts: (b+1)(b+2)/6; average: (b+4)*2*(b-1)/24
    assert f == (Fraction(1, 3), Fraction(1, 2), Fraction(1, 6))
    assert p == (Fraction(-1, 3), Fraction(1, 4), Fraction(1, 12))
    assert E.poly_degree(g) == 4
    f2, g2, p2 = E.fit_core_polynomials(2)
    assert p2 == (Fraction(-1, 8), Fraction(1, 12), Fraction(1, 24))  # (b+3)(b-1)/24


def test_check_root_structure():
    for a in range(2, 6):
        assert E.check_root_structure(a), a
