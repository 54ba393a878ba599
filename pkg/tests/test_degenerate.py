# -*- coding: utf-8 -*-
import pytest

from degenerate_eulerian.algebra import LAM, Q, T, X, RatFun, render, specialize
from degenerate_eulerian.classical import eulerian_number, eulerian_poly
from degenerate_eulerian.degenerate import (
    DegenerateEulerianNumber,
    DegenerateEulerianPoly,
    DegenerateFactorial,
    QMomentExpression,
    deg_eulerian_at_minus_q,
    deg_eulerian_number,
    deg_eulerian_number_closed,
    deg_eulerian_number_from_poly,
    deg_eulerian_poly,
    deg_eulerian_poly_frobenius,
    deg_eulerian_poly_recursive,
    deg_eulerian_poly_series,
    deg_falling,
    deg_ordered_bell,
    deg_ordered_bell_from_numbers,
    deg_ordered_bell_frobenius,
    deg_ordered_bell_poly,
    deg_ordered_bell_series_values,
    deg_rising,
    deg_unsigned_stirling1,
    falling_at_t_minus_one,
    fermionic_moment,
    h_at_minus_q,
    q_moment_closed_form,
    q_moment_series_values,
    rising_bridge,
)
from degenerate_eulerian.errors import IndexOutOfRange, NegativeIndex


class TestFactorials:
    def test_falling_and_rising(self):
        assert deg_falling(0) == 1
        assert deg_falling(2) == X ** 2 - X * LAM
        assert deg_rising(2) == X ** 2 + X * LAM

    def test_falling_at_t_minus_one(self):
        assert falling_at_t_minus_one(2) == (T - 1) * (T - 1 - LAM)

    def test_mirror(self):
        for n in range(6):
            assert DegenerateFactorial.rising(n).mirrored() == deg_rising(n)
            assert DegenerateFactorial.falling(n).mirrored() == deg_falling(n)

    def test_negative(self):
        with pytest.raises(NegativeIndex):
            deg_rising(-1)


class TestDegenerateEulerianPolynomials:
    def test_golden(self):
        assert deg_eulerian_poly(0) == 1
        assert deg_eulerian_poly(1) == 1
        assert deg_eulerian_poly(2) == 1 + T - LAM

    def test_four_way_agreement(self):
        for n in range(11):
            primary = deg_eulerian_poly(n)
            assert deg_eulerian_poly_recursive(n) == primary, n
            assert deg_eulerian_poly_series(n) == primary, n
            assert deg_eulerian_poly_frobenius(n) == primary, n

    def test_lambda_zero_limit(self):
        for n in range(9):
            assert DegenerateEulerianPoly.compute(n).at_lambda_zero() == eulerian_poly(n)

    def test_degree_bounds(self):
        for n in range(13):
            DegenerateEulerianPoly.compute(n)
        with pytest.raises(ValueError):
            DegenerateEulerianPoly(2, T ** 2)
        with pytest.raises(ValueError):
            DegenerateEulerianPoly(0, 1 + T)


class TestDegenerateEulerianNumbers:
    def test_golden(self):
        assert deg_eulerian_number(2, 0) == 1 - LAM
        assert deg_eulerian_number(2, 1) == 1
        assert deg_eulerian_number(2, 2) == 0

    def test_three_forms_agree(self):
        for n in range(11):
            for l in range(n + 1):
                value = deg_eulerian_number(n, l)
                assert deg_eulerian_number_closed(n, l) == value, (n, l)
                assert deg_eulerian_number_from_poly(n, l) == value, (n, l)

    def test_numbers_read_from_polynomial(self):
        assert DegenerateEulerianPoly.compute(3).numbers() == [deg_eulerian_number(3, l) for l in range(3)]

    def test_lambda_zero_gives_eulerian_numbers(self):
        for n in range(1, 7):
            for l in range(n):
                assert specialize(deg_eulerian_number(n, l), {"λ": 0}) == eulerian_number(n, l)

    def test_index_range(self):
        with pytest.raises(IndexOutOfRange):
            deg_eulerian_number(2, 3)
        with pytest.raises(ValueError):
            DegenerateEulerianNumber(2, 0, 1 + T)
        assert DegenerateEulerianNumber.compute(2, 0).value == 1 - LAM


class TestOrderedBell:
    def test_golden(self):
        assert deg_ordered_bell(2) == 3 - LAM

    def test_chain_agrees(self):
        series = deg_ordered_bell_series_values(10)
        for n in range(11):
            value = deg_ordered_bell(n)
            assert deg_ordered_bell_from_numbers(n) == value
            assert deg_ordered_bell_frobenius(n) == value
            assert series[n] == value

    def test_fubini_numbers(self):
        assert [specialize(deg_ordered_bell(n), {"λ": 0}) for n in range(5)] == [1, 1, 3, 13, 75]

    def test_polynomials_at_zero_are_numbers(self):
        for n in range(5):
            assert specialize(deg_ordered_bell_poly(n), {"x": 0}) == deg_ordered_bell(n)


class TestStirlingAndMoments:
    def test_unsigned_stirling(self):
        assert deg_unsigned_stirling1(3, 1) == 2 * LAM ** 2
        assert deg_unsigned_stirling1(3, 3) == 1
        assert specialize(deg_unsigned_stirling1(4, 2), {"λ": 1}) == 11

    def test_h_at_minus_q(self):
        assert h_at_minus_q(0) == 1
        assert render(h_at_minus_q(1)) == "-1/(1+q)"
        assert h_at_minus_q(2) == RatFun(1 - Q, (1 + Q) ** 2)

    def test_moment_golden(self):
        assert fermionic_moment(0) == 1
        assert fermionic_moment(1) == RatFun(-1, 1 + Q)
        assert fermionic_moment(2) == RatFun(1 - Q - LAM, (1 + Q) ** 2)

    def test_moment_equals_closed_form(self):
        for n in range(7):
            assert fermionic_moment(n) == q_moment_closed_form(n), n

    def test_q_form(self):
        series = q_moment_series_values(6)
        for n in range(7):
            assert deg_eulerian_at_minus_q(n) == series[n], n

    def test_rising_bridge(self):
        for n in range(11):
            left, right = rising_bridge(n)
            assert left == right

    def test_moment_denominators(self):
        for n in range(7):
            moment = QMomentExpression.moment(n)
            assert (moment.value * (1 + Q) ** n).is_polynomial
        with pytest.raises(ValueError):
            QMomentExpression(1, RatFun(1, Q))
