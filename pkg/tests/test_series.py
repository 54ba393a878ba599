# -*- coding: utf-8 -*-
import pytest
from hypothesis import given
import hypothesis.strategies as st

from degenerate_eulerian.algebra import LAM, T, X, RatFun
from degenerate_eulerian.errors import MixedMainVariable, NonUnitConstantTerm, NonzeroConstantTerm
from degenerate_eulerian.generating import stirling1_column_series
from degenerate_eulerian.series import (
    Series,
    series_deg_pow,
    series_exp,
    series_from_values,
    series_inv,
    series_log1p_scaled,
    series_mul,
)

unit_series = st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=5).filter(
    lambda cs: cs[0] != 0
).map(lambda cs: Series("x", tuple(cs)))


class TestConstruction:
    def test_coefficients_may_not_mention_main_variable(self):
        with pytest.raises(ValueError):
            Series("x", (X,))

    def test_empty_series_rejected(self):
        with pytest.raises(ValueError):
            Series("x", ())

    def test_from_poly_splits_by_powers(self):
        s = Series.from_poly(1 + 2 * X + LAM * X ** 2, "x", 3)
        assert [c == e for c, e in zip(s, (1, 2, LAM, 0))] == [True] * 4

    def test_from_values_divides_by_factorials(self):
        s = series_from_values([1, 1, 2, 6], "x")
        assert all(c == 1 for c in s)


class TestArithmetic:
    def test_product_truncates_to_smaller_order(self):
        product = Series("x", (1, 1)) * Series("x", (1, 2, 3))
        assert product.order == 1
        assert product[1] == 3

    def test_mixed_main_variable(self):
        with pytest.raises(MixedMainVariable):
            series_mul(Series("x", (1, 1)), Series("t", (1, 1)))

    def test_shift_keeps_order(self):
        shifted = Series("x", (1, 2, 3)).shift(1)
        assert shifted.order == 2
        assert [c == e for c, e in zip(shifted, (0, 1, 2))] == [True] * 3

    def test_scalar_added_to_constant_term(self):
        s = 2 - Series("x", (1, 1))
        assert s[0] == 1 and s[1] == -1

    def test_negative_power_is_inverse(self):
        s = Series("x", (1, -1, 0, 0))
        assert all(c == 1 for c in s.power(-1))

    @given(unit_series)
    def test_inverse_times_series_is_one(self, s):
        product = series_mul(s, series_inv(s))
        assert product[0] == 1
        assert all(not c for c in product.coeffs[1:])

    def test_inverse_needs_unit(self):
        with pytest.raises(NonUnitConstantTerm):
            series_inv(Series("x", (0, 1)))


class TestKernels:
    def test_log1p(self):
        s = series_log1p_scaled(3)
        assert [c == RatFun(e[0], e[1]) for c, e in zip(s, ((0, 1), (1, 1), (-1, 2), (1, 3)))] == [True] * 4

    def test_stirling1_kernel(self):
        # (log(1+v))^2/2!: coefficient of v^3 is S_1(3,2)/3! = -3/6
        assert stirling1_column_series(2, 3)[3] == RatFun(-1, 2)

    def test_exp_of_scaled_log(self):
        inner = series_log1p_scaled(2).scale_variable(LAM) * RatFun(T - 1, LAM)
        expanded = series_exp(inner)
        assert expanded[1] == T - 1
        assert expanded[2] == RatFun((T - 1) * (T - 1 - LAM), 2)

    def test_exp_needs_zero_constant_term(self):
        with pytest.raises(NonzeroConstantTerm):
            series_exp(Series("x", (1, 1)))

    def test_deg_pow_matches_exp_log(self):
        inner = series_log1p_scaled(5).scale_variable(LAM) * RatFun(T - 1, LAM)
        via_exp = series_exp(inner)
        direct = series_deg_pow(T - 1, 5)
        assert all(a == b for a, b in zip(via_exp, direct))

    def test_ordered_bell_reciprocal(self):
        inv = series_inv(2 - series_deg_pow(1, 2))
        assert inv[0] == 1
        assert inv[1] == 1
        assert inv[2] == RatFun(3 - LAM, 2)

    def test_deg_pow_at_lambda_zero_is_exponential(self):
        s = series_deg_pow(X, 3, "t").subs({"λ": 0})
        assert s[3] == RatFun(X ** 3, 6)
