# -*- coding: utf-8 -*-
"""
Generating functions as (numerator, denominator) series pairs.

Each generating function is built from truncated series of its numerator
and denominator. Bindings fix free parameters to exact rationals before
the denominator is inverted, so a binding that kills the constant term of
the denominator surfaces as a pole instead of a division error deep inside
series_inv.
"""

import logging
from dataclasses import dataclass
from math import factorial
from typing import Callable, Dict, Mapping, Optional, Tuple

from .algebra import LAM, Q, T, U, X, RatFun, Scalar, rational, render, variable_name
from .errors import PoleEncountered, UnusedBinding
from .series import (
    Series,
    series_deg_pow,
    series_exp,
    series_inv,
    series_log1p_scaled,
    series_mul,
)

logger = logging.getLogger(__name__)

SeriesPair = Tuple[Series, Series]


@dataclass(frozen=True)
class GeneratingFunction:
    """
    A quotient numerator/denominator of two truncated series.

    ``uses`` lists the free parameters; the main variable is the expansion
    variable and is never bindable.
    """
    name: str
    formula: str
    main_var: str
    uses: Tuple[str, ...]
    build: Callable[[int], SeriesPair]

    def check_bindings(self, bindings: Optional[Mapping[str, Scalar]]) -> Dict[str, Scalar]:
        checked = {}
        for var, value in (bindings or {}).items():
            name = variable_name(var)
            if name not in self.uses:
                raise UnusedBinding(
                    f"{self.name} does not use {name} (free parameters: {', '.join(self.uses)})"
                )
            checked[name] = rational(value)
        return checked

    def pair(self, order: int, bindings: Optional[Mapping[str, Scalar]] = None) -> SeriesPair:
        if order < 0:
            raise ValueError(f"order must be nonnegative, got {order}")
        checked = self.check_bindings(bindings)
        numerator, denominator = self.build(order)
        if checked:
            numerator, denominator = numerator.subs(checked), denominator.subs(checked)
            if not denominator[0]:
                described = ", ".join(f"{v}={render(a)}" for v, a in checked.items())
                raise PoleEncountered(f"{self.name}: constant term of the denominator vanishes at {described}")
        return numerator, denominator

    def expand(self, order: int, bindings: Optional[Mapping[str, Scalar]] = None) -> Series:
        """Truncated series of the quotient up to main_var^order."""
        numerator, denominator = self.pair(order, bindings)
        logger.debug("expanding %s to order %d with %s", self.name, order, dict(bindings or {}))
        return series_mul(numerator, series_inv(denominator))

    def sequence(self, order: int, bindings: Optional[Mapping[str, Scalar]] = None):
        """Sequence values: j! times the coefficient of main_var^j."""
        return self.expand(order, bindings).egf_values()


# =============================================================================
# Builders
# =============================================================================

def _exp_linear(coef, var: str, order: int) -> Series:
    """exp(coef·v) for a coefficient free of v."""
    return series_exp(Series(var, (0, coef) + (0,) * (order - 1))) if order else Series.constant(1, var, 0)


def _eulerian(order: int) -> SeriesPair:
    # (1-t) / (e^{x(t-1)} - t)
    numerator = Series.constant(1 - T, "x", order)
    denominator = _exp_linear(T - 1, "x", order) - T
    return numerator, denominator


def _deg_eulerian(order: int) -> SeriesPair:
    # (1-t) / ((1+λx)^{(t-1)/λ} - t)
    numerator = Series.constant(1 - T, "x", order)
    denominator = series_deg_pow(T - 1, order, "x") - T
    return numerator, denominator


def _ordered_bell(order: int) -> SeriesPair:
    # (1+λt)^{x/λ} / (2 - (1+λt)^{1/λ})
    numerator = series_deg_pow(X, order, "t")
    denominator = 2 - series_deg_pow(1, order, "t")
    return numerator, denominator


def _frobenius_euler(order: int) -> SeriesPair:
    # (1-u) e^{xt} / (e^t - u)
    numerator = _exp_linear(X, "t", order) * (1 - U)
    denominator = _exp_linear(1, "t", order) - U
    return numerator, denominator


def _q_moment(order: int) -> SeriesPair:
    # (1+q) / (q + (1+λt)^{-(1+q)/λ})
    numerator = Series.constant(Q + 1, "t", order)
    denominator = series_deg_pow(-(Q + 1), order, "t") + Q
    return numerator, denominator


GENERATING_FUNCTIONS: Dict[str, GeneratingFunction] = {
    "eulerian": GeneratingFunction(
        "eulerian", "(1-t)/(e^(x(t-1))-t)", "x", ("t",), _eulerian,
    ),
    "deg-eulerian": GeneratingFunction(
        "deg-eulerian", "(1-t)/((1+λx)^((t-1)/λ)-t)", "x", ("t", "λ"), _deg_eulerian,
    ),
    "ordered-bell": GeneratingFunction(
        "ordered-bell", "(1+λt)^(x/λ)/(2-(1+λt)^(1/λ))", "t", ("x", "λ"), _ordered_bell,
    ),
    "frobenius-euler": GeneratingFunction(
        "frobenius-euler", "(1-u)e^(xt)/(e^t-u)", "t", ("x", "u"), _frobenius_euler,
    ),
    "q-moment": GeneratingFunction(
        "q-moment", "(1+q)/(q+(1+λt)^(-(1+q)/λ))", "t", ("q", "λ"), _q_moment,
    ),
}


def get_generating_function(name: str) -> GeneratingFunction:
    try:
        return GENERATING_FUNCTIONS[name]
    except KeyError:
        raise ValueError(
            f"Unknown generating function: {name}. Use one of {', '.join(GENERATING_FUNCTIONS)}."
        ) from None


# =============================================================================
# Series Built From Composition (independent of the quotient builders above)
# =============================================================================

def deg_eulerian_exp_log(order: int) -> Series:
    """
    (1-t) / (exp(((t-1)/λ)·log(1+λx)) - t), composed through exp and log.

    The exponent series has polynomial coefficients: each power of λ from
    log(1+λx) absorbs the 1/λ in front.
    """
    inner = series_log1p_scaled(order, "x").scale_variable(LAM) * RatFun(T - 1, LAM)
    denominator = series_exp(inner) - T
    return series_mul(Series.constant(1 - T, "x", order), series_inv(denominator))


def deg_ordered_bell_numbers_series(order: int) -> Series:
    """1 / (2 - (1+λx)^{1/λ}) in x, the x = 0 case of the ordered-Bell generating function."""
    return series_inv(2 - series_deg_pow(1, order, "x"))


def stirling1_column_series(k: int, order: int, var: str = "t") -> Series:
    """(log(1+v))^k / k!."""
    column = series_log1p_scaled(order, var).power(k)
    return column * RatFun(1, factorial(k))


def stirling2_column_series(k: int, order: int, var: str = "t") -> Series:
    """(e^v - 1)^k / k!."""
    column = (_exp_linear(1, var, order) - 1).power(k)
    return column * RatFun(1, factorial(k))

