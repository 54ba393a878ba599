# -*- coding: utf-8 -*-
"""
Truncated formal power series with rational-function coefficients.

A Series is c[0] + c[1]*v + ... + c[N]*v^N in one main variable v drawn
from the universe; the coefficients never mention v. Products, inverses,
exp and log follow the usual coefficient recurrences, all exact.
"""

import logging
from dataclasses import dataclass
from math import factorial
from typing import List, Mapping, Sequence, Tuple

from .algebra import (
    LAM,
    RatFun,
    Scalar,
    Value,
    coefficient,
    degree,
    to_ratfun,
    render,
    variable_name,
)
from .errors import MixedMainVariable, NonUnitConstantTerm, NonzeroConstantTerm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Series:
    """
    Truncated power series in ``main_var`` up to and including ``order``.

    Coefficients are stored as reduced RatFun values; the order of a
    combination of two series is the smaller of the two orders.
    """
    main_var: str
    coeffs: Tuple[RatFun, ...]

    def __post_init__(self):
        main_var = variable_name(self.main_var)
        coeffs = tuple(to_ratfun(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a series needs at least its constant coefficient")
        for j, c in enumerate(coeffs):
            if c.mentions(main_var):
                raise ValueError(f"coefficient {j} ({render(c)}) mentions the main variable {main_var}")
        object.__setattr__(self, "main_var", main_var)
        object.__setattr__(self, "coeffs", coeffs)

    # =========================================================================
    # Construction
    # =========================================================================

    @classmethod
    def constant(cls, value: Value, var: str, order: int) -> "Series":
        return cls(var, (to_ratfun(value),) + (to_ratfun(0),) * order)

    @classmethod
    def from_poly(cls, p: Value, var: str, order: int) -> "Series":
        """Split a polynomial (or a RatFun whose denominator is free of var) by powers of var."""
        rf = to_ratfun(p)
        if rf.den and degree(rf.den, var) > 0:
            raise ValueError(f"denominator of {render(rf)} mentions {var}")
        return cls(var, tuple(RatFun(coefficient(rf.num, var, j), rf.den) for j in range(order + 1)))

    # =========================================================================
    # Access
    # =========================================================================

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> RatFun:
        return self.coeffs[j]

    def __iter__(self):
        return iter(self.coeffs)

    def egf_coefficient(self, j: int) -> RatFun:
        """j! times the coefficient of v^j (the sequence value of an EGF)."""
        return self.coeffs[j] * factorial(j)

    def egf_values(self) -> List[RatFun]:
        return [self.egf_coefficient(j) for j in range(self.order + 1)]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return Series(self.main_var, self.coeffs[: order + 1])

    # =========================================================================
    # Arithmetic
    # =========================================================================

    def _check_partner(self, other: "Series") -> int:
        if other.main_var != self.main_var:
            raise MixedMainVariable(f"series in {self.main_var} combined with series in {other.main_var}")
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, Series):
            order = self._check_partner(other)
            return Series(self.main_var, tuple(self.coeffs[j] + other.coeffs[j] for j in range(order + 1)))
        try:
            head = self.coeffs[0] + to_ratfun(other)
        except TypeError:
            return NotImplemented
        return Series(self.main_var, (head,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return Series(self.main_var, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        try:
            factor = to_ratfun(other)
        except TypeError:
            return NotImplemented
        return Series(self.main_var, tuple(c * factor for c in self.coeffs))

    __rmul__ = __mul__

    def power(self, k: int) -> "Series":
        if k < 0:
            return series_inv(self).power(-k)
        result = Series.constant(1, self.main_var, self.order)
        base = self
        while k:
            if k & 1:
                result = series_mul(result, base)
            k >>= 1
            if k:
                base = series_mul(base, base)
        return result

    def scale_variable(self, factor: Value) -> "Series":
        """Substitute v ↦ factor·v, e.g. log(1+v) into log(1+λx)."""
        factor = to_ratfun(factor)
        out = []
        power = to_ratfun(1)
        for c in self.coeffs:
            out.append(c * power)
            power = power * factor
        return Series(self.main_var, tuple(out))

    def shift(self, k: int = 1) -> "Series":
        """Multiply by v^k, keeping the order."""
        zero = to_ratfun(0)
        return Series(self.main_var, ((zero,) * k + self.coeffs)[: self.order + 1])

    def subs(self, bindings: Mapping[str, Scalar]) -> "Series":
        """Specialize coefficient variables to exact rationals."""
        return Series(self.main_var, tuple(c.subs(bindings) for c in self.coeffs))

    def __str__(self):
        terms = [f"({render(c)})*{self.main_var}^{j}" for j, c in enumerate(self.coeffs) if c]
        return " + ".join(terms or ["0"]) + f" + O({self.main_var}^{self.order + 1})"


# =============================================================================
# Series Operations
# =============================================================================

def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated at min(a.order, b.order)."""
    order = a._check_partner(b)
    zero = to_ratfun(0)
    out = []
    for j in range(order + 1):
        total = zero
        for i in range(j + 1):
            if a.coeffs[i] and b.coeffs[j - i]:
                total = total + a.coeffs[i] * b.coeffs[j - i]
        out.append(total)
    return Series(a.main_var, tuple(out))


def series_inv(a: Series) -> Series:
    """Multiplicative inverse; the constant term must be nonzero."""
    if not a.coeffs[0]:
        raise NonUnitConstantTerm(f"series in {a.main_var} has zero constant term")
    head = a.coeffs[0].inverse()
    out = [head]
    for j in range(1, a.order + 1):
        total = to_ratfun(0)
        for i in range(1, j + 1):
            if a.coeffs[i] and out[j - i]:
                total = total + a.coeffs[i] * out[j - i]
        out.append(-(total * head))
    return Series(a.main_var, tuple(out))


def series_log1p_scaled(order: int, var: str = "x") -> Series:
    """
    log(1+v) = v - v^2/2 + v^3/3 - ... truncated at ``order``.

    log(1+λx) is obtained with ``.scale_variable(λ)``.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    coeffs = [to_ratfun(0)]
    for j in range(1, order + 1):
        coeffs.append(to_ratfun((-1) ** (j - 1)) / j)
    return Series(var, tuple(coeffs))


def series_exp(a: Series) -> Series:
    """exp of a series with zero constant term: b_j = (1/j) Σ_i i·a_i·b_{j-i}."""
    if a.coeffs[0]:
        raise NonzeroConstantTerm(f"exp needs a zero constant term, got {render(a.coeffs[0])}")
    out = [to_ratfun(1)]
    for j in range(1, a.order + 1):
        total = to_ratfun(0)
        for i in range(1, j + 1):
            if a.coeffs[i] and out[j - i]:
                total = total + a.coeffs[i] * out[j - i] * i
        out.append(total / j)
    return Series(a.main_var, tuple(out))


def series_deg_pow(alpha: Value, order: int, var: str = "x") -> Series:
    """
    (1+λv)^{α/λ} = Σ_m (α)_{m,λ} v^m/m!.

    The coefficient of v^m is α(α-λ)...(α-(m-1)λ)/m!, built by the product
    form so that λ = 0 gives the exponential coefficients α^m/m!.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    alpha = to_ratfun(alpha)
    if alpha.mentions(var):
        raise ValueError(f"exponent {render(alpha)} mentions the main variable {var}")
    coeffs = [to_ratfun(1)]
    for m in range(1, order + 1):
        coeffs.append(coeffs[-1] * (alpha - LAM * (m - 1)) / m)
    return Series(var, tuple(coeffs))


def series_from_values(values: Sequence[Value], var: str, exponential: bool = True) -> Series:
    """Series Σ values[j] v^j (divided by j! when ``exponential``)."""
    coeffs = []
    for j, value in enumerate(values):
        c = to_ratfun(value)
        coeffs.append(c / factorial(j) if exponential else c)
    return Series(var, tuple(coeffs))
