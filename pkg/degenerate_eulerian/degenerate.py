# -*- coding: utf-8 -*-
"""
λ-degenerate sequences.

Implements:
- Degenerate falling and rising factorials (x)_{n,λ}, ⟨x⟩_{n,λ}
- Degenerate Eulerian polynomials A_{n,λ}(t): Stirling transform (primary),
  division recursion, exp∘log series and Frobenius-Euler form
- Degenerate Eulerian numbers ⟨n,l⟩_λ in three forms
- Degenerate ordered Bell numbers b_{n,λ} and polynomials b_{n,λ}(x)
- Degenerate unsigned Stirling numbers of the first kind
- q-moment expressions: H_n(-q), the fermionic moment and its closed form

Values that depend on the Stirling or Eulerian triangles take an optional
SequenceContext and are memoized in it; the rest are cached module-wide.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import List, Literal, Optional, Tuple

from .algebra import (
    LAM,
    Q,
    RING,
    T,
    X,
    MPoly,
    RatFun,
    coefficient,
    degree,
    poly_div_exact,
    specialize,
    substitute,
)
from .classical import eulerian_number, eulerian_poly, frobenius_euler_number
from .context import SequenceContext, default_context
from .errors import IndexOutOfRange, NegativeIndex, NonExactDivision
from .generating import GENERATING_FUNCTIONS, deg_eulerian_exp_log, deg_ordered_bell_numbers_series

logger = logging.getLogger(__name__)


def _require_nonnegative(n: int) -> None:
    if n < 0:
        raise NegativeIndex(f"n must be nonnegative, got {n}")


def _require_pair(n: int, l: int) -> None:
    if not 0 <= l <= n:
        raise IndexOutOfRange(f"({n},{l}) is outside 0 ≤ l ≤ n")


def _context(ctx: Optional[SequenceContext]) -> SequenceContext:
    return ctx if ctx is not None else default_context()


# =============================================================================
# Degenerate Factorials
# =============================================================================

@lru_cache(maxsize=None)
def deg_falling(n: int) -> MPoly:
    """(x)_{n,λ} = x(x-λ)...(x-(n-1)λ), with (x)_{0,λ} = 1."""
    _require_nonnegative(n)
    product = RING.one
    for k in range(n):
        product *= X - k * LAM
    return product


@lru_cache(maxsize=None)
def deg_rising(n: int) -> MPoly:
    """⟨x⟩_{n,λ} = x(x+λ)...(x+(n-1)λ), with ⟨x⟩_{0,λ} = 1."""
    _require_nonnegative(n)
    product = RING.one
    for k in range(n):
        product *= X + k * LAM
    return product


@lru_cache(maxsize=None)
def falling_at_t_minus_one(n: int) -> MPoly:
    """(t-1)_{n,λ}."""
    return substitute(deg_falling(n), "x", T - 1)


# =============================================================================
# Degenerate Eulerian Polynomials
# =============================================================================

def deg_eulerian_poly(n: int, ctx: Optional[SequenceContext] = None) -> MPoly:
    """A_{n,λ}(t) = Σ_{k=0}^n A_k(t) λ^{n-k} S_1(n,k)."""
    _require_nonnegative(n)
    ctx = _context(ctx)

    def compute() -> MPoly:
        return sum(
            (eulerian_poly(k) * LAM ** (n - k) * ctx.stirling1(n, k) for k in range(n + 1)),
            RING.zero,
        )

    return ctx.memoized(("deg_eulerian_poly", n), compute)


@lru_cache(maxsize=None)
def deg_eulerian_poly_recursive(n: int) -> MPoly:
    """
    A_{0,λ} = 1, A_{n,λ}(t) = (1/(t-1)) Σ_{k<n} C(n,k) A_{k,λ}(t) (t-1)_{n-k,λ}.

    Raises NonExactDivision when t-1 does not divide the sum.
    """
    _require_nonnegative(n)
    if n == 0:
        return RING.one
    total = sum(
        (comb(n, k) * deg_eulerian_poly_recursive(k) * falling_at_t_minus_one(n - k) for k in range(n)),
        RING.zero,
    )
    return poly_div_exact(total, T - 1, "t")


@lru_cache(maxsize=None)
def deg_eulerian_series_values(order: int) -> Tuple[MPoly, ...]:
    """A_{n,λ}(t) for n = 0..order, read off the exp∘log expansion of the generating function."""
    values = deg_eulerian_exp_log(order).egf_values()
    return tuple(value.as_poly() for value in values)


def deg_eulerian_poly_series(n: int) -> MPoly:
    _require_nonnegative(n)
    return deg_eulerian_series_values(n)[n]


@lru_cache(maxsize=None)
def frobenius_euler_at_t(k: int) -> RatFun:
    """H_k(t): the Frobenius-Euler number with its parameter u renamed to t."""
    return substitute(frobenius_euler_number(k), "u", T)


def deg_eulerian_poly_frobenius(n: int, ctx: Optional[SequenceContext] = None) -> MPoly:
    """
    A_{n,λ}(t) = Σ_k λ^{n-k} S_1(n,k) H_k(t) (t-1)^k.

    Each H_k(t)(t-1)^k clears to a polynomial; a leftover denominator
    raises NonExactDivision.
    """
    _require_nonnegative(n)
    ctx = _context(ctx)

    def compute() -> MPoly:
        total = RatFun(0)
        for k in range(n + 1):
            s1 = ctx.stirling1(n, k)
            if s1:
                total = total + frobenius_euler_at_t(k) * (s1 * LAM ** (n - k) * (T - 1) ** k)
        return total.as_poly()

    return ctx.memoized(("deg_eulerian_poly_frobenius", n), compute)


# =============================================================================
# Degenerate Eulerian Numbers
# =============================================================================

def deg_eulerian_number(n: int, l: int, ctx: Optional[SequenceContext] = None) -> MPoly:
    """⟨n,l⟩_λ = Σ_{k=l}^n ⟨k,l⟩ λ^{n-k} S_1(n,k), with ⟨k,l⟩ from the Eulerian triangle."""
    _require_pair(n, l)
    ctx = _context(ctx)

    def compute() -> MPoly:
        return sum(
            (ctx.eulerian(k, l) * ctx.stirling1(n, k) * LAM ** (n - k) for k in range(l, n + 1)),
            RING.zero,
        )

    return ctx.memoized(("deg_eulerian_number", n, l), compute)


def deg_eulerian_number_closed(n: int, l: int, ctx: Optional[SequenceContext] = None) -> MPoly:
    """
    ⟨n,l⟩_λ = Σ_{k=l}^n Σ_{m=0}^{l+1} C(k+1,m)(-1)^m (l+1-m)^k λ^{n-k} S_1(n,k).

    The inner sum is the closed form for ⟨k,l⟩, so the k = 0 term uses ⟨0,0⟩ = 1.
    """
    _require_pair(n, l)
    ctx = _context(ctx)
    return sum(
        (eulerian_number(k, l) * ctx.stirling1(n, k) * LAM ** (n - k) for k in range(l, n + 1)),
        RING.zero,
    )


def deg_eulerian_number_from_poly(n: int, l: int, ctx: Optional[SequenceContext] = None) -> MPoly:
    """Coefficient of t^l in A_{n,λ}(t)."""
    _require_pair(n, l)
    return coefficient(deg_eulerian_poly(n, ctx), "t", l)


# =============================================================================
# Degenerate Ordered Bell Numbers and Polynomials
# =============================================================================

def deg_ordered_bell(n: int, ctx: Optional[SequenceContext] = None) -> MPoly:
    """b_{n,λ} = A_{n,λ}(2)."""
    _require_nonnegative(n)
    return specialize(deg_eulerian_poly(n, ctx), {"t": 2})


def deg_ordered_bell_from_numbers(n: int, ctx: Optional[SequenceContext] = None) -> MPoly:
    """b_{n,λ} = Σ_l ⟨n,l⟩_λ 2^l."""
    _require_nonnegative(n)
    return sum((deg_eulerian_number(n, l, ctx) * 2 ** l for l in range(n + 1)), RING.zero)


def deg_ordered_bell_frobenius(n: int, ctx: Optional[SequenceContext] = None) -> MPoly:
    """b_{n,λ} = Σ_k λ^{n-k} S_1(n,k) H_k(2)."""
    _require_nonnegative(n)
    ctx = _context(ctx)
    total = RatFun(0)
    for k in range(n + 1):
        total = total + frobenius_euler_number(k).subs({"u": 2}) * (ctx.stirling1(n, k) * LAM ** (n - k))
    return total.as_poly()


@lru_cache(maxsize=None)
def deg_ordered_bell_series_values(order: int) -> Tuple[MPoly, ...]:
    """b_{n,λ} for n = 0..order from 1/(2-(1+λx)^{1/λ})."""
    return tuple(value.as_poly() for value in deg_ordered_bell_numbers_series(order).egf_values())


@lru_cache(maxsize=None)
def deg_ordered_bell_poly_values(order: int) -> Tuple[MPoly, ...]:
    """b_{n,λ}(x) for n = 0..order from (1+λt)^{x/λ}/(2-(1+λt)^{1/λ})."""
    values = GENERATING_FUNCTIONS["ordered-bell"].sequence(order)
    return tuple(value.as_poly() for value in values)


def deg_ordered_bell_poly(n: int) -> MPoly:
    _require_nonnegative(n)
    return deg_ordered_bell_poly_values(n)[n]


# =============================================================================
# Degenerate Unsigned Stirling Numbers of the First Kind
# =============================================================================

def deg_unsigned_stirling1(n: int, l: int) -> MPoly:
    """|S_{1,λ}(n,l)|: coefficient of x^l in ⟨x⟩_{n,λ}."""
    _require_pair(n, l)
    return coefficient(deg_rising(n), "x", l)


# =============================================================================
# q-Moment Expressions
# =============================================================================

@lru_cache(maxsize=None)
def h_at_minus_q(n: int) -> RatFun:
    """H_n(-q)."""
    _require_nonnegative(n)
    return substitute(frobenius_euler_number(n), "u", -Q)


@lru_cache(maxsize=None)
def fermionic_moment(n: int) -> RatFun:
    """
    Σ_l |S_{1,λ/(1+q)}(n,l)| H_l(-q).

    This is the moment of the degenerate rising factorial ⟨x⟩_{n,λ/(1+q)}
    once x^l integrates to H_l(-q).
    """
    _require_nonnegative(n)
    scaled = RatFun(LAM, Q + 1)
    total = RatFun(0)
    for l in range(n + 1):
        total = total + substitute(deg_unsigned_stirling1(n, l), "λ", scaled) * h_at_minus_q(l)
    return total


def q_moment_closed_form(n: int, ctx: Optional[SequenceContext] = None) -> RatFun:
    """(-1)^n A_{n,λ}(-q) / (1+q)^n."""
    _require_nonnegative(n)
    at_minus_q = substitute(deg_eulerian_poly(n, ctx), "t", -Q)
    return RatFun((-1) ** n * at_minus_q, (Q + 1) ** n)


def deg_eulerian_at_minus_q(n: int, ctx: Optional[SequenceContext] = None) -> RatFun:
    """Σ_k (-1)^k λ^{n-k} (1+q)^k S_1(n,k) H_k(-q)."""
    _require_nonnegative(n)
    ctx = _context(ctx)
    total = RatFun(0)
    for k in range(n + 1):
        s1 = ctx.stirling1(n, k)
        if s1:
            total = total + h_at_minus_q(k) * ((-1) ** k * s1 * LAM ** (n - k) * (Q + 1) ** k)
    return total


@lru_cache(maxsize=None)
def q_moment_series_values(order: int) -> Tuple[RatFun, ...]:
    """A_{n,λ}(-q) for n = 0..order from (1+q)/(q+(1+λt)^{-(1+q)/λ})."""
    return tuple(GENERATING_FUNCTIONS["q-moment"].sequence(order))


def rising_bridge(n: int) -> Tuple[RatFun, RatFun]:
    """
    Both sides of (-1)^n ⟨(1+q)x⟩_{n,λ} = (-1)^n (1+q)^n ⟨x⟩_{n,λ/(1+q)}.
    """
    _require_nonnegative(n)
    sign = (-1) ** n
    left = RatFun(substitute(deg_rising(n), "x", (Q + 1) * X) * sign)
    right = substitute(deg_rising(n), "λ", RatFun(LAM, Q + 1)) * (sign * (Q + 1) ** n)
    return left, right


# =============================================================================
# Typed Values
# =============================================================================

FactorialKind = Literal["falling", "rising"]


@dataclass(frozen=True)
class DegenerateEulerianPoly:
    """A_{n,λ}(t) with its degree bounds checked on construction."""
    n: int
    value: MPoly

    def __post_init__(self):
        bound = max(0, self.n - 1)
        if degree(self.value, "t") > bound or degree(self.value, "λ") > bound:
            raise ValueError(f"A_{{{self.n},λ}}(t) exceeds degree {bound} in t or λ")
        if self.n == 0 and self.value != 1:
            raise ValueError("A_{0,λ}(t) must be 1")
        if any(degree(self.value, v) > 0 for v in ("x", "u", "q")):
            raise ValueError("A_{n,λ}(t) may only mention t and λ")

    @classmethod
    def compute(cls, n: int, ctx: Optional[SequenceContext] = None) -> "DegenerateEulerianPoly":
        return cls(n, deg_eulerian_poly(n, ctx))

    def at_lambda_zero(self) -> MPoly:
        return specialize(self.value, {"λ": 0})

    def numbers(self) -> List[MPoly]:
        """⟨n,l⟩_λ for l = 0..max(0, n-1), read from the t-coefficients."""
        return [coefficient(self.value, "t", l) for l in range(max(1, self.n))]


@dataclass(frozen=True)
class DegenerateEulerianNumber:
    n: int
    l: int
    value: MPoly

    def __post_init__(self):
        _require_pair(self.n, self.l)
        if any(degree(self.value, v) > 0 for v in ("x", "t", "u", "q")):
            raise ValueError(f"⟨{self.n},{self.l}⟩_λ may only mention λ")

    @classmethod
    def compute(cls, n: int, l: int, ctx: Optional[SequenceContext] = None) -> "DegenerateEulerianNumber":
        return cls(n, l, deg_eulerian_number(n, l, ctx))


@dataclass(frozen=True)
class DegenerateFactorial:
    kind: FactorialKind
    n: int
    value: MPoly

    @classmethod
    def falling(cls, n: int) -> "DegenerateFactorial":
        return cls("falling", n, deg_falling(n))

    @classmethod
    def rising(cls, n: int) -> "DegenerateFactorial":
        return cls("rising", n, deg_rising(n))

    def mirrored(self) -> MPoly:
        """(-1)^n times the other kind evaluated at -x; equals value."""
        other = deg_falling(self.n) if self.kind == "rising" else deg_rising(self.n)
        return substitute(other, "x", -X) * (-1) ** self.n


@dataclass(frozen=True)
class QMomentExpression:
    """A rational function in q and λ whose denominator divides (1+q)^n."""
    n: int
    value: RatFun

    def __post_init__(self):
        try:
            poly_div_exact((Q + 1) ** self.n, self.value.den, "q")
        except NonExactDivision:
            raise ValueError(
                f"denominator of the moment of order {self.n} does not divide (1+q)^{self.n}"
            ) from None

    @classmethod
    def moment(cls, n: int) -> "QMomentExpression":
        return cls(n, fermionic_moment(n))
