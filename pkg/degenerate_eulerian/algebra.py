# -*- coding: utf-8 -*-
"""
Exact scalar, polynomial and rational-function arithmetic.

- Rational: sympy's QQ elements (arbitrary precision, always reduced)
- MPoly: sparse polynomials over QQ in the fixed universe (x, t, λ, u, q),
  ordered graded-lexicographically
- RatFun: reduced quotient of two MPoly values with a monic denominator
- poly_div_exact: division that refuses to leave a remainder
- substitution, specialization and lossless string rendering

All values are immutable; every operation returns a new value.
"""

import logging
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from .config import VARIABLE_ALIASES, VARIABLES
from .errors import NonExactDivision, PoleEncountered

logger = logging.getLogger(__name__)


# =============================================================================
# Scalar Field and Polynomial Ring
# =============================================================================

RING, X, T, LAM, U, Q = ring(",".join(VARIABLES), QQ, grlex)

Rational = type(QQ.one)
MPoly = PolyElement

GENERATORS: Dict[str, MPoly] = dict(zip(VARIABLES, RING.gens))
VARIABLE_INDEX: Dict[str, int] = {name: i for i, name in enumerate(VARIABLES)}

Scalar = Union[int, Rational]


def variable_name(name: str) -> str:
    """Resolve a variable name or ASCII alias to its canonical spelling."""
    canonical = VARIABLE_ALIASES.get(name, name)
    if canonical not in VARIABLE_INDEX:
        raise ValueError(f"Unknown variable: {name}. Use one of {', '.join(VARIABLES)}.")
    return canonical


def gen(name: str) -> MPoly:
    """Return the generator polynomial for a variable name."""
    return GENERATORS[variable_name(name)]


def rational(value) -> Rational:
    """
    Convert an int, a QQ element or a "p/q" string to an exact rational.

    Floats are rejected: they have no place in exact computations.
    """
    if isinstance(value, float):
        raise TypeError("floating-point values are not exact rationals")
    if isinstance(value, str):
        numerator, _, denominator = value.strip().partition("/")
        try:
            return QQ(int(numerator), int(denominator) if denominator else 1)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not an exact rational: {value!r}") from None
    return QQ.convert(value)


def poly(value) -> MPoly:
    """Lift a scalar or polynomial into the ring."""
    if isinstance(value, PolyElement):
        return value
    return RING.ground_new(rational(value))


def is_integer(value: Rational) -> bool:
    return int(value.denominator) == 1


# =============================================================================
# Polynomial Helpers
# =============================================================================

def degree(p: MPoly, var: str) -> int:
    """Degree of p in var; -1 for the zero polynomial."""
    if not p:
        return -1
    return p.degree(VARIABLE_INDEX[variable_name(var)])


def coefficient(p: MPoly, var: str, power: int) -> MPoly:
    """Coefficient of var^power in p, as a polynomial in the other variables."""
    return p.coeff_wrt(VARIABLE_INDEX[variable_name(var)], power)


def mentions(p: MPoly, var: str) -> bool:
    return degree(p, var) > 0


def poly_div_exact(a: MPoly, b: MPoly, var: str = "t") -> MPoly:
    """
    Exact quotient of a by b, both viewed as univariate in var.

    Raises NonExactDivision when any remainder term survives, which means
    the divisibility the caller relied on does not hold.
    """
    if not b:
        raise ZeroDivisionError("poly_div_exact by the zero polynomial")
    i = VARIABLE_INDEX[variable_name(var)]
    x = RING.gens[i]
    db = b.degree(i)
    lead_b = b.coeff_wrt(i, db)

    quotient = RING.zero
    remainder = a
    while remainder and remainder.degree(i) >= db:
        dr = remainder.degree(i)
        try:
            c = remainder.coeff_wrt(i, dr).exquo(lead_b)
        except ExactQuotientFailed:
            raise NonExactDivision(
                f"({format_poly(a)}) is not divisible by ({format_poly(b)}) in {var}"
            ) from None
        term = c * x ** (dr - db)
        quotient += term
        remainder -= term * b

    if remainder:
        raise NonExactDivision(
            f"({format_poly(a)}) / ({format_poly(b)}) leaves remainder {format_poly(remainder)}"
        )
    return quotient


# =============================================================================
# Rational Functions
# =============================================================================

def _reduce(num: MPoly, den: MPoly) -> Tuple[MPoly, MPoly]:
    if not num:
        return RING.zero, RING.one
    if not den.is_ground:
        _, num, den = num.cofactors(den)
    lc = den.LC
    if lc != QQ.one:
        num, den = num.quo_ground(lc), den.quo_ground(lc)
    return num, den


class RatFun:
    """
    Reduced quotient num/den of two polynomials.

    The denominator is normalized so that its graded-lex leading coefficient
    is 1, which makes (num, den) a canonical form.

    A constant hashes as its Rational and a polynomial as its MPoly, so a
    RatFun can stand in for either as a dict or set key.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, reduced: bool = False):
        num = poly(num)
        den = RING.one if den is None else poly(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not reduced:
            num, den = _reduce(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun values are immutable")

    @classmethod
    def coerce(cls, value) -> "RatFun":
        if isinstance(value, RatFun):
            return value
        if isinstance(value, PolyElement):
            return cls(value, RING.one, reduced=True)
        if isinstance(value, (int, Rational)):
            return cls(poly(value), RING.one, reduced=True)
        raise TypeError(f"cannot interpret {type(value).__name__} as a rational function")

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def __add__(self, other):
        try:
            other = RatFun.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        try:
            other = RatFun.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RatFun.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        if not self.num or not other.num:
            return RatFun.coerce(0)
        if self.den.is_one and other.den.is_one:
            return RatFun(self.num * other.num, RING.one, reduced=True)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = RatFun.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFun.coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RatFun(self.num ** exponent, self.den ** exponent, reduced=True)

    # -------------------------------------------------------------------------
    # Comparison
    # -------------------------------------------------------------------------

    def __eq__(self, other):
        try:
            other = RatFun.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        if self._hash is None:
            if self.den.is_one and self.num.is_ground:
                key = hash(self.num.LC)
            elif self.den.is_one:
                key = hash(self.num)
            else:
                key = hash((self.num, self.den))
            object.__setattr__(self, "_hash", key)
        return self._hash

    def __bool__(self):
        return bool(self.num)

    # -------------------------------------------------------------------------
    # Structure
    # -------------------------------------------------------------------------

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_one

    def as_poly(self) -> MPoly:
        """The numerator, provided the denominator is 1."""
        if not self.den.is_one:
            raise NonExactDivision(f"{format_ratfun(self)} is not a polynomial")
        return self.num

    def mentions(self, var: str) -> bool:
        return mentions(self.num, var) or mentions(self.den, var)

    def subs(self, bindings: Mapping[str, Scalar]) -> "RatFun":
        """Specialize variables to exact rationals."""
        return RatFun(*_specialize_pair(self.num, self.den, bindings))

    def __repr__(self):
        return f"RatFun({format_ratfun(self)})"

    def __str__(self):
        return format_ratfun(self)


Value = Union[int, Rational, MPoly, RatFun]


def to_ratfun(value: Value) -> RatFun:
    return RatFun.coerce(value)


def as_integer(value: Value) -> int:
    """The integer held by a constant value; ValueError for anything else."""
    rf = RatFun.coerce(value)
    if not rf:
        return 0
    if not (rf.den.is_one and rf.num.is_ground and is_integer(rf.num.LC)):
        raise ValueError(f"{format_ratfun(rf)} is not an integer")
    return int(rf.num.LC)


# =============================================================================
# Substitution and Specialization
# =============================================================================

def _specialize_pair(num: MPoly, den: MPoly, bindings: Mapping[str, Scalar]) -> Tuple[MPoly, MPoly]:
    pairs = [(GENERATORS[variable_name(v)], rational(a)) for v, a in bindings.items()]
    if pairs:
        num = num.subs(pairs)
        den = den.subs(pairs)
    if not den:
        described = ", ".join(f"{variable_name(v)}={a}" for v, a in bindings.items())
        raise PoleEncountered(f"denominator vanishes at {described}")
    return num, den


def specialize(value: Value, bindings: Mapping[str, Scalar]) -> Value:
    """Substitute exact rationals for variables in a polynomial or rational function."""
    if isinstance(value, RatFun):
        return value.subs(bindings)
    num, _ = _specialize_pair(poly(value), RING.one, bindings)
    return num


def substitute(value: Value, var: str, replacement: Value) -> Value:
    """
    Replace var by a polynomial or rational function.

    Polynomial replacements into polynomials stay polynomials; anything
    involving a rational function is carried out in RatFun arithmetic
    with immediate reduction.
    """
    var = variable_name(var)
    if isinstance(value, RatFun):
        return RatFun.coerce(substitute(value.num, var, replacement)) / RatFun.coerce(
            substitute(value.den, var, replacement)
        )
    p = poly(value)
    if not isinstance(replacement, RatFun):
        return p.compose(GENERATORS[var], poly(replacement))

    result = RatFun.coerce(0)
    power = RatFun.coerce(1)
    for j in range(degree(p, var) + 1):
        c = coefficient(p, var, j)
        if c:
            result = result + power * c
        power = power * replacement
    return result


def evaluate(value: Value, point: Mapping[str, Scalar]) -> Rational:
    """Evaluate at a point assigning every variable that occurs."""
    specialized = RatFun.coerce(value).subs(point)
    if not specialized.num.is_ground or not specialized.den.is_ground:
        raise ValueError("evaluation point leaves free variables")
    return specialized.num.LC / specialized.den.LC if specialized.num else QQ.zero


# =============================================================================
# Rendering (lossless)
# =============================================================================

def format_rational(c: Scalar) -> str:
    c = rational(c)
    if is_integer(c):
        return str(int(c.numerator))
    return f"{int(c.numerator)}/{int(c.denominator)}"


def _render_order(monom: Sequence[int]) -> Tuple:
    # ascending total degree, then descending lex within a degree
    return (sum(monom), tuple(-e for e in monom))


def _format_monomial(monom: Sequence[int]) -> str:
    parts = []
    for name, e in zip(VARIABLES, monom):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "".join(parts)


def format_poly(p: MPoly) -> str:
    """Render e.g. 1+4t+t^2, 1-λ, (1/2)x^2-xλ."""
    p = poly(p)
    if not p:
        return "0"
    out = []
    for monom, c in sorted(p.terms(), key=lambda term: _render_order(term[0])):
        negative = c < 0
        magnitude = -c if negative else c
        body = _format_monomial(monom)
        if not body:
            text = format_rational(magnitude)
        elif magnitude == 1:
            text = body
        elif is_integer(magnitude):
            text = f"{format_rational(magnitude)}{body}"
        else:
            text = f"({format_rational(magnitude)}){body}"
        if out:
            out.append(("-" if negative else "+") + text)
        else:
            out.append(("-" if negative else "") + text)
    return "".join(out)


def format_ratfun(rf: RatFun) -> str:
    if rf.den.is_one:
        return format_poly(rf.num)
    num, den = format_poly(rf.num), format_poly(rf.den)
    if len(rf.num) > 1:
        num = f"({num})"
    if len(rf.den) > 1 or not is_integer(rf.den.LC):
        den = f"({den})"
    return f"{num}/{den}"


def render(value) -> str:
    """Lossless string for any exact value used in this package."""
    if isinstance(value, RatFun):
        return format_ratfun(value)
    if isinstance(value, PolyElement):
        return format_poly(value)
    if isinstance(value, bool):
        return str(value).lower()
    return format_rational(value)


# =============================================================================
# Structured (exponent-vector, coefficient) form for serialization
# =============================================================================

def poly_terms(p: MPoly) -> List[List]:
    return [
        [list(monom), format_rational(c)]
        for monom, c in sorted(poly(p).terms(), key=lambda term: _render_order(term[0]))
    ]


def poly_from_terms(terms: Iterable[Sequence]) -> MPoly:
    element = {}
    for monom, c in terms:
        monom = tuple(int(e) for e in monom)
        if len(monom) != len(VARIABLES):
            raise ValueError(f"exponent vector {monom} does not match {VARIABLES}")
        element[monom] = rational(c)
    return RING.from_dict(element)
