# -*- coding: utf-8 -*-
"""
Classical (λ = 0) sequences.

Implements:
- Eulerian numbers by the alternating-sum closed form and by the
  (n-m, m+1) triangle recurrence
- Eulerian polynomials A_n(t) and their recursion through division by t-1
- Signed Stirling numbers of the first kind and Stirling numbers of the
  second kind, by triangle recurrence and by series oracle
- Frobenius-Euler numbers H_n(u) and polynomials H_n(x|u)
- Brute-force oracles: ascent counting over permutations and ordered set
  partition enumeration
"""

import itertools
import logging
import threading
from functools import lru_cache
from math import comb, factorial
from typing import List, Optional

from sympy.polys.domains import QQ

from .algebra import RING, T, U, X, MPoly, RatFun, as_integer, poly_div_exact
from .config import ORACLE_BOUNDS
from .errors import IndexOutOfTriangle, NegativeIndex, NonExactDivision, OracleBoundExceeded
from .generating import stirling1_column_series, stirling2_column_series

logger = logging.getLogger(__name__)


def _require_nonnegative(**indices: int) -> None:
    for name, value in indices.items():
        if value < 0:
            raise NegativeIndex(f"{name} must be nonnegative, got {value}")


# =============================================================================
# Eulerian Numbers
# =============================================================================

@lru_cache(maxsize=None)
def eulerian_number(n: int, m: int) -> int:
    """
    ⟨n,m⟩ = Σ_{l=0}^{m+1} C(n+1,l) (-1)^l (m+1-l)^n.

    The sum is stated for n ≥ 1; row 0 is the single entry ⟨0,0⟩ = 1.
    """
    _require_nonnegative(n=n, m=m)
    if n == 0:
        return 1 if m == 0 else 0
    return sum(comb(n + 1, l) * (-1) ** l * (m + 1 - l) ** n for l in range(m + 2))


def eulerian_bruteforce(n: int, m: int) -> int:
    """Count permutations of 1..n with exactly m ascents."""
    _require_nonnegative(n=n, m=m)
    bound = ORACLE_BOUNDS["permutations_max_n"]
    if n > bound:
        raise OracleBoundExceeded(f"permutation enumeration is limited to n ≤ {bound}, got {n}")
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        ascents = sum(1 for i in range(1, n) if perm[i] > perm[i - 1])
        if ascents == m:
            count += 1
    return count


@lru_cache(maxsize=None)
def eulerian_poly(n: int) -> MPoly:
    """A_n(t) = Σ_l ⟨n,l⟩ t^l, coefficients from the closed form."""
    _require_nonnegative(n=n)
    return sum((eulerian_number(n, l) * T ** l for l in range(max(1, n))), RING.zero)


@lru_cache(maxsize=None)
def eulerian_poly_recursive(n: int) -> MPoly:
    """
    A_0 = 1, A_n(t) = (1/(t-1)) Σ_{l<n} C(n,l) A_l(t) (t-1)^{n-l}.

    Every term of the sum carries at least one factor t-1, but the division
    is still done by poly_div_exact so that a broken lower row surfaces.
    """
    _require_nonnegative(n=n)
    if n == 0:
        return RING.one
    total = sum(
        (comb(n, l) * eulerian_poly_recursive(l) * (T - 1) ** (n - l) for l in range(n)),
        RING.zero,
    )
    return poly_div_exact(total, T - 1, "t")


class EulerianTriangle:
    """
    Rows of ⟨n,m⟩ built by ⟨n,m⟩ = (n-m)⟨n-1,m-1⟩ + (m+1)⟨n-1,m⟩.

    Row 0 is [1]; row n ≥ 1 holds m = 0..n-1. Rows are extended on demand
    under a lock and are shared read-only once published.
    """

    def __init__(self):
        self._rows: List[List[int]] = [[1]]
        self._lock = threading.Lock()

    def _grow(self, n: int) -> None:
        # caller holds the lock
        while len(self._rows) <= n:
            k = len(self._rows)
            previous = self._rows[-1]

            def prev(m: int) -> int:
                return previous[m] if 0 <= m < len(previous) else 0

            self._rows.append([(k - m) * prev(m - 1) + (m + 1) * prev(m) for m in range(k)])
            logger.debug("eulerian triangle extended to row %d", k)

    def row(self, n: int) -> List[int]:
        _require_nonnegative(n=n)
        with self._lock:
            self._grow(n)
            return list(self._rows[n])

    def entry(self, n: int, m: int) -> int:
        """⟨n,m⟩, zero outside the stored row."""
        _require_nonnegative(n=n, m=m)
        row = self.row(n)
        return row[m] if m < len(row) else 0

    def override(self, n: int, m: int, value: int) -> None:
        """Replace one entry; later rows are rebuilt from it by the recurrence."""
        _require_nonnegative(n=n, m=m)
        with self._lock:
            self._grow(n)
            if m >= len(self._rows[n]):
                raise IndexOutOfTriangle(f"⟨{n},{m}⟩ is outside row {n}")
            self._rows[n][m] = value
            del self._rows[n + 1:]
        logger.warning("eulerian triangle entry ⟨%d,%d⟩ overridden with %d", n, m, value)

    def row_poly(self, n: int) -> MPoly:
        """Σ_m ⟨n,m⟩ t^m from the stored row."""
        return sum((c * T ** m for m, c in enumerate(self.row(n))), RING.zero)


# =============================================================================
# Stirling Numbers
# =============================================================================

class StirlingTriangles:
    """
    Signed S_1(n,k) and S_2(n,k) for 0 ≤ k ≤ n.

    S_1(n+1,k) = S_1(n,k-1) - n·S_1(n,k)
    S_2(n+1,k) = k·S_2(n,k) + S_2(n,k-1)
    """

    def __init__(self):
        self._s1: List[List[int]] = [[1]]
        self._s2: List[List[int]] = [[1]]
        self._lock = threading.Lock()

    @staticmethod
    def _next_row(previous: List[int], n: int, first_kind: bool) -> List[int]:
        # previous is row n; returns row n+1
        def at(k: int) -> int:
            return previous[k] if 0 <= k <= n else 0

        if first_kind:
            return [at(k - 1) - n * at(k) for k in range(n + 2)]
        return [k * at(k) + at(k - 1) for k in range(n + 2)]

    def _grow(self, rows: List[List[int]], n: int, first_kind: bool) -> None:
        # caller holds the lock
        while len(rows) <= n:
            rows.append(self._next_row(rows[-1], len(rows) - 1, first_kind))
            logger.debug("stirling%d triangle extended to row %d", 1 if first_kind else 2, len(rows) - 1)

    def _lookup(self, rows: List[List[int]], n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            raise IndexOutOfTriangle(f"({n},{k}) is outside 0 ≤ k ≤ n")
        with self._lock:
            self._grow(rows, n, rows is self._s1)
            return rows[n][k]

    def s1(self, n: int, k: int) -> int:
        return self._lookup(self._s1, n, k)

    def s2(self, n: int, k: int) -> int:
        return self._lookup(self._s2, n, k)

    def s1_row(self, n: int) -> List[int]:
        return [self.s1(n, k) for k in range(n + 1)]

    def s2_row(self, n: int) -> List[int]:
        return [self.s2(n, k) for k in range(n + 1)]

    def override_s1(self, n: int, k: int, value: int) -> None:
        """Replace S_1(n,k); later rows are rebuilt from it."""
        self.s1(n, k)
        with self._lock:
            self._s1[n][k] = value
            del self._s1[n + 1:]
        logger.warning("stirling1 entry (%d,%d) overridden with %d", n, k, value)

    def override_s2(self, n: int, k: int, value: int) -> None:
        self.s2(n, k)
        with self._lock:
            self._s2[n][k] = value
            del self._s2[n + 1:]
        logger.warning("stirling2 entry (%d,%d) overridden with %d", n, k, value)


_STIRLING = StirlingTriangles()


def stirling1(n: int, k: int) -> int:
    """Signed Stirling number of the first kind (coefficient of x^k in x(x-1)...(x-n+1))."""
    return _STIRLING.s1(n, k)


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k blocks."""
    return _STIRLING.s2(n, k)


@lru_cache(maxsize=None)
def stirling1_from_series(n: int, k: int) -> int:
    """n! times the coefficient of t^n in (log(1+t))^k / k!."""
    if n < 0 or k < 0 or k > n:
        raise IndexOutOfTriangle(f"({n},{k}) is outside 0 ≤ k ≤ n")
    value = stirling1_column_series(k, n).egf_coefficient(n)
    return as_integer(value)


@lru_cache(maxsize=None)
def stirling2_from_series(n: int, k: int) -> int:
    """n! times the coefficient of t^n in (e^t - 1)^k / k!."""
    if n < 0 or k < 0 or k > n:
        raise IndexOutOfTriangle(f"({n},{k}) is outside 0 ≤ k ≤ n")
    value = stirling2_column_series(k, n).egf_coefficient(n)
    return as_integer(value)


# =============================================================================
# Frobenius-Euler Numbers and Polynomials
# =============================================================================

@lru_cache(maxsize=None)
def frobenius_euler_number(n: int) -> RatFun:
    """
    H_n(u) from Σ_{k=0}^n C(n,k) H_k(u) - u·H_n(u) = (1-u)·δ_{0,n}.

    Solving for H_n gives H_n = δ_{0,n} - Σ_{k<n} C(n,k) H_k / (1-u).
    """
    _require_nonnegative(n=n)
    if n == 0:
        return RatFun(1)
    total = RatFun(0)
    for k in range(n):
        total = total + frobenius_euler_number(k) * comb(n, k)
    return -(total / (1 - U))


@lru_cache(maxsize=None)
def frobenius_euler_poly(n: int) -> RatFun:
    """H_n(x|u) = Σ_k C(n,k) H_k(u) x^{n-k}, a polynomial in x over rational functions of u."""
    _require_nonnegative(n=n)
    total = RatFun(0)
    for k in range(n + 1):
        total = total + frobenius_euler_number(k) * (comb(n, k) * X ** (n - k))
    return total


class FrobeniusEulerSequence:
    """
    H_n(u) and H_n(x|u) for n = 0..n_max, with the structural checks
    that hold for every index.
    """

    def __init__(self, n_max: int):
        _require_nonnegative(n_max=n_max)
        self.n_max = n_max
        self.numbers: List[RatFun] = [frobenius_euler_number(n) for n in range(n_max + 1)]
        self.polynomials: List[RatFun] = [frobenius_euler_poly(n) for n in range(n_max + 1)]

    def violations(self) -> List[str]:
        problems = []
        if self.numbers[0] != 1:
            problems.append("H_0(u) is not 1")
        for n, h in enumerate(self.numbers):
            try:
                poly_div_exact((U - 1) ** n, h.den, "u")
            except NonExactDivision:
                problems.append(f"denominator of H_{n}(u) does not divide (u-1)^{n}")
        for n, h in enumerate(self.polynomials):
            leading = h.num.coeff_wrt(0, n)
            if h.num.degree(0) != n or RatFun(leading, h.den) != 1:
                problems.append(f"H_{n}(x|u) is not monic of degree {n} in x")
        return problems


# =============================================================================
# Polynomial Helpers For Eulerian Identities
# =============================================================================

@lru_cache(maxsize=None)
def binomial_poly(shift: int, n: int) -> MPoly:
    """C(x+shift, n) = (x+shift)(x+shift-1)...(x+shift-n+1)/n! as a polynomial in x."""
    _require_nonnegative(n=n)
    product = RING.one
    for i in range(n):
        product *= X + (shift - i)
    return product.quo_ground(QQ(factorial(n)))


def power_sum_poly(n: int, m: int, exponent: Optional[int] = None) -> MPoly:
    """Σ_{k=1}^m k^e t^k with e = n unless ``exponent`` is given."""
    e = n if exponent is None else exponent
    return sum((k ** e * T ** k for k in range(1, m + 1)), RING.zero)


def power_sum_closed_form(n: int, m: int) -> RatFun:
    """
    Σ_{i=1}^n (-1)^{n+i} C(n,i) t^{m+1} A_{n-i}(t) m^i / (t-1)^{n-i+1}
      + (-1)^n t(t^m - 1) A_n(t) / (t-1)^{n+1}.
    """
    total = RatFun(0)
    for i in range(1, n + 1):
        term = RatFun((-1) ** (n + i) * comb(n, i) * m ** i * T ** (m + 1) * eulerian_poly(n - i),
                      (T - 1) ** (n - i + 1))
        total = total + term
    tail = RatFun((-1) ** n * T * (T ** m - 1) * eulerian_poly(n), (T - 1) ** (n + 1))
    return total + tail


# =============================================================================
# Ordered Set Partitions
# =============================================================================

def ordered_bell_bruteforce(n: int) -> int:
    """
    Count ordered set partitions of an n-set.

    Each one is a map [n] → [n] whose image is {0, ..., k-1} for some k
    (the block index of every element).
    """
    _require_nonnegative(n=n)
    bound = ORACLE_BOUNDS["ordered_partitions_max_n"]
    if n > bound:
        raise OracleBoundExceeded(f"ordered partition enumeration is limited to n ≤ {bound}, got {n}")
    count = 0
    for labels in itertools.product(range(n), repeat=n):
        used = set(labels)
        if used == set(range(len(used))):
            count += 1
    return count
