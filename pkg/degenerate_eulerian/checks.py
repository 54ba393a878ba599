# -*- coding: utf-8 -*-
"""
The identity checks.

Each check receives a CheckRun, walks its index range and compares the two
sides with run.compare. The first mismatch ends the check; everything
else (timing, error capture, the report) is handled by the catalog.

Checks only read the Stirling and Eulerian triangles through run.ctx, so a
corrupted context reaches every side that depends on them.
"""

from math import comb

from .algebra import Q, RING, T, X, coefficient, specialize
from .classical import (
    binomial_poly,
    eulerian_bruteforce,
    eulerian_number,
    eulerian_poly,
    eulerian_poly_recursive,
    frobenius_euler_poly,
    ordered_bell_bruteforce,
    power_sum_closed_form,
    power_sum_poly,
)
from .config import IDENTITY_LIMITS
from .degenerate import (
    DegenerateEulerianPoly,
    deg_eulerian_at_minus_q,
    deg_eulerian_number,
    deg_eulerian_number_closed,
    deg_eulerian_poly,
    deg_eulerian_poly_frobenius,
    deg_eulerian_poly_recursive,
    deg_eulerian_series_values,
    deg_falling,
    deg_ordered_bell,
    deg_ordered_bell_from_numbers,
    deg_ordered_bell_frobenius,
    deg_ordered_bell_poly_values,
    deg_ordered_bell_series_values,
    falling_at_t_minus_one,
    fermionic_moment,
    frobenius_euler_at_t,
    q_moment_closed_form,
    q_moment_series_values,
    rising_bridge,
)
from .generating import GENERATING_FUNCTIONS, stirling1_column_series, stirling2_column_series
from .registry import CheckRun, identity
from .series import Series, series_deg_pow, series_from_values, series_inv


def _delta(n: int, value=1):
    return value if n == 0 else 0


def _row_width(n: int) -> int:
    # row n of the Eulerian triangle holds m = 0..max(0, n-1)
    return max(1, n)


# =============================================================================
# Classical Eulerian Identities
# =============================================================================

@identity(
    "EQ01_GF",
    description="Eq. (1): Σ_k (k+1)^n x^k = Σ_m ⟨n,m-1⟩ x^m / (1-x)^{n+1}, compared as series",
    anchor="Eq. (1)",
    left="power_series",
    right="eulerian_triangle",
)
def check_eq01(run: CheckRun) -> None:
    order = run.n_max + 1
    run.cover(n=(0, run.n_max), j=(0, order))
    run.note("left side multiplied by x: the printed right side starts at x^1 while the left starts at x^0")
    for n in range(run.n_max + 1):
        powers = Series("x", tuple((k + 1) ** n for k in range(order + 1)))
        cleared = (powers * Series.from_poly((1 - X) ** (n + 1), "x", order)).shift(1)
        rows = Series("x", (0,) + tuple(run.ctx.eulerian(n, m - 1) for m in range(1, order + 1)))
        run.compare_series({"n": n}, "j", cleared, rows)


@identity(
    "EQ02_VS_EQ04",
    description="Eq. (2) closed form ⟨n,m⟩ = Σ_l C(n+1,l)(-1)^l(m+1-l)^n against the Eq. (4) recurrence",
    anchor="Eqs. (2), (4)",
    left="eulerian_number",
    right="eulerian_triangle",
)
def check_eq02(run: CheckRun) -> None:
    run.cover(n=(0, run.n_max))
    for n in range(run.n_max + 1):
        for m in range(_row_width(n)):
            run.compare({"n": n, "m": m}, eulerian_number(n, m), run.ctx.eulerian(n, m))


@identity(
    "EQ05_GF",
    description="Eq. (5): (1-t)/(e^{x(t-1)}-t) = Σ A_n(t) x^n/n!",
    anchor="Eq. (5)",
    left="eulerian_gf",
    right="eulerian_poly",
)
def check_eq05(run: CheckRun) -> None:
    order = run.n_max + 1
    run.cover(n=(0, order))
    values = GENERATING_FUNCTIONS["eulerian"].sequence(order)
    for n, value in enumerate(values):
        run.compare({"n": n}, value, eulerian_poly(n))


@identity(
    "EQ06_UMBRAL",
    description="Eq. (6): Σ_k C(n,k) A_k(t)(t-1)^{n-k} - t A_n(t) = (1-t) δ_{0,n}",
    anchor="Eq. (6)",
    left="eulerian_poly",
    right="kronecker_delta",
)
def check_eq06(run: CheckRun) -> None:
    run.cover(n=(0, run.n_max))
    for n in range(run.n_max + 1):
        total = sum((comb(n, k) * eulerian_poly(k) * (T - 1) ** (n - k) for k in range(n + 1)), RING.zero)
        run.compare({"n": n}, total - T * eulerian_poly(n), _delta(n, 1 - T))


@identity(
    "EQ07_COEFFS",
    description="Eq. (7): A_n(t) = Σ_l ⟨n,l⟩ t^l, triangle rows against the closed-form polynomial",
    anchor="Eq. (7)",
    left="eulerian_triangle",
    right="eulerian_poly",
)
def check_eq07(run: CheckRun) -> None:
    run.cover(n=(0, run.n_max))
    for n in range(run.n_max + 1):
        run.compare({"n": n}, run.ctx.eulerian_triangle.row_poly(n), eulerian_poly(n))


_DISPLAYED_POLYNOMIALS = (RING.one, RING.one, 1 + T, 1 + 4 * T + T ** 2)


@identity(
    "EQ08_TABLE",
    description="Eq. (8): the first Eulerian polynomials 1, 1, 1+t, 1+4t+t^2 and their power-series displays",
    anchor="Eq. (8)",
    left="eulerian_poly",
    right="displayed_series",
)
def check_eq08(run: CheckRun) -> None:
    rows = min(IDENTITY_LIMITS["table_display_rows"], run.n_max)
    order = IDENTITY_LIMITS["table_series_order"]
    run.cover(k=(0, rows), j=(0, order))
    for k in range(rows + 1):
        run.compare({"k": k}, eulerian_poly(k), _DISPLAYED_POLYNOMIALS[k], label="displayed polynomial")
        denominator = Series.from_poly((1 - T) ** (k + 1), "t", order)
        expanded = Series.from_poly(eulerian_poly(k), "t", order) * series_inv(denominator)
        displayed = Series("t", tuple((j + 1) ** k for j in range(order + 1)))
        run.compare_series({"k": k}, "j", expanded, displayed, label="displayed series")


@identity(
    "EQ09_WORPITZKY",
    description="Eq. (9), \"The Worpitzky's identity expresses\": x^n = Σ_k ⟨n,k⟩ C(x+k,n)",
    anchor="Eq. (9)",
    left="eulerian_triangle",
    right="monomial",
)
def check_eq09(run: CheckRun) -> None:
    run.cover(n=(1, run.n_max))
    for n in range(1, run.n_max + 1):
        total = sum((run.ctx.eulerian(n, k) * binomial_poly(k, n) for k in range(n)), RING.zero)
        run.compare({"n": n}, total, X ** n)


@identity(
    "EQ10_RECURSION",
    description="Eq. (10): A_n(t) = (1/(t-1)) Σ_{l<n} C(n,l) A_l(t)(t-1)^{n-l}",
    anchor="Eq. (10)",
    left="eulerian_poly_recursive",
    right="eulerian_poly",
)
def check_eq10(run: CheckRun) -> None:
    run.cover(n=(0, run.n_max))
    for n in range(run.n_max + 1):
        run.compare({"n": n}, eulerian_poly_recursive(n), eulerian_poly(n))


@identity(
    "EQ11_POWER_SUM",
    description="Eq. (11), \"where m ≥ 1 and n ≥ 0\": Σ_{k=1}^m k^n t^k in closed form through A_n(t)",
    anchor="Eq. (11)",
    left="power_sum_poly",
    right="power_sum_closed_form",
    two_index=True,
)
def check_eq11(run: CheckRun) -> None:
    n_top = min(run.n_max, IDENTITY_LIMITS["power_sum_n_cap"])
    run.cover(n=(0, n_top), m=(1, run.m_max))
    pairs = [(n, m) for n in range(n_top + 1) for m in range(1, run.m_max + 1)]

    printed_failure = next(
        ((n, m) for n, m in pairs if power_sum_closed_form(n, m) != power_sum_poly(n, m, exponent=m)),
        None,
    )
    if printed_failure is None:
        run.note("the printed k^m reading also holds on this range")
    else:
        run.note("the printed k^m reading fails first at (n, m) = (%d, %d); checked with k^n" % printed_failure)

    for n, m in pairs:
        run.compare({"n": n, "m": m}, power_sum_poly(n, m), power_sum_closed_form(n, m))


# =============================================================================
# Generating Functions
# =============================================================================

@identity(
    "EQ12_GF",
    description="Eq. (12): b_{n,λ}(x) from (1+λt)^{x/λ}/(2-(1+λt)^{1/λ}) = Σ_k C(n,k) b_{k,λ} (x)_{n-k,λ}",
    anchor="Eq. (12)",
    left="ordered_bell_gf",
    right="deg_ordered_bell",
)
def check_eq12(run: CheckRun) -> None:
    order = run.n_max + 1
    run.cover(n=(0, order))
    for n, value in enumerate(deg_ordered_bell_poly_values(order)):
        convolution = sum(
            (comb(n, k) * deg_ordered_bell(k, run.ctx) * deg_falling(n - k) for k in range(n + 1)),
            RING.zero,
        )
        run.compare({"n": n}, value, convolution)


@identity(
    "EQ13_GF",
    description="Eq. (13): (1-u)e^{xt}/(e^t-u) = Σ H_n(x|u) t^n/n!",
    anchor="Eq. (13)",
    left="frobenius_euler_gf",
    right="frobenius_euler_poly",
)
def check_eq13(run: CheckRun) -> None:
    order = run.n_max + 1
    run.cover(n=(0, order))
    for n, value in enumerate(GENERATING_FUNCTIONS["frobenius-euler"].sequence(order)):
        run.compare({"n": n}, value, frobenius_euler_poly(n))


@identity(
    "EQ14_GF",
    description="Eq. (14): (log(1+t))^k/k! = Σ_n S_1(n,k) t^n/n!",
    anchor="Eq. (14)",
    left="stirling1_column_series",
    right="stirling1_triangle",
)
def check_eq14(run: CheckRun) -> None:
    order = run.n_max + 1
    run.cover(k=(0, order), n=(0, order))
    for k in range(order + 1):
        column = stirling1_column_series(k, order)
        for n in range(order + 1):
            expected = run.ctx.stirling1(n, k) if k <= n else 0
            run.compare({"n": n, "k": k}, column.egf_coefficient(n), expected)


@identity(
    "EQ15_GF",
    description="Eq. (15): (e^t-1)^k/k! = Σ_n S_2(n,k) t^n/n!",
    anchor="Eq. (15)",
    left="stirling2_column_series",
    right="stirling2_triangle",
)
def check_eq15(run: CheckRun) -> None:
    order = run.n_max + 1
    run.cover(k=(0, order), n=(0, order))
    for k in range(order + 1):
        column = stirling2_column_series(k, order)
        for n in range(order + 1):
            expected = run.ctx.stirling2(n, k) if k <= n else 0
            run.compare({"n": n, "k": k}, column.egf_coefficient(n), expected)


@identity(
    "EQ16_GF",
    description="Eqs. (16), (17): (Σ A_{n,λ}(t) x^n/n!)·((1+λx)^{(t-1)/λ}-t) = 1-t, compared as series",
    anchor="Eq. (16)",
    left="deg_eulerian_poly",
    right="deg_eulerian_gf",
)
def check_eq16(run: CheckRun) -> None:
    order = run.n_max + 1
    run.cover(j=(0, order))
    values = [deg_eulerian_poly(n, run.ctx) for n in range(order + 1)]
    product = series_from_values(values, "x") * (series_deg_pow(T - 1, order, "x") - T)
    run.compare_series({}, "j", product, Series.constant(1 - T, "x", order))


# =============================================================================
# Degenerate Eulerian Identities
# =============================================================================

@identity(
    "EQ18_UMBRAL_DEG",
    description="Eqs. (18), (19): Σ_k C(n,k) A_{k,λ}(t)(t-1)_{n-k,λ} - t A_{n,λ}(t) = (1-t) δ_{0,n}",
    anchor="Eq. (18)",
    left="deg_eulerian_poly",
    right="kronecker_delta",
)
def check_eq18(run: CheckRun) -> None:
    run.cover(n=(0, run.n_max))
    for n in range(run.n_max + 1):
        total = sum(
            (comb(n, k) * deg_eulerian_poly(k, run.ctx) * falling_at_t_minus_one(n - k) for k in range(n + 1)),
            RING.zero,
        )
        run.compare({"n": n}, total - T * deg_eulerian_poly(n, run.ctx), _delta(n, 1 - T))


@identity(
    "EQ20_RECURSION_DEG",
    description="Eq. (20): A_{n,λ}(t) = (1/(t-1)) Σ_{k<n} C(n,k) A_{k,λ}(t)(t-1)_{n-k,λ}",
    anchor="Eq. (20)",
    left="deg_eulerian_poly_recursive",
    right="deg_eulerian_poly",
)
def check_eq20(run: CheckRun) -> None:
    run.cover(n=(0, run.n_max))
    for n in range(run.n_max + 1):
        run.compare({"n": n}, deg_eulerian_poly_recursive(n), deg_eulerian_poly(n, run.ctx))


@identity(
    "EQ22_STIRLING_TRANSFORM",
    description="Eq. (22), \"by comparing the coefficients on both sides\": A_{n,λ}(t) = Σ_k A_k(t) λ^{n-k} S_1(n,k)",
    anchor="Eq. (22)",
    left="deg_eulerian_poly",
    right="deg_eulerian_exp_log",
)
def check_eq22(run: CheckRun) -> None:
    run.cover(n=(0, run.n_max))
    series_values = deg_eulerian_series_values(run.n_max)
    for n in range(run.n_max + 1):
        run.compare({"n": n}, deg_eulerian_poly(n, run.ctx), series_values[n])


@identity(
    "EQ23_25_28_NUMBERS",
    description="Eqs. (23), (25), (28): ⟨n,l⟩_λ as a t-coefficient, as Σ_k ⟨k,l⟩ λ^{n-k} S_1(n,k), and in closed form",
    anchor="Eq. (25)",
    left="deg_eulerian_exp_log",
    right="deg_eulerian_number",
)
def check_eq23(run: CheckRun) -> None:
    run.cover(n=(0, run.n_max))
    series_values = deg_eulerian_series_values(run.n_max)
    for n in range(run.n_max + 1):
        for l in range(n + 1):
            from_series = coefficient(series_values[n], "t", l)
            indices = {"n": n, "l": l}
            run.compare(indices, from_series, deg_eulerian_number(n, l, run.ctx), label="triangle sum")
            run.compare(indices, from_series, deg_eulerian_number_closed(n, l, run.ctx), label="closed form")


@identity(
    "EQ26_27_ORDERED_BELL",
    description="Eqs. (26), (27): b_{n,λ} = A_{n,λ}(2) = Σ_l ⟨n,l⟩_λ 2^l",
    anchor="Eq. (27)",
    left="deg_ordered_bell_gf",
    right="deg_ordered_bell",
)
def check_eq26(run: CheckRun) -> None:
    run.cover(n=(0, run.n_max))
    series_values = deg_ordered_bell_series_values(run.n_max)
    for n in range(run.n_max + 1):
        run.compare({"n": n}, series_values[n], deg_ordered_bell(n, run.ctx), label="A_{n,λ}(2)")
        run.compare({"n": n}, series_values[n], deg_ordered_bell_from_numbers(n, run.ctx), label="Σ_l ⟨n,l⟩_λ 2^l")


@identity(
    "EQ30_FROBENIUS_FORM",
    description="Eq. (30): A_{n,λ}(t) = Σ_k λ^{n-k} S_1(n,k) H_k(t)(t-1)^k",
    anchor="Eq. (30)",
    left="deg_eulerian_poly_frobenius",
    right="deg_eulerian_poly_recursive",
)
def check_eq30(run: CheckRun) -> None:
    run.cover(n=(0, run.n_max))
    for n in range(run.n_max + 1):
        run.compare({"n": n}, deg_eulerian_poly_frobenius(n, run.ctx), deg_eulerian_poly_recursive(n))


@identity(
    "EQ31_BELL_FROBENIUS",
    description="Eq. (31), \"Let us take t=2\": b_{n,λ} = Σ_k λ^{n-k} S_1(n,k) H_k(2)",
    anchor="Eq. (31)",
    left="deg_ordered_bell_frobenius",
    right="deg_ordered_bell_gf",
)
def check_eq31(run: CheckRun) -> None:
    run.cover(n=(0, run.n_max))
    series_values = deg_ordered_bell_series_values(run.n_max)
    for n in range(run.n_max + 1):
        run.compare({"n": n}, deg_ordered_bell_frobenius(n, run.ctx), series_values[n])


# =============================================================================
# q-Moment Identities
# =============================================================================

@identity(
    "EQ41_Q_FORM",
    description="Eq. (41): A_{n,λ}(-q) = Σ_k (-1)^k λ^{n-k}(1+q)^k S_1(n,k) H_k(-q)",
    anchor="Eq. (41)",
    left="deg_eulerian_at_minus_q",
    right="q_moment_gf",
)
def check_eq41(run: CheckRun) -> None:
    run.cover(n=(0, run.n_max))
    series_values = q_moment_series_values(run.n_max)
    for n in range(run.n_max + 1):
        run.compare({"n": n}, deg_eulerian_at_minus_q(n, run.ctx), series_values[n])


@identity(
    "EQ44_46_MOMENT",
    description="Eqs. (42), (44), (46): Σ_l |S_{1,λ/(1+q)}(n,l)| H_l(-q) = (-1)^n A_{n,λ}(-q)/(1+q)^n",
    anchor="Eq. (46)",
    left="fermionic_moment",
    right="q_moment_closed_form",
)
def check_eq44(run: CheckRun) -> None:
    run.cover(n=(0, run.n_max))
    for n in range(run.n_max + 1):
        indices = {"n": n}
        moment = fermionic_moment(n)
        run.compare(indices, moment, q_moment_closed_form(n, run.ctx), label="moment")
        run.compare(indices, *rising_bridge(n), label="rising factorial bridge")
        cleared = moment * (Q + 1) ** n
        run.compare(indices, cleared.is_polynomial, True, label="(1+q)^n · moment is a polynomial")


# =============================================================================
# Cross Checks
# =============================================================================

@identity(
    "LIMIT_LAMBDA_ZERO",
    description="λ → 0: A_{n,λ}(t), ⟨n,l⟩_λ and (x)_{n,λ} reduce to A_n(t), ⟨n,l⟩ and x^n; b_{n,0} are the Fubini numbers",
    anchor="λ → 0",
    left="deg_eulerian_poly",
    right="eulerian_poly",
)
def check_lambda_zero(run: CheckRun) -> None:
    fubini_top = min(run.n_max, IDENTITY_LIMITS["fubini_oracle_cap"])
    run.cover(n=(0, run.n_max), fubini=(0, fubini_top))
    for n in range(run.n_max + 1):
        indices = {"n": n}
        typed = DegenerateEulerianPoly(n, deg_eulerian_poly(n, run.ctx))
        run.compare(indices, typed.at_lambda_zero(), eulerian_poly(n), label="polynomial")
        for l, number in enumerate(typed.numbers()):
            run.compare({"n": n, "l": l}, specialize(number, {"λ": 0}), eulerian_number(n, l), label="numbers")
        run.compare(indices, specialize(deg_falling(n), {"λ": 0}), X ** n, label="falling factorial")
    for n in range(fubini_top + 1):
        run.compare(
            {"n": n},
            specialize(deg_ordered_bell(n, run.ctx), {"λ": 0}),
            ordered_bell_bruteforce(n),
            label="ordered set partitions",
        )


@identity(
    "BRIDGE_A_EQUALS_H",
    description="Eqs. (5), (13): A_n(t) = (t-1)^n H_n(t)",
    anchor="Eqs. (5), (13)",
    left="eulerian_poly",
    right="frobenius_euler_number",
)
def check_bridge(run: CheckRun) -> None:
    run.cover(n=(0, run.n_max))
    for n in range(run.n_max + 1):
        run.compare({"n": n}, eulerian_poly(n), frobenius_euler_at_t(n) * (T - 1) ** n)


@identity(
    "STIRLING_ORTHOGONALITY",
    description="Eqs. (14), (15): Σ_k S_1(n,k) S_2(k,m) = δ_{n,m}",
    anchor="Eqs. (14), (15)",
    left="stirling_triangles",
    right="kronecker_delta",
)
def check_orthogonality(run: CheckRun) -> None:
    run.cover(n=(0, run.n_max))
    for n in range(run.n_max + 1):
        for m in range(n + 1):
            total = sum(run.ctx.stirling1(n, k) * run.ctx.stirling2(k, m) for k in range(m, n + 1))
            run.compare({"n": n, "m": m}, total, _delta(n - m))


@identity(
    "BRUTE_FORCE_EULERIAN",
    description="§1, \"exactly m elements are greater than the previous element\": ascent counts against the triangle",
    anchor="§1",
    left="eulerian_bruteforce",
    right="eulerian_triangle",
)
def check_bruteforce(run: CheckRun) -> None:
    top = min(run.n_max, IDENTITY_LIMITS["bruteforce_cap"])
    run.cover(n=(0, top))
    for n in range(top + 1):
        for m in range(_row_width(n)):
            run.compare({"n": n, "m": m}, eulerian_bruteforce(n, m), run.ctx.eulerian(n, m))
