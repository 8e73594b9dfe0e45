"""Explicit discriminant of x^n + t(x^2 + a x + b) and its building blocks.

For n >= 4,

    Delta(t) = (-1)^m1 t^(n-1) [ (n-2)^(n-2) (a^2-4b) t^2 + gamma t - n^n b^(n-1) ]

with m0 = floor((n-3)/2), m1 = ceil((n-3)/2) and gamma a finite sum over
k = 0..m0 of terms built from S_k.  The pieces below are kept separate so
each can be checked against an independent route.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from gmpy2 import mpq

from .bezoutian import w_recurrence
from .exact_core import Poly
from .exact_core.rational import qpow
from .params import QuadrinomialParams, ReductionParams


def binom(n: int, m: int) -> int:
    """C(n, m), zero when m < 0 or n < m."""
    if m < 0 or n < m or n < 0:
        return 0
    return comb(n, m)


def s_k(params: QuadrinomialParams, k: int):
    n, a, b = params.n, params.a, params.b
    if n < 4:
        raise ValueError("S_k is defined for n >= 4")
    if not 0 <= k <= params.m0:
        raise ValueError(f"k={k} outside 0..{params.m0}")
    c1 = binom(n - k - 3, k)
    mid = mpq(n * (n - 1) * (5 * n * n - (6 * k + 23) * n + 10 * k + 24), n - k - 3)
    return (
        (n - 1) ** 3 * c1 * a**4
        - mid * c1 * a**2 * b
        + 4 * n * n * (n - 2) * binom(n - k - 4, k) * b**2
    )


def _a_power(a, e: int):
    # a = 0 with e > 0 kills the term; a = 0 with e < 0 only arises for odd n
    if a == 0:
        if e < 0:
            raise ZeroDivisionError("negative power of a = 0")
        return mpq(1) if e == 0 else mpq(0)
    return qpow(a, e)


def gamma_c(params: QuadrinomialParams):
    """Linear coefficient of the bracket; 0 for a = 0 with n odd."""
    n, a, b = params.n, params.a, params.b
    if n < 4:
        raise ValueError("gamma_c is defined for n >= 4")
    if a == 0 and n % 2 == 1:
        return mpq(0)
    total = mpq(0)
    for k in range(params.m0 + 1):
        e = n - 2 * k - 4
        term = (
            (-1) ** (n + k)
            * mpq(n) ** k
            * qpow(n - 1, e)
            * mpq(n - 2) ** k
            * _a_power(a, e)
            * b**k
            * s_k(params, k)
        )
        total += term
    return total


@dataclass(frozen=True)
class ClosedFormParts:
    quadratic_coeff: object
    gamma_c: object
    constant_coeff: object
    sign: int
    xbar: dict = field(default_factory=dict, compare=False)

    def bracket(self) -> Poly:
        return Poly((self.constant_coeff, self.gamma_c, self.quadratic_coeff), "t")


def closed_form_parts(params: QuadrinomialParams) -> ClosedFormParts:
    n, a, b = params.n, params.a, params.b
    if n < 4:
        raise ValueError("closed_form_parts needs n >= 4")
    xb = {m: xbar(params, m) for m in (n - 3, n - 2, n - 1)} if n >= 5 else {}
    return ClosedFormParts(
        quadratic_coeff=mpq(n - 2) ** (n - 2) * (a * a - 4 * b),
        gamma_c=gamma_c(params),
        constant_coeff=-(mpq(n) ** n) * b ** (n - 1),
        sign=(-1) ** params.m1,
        xbar=xb,
    )


def discriminant_closed_form(params: QuadrinomialParams) -> Poly:
    """Delta(f_c(t; x)) as a polynomial in t."""
    n, a, b = params.n, params.a, params.b
    if n < 3:
        raise ValueError("n must be >= 3")
    if n == 3:
        bracket = Poly((-27 * b * b, -(4 * a**3 - 18 * a * b), a * a - 4 * b), "t")
        return bracket.shift_degree(2)
    if n == 4:
        bracket = Poly((-256 * b**3, 27 * a**4 - 144 * a * a * b + 128 * b * b, 4 * a * a - 16 * b), "t")
        return (-bracket).shift_degree(3)
    parts = closed_form_parts(params)
    return (parts.bracket() * parts.sign).shift_degree(n - 1)


def q_bracket(params: QuadrinomialParams) -> Poly:
    """Q(t) = (n-2)^(n-2)(a^2-4b) t^2 + gamma t - n^n b^(n-1)  (n >= 4)."""
    return closed_form_parts(params).bracket()


# -- x-bar and the alpha/beta split --------------------------------------


def xbar(params: QuadrinomialParams, m: int):
    """t-coefficient of x-bar_m: the W recurrence at q=-(n-2), r=-(n-1)a, s=-nb."""
    return w_recurrence(params.reduction(), m)[0][1]


def x_closed_form(rp: ReductionParams, m: int):
    """t-coefficient of x_m from the binomial expansion of the two-root formula.

    (-1)^m / (2^m q^(m-2)) * 2 * sum_k C(m, 2k+1) r^(m-2k-1) (r^2-4qs)^k
    """
    q, r, s = rp.q, rp.r, rp.s
    disc = r * r - 4 * q * s
    total = mpq(0)
    for k in range((m - 1) // 2 + 1 if m >= 1 else 0):
        total += binom(m, 2 * k + 1) * qpow(r, m - 2 * k - 1) * disc**k
    return (-1) ** m * 2 * total / (mpq(2) ** m * qpow(q, m - 2))


def x_repeated_root_form(rp: ReductionParams, m: int):
    """t-coefficient of x_m when r^2 = 4qs: (-1)^m m r^(m-1) / (2^(m-1) q^(m-2))."""
    q, r = rp.q, rp.r
    if r * r != 4 * q * rp.s:
        raise ValueError("repeated-root form needs r^2 = 4 q s")
    if m == 0:
        return mpq(0)
    return (-1) ** m * m * qpow(r, m - 1) / (mpq(2) ** (m - 1) * qpow(q, m - 2))


def alpha_beta(params: QuadrinomialParams) -> tuple:
    """(t^3-coefficient of alpha(t), t^2-coefficient of beta(t)) from x-bar values.

    These are the t^4-free parts of the trailing 2x2 determinant of the
    reduced matrix; compare with :func:`alpha_from_sum` and
    -n^(n-1) b^(n-1) / (n-2)^(n-3).
    """
    n, a, b = params.n, params.a, params.b
    if n < 5:
        raise ValueError("alpha_beta needs n >= 5")
    x3, x2, x1 = xbar(params, n - 3), xbar(params, n - 2), xbar(params, n - 1)
    alpha = 2 * n * b * b * x3 / (n - 2) + ((n - 1) * a * a - 2 * n * b) * x1 / n + 2 * a * b * x2
    beta = mpq(n * n) * b * b / (n - 2) ** 2 * (x1 * x3 - x2 * x2)
    return alpha, beta


def alpha_from_sum(params: QuadrinomialParams):
    n = params.n
    return gamma_c(params) / (n * mpq(n - 2) ** (n - 3))


def beta_closed(params: QuadrinomialParams):
    n, b = params.n, params.b
    return -(mpq(n) ** (n - 1)) * b ** (n - 1) / mpq(n - 2) ** (n - 3)


# -- binomial identities -------------------------------------------------


def binomial_identity(N: int, k: int, which: str) -> tuple[int, int]:
    """(lhs, rhs) of the two parity-split binomial sums.

    odd_slots:  sum_j C(N+1, 2j+1) C(j, k) = 2^(N-2k) C(N-k, k)
    even_slots: sum_j C(N+1, 2j) C(j, k)   = 2^(N-2k) [C(N+1-k, k) + C(N-k, k-1)]
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    if which == "odd_slots":
        top = N // 2
        if not 0 <= k <= top:
            raise ValueError(f"k={k} outside 0..{top}")
        lhs = sum(binom(N + 1, 2 * j + 1) * binom(j, k) for j in range(k, top + 1))
        rhs = 2 ** (N - 2 * k) * binom(N - k, k)
    elif which == "even_slots":
        top = (N + 1) // 2
        if not 0 <= k <= top:
            raise ValueError(f"k={k} outside 0..{top}")
        lhs = sum(binom(N + 1, 2 * j) * binom(j, k) for j in range(k, top + 1))
        rhs = (binom(N + 1 - k, k) + binom(N - k, k - 1)) * mpq(2) ** (N - 2 * k)
        rhs = int(rhs) if rhs.denominator == 1 else rhs
    else:
        raise ValueError(f"unknown identity {which!r}")
    return lhs, rhs


__all__ = [
    "ClosedFormParts",
    "alpha_beta",
    "alpha_from_sum",
    "beta_closed",
    "binom",
    "binomial_identity",
    "closed_form_parts",
    "discriminant_closed_form",
    "gamma_c",
    "q_bracket",
    "s_k",
    "x_closed_form",
    "x_repeated_root_form",
    "xbar",
]
