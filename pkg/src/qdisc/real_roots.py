"""Exact real-root counting: Sturm sequences, Bezoutian inertia, and the
root-count predictions for x^n + t g(x).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from gmpy2 import mpq

from .bezoutian import bezoutian_of, build_bezoutian
from .closed_form import discriminant_closed_form, q_bracket
from .exact_core import Poly, SymMatrix, det_bareiss, poly_gcd
from .exact_core.rational import Q, to_fraction
from .params import QuadrinomialParams

NEG_INFINITY = "-inf"
POS_INFINITY = "+inf"

DEFAULT_WIDTH = mpq(1, 2**30)


# -- Sturm -------------------------------------------------------------------


def sturm_sequence(f: Poly) -> list[Poly]:
    """Signed remainder sequence of (f, f') for the squarefree part of f."""
    p = f.squarefree_part()
    seq = [p, p.derivative()]
    while seq[-1]:
        r = seq[-2] % seq[-1]
        if not r:
            break
        seq.append(-r)
    return [s for s in seq if s]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_at(p: Poly, x) -> int:
    if x == POS_INFINITY:
        return _sign(p.lc)
    if x == NEG_INFINITY:
        return _sign(p.lc) * (-1 if p.degree % 2 else 1)
    return _sign(p(x))


def _variations(seq: list[Poly], x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in seq) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_count(f: Poly, lo=NEG_INFINITY, hi=POS_INFINITY, seq: Optional[list] = None) -> int:
    """Number of distinct real roots of f in (lo, hi]."""
    if not f:
        raise ValueError("sturm_count of the zero polynomial")
    if f.degree == 0:
        return 0
    seq = sturm_sequence(f) if seq is None else seq
    lo = lo if lo in (NEG_INFINITY, POS_INFINITY) else Q(lo)
    hi = hi if hi in (NEG_INFINITY, POS_INFINITY) else Q(hi)
    return _variations(seq, lo) - _variations(seq, hi)


# -- inertia -----------------------------------------------------------------


@dataclass(frozen=True)
class InertiaResult:
    positives: int
    negatives: int
    zeros: int

    @property
    def signature(self) -> int:
        return self.positives - self.negatives

    @property
    def dim(self) -> int:
        return self.positives + self.negatives + self.zeros


def inertia(m) -> InertiaResult:
    """Inertia of a rational symmetric matrix by congruence elimination.

    A zero diagonal with a nonzero off-diagonal entry c is handled as the
    hyperbolic 2x2 block [[0, c], [c, 0]], which contributes one positive
    and one negative eigenvalue.
    """
    rows = m.rows() if isinstance(m, SymMatrix) else [list(r) for r in m]
    a = [[Q(x) for x in r] for r in rows]
    active = list(range(len(a)))
    pos = neg = 0
    while active:
        piv = next((i for i in active if a[i][i]), None)
        if piv is not None:
            p = a[piv][piv]
            pos += p > 0
            neg += p < 0
            active.remove(piv)
            col = [a[u][piv] for u in active]
            for iu, u in enumerate(active):
                cu = col[iu]
                if not cu:
                    continue
                f = cu / p
                for iv, v in enumerate(active):
                    if col[iv]:
                        a[u][v] -= f * col[iv]
            continue
        pair = next(((i, j) for i in active for j in active if i < j and a[i][j]), None)
        if pair is None:
            break
        i, j = pair
        c = a[i][j]
        pos += 1
        neg += 1
        active.remove(i)
        active.remove(j)
        ci = [a[u][i] for u in active]
        cj = [a[u][j] for u in active]
        for iu, u in enumerate(active):
            for iv, v in enumerate(active):
                upd = ci[iu] * cj[iv] + cj[iu] * ci[iv]
                if upd:
                    a[u][v] -= upd / c
    zeros = len(a) - pos - neg
    return InertiaResult(pos, neg, zeros)


# -- counting ------------------------------------------------------------------


@dataclass(frozen=True)
class RootCount:
    count: int
    inertia: InertiaResult
    separable: bool


def count_real_roots(f: Poly) -> int:
    """Distinct real roots of f, by Bezoutian signature and by Sturm; they must agree."""
    return count_real_roots_detail(f).count


def count_real_roots_detail(f: Poly) -> RootCount:
    if not f:
        raise ValueError("count_real_roots of the zero polynomial")
    if f.degree == 0:
        return RootCount(0, InertiaResult(0, 0, 0), True)
    sturm = sturm_count(f)
    inr = inertia(bezoutian_of(f))
    if inr.signature != sturm:
        raise AssertionError(
            f"Bezoutian signature {inr.signature} disagrees with Sturm count {sturm} for {f}"
        )
    return RootCount(sturm, inr, inr.zeros == 0)


# -- isolation -----------------------------------------------------------------


@dataclass(frozen=True)
class RootIsolation:
    """Disjoint half-open intervals (lo, hi], each holding exactly one root."""

    intervals: list
    exact_roots: list = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.intervals)


def cauchy_bound(f: Poly):
    lc = abs(f.lc)
    return 1 + max((abs(c) / lc for c in f.coeffs[:-1]), default=mpq(0))


def isolate_real_roots(f: Poly, width=DEFAULT_WIDTH) -> RootIsolation:
    """Sturm bisection from the Cauchy bound down to intervals narrower than ``width``."""
    if not f:
        raise ValueError("cannot isolate roots of the zero polynomial")
    width = Q(width)
    p = f.squarefree_part()
    if p.degree <= 0:
        return RootIsolation([], [])
    seq = sturm_sequence(p)
    bound = cauchy_bound(p)
    intervals: list = []
    exact: list = []
    stack = [(-bound, bound, sturm_count(p, -bound, bound, seq))]
    while stack:
        lo, hi, c = stack.pop()
        if c == 0:
            continue
        if c == 1:
            if not p(hi):
                exact.append(hi)
                intervals.append((max(lo, hi - width), hi))
                continue
            while hi - lo > width:
                mid = (lo + hi) / 2
                if not p(mid):
                    exact.append(mid)
                    lo, hi = max(lo, mid - width), mid
                    break
                if sturm_count(p, lo, mid, seq):
                    hi = mid
                else:
                    lo = mid
            intervals.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = sturm_count(p, lo, mid, seq)
        stack.append((mid, hi, c - left))
        stack.append((lo, mid, left))
    intervals.sort()
    exact.sort()
    return RootIsolation(intervals, exact)


def _exact_rational_root(p: Poly, lo, hi):
    """The rational root of p in (lo, hi] if there is one, else None.

    Refines until the interval is narrower than 1/L^2 (L the leading
    coefficient of the primitive integer form), where at most one rational
    with denominator dividing L can lie; the best approximation with
    denominator <= L is then the only candidate.
    """
    prim = p.primitive_integer()
    L = int(prim.lc)
    seq = sturm_sequence(prim)
    limit = mpq(1, 2 * L * L)
    while hi - lo > limit:
        mid = (lo + hi) / 2
        if not prim(mid):
            return mid
        if sturm_count(prim, lo, mid, seq):
            hi = mid
        else:
            lo = mid
    if not prim(hi):
        return hi
    cand = to_fraction((lo + hi) / 2).limit_denominator(L)
    cand = mpq(cand.numerator, cand.denominator)
    if lo < cand <= hi and not prim(cand):
        return cand
    return None


@dataclass(frozen=True)
class AlphaBound:
    """Largest real root: exact when rational, otherwise inside (lo, hi]."""

    lo: object
    hi: object
    exact: object = None
    poly: Optional[Poly] = field(default=None, compare=False, repr=False)

    def is_below(self, t) -> bool:
        """True iff the root is strictly less than t."""
        t = Q(t)
        if self.exact is not None:
            return self.exact < t
        if t > self.hi:
            return True
        if t <= self.lo:
            return False
        # irrational root and lo < t <= hi: split at t
        return sturm_count(self.poly, t, self.hi) == 0


def largest_real_root(p: Poly, width=DEFAULT_WIDTH) -> AlphaBound:
    if not p:
        raise ValueError("largest root of the zero polynomial")
    iso = isolate_real_roots(p, width)
    if not iso.intervals:
        raise ValueError("polynomial has no real root")
    lo, hi = iso.intervals[-1]
    sf = p.squarefree_part()
    ex = _exact_rational_root(sf, lo, hi)
    if ex is not None:
        return AlphaBound(ex, ex, ex, sf)
    return AlphaBound(lo, hi, None, sf)


def alpha_c(params: QuadrinomialParams, width=DEFAULT_WIDTH) -> AlphaBound:
    """Largest real root of P_c(t) = Delta(x^n + t(x^2 + a x + b))."""
    if params.a == 0 and params.b == 0:
        raise ValueError("a = b = 0 is degenerate: x^n + t x^2 has no meaningful alpha_c")
    return largest_real_root(discriminant_closed_form(params), width)


# -- predictions for x^n + t g(x) ----------------------------------------------


def family_coeffs(n: int, g: Poly) -> list[Poly]:
    """Coefficients in x of x^n + t g(x), each a polynomial in t."""
    cs = [Poly((0, c), "t") for c in g.coeffs] + [Poly((), "t")] * (n + 1 - len(g.coeffs))
    cs[n] = cs[n] + Poly.const(1, "t")
    return cs


def family_discriminant(n: int, g: Poly) -> Poly:
    """P_r(t) = det M_n(x^n + t g) as a polynomial in t."""
    cs = family_coeffs(n, g)
    dcs = [c * i for i, c in enumerate(cs)][1:]
    return det_bareiss(build_bezoutian(cs, dcs, n).inner)


def instantiate(n: int, g: Poly, t) -> Poly:
    return Poly.monomial(n, 1) + g * Q(t)


def predict_root_count(n: int, g: Poly, t, alpha: Optional[AlphaBound] = None) -> int:
    """Root count of x^n + t g(x) for t beyond the largest root of P_r."""
    t = Q(t)
    s = g.degree
    if not g or s >= n:
        raise ValueError("g must be nonzero with deg g < n")
    if s >= 1 and poly_gcd(g, g.derivative()).degree > 0:
        raise ValueError("g is not separable")
    if alpha is None:
        alpha = largest_real_root(family_discriminant(n, g))
    if not alpha.is_below(t):
        raise ValueError("prediction not applicable: t must exceed alpha_r")
    gamma = count_real_roots(g)
    if (n - s) % 2:
        pred = gamma + 1
    elif g.lc > 0:
        pred = gamma
    else:
        pred = gamma + 2
    actual = sturm_count(instantiate(n, g, t))
    if actual != pred:
        raise AssertionError(f"predicted {pred} real roots, Sturm finds {actual}")
    return pred


class Certification(enum.Enum):
    CERTIFIED = "Certified"
    NOT_APPLICABLE = "NotApplicable"


def certify_totally_complex(params: QuadrinomialParams, t) -> Certification:
    """Certify x^n + t(x^2+ax+b) has no real root (n even, b != 0, b >= threshold)."""
    t = Q(t)
    if t <= 0:
        raise ValueError("t must be positive")
    n, b = params.n, params.b
    if n < 4 or n % 2 or b == 0 or params.threshold > b:
        return Certification.NOT_APPLICABLE
    f = instantiate(n, Poly((b, params.a, 1)), t)
    found = sturm_count(f)
    if found != 0:
        raise AssertionError(f"certified polynomial {f} has {found} real roots")
    return Certification.CERTIFIED


@dataclass(frozen=True)
class SquareCheck:
    ok: bool
    q: Poly
    leading: object
    vertex: object


def completed_square(params: QuadrinomialParams) -> tuple:
    """(leading, vertex) with Q(t) = leading * (t - vertex)^2 on the boundary."""
    n, a = params.n, params.a
    leading = -(mpq(n - 2) ** (n - 3)) * a * a / n
    vertex = -((-1) ** n) * n * mpq(n - 1) ** (n - 1) * a ** (n - 2) / (mpq(2) ** (n - 1) * mpq(n - 2) ** (n - 2))
    return leading, vertex


def q_perfect_square_detail(params: QuadrinomialParams) -> SquareCheck:
    if params.n < 4:
        raise ValueError("the boundary square needs n >= 4")
    if params.a == 0:
        raise ValueError("the boundary square needs a != 0")
    if params.b != params.threshold:
        raise ValueError("b is not on the boundary (n-1)^2 a^2 / (4n(n-2))")
    q = q_bracket(params)
    disc = q[1] ** 2 - 4 * q[2] * q[0]
    leading, vertex = completed_square(params)
    square = Poly((-vertex, 1), "t") ** 2 * leading
    return SquareCheck(disc == 0 and square == q, q, leading, vertex)


def q_perfect_square_check(params: QuadrinomialParams) -> bool:
    """Q(t) has zero discriminant and equals -((n-2)^(n-3) a^2 / n)(t - vertex)^2."""
    return q_perfect_square_detail(params).ok


__all__ = [
    "AlphaBound",
    "Certification",
    "InertiaResult",
    "RootIsolation",
    "alpha_c",
    "cauchy_bound",
    "certify_totally_complex",
    "completed_square",
    "count_real_roots",
    "count_real_roots_detail",
    "family_discriminant",
    "inertia",
    "instantiate",
    "isolate_real_roots",
    "largest_real_root",
    "predict_root_count",
    "q_perfect_square_check",
    "sturm_count",
    "sturm_sequence",
]
