"""Bezoutian matrices and the congruence reduction of M_n(x^n + t g_c).

The Bezoutian of f1, f2 at level n is the coefficient matrix (alpha_ij) of

    (f1(x) f2(y) - f1(y) f2(x)) / (x - y) = sum alpha_ij x^(n-i) y^(n-j).

For f = x^n + t(x^2 + a x + b) the matrix M_n(f, f') is reduced by explicit
column/row operations to an antidiagonal block of -(n-2)t entries plus a
trailing 2x2 block.  The same operations applied to the "generic" matrix
W(t)_1 (superdiagonal constants q t, r t, s t) produce the sparse shape
checked by :func:`check_reduced_shape`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from gmpy2 import mpq

from .exact_core import Poly, RatFunc, SymMatrix, congruence, identity, matmul
from .exact_core.rational import Q
from .params import QuadrinomialParams, ReductionParams

_MPQ = type(mpq())


def _coeff_list(f) -> list:
    if isinstance(f, Poly):
        return list(f.coeffs)
    cs = list(f)
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _zero_like(sample):
    if isinstance(sample, Poly):
        return Poly((), sample.var)
    if isinstance(sample, RatFunc):
        return RatFunc(0, var=sample.var)
    return mpq(0)


@dataclass(frozen=True)
class BezoutianMatrix:
    inner: SymMatrix
    level: int
    sources: tuple

    def verify_identity(self) -> bool:
        """Check (x - y) * B(x, y) == f1(x) f2(y) - f1(y) f2(x) term by term."""
        n = self.level
        u, v = (_coeff_list(f) for f in self.sources)
        lhs: dict = {}
        for i in range(n):
            for j in range(n):
                c = self.inner[i, j]
                if not c:
                    continue
                ex, ey = n - 1 - i, n - 1 - j
                lhs[(ex + 1, ey)] = lhs.get((ex + 1, ey), 0) + c
                lhs[(ex, ey + 1)] = lhs.get((ex, ey + 1), 0) - c
        rhs: dict = {}
        for i, ui in enumerate(u):
            for j, vj in enumerate(v):
                if ui and vj:
                    rhs[(i, j)] = rhs.get((i, j), 0) + ui * vj
                    rhs[(j, i)] = rhs.get((j, i), 0) - ui * vj
        keys = set(lhs) | set(rhs)
        return all(not (lhs.get(k, 0) - rhs.get(k, 0)) for k in keys)


def build_bezoutian(f1, f2, level: int) -> BezoutianMatrix:
    """Bezoutian M_level(f1, f2).

    ``f1``/``f2`` are :class:`Poly` over Q or constant-first coefficient
    sequences over any commutative ring (e.g. Poly-in-t coefficients).
    """
    u, v = _coeff_list(f1), _coeff_list(f2)
    deg = max(len(u), len(v)) - 1
    if level < max(deg, 1):
        raise ValueError(f"level {level} is below max degree {deg}")
    sample = next((c for c in u + v if c), mpq(0))
    zero = _zero_like(sample)
    u = u + [zero] * (level + 1 - len(u))
    v = v + [zero] * (level + 1 - len(v))
    acc: dict = {}
    for i in range(level + 1):
        for j in range(i):
            c = u[i] * v[j] - u[j] * v[i]
            if not c:
                continue
            # (x^i y^j - x^j y^i)/(x - y) = sum_p x^(j+p) y^(i-1-p)
            for p in range(i - j):
                key = (j + p, i - 1 - p)
                acc[key] = acc[key] + c if key in acc else c
    rows = [[zero] * level for _ in range(level)]
    for (ex, ey), c in acc.items():
        rows[level - 1 - ex][level - 1 - ey] = c
    return BezoutianMatrix(SymMatrix(rows), level, (f1, f2))


def bezoutian_of(f: Poly, level: int | None = None) -> SymMatrix:
    """M_n(f) = M_n(f, f') with n = deg f by default."""
    return build_bezoutian(f, f.derivative(), f.degree if level is None else level).inner


def bezout_linearity_check(f1: Poly, f2: Poly, g: Poly, lam, level: int) -> bool:
    """Linearity in the first slot and antisymmetry, compared exactly."""
    lam = Q(lam)
    m = lambda p, q: build_bezoutian(p, q, level).inner  # noqa: E731
    linear = m(f1 + g * lam, f2) == m(f1, f2) + m(g, f2).scale(lam)
    antisym = m(f1, f2) == -m(f2, f1)
    return linear and antisym


# -- the quadrinomial family ---------------------------------------------


def quadrinomial_coeffs(params: QuadrinomialParams) -> list[Poly]:
    """Coefficients of f_c(t; x) in x, each a polynomial in t."""
    n, a, b = params.n, params.a, params.b
    cs = [Poly((), "t") for _ in range(n + 1)]
    cs[0] = Poly((0, b), "t")
    cs[1] = Poly((0, a), "t")
    cs[2] = Poly((0, 1), "t")
    cs[n] = Poly.const(1, "t")
    return cs


def _derivative_coeffs(cs: list) -> list:
    return [c * i for i, c in enumerate(cs)][1:]


def build_A_c(params: QuadrinomialParams) -> SymMatrix:
    """A_c(t) = M_n(f_c, f_c') with entries in Q[t]."""
    if params.n < 3:
        raise ValueError("build_A_c needs n >= 3")
    cs = quadrinomial_coeffs(params)
    return build_bezoutian(cs, _derivative_coeffs(cs), params.n).inner


@dataclass(frozen=True)
class ElementaryMatrix:
    """Scale(k, c): identity with c at (k,k).  AddCol(k, l, c): identity plus c at (k,l).

    Indices are 1-based.  Right-multiplying by AddCol(k, l, c) adds c times
    column k to column l.
    """

    kind: str
    dim: int
    k: int
    c: object
    l: int | None = None

    def matrix(self, one=mpq(1), zero=mpq(0)) -> list:
        m = identity(self.dim, one, zero)
        if self.kind == "scale":
            m[self.k - 1][self.k - 1] = self.c
        elif self.kind == "addcol":
            if self.l == self.k:
                raise ValueError("AddCol needs k != l")
            m[self.k - 1][self.l - 1] = self.c
        else:
            raise ValueError(f"unknown elementary kind {self.kind!r}")
        return m


def Scale(dim: int, k: int, c) -> ElementaryMatrix:
    return ElementaryMatrix("scale", dim, k, c)


def AddCol(dim: int, k: int, l: int, c) -> ElementaryMatrix:
    return ElementaryMatrix("addcol", dim, k, c, l)


def _to_ratfunc(m: SymMatrix) -> SymMatrix:
    return m.map(lambda x: x if isinstance(x, RatFunc) else RatFunc(x, var="t"))


def _product(ops: Sequence[ElementaryMatrix], dim: int) -> list:
    one, zero = RatFunc(1, var="t"), RatFunc(0, var="t")
    s = identity(dim, one, zero)
    for op in ops:
        s = matmul(s, op.matrix(one, zero))
    return s


def _apply(m: SymMatrix, ops: Sequence[ElementaryMatrix]) -> SymMatrix:
    if not ops:
        return m
    out = congruence(m, _product(ops, m.dim))
    return _to_ratfunc(out)


def first_step_ops(m: SymMatrix) -> list[ElementaryMatrix]:
    """Clear row 1 against the (1,1) pivot, leaving the pivot unscaled."""
    n = m.dim
    piv = m[0, 0]
    return [AddCol(n, 1, l, -m[0, l - 1] / piv) for l in (n - 1, n) if m[0, l - 1]]


def step_ops(m: SymMatrix, k: int, n0: int) -> list[ElementaryMatrix]:
    """Column operations of reduction step k (2 <= k <= n-2), pivot at (k, n-k)."""
    n = m.dim
    pc = n - k
    piv = m[k - 1, pc - 1]
    if not piv:
        raise ArithmeticError(f"zero pivot at ({k},{pc})")
    ops = []
    if k > n0:
        if m[k - 1, k - 1]:
            ops.append(AddCol(n, pc, k, -m[k - 1, k - 1] / (piv * 2)))
        first = k + 1
    else:
        first = n - k + 1
    for col in range(first, n + 1):
        if m[k - 1, col - 1]:
            ops.append(AddCol(n, pc, col, -m[k - 1, col - 1] / piv))
    return ops


def _run_steps(m: SymMatrix, n0: int, stages: dict) -> SymMatrix:
    n = m.dim
    for k in range(2, n - 1):
        m = _apply(m, step_ops(m, k, n0))
        stages[k] = m
    return m


def pipeline_stages(params: QuadrinomialParams) -> dict[int, SymMatrix]:
    """A_c(t)_k for k = 0 (the input) and 1..n-2, with (1,1) left at n."""
    if params.n < 5:
        raise ValueError("the reduction pipeline needs n >= 5")
    a0 = _to_ratfunc(build_A_c(params))
    stages = {0: a0}
    a1 = _apply(a0, first_step_ops(a0))
    stages[1] = a1
    _run_steps(a1, params.reduction().n0, stages)
    return stages


def reduce_pipeline(params: QuadrinomialParams) -> tuple[SymMatrix, object]:
    """Return (A_c(t)_{n-2}, n) with det A_c(t) = n * det A_c(t)_{n-2}.

    The first pivot is divided out of the (1,1) entry instead of applying a
    1/sqrt(n) scaling, so everything stays in Q(t).
    """
    stages = pipeline_stages(params)
    final = stages[params.n - 2]
    n = params.n
    rows = final.rows()
    if rows[0][0] != n:
        raise ArithmeticError("first pivot changed during reduction")
    rows[0][0] = RatFunc(1, var="t")
    return SymMatrix(rows), mpq(n)


# -- the generic W(t) reduction ------------------------------------------


def build_W1(rp: ReductionParams) -> SymMatrix:
    n = rp.n
    zero = RatFunc(0, var="t")
    rows = [[zero] * n for _ in range(n)]
    for i in range(2, n + 1):
        for j in range(2, n + 1):
            if i + j == n and i <= n - 2 and j <= n - 2:
                rows[i - 1][j - 1] = RatFunc(Poly((0, rp.q), "t"))
            elif i + j == n + 1 and i <= n - 1 and j <= n - 1:
                rows[i - 1][j - 1] = RatFunc(Poly((0, rp.r), "t"))
            elif i + j == n + 2:
                rows[i - 1][j - 1] = RatFunc(Poly((0, rp.s), "t"))
    return SymMatrix(rows)


def w_stages(rp: ReductionParams) -> dict[int, SymMatrix]:
    """W(t)_k for k = 1..n-2."""
    if rp.q == 0:
        raise ValueError("q must be nonzero")
    w1 = build_W1(rp)
    stages = {1: w1}
    _run_steps(w1, rp.n0, stages)
    return stages


def w_recurrence(rp: ReductionParams, m: int) -> tuple[Poly, Poly]:
    """(x_m, y_m) from x_0=0, x_1=-qt, x_2=rt, x_{m+2}=-(r/q)x_{m+1}-(s/q)x_m; y_{m+1}=-(s/q)x_m."""
    if rp.q == 0:
        raise ValueError("q must be nonzero")
    if m < 0:
        raise ValueError("m must be >= 0")
    q, r, s = rp.q, rp.r, rp.s
    xs = [mpq(0), -q, r]
    while len(xs) <= m:
        xs.append(-(r / q) * xs[-1] - (s / q) * xs[-2])
    y = mpq(0) if m <= 1 else -(s / q) * xs[m - 1]
    return Poly((0, xs[m]), "t"), Poly((0, y), "t")


def reduced_template(rp: ReductionParams) -> SymMatrix:
    n = rp.n
    zero = RatFunc(0, var="t")
    rows = [[zero] * n for _ in range(n)]
    for i in range(2, n - 1):
        rows[i - 1][n - i - 1] = RatFunc(Poly((0, rp.q), "t"))
    x_n1, y_n1 = w_recurrence(rp, n - 1)
    _, y_n2 = w_recurrence(rp, n - 2)
    rows[n - 2][n - 2] = RatFunc(x_n1)
    rows[n - 2][n - 1] = rows[n - 1][n - 2] = RatFunc(y_n1)
    rows[n - 1][n - 1] = RatFunc(y_n2 * (-rp.s / rp.q))
    return SymMatrix(rows)


def check_reduced_shape(rp: ReductionParams) -> bool:
    """W(t)_{n-2} from the pipeline equals the sparse template exactly."""
    if rp.n < 5:
        raise ValueError("check_reduced_shape needs n >= 5")
    return w_stages(rp)[rp.n - 2] == reduced_template(rp)


def check_midpoint_shape(rp: ReductionParams) -> bool:
    """W(t)_{n0}: rows 2..n0 hold only their qt pivot and the trailing block is final."""
    n, n0 = rp.n, rp.n0
    w = w_stages(rp)[n0]
    qt = RatFunc(Poly((0, rp.q), "t"))
    for k in range(2, n0 + 1):
        for j in range(1, n + 1):
            expect = qt if j == n - k else 0
            if w[k - 1, j - 1] != expect:
                return False
    tmpl = reduced_template(rp)
    return all(w[i, j] == tmpl[i, j] for i in (n - 2, n - 1) for j in (n - 2, n - 1))


__all__ = [
    "AddCol",
    "BezoutianMatrix",
    "ElementaryMatrix",
    "Scale",
    "bezout_linearity_check",
    "bezoutian_of",
    "build_A_c",
    "build_W1",
    "build_bezoutian",
    "check_midpoint_shape",
    "check_reduced_shape",
    "pipeline_stages",
    "reduced_template",
    "quadrinomial_coeffs",
    "reduce_pipeline",
    "w_recurrence",
    "w_stages",
]
