"""Dense matrices over Q, Q[t] and Q(t): symmetric container, congruence, Bareiss."""

from __future__ import annotations

from typing import Any, Sequence

from gmpy2 import mpq

from .poly import Poly
from .ratfunc import RatFunc
from .rational import Q

_MPQ = type(mpq())

Matrix = list  # list of rows; rows are lists of ring elements


def _canon(x):
    if isinstance(x, (Poly, RatFunc, _MPQ)):
        return x
    return Q(x)


def identity(dim: int, one=mpq(1), zero=mpq(0)) -> Matrix:
    return [[one if i == j else zero for j in range(dim)] for i in range(dim)]


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    if not a or len(a[0]) != len(b):
        raise ValueError("dimension mismatch in matrix product")
    cols = len(b[0])
    out = []
    for row in a:
        acc: list[Any] = [0] * cols
        for k, x in enumerate(row):
            if not x:
                continue
            bk = b[k]
            for j in range(cols):
                y = bk[j]
                if y:
                    acc[j] = acc[j] + x * y
        out.append([_canon(v) if isinstance(v, int) else v for v in acc])
    return out


class SymMatrix:
    """Symmetric square matrix; symmetry is checked on construction."""

    __slots__ = ("entries", "dim")

    def __init__(self, entries: Sequence[Sequence]):
        rows = [[_canon(x) for x in row] for row in entries]
        dim = len(rows)
        if dim == 0 or any(len(r) != dim for r in rows):
            raise ValueError("SymMatrix needs a nonempty square array")
        for i in range(dim):
            for j in range(i + 1, dim):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i + 1},{j + 1})")
        self.entries = tuple(tuple(r) for r in rows)
        self.dim = dim

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> Matrix:
        return [list(r) for r in self.entries]

    def __eq__(self, other) -> bool:
        if isinstance(other, SymMatrix):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.entries)

    def map(self, fn) -> "SymMatrix":
        return SymMatrix([[fn(x) for x in r] for r in self.entries])

    def __add__(self, other: "SymMatrix") -> "SymMatrix":
        return SymMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "SymMatrix") -> "SymMatrix":
        return SymMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __neg__(self) -> "SymMatrix":
        return self.map(lambda x: -x)

    def scale(self, c) -> "SymMatrix":
        return self.map(lambda x: x * c)

    def __str__(self) -> str:
        cells = [[str(x) for x in r] for r in self.entries]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def __repr__(self) -> str:
        return f"SymMatrix(dim={self.dim})"


def congruence(m: SymMatrix, s: Sequence[Sequence]) -> SymMatrix:
    """Return ``S^T M S``."""
    if len(s) != m.dim or any(len(r) != m.dim for r in s):
        raise ValueError(f"congruence: S must be {m.dim}x{m.dim}")
    prod = matmul(transpose(s), matmul(m.rows(), s))
    return SymMatrix(prod)


# -- determinants ---------------------------------------------------------


def _bareiss(rows: Matrix, div, zero, one):
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        piv = m[k][k]
        rowk = m[k]
        for i in range(k + 1, n):
            rowi = m[i]
            lead = rowi[k]
            for j in range(k + 1, n):
                v = rowi[j] * piv
                if lead and rowk[j]:
                    v = v - lead * rowk[j]
                rowi[j] = div(v, prev)
        prev = piv
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def det_bareiss(m):
    """Fraction-free determinant.

    Entries over Q give an ``mpq``; entries over Q[t] give a :class:`Poly`
    (every Bareiss division is checked to be exact); entries in Q(t) are
    cleared row-wise to Q[t] first and the result is a :class:`RatFunc`.
    """
    rows = m.rows() if isinstance(m, SymMatrix) else [list(r) for r in m]
    n = len(rows)
    if n == 0:
        return mpq(1)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    flat = [x for r in rows for x in r]
    if any(isinstance(x, RatFunc) for x in flat):
        var = next(x.var for x in flat if isinstance(x, RatFunc))
        cleared = Poly.const(1, var)
        prows = []
        for r in rows:
            ents = [x if isinstance(x, RatFunc) else RatFunc(x, var=var) for x in r]
            d = Poly.const(1, var)
            for x in ents:
                if x.den.degree > 0:
                    d = d * x.den.exact_div(d.gcd(x.den))
            cleared = cleared * d
            prows.append([x.num * d.exact_div(x.den) for x in ents])
        return RatFunc(det_bareiss(prows), cleared)
    if any(isinstance(x, Poly) for x in flat):
        var = next(x.var for x in flat if isinstance(x, Poly))
        prows = [[x if isinstance(x, Poly) else Poly.const(x, var) for x in r] for r in rows]
        return _bareiss(prows, lambda a, b: a.exact_div(b), Poly((), var), Poly.const(1, var))
    qrows = [[Q(x) if not isinstance(x, _MPQ) else x for x in r] for r in rows]
    return _bareiss(qrows, lambda a, b: a / b, mpq(0), mpq(1))


__all__ = ["Matrix", "SymMatrix", "congruence", "det_bareiss", "identity", "matmul", "transpose"]
