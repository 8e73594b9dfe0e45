"""Dense univariate polynomials over the rationals.

Coefficients are stored constant-term first.  The zero polynomial is the
empty tuple and reports degree :data:`NEG_INF`.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from gmpy2 import mpq

from .rational import Q, format_rational, parse_rational

NEG_INF = float("-inf")

_ZERO = mpq(0)
_ONE = mpq(1)


class Poly:
    """Immutable dense polynomial with :class:`mpq` coefficients.

    ``var`` is a display tag only; arithmetic never checks it.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        cs = [c if type(c) is type(_ZERO) else Q(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple = tuple(cs)
        self.var = var

    @classmethod
    def _raw(cls, cs: list, var: str) -> "Poly":
        # cs must already hold mpq values
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(cs)
        p.var = var
        return p

    @classmethod
    def const(cls, c, var: str = "x") -> "Poly":
        return cls((c,), var)

    @classmethod
    def monomial(cls, deg: int, c=1, var: str = "x") -> "Poly":
        return cls([0] * deg + [c], var)

    @classmethod
    def from_text(cls, text: str, var: str = "x") -> "Poly":
        """Parse the comma-separated, constant-first exchange format."""
        parts = [s for s in text.split(",")]
        if not text.strip() or any(not s.strip() for s in parts):
            raise ValueError(f"malformed polynomial literal: {text!r}")
        return cls([parse_rational(s) for s in parts], var)

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        return ",".join(format_rational(c) for c in self.coeffs)

    # -- basic queries -------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == Poly.const(other).coeffs
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly([{self.to_text()}], var={self.var!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            elif mono:
                s = f"({format_rational(c)})*{mono}" if c.denominator != 1 else f"{format_rational(c)}*{mono}"
            else:
                s = format_rational(c)
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ")

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other, self.var)

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            if isinstance(other, (int, type(_ZERO))):
                cs = list(self.coeffs) or [_ZERO]
                cs[0] = cs[0] + other
                return Poly._raw(cs, self.var)
            other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return Poly._raw(cs, self.var)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            if isinstance(other, (int, type(_ZERO))):
                if not other:
                    return Poly._raw([], self.var)
                return Poly._raw([c * other for c in self.coeffs], self.var)
            other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw([], self.var)
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly._raw(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly.const(1, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c) -> "Poly":
        return self * Q(c)

    def derivative(self) -> "Poly":
        return Poly._raw([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a rational or any ring element."""
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_at(self, x) -> "mpq":
        return self(Q(x))

    def shift_degree(self, k: int) -> "Poly":
        """Multiply by ``var**k``."""
        if not self.coeffs:
            return self
        return Poly._raw([_ZERO] * k + list(self.coeffs), self.var)

    def trailing_zero_order(self) -> int:
        """Largest k with var**k dividing self (0 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    # -- division --------------------------------------------------------

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division over the rationals."""
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lb = other.coeffs[-1]
        bc = other.coeffs
        if len(rem) - 1 < db:
            return Poly._raw([], self.var), self
        quo = [_ZERO] * (len(rem) - db)
        inv = _ONE / lb
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            c = c * inv
            quo[k - db] = c
            off = k - db
            for j in range(db + 1):
                rem[off + j] -= c * bc[j]
        return Poly._raw(quo, self.var), Poly._raw(rem[:db] if db else [], self.var)

    def __divmod__(self, other):
        return self.divmod(other)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other) -> "Poly":
        """Quotient ``self / other``; raises ``ArithmeticError`` if inexact."""
        if not isinstance(other, Poly):
            other = Q(other)
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            inv = _ONE / other
            return Poly._raw([c * inv for c in self.coeffs], self.var)
        q, r = self.divmod(other)
        if r.coeffs:
            raise ArithmeticError(f"inexact division of {self} by {other}")
        return q

    def pseudo_divide(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Return (q, r) with lc(other)^(deg self - deg other + 1) * self = q*other + r."""
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("pseudo-division by zero polynomial")
        if not self.coeffs or self.degree < other.degree:
            return Poly._raw([], self.var), self
        delta = self.degree - other.degree + 1
        q, r = (self * other.lc**delta).divmod(other)
        return q, r

    def prem(self, other: "Poly") -> "Poly":
        return self.pseudo_divide(other)[1]

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self.exact_div(self.lc)

    # -- integer structure -----------------------------------------------

    def primitive_integer(self) -> "Poly":
        """Positive-leading primitive integer polynomial with the same roots."""
        if not self.coeffs:
            return self
        from math import gcd, lcm

        den = 1
        for c in self.coeffs:
            den = lcm(den, int(c.denominator))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Poly._raw([mpq(v // g) for v in ints], self.var)

    def gcd(self, other: "Poly") -> "Poly":
        return poly_gcd(self, other)

    def squarefree_part(self) -> "Poly":
        if self.degree <= 0:
            return self.monic()
        g = poly_gcd(self, self.derivative())
        return self.exact_div(g).monic()


# -- subresultant machinery ---------------------------------------------


def subresultant_prs(f: Poly, g: Poly) -> list[Poly]:
    """Subresultant polynomial remainder sequence of ``f`` and ``g``.

    Requires ``deg f >= deg g``; terminates at the last nonzero member.
    """
    if f.degree < g.degree:
        raise ValueError("subresultant_prs needs deg f >= deg g")
    seq = [f, g]
    if not g:
        return [f]
    a, b = f, g
    gam = mpq(1)
    psi = mpq(-1)
    delta = a.degree - b.degree
    beta = mpq(-1) ** (delta + 1)
    while True:
        r = a.prem(b)
        if not r:
            break
        r = r.exact_div(beta)
        seq.append(r)
        a, b = b, r
        gam = a.lc
        psi = (-gam) ** delta / psi ** (delta - 1) if delta >= 1 else psi
        delta = a.degree - b.degree
        beta = -gam * psi**delta
    return seq


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd via the subresultant PRS (zero if both inputs are zero)."""
    if not f:
        return g.monic()
    if not g:
        return f.monic()
    if f.degree < g.degree:
        f, g = g, f
    return subresultant_prs(f, g)[-1].monic()


def resultant(f: Poly, g: Poly):
    """Res(f, g) by the subresultant algorithm (Collins / Brown)."""
    if not f or not g:
        return mpq(0)
    a, b = f, g
    s = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            s = -s
    if b.degree == 0:
        return s * b.lc ** a.degree
    gg = mpq(1)
    h = mpq(1)
    while True:
        delta = a.degree - b.degree
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            s = -s
        r = a.prem(b)
        if not r:
            return mpq(0)
        a = b
        b = r.exact_div(gg * h**delta)
        gg = a.lc
        h = h ** (1 - delta) * gg**delta if delta <= 1 else gg**delta / h ** (delta - 1)
        if b.degree <= 0:
            break
    h = b.lc ** a.degree / h ** (a.degree - 1) if a.degree >= 1 else h
    return s * h


def discriminant(f: Poly):
    """Standard discriminant (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    if n is NEG_INF or n < 1:
        raise ValueError("discriminant needs a polynomial of degree >= 1")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


def interpolate(xs: Sequence, ys: Sequence, var: str = "x") -> Poly:
    """Newton interpolation through the points (xs[i], ys[i])."""
    xs = [Q(x) for x in xs]
    coef = [Q(y) for y in ys]
    m = len(xs)
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = Poly.const(coef[-1], var)
    for i in range(m - 2, -1, -1):
        p = p * Poly((-xs[i], 1), var) + coef[i]
    return p


__all__ = [
    "NEG_INF",
    "Poly",
    "discriminant",
    "interpolate",
    "poly_gcd",
    "resultant",
    "subresultant_prs",
]
