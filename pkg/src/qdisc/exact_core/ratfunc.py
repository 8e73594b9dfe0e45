"""The rational function field Q(t)."""

from __future__ import annotations

from gmpy2 import mpq

from .poly import Poly, poly_gcd
from .rational import Q

_MPQ = type(mpq())


class RatFunc:
    """Reduced quotient ``num/den`` with ``den`` monic and coprime to ``num``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: str = "t"):
        if not isinstance(num, Poly):
            num = Poly.const(num, var)
        if den is None:
            den = Poly.const(1, num.var)
        elif not isinstance(den, Poly):
            den = Poly.const(den, num.var)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            num, den = Poly((), num.var), Poly.const(1, num.var)
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lc
        if lc != 1:
            num = num.exact_div(lc)
            den = den.exact_div(lc)
        self.num = num
        self.den = den

    @property
    def var(self) -> str:
        return self.num.var

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        return RatFunc(Poly.const(other, self.var))

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __neg__(self) -> "RatFunc":
        r = object.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __add__(self, other) -> "RatFunc":
        if isinstance(other, (int, _MPQ)):
            r = object.__new__(RatFunc)
            r.num, r.den = self.num + self.den * other, self.den
            return r
        other = self._coerce(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RatFunc":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RatFunc":
        if isinstance(other, (int, _MPQ)):
            if not other:
                return RatFunc(0, var=self.var)
            r = object.__new__(RatFunc)
            r.num, r.den = self.num * other, self.den
            return r
        other = self._coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other) -> "RatFunc":
        if isinstance(other, (int, _MPQ)):
            return self * (mpq(1) / Q(other))
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int) -> "RatFunc":
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num**e, self.den**e)

    def __call__(self, x):
        d = self.den(x)
        if not d:
            raise ZeroDivisionError("pole of rational function")
        return self.num(x) / d


def monomial_t(c, k: int = 1) -> RatFunc:
    """``c * t**k`` as an element of Q(t)."""
    return RatFunc(Poly.monomial(k, c, "t"))


__all__ = ["RatFunc", "monomial_t"]
