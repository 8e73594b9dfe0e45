"""Parameter records shared by the reduction pipeline and the closed form."""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .exact_core.rational import Q


@dataclass(frozen=True)
class QuadrinomialParams:
    """The family f(x) = x^n + t(x^2 + a x + b)."""

    n: int
    a: object
    b: object

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise ValueError(f"n must be an integer >= 3, got {self.n!r}")
        object.__setattr__(self, "a", Q(self.a))
        object.__setattr__(self, "b", Q(self.b))

    @property
    def m0(self) -> int:
        return (self.n - 3) // 2

    @property
    def m1(self) -> int:
        return (self.n - 2) // 2

    @property
    def threshold(self):
        """(n-1)^2 a^2 / (4 n (n-2)), the totally-complex boundary for b."""
        n = self.n
        return mpq((n - 1) ** 2) * self.a**2 / (4 * n * (n - 2))

    def reduction(self) -> "ReductionParams":
        n = self.n
        return ReductionParams(n, mpq(-(n - 2)), -(n - 1) * self.a, -n * self.b)


@dataclass(frozen=True)
class ReductionParams:
    """Superdiagonal constants of W(t)_1: entries q t, r t, s t."""

    n: int
    q: object
    r: object
    s: object

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise ValueError(f"n must be an integer >= 3, got {self.n!r}")
        object.__setattr__(self, "q", Q(self.q))
        object.__setattr__(self, "r", Q(self.r))
        object.__setattr__(self, "s", Q(self.s))

    @property
    def n0(self) -> int:
        return (self.n - 1) // 2 if self.n % 2 else self.n // 2

    @property
    def n1(self) -> int:
        return self.n0 - 1 if self.n % 2 else self.n0 - 2


__all__ = ["QuadrinomialParams", "ReductionParams"]
