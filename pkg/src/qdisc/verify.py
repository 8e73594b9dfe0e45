"""Independent oracles for the quadrinomial discriminant and the equivalence suite."""

from __future__ import annotations

import random
from dataclasses import dataclass

from gmpy2 import mpq

from .bezoutian import build_A_c
from .closed_form import discriminant_closed_form
from .exact_core import Poly, det_bareiss, interpolate, resultant
from .params import QuadrinomialParams


def specialize(params: QuadrinomialParams, t) -> Poly:
    """f_c(t; x) for a concrete rational t."""
    t = mpq(t)
    return Poly.monomial(params.n, 1) + Poly((params.b * t, params.a * t, t))


def resultant_oracle(params: QuadrinomialParams) -> Poly:
    """(-1)^(n(n-1)/2) Res(f, f') as a polynomial in t.

    Every Sylvester row has entries of t-degree <= 1, so the resultant has
    degree <= 2n - 1. It is sampled at 2n points by subresultants and
    interpolated; one extra point guards the degree bound.
    """
    n = params.n
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    ts = [mpq(k) for k in range(2 * n + 1)]
    vals = []
    for t in ts:
        f = specialize(params, t)
        vals.append(sign * resultant(f, f.derivative()))
    p = interpolate(ts[:-1], vals[:-1], "t")
    if p(ts[-1]) != vals[-1]:
        raise ArithmeticError("resultant interpolation failed its extra check point")
    return p


def bezoutian_oracle(params: QuadrinomialParams) -> Poly:
    """det M_n(f_c) over Q[t] by Bareiss."""
    return det_bareiss(build_A_c(params))


@dataclass(frozen=True)
class CaseResult:
    params: QuadrinomialParams
    bezoutian_ok: bool
    resultant_ok: bool

    @property
    def ok(self) -> bool:
        return self.bezoutian_ok and self.resultant_ok


def check_case(params: QuadrinomialParams) -> CaseResult:
    closed = discriminant_closed_form(params)
    return CaseResult(
        params,
        closed == bezoutian_oracle(params),
        closed == resultant_oracle(params),
    )


def random_rational(rng: random.Random, bound: int = 9):
    num = rng.randint(-bound, bound)
    den = rng.choice([d for d in range(-bound, bound + 1) if d])
    return mpq(num, den)


def random_params(n: int, trials: int, seed: int) -> list[QuadrinomialParams]:
    # one stream per degree so results do not depend on which degrees run
    rng = random.Random(f"qdisc-verify:{seed}:{n}")
    return [QuadrinomialParams(n, random_rational(rng), random_rational(rng)) for _ in range(trials)]


@dataclass(frozen=True)
class DegreeReport:
    n: int
    passed: int
    total: int
    failures: tuple = ()

    @property
    def ok(self) -> bool:
        return self.passed == self.total


def verify_degree(n: int, trials: int, seed: int) -> DegreeReport:
    fails = []
    for p in random_params(n, trials, seed):
        r = check_case(p)
        if not r.ok:
            fails.append(r)
    return DegreeReport(n, trials - len(fails), trials, tuple(fails))


def run_verification(n_max: int, trials: int, seed: int, n_min: int = 3, mapper=map) -> list[DegreeReport]:
    """Closed form vs Bezoutian determinant vs resultant for n_min..n_max."""
    if n_min < 3 or n_max < n_min:
        raise ValueError("need 3 <= n_min <= n_max")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    ns = list(range(n_min, n_max + 1))
    return list(mapper(verify_degree, ns, [trials] * len(ns), [seed] * len(ns)))


__all__ = [
    "CaseResult",
    "DegreeReport",
    "bezoutian_oracle",
    "check_case",
    "random_params",
    "random_rational",
    "resultant_oracle",
    "run_verification",
    "specialize",
    "verify_degree",
]
