import random

import pytest
import sympy as sp
from gmpy2 import mpq

from qdisc.bezoutian import bezoutian_of, build_A_c
from qdisc.closed_form import q_bracket
from qdisc.exact_core import Poly, SymMatrix
from qdisc.params import QuadrinomialParams as QP
from qdisc.real_roots import (
    NEG_INFINITY,
    POS_INFINITY,
    Certification,
    alpha_c,
    certify_totally_complex,
    completed_square,
    count_real_roots,
    count_real_roots_detail,
    family_discriminant,
    inertia,
    instantiate,
    isolate_real_roots,
    largest_real_root,
    predict_root_count,
    q_perfect_square_check,
    sturm_count,
)


def rq(rng, bound=9):
    return mpq(rng.randint(-bound, bound), rng.randint(1, bound))


@pytest.mark.parametrize(
    "coeffs,count",
    [([1, 0, 1], 0), ([0, -1, 0, 1], 3), ([1, 0, 1, 0, 0, 0, 1], 0), ([-4, 0, 1], 2), ([1, 1, 1, 0, 0, 1], 1), ([1, 0, 1, 0, 1], 0)],
)
def test_sturm_examples(coeffs, count):
    f = Poly(coeffs)
    assert sturm_count(f) == count
    assert count_real_roots(f) == count


def test_sturm_intervals_half_open():
    f = Poly([0, -1, 0, 1])  # roots -1, 0, 1
    assert sturm_count(f, -1, 1) == 2
    assert sturm_count(f, NEG_INFINITY, 0) == 2
    assert sturm_count(f, 0, POS_INFINITY) == 1
    assert sturm_count(f, mpq(1, 2), mpq(3, 4)) == 0


def test_sturm_repeated_roots_counted_once():
    f = Poly([-1, 1]) ** 3 * Poly([1, 0, 1]) * Poly([2, 1])
    assert sturm_count(f) == 2
    d = count_real_roots_detail(f)
    assert d.count == 2 and not d.separable and d.inertia.zeros > 0


def test_sturm_zero_poly():
    with pytest.raises(ValueError):
        sturm_count(Poly())
    with pytest.raises(ValueError):
        count_real_roots(Poly())


def test_inertia_examples():
    r = inertia(bezoutian_of(Poly([-1, 0, 1])))
    assert (r.positives, r.negatives, r.zeros, r.signature) == (2, 0, 0, 2)
    r = inertia(bezoutian_of(Poly([1, 0, 1])))
    assert (r.positives, r.negatives, r.zeros, r.signature) == (1, 1, 0, 0)


def test_inertia_needs_hyperbolic_block():
    r = inertia(SymMatrix([[0, 3, 0], [3, 0, 0], [0, 0, 0]]))
    assert (r.positives, r.negatives, r.zeros) == (1, 1, 1)
    r = inertia(SymMatrix([[0, 1, 2], [1, 0, 1], [2, 1, 0]]))
    assert r.dim == 3 and r.zeros == 0


def test_inertia_against_eigenvalue_signs():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randint(1, 6)
        raw = [[mpq(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            if rng.random() < 0.4:
                raw[i][i] = mpq(0)
        m = SymMatrix([[raw[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)])
        sm = sp.Matrix([[sp.Integer(int(x)) for x in row] for row in m.rows()])
        charpoly = sm.charpoly()
        pos = sp.Poly(charpoly.as_expr(), charpoly.gen).count_roots(sp.Rational(1, 10**9), sp.oo)
        neg = sp.Poly(charpoly.as_expr(), charpoly.gen).count_roots(-sp.oo, -sp.Rational(1, 10**9))
        zero = n - sm.rank()
        # count_roots counts multiplicity; eigenvalues of integer matrices stay away from +-1e-9
        r = inertia(m)
        assert (r.positives, r.negatives, r.zeros) == (pos, neg, zero)


def test_signature_at_t1_matches_sturm():
    p = QP(5, 1, 1)
    m = build_A_c(p).map(lambda e: e(1))
    f = instantiate(5, Poly([1, 1, 1]), 1)
    assert inertia(m).signature == sturm_count(f) == 1


def test_isolation_soundness():
    rng = random.Random(21)
    for _ in range(40):
        roots = rng.sample(range(-10, 11), rng.randint(1, 5))
        f = Poly([1])
        for r in roots:
            f = f * Poly([-mpq(r, 3), 1])
        f = f * Poly([mpq(rng.randint(1, 4)), 0, 1])
        iso = isolate_real_roots(f, mpq(1, 2**20))
        assert iso.count == sturm_count(f) == len(roots)
        for lo, hi in iso.intervals:
            assert sturm_count(f, lo, hi) == 1
            assert hi - lo <= mpq(1, 2**20)
        his = [hi for _, hi in iso.intervals]
        los = [lo for lo, _ in iso.intervals]
        assert all(h <= l2 for h, l2 in zip(his, los[1:]))


def test_isolation_contains_minus_one():
    iso = isolate_real_roots(Poly([1, 1, 1, 0, 0, 1]))
    (lo, hi), = iso.intervals
    assert lo < -1 <= hi
    assert iso.exact_roots == [-1]


def test_isolation_irrational():
    iso = isolate_real_roots(Poly([-2, 0, 1]), mpq(1, 2**40))
    lo, hi = iso.intervals[1]
    assert lo * lo < 2 < hi * hi
    assert not iso.exact_roots


def test_alpha_n4_boundary():
    a = mpq(2)
    al = alpha_c(QP(4, a, mpq(9, 32) * a * a))
    assert al.exact == 0


def test_alpha_n3_irrational():
    al = alpha_c(QP(3, 0, -1))
    assert al.exact is None
    assert al.lo * al.lo * 4 < 27 <= al.hi * al.hi * 4
    assert al.is_below(mpq(27, 10)) and not al.is_below(mpq(25, 10))


def test_alpha_a0_n_2_mod_4():
    for n in (6, 10, 14):
        assert alpha_c(QP(n, 0, mpq(5, 3))).exact == 0


@pytest.mark.parametrize("n", [4, 8, 12])
def test_alpha_a0_n_0_mod_4_double_root(n):
    # gamma is positive here and the bracket is a perfect square with a positive root
    b = mpq(5, 3)
    p = QP(n, 0, b)
    q = q_bracket(p)
    assert q[1] ** 2 == 4 * q[0] * q[2]
    t0 = alpha_c(p).exact
    assert t0 > 0 and q(t0) == 0
    f = instantiate(n, Poly([b, 0, 1]), t0)
    assert f.squarefree_part().degree < n
    assert sturm_count(f) == 0
    assert certify_totally_complex(p, t0) is Certification.CERTIFIED


def test_alpha_n4_a0_value():
    b = mpq(5, 3)
    assert alpha_c(QP(4, 0, b)).exact == 4 * b
    assert instantiate(4, Poly([b, 0, 1]), 4 * b) == Poly([2 * b, 0, 1]) ** 2


def test_alpha_rejects_degenerate():
    with pytest.raises(ValueError):
        alpha_c(QP(5, 0, 0))


def test_alpha_zero_above_threshold():
    rng = random.Random(31)
    for n in (6, 8, 10):
        for _ in range(5):
            a = rq(rng) or mpq(1)
            b = QP(n, a, 0).threshold + abs(rq(rng))
            p = QP(n, a, b)
            bracket = q_bracket(p)
            assert sturm_count(bracket, 0, POS_INFINITY) == 0
            assert alpha_c(p).exact == 0


def test_largest_root_none():
    with pytest.raises(ValueError):
        largest_real_root(Poly([1, 0, 1]))


def test_predict_examples():
    assert predict_root_count(6, Poly([1, 0, 1]), 1) == 0
    assert predict_root_count(5, Poly([1, 0, 1]), 1) == 1
    g = Poly([1, 0, -1])
    assert count_real_roots(g) == 2
    al = largest_real_root(family_discriminant(6, g))
    assert predict_root_count(6, g, al.hi + 1) == 4


def test_predict_errors():
    with pytest.raises(ValueError, match="not applicable"):
        predict_root_count(5, Poly([1, 0, -1]), mpq(-1000))
    with pytest.raises(ValueError, match="separable"):
        predict_root_count(5, Poly([1, 2, 1]), 10)


def test_certifier_examples():
    assert certify_totally_complex(QP(4, 0, 1), 1) is Certification.CERTIFIED
    assert certify_totally_complex(QP(6, 2, 2), 7) is Certification.CERTIFIED
    assert certify_totally_complex(QP(5, 0, 1), 1) is Certification.NOT_APPLICABLE
    assert certify_totally_complex(QP(6, 2, 1), 1) is Certification.NOT_APPLICABLE
    assert certify_totally_complex(QP(6, 0, 0), 1) is Certification.NOT_APPLICABLE
    with pytest.raises(ValueError):
        certify_totally_complex(QP(6, 2, 2), 0)


def test_perfect_square_examples():
    p = QP(6, 1, mpq(25, 96))
    assert q_perfect_square_check(p)
    _, vertex = completed_square(p)
    assert vertex == -mpq(6 * 5**5, 2**5 * 4**4)
    assert q_perfect_square_check(QP(5, 2, mpq(16, 15)))
    a = mpq(5, 7)
    p4 = QP(4, a, mpq(9, 32) * a * a)
    assert q_perfect_square_check(p4)
    leading, vertex = completed_square(p4)
    assert (leading, vertex) == (-a * a / 2, -27 * a * a / 8)


def test_perfect_square_errors():
    with pytest.raises(ValueError):
        q_perfect_square_check(QP(6, 1, 1))
    with pytest.raises(ValueError):
        q_perfect_square_check(QP(6, 0, 0))
    with pytest.raises(ValueError):
        q_perfect_square_check(QP(3, 1, mpq(1, 3)))
