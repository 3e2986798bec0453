"""End-to-end acceptance checks with their time budgets.

Each test carries a ``criterion`` marker; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import random
import time
from fractions import Fraction

import pytest

from matpoly import (
    BiPoly,
    ConstructionMethod,
    Matrix,
    cayley_hamilton_residual,
    check_linearity,
    check_product_structure,
    check_ring_axioms,
    construct,
    construct_all,
    coordinate_matrix,
    det,
    dp_inverse,
    dp_product,
    eigen_pairs,
    identity_poly,
    is_invertible,
    null_space,
    parse,
    sample_surface,
    sampling_matrix,
    scale,
    to_matrix,
    verify_eigenpair,
)
from matpoly.isomap import random_matrix, random_poly

from . import goldens

F = Fraction


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@pytest.mark.criterion("1 golden constructions, four methods, < 1 s")
def test_golden_constructions(criterion):
    with Timer() as t:
        for name, (a, text) in goldens.CONSTRUCTIONS.items():
            expected = parse(text)
            for method, p in construct_all(a).items():
                assert p == expected, (name, method)
                assert p.shape == (len(a), len(a[0])), (name, method)
    assert t.elapsed < 1.0, f"{t.elapsed:.2f} s"


@pytest.mark.criterion("2 DP product goldens")
def test_product_goldens(criterion):
    for left, right, ls, rs, expected in goldens.POLY_PRODUCTS:
        assert dp_product(parse(left, ls), parse(right, rs)) == parse(expected), (left, right)
    for name, (a, b, expected) in goldens.PRODUCTS.items():
        assert dp_product(construct(a), construct(b)) == parse(expected), name


@pytest.mark.criterion("3 Cayley-Hamilton, tau and 100 random up to 5x5, < 5 s")
def test_cayley_hamilton(criterion):
    rng = random.Random(2024)
    with Timer() as t:
        tau = construct(goldens.tau)
        assert cayley_hamilton_residual(tau).is_zero()
        assert dp_product(tau, tau) + scale(5, tau) - scale(2, identity_poly(2)) == BiPoly.zero(2, 2)
        for _ in range(100):
            n = rng.randint(1, 5)
            assert cayley_hamilton_residual(random_poly(rng, n, n)).is_zero()
    assert t.elapsed < 5.0, f"{t.elapsed:.2f} s"


@pytest.mark.criterion("4 inverse and invertibility verdicts")
def test_inverse(criterion):
    tau = parse("-10*x*y + 14*x + 13*y - 18")
    inv = dp_inverse(tau)
    assert inv == parse("-1/2*x - y + 7/2")
    assert to_matrix(inv) == Matrix([[2, 1], [F(3, 2), F(1, 2)]])
    assert is_invertible(tau)
    q = parse("15*x*y - 21*x - 20*y + 28")
    assert not is_invertible(q)
    (kernel,) = null_space(to_matrix(q).T)
    a1, a2 = kernel.flatten()
    assert a2 != 0 and a1 / a2 == 2


@pytest.mark.criterion("5 eigenvalues and eigen-polynomials")
def test_eigen(criterion):
    p = parse("-x*y + 4*x + 3*y - 5")
    pairs = eigen_pairs(p)
    assert [pr.value for pr in pairs] == [-1, 7]
    x1, x2 = parse("5*x - 8", (2, 1)), parse("x", (2, 1))
    for pr, ref in zip(pairs, (x1, x2)):
        ratio = pr.eigen_poly.coeff(1, 0) / ref.coeff(1, 0)
        assert pr.eigen_poly == scale(ratio, ref)
        assert verify_eigenpair(p, pr.value, pr.eigen_poly)
    assert verify_eigenpair(p, -1, x1) and verify_eigenpair(p, 7, x2)


@pytest.mark.criterion("6 coordinate and sampling matrices 2x2")
def test_isomorphism_matrices(criterion):
    c = coordinate_matrix(2, 2, "y-major")
    s = sampling_matrix(2, 2, "y-major")
    assert c == goldens.COORDINATE_2x2
    assert s == goldens.SAMPLING_2x2
    assert det(c) == -1
    assert c @ s == Matrix.identity(4) == s @ c


@pytest.mark.criterion("7 seeded property suites, < 30 s")
def test_property_suites(criterion):
    rng = random.Random(7)
    with Timer() as t:
        # round trip and four-method agreement, 500 cases up to 6x6
        for _ in range(500):
            a = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
            polys = list(construct_all(a).values())
            assert all(p == polys[0] and p.shape == a.shape for p in polys)
            assert to_matrix(polys[0]) == a

        for report in (
            check_linearity(trials=500, seed=1),
            check_product_structure(trials=200, max_dim=5, seed=2),
            check_ring_axioms(trials=200, max_n=4, seed=3),
        ):
            assert report.passed, report.to_json()

        # associativity, distributivity and scalar laws on rectangular triples
        for _ in range(200):
            m, n, p_, q = (rng.randint(1, 4) for _ in range(4))
            a, b, b2, c = (random_poly(rng, *s) for s in ((m, n), (n, p_), (n, p_), (p_, q)))
            k = F(rng.randint(-9, 9), rng.randint(1, 9))
            assert dp_product(dp_product(a, b), c) == dp_product(a, dp_product(b, c))
            assert dp_product(a, b + b2) == dp_product(a, b) + dp_product(a, b2)
            assert dp_product(scale(k, a), b) == scale(k, dp_product(a, b)) == dp_product(a, scale(k, b))
            assert dp_product(identity_poly(m), a) == a == dp_product(a, identity_poly(n))
    assert t.elapsed < 30.0, f"{t.elapsed:.2f} s"


@pytest.mark.criterion("8 surface samples at nodes")
def test_sampling(criterion):
    for name, (a, text) in goldens.CONSTRUCTIONS.items():
        m, n = len(a), len(a[0])
        grid = sample_surface(construct(a), steps=(max(m, 2), max(n, 2)))
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                assert grid.value_at(i, j) == a[i - 1][j - 1], name


@pytest.mark.criterion("9 30x30 construction: linsys < 10 s, Lagrange < 2 s")
def test_scale(criterion):
    rng = random.Random(30)
    a = Matrix([[rng.randint(-99, 99) for _ in range(30)] for _ in range(30)])
    with Timer() as t_lin:
        p = construct(a, ConstructionMethod.LINEAR_SYSTEM)
    with Timer() as t_lag:
        q = construct(a, ConstructionMethod.LAGRANGE)
    assert p == q
    assert to_matrix(p) == a
    assert t_lin.elapsed < 10.0, f"linsys {t_lin.elapsed:.2f} s"
    assert t_lag.elapsed < 2.0, f"lagrange {t_lag.elapsed:.2f} s"
