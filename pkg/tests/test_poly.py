import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from autcone.lie import bracket
from autcone.poly import (
    MonomialBasis,
    Polynomial,
    coefficient_vector,
    derivation_apply,
    from_coefficient_vector,
    mul,
    parse,
    render,
)
from oracles import interpolate_linear_coefficient, random_rational


def random_poly(rng: random.Random, n: int, degree: int, terms: int = 4) -> Polynomial:
    basis = MonomialBasis(n, degree)
    return Polynomial(n, {basis[rng.randrange(len(basis))]: random_rational(rng) for _ in range(terms)})


def random_matrix(rng, n):
    return [[random_rational(rng) if rng.random() < 0.5 else Fraction(0) for _ in range(n)] for _ in range(n)]


def flow_derivative(g, f: Polynomial, x) -> Fraction:
    """d/dt f((I + t g) x) at t = 0, by exact interpolation in t."""
    n = f.nvars
    d = f.degree()
    ts = [Fraction(k + 1) for k in range(d + 1)]
    values = []
    for t in ts:
        y = [x[i] + t * sum((g[i][j] * x[j] for j in range(n)), Fraction(0)) for i in range(n)]
        values.append(f.evaluate(y))
    return interpolate_linear_coefficient(values, ts)


def test_monomial_basis_order_and_size():
    b = MonomialBasis(3, 2)
    assert len(b) == MonomialBasis.size(3, 2) == 6
    assert b[0] == (2, 0, 0)
    assert b[len(b) - 1] == (0, 0, 2)
    assert all(b.index(b[i]) == i for i in range(len(b)))


def test_product_agrees_with_pointwise_evaluation():
    rng = random.Random(2)
    for _ in range(30):
        f, g = random_poly(rng, 3, 2), random_poly(rng, 3, 3)
        x = [random_rational(rng) for _ in range(3)]
        assert mul(f, g).evaluate(x) == f.evaluate(x) * g.evaluate(x)


def test_euler_identity():
    rng = random.Random(4)
    for d in range(1, 5):
        f = random_poly(rng, 4, d, 6)
        euler = sum((Polynomial.variable(4, i) * f.partial(i) for i in range(4)), Polynomial.zero(4))
        assert euler == f * d


def test_derivation_index_convention():
    # g = E_01 moves x -> (x0 + t x1, x1), so D_g x0 = x1 and D_g x1 = 0
    g = [[0, 1], [0, 0]]
    x0, x1 = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    assert derivation_apply(g, x0) == x1
    assert derivation_apply(g, x1) == Polynomial.zero(2)


def test_derivation_matches_flow_oracle():
    rng = random.Random(8)
    for _ in range(25):
        n = rng.randint(2, 4)
        f = random_poly(rng, n, rng.randint(1, 3))
        g = random_matrix(rng, n)
        x = [random_rational(rng) for _ in range(n)]
        assert derivation_apply(g, f).evaluate(x) == flow_derivative(g, f, x)


def test_derivation_leibniz_and_commutator():
    rng = random.Random(9)
    for _ in range(100):
        n = rng.randint(2, 4)
        f, h = random_poly(rng, n, 2, 3), random_poly(rng, n, rng.randint(1, 2), 3)
        g1, g2 = random_matrix(rng, n), random_matrix(rng, n)
        assert derivation_apply(g1, f * h) == derivation_apply(g1, f) * h + f * derivation_apply(g1, h)
        comm = derivation_apply(g1, derivation_apply(g2, f)) - derivation_apply(g2, derivation_apply(g1, f))
        assert comm == derivation_apply(bracket(g2, g1), f)


def test_compose_is_evaluation_of_substitution():
    rng = random.Random(1)
    f = random_poly(rng, 3, 3, 5)
    subs = [random_poly(rng, 2, 1, 2) for _ in range(3)]
    y = [random_rational(rng) for _ in range(2)]
    assert f.compose(subs).evaluate(y) == f.evaluate([s.evaluate(y) for s in subs])


def test_render_known_form():
    f = parse("2*x0^2*x3 - 1/3*x1*x2", 4)
    assert render(f) == "2*x0^2*x3 - 1/3*x1*x2"
    assert render(Polynomial.zero(2)) == "0"
    assert parse("x0**2 + x0^2", 1) == Polynomial.variable(1, 0) ** 2 * 2


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10_000))
def test_render_parse_and_vector_round_trip(seed):
    rng = random.Random(seed)
    n, d = rng.randint(1, 4), rng.randint(1, 3)
    f = random_poly(rng, n, d, rng.randint(0, 5))
    assert parse(render(f), n) == f
    basis = MonomialBasis(n, d)
    assert from_coefficient_vector(coefficient_vector(f, basis), basis) == f


def test_parse_errors():
    with pytest.raises(ValueError):
        parse("x5", 2)
    with pytest.raises(ValueError):
        parse("2*y", 2)
