"""Parametrized affine cones over the classical embedded varieties.

Each constructor returns a :class:`Parametrization`: a polynomial map from a
parameter space W to the ambient space V whose image closure is the cone.
The hyperquadric is the one exception; it is presented by its equation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from autcone.poly import MonomialBasis, Polynomial, monomial_from_indices

KINDS = ("segre", "veronese", "pluecker", "quadric", "sympl", "spinor10", "cone_over", "section", "projection")


@dataclass(frozen=True)
class Parametrization:
    param_count: int
    ambient_dim: int
    components: tuple[Polynomial, ...]
    label: str
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(self.components) != self.ambient_dim:
            raise ValueError("need one component per ambient coordinate")
        if any(c.nvars != self.param_count for c in self.components):
            raise ValueError("components must be polynomials in the parameters")
        if not any(self.components):
            raise ValueError("all components are zero")
        if self.weights is not None and len(self.weights) != self.param_count:
            raise ValueError("one weight per parameter")

    def effective_weights(self) -> tuple[int, ...]:
        return self.weights if self.weights is not None else (1,) * self.param_count

    def __call__(self, params: Sequence[object]) -> tuple[Fraction, ...]:
        return tuple(c.evaluate(params) for c in self.components)

    def jacobian(self, params: Sequence[object]) -> list[list[Fraction]]:
        """Rows: ambient coordinates; columns: parameters."""
        return [[c.partial(k).evaluate(params) for k in range(self.param_count)] for c in self.components]

    def random_params(self, rng: random.Random) -> tuple[Fraction, ...]:
        return tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(self.param_count))


def _check(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def segre(a: int, b: int) -> Parametrization:
    """P^{a-1} x P^{b-1}: component (i, j) is s_i * t_j, row-major."""
    _check(a >= 2 and b >= 2, "segre needs a, b >= 2")
    n = a + b
    s = [Polynomial.variable(n, i) for i in range(a)]
    t = [Polynomial.variable(n, a + j) for j in range(b)]
    comps = tuple(s[i] * t[j] for i in range(a) for j in range(b))
    return Parametrization(n, a * b, comps, f"segre({a},{b})")


def veronese(r: int, d: int) -> Parametrization:
    _check(r >= 2 and d >= 2, "veronese needs r, d >= 2")
    comps = tuple(Polynomial.monomial(m) for m in MonomialBasis(r, d))
    return Parametrization(r, len(comps), comps, f"veronese({r},{d})")


def _det(mat: list[list[Polynomial]]) -> Polynomial:
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = Polynomial.zero(mat[0][0].nvars)
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = mat[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def pluecker(a: int, r: int) -> Parametrization:
    """Gr(a, r) via the a x a minors of a generic a x r matrix."""
    _check(2 <= a < r, "pluecker needs 2 <= a < r")
    n = a * r
    x = [[Polynomial.variable(n, i * r + j) for j in range(r)] for i in range(a)]
    comps = tuple(_det([[x[i][j] for j in cols] for i in range(a)]) for cols in combinations(range(r), a))
    return Parametrization(n, len(comps), comps, f"pluecker({a},{r})")


def quadric_form(n: int) -> Polynomial:
    """Hyperbolic quadric sum_{i <= (n-1)/2} x_i x_{n-1-i} in n variables."""
    _check(n >= 3, "quadric needs n >= 3")
    terms = {}
    for i in range(n):
        j = n - 1 - i
        if i <= j:
            terms[monomial_from_indices(n, [i, j])] = 1
    return Polynomial(n, terms)


def quadric(n: int):
    """Smooth quadric cone in Q^n as a degree-2 graded piece."""
    from autcone.ideal import GradedPiece

    return GradedPiece.from_polynomials(n, 2, [quadric_form(n)])


def sympl_vmrt(k: int, m: int) -> Parametrization:
    """VMRT of the symplectic Grassmannian Gr_w(k, m + 2k).

    Parameters are w (k), q (m), c (1); components are the k*m products
    w_i q_j followed by c * w_a w_b for a <= b.  The weights (1, 1, 0) on
    (w, q, c) make every component weighted-homogeneous of degree 2.
    """
    _check(k >= 2 and m >= 1, "sympl_vmrt needs k >= 2, m >= 1")
    n = k + m + 1
    w = [Polynomial.variable(n, i) for i in range(k)]
    q = [Polynomial.variable(n, k + j) for j in range(m)]
    c = Polynomial.variable(n, k + m)
    comps = [w[i] * q[j] for i in range(k) for j in range(m)]
    comps += [c * w[a] * w[b] for a, b in combinations_with_replacement(range(k), 2)]
    weights = (1,) * (k + m) + (0,)
    return Parametrization(n, len(comps), tuple(comps), f"sympl_vmrt({k},{m})", weights)


def _pfaffian4(b: dict, idx: Sequence[int]) -> Polynomial:
    i, j, k, l = idx
    return b[i, j] * b[k, l] - b[i, k] * b[j, l] + b[i, l] * b[j, k]


def spinor10() -> Parametrization:
    """Cone over the 10-dimensional spinor variety in P^15.

    Pure spinors exp(B) in the even exterior algebra of C^5 for a skew 5x5
    matrix B, homogenized by an extra parameter s: components are s^2, the
    ten s * b_ij (i < j) and the five 4x4 Pfaffians of B.
    """
    pairs = list(combinations(range(5), 2))
    n = len(pairs) + 1
    s = Polynomial.variable(n, 10)
    b = {p: Polynomial.variable(n, i) for i, p in enumerate(pairs)}
    comps = [s * s] + [s * b[p] for p in pairs] + [_pfaffian4(b, q) for q in combinations(range(5), 4)]
    return Parametrization(n, 16, tuple(comps), "spinor10")


def cone_over(p: Parametrization, t: int) -> Parametrization:
    """Cone with a (t-1)-dimensional projective vertex over ``p``."""
    _check(t >= 1, "cone_over needs t >= 1")
    n = p.param_count + t
    degree = _weighted_degree(p)

    def lift(f: Polynomial) -> Polynomial:
        return Polynomial(n, {m + (0,) * t: c for m, c in f.terms.items()})

    comps = tuple(lift(c) for c in p.components) + tuple(Polynomial.variable(n, p.param_count + i) for i in range(t))
    weights = p.effective_weights() + (degree,) * t
    return Parametrization(n, p.ambient_dim + t, comps, f"cone_over({p.label},{t})", weights)


def _weighted_degree(p: Parametrization) -> int:
    w = p.effective_weights()
    degs = {sum(e * wi for e, wi in zip(m, w)) for c in p.components for m in c.terms}
    if len(degs) != 1:
        raise ValueError(f"{p.label} is not weighted-homogeneous")
    return degs.pop()


def is_cone_invariant(p: Parametrization, trials: int = 10, seed: int = 0) -> bool:
    """Random check that scaling the parameters by lambda^weight scales the
    image point by a common power of lambda."""
    rng = random.Random(seed)
    w = p.effective_weights()
    for _ in range(trials):
        params = p.random_params(rng)
        lam = Fraction(rng.randint(2, 7), rng.randint(1, 3))
        scaled = tuple(x * lam**wi for x, wi in zip(params, w))
        x0 = p(params)
        x1 = p(scaled)
        ratios = {y / x for x, y in zip(x0, x1) if x}
        if any(y and not x for x, y in zip(x0, x1)):
            return False
        if len(ratios) > 1:
            return False
        if ratios:
            (ratio,) = ratios
            # the common factor must itself be a power of lambda
            e = 0
            r = ratio
            while r != 1 and e < 64:
                r /= lam
                e += 1
            if r != 1:
                return False
    return True


def transform(p: Parametrization, matrix: Sequence[Sequence[object]], label: str) -> Parametrization:
    """Compose with a linear map given by its rows: new_i = sum_j M[i][j] * old_j."""
    comps = []
    for row in matrix:
        acc = Polynomial.zero(p.param_count)
        for c, comp in zip(row, p.components):
            if c:
                acc = acc + comp * c
        comps.append(acc)
    return Parametrization(p.param_count, len(comps), tuple(comps), label, p.weights)


__all__ = [
    "KINDS",
    "Parametrization",
    "segre",
    "veronese",
    "pluecker",
    "quadric",
    "quadric_form",
    "sympl_vmrt",
    "spinor10",
    "cone_over",
    "is_cone_invariant",
    "transform",
]
