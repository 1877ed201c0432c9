"""Independent reference computations used only by the tests.

Nothing here imports the elimination code under test: ranks come from a
plain dense Gaussian elimination with full pivoting on Fractions, ideal
pieces from evaluation at random image points.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement


def dense_rank(rows) -> int:
    """Rank by dense elimination with full pivoting (largest |entry|)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    for step in range(min(nr, nc)):
        best = None
        for i in range(step, nr):
            for j in range(step, nc):
                if m[i][j] and (best is None or abs(m[i][j]) > abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        m[step], m[i] = m[i], m[step]
        for row in m:
            row[step], row[j] = row[j], row[step]
        p = m[step][step]
        for i in range(step + 1, nr):
            f = m[i][step] / p
            if f:
                for j in range(step, nc):
                    m[i][j] -= f * m[step][j]
        rank += 1
    return rank


def random_matrix(rng: random.Random, rows: int, cols: int, density: float = 0.6, big: bool = False):
    out = []
    for _ in range(rows):
        row = []
        for _ in range(cols):
            if rng.random() < density:
                num = rng.randint(-50, 50) if big else rng.randint(-4, 4)
                row.append(Fraction(num, rng.randint(1, 6)))
            else:
                row.append(Fraction(0))
        out.append(row)
    return out


def low_rank_matrix(rng: random.Random, rows: int, cols: int, r: int):
    a = random_matrix(rng, rows, r, density=0.8)
    b = random_matrix(rng, r, cols, density=0.8)
    return [[sum((a[i][k] * b[k][j] for k in range(r)), Fraction(0)) for j in range(cols)] for i in range(rows)]


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 7))


def sampled_forms_dim(ambient_dim: int, degree: int, points) -> int:
    """dim of degree-d forms vanishing at the given image points (point-evaluation method)."""
    monos = list(combinations_with_replacement(range(ambient_dim), degree))
    rows = []
    for x in points:
        row = []
        for mono in monos:
            v = Fraction(1)
            for i in mono:
                v *= x[i]
            row.append(v)
        rows.append(row)
    return len(monos) - dense_rank(rows)


def interpolate_linear_coefficient(values: list[Fraction], ts: list[Fraction]) -> Fraction:
    """Coefficient of t in the unique polynomial through (ts[i], values[i])."""
    # Lagrange basis derivative at 0: sum_i y_i * L_i'(0)
    total = Fraction(0)
    for i, (ti, yi) in enumerate(zip(ts, values)):
        others = [tj for j, tj in enumerate(ts) if j != i]
        denom = Fraction(1)
        for tj in others:
            denom *= ti - tj
        # L_i(t) = prod (t - tj) / denom ; L_i'(0) = sum_k prod_{j != k} (-tj) / denom
        deriv = Fraction(0)
        for k in range(len(others)):
            prod = Fraction(1)
            for j, tj in enumerate(others):
                if j != k:
                    prod *= -tj
            deriv += prod
        total += yi * deriv / denom
    return total


def dense_nullspace(rows, ncols: int) -> list[list[Fraction]]:
    """Right kernel by textbook reduction to rref (first nonzero pivot)."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    out = []
    for f in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        out.append(v)
    return out


def tangent_aut_dim(p, points: int, seed: int = 0) -> int:
    """dim of {g : g x is tangent to the image at sampled points x}."""
    rng = random.Random(seed)
    n = p.ambient_dim
    rows = []
    for _ in range(points):
        w = p.random_params(rng)
        x = p(w)
        jac = p.jacobian(w)
        # normal vectors: nu with nu^T J = 0
        jt = [[jac[i][k] for i in range(n)] for k in range(p.param_count)]
        for nu in dense_nullspace(jt, n):
            rows.append([nu[i] * x[j] for i in range(n) for j in range(n)])
    return n * n - dense_rank(rows)
