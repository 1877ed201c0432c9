"""Cone vertices, hyperplane sections and linear projections."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from autcone.ideal import GradedPiece, forms_vanishing, is_nondegenerate
from autcone.lie import aut_cone, projective_dim
from autcone.linalg import MatrixQ, SpanReducer, rank, solve_homogeneous, span_basis
from autcone.poly import MonomialBasis, Polynomial, partial, sparse_coefficients
from autcone.varieties import Parametrization


def cone_vertex_space(pieces: Sequence[GradedPiece]) -> list[tuple[Fraction, ...]]:
    """Affine cone over C_X: all p with sum_i p_i df/dx_i in I_{d-1} for f in I_d.

    The answer is a kernel, hence a linear subspace.  Pieces of degree d-1
    that are not supplied count as zero.
    """
    pieces = list(pieces)
    if not pieces:
        raise ValueError("no pieces")
    n = pieces[0].ambient_dim
    by_degree = {p.degree: p for p in pieces}

    def rows():
        for piece in pieces:
            if not piece.dim:
                continue
            lower = by_degree.get(piece.degree - 1)
            mb = MonomialBasis(n, piece.degree - 1)
            red = lower.reducer if lower is not None and lower.dim else None
            for f in piece.forms():
                acc: dict[int, dict[int, Fraction]] = {}
                for i in range(n):
                    d = sparse_coefficients(partial(f, i), mb)
                    if red is not None:
                        d = red.reduce(d)
                    for mu, c in d.items():
                        acc.setdefault(mu, {})[i] = c
                for mu in sorted(acc):
                    yield acc[mu]

    kernel = solve_homogeneous(rows(), n)
    return span_basis(kernel, n) if kernel else []


def random_form(n: int, rng: random.Random, bound: int = 5) -> tuple[int, ...]:
    while True:
        h = tuple(rng.randint(-bound, bound) for _ in range(n))
        if any(h):
            return h


def restrict_piece(piece: GradedPiece, h: Sequence[object]) -> GradedPiece:
    """Restrict forms to the hyperplane h = 0.

    The last coordinate with a nonzero h-coefficient is eliminated,
    x_c = -(sum_{i != c} h_i x_i) / h_c, and the remaining coordinates keep
    their relative order.
    """
    n = piece.ambient_dim
    h = [Fraction(x) for x in h]
    if len(h) != n:
        raise ValueError("linear form has wrong length")
    if not any(h):
        raise ValueError("zero linear form")
    c = max(i for i, x in enumerate(h) if x)
    m = n - 1
    subs = []
    for i in range(n):
        if i == c:
            subs.append(Polynomial(m, {
                tuple(int(k == (j if j < c else j - 1)) for k in range(m)): -h[j] / h[c]
                for j in range(n) if j != c and h[j]
            }))
        else:
            subs.append(Polynomial.variable(m, i if i < c else i - 1))
    restricted = [f.compose(subs) for f in piece.forms()]
    return GradedPiece.from_polynomials(m, piece.degree, [f for f in restricted if f])


@dataclass
class SectionResult:
    pieces: list[GradedPiece]
    forms: list[tuple[int, ...]]
    seed: int | None = None
    notes: list[str] = field(default_factory=list)


def hyperplane_section(source, h=None, seed: int | None = None, codim: int = 1) -> SectionResult:
    """Degree-2 piece of a linear section, by restriction.

    ``source`` is a Parametrization (its I_2 is computed first) or a
    GradedPiece / list of pieces.  Either pass explicit ``h`` (one form, or a
    list of ``codim`` forms, each in the ambient of the previous cut) or a
    ``seed`` from which small-integer forms are drawn.
    """
    if isinstance(source, Parametrization):
        pieces = [forms_vanishing(source, 2)]
    elif isinstance(source, GradedPiece):
        pieces = [source]
    else:
        pieces = list(source)
    if h is None:
        if seed is None:
            raise ValueError("need a linear form or a seed")
        rng = random.Random(seed)
        forms = []
        n = pieces[0].ambient_dim
        for k in range(codim):
            forms.append(random_form(n - k, rng))
    else:
        forms = [tuple(h)] if h and not isinstance(h[0], (list, tuple)) else [tuple(x) for x in h]
    for f in forms:
        if not any(f):
            raise ValueError("zero linear form")
        pieces = [restrict_piece(p, f) for p in pieces]
    return SectionResult(pieces, forms, seed)


# -- projections ------------------------------------------------------------------


def project(p: Parametrization, center: Sequence[Sequence[object]]) -> Parametrization:
    """Linear projection from span(center): V -> V / L.

    Coordinates on V/L are the non-pivot coordinates of rref(L); a point x
    maps to x - sum_pivots x_c * R_c restricted to those coordinates.
    """
    n = p.ambient_dim
    center = [tuple(Fraction(x) for x in v) for v in center]
    if not center:
        return p
    if any(len(v) != n for v in center):
        raise ValueError("center vectors have wrong length")
    red = SpanReducer(center, n)
    if red.rank != len(center):
        raise ValueError("center vectors are linearly dependent")
    keep = [j for j in range(n) if j not in set(red.pivots)]
    comps = []
    for j in keep:
        acc = p.components[j]
        for c, row in red.rows:
            x = row.get(j)
            if x:
                acc = acc - p.components[c] * x
        comps.append(acc)
    return Parametrization(p.param_count, len(keep), tuple(comps), f"projection({p.label},{len(center)})", p.weights)


def segre_center(a: int, b: int, r: int) -> tuple[Fraction, ...]:
    """e_0 (x) f_0 + ... + e_{r-1} (x) f_{r-1} in the segre(a, b) coordinates."""
    if r > min(a, b):
        raise ValueError("rank exceeds matrix size")
    v = [Fraction(0)] * (a * b)
    for i in range(r):
        v[i * b + i] = Fraction(1)
    return tuple(v)


def pluecker_center(r: int, rk: int) -> tuple[Fraction, ...]:
    """e_0^e_1 + e_2^e_3 + ... of rank ``rk`` (even) in the pluecker(2, r) coordinates."""
    if rk % 2 or rk > r:
        raise ValueError("skew rank must be even and at most r")
    pairs = list(combinations(range(r), 2))
    v = [Fraction(0)] * len(pairs)
    for i in range(rk // 2):
        v[pairs.index((2 * i, 2 * i + 1))] = Fraction(1)
    return tuple(v)


def segre_rank(v: Sequence[object], a: int, b: int) -> int:
    return rank(MatrixQ.from_rows([list(v[i * b : (i + 1) * b]) for i in range(a)]))


def pluecker_rank(v: Sequence[object], r: int) -> int:
    entries = {}
    for (i, j), x in zip(combinations(range(r), 2), v):
        if x:
            entries[i, j] = x
            entries[j, i] = -Fraction(x)
    return rank(MatrixQ(r, r, entries))


def center_rank_ok(kind: str, params: Sequence[int], center: Sequence[Sequence[object]]) -> bool:
    """Necessary condition for a biregular projection: rank >= 3 (Segre) or >= 5
    (Pluecker) for every given center vector.  Other kinds are not checked."""
    if kind == "segre":
        a, b = params
        return all(segre_rank(v, a, b) >= 3 for v in center)
    if kind == "pluecker" and params[0] == 2:
        return all(pluecker_rank(v, params[1]) >= 5 for v in center)
    return True


# -- section inequality ------------------------------------------------------------


@dataclass
class SectionInequality:
    n: int
    dim_g: int
    dim_g_section: int
    holds: bool
    equality: bool
    seed: int | None

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "dim_G": self.dim_g,
            "dim_G_section": self.dim_g_section,
            "rhs": self.dim_g_section + self.n,
            "holds": self.holds,
            "equality": self.equality,
            "seed": self.seed,
        }


def section_inequality_check(source, seed: int = 0) -> SectionInequality:
    """dim G_n^X <= dim G_{n-1}^{X cap H} + n, both sides computed."""
    if isinstance(source, Parametrization):
        if not is_nondegenerate(source):
            raise ValueError("input is degenerate")
        pieces = [forms_vanishing(source, 2)]
    elif isinstance(source, GradedPiece):
        pieces = [source]
    else:
        pieces = list(source)
    if cone_vertex_space(pieces):
        raise ValueError("input is a cone")
    n = pieces[0].ambient_dim - 1
    lhs = projective_dim(aut_cone(pieces))
    sec = hyperplane_section(pieces, seed=seed)
    rhs = projective_dim(aut_cone(sec.pieces))
    return SectionInequality(n, lhs, rhs, lhs <= rhs + n, lhs == rhs + n, seed)
