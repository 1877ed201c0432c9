"""Infinitesimal automorphisms of affine cones and their prolongations.

``aut_cone`` solves for all g in End(V) with D_g(I_d) contained in I_d for
every supplied graded piece.  Matrices are flattened row-major (index
``i * n + j`` holds ``g[i][j]``) and the resulting basis is rref-canonical
in that coordinate.

A k-th prolongation element A: Sym^{k+1} V -> V is stored as a symmetric
tensor: its value on a multiset of basis vectors.  The flattened index of
``A(e_mu)_m`` is ``idx(mu) * n + m`` where ``idx`` numbers the degree-(k+1)
monomials of ``MonomialBasis(n, k + 1)``.  Partial evaluation at
``e_nu`` (|nu| = k) gives the matrix ``M[m][l] = A(e_nu * e_l)_m``.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from autcone.ideal import GradedPiece
from autcone.linalg import SpanReducer, solve_homogeneous, span_basis
from autcone.poly import MonomialBasis, indices_of, monomial_from_indices, shifted_partial_terms
from autcone.varieties import Parametrization

log = logging.getLogger(__name__)

Matrix = tuple  # tuple of row tuples of Fraction


def _flatten(g: Sequence[Sequence[object]]) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for row in g for x in row)


def _unflatten(v: Sequence[Fraction], n: int) -> Matrix:
    return tuple(tuple(v[i * n : (i + 1) * n]) for i in range(n))


def bracket(g: Sequence[Sequence[object]], h: Sequence[Sequence[object]]) -> Matrix:
    n = len(g)
    if len(h) != n or any(len(r) != n for r in g) or any(len(r) != n for r in h):
        raise ValueError("bracket needs two square matrices of the same size")
    g = [[Fraction(x) for x in r] for r in g]
    h = [[Fraction(x) for x in r] for r in h]
    return tuple(
        tuple(sum((g[i][k] * h[k][j] - h[i][k] * g[k][j] for k in range(n)), Fraction(0)) for j in range(n))
        for i in range(n)
    )


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class LinearLieAlgebra:
    ambient_dim: int
    basis: tuple[Matrix, ...]
    provenance: str = ""

    @classmethod
    def from_vectors(cls, n: int, vectors, provenance: str = "") -> "LinearLieAlgebra":
        vecs = span_basis(vectors, n * n) if vectors else []
        return cls(n, tuple(_unflatten(v, n) for v in vecs), provenance)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def flat(self) -> list[tuple[Fraction, ...]]:
        return [_flatten(b) for b in self.basis]

    def reducer(self) -> SpanReducer:
        return SpanReducer(self.flat(), self.ambient_dim**2)

    def contains(self, g: Sequence[Sequence[object]], reducer: SpanReducer | None = None) -> bool:
        return (reducer or self.reducer()).contains(_flatten(g))

    def contains_identity(self) -> bool:
        return self.contains(identity(self.ambient_dim))

    def is_bracket_closed(self) -> bool:
        red = self.reducer()
        return all(
            red.contains(_flatten(bracket(self.basis[i], self.basis[j])))
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    def as_tensors(self) -> "ProlongationSpace":
        """View g as the order-0 space: A(e_l)_m = g[m][l]."""
        n = self.ambient_dim
        vecs = [tuple(b[m][l] for l in range(n) for m in range(n)) for b in self.basis]
        return ProlongationSpace(n, 0, tuple(vecs))


@dataclass(frozen=True)
class ProlongationSpace:
    ambient_dim: int
    order: int
    basis: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def monomial_basis(self) -> MonomialBasis:
        return MonomialBasis(self.ambient_dim, self.order + 1)

    def value(self, t: int, args: Sequence[int]) -> tuple[Fraction, ...]:
        """A_t(e_{args[0]}, ..., e_{args[k]}) as a vector in V."""
        n = self.ambient_dim
        if len(args) != self.order + 1:
            raise ValueError(f"need {self.order + 1} arguments")
        mu = self.monomial_basis.index(monomial_from_indices(n, args))
        return self.basis[t][mu * n : (mu + 1) * n]

    def partial_evaluation(self, t: int, fixed: Sequence[int]) -> Matrix:
        """The endomorphism v -> A_t(e_fixed..., v)."""
        n = self.ambient_dim
        cols = [self.value(t, tuple(fixed) + (l,)) for l in range(n)]
        return tuple(tuple(cols[l][m] for l in range(n)) for m in range(n))


# -- aut_cone ----------------------------------------------------------------------


def _aut_rows(piece: GradedPiece) -> Iterator[dict[int, Fraction]]:
    n = piece.ambient_dim
    mb = piece.monomial_basis
    red = piece.reducer
    for form in piece.forms():
        rows: dict[int, dict[int, Fraction]] = {}
        for i in range(n):
            for j in range(n):
                terms = shifted_partial_terms(form.terms, i, j)
                if not terms:
                    continue
                nf = red.reduce({mb.index(m): c for m, c in terms.items()})
                for mu, c in nf.items():
                    rows.setdefault(mu, {})[i * n + j] = c
        for mu in sorted(rows):
            yield rows[mu]


def aut_cone(pieces: Sequence[GradedPiece], provenance: str = "") -> LinearLieAlgebra:
    """Basis of {g : D_g f in P for every f in every piece P}."""
    pieces = [p for p in pieces if p.dim]
    if not pieces:
        raise ValueError("aut_cone needs at least one non-trivial graded piece")
    n = pieces[0].ambient_dim
    if any(p.ambient_dim != n for p in pieces):
        raise ValueError("pieces live in different ambient spaces")

    def rows():
        for p in pieces:
            yield from _aut_rows(p)

    kernel = solve_homogeneous(rows(), n * n)
    return LinearLieAlgebra.from_vectors(n, kernel, provenance)


def projective_dim(g: LinearLieAlgebra) -> int:
    if not g.contains_identity():
        raise ValueError("identity is not in the algebra; input is not a cone")
    return g.dim - 1


# -- prolongations ------------------------------------------------------------------


def _slice_rows(parent: ProlongationSpace) -> Iterator[dict[int, Fraction]]:
    """Symmetry constraints on A given by slices S_i = A(e_i, ...) = sum_t c[i,t] B_t.

    Unknown c[i, t] has index i * p + t.  For i < j, nu of degree k-1 and
    output m:  S_i(e_nu e_j)_m - S_j(e_nu e_i)_m = 0.
    """
    n = parent.ambient_dim
    k = parent.order + 1
    p = parent.dim
    mb = parent.monomial_basis  # degree k
    basis = parent.basis
    for nu in MonomialBasis(n, k - 1):
        nu_idx = indices_of(nu)
        for i in range(n):
            at_nu_i = mb.index(monomial_from_indices(n, nu_idx + (i,)))
            for j in range(i + 1, n):
                at_nu_j = mb.index(monomial_from_indices(n, nu_idx + (j,)))
                for m in range(n):
                    a = at_nu_j * n + m  # S_i at nu + j
                    b = at_nu_i * n + m  # S_j at nu + i
                    row = {}
                    for t in range(p):
                        x = basis[t][a]
                        if x:
                            row[i * p + t] = x
                        y = basis[t][b]
                        if y:
                            row[j * p + t] = row.get(j * p + t, 0) - y
                    row = {c: v for c, v in row.items() if v}
                    if row:
                        yield row


def _prolong_slices(parent: ProlongationSpace) -> ProlongationSpace:
    n = parent.ambient_dim
    k = parent.order + 1
    p = parent.dim
    if p == 0:
        return ProlongationSpace(n, k, ())
    kernel = solve_homogeneous(_slice_rows(parent), n * p)
    parent_mb = parent.monomial_basis
    mb = MonomialBasis(n, k + 1)
    vecs = []
    for sol in kernel:
        v = [Fraction(0)] * (len(mb) * n)
        for mu_i, mu in enumerate(mb):
            idx = indices_of(mu)
            i = idx[0]
            rest = parent_mb.index(monomial_from_indices(n, idx[1:]))
            for m in range(n):
                acc = Fraction(0)
                for t in range(p):
                    c = sol[i * p + t]
                    if c:
                        acc += c * parent.basis[t][rest * n + m]
                v[mu_i * n + m] = acc
        vecs.append(v)
    return ProlongationSpace(n, k, tuple(span_basis(vecs, len(mb) * n)) if vecs else ())


def _direct_rows(g: LinearLieAlgebra, k: int) -> Iterator[dict[int, Fraction]]:
    """Partial evaluations of A modulo span(g), in monomial coordinates.

    The flattened partial evaluation at nu has entry (m, l) equal to the
    unknown A(e_nu e_l)_m; its normal form modulo the rref basis of g must
    vanish in every non-pivot coordinate.
    """
    n = g.ambient_dim
    red = g.reducer()
    pivot_rows = red.rows
    pivots = set(red.pivots)
    free = [c for c in range(n * n) if c not in pivots]
    mb = MonomialBasis(n, k + 1)
    for nu in MonomialBasis(n, k):
        nu_idx = indices_of(nu)
        unk = [mb.index(monomial_from_indices(n, nu_idx + (l,))) * n for l in range(n)]

        def var(coord: int) -> int:
            m, l = divmod(coord, n)
            return unk[l] + m

        for f in free:
            row = {var(f): Fraction(1)}
            for pc, prow in pivot_rows:
                x = prow.get(f)
                if x:
                    key = var(pc)
                    w = row.get(key, 0) - x
                    if w:
                        row[key] = w
                    else:
                        row.pop(key, None)
            if row:
                yield row


def _prolong_direct(g: LinearLieAlgebra, k: int) -> ProlongationSpace:
    n = g.ambient_dim
    size = MonomialBasis.size(n, k + 1) * n
    kernel = solve_homogeneous(_direct_rows(g, k), size)
    return ProlongationSpace(n, k, tuple(span_basis(kernel, size)) if kernel else ())


def prolongation(g: LinearLieAlgebra, k: int, method: str = "direct") -> ProlongationSpace:
    """k-th prolongation g^(k).

    ``method="direct"`` (default) solves one system in the monomial
    coordinates of Sym^{k+1} V* (x) V.  ``method="slices"`` climbs one order
    at a time: A is in g^(j) iff each A(e_i, ...) is in g^(j-1), so only the
    coefficients of each slice in a basis of g^(j-1) are unknown.  Both
    return the same rref-canonical basis.
    """
    if k < 1:
        raise ValueError("prolongation order must be >= 1")
    if method == "direct":
        return _prolong_direct(g, k)
    if method != "slices":
        raise ValueError(f"unknown method {method!r}")
    space = g.as_tensors()
    for _ in range(k):
        space = _prolong_slices(space)
        log.debug("prolongation order %d: dim %d", space.order, space.dim)
    return space


def check_partial_evaluations(space: ProlongationSpace, parent: LinearLieAlgebra | ProlongationSpace) -> bool:
    """Every partial evaluation A(e_nu, .) with |nu| = order lies in the parent."""
    n = space.ambient_dim
    if isinstance(parent, LinearLieAlgebra):
        red = parent.reducer()
        for t in range(space.dim):
            for nu in MonomialBasis(n, space.order):
                if not red.contains(_flatten(space.partial_evaluation(t, indices_of(nu)))):
                    return False
        return True
    red = SpanReducer(parent.basis, len(parent.monomial_basis) * n)
    pmb = parent.monomial_basis
    for t in range(space.dim):
        for i in range(n):
            vec = []
            for mu in pmb:
                vec.extend(space.value(t, (i,) + indices_of(mu)))
            if not red.contains(vec):
                return False
    return True


def recombine(g: LinearLieAlgebra, seed: int = 0) -> LinearLieAlgebra:
    """Same algebra presented by a random invertible recombination of its basis
    (left un-normalized on purpose)."""
    rng = random.Random(seed)
    flat = g.flat()
    while True:
        coeffs = [[rng.randint(-4, 4) for _ in flat] for _ in flat]
        vecs = [tuple(sum((c * v[i] for c, v in zip(row, flat)), Fraction(0)) for i in range(len(flat[0]))) for row in coeffs]
        if len(span_basis(vecs, len(flat[0]))) == len(flat):
            break
    return LinearLieAlgebra(g.ambient_dim, tuple(_unflatten(v, g.ambient_dim) for v in vecs), g.provenance)


# -- tangency cross-validation -----------------------------------------------------------


def tangency_check(g: LinearLieAlgebra, p: Parametrization, points: int = 20, seed: int = 0) -> bool:
    """g.x lies in the column span of the Jacobian of p at random points x = p(w)."""
    rng = random.Random(seed)
    n = p.ambient_dim
    partials = [[c.partial(k) for c in p.components] for k in range(p.param_count)]
    for _ in range(points):
        w = p.random_params(rng)
        x = p(w)
        cols = [[d.evaluate(w) for d in col] for col in partials]
        red = SpanReducer(cols, n)
        for b in g.basis:
            gx = {i: sum((b[i][j] * x[j] for j in range(n)), Fraction(0)) for i in range(n)}
            if not red.contains({i: v for i, v in gx.items() if v}):
                return False
    return True
