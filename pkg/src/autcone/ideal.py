"""Degree-bounded graded pieces of homogeneous ideals.

A :class:`GradedPiece` is the degree-d slice I_d of an ideal, stored as an
rref-canonical basis of coefficient vectors over ``MonomialBasis(n, d)``.
Pieces come either from a parametrization (kernel of the pullback map) or
from a list of generators.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from autcone.linalg import SpanReducer, solve_homogeneous, span_basis
from autcone.poly import (
    MonomialBasis,
    Polynomial,
    from_coefficient_vector,
    mul,
    sparse_coefficients,
)
from autcone.varieties import Parametrization


@dataclass(frozen=True)
class GradedPiece:
    ambient_dim: int
    degree: int
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_vectors(cls, ambient_dim: int, degree: int, vectors) -> "GradedPiece":
        size = MonomialBasis.size(ambient_dim, degree)
        vecs = span_basis(vectors, size) if vectors else []
        return cls(ambient_dim, degree, tuple(vecs))

    @classmethod
    def from_polynomials(cls, ambient_dim: int, degree: int, polys: Sequence[Polynomial]) -> "GradedPiece":
        mb = MonomialBasis(ambient_dim, degree)
        vecs = []
        for f in polys:
            if f.nvars != ambient_dim:
                raise ValueError("polynomial lives in the wrong number of variables")
            coeffs = sparse_coefficients(f, mb)
            v = [Fraction(0)] * len(mb)
            for i, c in coeffs.items():
                v[i] = c
            vecs.append(v)
        return cls.from_vectors(ambient_dim, degree, vecs)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def monomial_basis(self) -> MonomialBasis:
        return MonomialBasis(self.ambient_dim, self.degree)

    @cached_property
    def reducer(self) -> SpanReducer:
        return SpanReducer(self.basis, len(self.monomial_basis))

    def forms(self) -> list[Polynomial]:
        return [from_coefficient_vector(v, self.monomial_basis) for v in self.basis]

    def contains(self, f: Polynomial) -> bool:
        if not f:
            return True
        if not f.is_homogeneous() or f.degree() != self.degree:
            return False
        return self.reducer.contains(sparse_coefficients(f, self.monomial_basis))

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True)

    def to_obj(self) -> dict:
        mb = self.monomial_basis
        forms = [[[str(c), list(mb[i])] for i, c in enumerate(v) if c] for v in self.basis]
        return {"ambient_dim": self.ambient_dim, "degree": self.degree, "basis": forms}

    @classmethod
    def from_obj(cls, obj: dict) -> "GradedPiece":
        n, d = obj["ambient_dim"], obj["degree"]
        polys = [Polynomial(n, {tuple(e): Fraction(c) for c, e in terms}) for terms in obj["basis"]]
        return cls.from_polynomials(n, d, polys)

    @classmethod
    def from_json(cls, text: str) -> "GradedPiece":
        return cls.from_obj(json.loads(text))


class PullbackCache:
    """Pullbacks f o p of monomials, built incrementally by degree."""

    def __init__(self, p: Parametrization):
        self.p = p
        self._cache: dict[tuple, Polynomial] = {(0,) * p.ambient_dim: Polynomial.constant(p.param_count, 1)}

    def get(self, m: tuple) -> Polynomial:
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        i = next(k for k, e in enumerate(m) if e)
        prev = m[:i] + (m[i] - 1,) + m[i + 1 :]
        out = mul(self.get(prev), self.p.components[i])
        self._cache[m] = out
        return out


def pullback_rows(p: Parametrization, d: int, cache: PullbackCache | None = None) -> list[dict[int, Fraction]]:
    """Matrix of the pullback map Sym^d V* -> polynomials on W, one sparse row
    per parameter monomial; columns index ``MonomialBasis(ambient_dim, d)``."""
    cache = cache or PullbackCache(p)
    mb = MonomialBasis(p.ambient_dim, d)
    rows: dict[tuple, dict[int, Fraction]] = {}
    for j, m in enumerate(mb):
        for pm, c in cache.get(m).terms.items():
            rows.setdefault(pm, {})[j] = c
    return [rows[k] for k in sorted(rows)]


def forms_vanishing(p: Parametrization, d: int) -> GradedPiece:
    """All degree-d forms on V vanishing on the image of ``p`` (exact)."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    size = MonomialBasis.size(p.ambient_dim, d)
    kernel = solve_homogeneous(pullback_rows(p, d), size)
    return GradedPiece.from_vectors(p.ambient_dim, d, kernel)


def degree_piece_from_generators(gens: Sequence[Polynomial], d: int) -> GradedPiece:
    """Degree-d slice of the ideal generated by ``gens``."""
    if not gens:
        raise ValueError("no generators")
    n = gens[0].nvars
    polys = []
    for g in gens:
        if g.nvars != n:
            raise ValueError("generators live in different rings")
        if not g:
            continue
        if not g.is_homogeneous():
            raise ValueError(f"inhomogeneous generator {g}")
        e = g.degree()
        if e > d:
            raise ValueError(f"generator of degree {e} exceeds target degree {d}")
        for m in MonomialBasis(n, d - e):
            polys.append(mul(Polynomial.monomial(m), g))
    if not polys:
        return GradedPiece(n, d, ())
    return GradedPiece.from_polynomials(n, d, polys)


def is_nondegenerate(p: Parametrization) -> bool:
    return forms_vanishing(p, 1).dim == 0


def degree_bound(gens: Sequence[Polynomial]) -> int:
    """d(X): the maximal degree among defining forms."""
    if not gens:
        raise ValueError("empty generator list")
    return max(g.degree() for g in gens)
