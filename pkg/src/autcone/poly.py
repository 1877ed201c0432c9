"""Sparse multivariate polynomials over Q keyed by exponent tuples.

Monomials are plain tuples of non-negative ints.  Within a fixed degree they
are listed in graded-lex order with ``x0`` largest, so for two variables in
degree 2 the order is ``x0^2, x0*x1, x1^2``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Mapping, Sequence

from autcone.linalg import DimensionError, MatrixQ

Monomial = tuple


def grlex_key(m: Monomial) -> tuple:
    """Sort key: ascending total degree, then descending lex (x0 heaviest)."""
    return (sum(m), tuple(-e for e in m))


def monomial_from_indices(nvars: int, indices: Iterable[int]) -> Monomial:
    e = [0] * nvars
    for i in indices:
        e[i] += 1
    return tuple(e)


def indices_of(m: Monomial) -> tuple[int, ...]:
    """Multiset of variable indices, sorted: x0^2*x3 -> (0, 0, 3)."""
    return tuple(i for i, e in enumerate(m) for _ in range(e))


class MonomialBasis:
    """All monomials of one degree, in graded-lex order."""

    def __init__(self, nvars: int, degree: int):
        if nvars < 0 or degree < 0:
            raise ValueError("nvars and degree must be non-negative")
        self.nvars = nvars
        self.degree = degree
        self.monomials: tuple[Monomial, ...] = tuple(
            monomial_from_indices(nvars, c) for c in combinations_with_replacement(range(nvars), degree)
        )
        self._index = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __getitem__(self, i: int) -> Monomial:
        return self.monomials[i]

    def index(self, m: Monomial) -> int:
        return self._index[m]

    def get(self, m: Monomial, default=None):
        return self._index.get(m, default)

    @staticmethod
    def size(nvars: int, degree: int) -> int:
        return comb(nvars + degree - 1, degree)


def _check_nvars(f: "Polynomial", g: "Polynomial"):
    if f.nvars != g.nvars:
        raise DimensionError(f"variable count mismatch: {f.nvars} vs {g.nvars}")


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            if len(m) != nvars:
                raise DimensionError(f"exponent vector {m} has wrong length for {nvars} variables")
            c = c if isinstance(c, Fraction) else Fraction(c)
            if c:
                clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range")
        return cls(nvars, {monomial_from_indices(nvars, [i]): 1})

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> "Polynomial":
        return cls(len(m), {m: c})

    # arithmetic

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            _check_nvars(self, other)
            return other
        return Polynomial.constant(self.nvars, other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            w = out.get(m, 0) + c
            if w:
                out[m] = w
            else:
                out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self.nvars)
            return Polynomial._raw(self.nvars, {m: v * c for m, v in self.terms.items()})
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative exponent")
        out = Polynomial.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if not self.terms:
            return other == 0
        return self.terms == Polynomial.constant(self.nvars, other).terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # structure

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def evaluate(self, point: Sequence[object]):
        if len(point) != self.nvars:
            raise DimensionError("point has wrong length")
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t *= x**e
            total += t
        return total

    def partial(self, i: int) -> "Polynomial":
        return partial(self, i)

    def compose(self, subs: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute ``subs[i]`` for ``x_i``."""
        if len(subs) != self.nvars:
            raise DimensionError("need one substitution per variable")
        if not subs:
            return Polynomial.constant(0, self.terms.get((), 0))
        target = subs[0].nvars
        powers: dict[tuple[int, int], Polynomial] = {}

        def pw(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = subs[i] ** e
            return powers[key]

        out = Polynomial.zero(target)
        for m, c in self.terms.items():
            t = Polynomial.constant(target, c)
            for i, e in enumerate(m):
                if e:
                    t = t * pw(i, e)
            out = out + t
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {render(self)!r})"

    def __str__(self) -> str:
        return render(self)


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    _check_nvars(f, g)
    out: dict[Monomial, Fraction] = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            w = out.get(m, 0) + c1 * c2
            if w:
                out[m] = w
            else:
                out.pop(m, None)
    return Polynomial._raw(f.nvars, out)


def partial(f: Polynomial, i: int) -> Polynomial:
    if not 0 <= i < f.nvars:
        raise IndexError(f"variable index {i} out of range for {f.nvars} variables")
    out = {}
    for m, c in f.terms.items():
        e = m[i]
        if e:
            out[m[:i] + (e - 1,) + m[i + 1 :]] = c * e
    return Polynomial._raw(f.nvars, out)


def _as_rows(g) -> list[list[Fraction]]:
    if isinstance(g, MatrixQ):
        return g.to_dense()
    return [[Fraction(x) for x in row] for row in g]


def shifted_partial_terms(terms: Mapping[Monomial, Fraction], i: int, j: int) -> dict[Monomial, Fraction]:
    """Terms of ``x_j * d f / d x_i``."""
    out: dict[Monomial, Fraction] = {}
    for m, c in terms.items():
        e = m[i]
        if e:
            lst = list(m)
            lst[i] -= 1
            lst[j] += 1
            out[tuple(lst)] = c * e
    return out


def derivation_apply(g, f: Polynomial) -> Polynomial:
    """The derivation ``D_g f = sum_{i,j} g[i][j] * x_j * df/dx_i``.

    This is the first-order term of ``f((I + t g) x)`` with ``g`` acting on
    column vectors, so ``D_g f`` vanishes on a cone whenever ``g`` is tangent
    to it.
    """
    rows = _as_rows(g)
    n = f.nvars
    if len(rows) != n or any(len(r) != n for r in rows):
        raise DimensionError(f"matrix must be {n}x{n}")
    out: dict[Monomial, Fraction] = {}
    for i in range(n):
        for j in range(n):
            gij = rows[i][j]
            if not gij:
                continue
            for m, c in shifted_partial_terms(f.terms, i, j).items():
                w = out.get(m, 0) + gij * c
                if w:
                    out[m] = w
                else:
                    out.pop(m, None)
    return Polynomial._raw(n, out)


def coefficient_vector(f: Polynomial, basis: MonomialBasis) -> tuple[Fraction, ...]:
    if f.nvars != basis.nvars:
        raise DimensionError("variable count mismatch")
    v = [Fraction(0)] * len(basis)
    for m, c in f.terms.items():
        if sum(m) != basis.degree:
            raise ValueError(f"term of degree {sum(m)} in a degree-{basis.degree} coefficient vector")
        v[basis.index(m)] = c
    return tuple(v)


def sparse_coefficients(f: Polynomial, basis: MonomialBasis) -> dict[int, Fraction]:
    if any(sum(m) != basis.degree for m in f.terms):
        raise ValueError("polynomial is not homogeneous of the basis degree")
    return {basis.index(m): c for m, c in f.terms.items()}


def from_coefficient_vector(v: Sequence[object] | Mapping[int, object], basis: MonomialBasis) -> Polynomial:
    items = v.items() if isinstance(v, Mapping) else enumerate(v)
    return Polynomial(basis.nvars, {basis[i]: c for i, c in items if c})


# -- text form ---------------------------------------------------------------------


def _render_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i}")
        elif e:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def render(f: Polynomial) -> str:
    """Deterministic text form, e.g. ``2*x0^2*x3 - 1/3*x1*x2``."""
    if not f.terms:
        return "0"
    out = []
    for m in sorted(f.terms, key=grlex_key, reverse=True):
        c = f.terms[m]
        mono = _render_monomial(m)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse(text: str, nvars: int) -> Polynomial:
    """Inverse of :func:`render` (also accepts extra spaces and ``**``)."""
    s = text.replace("**", "^").replace("−", "-").strip()
    if s == "0":
        return Polynomial.zero(nvars)
    terms: dict[Monomial, Fraction] = {}
    pos = 0
    while pos < len(s):
        match = _TERM.match(s, pos)
        if not match or match.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, body = match.group(1), match.group(2).strip()
        pos = match.end()
        coef = Fraction(-1 if sign == "-" else 1)
        exps = [0] * nvars
        for factor in body.split("*"):
            factor = factor.strip()
            fm = _FACTOR.match(factor)
            if fm:
                i = int(fm.group(1))
                if i >= nvars:
                    raise ValueError(f"variable x{i} out of range")
                exps[i] += int(fm.group(2) or 1)
            else:
                try:
                    coef *= Fraction(factor)
                except ValueError:
                    raise ValueError(f"bad factor {factor!r}") from None
        m = tuple(exps)
        w = terms.get(m, 0) + coef
        if w:
            terms[m] = w
        else:
            terms.pop(m, None)
    return Polynomial(nvars, terms)
