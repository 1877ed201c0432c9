"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  Elimination runs on integer rows
(denominators cleared row by row) so intermediate values never carry
fractions; the reduced row-echelon form is only turned back into
``Fraction`` entries at the very end.

Two elimination paths exist:

* a dense Bareiss pass for matrices with fewer than :data:`DENSE_CUTOFF`
  columns, and
* a sparse, row-streaming fraction-free pass (rows are kept primitive by
  dividing out their content after every combination) for everything else.

The reduced row-echelon form of a matrix is unique, so both paths return
bit-identical results; the tests check this.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, NamedTuple, Sequence

DENSE_CUTOFF = 64

Vector = tuple  # tuple of Fraction


class DimensionError(ValueError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class MatrixQ:
    """Sparse rational matrix.  Immutable; absent entries are zero."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], object] | None = None):
        if rows < 0 or cols < 0:
            raise DimensionError("negative shape")
        data: list[dict[int, Fraction]] = [{} for _ in range(rows)]
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise DimensionError(f"entry ({r}, {c}) outside {rows}x{cols}")
            v = _frac(v)
            if v:
                data[r][c] = v
        self.rows = rows
        self.cols = cols
        self._data = tuple(data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], cols: int | None = None) -> "MatrixQ":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = {}
        for r, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionError("ragged rows")
            for c, v in enumerate(row):
                if v:
                    entries[r, c] = v
        return cls(len(rows), cols, entries)

    @classmethod
    def from_sparse_rows(cls, rows: Sequence[Mapping[int, object]], cols: int) -> "MatrixQ":
        entries = {(r, c): v for r, row in enumerate(rows) for c, v in row.items()}
        return cls(len(rows), cols, entries)

    @classmethod
    def identity(cls, n: int) -> "MatrixQ":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(rc)
        return self._data[r].get(c, Fraction(0))

    def row(self, r: int) -> dict[int, Fraction]:
        return dict(self._data[r])

    def sparse_rows(self) -> list[dict[int, Fraction]]:
        return [dict(r) for r in self._data]

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._data)

    def to_dense(self) -> list[list[Fraction]]:
        out = []
        for r in self._data:
            dense = [Fraction(0)] * self.cols
            for c, v in r.items():
                dense[c] = v
            out.append(dense)
        return out

    def transpose(self) -> "MatrixQ":
        return MatrixQ(self.cols, self.rows, {(c, r): v for r, row in enumerate(self._data) for c, v in row.items()})

    def __matmul__(self, other):
        if isinstance(other, MatrixQ):
            if self.cols != other.rows:
                raise DimensionError("shape mismatch")
            entries: dict[tuple[int, int], Fraction] = {}
            for r, row in enumerate(self._data):
                for k, a in row.items():
                    for c, b in other._data[k].items():
                        entries[r, c] = entries.get((r, c), 0) + a * b
            return MatrixQ(self.rows, other.cols, entries)
        v = list(other)
        if len(v) != self.cols:
            raise DimensionError("shape mismatch")
        return tuple(sum((a * v[c] for c, a in row.items()), Fraction(0)) for row in self._data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixQ)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self._data == other._data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(sorted(r.items())) for r in self._data)))

    def __repr__(self) -> str:
        return f"MatrixQ({self.rows}x{self.cols}, {self.to_dense()!r})"


class RREF(NamedTuple):
    matrix: MatrixQ
    pivots: tuple[int, ...]
    rank: int


# -- integer row helpers ------------------------------------------------------


def _int_row(row: Mapping[int, object]) -> dict[int, int]:
    """Scale a rational sparse row to a primitive integer row."""
    items = [(c, _frac(v)) for c, v in row.items() if v]
    if not items:
        return {}
    den = 1
    for _, v in items:
        d = v.denominator
        den = den * d // gcd(den, d)
    out = {c: v.numerator * (den // v.denominator) for c, v in items}
    return _primitive(out)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        for c in row:
            row[c] //= g
    return row


def _combine(row: dict[int, int], prow: dict[int, int], col: int) -> dict[int, int]:
    """Return a primitive multiple of ``b*row - a*prow`` with column ``col`` cleared."""
    a = row[col]
    b = prow[col]
    g = gcd(a, b)
    a //= g
    b //= g
    if b != 1:
        new = {c: v * b for c, v in row.items()}
    else:
        new = dict(row)
    for c, v in prow.items():
        w = new.get(c, 0) - a * v
        if w:
            new[c] = w
        else:
            new.pop(c, None)
    return _primitive(new)


class Echelon:
    """Row-streaming fraction-free echelon form over the integers.

    Rows are added one at a time; each is reduced against the current
    pivot rows (leftmost column first) and, if something survives, becomes a
    new pivot row keyed by its leading column.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def is_full(self) -> bool:
        return len(self.pivots) == self.ncols

    def _reduce_leading(self, row: dict[int, int]) -> dict[int, int]:
        pivots = self.pivots
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                break
            row = _combine(row, p, c)
        return row

    def add(self, row: Mapping[int, object]) -> bool:
        r = _int_row(row)
        if any(c < 0 or c >= self.ncols for c in r):
            raise DimensionError("column index out of range")
        r = self._reduce_leading(r)
        if not r:
            return False
        lead = min(r)
        if r[lead] < 0:
            r = {c: -v for c, v in r.items()}
        self.pivots[lead] = r
        return True

    def extend(self, rows: Iterable[Mapping[int, object]], stop_when_full: bool = True) -> "Echelon":
        for row in rows:
            self.add(row)
            if stop_when_full and self.is_full():
                break
        return self

    def reduced(self) -> list[tuple[int, dict[int, Fraction]]]:
        """Fully reduced pivot rows, leading entry 1, sorted by pivot column."""
        cols = sorted(self.pivots)
        done: dict[int, dict[int, int]] = {}
        for c in reversed(cols):
            row = self.pivots[c]
            for c2 in sorted(k for k in row if k != c and k in done):
                if c2 in row:
                    row = _combine(row, done[c2], c2)
            if row[c] < 0:
                row = {k: -v for k, v in row.items()}
            done[c] = row
            self.pivots[c] = row
        out = []
        for c in cols:
            row = done[c]
            lead = row[c]
            out.append((c, {k: Fraction(v, lead) for k, v in sorted(row.items())}))
        return out


# -- dense Bareiss path -----------------------------------------------------------


def _bareiss_rref(rows: list[dict[int, Fraction]], ncols: int) -> list[tuple[int, dict[int, Fraction]]]:
    mat = []
    for row in rows:
        ir = _int_row(row)
        if ir:
            dense = [0] * ncols
            for c, v in ir.items():
                dense[c] = v
            mat.append(dense)
    nrows = len(mat)
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        i = next((i for i in range(r, nrows) if mat[i][c]), None)
        if i is None:
            continue
        if i != r:
            mat[r], mat[i] = mat[i], mat[r]
        pr = mat[r]
        pv = pr[c]
        for i in range(r + 1, nrows):
            mi = mat[i]
            f = mi[c]
            for j in range(c + 1, ncols):
                mi[j] = (pv * mi[j] - f * pr[j]) // prev
            mi[c] = 0
        prev = pv
        pivots.append(c)
        r += 1
    # back substitution on the echelon rows
    frows = [[Fraction(v) for v in mat[i]] for i in range(r)]
    for i in reversed(range(r)):
        c = pivots[i]
        lead = frows[i][c]
        fi = frows[i] = [v / lead for v in frows[i]]
        for k in range(i):
            f = frows[k][c]
            if f:
                fk = frows[k]
                for j in range(c, ncols):
                    if fi[j]:
                        fk[j] -= f * fi[j]
    return [(pivots[i], {j: v for j, v in enumerate(frows[i]) if v}) for i in range(r)]


def _reduced_rows(rows: list[dict[int, Fraction]], ncols: int) -> list[tuple[int, dict[int, Fraction]]]:
    if ncols < DENSE_CUTOFF:
        return _bareiss_rref(rows, ncols)
    return Echelon(ncols).extend(rows, stop_when_full=False).reduced()


# -- public operations ------------------------------------------------------------


def rref(m: MatrixQ) -> RREF:
    red = _reduced_rows(m.sparse_rows(), m.cols)
    pivots = tuple(c for c, _ in red)
    entries = {(i, c): v for i, (_, row) in enumerate(red) for c, v in row.items()}
    return RREF(MatrixQ(m.rows, m.cols, entries), pivots, len(pivots))


def rank(m: MatrixQ) -> int:
    if m.cols < DENSE_CUTOFF:
        return len(_bareiss_rref(m.sparse_rows(), m.cols))
    return Echelon(m.cols).extend(m.sparse_rows()).rank


def _kernel_from_reduced(red: list[tuple[int, dict[int, Fraction]]], ncols: int) -> list[Vector]:
    pivot_set = {c for c, _ in red}
    free = [c for c in range(ncols) if c not in pivot_set]
    zero = Fraction(0)
    one = Fraction(1)
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for c, row in red:
            x = row.get(f)
            if x:
                v[c] = -x
        basis.append(tuple(v))
    return basis


def kernel_basis(m: MatrixQ) -> list[Vector]:
    """Canonical kernel basis: one vector per free column, free entry 1."""
    return solve_homogeneous(m.sparse_rows(), m.cols)


def solve_homogeneous(rows: Iterable[Mapping[int, object]], ncols: int) -> list[Vector]:
    """Kernel of a system given as a stream of sparse rows.

    The stream is consumed lazily and abandoned as soon as the rank reaches
    ``ncols``, so very tall systems with trivial kernel stay cheap.
    """
    if ncols == 0:
        return []
    ech = Echelon(ncols)
    ech.extend(rows, stop_when_full=True)
    if ech.is_full():
        return []
    return _kernel_from_reduced(ech.reduced(), ncols)


def span_basis(vectors: Iterable[Sequence[object]], dim: int | None = None) -> list[Vector]:
    """Rref-canonical basis of the span of ``vectors``."""
    vectors = [tuple(_frac(x) for x in v) for v in vectors]
    if dim is None:
        if not vectors:
            raise DimensionError("ambient dimension unknown for empty input")
        dim = len(vectors[0])
    for v in vectors:
        if len(v) != dim:
            raise DimensionError(f"vector of length {len(v)} in ambient dimension {dim}")
    rows = [{c: x for c, x in enumerate(v) if x} for v in vectors]
    red = _reduced_rows(rows, dim)
    zero = Fraction(0)
    out = []
    for _, row in red:
        v = [zero] * dim
        for c, x in row.items():
            v[c] = x
        out.append(tuple(v))
    return out


class SpanReducer:
    """Reduction modulo an rref basis: the normal form of a vector is its
    remainder after clearing every pivot coordinate."""

    def __init__(self, basis: Sequence[Sequence[object]], dim: int):
        self.dim = dim
        self.rows = [
            (c, row) for c, row in _reduced_rows([{i: x for i, x in enumerate(v) if x} for v in basis], dim)
        ]
        self.pivots = tuple(c for c, _ in self.rows)
        self._by_pivot = dict(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Mapping[int, object]) -> dict[int, Fraction]:
        out = {c: _frac(x) for c, x in v.items() if x}
        for c, row in self.rows:
            x = out.get(c)
            if x:
                for k, y in row.items():
                    w = out.get(k, 0) - x * y
                    if w:
                        out[k] = w
                    else:
                        out.pop(k, None)
        return out

    def contains(self, v: Sequence[object] | Mapping[int, object]) -> bool:
        if not isinstance(v, Mapping):
            v = {i: x for i, x in enumerate(v) if x}
        return not self.reduce(v)


def intersect_subspaces(a: Sequence[Sequence[object]], b: Sequence[Sequence[object]], dim: int | None = None) -> list[Vector]:
    """Basis of span(a) ∩ span(b), rref-canonical."""
    if dim is None:
        if a:
            dim = len(a[0])
        elif b:
            dim = len(b[0])
        else:
            return []
    for v in list(a) + list(b):
        if len(v) != dim:
            raise DimensionError("bases live in different ambient dimensions")
    if not a or not b:
        return []
    a = [tuple(_frac(x) for x in v) for v in a]
    b = [tuple(_frac(x) for x in v) for v in b]
    na, nb = len(a), len(b)
    # columns: coefficients x (for a) and y (for b); rows: coordinates of sum x_i a_i - y_j b_j
    rows = []
    for k in range(dim):
        row = {i: a[i][k] for i in range(na) if a[i][k]}
        row.update({na + j: -b[j][k] for j in range(nb) if b[j][k]})
        rows.append(row)
    ker = solve_homogeneous(rows, na + nb)
    vecs = []
    for sol in ker:
        vecs.append(tuple(sum((sol[i] * a[i][k] for i in range(na)), Fraction(0)) for k in range(dim)))
    return span_basis(vecs, dim) if vecs else []


def membership(v: Sequence[object], basis: Sequence[Sequence[object]]) -> tuple[Fraction, ...] | None:
    """Coefficients c with sum(c_i * basis_i) == v, or ``None`` when v is not in the span.

    With a dependent basis the canonical solution (free coefficients 0) is returned.
    """
    v = tuple(_frac(x) for x in v)
    dim = len(v)
    for b in basis:
        if len(b) != dim:
            raise DimensionError("vector and basis dimensions differ")
    k = len(basis)
    rows = []
    for i in range(dim):
        row = {j: _frac(basis[j][i]) for j in range(k) if basis[j][i]}
        if v[i]:
            row[k] = v[i]
        rows.append(row)
    red = _reduced_rows(rows, k + 1)
    coeffs = [Fraction(0)] * k
    for c, row in red:
        if c == k:
            return None
        coeffs[c] = row.get(k, Fraction(0))
    return tuple(coeffs)
