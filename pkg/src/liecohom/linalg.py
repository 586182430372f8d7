"""Dense exact linear algebra over Q and Q(t).

Rational matrices are row-reduced fraction-free on integer rows (rows are
kept primitive to bound coefficient growth), then normalized once at the
end.  Matrices
containing ``t`` fall back to ordinary field elimination on canonical
:class:`~liecohom.scalar.RatFunc` entries.  Pivots are always the first
nonzero entry in a column, scanning columns left to right, so reduced forms
and derived bases are deterministic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

from .errors import InputError
from .scalar import ONE, ZERO, RatFunc, as_scalar, require_rational

__all__ = [
    "Definiteness",
    "Matrix",
    "Subspace",
    "definiteness",
    "rank",
    "rref",
    "solve",
]


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of exact scalars."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise InputError(
                f"matrix entries length {len(self.entries)} != {self.rows}x{self.cols}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise InputError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        flat = []
        for r in rows:
            if len(r) != cols:
                raise InputError("ragged rows")
            flat.extend(as_scalar(x) for x in r)
        return cls(len(rows), cols, tuple(flat))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        flat = [ZERO] * (n * n)
        for i in range(n):
            flat[i * n + i] = ONE
        return cls(n, n, tuple(flat))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        if not columns:
            return cls.zeros(rows, 0)
        return cls.from_rows(columns, cols=rows).T

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    @property
    def T(self) -> "Matrix":
        flat = [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return Matrix(self.cols, self.rows, tuple(flat))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def has_tau(self) -> bool:
        return any(isinstance(x, RatFunc) for x in self.entries)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise InputError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
            out = [ZERO] * (self.rows * other.cols)
            oc = other.cols
            sparse = [[(j, b) for j, b in enumerate(other.row(k)) if b] for k in range(other.rows)]
            for i in range(self.rows):
                base = i * oc
                for k, a in enumerate(self.row(i)):
                    if not a:
                        continue
                    for j, b in sparse[k]:
                        out[base + j] += a * b
            return Matrix(self.rows, other.cols, tuple(out))
        vec = list(other)
        if len(vec) != self.cols:
            raise InputError("vector length mismatch")
        return tuple(_dot(self.row(i), vec) for i in range(self.rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("shape mismatch in addition")
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("shape mismatch in subtraction")
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix(self.rows, self.cols, tuple(c * x for x in self.entries))

    @staticmethod
    def vstack(blocks: Sequence["Matrix"], cols: int) -> "Matrix":
        flat = []
        n = 0
        for b in blocks:
            if b.cols != cols:
                raise InputError("column mismatch in vstack")
            flat.extend(b.entries)
            n += b.rows
        return Matrix(n, cols, tuple(flat))


def _dot(u, v):
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


# elimination -----------------------------------------------------------


def _primitive_row(row):
    g = gcd(*row)
    if g > 1:
        return [x // g for x in row]
    return row


def _rref_integer(rows, ncols):
    """Fraction-free Gauss-Jordan on integer rows; returns (Fraction rows, pivots).

    Each update ``row_i <- piv * row_i - a * row_r`` is followed by division
    by the row content, which keeps entries small; rows with a zero in the
    pivot column are left untouched.
    """
    A = [_primitive_row(r) if any(r) else r for r in rows]
    m = len(A)
    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if A[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            A[r], A[p] = A[p], A[r]
        pr = A[r]
        piv = pr[c]
        nz = [j for j in range(c, ncols) if pr[j]]
        for i in range(m):
            if i == r:
                continue
            Ai = A[i]
            a = Ai[c]
            if a == 0:
                continue
            g = gcd(piv, a)
            f, h = piv // g, a // g
            if f != 1:
                Ai = [f * x for x in Ai]
            for j in nz:
                Ai[j] -= h * pr[j]
            A[i] = _primitive_row(Ai)
        pivots.append(c)
        r += 1
    out = []
    for i, row in enumerate(A):
        if i < len(pivots):
            d = row[pivots[i]]
            out.append([Fraction(x, d) if x else ZERO for x in row])
        else:
            out.append([ZERO] * ncols)
    return out, pivots


def _rref_field(rows, ncols):
    A = [list(r) for r in rows]
    m = len(A)
    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        if p != r:
            A[r], A[p] = A[p], A[r]
        inv = ONE / A[r][c]
        A[r] = [x * inv if x else ZERO for x in A[r]]
        pr = A[r]
        for i in range(m):
            if i == r:
                continue
            a = A[i][c]
            if a:
                A[i] = [x - a * y if y else x for x, y in zip(A[i], pr)]
        pivots.append(c)
        r += 1
    return A, pivots


def _rref_rows(rows, ncols):
    """Reduced row echelon form of a list of rows; returns (rows, pivot columns)."""
    if not rows or ncols == 0:
        return [list(r) for r in rows], []
    if any(isinstance(x, RatFunc) for r in rows for x in r):
        return _rref_field(rows, ncols)
    int_rows = []
    for r in rows:
        den = 1
        for x in r:
            if x and x.denominator != 1:
                den = lcm(den, x.denominator)
        if den == 1:
            int_rows.append([x.numerator for x in r])
        else:
            int_rows.append([x.numerator * (den // x.denominator) for x in r])
    return _rref_integer(int_rows, ncols)


def _kernel_basis(R, pivots, ncols):
    """Null-space basis read off an RREF, one vector per free column."""
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for i, pc in enumerate(pivots):
            x = R[i][f]
            if x:
                v[pc] = -x
        basis.append(v)
    return basis


def rref(m: Matrix):
    """Return ``(rref, rank, kernel)`` for ``m``.

    ``kernel`` is a :class:`Subspace` of the column space Q^cols.
    """
    R, pivots = _rref_rows(m.to_rows(), m.cols)
    kern = _kernel_basis(R, pivots, m.cols)
    rmat = Matrix(m.rows, m.cols, tuple(x for row in R for x in row)) if m.rows else m
    # the kernel basis above is already in RREF once reversed into pivot order
    return rmat, len(pivots), Subspace.span(kern, m.cols)


def rank(m: Matrix) -> int:
    return len(_rref_rows(m.to_rows(), m.cols)[1])


def solve(m: Matrix, b: Sequence) -> Optional[tuple]:
    """A particular solution of ``m x = b``, or ``None`` when b is not in the column space."""
    b = [as_scalar(x) for x in b]
    if len(b) != m.rows:
        raise InputError(f"right-hand side has length {len(b)}, matrix has {m.rows} rows")
    aug = [list(m.row(i)) + [b[i]] for i in range(m.rows)]
    R, pivots = _rref_rows(aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for i, pc in enumerate(pivots):
        x[pc] = R[i][m.cols]
    return tuple(x)


# subspaces -------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """Subspace of a coordinate space, stored as its canonical RREF basis.

    Two subspaces are equal exactly when their stored bases are equal.
    """

    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, vectors: Sequence[Sequence], ambient_dim: int) -> "Subspace":
        vecs = [[as_scalar(x) for x in v] for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise InputError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        R, pivots = _rref_rows(vecs, ambient_dim)
        R = R[: len(pivots)]
        return cls(ambient_dim, Matrix(len(R), ambient_dim, tuple(x for row in R for x in row)))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix(0, ambient_dim, ()))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list:
        return self.basis.to_rows()

    @cached_property
    def _sparse_rows(self) -> tuple:
        out = []
        for i in range(self.dim):
            nz = tuple((j, x) for j, x in enumerate(self.basis.row(i)) if x)
            out.append((nz[0][0], nz))
        return tuple(out)

    @property
    def pivots(self) -> tuple:
        return tuple(p for p, _ in self._sparse_rows)

    def coordinates(self, v: Sequence) -> Optional[tuple]:
        """Coordinates of ``v`` in the stored basis, or ``None`` if v is not in the span.

        For an RREF basis the coordinates are just the entries of v at the pivots.
        """
        v = [as_scalar(x) for x in v]
        if len(v) != self.ambient_dim:
            raise InputError("vector length does not match ambient dimension")
        coords = tuple(v[p] for p in self.pivots)
        residual = list(v)
        for c, (_, nz) in zip(coords, self._sparse_rows):
            if c:
                for j, x in nz:
                    residual[j] -= c * x
        if any(residual):
            return None
        return coords

    def contains(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors())

    def reduce(self, v: Sequence) -> list:
        """Residual of v after clearing the pivot coordinates with the basis."""
        v = [as_scalar(x) for x in v]
        for p, nz in self._sparse_rows:
            c = v[p]
            if c:
                for j, x in nz:
                    v[j] -= c * x
        return v

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.vectors() + other.vectors(), self.ambient_dim)

    def intersection(self, other: "Subspace") -> "Subspace":
        # x = sum a_i u_i = sum b_j w_j  <=>  [U^T | -W^T] (a, b) = 0
        n = self.ambient_dim
        cols = self.vectors() + [[-x for x in w] for w in other.vectors()]
        if not cols:
            return Subspace.zero(n)
        M = Matrix.from_rows([list(r) for r in zip(*cols)], cols=len(cols))
        _, _, ker = rref(M)
        out = []
        for coeffs in ker.vectors():
            v = [ZERO] * n
            for a, u in zip(coeffs[: self.dim], self.vectors()):
                if a:
                    for j, x in enumerate(u):
                        v[j] += a * x
            out.append(v)
        return Subspace.span(out, n)

    def annihilator(self) -> "Subspace":
        """Covectors vanishing on the subspace, in dual coordinates."""
        if self.dim == 0:
            return Subspace.full(self.ambient_dim)
        return rref(self.basis)[2]

    def has_tau(self) -> bool:
        return self.basis.has_tau()


# definiteness ----------------------------------------------------------


class Definiteness(enum.Enum):
    POS_DEF = "PosDef"
    NEG_DEF = "NegDef"
    POS_SEMI = "PosSemi"
    NEG_SEMI = "NegSemi"
    INDEFINITE = "Indefinite"
    ZERO = "Zero"


def definiteness(s: Matrix) -> Definiteness:
    """Classify a symmetric rational matrix by symmetric pivoted elimination.

    Each step takes the first nonzero diagonal entry as pivot and replaces the
    remaining block by its Schur complement, which preserves inertia.  A zero
    diagonal entry sitting in a nonzero row certifies indefiniteness.
    """
    if s.rows != s.cols:
        raise InputError("definiteness needs a square matrix")
    n = s.rows
    A = [[require_rational(s[i, j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            if A[i][j] != A[j][i]:
                raise InputError("definiteness needs a symmetric matrix")
    active = list(range(n))
    pos = neg = 0
    while active:
        p = next((i for i in active if A[i][i] != 0), None)
        if p is None:
            if any(A[i][j] for i in active for j in active):
                return Definiteness.INDEFINITE
            break
        d = A[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(p)
        row = A[p]
        for i in active:
            f = A[i][p]
            if f:
                f = f / d
                Ai = A[i]
                for j in active:
                    if row[j]:
                        Ai[j] -= f * row[j]
        # zero diagonal with a nonzero off-diagonal entry cannot occur in a semidefinite block
        for i in active:
            if A[i][i] == 0 and any(A[i][j] for j in active):
                return Definiteness.INDEFINITE
    if pos and neg:
        return Definiteness.INDEFINITE
    full = pos + neg == n
    if pos:
        return Definiteness.POS_DEF if full else Definiteness.POS_SEMI
    if neg:
        return Definiteness.NEG_DEF if full else Definiteness.NEG_SEMI
    return Definiteness.ZERO
