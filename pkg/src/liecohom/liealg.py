"""Lie algebras given by structure constants, and their structural predicates."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Optional, Sequence

from .errors import InputError, JacobiViolation, NotAnIdeal, UnorderedScalar
from .linalg import Definiteness, Matrix, Subspace, definiteness, rref
from .scalar import ZERO, as_scalar, format_scalar, is_tau_free

__all__ = [
    "CompactTypeCertificate",
    "LieAlgebra",
    "Obstruction",
    "Structure",
    "Violation",
    "compact_type",
    "direct_sum",
    "is_ideal",
    "is_subalgebra",
    "jacobi_check",
    "quotient",
    "structure",
]


class Violation(NamedTuple):
    """A Jacobi failure at 0-based basis indices i < j < k."""

    i: int
    j: int
    k: int
    residual: tuple

    def describe(self) -> str:
        res = ", ".join(format_scalar(x) for x in self.residual)
        return (
            f"Jacobi identity fails at triple ({self.i + 1}, {self.j + 1}, {self.k + 1}) "
            f"= (e{self.i + 1}, e{self.j + 1}, e{self.k + 1}); residual ({res})"
        )


@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants ``brackets[i][j][k]``: ``[e_i, e_j] = sum_k c_ijk e_k`` (0-based).

    Antisymmetry is enforced on construction; the Jacobi identity is checked
    unless ``check_jacobi=False`` (used to hold candidates for
    :func:`jacobi_check`).
    """

    name: str
    dim: int
    brackets: tuple
    check_jacobi: bool = field(default=True, compare=False, repr=False)
    _sparse: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        n = self.dim
        c = self.brackets
        if len(c) != n or any(len(r) != n or any(len(v) != n for v in r) for r in c):
            raise InputError(f"bracket table of {self.name!r} is not {n}x{n}x{n}")
        for i in range(n):
            for j in range(i, n):
                for k in range(n):
                    if c[i][j][k] != -c[j][i][k]:
                        raise InputError(
                            f"bracket table of {self.name!r} is not antisymmetric at "
                            f"(e{i + 1}, e{j + 1}) component {k + 1}"
                        )
        sparse = tuple(
            tuple(tuple((k, x) for k, x in enumerate(c[i][j]) if x) for j in range(n))
            for i in range(n)
        )
        object.__setattr__(self, "_sparse", sparse)
        if self.check_jacobi:
            bad = jacobi_check(self)
            if bad is not None:
                raise JacobiViolation(bad.describe(), triple=[bad.i + 1, bad.j + 1, bad.k + 1])

    @classmethod
    def from_brackets(
        cls,
        name: str,
        dim: int,
        brackets: Mapping[tuple, Mapping[int, object]],
        check_jacobi: bool = True,
    ) -> "LieAlgebra":
        """Build from ``{(i, j): {k: coeff}}`` with 0-based i < j; the rest follows by antisymmetry."""
        table = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < j < dim):
                raise InputError(f"bracket indices must satisfy 0 <= i < j < dim, got {(i, j)}")
            for k, x in coeffs.items():
                if not 0 <= k < dim:
                    raise InputError(f"bracket component {k} out of range")
                x = as_scalar(x)
                table[i][j][k] = x
                table[j][i][k] = -x
        frozen = tuple(tuple(tuple(v) for v in row) for row in table)
        return cls(name, dim, frozen, check_jacobi=check_jacobi)

    def nonzero(self, i: int, j: int) -> tuple:
        """Nonzero ``(k, c_ijk)`` pairs of [e_i, e_j]."""
        return self._sparse[i][j]

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        x = [as_scalar(a) for a in x]
        y = [as_scalar(a) for a in y]
        out = [ZERO] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in self._sparse[i][j]:
                    out[k] += ab * c
        return tuple(out)

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of ad x, columns indexed by the basis: column j is [x, e_j]."""
        n = self.dim
        cols = [self.bracket(x, _unit(n, j)) for j in range(n)]
        return Matrix.from_columns(cols, n)

    def basis_vector(self, i: int) -> tuple:
        return _unit(self.dim, i)

    def has_tau(self) -> bool:
        return any(not is_tau_free(x) for r in self.brackets for v in r for x in v)

    def bracket_dict(self) -> dict:
        """``{(i, j): {k: c}}`` for i < j, nonzero entries only."""
        out = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                nz = self._sparse[i][j]
                if nz:
                    out[(i, j)] = dict(nz)
        return out


def _unit(n, i):
    v = [ZERO] * n
    v[i] = as_scalar(1)
    return tuple(v)


def jacobi_check(L: LieAlgebra) -> Optional[Violation]:
    """``None`` if the Jacobi identity holds, otherwise the first violating triple."""
    n = L.dim
    for i in range(n):
        ei = _unit(n, i)
        for j in range(i + 1, n):
            ej = _unit(n, j)
            for k in range(j + 1, n):
                ek = _unit(n, k)
                r1 = L.bracket(L.bracket(ei, ej), ek)
                r2 = L.bracket(L.bracket(ej, ek), ei)
                r3 = L.bracket(L.bracket(ek, ei), ej)
                res = tuple(a + b + c for a, b, c in zip(r1, r2, r3))
                if any(res):
                    return Violation(i, j, k, res)
    return None


class Structure(NamedTuple):
    center: Subspace
    derived: Subspace
    killing: Matrix
    unimodular: bool


def structure(L: LieAlgebra) -> Structure:
    n = L.dim
    # center: x with sum_i x_i c[i][j][k] = 0 for every (j, k)
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([L.brackets[i][j][k] for i in range(n)])
    center = rref(Matrix.from_rows(rows, cols=n))[2] if n else Subspace.zero(0)
    derived = Subspace.span(
        [list(L.brackets[i][j]) for i in range(n) for j in range(i + 1, n)], n
    )
    kill = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            s = ZERO
            for l in range(n):
                for k, a in L.nonzero(i, l):
                    b = L.brackets[j][k][l]
                    if b:
                        s += a * b
            kill[i][j] = kill[j][i] = s
    unimodular = all(
        sum((L.brackets[i][k][k] for k in range(n)), ZERO) == 0 for i in range(n)
    )
    return Structure(center, derived, Matrix.from_rows(kill, cols=n), unimodular)


def _check_ambient(L, S):
    if S.ambient_dim != L.dim:
        raise InputError(f"subspace lives in dimension {S.ambient_dim}, algebra has {L.dim}")


def is_subalgebra(L: LieAlgebra, S: Subspace) -> bool:
    _check_ambient(L, S)
    vs = S.vectors()
    return all(S.contains(L.bracket(vs[a], vs[b])) for a in range(len(vs)) for b in range(a + 1, len(vs)))


def is_ideal(L: LieAlgebra, S: Subspace) -> bool:
    _check_ambient(L, S)
    return all(S.contains(L.bracket(_unit(L.dim, i), s)) for i in range(L.dim) for s in S.vectors())


class Obstruction(enum.Enum):
    CENTER_DERIVED_NOT_COMPLEMENTARY = "CenterDerivedNotComplementary"
    KILLING_NOT_NEGDEF_ON_DERIVED = "KillingNotNegDefOnDerived"


@dataclass(frozen=True)
class CompactTypeCertificate:
    verdict: bool
    center: Optional[Subspace] = None
    derived: Optional[Subspace] = None
    killing_on_derived: Optional[Matrix] = None
    obstruction: Optional[Obstruction] = None

    def to_json(self) -> dict:
        out = {"verdict": "yes" if self.verdict else "no"}
        if self.verdict:
            out["center_dim"] = self.center.dim
            out["derived_dim"] = self.derived.dim
        else:
            out["obstruction"] = self.obstruction.value
        return out


def compact_type(L: LieAlgebra) -> CompactTypeCertificate:
    """Decide whether L admits an ad-invariant inner product.

    Criterion: g = center ⊕ [g, g] and the Killing form is negative definite
    on [g, g].  Only meaningful over Q; t-dependent constants are rejected.
    """
    if L.has_tau():
        raise UnorderedScalar(f"compact-type test needs rational structure constants ({L.name})")
    st = structure(L)
    n = L.dim
    if st.center.dim + st.derived.dim != n or st.center.sum(st.derived).dim != n:
        return CompactTypeCertificate(False, obstruction=Obstruction.CENTER_DERIVED_NOT_COMPLEMENTARY)
    B = st.derived.basis
    restricted = B @ st.killing @ B.T
    if B.rows and definiteness(restricted) is not Definiteness.NEG_DEF:
        return CompactTypeCertificate(False, obstruction=Obstruction.KILLING_NOT_NEGDEF_ON_DERIVED)
    return CompactTypeCertificate(True, st.center, st.derived, restricted)


def quotient(L: LieAlgebra, h: Subspace, name: Optional[str] = None):
    """Quotient algebra g/h and the projection matrix (dim g/h x dim g).

    The quotient basis is the image of the standard basis vectors at the
    non-pivot coordinates of h's reduced basis.
    """
    _check_ambient(L, h)
    if not is_ideal(L, h):
        raise NotAnIdeal(f"subspace of dimension {h.dim} is not an ideal of {L.name}")
    n = L.dim
    pivots = set(h.pivots)
    free = [j for j in range(n) if j not in pivots]
    m = len(free)

    def project(v):
        r = h.reduce(v)
        return [r[j] for j in free]

    proj = Matrix.from_columns([project(_unit(n, j)) for j in range(n)], m) if n else Matrix.zeros(0, 0)
    brackets = {}
    for a in range(m):
        for b in range(a + 1, m):
            img = project(L.bracket(_unit(n, free[a]), _unit(n, free[b])))
            nz = {k: x for k, x in enumerate(img) if x}
            if nz:
                brackets[(a, b)] = nz
    Q = LieAlgebra.from_brackets(name or f"{L.name}/h", m, brackets)
    # the projection must intertwine the brackets
    for i in range(n):
        for j in range(i + 1, n):
            lhs = proj @ L.bracket(_unit(n, i), _unit(n, j))
            rhs = Q.bracket(proj.column(i), proj.column(j))
            if tuple(lhs) != tuple(rhs):
                raise ArithmeticError("quotient bracket does not intertwine the projection")
    return Q, proj


def direct_sum(L1: LieAlgebra, L2: LieAlgebra, name: Optional[str] = None) -> LieAlgebra:
    n1 = L1.dim
    brackets = dict(L1.bracket_dict())
    for (i, j), coeffs in L2.bracket_dict().items():
        brackets[(i + n1, j + n1)] = {k + n1: x for k, x in coeffs.items()}
    return LieAlgebra.from_brackets(name or f"{L1.name}+{L2.name}", n1 + L2.dim, brackets)
