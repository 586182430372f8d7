"""Chevalley-Eilenberg complexes (full, relative, ad*-invariant) and their Betti tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .errors import DSquaredNonzero, InputError, NotASubalgebra
from .exterior import contraction_matrix, exterior_basis, insert_sign
from .liealg import LieAlgebra, is_subalgebra
from .linalg import Matrix, Subspace, _kernel_basis, _rref_rows, rref
from .scalar import ZERO, as_scalar

__all__ = [
    "BettiTable",
    "CochainComplex",
    "betti",
    "betti_degree",
    "ce_differential",
    "coadjoint",
    "contraction",
    "full_complex",
    "invariant_complex",
    "relative_complex",
]

MAX_FULL_DIM = 12


def ce_differential(L: LieAlgebra, k: int) -> Matrix:
    """Matrix of d: Λ^k g* -> Λ^{k+1} g* in lexicographic bases.

    ``D[T][S]`` is the coefficient of e_T* in d(e_S*), i.e. the value
    ``(d e_S*)(e_t0, ..., e_tk) = sum_{i<j} (-1)^{i+j} e_S*([e_ti, e_tj], ...)``.
    """
    n = L.dim
    if not 0 <= k <= n:
        raise InputError(f"degree {k} outside 0..{n}")
    src, dst = exterior_basis(n, k), exterior_basis(n, k + 1)
    ncols = len(src)
    flat = [ZERO] * (len(dst) * ncols)
    for row, Tset in enumerate(dst.subsets):
        for a in range(k + 1):
            for b in range(a + 1, k + 1):
                nz = L.nonzero(Tset[a], Tset[b])
                if not nz:
                    continue
                rest = Tset[:a] + Tset[a + 1:b] + Tset[b + 1:]
                sgn = -1 if (a + b) % 2 else 1
                for m, c in nz:
                    if m in rest:
                        continue
                    col = src.index[tuple(sorted(rest + (m,)))]
                    flat[row * ncols + col] += sgn * insert_sign(m, rest) * c
    return Matrix(len(dst), ncols, tuple(flat))


def contraction(L: LieAlgebra, X: Sequence, k: int) -> Matrix:
    """Matrix of ι_X: Λ^k g* -> Λ^{k-1} g*."""
    if len(X) != L.dim:
        raise InputError("vector length does not match the algebra")
    return contraction_matrix(X, L.dim, k)


def coadjoint(L: LieAlgebra, X: Sequence, k: int) -> Matrix:
    """Matrix of ad*(X) on Λ^k g*, the derivation extending -(ad X)^T on g*."""
    n = L.dim
    if len(X) != n:
        raise InputError("vector length does not match the algebra")
    X = [as_scalar(x) for x in X]
    # ad*(X) e_j* = sum_m a[m][j] e_m*,  a[m][j] = -sum_i X_i c[i][m][j]
    a = [[ZERO] * n for _ in range(n)]
    for i, xi in enumerate(X):
        if not xi:
            continue
        for m in range(n):
            for j, c in L.nonzero(i, m):
                a[m][j] -= xi * c
    basis = exterior_basis(n, k)
    N = len(basis)
    flat = [ZERO] * (N * N)
    for col, S in enumerate(basis.subsets):
        for p, j in enumerate(S):
            rest = S[:p] + S[p + 1:]
            for m in range(n):
                coef = a[m][j]
                if not coef or m in rest:
                    continue
                # replace factor p by e_m*: move it to the front (sign (-1)^p) then sort
                row = basis.index[tuple(sorted(rest + (m,)))]
                flat[row * N + col] += (-1) ** p * insert_sign(m, rest) * coef
    return Matrix(N, N, tuple(flat))


@dataclass(frozen=True)
class CochainComplex:
    """Graded pieces of dimension ``dims[k]`` with ``diffs[k]: C^k -> C^{k+1}``.

    ``embeds[k]``, when present, has the basis of C^k as columns inside the
    full Λ^k g* coordinates.
    """

    dims: tuple
    diffs: tuple
    embeds: Optional[tuple] = None
    route: str = "full"
    label: str = ""

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def check_d_squared(self) -> None:
        for k in range(len(self.diffs) - 1):
            if self.diffs[k].rows and not (self.diffs[k + 1] @ self.diffs[k]).is_zero():
                raise DSquaredNonzero(f"d∘d != 0 in degree {k} of {self.label or self.route}", degree=k)


@dataclass(frozen=True)
class BettiTable:
    betti: tuple
    representatives: tuple
    route: str
    notes: dict = field(default_factory=dict, compare=False)

    @property
    def euler(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))


def full_complex(L: LieAlgebra, allow_large: bool = False) -> CochainComplex:
    n = L.dim
    if n > MAX_FULL_DIM and not allow_large:
        raise InputError(f"full complex limited to dim <= {MAX_FULL_DIM}; pass allow_large to override")
    diffs = tuple(ce_differential(L, k) for k in range(n + 1))
    dims = tuple(len(exterior_basis(n, k)) for k in range(n + 1))
    return CochainComplex(dims, diffs, None, "full", L.name)


def _subcomplex(
    L: LieAlgebra, constraints: Callable[[int], list], route: str, top: Optional[int] = None
) -> CochainComplex:
    n = L.dim
    top = n if top is None else top
    spaces = []
    for k in range(top + 1):
        N = len(exterior_basis(n, k))
        blocks = [m for m in constraints(k) if m.rows]
        if blocks:
            spaces.append(rref(Matrix.vstack(blocks, N))[2])
        else:
            spaces.append(Subspace.full(N))
    embeds = tuple(s.basis.T for s in spaces)
    diffs = []
    for k in range(top + 1):
        D = ce_differential(L, k)
        src = spaces[k]
        rows_next = spaces[k + 1].dim if k < top else 0
        cols = []
        for v in src.vectors():
            w = D @ v
            if k < top:
                coords = spaces[k + 1].coordinates(w)
                if coords is None:
                    raise ArithmeticError(f"{route} subspace not preserved by d in degree {k}")
                cols.append(coords)
            else:
                if any(w):
                    raise ArithmeticError(f"{route} complex has nonzero d out of its top degree {k}")
                cols.append(())
        diffs.append(Matrix.from_columns(cols, rows_next) if cols else Matrix.zeros(rows_next, 0))
    dims = tuple(s.dim for s in spaces)
    return CochainComplex(dims, tuple(diffs), embeds, route, L.name)


def relative_complex(L: LieAlgebra, h: Subspace) -> CochainComplex:
    """C(g, h): forms killed by ι_X and ad*(X) for every X in h.

    Such forms live in Λ(ann h), so the complex stops at degree dim g - dim h.
    """
    if h.ambient_dim != L.dim:
        raise InputError("subalgebra dimension mismatch")
    if not is_subalgebra(L, h):
        raise NotASubalgebra(f"h is not closed under the bracket of {L.name}")
    hv = h.vectors()

    def constraints(k):
        out = []
        for x in hv:
            if k >= 1:
                out.append(contraction(L, x, k))
            out.append(coadjoint(L, x, k))
        return out

    return _subcomplex(L, constraints, "relative", top=L.dim - h.dim)


def invariant_complex(L: LieAlgebra) -> CochainComplex:
    """(Λ g*)^{ad*}: forms killed by ad*(e_i) for every basis vector."""
    n = L.dim
    return _subcomplex(
        L, lambda k: [coadjoint(L, L.basis_vector(i), k) for i in range(n)], "invariant"
    )


def _image_and_kernel(D: Matrix):
    """(RREF basis rows of the column space of D, RREF basis of ker D)."""
    if D.rows == 0:
        return [], Subspace.full(D.cols).vectors()
    R, piv = _rref_rows(D.to_rows(), D.cols)
    kern = Subspace.span(_kernel_basis(R, piv, D.cols), D.cols).vectors() if D.cols else []
    if D.cols == 0:
        return [], []
    Rt, pt = _rref_rows(D.T.to_rows(), D.rows)
    return Rt[: len(pt)], kern


def _cohomology_in_degree(C: CochainComplex, k: int, kern=None, image=None):
    dim = C.dims[k]
    if kern is None:
        kern = _image_and_kernel(C.diffs[k])[1] if dim else []
    if image is None:
        image = _image_and_kernel(C.diffs[k - 1])[0] if k > 0 and dim and C.dims[k - 1] else []
    if not kern:
        return 0, ()
    im = Subspace.span(image, dim)
    # canonical complement of the image inside the kernel: kernel vectors vanishing on image pivots
    reduced = [im.reduce(v) for v in kern]
    reps = Subspace.span(reduced, dim)
    b = len(kern) - im.dim
    if reps.dim != b:
        raise DSquaredNonzero(f"image not contained in kernel in degree {k}", degree=k)
    return b, tuple(tuple(v) for v in reps.vectors())


def betti(C: CochainComplex, check: bool = True) -> BettiTable:
    """Exact Betti numbers of C with canonical representative cocycles (in C's coordinates)."""
    if check:
        C.check_d_squared()
    pieces = [(_image_and_kernel(D) if C.dims[k] else ([], [])) for k, D in enumerate(C.diffs)]
    bs, reps = [], []
    for k in range(len(C.dims)):
        image = pieces[k - 1][0] if k > 0 else []
        b, r = _cohomology_in_degree(C, k, kern=pieces[k][1], image=image)
        bs.append(b)
        reps.append(r)
    return BettiTable(tuple(bs), tuple(reps), C.route)


def betti_degree(C: CochainComplex, k: int) -> tuple:
    """``(b_k, representatives)`` for a single degree."""
    if not 0 <= k < len(C.dims):
        raise InputError(f"degree {k} outside 0..{len(C.dims) - 1}")
    return _cohomology_in_degree(C, k)


def embedded_representatives(C: CochainComplex, table: BettiTable) -> tuple:
    """Representatives expressed in full Λ^k g* coordinates."""
    if C.embeds is None:
        return table.representatives
    return tuple(tuple(C.embeds[k] @ v for v in reps) for k, reps in enumerate(table.representatives))
