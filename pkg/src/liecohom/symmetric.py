"""Invariant polynomials (S^i g*)^g and the E1 dimension table of the Cartan complex."""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb
from typing import Sequence

from .errors import InputError
from .liealg import LieAlgebra
from .linalg import Matrix, rank
from .scalar import ZERO

__all__ = ["MAX_SYM_DIM", "coadjoint_symmetric", "e1_table", "invariant_polynomials_dim", "monomials"]

MAX_SYM_DIM = 20000


def monomials(n: int, i: int) -> tuple:
    """Degree-i monomials in n variables as sorted index multisets, lexicographic."""
    size = comb(n + i - 1, i) if n else (1 if i == 0 else 0)
    if size > MAX_SYM_DIM:
        raise InputError(f"S^{i} of a {n}-dimensional space has {size} monomials (cap {MAX_SYM_DIM})")
    return tuple(combinations_with_replacement(range(n), i))


def coadjoint_symmetric(L: LieAlgebra, X: Sequence, i: int) -> Matrix:
    """ad*(X) on S^i g*, extended from g* as a derivation, in the monomial basis."""
    n = L.dim
    a = [[ZERO] * n for _ in range(n)]
    for p, xp in enumerate(X):
        if not xp:
            continue
        for m in range(n):
            for j, c in L.nonzero(p, m):
                a[m][j] -= xp * c
    basis = monomials(n, i)
    index = {mono: r for r, mono in enumerate(basis)}
    N = len(basis)
    flat = [ZERO] * (N * N)
    for col, mono in enumerate(basis):
        for pos, j in enumerate(mono):
            rest = mono[:pos] + mono[pos + 1:]
            for m in range(n):
                coef = a[m][j]
                if coef:
                    row = index[tuple(sorted(rest + (m,)))]
                    flat[row * N + col] += coef
    return Matrix(N, N, tuple(flat))


def invariant_polynomials_dim(L: LieAlgebra, i: int) -> int:
    """dim (S^i g*)^g as the joint kernel of the coadjoint actions of the basis."""
    if i < 0:
        raise InputError("polynomial degree must be non-negative")
    N = len(monomials(L.dim, i))
    blocks = [coadjoint_symmetric(L, L.basis_vector(p), i) for p in range(L.dim)]
    if not blocks or N == 0:
        return N
    return N - rank(Matrix.vstack(blocks, N))


def e1_table(L: LieAlgebra, basic_betti: Sequence[int], i_max: int) -> list:
    """Rows i = 0..i_max of E1^{i,j} = dim (S^i g*)^g * b_{j-i}, for j = 0..i_max + len(basic_betti) - 1."""
    basic = list(basic_betti)
    width = i_max + len(basic)
    out = []
    for i in range(i_max + 1):
        p = invariant_polynomials_dim(L, i)
        out.append([p * basic[j - i] if 0 <= j - i < len(basic) else 0 for j in range(width)])
    return out
