"""Lexicographic k-subset bases of exterior powers and the basic operators on them.

A k-form on an n-dimensional space is a coordinate vector indexed by the
strictly increasing k-subsets of ``range(n)`` in lexicographic order, with
``e_S* (e_{s_1}, ..., e_{s_k}) = 1`` (determinant convention).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .linalg import Matrix
from .scalar import ZERO, as_scalar

__all__ = [
    "ExteriorBasis",
    "contraction_matrix",
    "exterior_basis",
    "insert_sign",
    "merge_sign",
    "wedge",
    "wedge_matrix",
]


@dataclass(frozen=True)
class ExteriorBasis:
    n: int
    k: int
    subsets: tuple
    index: dict = field(compare=False, repr=False)

    def __len__(self):
        return len(self.subsets)


@lru_cache(maxsize=None)
def exterior_basis(n: int, k: int) -> ExteriorBasis:
    if k < 0 or k > n:
        return ExteriorBasis(n, k, (), {})
    subs = tuple(combinations(range(n), k))
    return ExteriorBasis(n, k, subs, {s: i for i, s in enumerate(subs)})


def insert_sign(j: int, subset: Sequence[int]) -> int:
    """Sign of moving ``j`` from the front of ``(j, *subset)`` into sorted position."""
    return -1 if sum(1 for s in subset if s < j) % 2 else 1


def merge_sign(a: Sequence[int], b: Sequence[int]) -> int:
    """Sign of the shuffle sorting the concatenation of disjoint sorted a and b."""
    inv = 0
    for x in a:
        for y in b:
            if y < x:
                inv += 1
    return -1 if inv % 2 else 1


def wedge(alpha: dict, beta: dict) -> dict:
    """Wedge product of forms given as ``{subset: coeff}`` dictionaries."""
    out: dict = {}
    for s, a in alpha.items():
        for t, b in beta.items():
            if set(s) & set(t):
                continue
            u = tuple(sorted(s + t))
            out[u] = out.get(u, ZERO) + merge_sign(s, t) * a * b
    return {k: v for k, v in out.items() if v}


def wedge_matrix(v: Sequence, n: int, k: int) -> Matrix:
    """Matrix of ``omega -> v ∧ omega`` from Λ^k to Λ^{k+1} for a covector v."""
    v = [as_scalar(x) for x in v]
    src, dst = exterior_basis(n, k), exterior_basis(n, k + 1)
    flat = [ZERO] * (len(dst) * len(src))
    for col, S in enumerate(src.subsets):
        for j, vj in enumerate(v):
            if not vj or j in S:
                continue
            row = dst.index[tuple(sorted(S + (j,)))]
            flat[row * len(src) + col] += insert_sign(j, S) * vj
    return Matrix(len(dst), len(src), tuple(flat))


def contraction_matrix(x: Sequence, n: int, k: int) -> Matrix:
    """Matrix of the contraction ι_x from Λ^k to Λ^{k-1}; ``(ι_x α)(Y..) = α(x, Y..)``."""
    x = [as_scalar(c) for c in x]
    src = exterior_basis(n, k)
    dst = exterior_basis(n, k - 1)
    rows = len(dst) if k >= 1 else 0
    flat = [ZERO] * (rows * len(src))
    if k >= 1:
        for col, S in enumerate(src.subsets):
            for p, s in enumerate(S):
                if x[s]:
                    row = dst.index[S[:p] + S[p + 1:]]
                    flat[row * len(src) + col] += (-1) ** p * x[s]
    return Matrix(rows, len(src), tuple(flat))


def dim_exterior(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
