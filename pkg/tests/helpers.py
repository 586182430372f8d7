"""Independent oracles used across the test modules.

Everything here works on multilinear forms evaluated on vectors, never on
the lexicographic matrices the package assembles, so agreement is a real
cross-check of the sign conventions.
"""

import itertools
from fractions import Fraction

from liecohom.catalog import foliation_names
from liecohom.exterior import exterior_basis
from liecohom.liealg import LieAlgebra
from liecohom.linalg import Matrix, solve


def perm_sign(p):
    s = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def det(rows):
    n = len(rows)
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for p in itertools.permutations(range(n)):
        term = Fraction(perm_sign(p))
        for i in range(n):
            term *= rows[i][p[i]]
            if not term:
                break
        total += term
    return total


def evaluate(alpha, n, vectors):
    """alpha (coords on the k-subset basis) evaluated on k vectors."""
    k = len(vectors)
    basis = exterior_basis(n, k)
    total = Fraction(0)
    for coef, S in zip(alpha, basis.subsets):
        if coef:
            total += coef * det([[v[s] for s in S] for v in vectors])
    return total


def unit(n, i):
    return tuple(Fraction(int(j == i)) for j in range(n))


def form_from_function(f, n, k):
    """Coordinates of the k-form whose values on basis tuples are f(e_t0, ...)."""
    return [f([unit(n, t) for t in T]) for T in exterior_basis(n, k).subsets]


def brute_differential(L, k):
    n = L.dim
    cols = []
    for S_index in range(len(exterior_basis(n, k))):
        alpha = [Fraction(int(i == S_index)) for i in range(len(exterior_basis(n, k)))]

        def d_alpha(xs):
            total = Fraction(0)
            for i in range(len(xs)):
                for j in range(i + 1, len(xs)):
                    rest = [x for a, x in enumerate(xs) if a not in (i, j)]
                    total += (-1) ** (i + j) * evaluate(alpha, n, [L.bracket(xs[i], xs[j])] + rest)
            return total

        cols.append(form_from_function(d_alpha, n, k + 1))
    return Matrix.from_columns(cols, len(exterior_basis(n, k + 1)))


def brute_coadjoint(L, X, k):
    n = L.dim
    N = len(exterior_basis(n, k))
    cols = []
    for s in range(N):
        alpha = [Fraction(int(i == s)) for i in range(N)]

        def value(xs):
            total = Fraction(0)
            for i in range(len(xs)):
                ys = list(xs)
                ys[i] = L.bracket(X, xs[i])
                total -= evaluate(alpha, n, ys)
            return total

        cols.append(form_from_function(value, n, k))
    return Matrix.from_columns(cols, N)


def brute_contraction(L, X, k):
    n = L.dim
    N = len(exterior_basis(n, k))
    cols = []
    for s in range(N):
        alpha = [Fraction(int(i == s)) for i in range(N)]
        cols.append(form_from_function(lambda xs: evaluate(alpha, n, [tuple(X)] + list(xs)), n, k - 1))
    return Matrix.from_columns(cols, len(exterior_basis(n, k - 1)))


def change_basis(L, P, name=None):
    """The same algebra in the basis f_i = sum_j P[j][i] e_j (P invertible)."""
    n = L.dim
    Pm = Matrix.from_rows(P)
    cols = [Pm.column(i) for i in range(n)]
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            coords = solve(Pm, L.bracket(cols[i], cols[j]))
            nz = {k: x for k, x in enumerate(coords) if x}
            if nz:
                table[(i, j)] = nz
    return LieAlgebra.from_brackets(name or L.name + "'", n, table)


def convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


# argument vectors covering every verb of the command line
CLI_MATRIX = [
    ["catalog"],
    ["catalog", "--catalog", "paper_ex1"],
    ["check", "--catalog", "heis3"],
    ["check", "--catalog", "sl2r", "--subalgebra", "0,1,0"],
    ["betti", "--catalog", "su2", "--representatives"],
    ["betti", "--catalog", "heis3", "--degree", "1", "--representatives"],
    ["invariant", "--catalog", "heis3"],
    ["relative", "--catalog", "tsu2", "--representatives"],
    ["quotient", "--catalog", "paper_ex2", "--representatives"],
    ["gh", "--catalog", "paper_ex2", "--assume-compact-quotient"],
    ["gh", "--catalog", "paper_ex1"],
    ["gh", "--catalog", "tsu2", "--assume-compact-quotient"],
    ["gh", "--catalog", "abelian2", "--subalgebra", "1,t", "--assume-dense"],
    ["e1", "--catalog", "su2", "--imax", "2"],
    ["e1", "--catalog", "r_su2", "--basic-betti", "1,0,0,1"],
] + [["torus", "--catalog", name, "--representatives"] for name in foliation_names()]
