import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rational_matrices, small_ints
from liecohom.errors import InputError, UnorderedScalar
from liecohom.linalg import Definiteness, Matrix, Subspace, definiteness, rank, rref, solve
from liecohom.scalar import T


def M(rows):
    return Matrix.from_rows(rows)


def sympy_rref(rows):
    R, piv = sympy.Matrix(rows).rref()
    return [[Fraction(int(x.p), int(x.q)) for x in R.row(i)] for i in range(R.rows)], list(piv)


def test_identity_and_zero():
    R, r, ker = rref(Matrix.identity(3))
    assert r == 3 and ker.dim == 0
    assert R == Matrix.identity(3)
    R, r, ker = rref(Matrix.zeros(2, 4))
    assert r == 0 and ker == Subspace.full(4)


def test_rank_one_kernel():
    m = M([[1, 2], [2, 4]])
    R, r, ker = rref(m)
    assert r == 1
    assert R.to_rows() == [[1, 2], [0, 0]]
    assert ker.dim == 1
    assert ker.contains([-2, 1])
    assert m @ (-2, 1) == (0, 0)


def test_solve_examples():
    b = (Fraction(3), Fraction(-1, 2), Fraction(7))
    assert solve(Matrix.identity(3), b) == b
    assert solve(Matrix.zeros(2, 2), (1, 0)) is None
    x = solve(M([[1, 2], [2, 4]]), (1, 2))
    assert x[0] + 2 * x[1] == 1
    assert solve(M([[1, 2], [2, 4]]), (1, 3)) is None
    with pytest.raises(InputError):
        solve(Matrix.identity(2), (1, 2, 3))


def test_tau_elimination():
    m = M([[1, T], [T, T * T]])
    assert rank(m) == 1
    _, _, ker = rref(m)
    assert ker.contains([-T, 1])
    assert rank(M([[1, T], [1, 1]])) == 2
    assert solve(M([[1, T]]), (T,)) == (T, 0)


@given(rational_matrices(max_rows=7, max_cols=7))
def test_rref_matches_sympy(rows):
    R, r, _ = rref(M(rows))
    expected, piv = sympy_rref(rows)
    assert R.to_rows() == expected
    assert r == len(piv)


@given(rational_matrices())
def test_rref_idempotent(rows):
    R, r, ker = rref(M(rows))
    R2, r2, ker2 = rref(R)
    assert (R2, r2, ker2) == (R, r, ker)


@given(rational_matrices())
def test_kernel_is_kernel(rows):
    m = M(rows)
    _, _, ker = rref(m)
    for v in ker.vectors():
        assert not any(m @ v)


def naive_rank(rows):
    A = [[Fraction(x) for x in r] for r in rows]
    r = 0
    for c in range(len(A[0])):
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        for i in range(r + 1, len(A)):
            f = A[i][c] / A[r][c]
            A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
    return r


@settings(max_examples=40)
@given(st.integers(1, 40), st.integers(1, 40), st.integers(0, 2**32), st.floats(0, 1))
def test_rank_nullity_large(m, n, seed, density):
    rnd = random.Random(seed)
    rows = [[rnd.randint(-3, 3) if rnd.random() < density else 0 for _ in range(n)] for _ in range(m)]
    _, r, ker = rref(M(rows))
    assert r + ker.dim == n
    assert r == naive_rank(rows)


@given(rational_matrices(max_rows=5, max_cols=5), st.lists(small_ints, min_size=5, max_size=5))
def test_solve_consistency(rows, rhs):
    m = M(rows)
    b = [Fraction(x) for x in rhs[: m.rows]]
    x = solve(m, b)
    if x is not None:
        assert list(m @ x) == b
    else:
        aug = M([r + [bi] for r, bi in zip(rows, b)])
        assert rank(aug) == rank(m) + 1


@given(rational_matrices(max_rows=4, max_cols=5), rational_matrices(max_rows=4, max_cols=5))
def test_subspace_canonical(a, b):
    n = len(a[0])
    b = [r[:n] + [Fraction(0)] * (n - len(r)) for r in b]
    A, B = Subspace.span(a, n), Subspace.span(b, n)
    # canonical: spanning sets with the same span give identical objects
    assert Subspace.span(A.vectors() + a, n) == A
    S = A.sum(B)
    assert S.contains_subspace(A) and S.contains_subspace(B)
    I = A.intersection(B)
    assert A.contains_subspace(I) and B.contains_subspace(I)
    assert S.dim + I.dim == A.dim + B.dim
    ann = A.annihilator()
    assert ann.dim + A.dim == n
    for w in ann.vectors():
        for v in A.vectors():
            assert sum(x * y for x, y in zip(v, w)) == 0


def test_subspace_coordinates():
    S = Subspace.span([[1, 1, 0], [0, 1, 1]], 3)
    v = [2, 5, 3]
    c = S.coordinates(v)
    assert c is not None
    assert [sum(ci * b[j] for ci, b in zip(c, S.vectors())) for j in range(3)] == v
    assert S.coordinates([1, 0, 0]) is None


def test_definiteness_examples():
    assert definiteness(M([[-1, 0], [0, -1]])) is Definiteness.NEG_DEF
    assert definiteness(M([[1, 0], [0, -1]])) is Definiteness.INDEFINITE
    assert definiteness(M([[0, 1], [1, 0]])) is Definiteness.INDEFINITE
    assert definiteness(M([[1, 1], [1, 1]])) is Definiteness.POS_SEMI
    assert definiteness(Matrix.zeros(3, 3)) is Definiteness.ZERO
    with pytest.raises(UnorderedScalar):
        definiteness(M([[T, 0], [0, 1]]))
    with pytest.raises(InputError):
        definiteness(M([[1, 2], [0, 1]]))


def exhaustive_class(rows):
    n = len(rows)
    vals = set()
    for v in itertools.product(range(-2, 3), repeat=n):
        if any(v):
            q = sum(rows[i][j] * v[i] * v[j] for i in range(n) for j in range(n))
            vals.add((q > 0) - (q < 0))
    full = sympy.Matrix(rows).rank() == n
    if not any(vals):
        return Definiteness.ZERO
    if 1 in vals and -1 in vals:
        return Definiteness.INDEFINITE
    if 1 in vals:
        return Definiteness.POS_DEF if full else Definiteness.POS_SEMI
    return Definiteness.NEG_DEF if full else Definiteness.NEG_SEMI


@st.composite
def symmetric(draw):
    n = draw(st.integers(1, 4))
    # Gram-like shapes hit the semidefinite cases often
    if draw(st.booleans()):
        k = draw(st.integers(0, n))
        B = [[draw(st.integers(-1, 1)) for _ in range(n)] for _ in range(k)]
        sign = draw(st.sampled_from([1, -1]))
        return [[sign * sum(B[a][i] * B[a][j] for a in range(k)) for j in range(n)] for i in range(n)]
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = draw(st.integers(-2, 2))
    return rows


@given(symmetric())
def test_definiteness_exhaustive(rows):
    got = definiteness(M(rows))
    assert got is exhaustive_class(rows)
    # Descartes' rule is exact on the real-rooted characteristic polynomial
    coeffs = [int(c) for c in sympy.Matrix(rows).charpoly().all_coeffs()]
    pos = sign_changes(coeffs)
    neg = sign_changes([c * (-1) ** i for i, c in enumerate(reversed(coeffs))])
    n = len(rows)
    expected = {
        (True, False, True): Definiteness.POS_DEF,
        (False, True, True): Definiteness.NEG_DEF,
        (True, False, False): Definiteness.POS_SEMI,
        (False, True, False): Definiteness.NEG_SEMI,
    }.get((pos > 0, neg > 0, pos + neg == n))
    if pos and neg:
        expected = Definiteness.INDEFINITE
    if not pos and not neg:
        expected = Definiteness.ZERO
    assert got is expected


def sign_changes(cs):
    cs = [c for c in cs if c]
    return sum(1 for a, b in zip(cs, cs[1:]) if (a > 0) != (b > 0))
