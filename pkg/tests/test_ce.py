import itertools
from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import (
    brute_coadjoint,
    brute_contraction,
    brute_differential,
    change_basis,
    convolve,
    evaluate,
    form_from_function,
    unit,
)
from liecohom.catalog import catalog, catalog_entry, catalog_names
from liecohom.ce import (
    BettiTable,
    CochainComplex,
    betti,
    betti_degree,
    ce_differential,
    coadjoint,
    contraction,
    embedded_representatives,
    full_complex,
    invariant_complex,
    relative_complex,
)
from liecohom.errors import DSquaredNonzero, InputError, NotASubalgebra
from liecohom.exterior import exterior_basis
from liecohom.liealg import compact_type, direct_sum, is_ideal, quotient, structure
from liecohom.linalg import Matrix, Subspace, rank
from liecohom.scalar import T

SMALL = [name for name in catalog_names() if catalog(name).dim <= 4]


def coords(form_dict, n, k):
    basis = exterior_basis(n, k)
    v = [Fraction(0)] * len(basis)
    for S, c in form_dict.items():
        v[basis.index[S]] = Fraction(c)
    return tuple(v)


def test_su2_sign_convention():
    D = ce_differential(catalog("su2"), 1)
    # columns e1*, e2*, e3*; rows e12, e13, e23
    assert D.column(0) == coords({(1, 2): -1}, 3, 2)
    assert D.column(1) == coords({(0, 2): 1}, 3, 2)
    assert D.column(2) == coords({(0, 1): -1}, 3, 2)


def test_abelian_and_top_degree():
    L = catalog("abelian3")
    for k in range(4):
        assert ce_differential(L, k).is_zero()
    D = ce_differential(catalog("su2"), 3)
    assert D.rows == 0 and D.cols == 1
    with pytest.raises(InputError):
        ce_differential(L, 4)
    with pytest.raises(InputError):
        ce_differential(L, -1)


@pytest.mark.parametrize("name", SMALL)
def test_differential_matches_multilinear_formula(name):
    L = catalog(name)
    for k in range(L.dim + 1):
        assert ce_differential(L, k) == brute_differential(L, k)


@settings(max_examples=15)
@given(st.sampled_from(["su2", "sl2r", "heis3"]), st.lists(st.integers(-2, 2), min_size=9, max_size=9))
def test_differential_oracle_rebased(name, entries):
    P = [entries[0:3], entries[3:6], entries[6:9]]
    if rank(Matrix.from_rows(P)) < 3:
        return
    L = change_basis(catalog(name), P)
    for k in range(4):
        assert ce_differential(L, k) == brute_differential(L, k)


@pytest.mark.parametrize("name", SMALL)
def test_operators_match_multilinear_formula(name):
    L = catalog(name)
    n = L.dim
    for i in range(n):
        X = unit(n, i)
        for k in range(n + 1):
            assert coadjoint(L, X, k) == brute_coadjoint(L, X, k)
            if k:
                assert contraction(L, X, k) == brute_contraction(L, X, k)
    assert contraction(L, unit(n, 0), 0).rows == 0


def test_coadjoint_spot_value():
    L = catalog("su2")
    A = coadjoint(L, unit(3, 0), 1)
    img = A @ coords({(1,): 1}, 3, 1)
    assert evaluate(img, 3, [unit(3, 2)]) == 1
    assert coadjoint(catalog("abelian3"), (1, 2, 3), 2).is_zero()


@pytest.mark.parametrize("name", catalog_names())
def test_d_squared_zero(name):
    L = catalog(name)
    for k in range(L.dim):
        assert (ce_differential(L, k + 1) @ ce_differential(L, k)).is_zero()


@pytest.mark.parametrize("name", catalog_names())
def test_cartan_identity(name):
    L = catalog(name)
    n = L.dim
    D = [ce_differential(L, k) for k in range(n + 1)]
    for i in range(n):
        X = unit(n, i)
        iota = [contraction(L, X, k) for k in range(n + 1)]
        for k in range(n + 1):
            lhs = coadjoint(L, X, k)
            rhs = iota[k + 1] @ D[k] if k < n else Matrix.zeros(lhs.rows, lhs.cols)
            if k >= 1:
                rhs = rhs + D[k - 1] @ iota[k]
            assert lhs == rhs, (name, i, k)


@pytest.mark.parametrize("name, expected", [
    ("su2", (1, 0, 0, 1)),
    ("so3", (1, 0, 0, 1)),
    ("sl2r", (1, 0, 0, 1)),
    ("heis3", (1, 2, 2, 1)),
    ("aff1", (1, 1, 0)),
    ("r_su2", (1, 1, 0, 1, 1)),
    ("abelian4", (1, 4, 6, 4, 1)),
])
def test_betti_examples(name, expected):
    assert betti(full_complex(catalog(name))).betti == expected


def check_representatives(C, table):
    for k, reps in enumerate(table.representatives):
        assert len(reps) == table.betti[k]
        if not reps:
            continue
        for v in reps:
            assert not any(C.diffs[k] @ v)
        # independent modulo the image of the previous differential
        image = [C.diffs[k - 1].column(j) for j in range(C.dims[k - 1])] if k else []
        span = Subspace.span(list(image) + list(reps), C.dims[k])
        assert span.dim == Subspace.span(image, C.dims[k]).dim + len(reps)


@pytest.mark.parametrize("name", catalog_names())
def test_representatives_and_euler(name):
    L = catalog(name)
    C = full_complex(L)
    table = betti(C)
    check_representatives(C, table)
    assert table.euler == sum((-1) ** k * d for k, d in enumerate(C.dims))
    assert table.euler == 0
    if structure(L).unimodular:
        assert table.betti == table.betti[::-1]
    for k in range(L.dim + 1):
        assert betti_degree(C, k) == (table.betti[k], table.representatives[k])


def test_relative_examples():
    L = catalog("su2")
    C = relative_complex(L, Subspace.zero(3))
    assert C.dims == (1, 3, 3, 1)
    assert betti(C).betti == (1, 0, 0, 1)
    e = catalog_entry("paper_ex2")
    C = relative_complex(e.algebra, e.h)
    assert C.dims == tuple(comb(4, k) for k in range(5))
    assert betti(C).betti == (1, 1, 0, 1, 1)
    with pytest.raises(NotASubalgebra):
        relative_complex(catalog("su2"), Subspace.span([[1, 0, 0], [0, 1, 0]], 3))


def test_relative_tsu2_against_brute_force():
    e = catalog_entry("tsu2")
    L, h = e.algebra, e.h
    C = relative_complex(L, h)
    X = h.vectors()[0]
    dims = []
    for k in range(L.dim + 1):
        blocks = [brute_coadjoint(L, X, k).to_rows()]
        if k:
            blocks.append(brute_contraction(L, X, k).to_rows())
        rows = [r for b in blocks for r in b]
        N = len(exterior_basis(L.dim, k))
        dims.append(N - sympy.Matrix(rows).rank())
    assert dims[0] == 1
    assert C.dims == tuple(dims[: len(C.dims)])
    assert all(d == 0 for d in dims[len(C.dims):])
    assert betti(C).betti == (1, 0, 0, 1)


@pytest.mark.parametrize("name", catalog_names())
def test_subcomplex_embeddings_commute(name):
    e = catalog_entry(name)
    L = e.algebra
    complexes = [invariant_complex(L)]
    if e.h is not None:
        complexes.append(relative_complex(L, e.h))
    for C in complexes:
        for k in range(C.top):
            full = ce_differential(L, k)
            assert C.embeds[k + 1] @ C.diffs[k] == full @ C.embeds[k]


def test_invariant_examples():
    C = invariant_complex(catalog("heis3"))
    assert C.dims == (1, 2, 1, 1)
    assert C.embeds[2].column(0) == coords({(0, 1): 1}, 3, 2)
    assert invariant_complex(catalog("su2")).dims == (1, 0, 0, 1)
    assert invariant_complex(catalog("abelian3")).dims == (1, 3, 3, 1)


def pullback_matrix(proj, m, n, k):
    """Matrix of proj^*: Λ^k (g/h)* -> Λ^k g*."""
    cols = []
    for s in range(len(exterior_basis(m, k))):
        alpha = [Fraction(int(i == s)) for i in range(len(exterior_basis(m, k)))]
        cols.append(form_from_function(lambda xs: evaluate(alpha, m, [proj @ x for x in xs]), n, k))
    return Matrix.from_columns(cols, len(exterior_basis(n, k)))


def ideal_cases():
    out = []
    for name in catalog_names():
        e = catalog_entry(name)
        if e.h is not None and is_ideal(e.algebra, e.h):
            out.append((name, e.algebra, e.h))
    H = catalog("heis3")
    out.append(("heis3/center", H, structure(H).center))
    A = catalog("aff1")
    out.append(("aff1/derived", A, structure(A).derived))
    out.append(("abelian2/line", catalog("abelian2"), Subspace.span([[1, T]], 2)))
    return out


@pytest.mark.parametrize("label, L, h", ideal_cases(), ids=[c[0] for c in ideal_cases()])
def test_relative_equals_quotient(label, L, h):
    Q, proj = quotient(L, h)
    rel = relative_complex(L, h)
    full_q = full_complex(Q)
    assert betti(rel).betti == betti(full_q).betti
    assert rel.dims == full_q.dims
    # proj^* is an isomorphism of complexes onto the relative subcomplex
    for k in range(Q.dim + 1):
        P = pullback_matrix(proj, Q.dim, L.dim, k)
        assert rank(P) == full_q.dims[k]
        image = Subspace.span([P.column(j) for j in range(P.cols)], P.rows)
        assert image == Subspace.span([rel.embeds[k].column(j) for j in range(rel.dims[k])], P.rows)
        if k < Q.dim:
            assert ce_differential(L, k) @ P == pullback_matrix(proj, Q.dim, L.dim, k + 1) @ full_q.diffs[k]


def test_heis3_cross_check_routes():
    H = catalog("heis3")
    assert betti(relative_complex(H, structure(H).center)).betti == (1, 2, 1)


COMPACT = ["abelian1", "abelian2", "abelian3", "abelian4", "su2", "so3", "r_su2", "r3_su2"]


@pytest.mark.parametrize("name", COMPACT)
def test_invariant_complex_computes_cohomology(name):
    L = catalog(name)
    assert compact_type(L).verdict
    assert betti(invariant_complex(L)).betti == betti(full_complex(L)).betti


def test_invariant_complex_negative_control():
    H = catalog("heis3")
    assert not compact_type(H).verdict
    inv, full = betti(invariant_complex(H)).betti, betti(full_complex(H)).betti
    assert (inv[2], full[2]) == (1, 2)


_BETTI = {}


def cached_betti(name):
    if name not in _BETTI:
        _BETTI[name] = betti(full_complex(catalog(name))).betti
    return _BETTI[name]


def kunneth_pairs(max_dim=9):
    names = catalog_names()
    return [(a, b) for a, b in itertools.combinations_with_replacement(names, 2)
            if catalog(a).dim + catalog(b).dim <= max_dim]


@pytest.mark.parametrize("a, b", kunneth_pairs())
def test_kunneth(a, b):
    L = direct_sum(catalog(a), catalog(b))
    table = betti(full_complex(L))
    assert table.betti == convolve(cached_betti(a), cached_betti(b))
    assert table.euler == 0
    if structure(L).unimodular:
        assert table.betti == table.betti[::-1]


def test_corrupted_complex_detected():
    D0 = Matrix.from_rows([[1]])
    D1 = Matrix.from_rows([[1]])
    C = CochainComplex((1, 1, 1), (D0, D1, Matrix.zeros(0, 1)))
    with pytest.raises(DSquaredNonzero):
        betti(C)


def test_dimension_cap():
    big = direct_sum(catalog("abelian12"), catalog("abelian1"))
    with pytest.raises(InputError):
        full_complex(big)


def test_embedded_representatives():
    e = catalog_entry("paper_ex2")
    C = relative_complex(e.algebra, e.h)
    table = betti(C)
    reps = embedded_representatives(C, table)
    for k, vs in enumerate(reps):
        for v in vs:
            assert len(v) == comb(6, k)
            assert not any(ce_differential(e.algebra, k) @ v)
    assert isinstance(table, BettiTable)
