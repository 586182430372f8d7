"""Linear foliations of tori: basic cohomology and an explicit averaging operator.

Coordinates on T^n = R^n / Z^n.  A trigonometric form is a finite sum of
``cos(2π k·x) ω`` and ``sin(2π k·x) ω`` with constant-coefficient ω.  With
this normalization ``d cos(2π k·x) = -2π sin(2π k·x) k♭``, so every
coefficient is a polynomial in the symbol 2π with exact scalar coefficients;
the power of 2π is tracked separately and never multiplied out.

The leaf-closure group N is the subtorus whose Lie algebra is the rational
hull of h.  Averaging over N kills every Fourier mode that is a nontrivial
character of N, i.e. every mode k with k·u != 0 for some u in the hull.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterable, Mapping, Sequence

from .ce import BettiTable, CochainComplex, betti
from .errors import InputError, NotClosed
from .exterior import contraction_matrix, exterior_basis, insert_sign, wedge, wedge_matrix
from .linalg import Matrix, Subspace
from .scalar import ONE, ZERO, RatFunc, as_scalar

__all__ = [
    "TorusFoliation",
    "TrigForm",
    "average",
    "basic_cohomology",
    "build_foliation",
    "homotopy_certificate",
    "mode_acyclicity",
]


# foliation ---------------------------------------------------------------


@dataclass(frozen=True)
class TorusFoliation:
    n: int
    h: Subspace          # tangent directions, over Q(t)
    closure: Subspace    # rational hull of h: Lie algebra of the leaf closures
    K0: Subspace         # rational covectors killing h; integer points index basic modes
    ann: Subspace        # annihilator of h over Q(t)

    def is_basic_mode(self, k: Sequence[int]) -> bool:
        return all(_dot(k, u) == 0 for u in self.closure.vectors())


def _dot(k, u):
    s = ZERO
    for a, b in zip(k, u):
        if a and b:
            s += a * b
    return s


def _layers(v):
    """Split a vector over Q(t) into rational vectors v_d with v = sum_d t^d v_d (up to a scalar)."""
    den = ONE
    for x in v:
        if isinstance(x, RatFunc) and len(x.den) > 1:
            den = den * RatFunc(x.den, (1,))
    scaled = [as_scalar(x) * den for x in v]
    depth = max((len(x.num) if isinstance(x, RatFunc) else 1) for x in scaled)
    out = [[ZERO] * len(v) for _ in range(depth)]
    for j, x in enumerate(scaled):
        if isinstance(x, RatFunc):
            for d, c in enumerate(x.layers()):
                out[d][j] = c
        else:
            out[0][j] = x
    return [layer for layer in out if any(layer)]


def build_foliation(n: int, generators: Sequence[Sequence]) -> TorusFoliation:
    """Foliation of T^n tangent to the span of ``generators`` (rows over Q(t))."""
    gens = [[as_scalar(x) for x in g] for g in generators]
    for g in gens:
        if len(g) != n:
            raise InputError(f"generator of length {len(g)} on T^{n}")
    h = Subspace.span(gens, n)
    if h.dim != len(gens):
        raise InputError("foliation generators are linearly dependent")
    layers = [layer for g in gens for layer in _layers(g)]
    closure = Subspace.span(layers, n)
    K0 = closure.annihilator()
    ann = h.annihilator()
    if closure.dim + K0.dim != n:
        raise ArithmeticError("rational hull and its annihilator do not split the dimension")
    return TorusFoliation(n, h, closure, K0, ann)


# trigonometric forms -----------------------------------------------------


def _coeff(c) -> dict:
    """Normalize a coefficient to ``{power of 2π: scalar}``."""
    if isinstance(c, Mapping):
        return {int(p): as_scalar(x) for p, x in c.items() if as_scalar(x)}
    x = as_scalar(c)
    return {0: x} if x else {}


def _canon_mode(k, trig, sign):
    k = tuple(int(x) for x in k)
    lead = next((x for x in k if x), 0)
    if lead < 0:
        k = tuple(-x for x in k)
        if trig == "sin":
            sign = -sign
    if lead == 0 and trig == "sin":
        return None, trig, 0
    return k, trig, sign


@dataclass(frozen=True)
class TrigForm:
    """Degree-homogeneous trigonometric polynomial form on T^n.

    ``terms`` is a sorted tuple of ``(mode, trig, subset, coeff)`` where mode
    is lexicographically positive (or zero), trig is ``"cos"`` or ``"sin"``,
    subset is a sorted index tuple and coeff is a sorted tuple of
    ``(power of 2π, scalar)`` pairs.
    """

    n: int
    degree: int
    terms: tuple

    @classmethod
    def build(cls, n: int, degree: int, items: Iterable) -> "TrigForm":
        acc: dict = {}
        for mode, trig, subset, c in items:
            if trig not in ("cos", "sin"):
                raise InputError(f"trig must be 'cos' or 'sin', got {trig!r}")
            if len(mode) != n:
                raise InputError(f"mode {tuple(mode)} has wrong length for T^{n}")
            subset = tuple(subset)
            if len(subset) != degree or any(not 0 <= s < n for s in subset):
                raise InputError(f"subset {subset} is not a degree-{degree} index set on T^{n}")
            if len(set(subset)) != len(subset):
                continue
            perm_sign = 1
            srt = list(subset)
            # bubble sort to track the permutation sign
            for i in range(len(srt)):
                for j in range(len(srt) - 1 - i):
                    if srt[j] > srt[j + 1]:
                        srt[j], srt[j + 1] = srt[j + 1], srt[j]
                        perm_sign = -perm_sign
            k, trig, sign = _canon_mode(mode, trig, perm_sign)
            if k is None:
                continue
            key = (k, trig, tuple(srt))
            slot = acc.setdefault(key, {})
            for p, x in _coeff(c).items():
                slot[p] = slot.get(p, ZERO) + sign * x
        terms = []
        for key in sorted(acc):
            coeff = tuple(sorted((p, x) for p, x in acc[key].items() if x))
            if coeff:
                terms.append(key + (coeff,))
        return cls(n, degree, tuple(terms))

    @classmethod
    def zero(cls, n: int, degree: int) -> "TrigForm":
        return cls(n, degree, ())

    def items(self):
        for k, trig, s, coeff in self.terms:
            yield k, trig, s, dict(coeff)

    def is_zero(self) -> bool:
        return not self.terms

    def modes(self) -> set:
        return {t[0] for t in self.terms}

    def _check(self, other):
        if (self.n, self.degree) != (other.n, other.degree):
            raise InputError("forms of different dimension or degree")

    def __add__(self, other: "TrigForm") -> "TrigForm":
        self._check(other)
        return TrigForm.build(self.n, self.degree, list(self.items()) + list(other.items()))

    def __neg__(self) -> "TrigForm":
        return self.scale(-1)

    def __sub__(self, other: "TrigForm") -> "TrigForm":
        return self + (-other)

    def scale(self, c, twopi_power: int = 0) -> "TrigForm":
        c = as_scalar(c)
        return TrigForm.build(
            self.n,
            self.degree,
            ((k, t, s, {p + twopi_power: c * x for p, x in co.items()}) for k, t, s, co in self.items()),
        )

    def d(self) -> "TrigForm":
        """Exterior derivative."""
        out = []
        for k, trig, S, co in self.items():
            if not any(k):
                continue
            new_trig, sgn = ("sin", -1) if trig == "cos" else ("cos", 1)
            for j, kj in enumerate(k):
                if not kj or j in S:
                    continue
                T = tuple(sorted(S + (j,)))
                f = sgn * kj * insert_sign(j, S)
                out.append((k, new_trig, T, {p + 1: f * x for p, x in co.items()}))
        return TrigForm.build(self.n, self.degree + 1, out)

    def contract(self, u: Sequence) -> "TrigForm":
        """Contraction ι_u by a constant vector field."""
        u = [as_scalar(x) for x in u]
        if self.degree == 0:
            return TrigForm.zero(self.n, 0)
        out = []
        for k, trig, S, co in self.items():
            for p, s in enumerate(S):
                if u[s]:
                    f = (-1) ** p * u[s]
                    out.append((k, trig, S[:p] + S[p + 1:], {q: f * x for q, x in co.items()}))
        return TrigForm.build(self.n, self.degree - 1, out)

    def filter_modes(self, keep) -> "TrigForm":
        return TrigForm(self.n, self.degree, tuple(t for t in self.terms if keep(t[0])))


def average(beta: TrigForm, F: TorusFoliation) -> TrigForm:
    """Average over the leaf-closure torus: keep exactly the modes trivial on it."""
    if beta.n != F.n:
        raise InputError("form and foliation live on different tori")
    return beta.filter_modes(F.is_basic_mode)


def _homotopy_vector(F: TorusFoliation, k) -> tuple:
    for u in F.closure.vectors():
        ku = _dot(k, u)
        if ku:
            return tuple(u), ku
    raise ArithmeticError(f"mode {k} is trivial on the leaf closure")


def homotopy_certificate(beta: TrigForm, F: TorusFoliation):
    """Return ``(Q, residual)`` with ``average(beta) - beta = dQ + residual``.

    For a closed form the residual is identically zero.  Per dropped mode k
    we pick u in the hull with k·u != 0; since L_u is invertible on that mode
    and commutes with d, the mode's part equals d ι_u L_u^{-1} of itself.
    """
    if not beta.d().is_zero():
        raise NotClosed("homotopy certificate needs a closed form")
    Q = []
    if beta.degree > 0:
        for k, trig, S, co in beta.items():
            if F.is_basic_mode(k):
                continue
            u, ku = _homotopy_vector(F, k)
            # L_u^{-1}: cos -> sin / (2π k·u),  sin -> -cos / (2π k·u);  Q = -ι_u L_u^{-1}(part)
            new_trig, sgn = ("sin", -1) if trig == "cos" else ("cos", 1)
            for p, s in enumerate(S):
                if u[s]:
                    f = sgn * (-1) ** p * u[s] / ku
                    Q.append((k, new_trig, S[:p] + S[p + 1:], {q - 1: f * x for q, x in co.items()}))
    Q = TrigForm.build(beta.n, max(beta.degree - 1, 0), Q)
    residual = average(beta, F) - beta - Q.d() if beta.degree > 0 else average(beta, F) - beta
    return Q, residual


# basic cohomology --------------------------------------------------------


def _ann_exterior(F: TorusFoliation):
    """Per degree p, the subspace Λ^p(ann h) inside Λ^p(R^n)* coordinates."""
    n = F.n
    covecs = [{(j,): x for j, x in enumerate(v) if x} for v in F.ann.vectors()]
    m = len(covecs)
    spaces = []
    for p in range(m + 1):
        vecs = []
        basis = exterior_basis(n, p)
        for idx in exterior_basis(m, p).subsets:
            w = {(): ONE}
            for i in idx:
                w = wedge(w, covecs[i])
            v = [ZERO] * len(basis)
            for s, x in w.items():
                v[basis.index[s]] = x
            vecs.append(v)
        spaces.append(Subspace.span(vecs, len(basis)))
    return spaces


def _restrict(op: Matrix, src: Subspace, dst: Subspace) -> Matrix:
    cols = []
    for v in src.vectors():
        c = dst.coordinates(op @ v)
        if c is None:
            raise ArithmeticError("operator does not preserve Λ(ann h)")
        cols.append(c)
    return Matrix.from_columns(cols, dst.dim) if cols else Matrix.zeros(dst.dim, 0)


def mode_acyclicity(F: TorusFoliation, k: Sequence[int], spaces=None) -> dict:
    """Certify that the basic complex at a nonzero mode k is acyclic.

    On Λ(ann h) the mode-k differential is wedge with k♭ (up to the unit 2π
    and the cos/sin rotation).  With u = e_j for the first j with k_j != 0,
    ε(k♭)ι_u + ι_u ε(k♭) = (k·u)·id, so the complex is contractible.
    """
    n = F.n
    if not F.K0.contains(k):
        raise InputError(f"mode {tuple(k)} is not basic")
    spaces = spaces or _ann_exterior(F)
    m = len(spaces) - 1
    j = next(i for i, x in enumerate(k) if x)
    u = [ZERO] * n
    u[j] = ONE
    ku = Fraction(k[j])
    eps = [_restrict(wedge_matrix(k, n, p), spaces[p], spaces[p + 1]) if p < m else None for p in range(m + 1)]
    iota = [_restrict(contraction_matrix(u, n, p), spaces[p], spaces[p - 1]) if p > 0 else None for p in range(m + 1)]
    identity_ok = True
    for p in range(m + 1):
        dim = spaces[p].dim
        acc = Matrix.zeros(dim, dim)
        if p > 0:
            acc = acc + eps[p - 1] @ iota[p]
        if p < m:
            acc = acc + iota[p + 1] @ eps[p]
        if acc != Matrix.identity(dim).scale(ku):
            identity_ok = False
    diffs = tuple(eps[p] if p < m else Matrix.zeros(0, spaces[m].dim) for p in range(m + 1))
    table = betti(CochainComplex(tuple(s.dim for s in spaces), diffs, route="torus-mode"))
    return {
        "mode": list(k),
        "u": [int(x) for x in u],
        "k_dot_u": int(ku),
        "homotopy_identity": identity_ok,
        "betti": list(table.betti),
        "acyclic": identity_ok and not any(table.betti),
    }


def basic_modes(F: TorusFoliation, box: int) -> list:
    """Nonzero lexicographically positive integer modes in K0 with sup-norm <= box."""
    out = []
    for k in product(range(-box, box + 1), repeat=F.n):
        if not any(k) or next(x for x in k if x) < 0:
            continue
        if F.K0.contains(k):
            out.append(k)
    return out


def basic_cohomology(F: TorusFoliation, mode_box: int = 3) -> BettiTable:
    """Basic cohomology of the foliation, computed mode by mode.

    Mode 0 contributes Λ(ann h) with zero differential; every other basic
    mode inside the box is certified acyclic by :func:`mode_acyclicity`.
    """
    spaces = _ann_exterior(F)
    m = len(spaces) - 1
    certs = [mode_acyclicity(F, k, spaces) for k in basic_modes(F, mode_box)]
    if not all(c["acyclic"] for c in certs):
        bad = next(c for c in certs if not c["acyclic"])
        raise ArithmeticError(f"basic mode {bad['mode']} failed the acyclicity certificate")
    zero = CochainComplex(
        tuple(s.dim for s in spaces),
        tuple(Matrix.zeros(spaces[p + 1].dim if p < m else 0, spaces[p].dim) for p in range(m + 1)),
        tuple(s.basis.T for s in spaces),
        route="torus-basic",
    )
    table = betti(zero)
    if table.betti != tuple(comb(m, p) for p in range(m + 1)):
        raise ArithmeticError("mode-0 basic complex has unexpected dimensions")
    reps = tuple(tuple(tuple(spaces[p].basis.T @ v) for v in r) for p, r in enumerate(table.representatives))
    return BettiTable(
        table.betti,
        reps,
        "torus-basic",
        notes={"mode_box": mode_box, "modes_checked": len(certs), "ann_dim": m, "closure_dim": F.closure.dim},
    )
