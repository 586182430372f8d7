"""Named Lie algebras, some with a marked subalgebra h, plus named torus foliations."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .errors import InputError
from .liealg import LieAlgebra, direct_sum
from .linalg import Subspace
from .scalar import T

__all__ = ["CatalogEntry", "catalog", "catalog_entry", "catalog_names", "foliation_generators"]


@dataclass(frozen=True)
class CatalogEntry:
    algebra: LieAlgebra
    h: Optional[Subspace] = None
    description: str = ""
    # known facts about the group-level situation, used only for reporting
    advisory: dict = field(default_factory=dict)


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra.from_brackets(f"abelian{n}", n, {})


def heis3() -> LieAlgebra:
    return LieAlgebra.from_brackets("heis3", 3, {(0, 1): {2: 1}})


def aff1() -> LieAlgebra:
    return LieAlgebra.from_brackets("aff1", 2, {(0, 1): {1: 1}})


def su2(name: str = "su2") -> LieAlgebra:
    # [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2
    return LieAlgebra.from_brackets(name, 3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}})


def sl2r() -> LieAlgebra:
    # basis h, e, f: [h,e]=2e, [h,f]=-2f, [e,f]=h
    return LieAlgebra.from_brackets("sl2r", 3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})


def _r_su2(name: str, r: int) -> LieAlgebra:
    return direct_sum(abelian(r), su2(), name=name)


def _entry(name: str) -> CatalogEntry:
    if name == "heis3":
        return CatalogEntry(heis3(), description="Heisenberg algebra [x,y]=z")
    if name == "aff1":
        return CatalogEntry(aff1(), description="affine algebra of the line [x,y]=y")
    if name == "su2":
        return CatalogEntry(su2(), description="su(2) in the cyclic basis")
    if name == "so3":
        return CatalogEntry(su2("so3"), description="so(3) rotation generators [L1,L2]=L3 (cyclic)")
    if name == "sl2r":
        return CatalogEntry(sl2r(), description="sl(2,R) in the basis h, e, f")
    if name == "r_su2":
        return CatalogEntry(_r_su2("r_su2", 1), description="R ⊕ su(2)")
    if name == "r3_su2":
        return CatalogEntry(_r_su2("r3_su2", 3), description="R^3 ⊕ su(2)")
    if name == "sl2r_tangent":
        g = _r_su2("sl2r_tangent", 1)
        return CatalogEntry(
            g,
            Subspace.span([[0, 0, 0, 1]], 4),
            description="R ⊕ su(2) with h the circle generator e3 of su(2) (not an ideal)",
        )
    if name == "paper_ex1":
        g = _r_su2("paper_ex1", 1)
        return CatalogEntry(
            g,
            Subspace.span([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], 4),
            description="G = R x SU(2), H = SU(2): h ideal, g compact type, G/H-bar = R noncompact",
            advisory={
                "quotient_compact": False,
                "true_h_dr": [1, 0],
                "note": "G/H is the real line, so H^1_dR(G/H) = 0 while H^1(g/h) is one-dimensional; "
                "compactness of G/H-bar cannot be dropped",
            },
        )
    if name == "paper_ex2":
        g = _r_su2("paper_ex2", 3)
        return CatalogEntry(
            g,
            Subspace.span([[1, 0, 0, 0, 0, 0], [0, 1, T, 0, 0, 0]], 6),
            description="G = R x S^1 x S^1 x SU(2), H = R x (irrational line, slope t): "
            "h ideal, G/H-bar = SU(2) compact",
            advisory={"quotient_compact": True},
        )
    if name == "tsu2":
        g = _r_su2("tsu2", 1)
        return CatalogEntry(
            g,
            Subspace.span([[1, 0, 0, 1]], 4),
            description="R ⊕ su(2) with the non-ideal line spanned by (1,0,0,1)",
        )
    m = re.fullmatch(r"abelian\(?(\d+)\)?", name)
    if m:
        n = int(m.group(1))
        if n > 12:
            raise InputError(f"abelian({n}) exceeds the supported dimension 12")
        return CatalogEntry(abelian(n), description=f"abelian R^{n}")
    raise InputError(f"unknown catalog algebra {name!r}", known=catalog_names())


def catalog_names() -> list:
    return [
        "abelian1", "abelian2", "abelian3", "abelian4",
        "heis3", "aff1", "su2", "so3", "sl2r", "r_su2", "r3_su2",
        "sl2r_tangent", "paper_ex1", "paper_ex2", "tsu2",
    ]


def catalog_entry(name: str) -> CatalogEntry:
    return _entry(name)


def catalog(name: str) -> LieAlgebra:
    """The algebra registered under ``name`` (``abelianN`` for any N <= 12)."""
    return _entry(name).algebra


_FOLIATIONS = {
    "kronecker2": (2, [[1, T]]),
    "t3_line": (3, [[1, T, 0]]),
    "t3_plane": (3, [[1, T, 0], [0, 0, 1]]),
    "t1_point": (1, []),
    "t2_rational": (2, [[1, 0]]),
}


def foliation_generators(name: str):
    """``(n, generators)`` of a named linear foliation of a torus."""
    try:
        return _FOLIATIONS[name]
    except KeyError:
        raise InputError(f"unknown catalog foliation {name!r}", known=sorted(_FOLIATIONS)) from None


def foliation_names() -> list:
    return sorted(_FOLIATIONS)
