"""Hypothesis audit and theorem dispatch for the de Rham cohomology of G/H.

Three routes are available, tried in this order:

* ``ThmA.9``  - H dense in G (asserted).  Density forces h to be an ideal;
  that consequence is re-verified and the answer is H(g/h).
* ``Thm1.5``  - h an ideal (verified) and G/H-bar compact (asserted): H(g/h).
* ``Thm1.4``  - g of compact type (verified) and G/H-bar compact (asserted):
  the relative cohomology H(g, h).

Topological facts cannot be read off structure constants, so they enter
only as user assertions and are recorded as such in the audit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .ce import BettiTable, betti, full_complex, invariant_complex, relative_complex
from .errors import NotASubalgebra, UnorderedScalar
from .liealg import LieAlgebra, compact_type, is_ideal, is_subalgebra, quotient
from .linalg import Subspace

__all__ = [
    "Assumptions",
    "GHReport",
    "RouteCheck",
    "cross_validate",
    "gh_cohomology",
]

VERIFIED = "verified-algebraically"
ASSERTED = "user-asserted"
FAILED = "failed"
MISSING = "missing"

H_SUBALGEBRA = "h is a subalgebra of g"
H_CONNECTED = "H connected"
H_DENSE = "H dense in G"
H_IDEAL = "h is an ideal of g"
QUOTIENT_COMPACT = "G/H̄ compact"
G_COMPACT_TYPE = "g of compact type"


@dataclass(frozen=True)
class Assumptions:
    compact_quotient: bool = False
    dense: bool = False
    h_connected: bool = True

    def __post_init__(self):
        # a point is compact
        if self.dense and not self.compact_quotient:
            object.__setattr__(self, "compact_quotient", True)


@dataclass(frozen=True)
class RouteCheck:
    name: str
    left_route: str
    right_route: str
    left: tuple
    right: tuple
    required: bool

    @property
    def equal(self) -> bool:
        return self.left == self.right

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "left_route": self.left_route,
            "right_route": self.right_route,
            "left": list(self.left),
            "right": list(self.right),
            "equal": self.equal,
            "kind": "required" if self.required else "informational",
        }


@dataclass
class GHReport:
    verdict: str
    theorem: str
    audit: list
    betti: Optional[BettiTable] = None
    cross_checks: list = field(default_factory=list)
    failed_hypothesis: Optional[str] = None
    notes: list = field(default_factory=list)
    advisory: Optional[dict] = None

    @property
    def computed(self) -> bool:
        return self.verdict == "Computed"

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "theorem": self.theorem,
            "audit": [{"hypothesis": h, "status": s} for h, s in self.audit],
        }
        if self.betti is not None:
            out["betti"] = list(self.betti.betti)
            out["route"] = self.betti.route
        if self.failed_hypothesis is not None:
            out["failed_hypothesis"] = self.failed_hypothesis
        out["cross_checks"] = [c.to_json() for c in self.cross_checks]
        if self.notes:
            out["notes"] = list(self.notes)
        if self.advisory is not None:
            out["advisory"] = self.advisory
        return out


def _quotient_betti(L, h) -> BettiTable:
    Q, _ = quotient(L, h)
    t = betti(full_complex(Q))
    return BettiTable(t.betti, t.representatives, "quotient")


def _relative_betti(L, h) -> BettiTable:
    return betti(relative_complex(L, h))


def _refuse(audit, failed, notes, advisory=None) -> GHReport:
    return GHReport("Refused", "None", audit, None, [], failed, notes, advisory)


def gh_cohomology(
    L: LieAlgebra,
    h: Subspace,
    a: Assumptions = Assumptions(),
    advisory: Optional[dict] = None,
) -> GHReport:
    """H_dR(G/H) via the strongest applicable theorem, or a principled refusal.

    ``advisory`` carries known group-level facts for catalog entries (for
    example the true de Rham cohomology of a noncompact quotient); it only
    decorates the report and never changes the verdict.
    """
    if not is_subalgebra(L, h):
        raise NotASubalgebra(f"h is not closed under the bracket of {L.name}")
    audit = [(H_SUBALGEBRA, VERIFIED)]
    if not a.h_connected:
        audit.append((H_CONNECTED, FAILED))
        return _refuse(audit, H_CONNECTED, ["the theorem routes are stated for connected H"])
    audit.append((H_CONNECTED, ASSERTED))
    ideal = is_ideal(L, h)

    if a.dense:
        audit.append((H_DENSE, ASSERTED))
        if not ideal:
            audit.append((H_IDEAL, FAILED))
            return _refuse(
                audit,
                H_IDEAL,
                ["contradiction: a dense connected subgroup has an ideal as Lie algebra, "
                 "but h is not an ideal; the density assertion is inconsistent with the data"],
            )
        audit.append((H_IDEAL, VERIFIED))
        result = _quotient_betti(L, h)
        report = GHReport("Computed", "ThmA.9", audit, result)
        report.cross_checks.append(_relative_vs_quotient(L, h, result))
        return report

    audit.append((H_IDEAL, VERIFIED if ideal else FAILED))
    if a.compact_quotient:
        audit.append((QUOTIENT_COMPACT, ASSERTED))
    else:
        audit.append((QUOTIENT_COMPACT, MISSING))

    if ideal and a.compact_quotient:
        result = _quotient_betti(L, h)
        report = GHReport("Computed", "Thm1.5", audit, result)
        report.cross_checks.append(_relative_vs_quotient(L, h, result))
        if not L.has_tau():
            ct = compact_type(L)
            audit.append((G_COMPACT_TYPE, VERIFIED if ct.verdict else FAILED))
            if ct.verdict:
                # Thm1.4 applies as well; its answer is the relative cohomology
                rel = _relative_betti(L, h)
                report.cross_checks.append(
                    RouteCheck("Thm1.5-vs-Thm1.4", "quotient", "relative", result.betti, rel.betti, True)
                )
        return report

    ct = None
    if a.compact_quotient or not L.has_tau():
        ct = compact_type(L)  # UnorderedScalar propagates for t-dependent constants
        audit.append((G_COMPACT_TYPE, VERIFIED if ct.verdict else FAILED))

    if ct is not None and ct.verdict and a.compact_quotient:
        result = _relative_betti(L, h)
        report = GHReport("Computed", "Thm1.4", audit, result)
        return report

    notes = []
    if not a.compact_quotient:
        failed = QUOTIENT_COMPACT
        notes.append("every available route needs G/H̄ compact, which was not asserted")
    else:
        failed = G_COMPACT_TYPE
        notes.append("h is not an ideal and g is not of compact type; "
                     "no available theorem describes H_dR(G/H) in this case, which is left open")
    adv = None
    if advisory:
        adv = dict(advisory)
        if ideal:
            adv["betti_g_mod_h"] = list(_quotient_betti(L, h).betti)
            if "true_h_dr" in adv:
                adv["agrees"] = adv["betti_g_mod_h"] == list(adv["true_h_dr"])
    return _refuse(audit, failed, notes, adv)


def _relative_vs_quotient(L, h, quotient_table=None) -> RouteCheck:
    q = quotient_table or _quotient_betti(L, h)
    r = _relative_betti(L, h)
    return RouteCheck("relative-vs-quotient", "relative", "quotient", r.betti, q.betti, True)


def cross_validate(L: LieAlgebra, h: Subspace) -> list:
    """Compare independent routes wherever they are defined."""
    if not is_subalgebra(L, h):
        raise NotASubalgebra(f"h is not closed under the bracket of {L.name}")
    out = []
    if is_ideal(L, h):
        out.append(_relative_vs_quotient(L, h))
    try:
        required = compact_type(L).verdict
    except UnorderedScalar:
        required = False
    full = betti(full_complex(L)).betti
    inv = betti(invariant_complex(L)).betti
    out.append(RouteCheck("full-vs-invariant", "full", "invariant", full, inv, required))
    return out
