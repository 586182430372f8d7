"""Command-line front end.

Exit codes: 0 computed, 1 input error, 2 principled refusal (no theorem applies).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from . import __version__
from .catalog import catalog_entry, catalog_names, foliation_generators, foliation_names
from .ce import (
    BettiTable,
    betti,
    betti_degree,
    embedded_representatives,
    full_complex,
    invariant_complex,
    relative_complex,
)
from .errors import InputError, LieCohomError, UnorderedScalar
from .gh import Assumptions, gh_cohomology
from .io import (
    algebra_from_json,
    algebra_to_json,
    betti_to_json,
    dumps,
    foliation_from_json,
    form_from_json,
    form_to_json,
    load_json,
    parse_subalgebra_inline,
    subalgebra_from_json,
)
from .liealg import compact_type, is_ideal, is_subalgebra, jacobi_check, quotient, structure
from .symmetric import e1_table, invariant_polynomials_dim
from .torus import average, basic_cohomology, build_foliation, homotopy_certificate

EXIT_OK, EXIT_INPUT, EXIT_REFUSED = 0, 1, 2

VERBS = ("check", "betti", "relative", "invariant", "quotient", "gh", "e1", "torus", "catalog")

# flags each verb accepts beyond --catalog/--file/--format
ALLOWED = {
    "check": {"subalgebra"},
    "betti": {"degree", "representatives"},
    "relative": {"subalgebra", "degree", "representatives"},
    "invariant": {"degree", "representatives"},
    "quotient": {"subalgebra", "degree", "representatives"},
    "gh": {"subalgebra", "assume_compact_quotient", "assume_dense"},
    "e1": {"imax", "basic_betti"},
    "torus": {"mode_box", "form", "representatives"},
    "catalog": set(),
}

FLAG_DEFAULTS = {
    "subalgebra": None,
    "degree": None,
    "representatives": False,
    "assume_compact_quotient": False,
    "assume_dense": False,
    "imax": None,
    "basic_betti": None,
    "mode_box": None,
    "form": None,
}


@dataclass
class Command:
    verb: str
    catalog: Optional[str] = None
    file: Optional[str] = None
    fmt: str = "table"
    flags: dict = field(default_factory=dict)

    def flag(self, name):
        return self.flags.get(name, FLAG_DEFAULTS[name])

    def echo(self) -> dict:
        return {
            "verb": self.verb,
            "source": {"catalog": self.catalog} if self.catalog else ({"file": self.file} if self.file else None),
            "flags": {k: v for k, v in sorted(self.flags.items()) if v not in (None, False)},
            "format": self.fmt,
        }


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"command line: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="liecohom", description="Exact Lie algebra cohomology and de Rham cohomology of G/H.")
    p.add_argument("--version", action="version", version=f"liecohom {__version__}")
    p.add_argument("verb", choices=VERBS)
    src = p.add_argument_group("input")
    src.add_argument("--catalog", metavar="NAME")
    src.add_argument("--file", metavar="PATH")
    p.add_argument("--subalgebra", metavar="PATH|ROWS", help="JSON file or inline rows 'a,b,..;c,d,..'")
    p.add_argument("--assume-compact-quotient", action="store_true", dest="assume_compact_quotient")
    p.add_argument("--assume-dense", action="store_true", dest="assume_dense")
    p.add_argument("--degree", type=int, metavar="K")
    p.add_argument("--imax", type=int, metavar="I")
    p.add_argument("--basic-betti", metavar="B0,B1,..", dest="basic_betti")
    p.add_argument("--mode-box", type=int, metavar="B", dest="mode_box")
    p.add_argument("--form", metavar="PATH")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--representatives", action="store_true")
    return p


def parse_command(argv) -> Command:
    ns = build_parser().parse_args(argv)
    flags = {k: getattr(ns, k) for k in FLAG_DEFAULTS}
    used = {k for k, v in flags.items() if v not in (None, False)}
    bad = sorted(used - ALLOWED[ns.verb])
    if bad:
        raise InputError(f"flag(s) not valid for '{ns.verb}': " + ", ".join("--" + b.replace("_", "-") for b in bad))
    if ns.catalog and ns.file:
        raise InputError("give exactly one input source: --catalog or --file")
    if not (ns.catalog or ns.file) and ns.verb != "catalog":
        raise InputError(f"'{ns.verb}' needs an input source: --catalog NAME or --file PATH")
    if ns.verb == "catalog" and ns.file:
        raise InputError("'catalog' takes --catalog NAME or nothing")
    for name in ("degree", "imax", "mode_box"):
        if flags[name] is not None and flags[name] < 0:
            raise InputError(f"--{name.replace('_', '-')} must be non-negative")
    return Command(ns.verb, ns.catalog, ns.file, ns.format, {k: v for k, v in flags.items() if k in used})


# input loading ----------------------------------------------------------


def _load_algebra(c: Command):
    """Return (algebra, h or None, advisory or None)."""
    advisory = None
    if c.catalog:
        entry = catalog_entry(c.catalog)
        L, h, advisory = entry.algebra, entry.h, entry.advisory or None
    else:
        L, h = algebra_from_json(load_json(c.file))
    sub = c.flag("subalgebra")
    if sub is not None:
        if os.path.isfile(sub):
            obj = load_json(sub)
            rows = obj.get("subalgebra") if isinstance(obj, dict) else obj
            h = subalgebra_from_json(rows, L.dim)
        else:
            h = parse_subalgebra_inline(sub, L.dim)
        advisory = None  # catalog facts describe the catalog's own h
    return L, h, advisory


def _digest(*parts) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(json.dumps(p, sort_keys=True, ensure_ascii=False).encode())
    return h.hexdigest()


def _require_h(c, h):
    if h is None:
        raise InputError(f"'{c.verb}' needs a subalgebra: use --subalgebra or a catalog entry that marks h")
    return h


def _betti_payload(c, L, C, route_name=None):
    k = c.flag("degree")
    if k is not None:
        b, reps = betti_degree(C, k)
        reps_full = (tuple(C.embeds[k] @ v for v in reps),) if C.embeds is not None else (reps,)
        t = BettiTable((b,), reps_full, route_name or C.route)
        return betti_to_json(L.name, t, reps_full if c.flag("representatives") else None, degree=k)
    t = betti(C)
    if route_name:
        t = BettiTable(t.betti, t.representatives, route_name)
    reps = embedded_representatives(C, t) if c.flag("representatives") else None
    return betti_to_json(L.name, t, reps)


def _execute(c: Command):
    """(payload, exit code, input digest)."""
    if c.verb == "catalog":
        if c.catalog:
            e = catalog_entry(c.catalog)
            payload = {"entry": c.catalog, "description": e.description, "algebra": algebra_to_json(e.algebra, e.h)}
            if e.advisory:
                payload["advisory"] = e.advisory
        else:
            payload = {
                "algebras": [{"name": n, "description": catalog_entry(n).description} for n in catalog_names()],
                "foliations": foliation_names(),
            }
        return payload, EXIT_OK, _digest(c.echo())

    if c.verb == "torus":
        return _torus(c)

    L, h, advisory = _load_algebra(c)
    digest = _digest(algebra_to_json(L, h), c.echo()["flags"], c.verb)

    if c.verb == "check":
        st = structure(L)
        payload = {"algebra": L.name, "dim": L.dim, "jacobi": "ok" if jacobi_check(L) is None else "violated",
                   "center_dim": st.center.dim, "derived_dim": st.derived.dim, "unimodular": st.unimodular}
        try:
            payload["compact_type"] = compact_type(L).to_json()
        except UnorderedScalar:
            payload["compact_type"] = {"verdict": "undecided", "reason": "t-dependent structure constants"}
        if h is not None:
            payload["subalgebra"] = {"dim": h.dim, "is_subalgebra": is_subalgebra(L, h), "is_ideal": is_ideal(L, h)}
        return payload, EXIT_OK, digest

    if c.verb == "betti":
        return _betti_payload(c, L, full_complex(L)), EXIT_OK, digest
    if c.verb == "invariant":
        return _betti_payload(c, L, invariant_complex(L)), EXIT_OK, digest
    if c.verb == "relative":
        return _betti_payload(c, L, relative_complex(L, _require_h(c, h))), EXIT_OK, digest
    if c.verb == "quotient":
        Q, _ = quotient(L, _require_h(c, h))
        payload = _betti_payload(c, Q, full_complex(Q), "quotient")
        payload["algebra"] = L.name
        payload["quotient_dim"] = Q.dim
        return payload, EXIT_OK, digest

    if c.verb == "gh":
        a = Assumptions(compact_quotient=c.flag("assume_compact_quotient"), dense=c.flag("assume_dense"))
        report = gh_cohomology(L, _require_h(c, h), a, advisory)
        payload = {"algebra": L.name, **report.to_json()}
        return payload, (EXIT_OK if report.computed else EXIT_REFUSED), digest

    if c.verb == "e1":
        imax = c.flag("imax")
        imax = 4 if imax is None else imax
        raw = c.flag("basic_betti")
        if raw is None:
            basic = list(betti(full_complex(L)).betti)
            basic_source = "H(g)"
        else:
            try:
                basic = [int(x) for x in raw.split(",")]
            except ValueError:
                raise InputError("--basic-betti must be comma-separated integers") from None
            basic_source = "user"
        payload = {
            "algebra": L.name,
            "invariant_polynomial_dims": [invariant_polynomials_dim(L, i) for i in range(imax + 1)],
            "basic_betti": basic,
            "basic_betti_source": basic_source,
            "e1": e1_table(L, basic, imax),
        }
        return payload, EXIT_OK, digest

    raise InputError(f"unknown verb {c.verb!r}")


def _torus(c: Command):
    if c.catalog:
        n, gens = foliation_generators(c.catalog)
        name = c.catalog
    else:
        n, gens = foliation_from_json(load_json(c.file))
        name = c.file
    F = build_foliation(n, gens)
    box = c.flag("mode_box")
    box = 3 if box is None else box
    table = basic_cohomology(F, box)
    payload = {
        "foliation": name,
        "n": n,
        "h_dim": F.h.dim,
        "closure_dim": F.closure.dim,
        "basic_modes_rank": F.K0.dim,
        "betti": list(table.betti),
        "certificates": {
            "mode_box": box,
            "nonzero_basic_modes_checked": table.notes["modes_checked"],
            "all_acyclic": True,
        },
    }
    if c.flag("representatives"):
        payload["representatives"] = betti_to_json(name, table, table.representatives)["representatives"]
    digest_parts = [n, [[str(x) for x in g] for g in gens], box]
    form_path = c.flag("form")
    if form_path:
        obj = load_json(form_path)
        beta = form_from_json(obj, n)
        Q, residual = homotopy_certificate(beta, F)
        payload["homotopy"] = {
            "average": form_to_json(average(beta, F)),
            "Q": form_to_json(Q),
            "residual_zero": residual.is_zero(),
        }
        digest_parts.append(obj)
    return payload, EXIT_OK, _digest(digest_parts)


# output ----------------------------------------------------------------


def _table_lines(payload: dict, prefix: str = "") -> list:
    lines = []
    width = max((len(k) for k in payload), default=0)
    for key in payload:
        val = payload[key]
        label = (prefix + key).ljust(width + len(prefix))
        if isinstance(val, (dict, list)) and not val:
            continue
        if isinstance(val, dict):
            lines.append(label.rstrip())
            lines.extend(_table_lines(val, prefix + "  "))
        elif isinstance(val, list) and val and all(isinstance(v, dict) for v in val):
            lines.append(label.rstrip())
            for v in val:
                if set(v) == {"hypothesis", "status"}:
                    lines.append(f"{prefix}  - {v['hypothesis']}: {v['status']}")
                else:
                    lines.append(prefix + "  - " + ", ".join(f"{k}={_fmt(x)}" for k, x in v.items()))
        else:
            lines.append(f"{label}  {_fmt(val)}")
    return lines


def _fmt(v) -> str:
    if isinstance(v, list):
        if v and all(isinstance(x, list) for x in v):
            return " | ".join(" ".join(str(y) for y in x) for x in v)
        return " ".join(str(x) for x in v)
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, dict):
        return "{}"
    return str(v)


def _render_table(c: Command, payload: dict, code: int) -> str:
    lines = [f"liecohom {c.verb}"]
    if "betti" in payload and isinstance(payload["betti"], list):
        bs = payload["betti"]
        start = payload.get("degree", 0)
        lines.append("degree  " + " ".join(f"{start + k:>3}" for k in range(len(bs))))
        lines.append("betti   " + " ".join(f"{b:>3}" for b in bs))
        if start == 0 and len(bs) > 1:
            lines.append(f"b1      {bs[1]:>3}")
    lines.extend(_table_lines(payload))
    if code == EXIT_REFUSED:
        lines.append("REFUSED: no applicable theorem (exit 2)")
    return "\n".join(lines) + "\n"


def run(c: Command):
    """Execute a command; returns ``(report dict, exit code)``."""
    t0 = time.perf_counter()
    try:
        payload, code, digest = _execute(c)
    except LieCohomError as exc:
        payload, code, digest = {"error": exc.to_json()}, EXIT_INPUT, None
    report = {
        "tool": "liecohom",
        "version": __version__,
        "command": c.echo(),
        "input_digest": digest,
        "exit_code": code,
        "result": payload,
        "timing_ms": round((time.perf_counter() - t0) * 1000, 3),
    }
    return report, code


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        c = parse_command(argv)
    except LieCohomError as exc:
        sys.stdout.write(dumps({"tool": "liecohom", "exit_code": EXIT_INPUT, "result": {"error": exc.to_json()}}))
        return EXIT_INPUT
    report, code = run(c)
    if c.fmt == "json" or "error" in report["result"]:
        sys.stdout.write(dumps(report))
    else:
        sys.stdout.write(_render_table(c, report["result"], code))
    return code


if __name__ == "__main__":
    sys.exit(main())
