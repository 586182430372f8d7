"""JSON file formats for algebras, subalgebras, foliations, forms and reports."""

from __future__ import annotations

import json
from typing import Optional

from .ce import BettiTable
from .errors import InputError, NotASubalgebra
from .liealg import LieAlgebra, is_subalgebra
from .linalg import Subspace
from .scalar import as_scalar, format_scalar, parse_scalar
from .torus import TrigForm

__all__ = [
    "algebra_from_json",
    "algebra_to_json",
    "betti_to_json",
    "dumps",
    "foliation_from_json",
    "form_from_json",
    "form_to_json",
    "load_json",
    "parse_subalgebra_inline",
    "subalgebra_from_json",
]


def dumps(obj) -> str:
    """Canonical JSON text used for every file and report this package writes."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}", path=path) from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc.msg} (line {exc.lineno})", path=path) from None


def _scalar(x, where):
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise InputError(f"{where}: expected scalar text, got {x!r}")
    return parse_scalar(x) if isinstance(x, str) else as_scalar(x)


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{where}: expected an integer, got {x!r}")
    return x


def algebra_to_json(L: LieAlgebra, h: Optional[Subspace] = None) -> dict:
    brackets = []
    for (i, j), coeffs in sorted(L.bracket_dict().items()):
        brackets.append({
            "i": i + 1,
            "j": j + 1,
            "coeffs": {str(k + 1): format_scalar(x) for k, x in sorted(coeffs.items())},
        })
    out = {"name": L.name, "dim": L.dim, "brackets": brackets}
    if h is not None:
        out["subalgebra"] = [[format_scalar(x) for x in row] for row in h.vectors()]
    return out


def subalgebra_from_json(rows, n: int) -> Subspace:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError("subalgebra must be a list of rows")
    vecs = []
    for a, r in enumerate(rows):
        if len(r) != n:
            raise InputError(f"subalgebra row {a + 1} has length {len(r)}, expected {n}")
        vecs.append([_scalar(x, f"subalgebra row {a + 1}") for x in r])
    return Subspace.span(vecs, n)


def parse_subalgebra_inline(text: str, n: int) -> Subspace:
    """Rows separated by ';', entries by ','; e.g. ``"1,0,0,1; 0,1,t,0"``."""
    rows = [r for r in text.split(";") if r.strip()]
    return subalgebra_from_json([[e.strip() for e in r.split(",")] for r in rows], n)


def algebra_from_json(obj) -> tuple:
    """Validated ``(LieAlgebra, h or None)`` from the algebra file schema."""
    if not isinstance(obj, dict):
        raise InputError("algebra file must be a JSON object")
    for key in ("name", "dim", "brackets"):
        if key not in obj:
            raise InputError(f"algebra file is missing {key!r}")
    name = obj["name"]
    if not isinstance(name, str):
        raise InputError("'name' must be a string")
    n = _int(obj["dim"], "dim")
    if n < 0:
        raise InputError("'dim' must be non-negative")
    if not isinstance(obj["brackets"], list):
        raise InputError("'brackets' must be a list")
    table = {}
    for e, entry in enumerate(obj["brackets"]):
        where = f"bracket entry {e + 1}"
        if not isinstance(entry, dict) or not {"i", "j", "coeffs"} <= set(entry):
            raise InputError(f"{where}: needs keys i, j, coeffs")
        i, j = _int(entry["i"], where), _int(entry["j"], where)
        if not (1 <= i <= n and 1 <= j <= n):
            raise InputError(f"{where}: index out of range 1..{n}")
        if i >= j:
            raise InputError(
                f"{where}: only brackets with i < j may be stored (antisymmetry is implied), got i={i}, j={j}"
            )
        if (i, j) in table:
            raise InputError(f"{where}: duplicate bracket ({i}, {j})")
        coeffs = entry["coeffs"]
        if not isinstance(coeffs, dict):
            raise InputError(f"{where}: coeffs must be an object")
        parsed = {}
        for k, x in coeffs.items():
            try:
                kk = int(k)
            except ValueError:
                raise InputError(f"{where}: component key {k!r} is not an integer") from None
            if not 1 <= kk <= n:
                raise InputError(f"{where}: component {kk} out of range")
            parsed[kk - 1] = _scalar(x, where)
        table[(i, j)] = parsed
    L = LieAlgebra.from_brackets(name, n, {(i - 1, j - 1): c for (i, j), c in table.items()})
    h = None
    if "subalgebra" in obj and obj["subalgebra"] is not None:
        h = subalgebra_from_json(obj["subalgebra"], n)
        if not is_subalgebra(L, h):
            raise NotASubalgebra("subalgebra rows are not closed under the bracket")
    return L, h


def foliation_from_json(obj) -> tuple:
    """``(n, generators)`` from ``{"n": int, "generators": [[ScalarText]]}``."""
    if not isinstance(obj, dict) or "n" not in obj or "generators" not in obj:
        raise InputError("foliation file needs 'n' and 'generators'")
    n = _int(obj["n"], "n")
    gens = obj["generators"]
    if not isinstance(gens, list):
        raise InputError("'generators' must be a list of rows")
    rows = []
    for a, g in enumerate(gens):
        if not isinstance(g, list) or len(g) != n:
            raise InputError(f"generator {a + 1} must have {n} entries")
        rows.append([_scalar(x, f"generator {a + 1}") for x in g])
    return n, rows


def _subset_key(s) -> str:
    return ",".join(str(i + 1) for i in s)


def _parse_subset(key: str, n: int) -> tuple:
    key = key.strip()
    if not key:
        return ()
    try:
        out = tuple(int(p) - 1 for p in key.split(","))
    except ValueError:
        raise InputError(f"bad subset key {key!r}; use 1-based indices like '1,3'") from None
    if any(not 0 <= i < n for i in out):
        raise InputError(f"subset {key!r} out of range for T^{n}")
    return out


def form_from_json(obj, n: int) -> TrigForm:
    """Form file ``{"degree", "terms": [{"mode", "trig", "coeffs": {"1,2": text}, "twopi"?}]}``."""
    if not isinstance(obj, dict) or "degree" not in obj or "terms" not in obj:
        raise InputError("form file needs 'degree' and 'terms'")
    deg = _int(obj["degree"], "degree")
    items = []
    for a, t in enumerate(obj["terms"]):
        where = f"form term {a + 1}"
        if not isinstance(t, dict) or not {"mode", "trig", "coeffs"} <= set(t):
            raise InputError(f"{where}: needs mode, trig, coeffs")
        mode = [_int(x, where) for x in t["mode"]]
        power = _int(t.get("twopi", 0), where)
        for key, x in t["coeffs"].items():
            items.append((mode, t["trig"], _parse_subset(key, n), {power: _scalar(x, where)}))
    return TrigForm.build(n, deg, items)


def form_to_json(beta: TrigForm) -> dict:
    terms = []
    for k, trig, S, coeff in beta.terms:
        for p, x in coeff:
            terms.append({"mode": list(k), "trig": trig, "twopi": p, "coeffs": {_subset_key(S): format_scalar(x)}})
    return {"degree": beta.degree, "terms": terms}


def betti_to_json(name: str, table: BettiTable, representatives=None, degree: Optional[int] = None) -> dict:
    out = {"algebra": name, "route": table.route}
    if degree is not None:
        out["degree"] = degree
    out["betti"] = list(table.betti)
    if degree is None:
        out["euler"] = table.euler
    reps = {}
    if representatives is not None:
        for k, vecs in enumerate(representatives):
            if vecs:
                key = str(degree if degree is not None else k)
                reps[key] = [[format_scalar(x) for x in v] for v in vecs]
    out["representatives"] = reps
    return out
