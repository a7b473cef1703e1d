"""JSON documents for groups, RRB groups, braces, modules and extensions.

Every top-level document carries ``"format": 1`` and a ``"kind"``.  Tables and
maps are lists of integers indexed by element.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

import numpy as np

from .braces import SkewLeftBrace, brace_new
from .cohomology import RRBModule, module_new
from .core import FiniteGroup, group_from_table
from .extensions import RRBExtension, extension_verify
from .rrb import RRBGroup, rrb_hom, rrb_new

FORMAT = 1


class DocumentError(ValueError):
    """Malformed or unsupported JSON document (a usage error, not a domain one)."""


def _ints(a) -> list:
    return np.asarray(a).tolist()


def group_to_json(g: FiniteGroup) -> dict:
    return {"label": g.label, "order": g.order, "table": _ints(g.table)}


def group_from_json(d: dict) -> FiniteGroup:
    try:
        g = group_from_table(d["table"], d.get("label", ""))
    except KeyError as exc:
        raise DocumentError(f"group is missing {exc}") from exc
    if "order" in d and d["order"] != g.order:
        raise DocumentError("declared order does not match the table")
    return g


def rrb_to_json(r: RRBGroup) -> dict:
    return {"H": group_to_json(r.H), "G": group_to_json(r.G), "phi": _ints(r.phi.perms), "R": _ints(r.R)}


def rrb_from_json(d: dict) -> RRBGroup:
    H, G = group_from_json(d["H"]), group_from_json(d["G"])
    return rrb_new(H, G, d["phi"], d["R"])


def brace_to_json(b: SkewLeftBrace) -> dict:
    return {"order": b.order, "dot": _ints(b.dot.table), "circ": _ints(b.circ.table)}


def brace_from_json(d: dict) -> SkewLeftBrace:
    return brace_new(d["dot"], d["circ"])


def module_to_json(m: RRBModule) -> dict:
    return {"base": rrb_to_json(m.base), "coeff": rrb_to_json(m.coeff), "nu": _ints(m.nu.perms),
            "mu": _ints(m.mu.perms), "sigma": _ints(m.sigma.perms), "f": _ints(m.f)}


def module_from_json(d: dict) -> RRBModule:
    return module_new(rrb_from_json(d["base"]), rrb_from_json(d["coeff"]), d["nu"], d["mu"], d["sigma"], d["f"])


def extension_to_json(e: RRBExtension) -> dict:
    return {"kernel": rrb_to_json(e.kernel), "total": rrb_to_json(e.total), "quotient": rrb_to_json(e.quot),
            "incl": {"psi": _ints(e.incl.psi), "eta": _ints(e.incl.eta)},
            "proj": {"psi": _ints(e.proj.psi), "eta": _ints(e.proj.eta)}}


def extension_from_json(d: dict) -> RRBExtension:
    k, t, q = rrb_from_json(d["kernel"]), rrb_from_json(d["total"]), rrb_from_json(d["quotient"])
    return extension_verify(rrb_hom(k, t, d["incl"]["psi"], d["incl"]["eta"]),
                            rrb_hom(t, q, d["proj"]["psi"], d["proj"]["eta"]))


_WRITERS = {"group": group_to_json, "rrb": rrb_to_json, "brace": brace_to_json,
            "module": module_to_json, "extension": extension_to_json}
_READERS = {"group": group_from_json, "rrb": rrb_from_json, "brace": brace_from_json,
            "module": module_from_json, "extension": extension_from_json}


def to_document(kind: str, obj, **extra) -> dict:
    doc = {"format": FORMAT, "kind": kind}
    doc.update(_WRITERS[kind](obj))
    doc.update(extra)
    return doc


def guess_kind(doc: dict) -> str:
    if "kind" in doc:
        return doc["kind"]
    if "kernel" in doc:
        return "extension"
    if "base" in doc:
        return "module"
    if "dot" in doc:
        return "brace"
    if "H" in doc:
        return "rrb"
    if "table" in doc:
        return "group"
    raise DocumentError("cannot tell what kind of document this is")


def from_document(doc: dict, kind: str | None = None) -> Any:
    if doc.get("format", FORMAT) != FORMAT:
        raise DocumentError(f"unsupported format {doc.get('format')}")
    k = guess_kind(doc)
    if kind is not None and k != kind:
        raise DocumentError(f"expected a {kind} document, got {k}")
    if k not in _READERS:
        raise DocumentError(f"unknown kind {k!r}")
    try:
        return _READERS[k](doc)
    except KeyError as exc:
        raise DocumentError(f"document is missing field {exc}") from exc


def load(path: str | Path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(str(exc)) from exc


def dump(doc: dict, path: str | Path) -> None:
    """One top-level field per line; tables stay on a single line each."""
    body = ",\n".join(f" {json.dumps(k)}: {json.dumps(v)}" for k, v in doc.items())
    Path(path).write_text("{\n" + body + "\n}\n")


def bundled_examples() -> dict[str, dict]:
    """Name -> document for every example shipped with the package."""
    out = {}
    for item in sorted(resources.files("rrbgroups").joinpath("data").iterdir(), key=lambda p: p.name):
        if item.name.endswith(".json"):
            out[item.name[:-5]] = json.loads(item.read_text())
    return out
