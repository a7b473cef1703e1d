"""Command line front end.

Every verb reads JSON documents and prints either a short text report or, with
``--json``, a report object ``{"status", "payload", "diagnostics"}``.
Exit codes: 0 success, 1 domain error (the input fails a check), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import bridge, braces, cohomology, extensions, io, rrb
from .errors import RRBError

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class Report:
    def __init__(self):
        self.status = "ok"
        self.payload: dict = {}
        self.diagnostics: list[str] = []
        self.lines: list[str] = []

    def say(self, line: str):
        self.lines.append(line)

    def fail(self, msg: str):
        self.status = "error"
        self.diagnostics.append(msg)
        self.lines.append(f"FAIL: {msg}")


def _plain(x):
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def _read(path: str, kind: str | None = None):
    return io.from_document(io.load(path), kind)


def _rrb_or_brace(path: str):
    doc = io.load(path)
    obj = io.from_document(doc)
    if isinstance(obj, rrb.RRBGroup):
        return braces.induced_brace(obj), obj
    if isinstance(obj, braces.SkewLeftBrace):
        return obj, None
    raise io.DocumentError("expected an RRB group or a brace")


# ---------------------------------------------------------------- verbs


def cmd_verify(a, rep: Report):
    doc = io.load(a.file)
    kind = io.guess_kind(doc)
    obj = io.from_document(doc)
    rep.payload["kind"] = kind
    if kind == "rrb":
        rep.payload["bijective"] = rrb.is_bijective(obj)
        rep.say(f"RRB group |H|={obj.H.order} |G|={obj.G.order}: all axioms hold")
    else:
        rep.say(f"{kind} document is valid")


def cmd_enumerate_r(a, rep: Report):
    doc = io.load(a.file)
    H, G = io.group_from_json(doc["H"]), io.group_from_json(doc["G"])
    ops = rrb.enumerate_rb_operators(H, G, doc["phi"], budget=a.budget)
    rep.payload["operators"] = [r.tolist() for r in ops]
    rep.payload["count"] = len(ops)
    rep.say(f"{len(ops)} operators")
    for r in ops:
        rep.say("  " + " ".join(map(str, r.tolist())))


def cmd_descendent(a, rep: Report):
    r = _read(a.file, "rrb")
    D = r.descendent()
    rep.payload["descendent"] = io.group_to_json(D)
    rep.payload["abelian"] = D.is_abelian()
    rep.say(f"descendent group of order {D.order}, abelian={D.is_abelian()}")
    for row in D.table.tolist():
        rep.say("  " + " ".join(map(str, row)))


def cmd_brace(a, rep: Report):
    b, _ = _rrb_or_brace(a.file)
    rep.payload["brace"] = io.brace_to_json(b)
    rep.payload["trivial"] = b.is_trivial()
    rep.say(f"skew brace of order {b.order}, trivial={b.is_trivial()}, "
            f"additive group abelian={b.dot.is_abelian()}")


def cmd_ybe(a, rep: Report):
    b, _ = _rrb_or_brace(a.file)
    sol = braces.ybe_solution(b)
    rep.payload["left"] = sol.left.tolist()
    rep.payload["right"] = sol.right.tolist()
    rep.say(f"solution on {b.order} points: braid relation, bijectivity and non-degeneracy hold")


def cmd_center(a, rep: Report):
    r = _read(a.file, "rrb")
    left, right = rrb.center(r)
    rep.payload["H_part"] = left
    rep.payload["G_part"] = right
    rep.say(f"center: H part {left}, G part {right}")


def _parse_subset(s: str | None, n: int) -> list[int]:
    if s is None:
        return list(range(n))
    return [int(x) for x in s.split(",") if x.strip()]


def cmd_quotient(a, rep: Report):
    doc = io.load(a.file)
    r = io.from_document(doc, "rrb")
    ideal = doc.get("ideal", {})
    K = _parse_subset(a.K, 0) if a.K is not None else ideal.get("K")
    L = _parse_subset(a.L, 0) if a.L is not None else ideal.get("L")
    if K is None or L is None:
        raise io.DocumentError("give the ideal with --K and --L or an \"ideal\" field")
    ok, bad = rrb.is_ideal(r, K, L)
    if not ok:
        for b in bad:
            rep.fail(b)
        return
    q, proj = rrb.quotient(r, K, L)
    rep.payload["quotient"] = io.to_document("rrb", q)
    rep.payload["projection"] = {"psi": proj.psi.tolist(), "eta": proj.eta.tolist()}
    rep.say(f"quotient |H/K|={q.H.order} |G/L|={q.G.order}")


def cmd_module_verify(a, rep: Report):
    m = _read(a.file, "module")
    rep.payload["central"] = cohomology.is_central(m)
    rep.say(f"module over |A|={m.A.order} |B|={m.B.order} with |K|={m.K.order} |L|={m.L.order}: valid")


def cmd_cohomology(a, rep: Report):
    m = _read(a.file, "module")
    method = "both" if a.oracle else "snf"
    if a.degree == 0:
        res = cohomology.h0(m)
    elif a.degree == 1:
        res = cohomology.h1(m, method)
    elif a.central:
        res = cohomology.h2_central(m, method)
    else:
        res = cohomology.h2(m, method)
    rep.payload.update(degree=res.degree, factors=res.factors, order=res.order)
    if a.degree:
        rep.payload["representatives"] = [[_plain(p) for p in r.parts()] for r in res.representatives]
    name = "H^%d%s" % (a.degree, " (central)" if a.central else "")
    rep.say(f"{name} = " + (" x ".join(f"Z/{d}" for d in res.factors) or "0") + f"  (order {res.order})")
    if a.oracle and a.degree:
        rep.say("enumeration agrees")


def cmd_ext_enumerate(a, rep: Report):
    m = _read(a.file, "module")
    classes = extensions.enumerate_ext(m, "snf")
    rep.payload["classes"] = [{"class": list(c.coords), "extension": io.to_document("extension", c.extension)}
                              for c in classes]
    rep.say(f"{len(classes)} extension classes")
    for c in classes:
        sp = extensions.split_classify(c.extension, a.budget)
        rep.say(f"  class {list(c.coords)}: |H|={c.extension.total.H.order} |G|={c.extension.total.G.order} split={sp.split}")
    if a.oracle:
        brute = extensions.enumerate_ext(m, "enumerate", a.budget)
        rep.payload["brute_force_classes"] = len(brute)
        if len(brute) != len(classes):
            rep.fail(f"brute force found {len(brute)} classes")
        else:
            rep.say("brute-force enumeration agrees")


def cmd_ext_compare(a, rep: Report):
    e1, e2 = _read(a.file, "extension"), _read(a.file2, "extension")
    res = extensions.equivalent(e1, e2, "both" if a.oracle else "cohomology", a.budget)
    rep.payload["equivalent"] = res.equivalent
    if res.witness is not None:
        rep.payload["witness"] = {"H": res.witness[0].tolist(), "G": res.witness[1].tolist()}
    rep.say("equivalent" if res.equivalent else "not equivalent")


def cmd_semidirect(a, rep: Report):
    m = _read(a.file, "module")
    e = extensions.semidirect(m)
    rep.payload["extension"] = io.to_document("extension", e)
    rep.payload["split"] = extensions.split_classify(e, a.budget).split
    rep.say(f"semidirect extension |H|={e.total.H.order} |G|={e.total.G.order}, split={rep.payload['split']}")


def cmd_bridge(a, rep: Report):
    m = _read(a.file, "module")
    cm = bridge.class_map(m)
    rep.payload.update(rrb_h2=cm.source.factors, brace_h2=cm.target.factors, images=_plain(cm.images),
                       additive=cm.additive, injective=cm.injective, surjective=cm.surjective)
    rep.say(f"H^2 of module: {cm.source.factors or [1]}, H^2 of induced brace: {cm.target.factors or [1]}")
    rep.say(f"class map additive={cm.additive} injective={cm.injective} surjective={cm.surjective}")
    if not cm.additive:
        rep.fail("class map is not additive")


def cmd_counterexample(a, rep: Report):
    r = bridge.pi_non_surjectivity_check(a.p)
    rep.payload.update(_plain(r.__dict__))
    q = a.p * a.p
    rep.say(f"{r.rrb_cocycles} RRB extensions, all induced braces trivial: {r.all_induced_trivial}")
    rep.say(f"class {list(r.e1_class)} of the Z/{q} brace extension induced by no RRB extension: {r.e1_class not in r.attained}")
    if not r.certified:
        rep.fail("certificate incomplete")


def cmd_examples(a, rep: Report):
    ex = io.bundled_examples()
    rep.payload["examples"] = sorted(ex)
    if a.out:
        out = Path(a.out)
        out.mkdir(parents=True, exist_ok=True)
        for name, doc in ex.items():
            io.dump(doc, out / f"{name}.json")
        rep.say(f"wrote {len(ex)} documents to {out}")
    else:
        for name in sorted(ex):
            rep.say(f"{name} ({ex[name].get('kind')})")


VERBS = {
    "verify": (cmd_verify, "check every axiom of a document"),
    "enumerate-r": (cmd_enumerate_r, "list all RRB operators for given H, G, phi"),
    "descendent": (cmd_descendent, "descendent group of an RRB group"),
    "brace": (cmd_brace, "induced skew brace of an RRB group (or check a brace)"),
    "ybe": (cmd_ybe, "Yang-Baxter solution of a brace or RRB group"),
    "center": (cmd_center, "center of an RRB group"),
    "quotient": (cmd_quotient, "quotient by an ideal (--K, --L)"),
    "module-verify": (cmd_module_verify, "check module conditions"),
    "cohomology": (cmd_cohomology, "H^0, H^1 or H^2 of a module"),
    "ext-enumerate": (cmd_ext_enumerate, "one extension per cohomology class"),
    "ext-compare": (cmd_ext_compare, "decide equivalence of two extensions"),
    "semidirect": (cmd_semidirect, "semidirect product extension of a module"),
    "bridge": (cmd_bridge, "map from RRB to brace second cohomology"),
    "counterexample": (cmd_counterexample, "non-surjectivity certificate for p = 2 or 3"),
    "examples": (cmd_examples, "list or write the bundled example documents"),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rrb", description="Toolkit for finite relative Rota-Baxter groups.")
    p.add_argument("--json", action="store_true", help="print a JSON report")
    sub = p.add_subparsers(dest="verb", required=True)
    for name, (_, help_) in VERBS.items():
        s = sub.add_parser(name, help=help_)
        s.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print a JSON report")
        s.add_argument("--budget", type=int, default=10**6, help="search budget")
        if name not in ("counterexample", "examples"):
            s.add_argument("file")
        if name == "ext-compare":
            s.add_argument("file2")
        if name in ("cohomology", "ext-enumerate", "ext-compare"):
            s.add_argument("--oracle", action="store_true", help="cross-check with brute force")
        if name == "cohomology":
            s.add_argument("--degree", type=int, choices=(0, 1, 2), default=2)
            s.add_argument("--central", action="store_true")
        if name == "quotient":
            s.add_argument("--K", help="comma separated elements of H")
            s.add_argument("--L", help="comma separated elements of G")
        if name == "counterexample":
            s.add_argument("--p", type=int, choices=(2, 3), default=2)
        if name == "examples":
            s.add_argument("--out", help="directory to write documents into")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    rep = Report()
    code = EXIT_OK
    try:
        VERBS[a.verb][0](a, rep)
        if rep.status != "ok":
            code = EXIT_DOMAIN
    except io.DocumentError as exc:
        rep.fail(f"bad input: {exc}")
        code = EXIT_USAGE
    except RRBError as exc:
        rep.fail(f"{type(exc).__name__}: {exc}")
        if exc.witness is not None:
            rep.payload["witness"] = _plain(exc.witness)
        code = EXIT_DOMAIN
    if getattr(a, "json", False):
        print(json.dumps({"status": rep.status, "payload": _plain(rep.payload), "diagnostics": rep.diagnostics}))
    else:
        out = sys.stdout if code == EXIT_OK else sys.stderr
        print("\n".join(rep.lines), file=out)
    return code


if __name__ == "__main__":
    sys.exit(main())
