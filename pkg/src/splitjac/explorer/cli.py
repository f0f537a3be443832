"""Command line interface.

Family labels: "N" (cyclic, e.g. "7", "10"), "2x2N" (e.g. "2x6", "2x8"),
"2Nx2" (e.g. "4x2", "8x2"), plus "2x4a" and "4x2a"; ``--model`` picks the
Kubert (E) or B-form (F) family.  Coefficient lists are lowest degree first.

Exit status: 0 when every requested check passes, 1 on a failed check,
2 on a usage error.  Text output is tab-delimited; ``--json`` switches to
JSON, and ``--figures DIR`` also writes PNG figures and TSV tables there.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

from ..algebra import Poly, match_roots, rat, rat_str
from ..families import DegenerateParameter, consistency_check, get_family, instantiate
from ..ffcount import BadReduction, genus_of, good_primes, jacobian_order, model_from_json, product_check
from ..glue2 import IsomorphismMatching, cover_identities, glue, glue_both_orientations
from ..glue3 import GlueTriple, composite_relations, d_from_sign, glue_hyper, glue_quartic, twisting_factor
from ..torsionlab import AbGroup, halving_condition, iota, torsion_image_structure


class UsageError(ValueError):
    pass


def _rats(text: str) -> list[Fraction]:
    try:
        return [rat(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot read rationals from {text!r}") from exc


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot read integers from {text!r}") from exc


class Out:
    """Collects rows for tab-delimited output or a JSON document."""

    def __init__(self, args):
        self.json = args.json
        self.figures = Path(args.figures) if args.figures else None
        self.doc: dict = {}
        self.tables: dict[str, list] = {}

    def row(self, table: str, *cells):
        self.tables.setdefault(table, []).append([str(c) for c in cells])

    def emit(self):
        if self.json:
            print(json.dumps(self.doc, indent=2))
        else:
            for table, rows in self.tables.items():
                for r in rows:
                    print("\t".join([table, *r]))
        if self.figures:
            self.figures.mkdir(parents=True, exist_ok=True)
            for table, rows in self.tables.items():
                with open(self.figures / f"{table}.tsv", "w") as fh:
                    fh.writelines("\t".join(r) + "\n" for r in rows)


def _primes(args, models, count=3, twist=None):
    if args.primes:
        return _ints(args.primes)
    return good_primes(models, count, twist=twist)


# ---------------------------------------------------------------------------
# subcommands


def cmd_family(args, out: Out) -> int:
    fam = get_family(args.model, args.label)
    if args.sample:
        rng = random.Random(args.seed)
        ok = True
        n = 0
        while n < args.sample:
            t = Fraction(rng.randint(-60, 60), rng.randint(1, 30))
            if fam.degenerate_factor(t):
                continue
            try:
                rep = consistency_check(args.model, args.label, t)
            except DegenerateParameter:
                continue
            n += 1
            ok &= rep.ok
            out.row("consistency", rat_str(t), rep.ok)
            out.doc.setdefault("consistency", []).append({"t": rat_str(t), "checks": rep.checks})
        return 0 if ok else 1
    inst = instantiate(args.model, args.label, args.t)
    rep = consistency_check(args.model, args.label, args.t)
    out.doc = {"instance": inst.to_json(), "checks": rep.checks, "pass": rep.ok}
    out.row("curve", json.dumps(inst.curve.to_json()))
    for k, v in rep.checks.items():
        out.row("check", k, v)
    return 0 if rep.ok else 1


def cmd_glue2(args, out: Out) -> int:
    f, g = Poly(_rats(args.f)), Poly(_rats(args.g))
    if f.deg != 3 or g.deg != 3:
        raise UsageError("--f and --g must be cubics")
    ms = match_roots(f, g, precision_bits=args.precision_bits)
    if not ms:
        raise UsageError("no matching between the 2-torsion of the two curves")
    if args.matching == "auto":
        # first matching not induced by an isomorphism
        for idx, m in enumerate(ms):
            try:
                r = glue(f, g, m)
                break
            except IsomorphismMatching:
                continue
        else:
            raise UsageError("every matching comes from an isomorphism of curves")
    else:
        try:
            idx = int(args.matching)
        except ValueError:
            raise UsageError("--matching takes 'auto' or an index") from None
        if not 0 <= idx < len(ms):
            raise UsageError(f"matching index must be in 0..{len(ms) - 1}")
        r = glue(f, g, ms[idx])
    ids = cover_identities(r)
    from ..elliptic import LongWeierstrass

    fm, gm = f.monic(), g.monic()
    E = LongWeierstrass(Fraction(0), fm[2], Fraction(0), fm[1], fm[0])
    F = LongWeierstrass(Fraction(0), gm[2], Fraction(0), gm[1], gm[0])
    C = r.curve
    checks = [product_check(C, [E, F], p) for p in _primes(args, [C, E, F])]
    out.doc = {"glue": r.to_json(), "matchingIndex": idx, "matchings": len(ms), "identities": ids,
               "productChecks": [c.to_json() for c in checks]}
    if args.orientations:
        both = glue_both_orientations(f, g, ms[idx])
        out.doc["orientation"] = {"identical": both["identical"],
                                  "reversedRatio": None if both["reversed_ratio"] is None
                                  else rat_str(both["reversed_ratio"])}
        out.row("orientation", both["identical"], both["reversed_ratio"])
    out.row("h", ",".join(rat_str(c) for c in r.h.c))
    for k, v in ids.items():
        out.row("identity", k, v)
    for c in checks:
        out.row("product", c.p, c.jacobian_order, c.product, c.ok)
    ok = all(ids.values()) and all(c.ok for c in checks)
    return 0 if ok else 1


def _curve_arg(text: str, model: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise UsageError(f"expected label,t,d-sign, got {text!r}")
    label, t, sign = parts
    E = instantiate(model, label, rat(t)).curve
    if sign not in ("1", "-1", "+1", "+", "-"):
        raise UsageError(f"d-sign must be +1 or -1, got {sign!r}")
    return E, d_from_sign(E, -1 if sign.startswith("-") else 1)


def cmd_glue3(args, out: Out) -> int:
    pairs = [_curve_arg(s, args.model) for s in (args.e1, args.e2, args.e3)]
    tr = GlueTriple(*(p[0] for p in pairs), *(p[1] for p in pairs))
    T = twisting_factor(tr)
    if args.kind == "hyper":
        C = glue_hyper(tr)
        extra = {"relations": composite_relations(tr, C)}
        twist = None
        ok = all(extra["relations"].values())
    else:
        QG = glue_quartic(tr)
        C = QG.curve
        extra = {"isogenousOver": QG.field}
        twist = None if QG.isogenous_over_Q else T
        ok = True
    checks = [product_check(C, list(tr.curves), p, twist=twist)
              for p in _primes(args, [C, *tr.curves], 2, twist)]
    ok = ok and all(c.ok for c in checks)
    out.doc = {"T": rat_str(T), "triple": tr.to_json(), "model": C.to_json(), **extra,
               "productChecks": [c.to_json() for c in checks], "pass": ok}
    out.row("T", rat_str(T))
    out.row("model", json.dumps(C.to_json()))
    for c in checks:
        out.row("product", c.p, c.jacobian_order, c.product, c.ok)
    return 0 if ok else 1


def _load_model(path: str):
    # a missing file falls back to the packaged model of the same name
    if Path(path).is_file():
        text = Path(path).read_text()
    else:
        res = resources.files("splitjac.data").joinpath(Path(path).name)
        if not res.is_file():
            raise UsageError(f"no model file {path!r}")
        text = res.read_text()
    return model_from_json(json.loads(text))


def cmd_count(args, out: Out) -> int:
    model = _load_model(args.model)
    g = args.genus or genus_of(model)
    primes = _ints(args.p) if args.p else _primes(args, [model])
    certs = [jacobian_order(model, p, g) for p in primes]
    out.doc = {"certificates": [c.to_json() for c in certs]}
    for c in certs:
        out.row("count", c.p, ",".join(map(str, c.counts)), c.jacobian_order)
    return 0


def _instance(query: str, model: str):
    label, t = query.split(",")
    return instantiate(model, label.strip(), rat(t))


def _torsion_point(inst, i):
    from ..elliptic import two_torsion

    x = inst.two_torsion_x[i]
    return next(P for P in two_torsion(inst.curve).points if P[0] == x)


def cmd_iota(args, out: Out) -> int:
    inst = _instance(args.curve, args.model)
    if args.torsion is not None:
        P = _torsion_point(inst, args.torsion)
    else:
        name = args.point or max(inst.family.orders, key=inst.family.orders.get)
        if name not in inst.points:
            raise UsageError(f"no point {name!r}; choose from {', '.join(inst.points)}")
        P = inst.points[name]
    v = iota(inst.curve, P, inst.two_torsion_x or None)
    out.doc = {"point": [rat_str(c) for c in P], "iota": v.to_json(), "normOk": v.norm_ok()}
    out.row("iota", *v.signed())
    return 0


def cmd_halving(args, out: Out) -> int:
    I, J = _instance(args.e, args.model), _instance(args.f, args.model)
    perm = tuple(_ints(args.perm))
    P, Q = _torsion_point(I, args.P), _torsion_point(J, args.Q)
    ok = halving_condition(I.curve, J.curve, perm, P, Q, I.two_torsion_x, J.two_torsion_x)
    out.doc = {"halving": ok}
    out.row("halving", ok)
    return 0 if ok else 1


def cmd_image(args, out: Out) -> int:
    G = torsion_image_structure(AbGroup.from_orders(_ints(args.ge)), AbGroup.from_orders(_ints(args.gf)),
                                identify_special=not args.swap_special)
    out.doc = {"structure": str(G), "invariants": list(G.invariants), "order": G.order}
    out.row("structure", G, G.order)
    return 0


def cmd_search(args, out: Out) -> int:
    from . import search as S

    H = args.height
    if args.kind == "delta":
        sols = S.delta_class_search(args.N, args.M, H, shards=args.shards)
        pts = [(s.t, s.u) for s in sols]
        name = f"delta_{args.N}_{args.M}_H{H}"
    else:
        q = Poly(_rats(args.coeffs))
        sols = S.square_values(q, H)
        pts = [(s.t, s.witness[0]) for s in sols]
        name = f"square_H{H}"
    out.doc = {"search": name, "height": H, "solutions": [s.to_json() for s in sols]}
    for s in sols:
        out.row("solution", *(rat_str(x) for x in (s.t, s.u) if x is not None),
                *(rat_str(w) if w is not None else "-" for w in s.witness))
    if out.figures and pts:
        from .plots import search_figure

        search_figure(name, pts, out.figures)
    return 0


def cmd_verify(args, out: Out) -> int:
    from .catalog import CATALOG, verify_named
    from .sections import verify_sections

    target = args.target
    ids = list(CATALOG) if target == "all" else ([] if target == "sections" else [target])
    if target not in ("all", "sections") and target not in CATALOG:
        raise UsageError(f"unknown example {target!r}; try one of: all, sections, {', '.join(CATALOG)}")
    ok = True
    reports = []
    summary = []
    nprimes = len(_ints(args.primes)) if args.primes else 3
    for k in ids:
        rep = verify_named(k, nprimes)
        reports.append(rep.to_json())
        ok &= rep.ok
        good = sum(f.passed for f in rep.facts)
        summary.append((k, good, len(rep.facts) - good))
        for f in rep.facts:
            out.row("fact", k, f.tag, "PASS" if f.passed else "FAIL", f.description, f.anchor)
        if out.figures and rep.record.get("jacobianOrders"):
            from .plots import weil_figure

            g = 2 if "glue" in rep.record else 3
            N = rep.record.get("N")
            weil_figure(k, {int(p): v for p, v in rep.record["jacobianOrders"].items()}, g, N, out.figures)
    if target in ("all", "sections"):
        sec = verify_sections()
        reports.append(sec)
        ok &= sec["pass"]
        good = sum(e["pass"] for e in sec["entries"])
        summary.append(("sections", good, len(sec["entries"]) - good))
        for e in sec["entries"]:
            out.row("section", e["name"], "PASS" if e["pass"] else "FAIL", e["equation"],
                    "(" + ", ".join(e["point"]) + ")", e.get("order", "-"))
    out.doc = {"reports": reports, "pass": ok}
    if out.figures and summary:
        from .plots import pass_figure

        pass_figure(summary, out.figures)
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # global flags work before or after the subcommand
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    ap = argparse.ArgumentParser(prog="splitjac", description=__doc__.splitlines()[0],
                                 allow_abbrev=False)
    for target, suppress in ((ap, False), (common, True)):
        def d(v):
            return argparse.SUPPRESS if suppress else v
        target.add_argument("--primes", default=d(None), help="comma-separated primes for point-count checks")
        target.add_argument("--height", type=int, default=d(20), help="height bound for searches")
        target.add_argument("--precision-bits", type=int, default=d(256),
                            help="precision for cubic matchings")
        target.add_argument("--json", action="store_true", default=d(False),
                            help="emit JSON instead of delimited rows")
        target.add_argument("--seed", type=int, default=d(0), help="seed for parameter sampling")
        target.add_argument("--figures", metavar="DIR", default=d(None),
                            help="write figures and TSV tables to DIR")
    sub = ap.add_subparsers(dest="cmd", required=True)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], allow_abbrev=False, **kw)

    sub.add_parser = add_parser

    p = sub.add_parser("family", help="instantiate a torsion family and check its tables")
    p.add_argument("label")
    p.add_argument("t", nargs="?", default="2")
    p.add_argument("--model", default="kubert", choices=["kubert", "bform"])
    p.add_argument("--sample", type=int, default=0, help="check this many random parameters")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("glue2", help="genus-2 curve from two cubics and a matching")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--matching", default="auto")
    p.add_argument("--orientations", action="store_true", help="compare with the reversed gluing")
    p.set_defaults(func=cmd_glue2)

    p = sub.add_parser("glue3", help="genus-3 curve from three B-form curves")
    p.add_argument("kind", choices=["hyper", "quartic"])
    p.add_argument("--e1", required=True, help="label,t,d-sign")
    p.add_argument("--e2", required=True)
    p.add_argument("--e3", required=True)
    p.add_argument("--model", default="bform", choices=["kubert", "bform"])
    p.set_defaults(func=cmd_glue3)

    p = sub.add_parser("count", help="point counts and #J(F_p) for a model file")
    p.add_argument("--model", required=True, help="JSON model file (quartic864.json is bundled)")
    p.add_argument("--p", help="comma-separated primes")
    p.add_argument("--genus", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("iota", help="descent classes of a point on a curve with full 2-torsion")
    p.add_argument("curve", help="label,t")
    p.add_argument("--point", help="name of a family point (default: the one of largest order)")
    p.add_argument("--torsion", type=int, help="use the 2-torsion point T_i instead")
    p.add_argument("--model", default="kubert", choices=["kubert", "bform"])
    p.set_defaults(func=cmd_iota)

    p = sub.add_parser("halving", help="does (T_i, T'_j) halve on the glued surface")
    p.add_argument("--e", required=True, help="label,t")
    p.add_argument("--f", required=True, help="label,t")
    p.add_argument("--perm", default="0,1,2")
    p.add_argument("--P", type=int, default=0)
    p.add_argument("--Q", type=int, default=0)
    p.add_argument("--model", default="kubert", choices=["kubert", "bform"])
    p.set_defaults(func=cmd_halving)

    p = sub.add_parser("image-structure", help="image of G_E x G_F modulo the matching graph")
    p.add_argument("--ge", required=True, help="cyclic orders, e.g. 2,8")
    p.add_argument("--gf", required=True)
    p.add_argument("--swap-special", action="store_true",
                   help="send the special 2-torsion point to the non-special one")
    p.set_defaults(func=cmd_image)

    p = sub.add_parser("search", help="bounded-height searches")
    p.add_argument("kind", choices=["delta", "square"])
    p.add_argument("--N", type=int, default=7)
    p.add_argument("--M", type=int, default=9)
    p.add_argument("--coeffs", help="polynomial for 'square', lowest degree first")
    p.add_argument("--shards", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="named examples, 'sections' or 'all'")
    p.add_argument("target")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.cmd == "search" and args.kind == "square" and not args.coeffs:
        ap.print_usage(sys.stderr)
        print("search square needs --coeffs", file=sys.stderr)
        return 2
    out = Out(args)
    try:
        code = args.func(args, out)
    except (UsageError, KeyError, DegenerateParameter) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BadReduction as exc:
        print(f"error: bad reduction ({exc})", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        # counts that no zeta function can produce
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
