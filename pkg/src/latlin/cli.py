"""Command-line front end.

Exit codes: 0 success, 1 a checked property fails, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from latlin import base, endo, fitting, instances
from latlin.dot import export_dot
from latlin.errors import HypothesisUnmet, InputError, LatticeError, PreimageGap, TopNotAtomJoin
from latlin.gf import GFMatrix
from latlin.io import dumps, endo_to_doc, lattice_to_doc, load_document
from latlin.report import CheckReport

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _show(x, labels):
    return f"{x}[{labels[x]}]" if labels[x] != str(x) else str(x)


def _load_endo(path, jobs):
    L, table = load_document(path)
    if table is None:
        raise InputError(f"{path} holds a lattice, not an endomorphism document")
    report = endo.validate(L, table, jobs=jobs)
    if not report.holds:
        return L, None, report
    return L, endo.JoinEndo(L, table), report


def cmd_validate(args):
    results, text, failed = [], [], False
    for path in args.paths:
        L, table = load_document(path)
        entry = {"path": path, "size": L.size, "bottom": L.bottom, "top": L.top}
        text.append(f"{path}: lattice with {L.size} elements, bottom {_show(L.bottom, L.labels)}, "
                    f"top {_show(L.top, L.labels)}")
        if table is not None:
            report = endo.validate(L, table, jobs=args.jobs)
            entry["endo"] = report.to_json(L.labels)
            text.append("  " + report.describe(L.labels))
            failed |= not report.holds
        results.append(entry)
    return {"command": "validate", "results": results}, text, failed


def cmd_check(args):
    if args.jnb1:
        raise InputError("JNB1 is not defined by this package; only jnb2 and jnb3 are available")
    L, lam, valid = _load_endo(args.path, args.jobs)
    if lam is None:
        return {"command": "check", "validate": valid.to_json(L.labels)}, [valid.describe(L.labels)], True
    which = ["jnb2", "jnb3"]
    if args.jnb2 and not args.jnb3:
        which = ["jnb2"]
    elif args.jnb3 and not args.jnb2:
        which = ["jnb3"]
    out = {"command": "check"}
    text, failed = [], False
    for name in which:
        report = getattr(endo, f"check_{name}")(lam, jobs=args.jobs)
        entry = report.to_json(L.labels)
        text.append(report.describe(L.labels))
        if name == "jnb3" and not report.holds:
            x, t = report.witness
            try:
                endo.jnb3_preimage(lam, x, t)
            except PreimageGap as gap:
                entry["preimage_gap"] = {"candidate": gap.z, "image": lam.table[gap.z]}
                text.append(f"  largest z <= {_show(x, L.labels)} with image <= {_show(t, L.labels)} is "
                            f"{_show(gap.z, L.labels)}, mapping to {_show(lam.table[gap.z], L.labels)}")
        out[name] = entry
        failed |= not report.holds
    return out, text, failed


def cmd_fitting(args):
    L, lam, valid = _load_endo(args.path, args.jobs)
    if lam is None:
        return {"command": "fitting", "validate": valid.to_json(L.labels)}, [valid.describe(L.labels)], True
    try:
        res = fitting.fitting_decomposition(lam, enforce=args.enforce, jobs=args.jobs)
    except HypothesisUnmet as exc:
        rep = exc.report if exc.report is not None else CheckReport.fail("hypothesis", which=exc.which)
        return ({"command": "fitting", "hypothesis_unmet": exc.which, "report": rep.to_json(L.labels)},
                [f"hypothesis unmet: {rep.describe(L.labels)}"], True)
    lab = L.labels
    text = [
        f"k = {res.k} (image chain stabilises), l = {res.l} (kernel chain stabilises), r = {res.r}",
        "image chain:  " + " > ".join(_show(x, lab) for x in res.im_chain),
        "kernel chain: " + " < ".join(_show(x, lab) for x in res.ker_chain),
        f"im(lam^{res.r}) = {_show(res.im_r, lab)}, ker(lam^{res.r}) = {_show(res.ker_r, lab)}",
        f"join is top: {res.join_ok}, meet is bottom: {res.meet_ok}",
    ]
    if res.minimal_r is not None and res.minimal_r != res.r:
        text.append(f"note: the split already holds at r' = {res.minimal_r}")
    return {"command": "fitting", "enforce": args.enforce, "result": res.to_json(lab)}, text, False


def cmd_base(args):
    L, lam, valid = _load_endo(args.path, args.jobs)
    if lam is None:
        return {"command": "base", "validate": valid.to_json(L.labels)}, [valid.describe(L.labels)], True
    try:
        rn = base.rank_nullity_report(lam)
    except (HypothesisUnmet, TopNotAtomJoin) as exc:
        return {"command": "base", "error": type(exc).__name__, "message": str(exc)}, [str(exc)], True
    lab = L.labels
    names = lambda ids: "[" + ", ".join(_show(x, lab) for x in ids) + "]"
    lifts = rn.base.order[rn.q:]
    text = [
        f"image   w = {_show(endo.image(lam), lab)}: minimal base {names(rn.image_base.order)}",
        f"kernel  z = {_show(endo.kernel(lam), lab)}: minimal base {names(rn.kernel_base.order)}",
        f"lifted image atoms: {names(lifts)}",
        f"atomic base of the lattice: {names(rn.base.order)}",
        f"p + q = {rn.p} + {rn.q} = {rn.p + rn.q}",
    ]
    if rn.graded:
        text.append(f"height(top) = {rn.height}")
    return {"command": "base", "result": rn.to_json()}, text, False


def _parse_int_list(text):
    return [int(v) for v in text.replace(" ", "").split(",") if v]


def _parse_partial_map(text):
    out = {}
    for item in text.replace(" ", "").split(","):
        if not item:
            continue
        a, _, b = item.partition(":")
        out[int(a)] = int(b)
    return out


def cmd_gen(args):
    fam, params = args.family.lower(), args.params
    need = lambda i: int(params[i]) if len(params) > i else _missing(fam)
    if fam in ("gf", "subspace"):
        sl = instances.subspace_lattice(need(0), need(1), cap=args.cap)
        if args.matrix is None:
            return lattice_to_doc(sl.lattice)
        A = GFMatrix.from_json(json.loads(args.matrix))
        return endo_to_doc(instances.induced_endo(sl, A), matrix=A.to_json())
    if fam == "powerset":
        n = need(0)
        lam = instances.powerset_endo(n, _parse_partial_map(args.map or ""))
        return endo_to_doc(lam, function={str(k): v for k, v in sorted(_parse_partial_map(args.map or "").items())})
    if fam in ("chain", "boolean"):
        L = instances.standard_lattice(fam, need(0))
    elif fam in ("m3", "n5"):
        L = instances.standard_lattice(fam)
    else:
        raise InputError(f"unknown family {fam!r}; use chain, boolean, m3, n5, gf or powerset")
    if args.map is None:
        return lattice_to_doc(L)
    if args.map == "identity":
        table = list(range(L.size))
    elif args.map == "zero":
        table = [L.bottom] * L.size
    else:
        table = _parse_int_list(args.map)
    return endo_to_doc(endo.make_endo(L, table))


def _missing(fam):
    raise InputError(f"family {fam!r} needs more parameters")


def cmd_export_dot(args):
    L, _ = load_document(args.path)
    return export_dot(L)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for checker scans")
    common.add_argument("--cap", type=int, default=instances.DEFAULT_CAP, help="instance size cap")

    parser = argparse.ArgumentParser(prog="latlin", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="build lattices and validate maps")
    p.add_argument("paths", nargs="+")

    p = sub.add_parser("check", parents=[common], help="JNB2/JNB3 checks")
    p.add_argument("path")
    p.add_argument("--jnb2", action="store_true")
    p.add_argument("--jnb3", action="store_true")
    p.add_argument("--jnb1", action="store_true", help=argparse.SUPPRESS)

    p = sub.add_parser("fitting", parents=[common], help="Fitting decomposition")
    p.add_argument("path")
    p.add_argument("--no-enforce", dest="enforce", action="store_false")

    p = sub.add_parser("base", parents=[common], help="atomic bases and rank-nullity")
    p.add_argument("path")

    p = sub.add_parser("gen", parents=[common], help="emit lattice or endomorphism JSON")
    p.add_argument("family", help="chain K | boolean K | m3 | n5 | gf P N | powerset N")
    p.add_argument("params", nargs="*")
    p.add_argument("--matrix", help='for gf: {"p": P, "rows": [[...], ...]}')
    p.add_argument("--map", help="table '0,0,3,3', 'identity', 'zero'; for powerset a partial map '1:1,2:1'")
    p.add_argument("-o", "--output")

    p = sub.add_parser("export-dot", parents=[common], help="Hasse diagram as DOT")
    p.add_argument("path")
    return parser


_REPORTERS = {"validate": cmd_validate, "check": cmd_check, "fitting": cmd_fitting, "base": cmd_base}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.jobs < 1 or args.cap < 1:
        print("error: --jobs and --cap must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.command == "gen":
            text = dumps(cmd_gen(args))
            if args.output:
                with open(args.output, "w") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return EXIT_OK
        if args.command == "export-dot":
            sys.stdout.write(cmd_export_dot(args))
            return EXIT_OK
        doc, text, failed = _REPORTERS[args.command](args)
    except InputError as exc:
        return _input_error(args, exc)
    except LatticeError as exc:
        return _input_error(args, exc, EXIT_FAIL)
    except ValueError as exc:
        # unparsable numbers or matrix JSON on the command line
        return _input_error(args, exc)
    doc["status"] = "fail" if failed else "ok"
    if args.format == "json":
        sys.stdout.write(dumps(doc))
    else:
        sys.stdout.write("\n".join(text) + "\n")
    return EXIT_FAIL if failed else EXIT_OK


def _input_error(args, exc, code=EXIT_INPUT):
    if getattr(args, "format", "text") == "json" and args.command not in ("gen", "export-dot"):
        sys.stdout.write(dumps({"command": args.command, "error": type(exc).__name__, "message": str(exc),
                                "status": "error"}))
    print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
