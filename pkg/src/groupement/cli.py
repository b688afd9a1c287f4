"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a law or axiom is violated
(the report says which), 2 for unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, moore, schema
from .alex import (
    AlexandroffGroupement,
    FiniteTopology,
    check_galex,
    complete,
    find_alexis,
    monoid_hat,
    topology_inter_groupement,
    topology_union_groupement,
)
from .core import (
    AxiomReport,
    ClassicCategory,
    FiniteGroupement,
    NotACategoryError,
    check_axioms,
    check_cat3,
    dual,
    from_classic,
    identities,
    invertibles,
    is_category,
    is_star,
)
from .enumeration import BoundExceeded, EnumerationQuery, enum_structures
from .morph import GMorphism, check_gfonc, check_gmor, dual_gmor
from .search import DEFAULT_CAP, interchange_search
from .trans import GTransformation, check_gtrans
from .twogr import TwoGroupement, check_2gr, gcarres, topology_2gr

FORMAT_ENV = "GROUPEMENT_FORMAT"

OK, VIOLATION, INPUT_ERROR = 0, 1, 2


class _Fail(Exception):
    """Input is readable but unusable for the command; exits with code 2."""


def _emit(args, data: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _compact(value) -> str:
    return json.dumps(schema.dump(value))


def _as_groupement(value) -> FiniteGroupement:
    if isinstance(value, AlexandroffGroupement):
        return value.base
    if isinstance(value, ClassicCategory):
        return from_classic(value)
    if isinstance(value, FiniteGroupement):
        return value
    raise _Fail(f"expected a structure, Alexandroff or category file, got a {type(value).__name__}")


def _report_exit(report: AxiomReport) -> int:
    return OK if report.ok else VIOLATION


def _summary(report: AxiomReport) -> str:
    gr = [k for k in ("GR 1", "GR 2", "GR 3") if k in report.axioms]
    lines = []
    if len(gr) == 3 and all(report.passed(k) for k in gr):
        lines.append("GR 1-3: pass")
        rest = [k for k in report.axioms if k not in gr]
    else:
        rest = list(report.axioms)
    for k in rest:
        v = report.axioms[k]
        lines.append(f"{k}: pass" if v is None else f"{k}: FAIL ({v})")
    return "\n".join(lines)


# -- subcommands --------------------------------------------------------------


def cmd_check(args) -> int:
    value = schema.load(args.file)
    info = {}
    if isinstance(value, (FiniteGroupement, AlexandroffGroupement, ClassicCategory)):
        report = check_axioms(_as_groupement(value))
        if isinstance(value, AlexandroffGroupement):
            report.merge(check_galex(value.base, value.alpha))
    elif isinstance(value, GMorphism):
        report = check_gmor(value)
        info["GFONC 1"] = check_gfonc(value)
        info["g-functor"] = report.ok and info["GFONC 1"]
    elif isinstance(value, GTransformation):
        report = check_gtrans(value)
    elif isinstance(value, TwoGroupement):
        report = check_2gr(value)
    elif isinstance(value, FiniteTopology):
        report = AxiomReport()
        for label, build in (("union", topology_union_groupement), ("intersection", topology_inter_groupement)):
            a = build(value)
            report.merge(check_axioms(a.base), f"{label} ")
            report.merge(check_galex(a.base, a.alpha), f"{label} ")
    else:
        # monoids and cubes are fully validated on load
        report = AxiomReport()
        report.record("well-formed", None)
    text = _summary(report)
    if info:
        text += "\n" + "\n".join(f"{k}: {'yes' if v else 'no'}" for k, v in info.items())
    _emit(args, {"file": args.file, "ok": report.ok, "axioms": report.to_dict(), **info}, text)
    return _report_exit(report)


def cmd_classify(args) -> int:
    g = _as_groupement(schema.load(args.file))
    report = check_axioms(g)
    if not report.ok:
        data = {"groupement": False, "axioms": report.to_dict()}
        _emit(args, data, "groupement: no\n" + _summary(report))
        return VIOLATION
    alexis = find_alexis(g)
    data = {
        "groupement": True,
        "category": is_category(g),
        "star": is_star(g),
        "alexandroff": alexis is not None,
        "alexis": alexis,
        "identities": sorted(identities(g)),
        "invertibles": sorted(invertibles(g)),
    }
    yn = lambda b: "yes" if b else "no"  # noqa: E731
    text = "\n".join([
        "groupement: yes",
        f"category: {yn(data['category'])}",
        f"star: {yn(data['star'])}",
        f"alexandroff: {yn(data['alexandroff'])}" + (f" (alexis {alexis})" if alexis is not None else ""),
        f"identities: {data['identities']}",
        f"invertibles: {data['invertibles']}",
    ])
    _emit(args, data, text)
    return OK


def _require_groupement(args, g: FiniteGroupement) -> int | None:
    report = check_axioms(g)
    if report.ok:
        return None
    _emit(args, {"ok": False, "axioms": report.to_dict()}, _summary(report))
    return VIOLATION


def cmd_dual(args) -> int:
    value = schema.load(args.file)
    if isinstance(value, GMorphism):
        for g in (value.src, value.dst):
            bad = _require_groupement(args, g)
            if bad is not None:
                return bad
        out = dual_gmor(value)
    else:
        g = _as_groupement(value)
        bad = _require_groupement(args, g)
        if bad is not None:
            return bad
        out = dual(g)
    _emit(args, schema.dump(out), _compact(out))
    return OK


def cmd_complete(args) -> int:
    g = _as_groupement(schema.load(args.file))
    bad = _require_groupement(args, g)
    if bad is not None:
        return bad
    out = complete(g)
    _emit(args, schema.dump(out), _compact(out))
    return OK


def cmd_hat(args) -> int:
    m = schema.load(args.file, "monoid")
    out = monoid_hat(m)
    _emit(args, schema.dump(out), _compact(out))
    return OK


def cmd_topo2gr(args) -> int:
    T = schema.load(args.file, "topology")
    tg = topology_2gr(T)
    report = check_2gr(tg)
    data = {"twogr": schema.dump(tg), "ok": report.ok, "axioms": report.to_dict()}
    _emit(args, data, _compact(tg) + "\n" + str(report))
    return _report_exit(report)


def cmd_gcarres(args) -> int:
    g = _as_groupement(schema.load(args.file))
    bad = _require_groupement(args, g)
    if bad is not None:
        return bad
    try:
        tg, sq = gcarres(g)
    except NotACategoryError as e:
        raise _Fail(str(e)) from None
    report = check_2gr(tg)
    report.record("CAT 3 (structure 1)", check_cat3(tg.st1))
    report.record("CAT 3 (structure 2)", check_cat3(tg.st2))
    data = {
        "squares": [list(q) for q in sq],
        "twogr": schema.dump(tg),
        "ok": report.ok,
        "axioms": report.to_dict(),
    }
    text = f"{len(sq)} commuting squares\n{_compact(tg)}\n{report}"
    _emit(args, data, text)
    return _report_exit(report)


def cmd_moore(args) -> int:
    cubes = [schema.load(f, "cube") for f in args.files]
    need = {"compose": 2, "source": 1, "target": 1, "interchange": 4}[args.op]
    if len(cubes) != need:
        raise _Fail(f"moore {args.op} takes {need} cube file(s), got {len(cubes)}")
    try:
        if args.op in ("source", "target"):
            fn = moore.source_i if args.op == "source" else moore.target_i
            out = fn(cubes[0], args.axis)
            _emit(args, schema.dump(out), _compact(out))
            return OK
        if args.op == "compose":
            first, second = cubes
            ok = moore.composable(second, first, args.axis)
            out = moore.compose_i(second, first, args.axis)
            data = {"composable": ok, "cube": schema.dump(out)}
            text = _compact(out) if ok else "not composable; result is the first cube\n" + _compact(out)
            _emit(args, data, text)
            return OK
        holds = moore.check_interchange(*cubes, args.axis, args.axis2)
    except (moore.GuardError, moore.CubeError) as e:
        raise _Fail(str(e)) from None
    _emit(args, {"interchange": holds}, "interchange: " + ("pass" if holds else "FAIL"))
    return OK if holds else VIOLATION


def cmd_enumerate(args) -> int:
    q = EnumerationQuery(args.n, args.cls, args.canonical)
    items = []
    total = 0
    for x in enum_structures(q):
        total += 1
        if args.list:
            items.append(schema.dump(x))
    query = {"n": q.n, "class": q.cls, "canonical": q.canonical}
    data = {"query": query, "count": total, "tool_version": __version__}
    if args.list:
        data["structures"] = items
    text = f"{total} structures (n={q.n}, class={q.cls}, canonical={'yes' if q.canonical else 'no'})"
    if args.list:
        text += "\n" + "\n".join(json.dumps(i) for i in items)
    _emit(args, data, text)
    return OK


def cmd_suite(args) -> int:
    from .suite import theorem_suite

    report = theorem_suite(args.n, seed=args.seed)
    lines = []
    for th in report["theorems"]:
        lines.append(f"{th['status']:>24}  {th['name']} ({th['checked']} checked)")
        if th["status"] == "fail":
            lines.append(f"{'':>26}counterexample: {json.dumps(th['counterexample'])}")
    lines.append("all asserted theorems pass" if report["ok"] else "FAILURES FOUND")
    _emit(args, report, "\n".join(lines))
    return OK if report["ok"] else VIOLATION


def cmd_search(args) -> int:
    report = interchange_search(args.n, cap=args.cap if args.cap is not None else DEFAULT_CAP)
    checks = report["checks"]
    lines = [f"bounds: n={args.n}"]
    for name, c in checks.items():
        lines.append(f"{name}: {c['checked']} checked, {len(c['violations'])} violations")
    p = report["pasting"]
    lines.append(
        f"pasting candidates: {p['well_typed']} well-typed, {p['satisfies_axioms']} satisfy the axioms, "
        f"{len(p['failures'])} fail"
    )
    lines.append(f"outcome: {report['outcome']}")
    _emit(args, report, "\n".join(lines))
    return OK if report["outcome"] == "none within bounds" else VIOLATION


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default=argparse.SUPPRESS,
        help=f"output format (default from ${FORMAT_ENV}, else text)",
    )
    p = argparse.ArgumentParser(
        prog="groupement",
        description="Check, build and enumerate finite groupements and Moore cubes.",
        parents=[common],
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help, parents=[common])
        sp.set_defaults(func=fn)
        return sp

    add("check", cmd_check, "axiom report for any input file").add_argument("file")
    add("classify", cmd_classify, "category / star / Alexandroff flags, identities, invertibles").add_argument("file")
    add("dual", cmd_dual, "dual of a structure or a g-morphism").add_argument("file")
    add("complete", cmd_complete, "adjoin a fresh alexis").add_argument("file")
    add("hat", cmd_hat, "Alexandroff groupement of a monoid").add_argument("file")
    add("topo2gr", cmd_topo2gr, "2-groupement of the open sets of a topology").add_argument("file")
    add("gcarres", cmd_gcarres, "2-groupement of commuting squares of a category").add_argument("file")

    sp = add("moore", cmd_moore, "Moore cube operations")
    sp.add_argument("op", choices=("compose", "source", "target", "interchange"))
    sp.add_argument("files", nargs="+", help="compose: FIRST SECOND (FIRST is traversed first); interchange: C1 C2 C3 C4")
    sp.add_argument("--axis", type=int, default=1, help="axis (1-based)")
    sp.add_argument("--axis2", type=int, default=2, help="second axis for interchange")

    sp = add("enumerate", cmd_enumerate, "count (and list) small structures")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--class", dest="cls", default="groupement",
                    choices=("groupement", "category", "star", "alexandroff", "two-groupement"))
    sp.add_argument("--canonical", action="store_true", help="one representative per almost-equality class")
    sp.add_argument("--list", action="store_true", help="also print every structure")

    sp = add("suite", cmd_suite, "run every law battery up to a carrier bound")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0, help="seed for the sampled Moore checks")

    sp = add("search-interchange", cmd_search, "bounded search for interchange counterexamples")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cap", type=int, default=None, help=f"instance cap (default {DEFAULT_CAP})")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else INPUT_ERROR
    if getattr(args, "format", None) is None:
        env = os.environ.get(FORMAT_ENV, "text")
        args.format = env if env in ("text", "json") else "text"
    try:
        return args.func(args)
    except (schema.InputError, _Fail, BoundExceeded, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
