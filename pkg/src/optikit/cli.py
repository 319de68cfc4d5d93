"""Command line entry point.

Loads JSON specifications, dispatches to the module operations, runs law
suites, and emits deterministic reports.  Exit codes: 0 when every check
passes, 1 on a law or validation failure, 2 on malformed input.

Report output is byte-identical across runs for fixed inputs and flags;
configuration is by flags only.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as oio
from .coend import WitnessError, coend
from .fincat import FinCatError, validate_category
from .io import FormatError
from .kan import kan_composition_check, left_kan
from .laws import Corpus, bundle_corpus, coverage_map, run_suites, suite_names
from .optics import (
    compose_set_optics,
    lens_abstract,
    lens_concretize,
    prism_abstract,
    prism_concretize,
)
from .poly import (
    canonical_sets,
    compose_polylens,
    enumerate_polylenses,
    eval_poly,
    nat_oracle,
    ommatidium_to_polylens,
)
from .prof import prof_action, prof_compose


def _emit(args, lines: list[str], payload: dict) -> None:
    """Print the text report, or its JSON form under --json."""
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    doc = oio.load_json(args.file)
    c = oio.category_from_json(doc, Path(args.file).stem)
    rep = validate_category(c)
    if rep.ok:
        lines = [f"check: PASS ({len(c.objects)} objects, {len(c.morphisms)} morphisms)"]
    else:
        lines = [f"check: FAIL ({v})" for v in rep.violations]
    _emit(args, lines, {"ok": rep.ok, "violations": list(rep.violations)})
    return 0 if rep.ok else 1


def cmd_coend(args) -> int:
    doc = oio.load_json(args.file)
    d = oio.bifunctor_from_json(doc, Path(args.file).stem)
    q = coend(d)
    lines = [f"coend: {len(q.carrier)} classes"]
    classes = {}
    for rep in q.carrier:
        members = [[obj, elem] for obj, elem in q.members(rep)]
        classes[rep] = members
        rendered = ", ".join(f"({obj}, {elem})" for obj, elem in q.members(rep))
        lines.append(f"  {rep} = {{{rendered}}}")
    _emit(args, lines, {"carrier": list(q.carrier.elements), "classes": classes})
    return 0


def cmd_kan(args) -> int:
    f = oio.copresheaf_from_json(oio.load_json(args.copresheaf), Path(args.copresheaf).stem)
    p = oio.functor_from_json(oio.load_json(args.functor), Path(args.functor).stem)
    lan = left_kan(f, p)
    lines = []
    fibers = {}
    for b in p.target.objects:
        elems = list(lan.copresheaf.at(b).elements)
        fibers[b] = elems
        lines.append(f"Lan({b}) = {{{', '.join(elems)}}}")
    payload: dict = {"fibers": fibers}
    code = 0
    if args.check_composition is not None:
        q = oio.functor_from_json(
            oio.load_json(args.check_composition), Path(args.check_composition).stem
        )
        try:
            kan_composition_check(f, p, q)
            lines.append("kan/composition: PASS (natural isomorphism verified)")
            payload["composition"] = "pass"
        except WitnessError as e:
            lines.append(f"kan/composition: FAIL ({e})")
            payload["composition"] = f"fail: {e}"
            code = 1
    _emit(args, lines, payload)
    return code


def cmd_prof(args) -> int:
    corpus = Corpus(args.corpus) if getattr(args, "corpus", None) else Corpus()
    if args.prof_cmd == "laws":
        return _run_laws(args, corpus, ["prof", "pi"])
    if args.prof_cmd == "compose":
        p = oio.profunctor_from_json(oio.load_json(args.left), Path(args.left).stem)
        q = oio.profunctor_from_json(oio.load_json(args.right), Path(args.right).stem)
        r = prof_compose(p, q)
        lines = [f"compose: {p.name} <> {q.name}"]
        fibers = {}
        for n in r.source.objects:
            for k in r.target.objects:
                elems = list(r.at(n, k).elements)
                fibers[f"{n},{k}"] = elems
                lines.append(f"  ({n}, {k}): {len(elems)} elements")
        _emit(args, lines, {"fibers": fibers})
        return 0
    p = oio.profunctor_from_json(oio.load_json(args.left), Path(args.left).stem)
    a = oio.copresheaf_from_json(oio.load_json(args.right), Path(args.right).stem)
    pa = prof_action(p, a)
    lines = [f"act: {p.name} . {a.name}"]
    fibers = {}
    for k in p.target.objects:
        elems = list(pa.at(k).elements)
        fibers[k] = elems
        lines.append(f"  {k}: {len(elems)} elements")
    _emit(args, lines, {"fibers": fibers})
    return 0


def _load_set_optic(path: str):
    doc = oio.load_json(path)
    kind = oio.optic_kind(doc)
    if kind == "lens":
        return lens_abstract(oio.lens_from_json(doc, Path(path).stem))
    return prism_abstract(oio.prism_from_json(doc, Path(path).stem))


def cmd_optic(args) -> int:
    corpus = Corpus(args.corpus) if getattr(args, "corpus", None) else Corpus()
    if args.optic_cmd == "laws":
        suites = {
            "exact": ["optic-exact"],
            "normalform": ["optic-normalform"],
        }[args.regime]
        return _run_laws(args, corpus, suites)
    if args.optic_cmd == "normalize":
        o = _load_set_optic(args.file)
        doc = (
            oio.lens_to_json(lens_concretize(o))
            if o.kind == "lens"
            else oio.prism_to_json(prism_concretize(o))
        )
        print(oio.dump_json(doc), end="")
        return 0
    o1 = _load_set_optic(args.inner)
    o2 = _load_set_optic(args.outer)
    composite = compose_set_optics(o1, o2)
    doc = (
        oio.lens_to_json(lens_concretize(composite))
        if composite.kind == "lens"
        else oio.prism_to_json(prism_concretize(composite))
    )
    print(oio.dump_json(doc), end="")
    return 0


def cmd_poly(args) -> int:
    if args.poly_cmd == "eval":
        p = oio.poly_from_json(oio.load_json(args.file), Path(args.file).stem)
        y = canonical_sets(args.size)[args.size]
        elems = list(eval_poly(p, y).elements)
        _emit(args, [f"{p.name}({args.size}) = {{{', '.join(elems)}}}"], {"elements": elems})
        return 0
    if args.poly_cmd == "nats":
        p = oio.poly_from_json(oio.load_json(args.source), Path(args.source).stem)
        q = oio.poly_from_json(oio.load_json(args.target), Path(args.target).stem)
        lenses = enumerate_polylenses(p, q)
        lines = [f"nats: {len(lenses)} natural transformations"]
        tables = [oio.polylens_to_json(l) for l in lenses]
        for l in lenses:
            lines.append(f"  {l.key()}")
        _emit(args, lines, {"count": len(lenses), "lenses": tables})
        return 0
    if args.poly_cmd == "oracle":
        p = oio.poly_from_json(oio.load_json(args.source), Path(args.source).stem)
        q = oio.poly_from_json(oio.load_json(args.target), Path(args.target).stem)
        max_dir = max((len(p.directions[n]) for n in p.index), default=0)
        y_max = args.y_max if args.y_max is not None else max_dir + 1
        count, _ = nat_oracle(p, q, y_max)
        _emit(args, [f"oracle: {count} natural transformations (y_max={y_max})"],
              {"count": count, "y_max": y_max})
        return 0
    if args.poly_cmd == "compose":
        l1 = oio.polylens_from_json(oio.load_json(args.inner), Path(args.inner).stem)
        l2 = oio.polylens_from_json(oio.load_json(args.outer), Path(args.outer).stem)
        print(oio.dump_json(oio.polylens_to_json(compose_polylens(l1, l2))), end="")
        return 0
    o = oio.ommatidium_from_json(oio.load_json(args.file), Path(args.file).stem)
    print(oio.dump_json(oio.polylens_to_json(ommatidium_to_polylens(o))), end="")
    return 0


def _run_laws(args, corpus: Corpus, only: list[str] | None) -> int:
    reports = run_suites(corpus, max_card=args.max_card, only=only)
    lines = []
    payload = []
    for rep in reports:
        for r in rep.results:
            lines.append(r.line())
        payload.append(
            {
                "suite": rep.name,
                "description": rep.description,
                "laws": [
                    {"law": r.law, "ok": r.ok, "detail": r.detail} for r in rep.results
                ],
            }
        )
    ok = all(rep.ok for rep in reports)
    lines.append(f"result: {'PASS' if ok else 'FAIL'}")
    _emit(args, lines, {"suites": payload, "ok": ok})
    return 0 if ok else 1


def cmd_laws(args) -> int:
    corpus = Corpus(args.corpus) if args.corpus else Corpus()
    only = args.suite if args.suite else (None if args.all else None)
    if not args.all and not args.suite:
        print("laws: nothing selected (use --all or --suite)", file=sys.stderr)
        return 2
    return _run_laws(args, corpus, only)


def cmd_corpus(args) -> int:
    root = bundle_corpus()
    loaders = {
        "cat": (oio.category_from_json, oio.category_to_json),
        "fun": (oio.functor_from_json, oio.functor_to_json),
        "cop": (oio.copresheaf_from_json, oio.copresheaf_to_json),
        "prof": (oio.profunctor_from_json, oio.profunctor_to_json),
        "poly": (oio.poly_from_json, oio.poly_to_json),
        "lens": (oio.lens_from_json, oio.lens_to_json),
        "prism": (oio.prism_from_json, oio.prism_to_json),
    }
    lines = []
    ok = True
    for path in sorted(root.glob("*.json")):
        prefix = path.stem.split("_", 1)[0]
        load, dump = loaders[prefix]
        value = load(oio.load_json(path), path.stem)
        round_tripped = oio.dump_json(dump(value)) == path.read_text()
        if not round_tripped:
            ok = False
        status = "PASS" if round_tripped else "FAIL"
        lines.append(f"corpus/{path.stem}: {status} (serialize∘parse round trip)")
    lines.append("coverage:")
    for suite, prefixes in coverage_map():
        lines.append(f"  {suite}: {', '.join(prefixes)}")
    _emit(
        args,
        lines,
        {"ok": ok, "coverage": {s: p for s, p in coverage_map()}},
    )
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument(
        "--max-card", type=int, default=4, help="brute-force size bound (default 4)"
    )

    parser = argparse.ArgumentParser(
        prog="optikit", description="Executable finite category theory."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="validate a category file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("coend", parents=[common], help="coend of a bifunctor file")
    p.add_argument("file")
    p.set_defaults(func=cmd_coend)

    p = sub.add_parser("kan", parents=[common], help="left Kan extension")
    p.add_argument("copresheaf")
    p.add_argument("functor")
    p.add_argument(
        "--check-composition",
        metavar="SECOND_FUNCTOR",
        help="verify Lan along the composite against iterated Lan",
    )
    p.set_defaults(func=cmd_kan)

    p = sub.add_parser("prof", parents=[common], help="profunctor operations")
    psub = p.add_subparsers(dest="prof_cmd", required=True)
    pc = psub.add_parser("compose", parents=[common])
    pc.add_argument("left")
    pc.add_argument("right")
    pa = psub.add_parser("act", parents=[common])
    pa.add_argument("left")
    pa.add_argument("right")
    pl = psub.add_parser("laws", parents=[common])
    pl.add_argument("--corpus")
    p.set_defaults(func=cmd_prof)

    p = sub.add_parser("optic", parents=[common], help="simple optics")
    osub = p.add_subparsers(dest="optic_cmd", required=True)
    oc = osub.add_parser("compose", parents=[common])
    oc.add_argument("inner")
    oc.add_argument("outer")
    on = osub.add_parser("normalize", parents=[common])
    on.add_argument("file")
    ol = osub.add_parser("laws", parents=[common])
    ol.add_argument(
        "--regime", choices=["exact", "normalform"], default="normalform"
    )
    ol.add_argument("--corpus")
    p.set_defaults(func=cmd_optic)

    p = sub.add_parser("poly", parents=[common], help="polynomial functors")
    ysub = p.add_subparsers(dest="poly_cmd", required=True)
    ye = ysub.add_parser("eval", parents=[common])
    ye.add_argument("file")
    ye.add_argument("size", type=int)
    yn = ysub.add_parser("nats", parents=[common])
    yn.add_argument("source")
    yn.add_argument("target")
    yo = ysub.add_parser("oracle", parents=[common])
    yo.add_argument("source")
    yo.add_argument("target")
    yo.add_argument("--y-max", type=int, default=None)
    yc = ysub.add_parser("compose", parents=[common])
    yc.add_argument("inner")
    yc.add_argument("outer")
    ym = ysub.add_parser("normalize", parents=[common])
    ym.add_argument("file")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("laws", parents=[common], help="run law suites")
    p.add_argument("--all", action="store_true", help="run every suite")
    p.add_argument(
        "--suite", action="append", choices=suite_names(), help="run one suite"
    )
    p.add_argument("--corpus", help="corpus directory (default: bundled)")
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser(
        "corpus", parents=[common], help="verify the bundled corpus and coverage"
    )
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as e:
        print(f"error: malformed JSON: {e}", file=sys.stderr)
        return 2
    except FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (FinCatError, WitnessError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
