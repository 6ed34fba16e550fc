"""Command-line interface: ``srlkit <command> ...``; see ``srlkit --help``."""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Optional

from . import fixtures as fx
from .algebra import FiniteAlgebra, load_algebra, load_lattice
from .calculi import check_proof, fixture_suite, load_proof
from .classes import CLASS_TAGS, check_class
from .enumerate import enumerate_class
from .filters import build_upset_algebra, verify_representation
from .order import SizeCapExceeded
from .pairs import AlgebraPair, NoMaximum, build_implication, build_srs_pair, two_srl
from .semantics import entails, find_countermodel, shrink
from .suite import run_suite


class CliError(Exception):
    pass


def _emit(args, doc: dict, text: Optional[str] = None):
    if args.json or text is None:
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        print(text)


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise CliError(f"{path} is not valid JSON: {e}") from None


def _algebra(args) -> FiniteAlgebra:
    if getattr(args, "fixture", None):
        try:
            return fx.get(args.fixture)
        except KeyError as e:
            raise CliError(e.args[0]) from None
    if getattr(args, "algebra", None):
        return load_algebra(_read_json(args.algebra))[0]
    raise CliError("give --fixture NAME or --algebra FILE")


# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    A = _algebra(args)
    v = check_class(A, args.cls)
    doc = v.to_json(A)
    lines = [f"{args.cls}: {'member' if v.member else 'not a member'}"]
    lines += [f"  violates {lab} at {tuple(A.name(i) for i in w)}" for lab, w in v.violations]
    _emit(args, doc, "\n".join(lines))
    if args.expect_fail:
        return 0 if not v.member else 1
    return 0 if v.member else 1


def cmd_build_pair(args) -> int:
    L, names, D = load_lattice(_read_json(args.lattice))
    if args.d is not None:
        D = frozenset(int(x) for x in args.d.split(",") if x.strip())
    if args.mode == "2srl":
        A = two_srl(L)
    else:
        if D is None:
            raise CliError("give --d or a D field in the lattice file")
        p = AlgebraPair(L, D)
        A = build_srs_pair(p) if args.mode == "srs" else build_implication(p)
    if names:
        A = A.with_names(names)
    _emit(args, A.to_json(D=A.box_set()), A.format_table())
    return 0


def cmd_represent(args) -> int:
    A = _algebra(args)
    if args.verify:
        rep = verify_representation(A, args.kind)
        _emit(args, rep, "\n".join(f"{k}: {v}" for k, v in rep.items()))
        return 0 if rep["passed"] else 1
    ua = build_upset_algebra(A, args.kind)
    doc = {"kind": args.kind, "filters": len(ua.filters), "upsets": ua.upset_lattice.size,
           "D": len(ua.D), "j": list(ua.j)}
    _emit(args, doc, "\n".join(f"{k}: {v}" for k, v in doc.items()))
    return 0


def cmd_enumerate(args) -> int:
    found = enumerate_class(args.size, args.cls, up_to_iso=not args.labelled, cap=args.cap)
    if args.sample is not None and args.sample < len(found):
        rng = random.Random(args.seed)
        keep = sorted(rng.sample(range(len(found)), args.sample))
        found = [found[i] for i in keep]
    doc = {"class": args.cls, "size": args.size, "up_to_iso": not args.labelled,
           "count": len(found), "algebras": [A.to_json() for A in found]}
    text = f"{len(found)} algebras of size {args.size} in {args.cls}"
    if args.show:
        text += "\n" + "\n\n".join(A.format_table() for A in found)
    _emit(args, doc, text)
    return 0


def cmd_check_proof(args) -> int:
    try:
        p = load_proof(_read_json(args.file))
    except (KeyError, ValueError) as e:
        raise CliError(f"bad proof file: {e}") from None
    v = check_proof(p.calculus, p)
    text = f"{p.calculus}: {'valid' if v.valid else 'invalid'}"
    text += "".join(f"\n  line {k}: {msg}" for k, msg in v.errors)
    _emit(args, dict(v.to_json(), calculus=p.calculus), text)
    return 0 if v.valid else 1


def _countermodel_text(cm) -> str:
    A = cm.algebra
    val = ", ".join(f"{k} = {v}" for k, v in cm.valuation.to_json().items())
    return (f"refuted in a {cm.cls} algebra of size {A.size}: {val} gives {A.name(cm.value)}\n"
            + A.format_table())


def cmd_countermodel(args) -> int:
    cm = find_countermodel(args.formula, args.cls, args.max_size, cap=args.cap)
    if cm is None:
        doc = {"verdict": "no-countermodel-up-to", "bound": args.max_size}
        _emit(args, doc, f"no countermodel in {args.cls} up to size {args.max_size}")
        return 1
    if args.shrink:
        cm = shrink(cm)
    _emit(args, cm.to_json(), _countermodel_text(cm))
    return 0


def cmd_entails(args) -> int:
    res = entails(args.hyp or [], args.goal, args.cls, args.max_size, cap=args.cap)
    if res.refuted:
        _emit(args, res.to_json(), _countermodel_text(res.countermodel))
    else:
        _emit(args, res.to_json(), f"no countermodel in {args.cls} up to size {args.max_size}")
    return 0


def cmd_paper_suite(args) -> int:
    results = run_suite(args.only)
    doc = {"passed": all(r.ok for r in results), "criteria": [r.to_json() for r in results]}
    _emit(args, doc, "\n".join(r.line() for r in results))
    return 0 if doc["passed"] else 1


def cmd_fixtures(args) -> int:
    if args.action == "list":
        doc = {"algebras": {k: fx.EXPECTED.get(k, {}) for k in fx.ALGEBRAS},
               "proofs": {n: p.calculus for n, p in fixture_suite()}}
        text = "\n".join([f"algebra {k}" for k in fx.ALGEBRAS] + [f"proof {n} ({p.calculus})"
                                                                  for n, p in fixture_suite()])
        _emit(args, doc, text)
        return 0
    out = Path(args.dir)
    (out / "algebras").mkdir(parents=True, exist_ok=True)
    (out / "proofs").mkdir(parents=True, exist_ok=True)
    for name in fx.ALGEBRAS:
        A = fx.get(name)
        (out / "algebras" / f"{name}.json").write_text(json.dumps(A.to_json(), indent=2) + "\n")
    for name, p in fixture_suite():
        (out / "proofs" / f"{name}.json").write_text(json.dumps(p.to_json(), indent=2, ensure_ascii=False) + "\n")
    _emit(args, {"dir": str(out)}, f"wrote fixtures to {out}")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    common.add_argument("--max-size", type=int, default=argparse.SUPPRESS,
                        help="largest carrier to search (default 4)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for random sampling")

    ap = argparse.ArgumentParser(prog="srlkit", parents=[common],
                                 description="Finite algebras and calculi for subresiduated lattices.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    def algebra_source(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--fixture", help=f"one of {', '.join(fx.ALGEBRAS)}")
        g.add_argument("--algebra", help="algebra JSON file")

    p = add("check", cmd_check, "check class membership")
    algebra_source(p)
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_TAGS)
    p.add_argument("--expect-fail", action="store_true", help="exit 0 exactly when the check fails")

    p = add("build-pair", cmd_build_pair, "build the implication of a pair (L, D)")
    p.add_argument("--lattice", required=True, help="lattice JSON file (leq or meet/join)")
    p.add_argument("--d", help="comma-separated elements of D")
    p.add_argument("--mode", choices=("srl", "srs", "2srl"), default="srl")

    p = add("represent", cmd_represent, "filter representation of an algebra")
    algebra_source(p)
    p.add_argument("--kind", choices=("implicative", "lattice"), default="implicative")
    p.add_argument("--verify", action="store_true")

    p = add("enumerate", cmd_enumerate, "enumerate a class at one size")
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_TAGS)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--labelled", action="store_true", help="skip the final isomorphism reduction")
    p.add_argument("--cap", type=int, help="override the size cap")
    p.add_argument("--sample", type=int, help="report a random sample of this many")
    p.add_argument("--show", action="store_true", help="print the tables")

    p = add("check-proof", cmd_check_proof, "check a proof script")
    p.add_argument("file")

    p = add("countermodel", cmd_countermodel, "search a class for a countermodel")
    p.add_argument("--formula", required=True)
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_TAGS)
    p.add_argument("--cap", type=int)
    p.add_argument("--shrink", action="store_true", help="apply the finite-model construction")

    p = add("entails", cmd_entails, "bounded semantic entailment")
    p.add_argument("--hyp", action="append")
    p.add_argument("--goal", required=True)
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_TAGS)
    p.add_argument("--cap", type=int)

    p = add("paper-suite", cmd_paper_suite, "run the acceptance suite")
    p.add_argument("--only", type=int, action="append", choices=range(1, 9), metavar="N")

    p = add("fixtures", cmd_fixtures, "list or export built-in fixtures")
    p.add_argument("action", choices=("list", "export"))
    p.add_argument("--dir", default="fixtures-out")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for name, default in (("json", False), ("max_size", 4), ("seed", 0)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (CliError, SizeCapExceeded, NoMaximum, KeyError, ValueError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        print(f"srlkit: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
