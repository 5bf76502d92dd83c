"""Command-line front end: JSON in on stdin or --in, JSON out on stdout."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .jordan import jordan_decomposition
from .lattice import Lattice, OddLatticeError, discriminant_module
from .module import ENUMERATION_BUDGET, BudgetExceeded, Component, DegenerateModuleError, Fqm
from .oracle import NO, ORACLE_BUDGET, UNKNOWN, YES, IsoResult, invariants_match, iso_oracle
from .realize import realize_components

EXIT_OK, EXIT_NEGATIVE, EXIT_MALFORMED, EXIT_DEGENERATE, EXIT_ODD = 0, 1, 2, 3, 4


class InputError(ValueError):
    pass


def _read_documents(paths) -> list:
    try:
        if not paths:
            return [json.load(sys.stdin)]
        docs = []
        for path in paths:
            with open(path, encoding="utf-8") as fh:
                docs.append(json.load(fh))
        return docs
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read input: {exc}") from None


def _pair(paths) -> tuple:
    docs = _read_documents(paths)
    if len(docs) == 1 and isinstance(docs[0], list) and len(docs[0]) == 2:
        docs = docs[0]
    if len(docs) != 2:
        raise InputError("expected exactly two JSON documents")
    return docs[0], docs[1]


def _module(doc) -> Fqm:
    if not isinstance(doc, dict):
        raise InputError("expected a module object")
    return Fqm.from_json(doc)


def _lattice(doc) -> Lattice:
    if not isinstance(doc, dict):
        raise InputError("expected a lattice object")
    return Lattice.from_json(doc)


def _budget(args, default: int) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("FQM_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"FQM_BUDGET is not an integer: {env!r}") from None
    return default


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _clean(x: float) -> float:
    return round(x, 12) + 0.0


def _compare(m1: Fqm, m2: Fqm, budget: int) -> IsoResult:
    result = iso_oracle(m1, m2, budget)
    if result.verdict == UNKNOWN and not invariants_match(m1, m2, _enum_budget(budget)):
        return IsoResult(NO)
    return result


def _enum_budget(budget: int) -> int:
    return max(budget, ENUMERATION_BUDGET)


def cmd_decompose(args) -> int:
    m = _module(_read_documents(args.inputs)[0])
    _emit([c.to_json() for c in jordan_decomposition(m)])
    return EXIT_OK


def cmd_realize(args) -> int:
    doc = _read_documents(args.inputs)[0]
    if isinstance(doc, list):
        comps = [Component.from_json(d) for d in doc]
    elif isinstance(doc, dict) and "tag" in doc:
        comps = [Component.from_json(doc)]
    else:
        comps = jordan_decomposition(_module(doc))
    _emit(realize_components(comps, posdef=args.positive_definite).to_json())
    return EXIT_OK


def cmd_discriminant(args) -> int:
    disc = discriminant_module(_lattice(_read_documents(args.inputs)[0]))
    _emit({"module": disc.to_json(),
           "components": [c.to_json() for c in jordan_decomposition(disc)]})
    return EXIT_OK


def cmd_sigma(args) -> int:
    m = _module(_read_documents(args.inputs)[0])
    out = {"exp": m.sigma_exact().exp, "numeric": None}
    try:
        z = m.sigma_numeric(_budget(args, ENUMERATION_BUDGET))
        out["numeric"] = [_clean(z.real), _clean(z.imag)]
    except BudgetExceeded:
        pass
    _emit(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    lat_doc, mod_doc = _pair(args.inputs)
    disc = discriminant_module(_lattice(lat_doc))
    result = _compare(disc, _module(mod_doc), _budget(args, ORACLE_BUDGET))
    _emit({"isomorphic": result.verdict})
    return EXIT_OK if result.verdict == YES else EXIT_NEGATIVE


def cmd_iso(args) -> int:
    d1, d2 = _pair(args.inputs)
    result = _compare(_module(d1), _module(d2), _budget(args, ORACLE_BUDGET))
    _emit(result.to_json())
    return EXIT_OK if result.verdict == YES else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fqm", description="Finite quadratic modules and even lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--in", dest="inputs", action="append", metavar="FILE",
                       help="input JSON file (repeatable; default: stdin)")
        p.add_argument("--budget", type=int, default=None,
                       help="element budget for enumeration (overrides FQM_BUDGET)")
        p.set_defaults(func=func)
        return p

    add("decompose", cmd_decompose, "Jordan components of a module")
    realize = add("realize", cmd_realize, "even lattice realizing a module or components")
    realize.add_argument("--positive-definite", action="store_true",
                         help="build a positive-definite lattice")
    add("discriminant", cmd_discriminant, "discriminant module of an even lattice")
    add("sigma", cmd_sigma, "sigma invariant, exact and numeric")
    add("verify", cmd_verify, "check a lattice against a module")
    add("iso", cmd_iso, "isometry test between two modules")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OddLatticeError as exc:
        code, msg = EXIT_ODD, exc
    except DegenerateModuleError as exc:
        code, msg = EXIT_DEGENERATE, exc
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        code, msg = EXIT_MALFORMED, exc
    print(f"fqm: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
