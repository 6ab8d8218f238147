"""Command-line interface.

Subcommands: ``homology``, ``local``, ``construct``, ``check``, ``mv``,
and ``verify-paper``.  Inputs are facet-list files (``.scx``) or named
builtin complexes; output is a stable text rendering or, with ``--json``,
a machine-readable document.  Exit status 0 on success, 1 on domain
errors (bad file, unknown vertex, failed verification), 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import builtin, builtin_names
from .complexes import SimplicialComplex
from .constructions import cone, disjoint_union, prism_product, wedge
from .errors import LocalhomError
from .homology import (
    HomologySummary,
    homology_of_complex,
    local_homology,
    local_homology_multi,
)
from .mayer_vietoris import MvDecomposition, mv_exactness_check
from .probe import obstruction_report
from .scx import read_complex, write_complex
from .verification import run_checks


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(payload) -> None:
    _emit(json.dumps(payload, indent=2, sort_keys=True))


def _add_input_flags(parser, required=True):
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--builtin", metavar="NAME", help="named complex")
    group.add_argument("--in", dest="in_path", metavar="PATH", help="facet-list file")


def _load_input(args) -> tuple[str, SimplicialComplex]:
    if args.builtin is not None:
        return args.builtin, builtin(args.builtin)
    return args.in_path, read_complex(args.in_path)


def _homology_payload(source: str, summary: HomologySummary) -> dict:
    return {
        "complex": source,
        "reduced": summary.reduced,
        "euler_characteristic": summary.euler_characteristic,
        "groups": summary.records(),
    }


def cmd_homology(args) -> int:
    source, k = _load_input(args)
    summary = homology_of_complex(k, reduced=args.reduced)
    if args.json:
        _emit_json(_homology_payload(source, summary))
        return 0
    for line in summary.lines():
        _emit(line)
    _emit(f"chi = {k.euler_characteristic()}")
    return 0


def cmd_local(args) -> int:
    source, k = _load_input(args)
    if args.vertex is not None:
        summary = local_homology(k, args.vertex)
        subject = {"vertex": args.vertex}
    else:
        labels = [tok for tok in args.vertices.split(",") if tok]
        summary = local_homology_multi(k, labels)
        subject = {"vertices": labels}
    if args.json:
        payload = _homology_payload(source, summary)
        payload.update(subject)
        _emit_json(payload)
        return 0
    for line in summary.lines():
        _emit(line)
    return 0


def cmd_construct(args) -> int:
    primary = (
        builtin(args.builtin) if args.builtin is not None else read_complex(args.in_path)
    )
    secondary = None
    if args.builtin2 is not None:
        secondary = builtin(args.builtin2)
    elif args.in2 is not None:
        secondary = read_complex(args.in2)

    def usage(message: str) -> int:
        sys.stderr.write(f"construct: {message}\n")
        return 2

    if args.kind == "cone":
        if args.apex is None:
            return usage("--kind cone requires --apex LABEL")
        result = cone(primary, args.apex)
    elif args.kind == "wedge":
        if secondary is None or args.v1 is None or args.v2 is None:
            return usage("--kind wedge requires --in2/--builtin2, --v1 and --v2")
        result = wedge(primary, args.v1, secondary, args.v2)
    elif args.kind == "union":
        if secondary is None:
            return usage("--kind union requires --in2 or --builtin2")
        result = disjoint_union(primary, secondary)
    else:  # prism
        result = prism_product(primary).ambient
    write_complex(args.out, result)
    _emit(f"wrote {args.out}")
    return 0


def cmd_check(args) -> int:
    source, k = _load_input(args)
    report = obstruction_report(k)
    if args.json:
        payload = report.records()
        payload["complex"] = source
        _emit_json(payload)
        return 0
    for line in report.lines():
        _emit(line)
    return 0


def cmd_mv(args) -> int:
    k = read_complex(args.in_path)
    a = read_complex(args.a)
    b = read_complex(args.b)
    c = read_complex(args.c) if args.c else None
    d = read_complex(args.d) if args.d else None
    decomposition = MvDecomposition(k, a, b, c, d)
    max_degree = args.max_degree if args.max_degree is not None else k.dim + 1
    report = mv_exactness_check(decomposition, max_degree)
    if args.json:
        _emit_json(report.records())
        return 0
    for line in report.lines():
        _emit(line)
    return 0


def cmd_verify(args) -> int:
    results = run_checks(args.only)
    failed = [r for r in results if not r.passed]
    if args.json:
        _emit_json(
            {
                "passed": not failed,
                "checks": [
                    {
                        "id": r.check_id,
                        "aliases": list(r.aliases),
                        "description": r.description,
                        "passed": r.passed,
                        "details": r.details,
                    }
                    for r in results
                ],
            }
        )
        return 1 if failed else 0
    width = max(len(r.check_id) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        _emit(f"{status}  {r.check_id:<{width}}  {r.details}")
    _emit(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="localhom",
        description=(
            "Exact simplicial homology, local homology, and manifold probing. "
            f"Builtin complexes: {', '.join(builtin_names())}."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", help="homology groups of a complex")
    _add_input_flags(p)
    p.add_argument("--reduced", action="store_true", help="reduced homology")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("local", help="local homology at one or more vertices")
    _add_input_flags(p)
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--vertex", metavar="LABEL")
    target.add_argument(
        "--vertices", metavar="L1,L2,...", help="pairwise non-adjacent vertices"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_local)

    p = sub.add_parser("construct", help="build a complex and write it as .scx")
    p.add_argument(
        "--kind", required=True, choices=("cone", "wedge", "prism", "union")
    )
    _add_input_flags(p)
    second = p.add_mutually_exclusive_group()
    second.add_argument("--in2", metavar="PATH", help="second input file")
    second.add_argument("--builtin2", metavar="NAME", help="second builtin input")
    p.add_argument("--apex", metavar="LABEL", help="apex label for --kind cone")
    p.add_argument("--v1", metavar="LABEL", help="wedge base vertex in the first input")
    p.add_argument("--v2", metavar="LABEL", help="wedge base vertex in the second input")
    p.add_argument("--out", required=True, metavar="PATH")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="manifold obstruction report")
    _add_input_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mv", help="Mayer-Vietoris exactness over the rationals")
    p.add_argument("--in", dest="in_path", required=True, metavar="PATH")
    p.add_argument("--a", required=True, metavar="PATH")
    p.add_argument("--b", required=True, metavar="PATH")
    p.add_argument("--c", metavar="PATH")
    p.add_argument("--d", metavar="PATH")
    p.add_argument("--max-degree", type=int, metavar="K")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mv)

    p = sub.add_parser(
        "verify-paper", help="run the built-in verification suite"
    )
    p.add_argument("--only", metavar="ID", help="run one check by id or alias")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LocalhomError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
