"""Command-line front end.

Subcommands: invariants, classify, verify, gen, sweep.  Exit codes: 0 for a
passing verification (and for plain queries), 1 when hypotheses hold but a
conclusion fails, 2 when hypotheses are not met, 64 for usage errors and
malformed input files.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus import generate
from .facetfile import FacetFileError, load_complex, render_facet_text
from .homology import betti_numbers, classify
from .vectors import h_from_f, short_h_from_f
from .verify import VERIFIERS

USAGE_ERROR = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ubckit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="print f, h, short-h, Betti and skeleton Euler data")
    p.add_argument("file")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("classify", help="print the classification report")
    p.add_argument("file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="verify one statement on one complex")
    p.add_argument("statement", choices=sorted(VERIFIERS))
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="generate a named complex")
    p.add_argument("spec", nargs="+", help="e.g. cyclic 4 9 or 'suspension(torus-7)'")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("sweep", help="verify one statement on every .json file in a directory")
    p.add_argument("statement", choices=sorted(VERIFIERS))
    p.add_argument("directory")
    p.set_defaults(func=_cmd_sweep)

    return parser


def _invariants_dict(name, sc) -> dict:
    f = sc.f_vector()
    out = {
        "name": name,
        "dimension": sc.dim,
        "pure": sc.is_pure,
        "f_vector": list(f.entries),
        "h_vector": list(h_from_f(f).entries),
    }
    out["short_h_vector"] = list(short_h_from_f(f).entries) if sc.is_pure else "not-applicable"
    out["betti"] = list(betti_numbers(sc).entries)
    out["partial_euler"] = [sc.chi_partial(i) for i in range(0, sc.dim + 1)]
    out["euler_characteristic"] = sc.euler_characteristic()
    return out


def _print_json(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _cmd_invariants(args) -> int:
    name, sc = load_complex(args.file)
    _print_json(_invariants_dict(name, sc))
    return 0


def _cmd_classify(args) -> int:
    name, sc = load_complex(args.file)
    _print_json({"name": name, **classify(sc).to_json_dict()})
    return 0


def _cmd_verify(args) -> int:
    name, sc = load_complex(args.file)
    report = VERIFIERS[args.statement](sc)
    _print_json({"name": name, **report.to_json_dict()})
    return report.exit_code


def _cmd_gen(args) -> int:
    name, sc = generate(" ".join(args.spec))
    text = render_facet_text(name, sc)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


_SEVERITY = {"pass": 0, "hypotheses-not-met": 1, "fail": 2, "error": 3}
_EXIT_FOR = {"pass": 0, "hypotheses-not-met": 2, "fail": 1, "error": USAGE_ERROR}


def _cmd_sweep(args) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        raise FacetFileError(f"{directory} is not a directory")
    files = sorted(directory.glob("*.json"))
    if not files:
        raise FacetFileError(f"no .json facet files in {directory}")
    verifier = VERIFIERS[args.statement]
    counts = {"pass": 0, "fail": 0, "hypotheses-not-met": 0, "error": 0}
    width = max(len(f.name) for f in files)
    for path in files:
        try:
            _, sc = load_complex(path)
            outcome = verifier(sc).overall
        except (FacetFileError, ValueError) as e:
            outcome = "error"
            sys.stdout.write(f"{path.name:<{width}}  error: {e}\n")
        else:
            sys.stdout.write(f"{path.name:<{width}}  {outcome}\n")
        counts[outcome] += 1
    summary = ", ".join(f"{counts[key]} {key}" for key in ("pass", "fail", "hypotheses-not-met", "error"))
    sys.stdout.write(f"# {args.statement}: {summary} ({len(files)} files)\n")
    worst = max(counts, key=lambda key: (_SEVERITY[key] if counts[key] else -1))
    return _EXIT_FOR[worst] if counts[worst] else 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        sys.stderr.write(f"ubckit: error: {e}\n")
        return USAGE_ERROR
    try:
        return args.func(args)
    except FacetFileError as e:
        sys.stderr.write(f"ubckit: {e}\n")
        return USAGE_ERROR
    except ValueError as e:
        sys.stderr.write(f"ubckit: error: {e}\n")
        return USAGE_ERROR


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
