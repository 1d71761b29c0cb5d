"""Command-line front end: vertex-degree-function indices, their bounds on chemical graphs, and exhaustive checks.

Run "vdfi -h" (or "python VdfiCLI.py -h") for the list of subcommands, and "vdfi <subcommand> -h" for their flags.
Reports go to standard output; diagnostics go to standard error prefixed with [ERROR]."""

import argparse
import io
import os
import sys
from enum import Enum

import pandas as pd

from BoundVerifier import (
    LEMMA1_MAX_TOTAL,
    ChemGraphEnumerator,
    ensure_cache_dir,
    parse_n_range,
    sweep,
    verify_bound,
    verify_lemma1,
)
from ChemGraph import degree_vector
from DegreeFunctions import DEFAULT_TOLERANCE, Family, classify, classify_xi, parse_function_spec
from ExtremalGraphs import construct_extremal, witness_edge_list
from graphfiles import reader as graphreader
from graphfiles.writer import to_graph6, to_json
from TheoremBounds import theorem1_bound, theorem3_bound
from TopologicalIndices import gamma_f, h_f, ti_pair

CACHE_DIR_ENV = "VDFI_CACHE_DIR"

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2

_FAMILY_ERROR = "Unknown family '%s': expected one of %s."
_PARAMS_ERROR = "Malformed parameter list '%s': expected comma-separated numbers."


def parseArguments(argv=None):
    parser = argparse.ArgumentParser(prog="vdfi", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="json", help="Report format, default: json.")
    common.add_argument(
        "--cache-dir",
        help="Directory for enumeration cache files (one per n,m). The %s environment variable overrides it." % CACHE_DIR_ENV,
    )
    common.add_argument("--workers", type=int, default=1, help="Worker processes for enumeration, default: 1.")
    common.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE, help="Classification tolerance, default: %g." % DEFAULT_TOLERANCE)
    subparsers = parser.add_subparsers(dest="command", required=True)

    index = subparsers.add_parser("index", parents=[common], help="H_f, Gamma_f, TI and its coindex of given graph(s).")
    source = index.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", help="A graph6 record, or the name of a file with graph6 records or an edge list.")
    source.add_argument("--edge-list", help="A file with 'u v' lines (0-based vertex labels).")
    index.add_argument("--f", required=True, help='Function spec, e.g. "power:2", "sei:2", "fbar:11", "table:1,2,3,4".')

    classify_cmd = subparsers.add_parser("classify", parents=[common], help="xi1, xi2 and the case of a function.")
    classify_cmd.add_argument("--f", required=True, help="Function spec.")

    bound = subparsers.add_parser("bound", parents=[common], help="The bound on H_f over chemical (n,m)-graphs.")
    _add_order_arguments(bound)
    bound.add_argument("--f", required=True, help="Function spec.")
    bound.add_argument("--thm3", action="store_true", help="Bound TI + TIbar instead of H_f.")

    extremal = subparsers.add_parser("extremal", parents=[common], help="A connected graph attaining the bound, if any.")
    _add_order_arguments(extremal)
    extremal.add_argument("--edge-list", help="Also write a feasible witness as 'u v' lines to this file.")

    verify = subparsers.add_parser("verify", parents=[common], help="Check the bound against all (n,m)-graphs.")
    _add_order_arguments(verify)
    verify.add_argument("--f", required=True, help="Function spec.")
    verify.add_argument("--thm3", action="store_true", help="Verify the TI + TIbar bound.")

    sweep_cmd = subparsers.add_parser("sweep", parents=[common], help="Bounds and checks over a parameter grid (CSV).")
    sweep_cmd.add_argument("--family", required=True, help="Family tag: %s." % ", ".join(f.value for f in Family))
    sweep_cmd.add_argument("--params", required=True, help="Comma-separated parameters (ignored for fbar).")
    sweep_cmd.add_argument("--n-range", required=True, help="'N' or 'A..B' (inclusive).")
    sweep_cmd.add_argument("--m-rule", default="all", help="all, tree, max or offset:K; default: all.")

    lemma1 = subparsers.add_parser("lemma1", parents=[common], help="Brute-force check of Gamma_f against xi1, xi2.")
    lemma1.add_argument("--xi1", type=float, required=True)
    lemma1.add_argument("--xi2", type=float, required=True)
    lemma1.add_argument("--max-total", type=int, default=LEMMA1_MAX_TOTAL, help="Largest n2+n3 checked, default: %d." % LEMMA1_MAX_TOTAL)

    enumerate_cmd = subparsers.add_parser("enumerate", parents=[common], help="Canonical graph6 codes of all (n,m)-graphs.")
    _add_order_arguments(enumerate_cmd)

    return parser.parse_args(argv)


def _add_order_arguments(parser):
    parser.add_argument("--n", type=int, required=True, help="Number of vertices.")
    parser.add_argument("--m", type=int, required=True, help="Number of edges.")


def run(argv=None) -> int:
    try:
        args = parseArguments(argv)
    except SystemExit as e:  # argparse already printed usage
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        records = _COMMANDS[args.command](args)
        sys.stdout.write(_format(records, args.format))
    except (ValueError, OSError) as e:
        print("[ERROR] %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, RuntimeError) as e:
        print("[ERROR] internal failure: %r" % (e,), file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def main():
    sys.exit(run())


def _enumerator(args):
    cache_dir = os.environ.get(CACHE_DIR_ENV) or args.cache_dir
    return ChemGraphEnumerator(workers=args.workers, cache_dir=None if cache_dir is None else ensure_cache_dir(cache_dir))


def _cmd_index(args):
    f = parse_function_spec(args.f)
    if args.edge_list is not None:
        graphs = graphreader.load(args.edge_list, graphreader.EDGE_LIST)
    elif os.path.isfile(args.graph):
        graphs = graphreader.load(args.graph)
    else:
        graphs = [graphreader.parse_graph6(args.graph)]
    records = []
    for G in graphs:
        ti, tibar = ti_pair(G, f)
        records.append(
            {
                "graph6": to_graph6(G),
                "n": G.n,
                "m": G.m,
                "counts": list(degree_vector(G).counts()),
                "f": f.describe(),
                "h_f": h_f(G, f).value,
                "gamma_f": gamma_f(G, f).value,
                "ti": ti.value,
                "tibar": tibar.value,
            }
        )
    return records


def _cmd_classify(args):
    f = parse_function_spec(args.f)
    return [{"f": f.describe()} | classify(f, args.tolerance).to_dict()]


def _cmd_bound(args):
    f = parse_function_spec(args.f)
    bound = theorem3_bound if args.thm3 else theorem1_bound
    return [bound(args.n, args.m, f, args.tolerance).to_dict()]


def _cmd_extremal(args):
    solution = construct_extremal(args.n, args.m)
    if args.edge_list is not None and solution.feasible:
        with open(args.edge_list, "w", encoding="ascii", newline="\n") as outfile:
            outfile.write(witness_edge_list(solution))
    return [solution.to_dict()]


def _cmd_verify(args):
    f = parse_function_spec(args.f)
    report = verify_bound(args.n, args.m, f, args.tolerance, theorem3=args.thm3, enumerator=_enumerator(args), identities=True)
    return [report.to_dict()]


def _cmd_sweep(args):
    try:
        family = Family(args.family.strip().lower())
    except ValueError:
        raise ValueError(_FAMILY_ERROR % (args.family, ", ".join(f.value for f in Family))) from None
    try:
        parameters = [float(p) for p in args.params.split(",")]
    except ValueError:
        raise ValueError(_PARAMS_ERROR % args.params) from None
    return sweep(family, parameters, parse_n_range(args.n_range), args.m_rule, _enumerator(args), args.tolerance)


def _cmd_lemma1(args):
    holds = verify_lemma1(args.xi1, args.xi2, args.max_total, args.tolerance)
    verdict = classify_xi(args.xi1, args.xi2, args.tolerance).verdict
    return [{"xi1": args.xi1, "xi2": args.xi2, "max_total": args.max_total, "verdict": verdict, "holds": holds}]


def _cmd_enumerate(args):
    return [{"graph6": code} for code in _enumerator(args).codes(args.n, args.m)]


_COMMANDS = {
    "index": _cmd_index,
    "classify": _cmd_classify,
    "bound": _cmd_bound,
    "extremal": _cmd_extremal,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "lemma1": _cmd_lemma1,
    "enumerate": _cmd_enumerate,
}


def _format(records, fmt) -> str:
    """
    :param records: a list of dicts, or a DataFrame (sweep).
    :return: JSON (one object per line), CSV (header plus one row per record) or "key: value" blocks.
    """
    if isinstance(records, pd.DataFrame):
        if fmt == "csv":
            return records.to_csv(index=False, float_format="%.17g", lineterminator="\n")
        records = records.astype(object).where(records.notna(), None).to_dict(orient="records")
    if fmt == "json":
        return "".join(to_json(record) + "\n" for record in records)
    if fmt == "csv":
        out = io.StringIO()
        frame = pd.DataFrame([{k: _cell(v) for k, v in record.items()} for record in records])
        frame.to_csv(out, index=False, float_format="%.17g", lineterminator="\n")
        return out.getvalue()
    blocks = []
    for record in records:
        blocks.append("".join("%s: %s\n" % (k, "" if v is None else _cell(v)) for k, v in record.items()))
    return "\n".join(blocks)


def _cell(value):
    """Scalar form of a report value for CSV and text output."""
    if isinstance(value, bytes):
        return value.decode("ascii")
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (list, tuple)):
        return " ".join(str(_cell(v)) for v in value)
    return value


if __name__ == "__main__":
    main()
