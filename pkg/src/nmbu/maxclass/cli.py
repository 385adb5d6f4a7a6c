#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import argparse
import io
import json
import logging
import sys
import time
from typing import Any, Callable, Dict, List, Optional, Tuple

import psutil  # memory measurement

from nmbu.maxclass.common import (BudgetExceededError, HypothesisViolationError, MathematicalAssertionError,
                                  configure_logging)
from nmbu.maxclass.exceptional.construction import CONSTRUCTION_MODE, THEOREM_MODE, ExceptionalParams
from nmbu.maxclass.exceptional.report import theorem_exceptional_report
from nmbu.maxclass.polycheck.theorem import (DEFAULT_CLASSIFY_BUDGET, classify_admissible_k, compare_with_fixture,
                                             lemma_pairs_check, read_fixture, realized_small_intervals)
from nmbu.maxclass.sequence.constituents import bridge_check, constituents, constituents_via_lcs, lcs_agrees
from nmbu.maxclass.sequence.jacobi import jacobi_verify
from nmbu.maxclass.sequence.search import DEFAULT_SEARCH_BUDGET, DEFAULT_SEARCH_DEPTH, search_sequences
from nmbu.maxclass.sequence.sequence_file import read_sequence_file

LOG = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_ASSERTION = 1
EXIT_USAGE = 2

Report = Dict[str, Any]


def cmd_construct(config: Dict[str, Any]) -> Tuple[int, Report]:
    params = ExceptionalParams(config["p"], config["c"], config["m"], config["n"], mode=config["mode"])
    report = theorem_exceptional_report(params, config["depth"], verbose=config["verbose"])
    return EXIT_PASS, report


def cmd_verify(config: Dict[str, Any]) -> Tuple[int, Report]:
    seq = read_sequence_file(config["input"], verbose=config["verbose"])
    depth = seq.depth if config["depth"] is None else config["depth"]
    seq = seq.prefix(depth)
    jacobi = jacobi_verify(seq, verbose=config["verbose"])
    report = {"sequence": {"kind": seq.kind, "p": seq.p, "n": seq.n, "depth": seq.depth}, "jacobi": jacobi.to_dict()}

    cons = constituents(seq)
    report["constituents"] = cons.to_dict()
    report["metabelian_within_depth"] = cons.metabelian_within_depth
    try:
        lcs = constituents_via_lcs(seq)
        report["lcs"] = {**lcs.to_dict(), "agrees": lcs_agrees(seq, cons)}
    except HypothesisViolationError as exc:
        report["lcs"] = {"refused": str(exc)}
    report["bridge"] = bridge_check(seq, cons) if not cons.metabelian_within_depth else None

    passed = jacobi.passed and report["lcs"].get("agrees", True) is not False and report["bridge"] is not False
    if jacobi.passed:
        passed = passed and not cons.violations
    report["passed"] = passed
    return (EXIT_PASS if passed else EXIT_ASSERTION), report


def cmd_polyclassify(config: Dict[str, Any]) -> Tuple[int, Report]:
    p, n, k_max = config["p"], config["n"], config["kmax"]
    result = classify_admissible_k(p, n, k_max, budget=config["budget"], verbose=config["verbose"])
    admissible = {str(k): [g.coefficient_list() for g in gs] for k, gs in result if gs}
    report: Report = {
        "admissible": admissible,
        "small_intervals": realized_small_intervals(p, n, result),
        "lemma_pairs": [list(pair) for pair in lemma_pairs_check(p, min(k_max, 2 * p * p))],
    }
    status = EXIT_PASS
    if config["fixture"] is not None:
        with io.open(config["fixture"], mode="r") as file:
            mismatches = compare_with_fixture(p, n, result, read_fixture(file))
        report["fixture_mismatches"] = mismatches
        if mismatches:
            status = EXIT_ASSERTION
    return status, report


def cmd_search(config: Dict[str, Any]) -> Tuple[int, Report]:
    seed = read_sequence_file(config["seed"]) if config["seed"] is not None else None
    result = search_sequences(config["p"], config["n"], config["depth"], config["budget"], seed=seed,
                              normalize=config["normalize"], verbose=config["verbose"])
    return EXIT_PASS, result.to_dict()


COMMANDS: Dict[str, Callable[[Dict[str, Any]], Tuple[int, Report]]] = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "polyclassify": cmd_polyclassify,
    "search": cmd_search,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxclass",
                                     description="Graded Lie algebras of maximal class: construction, verification, "
                                                 "polynomial classification and sequence search")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json", help="report format")
    common.add_argument("--output", default=None, help="write the report to this file instead of stdout")
    common.add_argument("--verbose", action="store_true", help="log progress and resource usage to stderr")

    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", parents=[common], help="construct an exceptional algebra and check it")
    construct.add_argument("--p", type=int, required=True)
    construct.add_argument("--c", type=int, required=True)
    construct.add_argument("--m", type=int, required=True)
    construct.add_argument("--n", type=int, required=True)
    construct.add_argument("--depth", type=int, default=None, help="sequence depth, default 3q + 2n")
    construct.add_argument("--mode", choices=(THEOREM_MODE, CONSTRUCTION_MODE), default=THEOREM_MODE)

    verify = sub.add_parser("verify", parents=[common], help="verify a sequence file")
    verify.add_argument("--input", required=True)
    verify.add_argument("--depth", type=int, default=None, help="check up to this index, default the file depth")

    poly = sub.add_parser("polyclassify", parents=[common], help="classify k for the polynomial range condition")
    poly.add_argument("--p", type=int, required=True)
    poly.add_argument("--n", type=int, required=True)
    poly.add_argument("--kmax", type=int, required=True)
    poly.add_argument("--budget", type=int, default=DEFAULT_CLASSIFY_BUDGET)
    poly.add_argument("--fixture", default=None, help="regression fixture to compare against")

    search = sub.add_parser("search", parents=[common], help="search feasible sequence prefixes")
    search.add_argument("--p", type=int, required=True)
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--depth", type=int, default=DEFAULT_SEARCH_DEPTH)
    search.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET)
    search.add_argument("--seed", default=None, help="sequence file with a prefix to extend")
    search.add_argument("--no-normalize", dest="normalize", action="store_false")
    return parser


def _render_text(data: Any, indent: int = 0) -> List[str]:
    pad = "  " * indent
    if isinstance(data, dict):
        lines = []
        for key in sorted(data):
            value = data[key]
            if isinstance(value, (dict, list)) and value and any(isinstance(v, (dict, list)) for v in
                                                                 (value.values() if isinstance(value, dict) else value)):
                lines.append("{pad}{k}:".format(pad=pad, k=key))
                lines += _render_text(value, indent + 1)
            else:
                lines.append("{pad}{k}: {v}".format(pad=pad, k=key, v=json.dumps(value, sort_keys=True)))
        return lines
    if isinstance(data, list):
        lines = []
        for item in data:
            lines.append("{pad}-".format(pad=pad))
            lines += _render_text(item, indent + 1)
        return lines
    return ["{pad}{v}".format(pad=pad, v=json.dumps(data))]


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    return "\n".join(_render_text(report)) + "\n"


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = vars(args)
    configure_logging(config["verbose"])
    start_time = time.time()

    try:
        status, result = COMMANDS[config["command"]](config)
        report = {"config": config, "status": status, "result": result}
    except MathematicalAssertionError as exc:
        status = EXIT_ASSERTION
        report = {"config": config, "status": status, "error": str(exc), "witness": exc.witness}
    except (ValueError, AssertionError, LookupError, BudgetExceededError, OSError) as exc:
        LOG.error("%s", exc)
        print("maxclass {c}: error: {e}".format(c=config["command"], e=exc), file=sys.stderr)
        return EXIT_USAGE

    output = render(report, config["format"])
    if config["output"] is not None:
        with io.open(config["output"], mode="w") as file:
            file.write(output)
    else:
        sys.stdout.write(output)

    if config["verbose"]:
        LOG.info("Executed in %.2f seconds", time.time() - start_time)
        LOG.info("Memory used: %f MB", psutil.Process().memory_info().rss / (1024 * 1024))
    return status


if __name__ == "__main__":
    sys.exit(main())
