#!/usr/bin/env python
# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import argparse
import json
import os
import sys
from dataclasses import asdict
from logging import getLogger
from typing import Any, Callable, Dict, List, Optional, TextIO

from interlacepoly import __version__
from interlacepoly import helper as h
from interlacepoly.core.eulerian import (circle_graph, circle_graph_of, circuit_partition_poly, martin_poly,
                                         read_digraph, read_word)
from interlacepoly.core.graph import format_graph, local_complement, pivot, read_graph
from interlacepoly.core.interlace import QnMethod, q2_closed, q2_reduction, qn
from interlacepoly.core.isotropic import KleinElement, KVector, graphic_system, tutte_martin_restricted
from interlacepoly.core.parallel.utility import WORKERS_ENV_VAR
from interlacepoly.core.utility.data_containers import RunConfig
from interlacepoly.core.utility.progress_reporting import ConsoleProgressBar, Progress
from interlacepoly.core.verification import all_passed, format_report, run_suite

LOG = getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VERIFICATION_FAILED = 2

INPUT_HELP = "'-' for stdin, a file path, or the text itself with ';' between lines"


class _ArgumentParser(argparse.ArgumentParser):
    """
    Usage errors are input errors, reported like any other.
    """
    def error(self, message):
        raise ValueError(message)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text", help="Output format.")
    common.add_argument("--progress", action="store_true", help="Draw a progress bar on the error stream.")
    common.add_argument(
        "--log-level",
        type=str,
        default="WARN",
        help="Log verbosity level. "
        "Available options are: TRACE, DEBUG, INFO, WARN, CRITICAL",
    )
    common.add_argument("--workers", type=int, default=None, help="Number of worker processes.")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _ArgumentParser(prog="interlacepoly", description="Interlace polynomials and their relatives")
    parser.add_argument("--version", action="store_true", help="Print version number and exit.")
    sub = parser.add_subparsers(dest="subcommand", parser_class=_ArgumentParser)

    qn_parser = sub.add_parser("qn", parents=[common], help="Vertex-nullity interlace polynomial q_N(G;x)")
    qn_parser.add_argument("graph", help=INPUT_HELP)
    qn_parser.add_argument("--method", choices=[m.value for m in QnMethod], default=QnMethod.CLOSED.value)

    q2_parser = sub.add_parser("q2", parents=[common], help="Two-variable interlace polynomial q(G;x,y)")
    q2_parser.add_argument("graph", help=INPUT_HELP)
    q2_parser.add_argument("--method", choices=("closed", "reduction"), default="closed")

    tm_parser = sub.add_parser("tm",
                               parents=[common],
                               help="Restricted Tutte-Martin polynomial of (G, A, B) at C = A + B")
    tm_parser.add_argument("graph", help=INPUT_HELP)
    tm_parser.add_argument("--A", dest="a_word", default=None, help="Word over x, y, z. Defaults to all x.")
    tm_parser.add_argument("--B", dest="b_word", default=None, help="Word over x, y, z. Defaults to all y.")

    cpp_parser = sub.add_parser("cpp", parents=[common], help="Circuit partition polynomial f(G;x)")
    cpp_parser.add_argument("digraph", help=INPUT_HELP)

    martin_parser = sub.add_parser("martin", parents=[common], help="Martin polynomial m(G;x)")
    martin_parser.add_argument("digraph", help=INPUT_HELP)

    circle_parser = sub.add_parser("circle", parents=[common], help="Circle graph of an Euler circuit or of a word")
    circle_parser.add_argument("source", help=INPUT_HELP)
    circle_parser.add_argument("--word",
                               action="store_true",
                               help="Read a double occurrence word instead of a digraph.")

    pivot_parser = sub.add_parser("pivot", parents=[common], help="Pivot the graph on the edge vw")
    pivot_parser.add_argument("graph", help=INPUT_HELP)
    pivot_parser.add_argument("v", type=int)
    pivot_parser.add_argument("w", type=int)

    lc_parser = sub.add_parser("lc", parents=[common], help="Local complementation at v")
    lc_parser.add_argument("graph", help=INPUT_HELP)
    lc_parser.add_argument("v", type=int)

    verify_parser = sub.add_parser("verify", parents=[common], help="Run the identity checks")
    verify_parser.add_argument("--max-n", type=int, default=5, help="Largest n checked exhaustively.")
    verify_parser.add_argument("--seed", type=int, default=0, help="Seed of the random instances.")

    return parser


def _run_config(args):
    return RunConfig(subcommand=args.subcommand,
                     input_path=getattr(args, 'graph', None) or getattr(args, 'digraph', None)
                     or getattr(args, 'source', None),
                     method=getattr(args, 'method', None),
                     output_format=args.output,
                     seed=getattr(args, 'seed', 0),
                     max_n=getattr(args, 'max_n', 5))


def _emit_poly(p, args, stdout: TextIO):
    if args.output == "json":
        stdout.write(json.dumps(p.to_json()) + "\n")
    else:
        stdout.write(f"{p}\n")


def _emit_graph(g, args, stdout: TextIO):
    if args.output == "json":
        stdout.write(json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}) + "\n")
    else:
        stdout.write(format_graph(g))


def _qn(args, progress, stdout) -> int:
    _emit_poly(qn(read_graph(args.graph), args.method, progress), args, stdout)
    return EXIT_OK


def _q2(args, progress, stdout) -> int:
    g = read_graph(args.graph)
    _emit_poly(q2_closed(g, progress) if args.method == "closed" else q2_reduction(g), args, stdout)
    return EXIT_OK


def _tm(args, progress, stdout) -> int:
    g = read_graph(args.graph)
    a = KVector.from_word(args.a_word) if args.a_word is not None else KVector.complete(g.n, KleinElement.X)
    b = KVector.from_word(args.b_word) if args.b_word is not None else KVector.complete(g.n, KleinElement.Y)
    system = graphic_system(g, a, b)
    _emit_poly(tutte_martin_restricted(system, a + b, progress), args, stdout)
    return EXIT_OK


def _cpp(args, progress, stdout) -> int:
    _emit_poly(circuit_partition_poly(read_digraph(args.digraph), progress), args, stdout)
    return EXIT_OK


def _martin(args, progress, stdout) -> int:
    _emit_poly(martin_poly(read_digraph(args.digraph), progress), args, stdout)
    return EXIT_OK


def _circle(args, progress, stdout) -> int:
    g = circle_graph(read_word(args.source)) if args.word else circle_graph_of(read_digraph(args.source))
    _emit_graph(g, args, stdout)
    return EXIT_OK


def _pivot(args, progress, stdout) -> int:
    _emit_graph(pivot(read_graph(args.graph), args.v, args.w), args, stdout)
    return EXIT_OK


def _lc(args, progress, stdout) -> int:
    _emit_graph(local_complement(read_graph(args.graph), args.v), args, stdout)
    return EXIT_OK


def _verify(args, progress, stdout) -> int:
    results = run_suite(args.max_n, args.seed, progress)
    if args.output == "json":
        stdout.write(json.dumps([asdict(r) for r in results]) + "\n")
    else:
        stdout.write(format_report(results))
    return EXIT_OK if all_passed(results) else EXIT_VERIFICATION_FAILED


COMMANDS: Dict[str, Callable[[Any, Any, TextIO], int]] = {
    "qn": _qn,
    "q2": _q2,
    "tm": _tm,
    "cpp": _cpp,
    "martin": _martin,
    "circle": _circle,
    "pivot": _pivot,
    "lc": _lc,
    "verify": _verify,
}


def _set_workers(workers: Optional[int]):
    if workers is None:
        return
    if workers < 1:
        raise ValueError(f"--workers must be a positive integer, got {workers}")
    os.environ[WORKERS_ENV_VAR] = str(workers)


def run(argv: Optional[List[str]] = None,
        stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """
    Runs one command line and returns the exit code.
    """
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        # Print version number and exit
        if args.version:
            stdout.write(f"{__version__}\n")
            return EXIT_OK
        if args.subcommand is None:
            raise ValueError(f"a subcommand is required, one of: {', '.join(COMMANDS)}")

        h.initialise_logging(h.parse_log_level(args.log_level), stream=stderr)
        _set_workers(args.workers)
        LOG.debug(f"Run configuration: {_run_config(args).to_dict()}")

        progress = Progress(num_steps=0, task_name=args.subcommand)
        if args.progress:
            progress.add_progress_handler(ConsoleProgressBar(stream=stderr))
        with progress:
            return COMMANDS[args.subcommand](args, progress, stdout)
    except (ValueError, OSError) as e:
        stderr.write(f"interlacepoly: error: {e}\n")
        return EXIT_INPUT_ERROR
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
