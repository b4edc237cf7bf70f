"""Command-line front end: ``zhom decide|eval|gauss|brute|validate|corpus``."""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from typing import TextIO

from hydra.errors import MissingConfigException
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from .config import ConfigLoader, CorpusConfig, RunConfig
from .core.builders import graph_suite
from .core.io import read_graph, read_matrix, read_poly
from .core.matrix import PureMatrix
from .corpus import CORPUS_FACTORY
from .cyclotomic import CycNum, format_approx, format_cycnum
from .dichotomy import decide, load_certificate, save_certificate, validate_certificate
from .fasteval import fast_eval
from .gausssum import eval_gauss_sum
from .oracle import brute_eval_A
from .utils.errors import InvalidCertificate, NonPureEntry, NotSymmetric, ParseError, SizeGuardExceeded, ZhomError
from .utils.log import get_logger, set_log_level

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SIZE_GUARD = 3


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so ``run`` owns the exit status."""

    def error(self, message: str):  # type: ignore[override]
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--config-name", type=str, default="default", help="Run (or corpus) configuration name.")
    common.add_argument("--size-guard", type=int, default=None, help="Largest brute-force enumeration allowed.")
    common.add_argument("--threads", type=int, default=None, help="Oracle worker threads.")
    common.add_argument("--digits", type=int, default=None, help="Digits of the decimal approximation.")

    parser = _ArgumentParser(prog="zhom", description="Exact partition functions of pure symmetric matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("decide", parents=[common], help="Decide tractability of a matrix.")
    p.add_argument("matrix", help="Matrix file.")
    p.add_argument("--certificate", default=None, help="Write the certificate of a tractable matrix here.")

    p = sub.add_parser("eval", parents=[common], help="Evaluate Z_A(G).")
    p.add_argument("matrix", help="Matrix file.")
    p.add_argument("graph", help="Graph file.")
    p.add_argument("--mode", choices=["auto", "fast", "brute"], default=None, help="Evaluation mode.")
    p.add_argument("--certificate", default=None, help="Certificate to evaluate with instead of deciding.")

    p = sub.add_parser("brute", parents=[common], help="Evaluate Z_A(G) by enumeration.")
    p.add_argument("matrix", help="Matrix file.")
    p.add_argument("graph", help="Graph file.")

    p = sub.add_parser("gauss", parents=[common], help="Evaluate a quadratic exponential sum.")
    p.add_argument("poly", help="Polynomial file.")

    p = sub.add_parser("validate", parents=[common], help="Replay a certificate against a matrix.")
    p.add_argument("matrix", help="Matrix file.")
    p.add_argument("certificate", help="Certificate file.")

    p = sub.add_parser("corpus", parents=[common], help="Run the canonical matrix corpus.")
    p.add_argument("--entries", nargs="*", default=None, help="Corpus entries to run (default: from config).")
    return parser


def parse_run_config(args: argparse.Namespace) -> RunConfig:
    config = apply_overrides(ConfigLoader.load_run_config(args.config_name), args)
    set_log_level(config.log_level)
    return config


def apply_overrides(config: RunConfig, args: argparse.Namespace) -> RunConfig:
    if args.size_guard:
        config.size_guard = args.size_guard
    if args.threads:
        config.threads = args.threads
    if args.digits:
        config.digits = args.digits
    if getattr(args, "mode", None):
        config.mode = args.mode
    return config


def _print_value(z: CycNum, config: RunConfig, out: TextIO) -> None:
    print(format_cycnum(z), file=out)
    print(format_approx(z, config.digits), file=out)


def _evaluate(A: PureMatrix, graph_path: str, config: RunConfig, certificate: str | None) -> CycNum:
    G = read_graph(graph_path)
    if config.mode == "brute":
        return brute_eval_A(A, G, config.size_guard, config.threads)
    if certificate is not None:
        return fast_eval(A, G, load_certificate(certificate))
    if config.mode == "fast":
        return fast_eval(A, G)
    verdict = decide(A)
    logger.info(f"auto mode: {verdict.label}")
    if verdict.tractable:
        return fast_eval(A, G, verdict.certificate)
    return brute_eval_A(A, G, config.size_guard, config.threads)


def cmd_decide(args: argparse.Namespace, out: TextIO) -> int:
    parse_run_config(args)
    A = read_matrix(args.matrix)
    verdict = decide(A)
    print(verdict.label, file=out)
    if args.certificate and verdict.certificate is not None:
        save_certificate(args.certificate, verdict.certificate)
    return EXIT_OK


def cmd_eval(args: argparse.Namespace, out: TextIO) -> int:
    config = parse_run_config(args)
    _print_value(_evaluate(read_matrix(args.matrix), args.graph, config, args.certificate), config, out)
    return EXIT_OK


def cmd_brute(args: argparse.Namespace, out: TextIO) -> int:
    config = parse_run_config(args)
    config.mode = "brute"
    _print_value(_evaluate(read_matrix(args.matrix), args.graph, config, None), config, out)
    return EXIT_OK


def cmd_gauss(args: argparse.Namespace, out: TextIO) -> int:
    config = parse_run_config(args)
    _print_value(eval_gauss_sum(read_poly(args.poly)), config, out)
    return EXIT_OK


def cmd_validate(args: argparse.Namespace, out: TextIO) -> int:
    parse_run_config(args)
    A = read_matrix(args.matrix)
    ok = validate_certificate(A, load_certificate(args.certificate))
    print("VALID" if ok else "INVALID", file=out)
    return EXIT_OK


def parse_corpus_config(args: argparse.Namespace) -> CorpusConfig:
    config = ConfigLoader.load_corpus_config(args.config_name)
    apply_overrides(config.run, args)
    if args.entries:
        config.entries = args.entries
    if not config.entries:
        config.entries = CORPUS_FACTORY.get_all()
    set_log_level(config.run.log_level)
    return config


def cmd_corpus(args: argparse.Namespace, out: TextIO) -> int:
    config = parse_corpus_config(args)
    graphs = graph_suite(config.seed, config.graph_count, config.max_vertices, config.max_total_multiplicity)
    table = Table(title="zhom corpus")
    for column in ("entry", "expected", "got", "fast = brute"):
        table.add_column(column)
    for name in config.entries:
        entry = CORPUS_FACTORY.get(name)
        A = entry.build()
        verdict = decide(A)
        agreement = "-"
        if verdict.tractable:
            agreed = sum(
                fast_eval(A, G, verdict.certificate) == brute_eval_A(A, G, config.run.size_guard, config.run.threads)
                for G in graphs
            )
            agreement = f"{agreed}/{len(graphs)}"
        logger.info(f"{name}: expected {entry.expected}, got {verdict.label}, agreement {agreement}")
        table.add_row(entry.name, entry.expected, verdict.label, agreement)
    console = Console(file=out, force_terminal=out.isatty(), no_color=not out.isatty(), width=120)
    console.print(table)
    return EXIT_OK


COMMANDS = {
    "decide": cmd_decide,
    "eval": cmd_eval,
    "brute": cmd_brute,
    "gauss": cmd_gauss,
    "validate": cmd_validate,
    "corpus": cmd_corpus,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Run one subcommand; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except _UsageError as e:
        print(f"usage error: {e}", file=err)
        return EXIT_USAGE
    except SizeGuardExceeded as e:
        print(f"size guard: {e}", file=err)
        return EXIT_SIZE_GUARD
    except ParseError as e:
        print(f"parse error: {e}", file=err)
        return EXIT_USAGE
    except (MissingConfigException, ValidationError) as e:
        print(f"config error: {e}", file=err)
        return EXIT_USAGE
    except (NonPureEntry, NotSymmetric, InvalidCertificate, KeyError, OSError) as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    except ZhomError as e:
        logger.error_exc(f"{type(e).__name__}: {e}")  # type: ignore[attr-defined]
        print(f"error: {e}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
