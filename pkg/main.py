#!/usr/bin/env python3
# main.py - superplactic-kit: перечисление таблиц, характеры, плактический моноид и проверки

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from core.base import (
    AlphabetMismatch, ContainmentError, OutputFormat, ParseError, RelationSet,
    ShapeError, SizeGuardExceeded, SuperplacticError,
)
from core.settings import DEFAULT_Q0, KitSettings
from controller import EXIT_FAILED, EXIT_USAGE, KitController

logger = logging.getLogger(__name__)


# Ошибки ввода: неверная грамматика, форма, алфавит или превышение ограничения размера
USAGE_ERRORS = (ParseError, ShapeError, AlphabetMismatch, ContainmentError, SizeGuardExceeded)


def setup_app_paths():
    """Настройка путей приложения"""
    app_dir = Path(__file__).parent
    if str(app_dir) not in sys.path:
        sys.path.insert(0, str(app_dir))


def check_dependencies() -> bool:
    """Проверяет наличие необходимых зависимостей"""
    missing_deps = []
    for name in ("sympy", "openpyxl"):
        try:
            module = __import__(name)
            logger.info(f"{name} version: {getattr(module, '__version__', 'unknown')}")
        except ImportError:
            missing_deps.append(name)

    if missing_deps:
        logger.error(f"Missing required dependencies: {', '.join(missing_deps)}")
        print(f"Missing required dependencies: {' '.join(missing_deps)}", file=sys.stderr)
        print(f"Install with: pip install {' '.join(missing_deps)}", file=sys.stderr)
        return False
    return True


def _rational(text: str):
    from core.formats.text_format import RATIONAL_GRAMMAR, parse_rational
    try:
        return parse_rational(text)
    except ParseError:
        raise argparse.ArgumentTypeError(f"invalid rational {text!r}; expected {RATIONAL_GRAMMAR}")


def _generic_point(text: str):
    value = _rational(text)
    if value == 0:
        raise argparse.ArgumentTypeError("q must be nonzero, q^-1 has a pole at 0")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _format_arg(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=["text", "json", "csv"], default="text",
                        help="output format (default: text)")


def _alphabet_args(parser: argparse.ArgumentParser, with_n: bool = True):
    parser.add_argument("--m", type=_nonnegative, required=True, help="number of even letters")
    if with_n:
        parser.add_argument("--n", type=_nonnegative, required=True, help="number of odd letters")


def build_parser() -> argparse.ArgumentParser:
    """Создает парсер всех подкоманд"""
    from core.formats.text_format import SHAPE_GRAMMAR, TABLEAU_GRAMMAR, WORD_GRAMMAR

    parser = argparse.ArgumentParser(
        prog="superplactic-kit",
        description="Exact checks for super tableaux, hook Schur characters, the super-plactic "
                    "monoid and the Hecke-algebra idempotent.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress at INFO level")
    parser.add_argument("--log-file", default=None, help="also write the log to this file")
    parser.add_argument("--corrupt-relations", action="store_true", help=argparse.SUPPRESS)
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    # ssyt
    ssyt = commands.add_parser("ssyt", help="enumerate or count super semistandard tableaux")
    ssyt.add_argument("action", choices=["list", "count"])
    ssyt.add_argument("--shape", required=True, help=f"shape, {SHAPE_GRAMMAR}")
    _alphabet_args(ssyt)
    _format_arg(ssyt)

    # char
    char = commands.add_parser("char", help="Schur and hook Schur characters")
    char.add_argument("kind", choices=["schur", "hook-schur"])
    char.add_argument("--shape", required=True, help=f"shape, {SHAPE_GRAMMAR}")
    char.add_argument("--m", type=_nonnegative, required=True)
    char.add_argument("--n", type=_nonnegative, default=0)
    char.add_argument("--route", choices=["ssyt", "factorized"], default="ssyt")
    _format_arg(char)

    # plactic
    plactic = commands.add_parser("plactic", help="super-plactic monoid operations")
    plactic_commands = plactic.add_subparsers(dest="action", metavar="ACTION")
    plactic_commands.required = True
    normal = plactic_commands.add_parser("normal-form", help="signed tableau of a word")
    normal.add_argument("--word", required=True, help=f"word, {WORD_GRAMMAR}")
    _format_arg(normal)
    product = plactic_commands.add_parser("product", help="product of two tableaux")
    product.add_argument("--left", required=True, help=f"tableau, {TABLEAU_GRAMMAR}")
    product.add_argument("--right", required=True, help=f"tableau, {TABLEAU_GRAMMAR}")
    product.add_argument("--m", type=_nonnegative, default=None)
    product.add_argument("--n", type=_nonnegative, default=None)
    _format_arg(product)
    classes = plactic_commands.add_parser("classes", help="Knuth classes of words of a fixed length")
    _alphabet_args(classes)
    classes.add_argument("--length", type=_nonnegative, required=True)
    _format_arg(classes)

    # verify
    verify = commands.add_parser("verify", help="run one verification suite")
    suites = verify.add_subparsers(dest="suite", metavar="SUITE")
    suites.required = True

    def suite(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = suites.add_parser(name, help=help_text)
        _format_arg(sub)
        return sub

    sub = suite("schur-identity", "classical Schur identity up to a degree")
    _alphabet_args(sub, with_n=False)
    sub.add_argument("--max-degree", type=_nonnegative, required=True)
    sub = suite("hook-identity", "hook Schur identity up to a degree")
    _alphabet_args(sub)
    sub.add_argument("--max-degree", type=_nonnegative, required=True)
    sub = suite("characters", "tableau and factorized hook Schur routes agree")
    _alphabet_args(sub)
    sub.add_argument("--max-size", type=_nonnegative, required=True)
    sub = suite("hook-theorem", "tableaux exist exactly for shapes in the hook")
    _alphabet_args(sub)
    sub.add_argument("--rmax", type=_nonnegative, required=True)
    sub = suite("plactic", "class, insertion and sign consistency of the plactic monoid")
    _alphabet_args(sub)
    sub.add_argument("--length", type=_nonnegative, required=True)
    sub = suite("dimensions", "quotient dimensions against the Hilbert series and tableau counts")
    _alphabet_args(sub)
    sub.add_argument("--max-degree", type=_nonnegative, required=True)
    sub.add_argument("--q", type=_generic_point, default=None, help=f"specialization point (default {DEFAULT_Q0})")
    sub = suite("character-dimensions", "graded characters against the Hilbert series")
    _alphabet_args(sub)
    sub.add_argument("--max-degree", type=_nonnegative, required=True)
    sub = suite("jacobi", "super Jacobi identity of the bracket")
    _alphabet_args(sub)
    sub = suite("gamma", "cubic generators span the idempotent image")
    _alphabet_args(sub)
    sub.add_argument("--q", type=_generic_point, default=None, help=f"specialization point (default {DEFAULT_Q0})")
    sub = suite("multilinear", "multilinear component counts are involution numbers")
    sub.add_argument("--max-r", type=_nonnegative, required=True)
    sub = suite("ybe", "R-matrix Yang-Baxter and Hecke relations")
    _alphabet_args(sub)
    suite("idempotent", "Eulerian idempotent and its deformation")
    sub = suite("gl", "superbracket relations of the gl action")
    _alphabet_args(sub)
    sub.add_argument("--r", type=_nonnegative, default=1)
    sub = suite("schur-weyl", "commutation and commutant rank of the two actions")
    _alphabet_args(sub)
    sub.add_argument("--r", type=_nonnegative, required=True)

    # report
    report = commands.add_parser("report", help="run every suite and write a report file")
    report_commands = report.add_subparsers(dest="action", metavar="ACTION")
    report_commands.required = True
    report_all = report_commands.add_parser("all", help="every verification suite")
    _alphabet_args(report_all)
    report_all.add_argument("--max-degree", type=_nonnegative, required=True)
    report_all.add_argument("--out", type=Path, required=True, help="report file (.json, .csv, .xlsx or .txt)")
    report_all.add_argument("--rmax", type=_nonnegative, default=4)
    report_all.add_argument("--r", type=_nonnegative, default=3)
    report_all.add_argument("--q", type=_generic_point, default=None)
    report_all.add_argument("--details-log", default=None, help="write one log line per check to this file")
    return parser


SUITE_PARAMS = ("m", "n", "max_degree", "max_size", "rmax", "length", "q", "max_r", "r")


def _suite_params(args: argparse.Namespace) -> dict:
    params = {}
    for key in SUITE_PARAMS:
        if hasattr(args, key):
            params["q0" if key == "q" else key] = getattr(args, key)
    return params


def dispatch(args: argparse.Namespace, controller) -> int:
    """Передает разобранные аргументы обработчику контроллера"""
    fmt = OutputFormat(getattr(args, "format", "text"))
    if args.command == "ssyt":
        return controller.ssyt(args.action, args.shape, args.m, args.n, fmt)
    if args.command == "char":
        return controller.character(args.kind, args.shape, args.m, args.n, args.route, fmt)
    if args.command == "plactic":
        if args.action == "normal-form":
            return controller.plactic_normal_form(args.word, fmt)
        if args.action == "product":
            return controller.plactic_product(args.left, args.right, args.m, args.n, fmt)
        return controller.plactic_classes(args.m, args.n, args.length, fmt)
    if args.command == "verify":
        return controller.verify(args.suite, fmt, **_suite_params(args))
    return controller.report_all(args.out, args.m, args.n, args.max_degree, args.rmax, args.r, args.q,
                                 args.details_log)


def run(argv: Optional[List[str]] = None) -> int:
    """Точка входа командной строки; возвращает код выхода"""
    from utils.logger import setup_logger

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse завершает работу с кодом 2 при ошибке и 0 при --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    setup_logger(args.log_file, args.verbose)
    settings = KitSettings()
    if args.corrupt_relations:
        settings.relation_set = RelationSet.FIRST_ONLY
        logger.warning("Using the corrupted relation set (first family only)")

    try:
        controller = KitController(settings)
        return dispatch(args, controller)
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        if isinstance(e, ParseError):
            parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except SuperplacticError as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_FAILED
    except Exception as e:
        logger.exception(f"Unexpected error in {args.command}: {e}")
        return EXIT_FAILED


def main() -> int:
    """Главная функция приложения"""
    setup_app_paths()
    if not check_dependencies():
        return EXIT_FAILED
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
