"""
ctforge: d-cluster-tilting subcategories of trivial extensions of Dynkin path algebras
and of symmetric Nakayama algebras.

Commands:
- classify-trivext: for which d is T(kQ) d-representation-finite (Q of type A, D or E)
- classify-nakayama: the same question for symmetric Nakayama algebras, by arithmetic and by search
- verify-example: verify a named cluster-tilting module and print its transcript
- emit-ar-quiver: draw the AR quiver of D^b(kQ) with a certificate marked (DOT, JSON or ASCII)
"""
from __future__ import annotations

import argparse
import logging
import sys
import time
from typing import List, Optional

from rich.console import Console

from constants import ExitCodes
from controllers.example_controller import ExampleController
from controllers.nakayama_controller import MODES, NakayamaController
from controllers.quiver_controller import FORMATS, QuiverController
from controllers.trivext_controller import TrivextController
from db import CertificateStore
from errors import InvalidInputError, VerificationError
from messages import Colors, ErrorMessages, SuccessMessages
from models.report import RunReport
from services.classification_service import ClassificationService
from utils.log import configure_logging

console = Console()
logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ctforge", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--verbose", action="store_true", help="log stage boundaries")
    parser.add_argument("--debug", action="store_true", help="log per-item work")
    parser.add_argument("--timing", action="store_true", help="record wall time in the report")
    parser.add_argument("--seedless", action="store_true", help=argparse.SUPPRESS)
    commands = parser.add_subparsers(dest="command", required=True)

    trivext = commands.add_parser("classify-trivext", help="classify T(kQ) for Q of Dynkin type")
    trivext.add_argument("family", choices=["A", "D", "E", "a", "d", "e"])
    trivext.add_argument("rank", type=int)
    trivext.add_argument("d_min", type=int)
    trivext.add_argument("d_max", type=int)
    trivext.add_argument("--format", choices=["table", "json"], default="table")
    trivext.add_argument("--out")
    trivext.add_argument("--store", help="save certificates to this JSON file")
    trivext.add_argument("--exhaustive", action="store_true", help="also search d refuted by periodicity")

    nakayama = commands.add_parser("classify-nakayama", help="classify a symmetric Nakayama algebra")
    nakayama.add_argument("a", type=int)
    nakayama.add_argument("n", type=int)
    nakayama.add_argument("d_max", type=int)
    nakayama.add_argument("mode", nargs="?", choices=MODES, default="both")
    nakayama.add_argument("--format", choices=["table", "json"], default="table")
    nakayama.add_argument("--out")

    example = commands.add_parser("verify-example", help="verify cta1:N, cta2, cta3, ctd or d4-derived")
    example.add_argument("name")
    example.add_argument("--format", choices=["table", "json"], default="table")
    example.add_argument("--out")
    example.add_argument("--store", help="save the certificate to this JSON file")

    quiver = commands.add_parser("emit-ar-quiver", help="draw the AR quiver with a certificate marked")
    quiver.add_argument("family", choices=["A", "D", "E", "a", "d", "e"])
    quiver.add_argument("rank", type=int)
    quiver.add_argument("--window", type=int, help="number of tau-steps drawn, default 2(h-1)")
    quiver.add_argument("--marked", help="example name or stored certificate id")
    quiver.add_argument("--format", choices=list(FORMATS), default="dot")
    quiver.add_argument("--out")
    quiver.add_argument("--store", help="certificate file searched for --marked ids")
    return parser


class CliApp:
    """Dispatches parsed arguments to the controllers."""

    def __init__(self, args: argparse.Namespace) -> None:
        self.args = args
        store_path = getattr(args, "store", None)
        classification_service = ClassificationService(CertificateStore(store_path) if store_path else None)
        self.trivext_controller = TrivextController(classification_service)
        self.nakayama_controller = NakayamaController(classification_service)
        self.example_controller = ExampleController(classification_service)
        self.quiver_controller = QuiverController(classification_service)

    def run(self) -> RunReport:
        args = self.args
        if args.command == "classify-trivext":
            return self.trivext_controller.classify(
                args.family, args.rank, args.d_min, args.d_max, fmt=args.format, exhaustive=args.exhaustive
            )
        if args.command == "classify-nakayama":
            return self.nakayama_controller.classify(args.a, args.n, args.d_max, mode=args.mode, fmt=args.format)
        if args.command == "verify-example":
            return self.example_controller.verify(args.name, fmt=args.format)
        return self.quiver_controller.emit(
            args.family, args.rank, window=args.window, marked=args.marked, fmt=args.format
        )

    def output(self, report: RunReport) -> None:
        args = self.args
        if args.command == "emit-ar-quiver":
            text = report.results[0]["content"]
        elif args.format == "json":
            text = report.to_json()
        else:
            text = None
        if text is None:
            return
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
            console.print(SuccessMessages.WROTE_FILE.format(path=args.out), style=Colors.SUCCESS)
        else:
            sys.stdout.write(text)
            sys.stdout.flush()


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.seedless:
        console.print(ErrorMessages.SEEDLESS_REJECTED, style=Colors.ERROR)
        return ExitCodes.USAGE

    configure_logging(logging.DEBUG if args.debug else logging.INFO if args.verbose else logging.WARNING)
    try:
        app = CliApp(args)
    except InvalidInputError as e:
        console.print(str(e), style=Colors.ERROR)
        return ExitCodes.USAGE
    started = time.perf_counter()
    try:
        report = app.run()
    except InvalidInputError as e:
        logger.debug("usage error: %s", e)
        return ExitCodes.USAGE
    except VerificationError as e:
        console.print(f"witness: {e.witness}", style=Colors.ERROR)
        return ExitCodes.VERIFICATION
    if args.timing:
        report.timing = round(time.perf_counter() - started, 6)
    app.output(report)
    return ExitCodes.OK


if __name__ == "__main__":
    sys.exit(main())
