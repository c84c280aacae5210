#!/usr/bin/env python3
"""
qminpoly

Closed-form minimal polynomials of structured 4x4 real matrices through their
quaternion tensor representation, cross-checked by a Gram-matrix oracle.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src import __version__
from src.errors import MatrixParseError, MinpolyError, NotInFamily
from src.families.params import FamilyTag
from src.report import (
    AUTO,
    JsonFormatter,
    MatrixAnalyzer,
    TextFormatter,
    parse_octonion_argument,
    read_matrix,
)
from src.utils import ConfigValidationError, load_settings, setup_logging

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO_FAMILY = 2
EXIT_INTERRUPTED = 130

FAMILY_CHOICES = [AUTO] + [tag.value for tag in FamilyTag]

logger = logging.getLogger("qminpoly")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qminpoly",
        description="Minimal polynomials of structured 4x4 matrices via H (x) H",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Detect families and report every closed form
  python main.py analyze --input m.json

  # Force one family, JSON report
  python main.py analyze --input m.csv --family hamiltonian --report json

  # Skew-Hamiltonian Jordan structure and Cayley transform
  python main.py analyze --input w.json --jordan --cayley

  # Singular values of a 3x3 matrix
  python main.py analyze --svd3 --input y.json

  # Octonion product omega(a) omega(b)
  python main.py analyze --octonion "1,1,0,0,0,0,0,0 times 0,0,1,0,0,1,0,0"
        """,
    )
    parser.add_argument("--version", action="version", version=f"qminpoly v{__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser("analyze", help="Analyze one matrix")
    analyze.add_argument("--input", help="Matrix file (JSON {\"matrix\": [...]} or CSV)")
    analyze.add_argument("--format", choices=["json", "csv"], help="Input format (default: from extension)")
    analyze.add_argument(
        "--family", choices=FAMILY_CHOICES, default=AUTO, help="Family to apply (default: auto)"
    )
    analyze.add_argument("--tol", type=float, help="Membership tolerance (default: 1e-9)")
    analyze.add_argument("--branch-tol", type=float, help="Branch-condition tolerance (default: 1e-9)")
    analyze.add_argument("--jordan", action="store_true", help="Skew-Hamiltonian Jordan structure")
    analyze.add_argument("--cayley", action="store_true", help="Skew-Hamiltonian Cayley transform")

    mode = analyze.add_mutually_exclusive_group()
    mode.add_argument("--svd3", action="store_true", help="3x3 singular values via the symmetric image")
    mode.add_argument("--clifford06", action="store_true", help="Antisymmetric 8x8 matrix in Cl(0,6)")
    mode.add_argument("--blocks", action="store_true", help="Block-diagonal matrix of 4x4 blocks")
    mode.add_argument(
        "--octonion",
        metavar="SPEC",
        help='Octonion "a1w,a1x,a1y,a1z,a2w,a2x,a2y,a2z" optionally followed by "times" and a second one',
    )

    analyze.add_argument("--report", choices=["text", "json"], help="Report format (default: text)")
    analyze.add_argument(
        "--config",
        default="config/config.yaml",
        help="Path to configuration file (default: config/config.yaml)",
    )
    analyze.add_argument("--env-file", help="Path to .env file with QMINPOLY_* overrides")
    analyze.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    return parser


def _apply_flags(settings: dict, args: argparse.Namespace) -> dict:
    analysis = settings.setdefault("analysis", {})
    if args.tol is not None:
        analysis["membership_tol"] = args.tol
    if args.branch_tol is not None:
        analysis["branch_tol"] = args.branch_tol
    if args.report:
        settings.setdefault("report", {})["format"] = args.report
    for key in ("membership_tol", "branch_tol"):
        if analysis.get(key) is not None and analysis[key] <= 0:
            raise ConfigValidationError(f"analysis.{key} must be positive, got {analysis[key]}")
    return settings


def analyze(args: argparse.Namespace) -> int:
    """Run the analyze command and print the report on stdout."""
    settings = _apply_flags(load_settings(args.config, args.env_file), args)
    setup_logging(settings, level="DEBUG" if args.verbose else None)
    analyzer = MatrixAnalyzer(settings)

    if args.octonion:
        a, b = parse_octonion_argument(args.octonion)
        report = analyzer.analyze_octonion(a, b)
    else:
        if not args.input:
            raise MatrixParseError("--input is required unless --octonion is given")
        matrix = read_matrix(args.input, args.format)
        if args.svd3:
            report = analyzer.analyze_svd3(matrix, args.input)
        elif args.clifford06:
            report = analyzer.analyze_clifford06(matrix, args.input)
        elif args.blocks:
            report = analyzer.analyze_blocks(matrix, args.input)
        else:
            report = analyzer.analyze(
                matrix, args.input, family=args.family, jordan=args.jordan, cayley=args.cayley
            )

    fmt = settings.get("report", {}).get("format", "text")
    formatter = JsonFormatter(settings) if fmt == "json" else TextFormatter(settings)
    print(formatter.format(report))

    if report.input.mode == "structured" and args.family == AUTO and not report.detected_families:
        logger.warning("No family detected; the report carries the oracle result only")
        return EXIT_NO_FAMILY
    return EXIT_OK


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments and execute a command.

    Returns:
        Exit code: 0 success, 1 input or validation error, 2 no family detected
    """
    args = build_parser().parse_args(argv)
    try:
        return analyze(args)
    except KeyboardInterrupt:
        print("\nInterrupted", file=sys.stderr)
        return EXIT_INTERRUPTED
    except (MatrixParseError, ConfigValidationError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except NotInFamily as e:
        print(f"Error: not in family: {e}", file=sys.stderr)
        return EXIT_ERROR
    except MinpolyError as e:
        print(f"Error: {e.__class__.__name__}: {e}", file=sys.stderr)
        return EXIT_ERROR


def main():
    """Main entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
