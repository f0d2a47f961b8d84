#!/usr/bin/env python3
"""Main entry point for vclab."""

import argparse
import sys
from typing import List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

load_dotenv()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vclab",
        description="Complexity bounds, shattering witnesses and PAC experiments for linear control systems",
    )
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default=None, help="Default from settings")
    commands = parser.add_subparsers(dest="command", required=True)

    bounds = commands.add_parser("bounds", help="Evaluate bound formulas over a grid")
    bounds.add_argument("--config", required=True, help="Bounds run config (JSON)")
    bounds.add_argument("--format", choices=["json", "csv"], default="csv")
    bounds.add_argument("--out", default=None, help="Output file (default stdout)")

    verify = commands.add_parser("verify", help="Run a shattering construction")
    verify.add_argument("--config", required=True, help="Verify run config (JSON)")
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--out", default=None)

    respond = commands.add_parser("respond", help="Evaluate a system response")
    respond.add_argument("--system", required=True, help="System file (JSON)")
    respond.add_argument("--controls", required=True, help="Control matrix file (JSON)")
    respond.add_argument("--tau", type=float, default=None)
    respond.add_argument("--oracle", action="store_true", help="Add the quadrature cross-check")
    respond.add_argument("--out", default=None)

    learn = commands.add_parser("learn", help="Run the PAC learning experiment")
    learn.add_argument("--config", required=True, help="Learn run config (JSON)")
    learn.add_argument("--seed", type=int, default=None)
    learn.add_argument("--format", choices=["json", "csv"], default="csv")
    learn.add_argument("--out", default=None)

    selftest = commands.add_parser("selftest", help="Run the self-test suite")
    selftest.add_argument("--seed", type=int, default=None)
    selftest.add_argument("--out", default=None)

    return parser


def run(args: argparse.Namespace):
    """Dispatch to the command functions."""
    from src.interface import (
        cmd_bounds,
        cmd_learn,
        cmd_respond,
        cmd_selftest,
        cmd_verify,
        load_bounds_config,
        load_learn_config,
        load_verify_config,
    )

    if args.command == "bounds":
        return cmd_bounds(load_bounds_config(args.config), args.format)
    if args.command == "verify":
        return cmd_verify(load_verify_config(args.config), args.seed)
    if args.command == "respond":
        return cmd_respond(args.system, args.controls, args.tau, args.oracle)
    if args.command == "learn":
        return cmd_learn(load_learn_config(args.config), args.seed, args.format)
    return cmd_selftest(seed=args.seed)


def main(argv: Optional[List[str]] = None) -> int:
    from src.interface import EXIT_FAILED, EXIT_INVALID, emit, format_validation_error
    from src.utils import VCLabError, bind_run, get_logger, get_settings, setup_logging

    args = build_parser().parse_args(argv)
    settings = get_settings()
    setup_logging(args.log_level or settings.log_level)
    bind_run(args.command, getattr(args, "seed", None))
    logger = get_logger(__name__)

    try:
        result = run(args)
    except ValidationError as e:
        print(f"invalid input:\n{format_validation_error(e)}", file=sys.stderr)
        return EXIT_INVALID
    except VCLabError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code
    except (ValueError, OSError) as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
    except Exception:
        logger.exception("Unexpected failure", command=args.command)
        return EXIT_FAILED

    emit(result.text, args.out)
    if result.exit_code != 0:
        logger.warning("Command finished with non-zero exit", command=args.command, exit_code=result.exit_code)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
