#!/usr/bin/env python3
import sys
import logging
import argparse

from typing import Dict, List, Optional, Tuple

import constants

from components.exceptions import CapacityError, ParameterError
from components.harness import commands
from components.harness.config import apply_config, read_config
from components.harness.suites import SUITES
from components.harness.sweep import GENERATORS

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def build_parser() -> Tuple[argparse.ArgumentParser, Dict[str, argparse.ArgumentParser]]:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None, help="key=value file of option defaults")
    common.add_argument("--log-level", type=str, default="INFO", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    common.add_argument("--log-file", type=str, default=None)
    common.add_argument("--quiet", action="store_true", help="hide progress bars")

    parser = argparse.ArgumentParser(prog=constants.WORKLOAD_NAME, description="Graph tiling laboratory")
    subparsers = parser.add_subparsers(dest="command", required=True)
    children = {}

    generate = subparsers.add_parser("generate", parents=[common], help="write a generated graph as an edge list")
    generate.add_argument("kind", choices=sorted(commands.GENERATE_ARITY))
    generate.add_argument("params", type=int, nargs="*")
    generate.add_argument("--out", type=str, default=None)
    generate.add_argument("--seed", type=int, default=0)
    generate.add_argument("--input", type=str, default=None, help="edge list to expand")
    generate.set_defaults(handler=commands.cmd_generate)
    children["generate"] = generate

    tile = subparsers.add_parser("tile", parents=[common], help="tile an edge-list graph")
    tile.add_argument("file", type=str)
    tile.add_argument("--pattern", type=str, default=None, help="complete bipartite pattern as s,t")
    tile.add_argument("--pattern-file", type=str, default=None, help="edge list of a bipartite pattern")
    tile.add_argument("--mode", type=str, default="exact", choices=["exact", "greedy", "iterate"])
    tile.add_argument("--seed", type=int, default=0)
    tile.add_argument("--budget", type=int, default=constants.DEFAULT_NODE_BUDGET)
    tile.add_argument("--copy-cap", type=int, default=constants.DEFAULT_COPY_CAP)
    tile.add_argument("--p", type=int, default=constants.DEFAULT_EXPANSION_FACTOR)
    tile.add_argument("--q", type=int, default=constants.DEFAULT_ROUNDS)
    tile.add_argument("--alpha", type=float, default=None)
    tile.add_argument("--eps", type=float, default=0.1)
    tile.add_argument("--trace", type=str, default=None, help="CSV path for the iteration trace")
    tile.add_argument("--tiling-out", type=str, default=None)
    tile.set_defaults(handler=commands.cmd_tile)
    children["tile"] = tile

    verify = subparsers.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("suite", choices=sorted(SUITES))
    verify.add_argument("--max-n", type=int, default=None)
    verify.add_argument("--max-st", type=int, default=4)
    verify.add_argument("--max-ab", type=int, default=60)
    verify.add_argument("--cases", type=int, default=500)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--failures", type=str, default=None, help="CSV path for failing cases")
    verify.set_defaults(handler=commands.cmd_verify)
    children["verify"] = verify

    sweep = subparsers.add_parser("sweep", parents=[common], help="run a parameter sweep into a CSV journal")
    sweep.add_argument("--pattern", type=str, nargs="+", default=["1,2"])
    sweep.add_argument("--alpha", type=float, nargs="+", default=[0.5])
    sweep.add_argument("--n", type=int, nargs="+", default=[12])
    sweep.add_argument("--seed", type=int, nargs="+", default=[0])
    sweep.add_argument("--generator", type=str, default="M", choices=list(GENERATORS))
    sweep.add_argument("--out", type=str, default=None)
    sweep.add_argument("--workers", type=int, default=1)
    sweep.set_defaults(handler=commands.cmd_sweep)
    children["sweep"] = sweep

    return parser, children


def configure_logging(args: argparse.Namespace) -> None:
    handlers = [logging.StreamHandler(sys.stderr)]
    if args.log_file:
        handlers.append(logging.FileHandler(args.log_file))
    logging.basicConfig(level=getattr(logging, args.log_level), format=LOG_FORMAT, handlers=handlers, force=True)


def main(argv: Optional[List[str]] = None) -> int:
    parser, children = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        try:
            apply_config(children[args.command], read_config(args.config))
        except (OSError, ParameterError) as e:
            parser.error(str(e))
        args = parser.parse_args(argv)
    configure_logging(args)
    logger.debug(f"Arguments: {args}")

    try:
        return args.handler(args)
    except CapacityError as e:
        logger.error(f"Capacity exceeded: {e}")
        return commands.EXIT_CAPACITY
    except ParameterError as e:
        logger.error(f"Invalid input: {e}")
        return commands.EXIT_USAGE
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return commands.EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
