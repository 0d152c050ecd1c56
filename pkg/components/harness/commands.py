"""
Handlers for the app.py subcommands. Each takes the parsed arguments,
writes its report to standard output and returns the process exit code.
"""
import sys
import logging

from typing import Tuple

from components.augment import IterationConfig, iterate_expansion_improvement, write_trace
from components.exceptions import ParameterError
from components.graph_core import (
    expand,
    make_complete_bipartite,
    make_cycle,
    make_L,
    make_M,
    random_graph_gnm,
)
from components.graph_core.edge_list import read_edge_list_file, write_edge_list_file
from components.harness.suites import VerifyLimits, run_suite
from components.harness.sweep import SweepSpec, run_sweep
from components.tiling import Pattern, format_tiling, max_tiling_exact, max_tiling_greedy

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

GENERATE_ARITY = {"M": 2, "L": 2, "K": 2, "gnm": 2, "cycle": 1, "expand": 1}


def parse_pattern(text: str) -> Tuple[int, int]:
    """Parse "s,t" into (s, t) with 1 <= s <= t."""
    try:
        s, t = (int(part) for part in text.split(","))
    except ValueError:
        raise ParameterError(f"pattern must look like s,t, got {text!r}")
    if not 1 <= s <= t:
        raise ParameterError(f"pattern sizes must satisfy 1 <= s <= t, got {text!r}")
    return s, t


def cmd_generate(args) -> int:
    expected = GENERATE_ARITY[args.kind]
    if len(args.params) != expected:
        raise ParameterError(f"generate {args.kind} takes {expected} integer parameters, got {len(args.params)}")
    if not args.out:
        raise ParameterError("generate needs --out")
    if args.kind == "M":
        graph = make_M(*args.params)
    elif args.kind == "L":
        graph = make_L(*args.params)
    elif args.kind == "K":
        graph = make_complete_bipartite(*args.params)
    elif args.kind == "gnm":
        graph = random_graph_gnm(*args.params, seed=args.seed)
    elif args.kind == "cycle":
        graph = make_cycle(*args.params)
    else:
        if not args.input:
            raise ParameterError("generate expand needs --input")
        graph, _ = expand(read_edge_list_file(args.input), args.params[0])
    write_edge_list_file(graph, args.out)
    print(f"{graph.n} {graph.edge_count}")
    return EXIT_OK


def _pattern(args) -> Pattern:
    if args.pattern_file:
        return Pattern.from_graph(read_edge_list_file(args.pattern_file))
    if not args.pattern:
        raise ParameterError("tile needs --pattern or --pattern-file")
    return Pattern.complete_bipartite(*parse_pattern(args.pattern))


def cmd_tile(args) -> int:
    graph = read_edge_list_file(args.file)
    pattern = _pattern(args)
    exit_code = EXIT_OK
    trace = None
    if args.mode == "exact":
        result = max_tiling_exact(graph, pattern, budget=args.budget, cap=args.copy_cap)
        tiling = result.tiling
        if not result.optimal:
            exit_code = EXIT_CAPACITY
    elif args.mode == "greedy":
        tiling = max_tiling_greedy(graph, pattern, args.seed)
    else:
        config = IterationConfig(p=args.p, q=args.q, alpha=args.alpha, eps=args.eps, seed=args.seed)
        tiling, trace = iterate_expansion_improvement(graph, pattern, config)

    print(f"tiles: {tiling.tile_count}")
    print(f"covered: {tiling.size}")
    if args.mode == "exact":
        print(f"optimal: {'yes' if exit_code == EXIT_OK else 'no'}")
    if args.tiling_out:
        with open(args.tiling_out, "w", newline="\n") as f:
            f.write(format_tiling(tiling))
        logger.info(f"Tiling written to {args.tiling_out}")
    if trace is not None:
        if args.trace:
            write_trace(trace, args.trace)
            logger.info(f"Trace written to {args.trace}")
        else:
            sys.stdout.flush()
            write_trace(trace, sys.stdout)
    return exit_code


def cmd_verify(args) -> int:
    limits = VerifyLimits(
        max_n=args.max_n,
        max_st=args.max_st,
        max_ab=args.max_ab,
        cases=args.cases,
        seed=args.seed,
        quiet=args.quiet,
    )
    result = run_suite(args.suite, limits)
    if result.passed:
        print(f"{args.suite}: pass ({result.cases} cases)")
        return EXIT_OK
    print(f"{args.suite}: fail ({len(result.failures)} of {result.cases} cases)")
    frame = result.failure_frame()
    if args.failures:
        frame.to_csv(args.failures, index=False, lineterminator="\n")
        logger.info(f"Failures written to {args.failures}")
    else:
        sys.stdout.flush()
        frame.to_csv(sys.stdout, index=False, lineterminator="\n")
    return EXIT_FAILED


def cmd_sweep(args) -> int:
    if not args.out:
        raise ParameterError("sweep needs --out")
    spec = SweepSpec(
        patterns=tuple(parse_pattern(text) for text in args.pattern),
        alphas=tuple(args.alpha),
        ns=tuple(args.n),
        seeds=tuple(args.seed),
        generator=args.generator,
        output=args.out,
    )
    frame = run_sweep(spec, workers=args.workers, quiet=args.quiet)
    print(f"rows: {len(frame)}")
    print(f"output: {args.out}")
    return EXIT_OK

