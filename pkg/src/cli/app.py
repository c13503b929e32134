"""
Command-line front-end.

Subcommands:
    bounds      every bound for one graph and α
    verify      check a vertex set against a domination mode
    construct   randomized or derandomized α / α-rate dominating set
    exact       exact domination number for small graphs
    experiment  paper-example, alpha-sweep or family-sweep tables

Exit codes: 0 success (or valid set), 1 usage or input error,
2 the set given to verify is invalid.
"""

import argparse
import logging
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.bounds import bound_report
from ..core.construct import best_of_trials, derandomize_alpha
from ..core.domination import ModeKind, verify
from ..core.exact import exact_number
from .config import DEFAULTS, ConfigError, RunConfig, parse_alpha
from .experiments import EXPERIMENTS, run_experiment
from .render import emit, render

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID_SET = 2

Result = Tuple[object, List[Dict[str, object]], int]


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as ConfigError."""

    def error(self, message):
        raise ConfigError(f"{self.prog}: {message}")


def _joined(vertices: Sequence[int]) -> str:
    return " ".join(str(v) for v in vertices)


# ============================================
# Commands
# ============================================

def cmd_bounds(config: RunConfig) -> Result:
    graph = config.load_graph()
    report = bound_report(graph, config.alpha, label=config.graph_label)
    rows = []
    for name, bound in report.bounds.items():
        rows.append({'bound': name, **bound.to_dict()})
    return report.to_dict(), rows, EXIT_OK


def read_vertex_set(path: str, base: int = 0) -> List[int]:
    """
    Read whitespace-separated vertex indices from a file.

    Raises:
        ConfigError: If a token is not an integer
    """
    with open(path, 'r', encoding='utf-8') as handle:
        tokens = handle.read().split()
    members = []
    for token in tokens:
        try:
            members.append(int(token) - base)
        except ValueError:
            raise ConfigError(f"set file '{path}': '{token}' is not a vertex index") from None
    return members


def cmd_verify(config: RunConfig, set_path: str) -> Result:
    graph = config.load_graph()
    members = read_vertex_set(set_path, config.base)
    report = verify(graph, members, config.domination_mode())

    row = {
        'mode': str(report.mode),
        'size': report.size,
        'valid': report.valid,
        'deficiencies': " ".join(
            f"{v}:{req}>{got}" for v, (req, got) in sorted(report.deficiencies.items())
        ),
    }
    return report.to_dict(), [row], EXIT_OK if report.valid else EXIT_INVALID_SET


def cmd_construct(config: RunConfig) -> Result:
    graph = config.load_graph()
    alpha = config.alpha
    report = bound_report(graph, alpha, label=config.graph_label)

    if config.derandomize:
        if config.mode != 'alpha':
            raise ConfigError("--derandomize only supports --mode alpha")
        members = derandomize_alpha(graph, alpha)
        document = {
            'mode': f"alpha({alpha})",
            'method': 'derandomized',
            'size': len(members),
            'D': list(members),
            'bound_absolute': report.bounds['thm2'].absolute,
        }
        row = {k: v for k, v in document.items() if k != 'D'}
        row['D'] = _joined(members)
        return document, [row], EXIT_OK

    kind = ModeKind.ALPHA if config.mode == 'alpha' else ModeKind.ALPHA_RATE
    outcome = best_of_trials(graph, alpha, kind, config.construction_params())
    bound_name = 'thm2' if kind == ModeKind.ALPHA else 'thm3'

    document = outcome.to_dict()
    document['method'] = 'best-of-trials'
    document['trials'] = config.trials
    document['master_seed'] = config.seed
    document['bound_absolute'] = report.bounds[bound_name].absolute

    row = {
        'mode': document['mode'],
        'method': document['method'],
        'size': outcome.size,
        'p_used': outcome.p_used,
        'trial_index': outcome.trial_index,
        'seed': outcome.seed,
        'bound_absolute': document['bound_absolute'],
        'D': _joined(outcome.D),
    }
    return document, [row], EXIT_OK


def cmd_exact(config: RunConfig) -> Result:
    graph = config.load_graph()
    result = exact_number(graph, config.domination_mode())
    document = result.to_dict()
    row = dict(document)
    row['witness'] = _joined(result.witness)
    return document, [row], EXIT_OK


def cmd_experiment(config: RunConfig, name: str) -> Result:
    document, rows = run_experiment(name, config)
    return document, rows, EXIT_OK


# ============================================
# Argument parsing
# ============================================

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog='alphadom',
        description="Bounds, constructions and exact values for α-domination in graphs.",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help="debug diagnostics")
    verbosity.add_argument('-q', '--quiet', action='store_true', help="errors only")

    output = _Parser(add_help=False)
    output.add_argument('--format', choices=('json', 'csv', 'text'), default=DEFAULTS['format'])
    output.add_argument('--out', help="write output to this path instead of stdout")

    source = _Parser(add_help=False)
    source.add_argument('--in', dest='input_path', help="graph file (DIMACS or edge list)")
    source.add_argument('--gen', dest='generator', help="generator spec, e.g. cycle:5")
    source.add_argument('--base', type=int, default=0, help="index base of edge lists and set files")

    mode = _Parser(add_help=False)
    mode.add_argument('--mode', choices=('dom', 'kdom', 'tuple', 'alpha', 'rate'), default='alpha')
    mode.add_argument('--k', type=int)

    trials = _Parser(add_help=False)
    trials.add_argument('--seed', type=int, default=DEFAULTS['seed'])
    trials.add_argument('--trials', type=int, default=DEFAULTS['trials'])
    trials.add_argument('--workers', type=int, default=1)

    commands = parser.add_subparsers(dest='command', required=True)

    bounds = commands.add_parser('bounds', parents=[source, output], help="evaluate every bound")
    bounds.add_argument('--alpha', required=True, help="α as p/q")

    check = commands.add_parser('verify', parents=[source, mode, output], help="check a vertex set")
    check.add_argument('--alpha', help="α as p/q")
    check.add_argument('--set', dest='set_path', required=True,
                       help="file of whitespace-separated vertex indices")

    construct = commands.add_parser('construct', parents=[source, trials, output],
                                    help="build a small α or α-rate dominating set")
    construct.add_argument('--alpha', required=True, help="α as p/q")
    construct.add_argument('--mode', choices=('alpha', 'rate'), default='alpha')
    construct.add_argument('--p-rule', choices=('thm', 'cor'), default='thm')
    construct.add_argument('--p', dest='p_override', type=float, help="fixed selection probability")
    construct.add_argument('--derandomize', action='store_true')
    construct.add_argument('--greedy-repair', action='store_true')

    exact = commands.add_parser('exact', parents=[source, mode, output],
                                help="exact domination number (small graphs)")
    exact.add_argument('--alpha', help="α as p/q")

    experiment = commands.add_parser('experiment', parents=[source, trials, output],
                                     help="comparison tables")
    experiment.add_argument('name', choices=tuple(EXPERIMENTS))
    experiment.add_argument('--alpha', help="α as p/q (family-sweep)")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    alpha_text = getattr(args, 'alpha', None)
    return RunConfig(
        command=args.command,
        input_path=getattr(args, 'input_path', None),
        generator=getattr(args, 'generator', None),
        base=getattr(args, 'base', 0),
        alpha=parse_alpha(alpha_text) if alpha_text else None,
        mode=getattr(args, 'mode', 'alpha'),
        k=getattr(args, 'k', None),
        seed=getattr(args, 'seed', DEFAULTS['seed']),
        trials=getattr(args, 'trials', DEFAULTS['trials']),
        p_override=getattr(args, 'p_override', None),
        p_rule=getattr(args, 'p_rule', 'thm'),
        derandomize=getattr(args, 'derandomize', False),
        greedy_repair=getattr(args, 'greedy_repair', False),
        workers=getattr(args, 'workers', 1),
        output_format=args.format,
        output_path=args.out,
    )


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    level = logging.DEBUG if verbose else logging.ERROR if quiet else logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s", force=True)


def dispatch(args: argparse.Namespace, config: RunConfig) -> Result:
    if args.command == 'bounds':
        return cmd_bounds(config)
    if args.command == 'verify':
        return cmd_verify(config, args.set_path)
    if args.command == 'construct':
        return cmd_construct(config)
    if args.command == 'exact':
        return cmd_exact(config)
    return cmd_experiment(config, args.name)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line and return the process exit code.

    Results go to stdout (or --out); diagnostics go to stderr.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ConfigError as exc:
        configure_logging()
        logger.error("%s", exc)
        return EXIT_ERROR
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)

    configure_logging(args.verbose, args.quiet)
    try:
        config = config_from_args(args)
        document, rows, code = dispatch(args, config)
        emit(render(document, rows, config.output_format), config.output_path, sys.stdout)
    except (ValueError, OSError) as exc:
        logger.error("%s", exc)
        return EXIT_ERROR
    return code
