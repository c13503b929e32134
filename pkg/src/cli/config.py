"""
Run configuration for the command-line front-end.
"""

from dataclasses import dataclass
from typing import List, Optional

from ..core.construct import ConstructionParams, PRule
from ..core.domination import Alpha, Mode
from ..core.generators import (
    gen_circulant,
    gen_complete,
    gen_cycle,
    gen_empty,
    gen_gnp,
    gen_path,
    gen_petersen,
    gen_random_regular,
)
from ..core.graph import Graph
from ..core.graph_io import read_graph_file


DEFAULTS = {
    'seed': 20240601,
    'trials': 100,
    'format': 'text',
    'alpha': '1/2',
    'alpha_grid': ('1/10', '1/4', '1/2', '3/4', '1/1'),
    'exact_sweep_max_n': 16,
    'float_format': '%.10g',
    'family': (
        'cycle:5', 'cycle:12', 'path:10', 'complete:6', 'petersen',
        'circulant:20:1,3', 'circulant:101:1-10', 'regular:16:3:1',
        'regular:50:4:11', 'gnp:14:0.4:3',
    ),
}

OUTPUT_FORMATS = ('json', 'csv', 'text')


class ConfigError(ValueError):
    """Exception raised for invalid command-line configuration."""
    pass


def parse_alpha(text: str) -> Alpha:
    """Parse α from a 'p/q' string, wrapping errors as ConfigError."""
    try:
        return Alpha.parse(text)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def parse_offsets(text: str) -> List[int]:
    """
    Parse circulant offsets: comma-separated integers or ranges.

    Example:
        >>> parse_offsets("1-3,7")
        [1, 2, 3, 7]
    """
    offsets = []
    for part in text.split(','):
        lo, sep, hi = part.partition('-')
        try:
            if sep:
                offsets.extend(range(int(lo), int(hi) + 1))
            else:
                offsets.append(int(lo))
        except ValueError:
            raise ConfigError(f"bad circulant offset '{part}'") from None
    return offsets


def graph_from_spec(spec: str) -> Graph:
    """
    Build a graph from a compact generator spec.

    Supported specs:
        cycle:N, path:N, complete:N, empty:N, petersen,
        circulant:N:OFFSETS (e.g. circulant:2001:1-500),
        gnp:N:P:SEED, regular:N:D:SEED
    """
    name, *args = spec.split(':')

    def arity(count: int) -> None:
        if len(args) != count:
            raise ConfigError(f"generator '{name}' takes {count} argument(s): '{spec}'")

    try:
        if name == 'petersen':
            arity(0)
            return gen_petersen()
        if name in ('cycle', 'path', 'complete', 'empty'):
            arity(1)
            builder = {'cycle': gen_cycle, 'path': gen_path,
                       'complete': gen_complete, 'empty': gen_empty}[name]
            return builder(int(args[0]))
        if name == 'circulant':
            arity(2)
            return gen_circulant(int(args[0]), parse_offsets(args[1]))
        if name == 'gnp':
            arity(3)
            return gen_gnp(int(args[0]), float(args[1]), int(args[2]))
        if name == 'regular':
            arity(3)
            return gen_random_regular(int(args[0]), int(args[1]), int(args[2]))
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"bad generator spec '{spec}': {exc}") from None

    raise ConfigError(f"unknown generator '{name}' in spec '{spec}'")


def parse_mode(name: str, alpha: Optional[Alpha], k: Optional[int]) -> Mode:
    """Build a Mode from the --mode/--alpha/--k flags."""
    if name == 'dom':
        return Mode.dom()
    if name in ('kdom', 'tuple'):
        if k is None:
            raise ConfigError(f"mode '{name}' needs --k")
        return Mode.k_dom(k) if name == 'kdom' else Mode.k_tuple(k)
    if name in ('alpha', 'rate'):
        if alpha is None:
            raise ConfigError(f"mode '{name}' needs --alpha")
        return Mode.alpha_mode(alpha) if name == 'alpha' else Mode.alpha_rate(alpha)
    raise ConfigError(f"unknown mode '{name}'")


@dataclass
class RunConfig:
    """Validated settings for one command invocation."""
    command: str
    input_path: Optional[str] = None
    generator: Optional[str] = None
    base: int = 0
    alpha: Optional[Alpha] = None
    mode: str = 'alpha'
    k: Optional[int] = None
    seed: int = DEFAULTS['seed']
    trials: int = DEFAULTS['trials']
    p_override: Optional[float] = None
    p_rule: str = 'thm'
    derandomize: bool = False
    greedy_repair: bool = False
    workers: int = 1
    output_format: str = DEFAULTS['format']
    output_path: Optional[str] = None

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"output format must be one of {OUTPUT_FORMATS}")
        if self.trials < 1:
            raise ConfigError(f"--trials must be at least 1, got {self.trials}")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError(f"--seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.p_override is not None and not 0.0 <= self.p_override <= 1.0:
            raise ConfigError(f"--p must be in [0, 1], got {self.p_override}")
        if self.workers < 1:
            raise ConfigError(f"--workers must be at least 1, got {self.workers}")
        if self.input_path and self.generator:
            raise ConfigError("give either --in or --gen, not both")

    @property
    def has_graph_source(self) -> bool:
        return bool(self.input_path or self.generator)

    @property
    def graph_label(self) -> str:
        return self.generator or self.input_path or ""

    def load_graph(self) -> Graph:
        """
        Load the graph named by --in or --gen.

        Raises:
            ConfigError: If neither source is given or the spec is invalid
            FileNotFoundError: If --in names a missing file
            GraphParseError: If the file cannot be parsed
        """
        if self.generator:
            return graph_from_spec(self.generator)
        if self.input_path:
            return read_graph_file(self.input_path, base=self.base)
        raise ConfigError("a graph source is required: --in <path> or --gen <spec>")

    def domination_mode(self) -> Mode:
        return parse_mode(self.mode, self.alpha, self.k)

    def construction_params(self) -> ConstructionParams:
        return ConstructionParams(
            trials=self.trials,
            master_seed=self.seed,
            p_override=self.p_override,
            p_rule=PRule(self.p_rule),
            greedy_repair=self.greedy_repair,
            workers=self.workers,
        )
