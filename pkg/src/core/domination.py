"""
Domination requirements and set verification.

Five membership conditions are supported:

- DOM:           every v outside X has a neighbor in X
- K_DOM(k):      every v outside X has at least k neighbors in X
- K_TUPLE(k):    every v has |N[v] ∩ X| >= k   (needs min degree >= k-1)
- ALPHA(a):      every v outside X has |N(v) ∩ X| >= ceil(a·d_v)
- ALPHA_RATE(a): every v has |N[v] ∩ X| >= ceil(a·d_v)

The parameter a is an exact rational so ceil(a·d) never drifts.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np
from scipy.special import gammaln, logsumexp

from .graph import Graph

# Exact α-degree sums are only kept for graphs up to this order
EXACT_DEGREE_MAX_N = 64


class ModeUndefinedError(ValueError):
    """Exception raised when a domination mode does not apply to a graph."""
    pass


class InvalidVertexError(ValueError):
    """Exception raised when a vertex set names a vertex outside the graph."""
    pass


@dataclass(frozen=True)
class Alpha:
    """
    Exact rational α = p/q with 0 < p <= q, stored in lowest terms.
    """
    p: int
    q: int

    def __post_init__(self):
        if self.q <= 0 or self.p <= 0 or self.p > self.q:
            raise ValueError(f"alpha must satisfy 0 < p/q <= 1, got {self.p}/{self.q}")
        g = math.gcd(self.p, self.q)
        if g != 1:
            object.__setattr__(self, 'p', self.p // g)
            object.__setattr__(self, 'q', self.q // g)

    @classmethod
    def parse(cls, text: str) -> 'Alpha':
        """
        Parse a rational string "p/q" (or a bare integer "1").

        Decimal strings such as "0.1" are rejected: they cannot be
        represented exactly and would shift ceil(α·d).
        """
        text = text.strip()
        if '.' in text or 'e' in text.lower():
            raise ValueError(f"alpha must be given as 'p/q', not a decimal: '{text}'")
        num, _, den = text.partition('/')
        try:
            p = int(num)
            q = int(den) if den else 1
        except ValueError:
            raise ValueError(f"alpha must be given as 'p/q', got '{text}'") from None
        return cls(p, q)

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __float__(self) -> float:
        return self.p / self.q

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def __lt__(self, other: 'Alpha') -> bool:
        return self.as_fraction() < other.as_fraction()

    def __le__(self, other: 'Alpha') -> bool:
        return self.as_fraction() <= other.as_fraction()


class ModeKind(Enum):
    DOM = 'dom'
    K_DOM = 'kdom'
    K_TUPLE = 'tuple'
    ALPHA = 'alpha'
    ALPHA_RATE = 'rate'


@dataclass(frozen=True)
class Mode:
    """A domination condition: kind plus its k or α parameter."""
    kind: ModeKind
    k: Optional[int] = None
    alpha: Optional[Alpha] = None

    @classmethod
    def dom(cls) -> 'Mode':
        return cls(ModeKind.DOM)

    @classmethod
    def k_dom(cls, k: int) -> 'Mode':
        if k < 1:
            raise ValueError(f"k must be positive, got {k}")
        return cls(ModeKind.K_DOM, k=k)

    @classmethod
    def k_tuple(cls, k: int) -> 'Mode':
        if k < 1:
            raise ValueError(f"k must be positive, got {k}")
        return cls(ModeKind.K_TUPLE, k=k)

    @classmethod
    def alpha_mode(cls, alpha: Alpha) -> 'Mode':
        return cls(ModeKind.ALPHA, alpha=alpha)

    @classmethod
    def alpha_rate(cls, alpha: Alpha) -> 'Mode':
        return cls(ModeKind.ALPHA_RATE, alpha=alpha)

    @property
    def closed(self) -> bool:
        """True when the condition counts N[v] and applies to every vertex."""
        return self.kind in (ModeKind.K_TUPLE, ModeKind.ALPHA_RATE)

    def thresholds(self, graph: Graph) -> List[int]:
        """
        Required neighbor counts per vertex for this mode.

        Raises:
            ModeUndefinedError: For K_TUPLE(k) on a graph with δ < k-1
        """
        if self.kind == ModeKind.DOM:
            return [1] * graph.n
        if self.kind == ModeKind.K_DOM:
            return [self.k] * graph.n
        if self.kind == ModeKind.K_TUPLE:
            if graph.min_degree < self.k - 1:
                raise ModeUndefinedError(
                    f"{self.k}-tuple domination needs min degree >= {self.k - 1}, "
                    f"graph has {graph.min_degree}"
                )
            return [self.k] * graph.n
        return [ceil_alpha_times(self.alpha, d) for d in graph.degrees]

    def __str__(self) -> str:
        if self.kind in (ModeKind.K_DOM, ModeKind.K_TUPLE):
            return f"{self.kind.value}({self.k})"
        if self.kind in (ModeKind.ALPHA, ModeKind.ALPHA_RATE):
            return f"{self.kind.value}({self.alpha})"
        return self.kind.value


@dataclass
class VerifyReport:
    """
    Outcome of checking a vertex set against a mode.

    deficiencies maps each failing vertex to (required, achieved) with
    required > achieved; the set is valid exactly when it is empty.
    """
    mode: Mode
    size: int
    deficiencies: Dict[int, Tuple[int, int]] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not self.deficiencies

    def to_dict(self) -> Dict[str, object]:
        return {
            'mode': str(self.mode),
            'size': self.size,
            'valid': self.valid,
            'deficiencies': {
                str(v): {'required': req, 'achieved': got}
                for v, (req, got) in sorted(self.deficiencies.items())
            },
        }


@dataclass
class AlphaDegrees:
    """
    α-degree statistics of a graph.

    log_open / log_closed are ln d̂_α and ln d̃_α (-inf when the average is 0).
    exact_open / exact_closed hold n·d̂_α and n·d̃_α as integers for
    graphs of order at most EXACT_DEGREE_MAX_N.
    """
    n: int
    log_open: float
    log_closed: float
    exact_open: Optional[int] = None
    exact_closed: Optional[int] = None

    @property
    def open_degree(self) -> float:
        return math.exp(self.log_open)

    @property
    def closed_degree(self) -> float:
        return math.exp(self.log_closed)


def ceil_alpha_times(alpha: Alpha, d: int) -> int:
    """
    Exact ceil(α·d) in integer arithmetic.

    Example:
        >>> ceil_alpha_times(Alpha(1, 10), 1000)
        100
    """
    return (alpha.p * d + alpha.q - 1) // alpha.q


def delta_hat(graph: Graph, alpha: Alpha) -> int:
    """δ̂ = floor(δ·(1-α)) + 1."""
    return delta_hat_from_min_degree(graph.min_degree, alpha)


def delta_hat_from_min_degree(min_degree: int, alpha: Alpha) -> int:
    return (min_degree * (alpha.q - alpha.p)) // alpha.q + 1


def small_alpha_threshold(graph: Graph) -> Optional[Alpha]:
    """
    Return 1/Δ, the largest α for which every vertex needs a single neighbor.

    For α at most this value the α-dominating sets are exactly the
    dominating sets. None for edgeless graphs.
    """
    if graph.max_degree == 0:
        return None
    return Alpha(1, graph.max_degree)


def is_small_alpha(graph: Graph, alpha: Alpha) -> bool:
    threshold = small_alpha_threshold(graph)
    return threshold is not None and alpha <= threshold


def _check_members(graph: Graph, members: Iterable[int]) -> List[bool]:
    in_set = [False] * graph.n
    for v in members:
        if isinstance(v, (bool, np.bool_)) or not isinstance(v, (int, np.integer)) \
                or not 0 <= v < graph.n:
            raise InvalidVertexError(f"vertex {v} is not in the graph (n={graph.n})")
        in_set[int(v)] = True
    return in_set


def verify(graph: Graph, members: Iterable[int], mode: Mode) -> VerifyReport:
    """
    Check a vertex set against a domination mode.

    Args:
        graph: The graph
        members: Vertex set X
        mode: Domination condition

    Returns:
        VerifyReport listing every vertex whose requirement is unmet

    Raises:
        InvalidVertexError: If X names a vertex outside the graph
        ModeUndefinedError: For K_TUPLE(k) on a graph with δ < k-1
    """
    in_set = _check_members(graph, members)
    thresholds = mode.thresholds(graph)
    closed = mode.closed

    deficiencies = {}
    for v in range(graph.n):
        if in_set[v] and not closed:
            continue
        nbhd = graph.closed_neighbors(v) if closed else graph.neighbors(v)
        achieved = sum(1 for u in nbhd if in_set[u])
        if achieved < thresholds[v]:
            deficiencies[v] = (thresholds[v], achieved)

    return VerifyReport(mode=mode, size=sum(in_set), deficiencies=deficiencies)


def log_binomial(n: int, k: int) -> float:
    """
    Natural log of C(n, k) via log-gamma; -inf when k < 0 or k > n.
    """
    if k < 0 or k > n:
        return -math.inf
    return float(gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1))


def _log_average(log_terms: np.ndarray, n: int) -> float:
    finite = log_terms[np.isfinite(log_terms)]
    if finite.size == 0:
        return -math.inf
    return float(logsumexp(finite)) - math.log(n)


def alpha_degrees(graph: Graph, alpha: Alpha) -> AlphaDegrees:
    """
    Compute the α-degree d̂_α and closed α-degree d̃_α.

    d̂_α = (1/n) Σ C(d_i, ceil(α·d_i) - 1)
    d̃_α = (1/n) Σ C(d_i + 1, ceil(α·d_i) - 1)

    with C(x, -1) = 0, which only arises for isolated vertices.
    Sums are accumulated in log space; exact integer sums are added
    for graphs of order at most EXACT_DEGREE_MAX_N.
    """
    degrees = graph.degree_array
    tops = np.array([ceil_alpha_times(alpha, int(d)) - 1 for d in degrees],
                    dtype=np.int64)

    def log_terms(upper: np.ndarray) -> np.ndarray:
        terms = np.full(graph.n, -np.inf)
        valid = tops >= 0
        u, k = upper[valid], tops[valid]
        terms[valid] = gammaln(u + 1) - gammaln(k + 1) - gammaln(u - k + 1)
        return terms

    log_open = _log_average(log_terms(degrees), graph.n)
    log_closed = _log_average(log_terms(degrees + 1), graph.n)

    exact_open = exact_closed = None
    if graph.n <= EXACT_DEGREE_MAX_N:
        exact_open = sum(_comb(int(d), int(k)) for d, k in zip(degrees, tops))
        exact_closed = sum(_comb(int(d) + 1, int(k)) for d, k in zip(degrees, tops))

    return AlphaDegrees(
        n=graph.n,
        log_open=log_open,
        log_closed=log_closed,
        exact_open=exact_open,
        exact_closed=exact_closed,
    )


def _comb(n: int, k: int) -> int:
    return math.comb(n, k) if k >= 0 else 0
