"""
Profile Vectors, Ferrers Shapes and Greedy Profile Selection

A profile vector marks the pivot columns of a subspace's RREF generator.
Its profile matrix P_M(v) is the RREF template with ones at the pivots,
forced zeros, and free entries ("dots"); the Ferrers shape S(v) keeps the
columns of P_M(v) that hold at least one dot.

Bits are listed left to right, matching matrix columns; as integers they
are read big-endian (v_1 is the most significant bit).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from projcodes.config import get_limit
from projcodes.errors import ParameterError, ParseError, ShapeError
from projcodes.matq import Subspace


logger = logging.getLogger(__name__)


class SelectionMetric(Enum):
    """Distance used between profile vectors during selection."""
    ASYMMETRIC = "asymmetric"
    HAMMING = "hamming"


MetricLike = Union[SelectionMetric, str]


def as_metric(metric: MetricLike) -> SelectionMetric:
    if isinstance(metric, SelectionMetric):
        return metric
    try:
        return SelectionMetric(str(metric).lower())
    except ValueError as e:
        raise ParameterError(f"Unknown selection metric {metric!r}", module="profiles", code="OUT_OF_RANGE") from e


# ============================================================================
# Profile Vectors
# ============================================================================

@dataclass(frozen=True)
class ProfileVector:
    """Binary vector of length n."""
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ParseError(f"Profile bits must be 0/1: {bits}", module="profiles", code="BAD_PROFILE")
        object.__setattr__(self, "bits", bits)

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    @property
    def support(self) -> list[int]:
        """0-based indices of the ones."""
        return [i for i, b in enumerate(self.bits) if b]

    def complement(self) -> "ProfileVector":
        return ProfileVector(tuple(1 - b for b in self.bits))

    def to_int(self) -> int:
        value = 0
        for b in self.bits:
            value = (value << 1) | b
        return value

    @classmethod
    def from_int(cls, value: int, n: int) -> "ProfileVector":
        return cls(tuple((value >> (n - 1 - i)) & 1 for i in range(n)))

    def to_text(self) -> str:
        return "".join(str(b) for b in self.bits)

    @classmethod
    def from_text(cls, text: str) -> "ProfileVector":
        text = text.strip()
        if not text or any(ch not in "01" for ch in text):
            raise ParseError(f"Not a binary profile: {text!r}", module="profiles", code="BAD_PROFILE")
        return cls(tuple(int(ch) for ch in text))

    def __str__(self) -> str:
        return self.to_text()


def profile_of(V: Subspace) -> ProfileVector:
    """Pivot pattern of the canonical generator; weight equals dim V."""
    bits = [0] * V.n
    for pc in V.pivots():
        bits[pc] = 1
    return ProfileVector(tuple(bits))


# ============================================================================
# Ferrers Shapes
# ============================================================================

@dataclass(frozen=True, eq=False)
class FerrersShape:
    """
    The shape S(v): an m x eta dot mask over the dot-carrying columns of
    P_M(v), with m = wt(v).
    """
    profile: ProfileVector
    pivots: tuple[int, ...]
    dot_columns: tuple[int, ...]
    mask: np.ndarray

    @property
    def m(self) -> int:
        return len(self.pivots)

    @property
    def eta(self) -> int:
        return len(self.dot_columns)

    @property
    def w(self) -> int:
        return int(self.mask.sum())

    def dots_per_column(self) -> list[int]:
        return [int(x) for x in self.mask.sum(axis=0)]

    def template(self) -> np.ndarray:
        """P_M(v) with dots as -1."""
        n = self.profile.n
        P = np.zeros((self.m, n), dtype=np.int64)
        for i, pc in enumerate(self.pivots):
            P[i, pc] = 1
        for jj, c in enumerate(self.dot_columns):
            P[self.mask[:, jj], c] = -1
        return P


def profile_matrix(v: ProfileVector) -> FerrersShape:
    """Build S(v) from the pivot pattern of v."""
    pivots = tuple(v.support)
    if not pivots:
        return FerrersShape(v, (), (), np.zeros((0, 0), dtype=bool))
    pivot_set = set(pivots)
    dot_columns = tuple(c for c in range(pivots[0] + 1, v.n) if c not in pivot_set)
    mask = np.array(
        [[c > pc for c in dot_columns] for pc in pivots],
        dtype=bool
    ).reshape(len(pivots), len(dot_columns))
    mask.setflags(write=False)
    return FerrersShape(v, pivots, dot_columns, mask)


def closed_form_dots(v: ProfileVector) -> int:
    """sum over zero positions i of the number of ones at positions <= i."""
    total, ones = 0, 0
    for b in v.bits:
        ones += b
        if not b:
            total += ones
    return total


def eta_closed_form(v: ProfileVector) -> int:
    """n - (wt(v) + min supp(v)) + 1 with 1-based support, 0 for the zero vector."""
    if v.weight == 0:
        return 0
    return v.n - (v.weight + v.support[0] + 1) + 1


def score(v: ProfileVector, d: int) -> int:
    """Guaranteed Ferrers subcode dimension for distance d; may be negative."""
    if d < 1:
        raise ParameterError(f"Distance {d} must be >= 1", module="profiles", code="OUT_OF_RANGE")
    return closed_form_dots(v) - max(v.weight, eta_closed_form(v)) * (d - 1)


# ============================================================================
# Distances
# ============================================================================

def _check_lengths(x: ProfileVector, y: ProfileVector):
    if x.n != y.n:
        raise ShapeError(f"Length mismatch: {x.n} vs {y.n}", module="profiles", code="LENGTH_MISMATCH")


def n_transitions(x: ProfileVector, y: ProfileVector) -> int:
    """Number of 1 -> 0 transitions from x to y."""
    _check_lengths(x, y)
    return sum(1 for a, b in zip(x.bits, y.bits) if a == 1 and b == 0)


def asym_distance(x: ProfileVector, y: ProfileVector) -> int:
    return max(n_transitions(x, y), n_transitions(y, x))


def hamming(x: ProfileVector, y: ProfileVector) -> int:
    return n_transitions(x, y) + n_transitions(y, x)


def profile_distance(x: ProfileVector, y: ProfileVector, metric: MetricLike) -> int:
    if as_metric(metric) is SelectionMetric.ASYMMETRIC:
        return asym_distance(x, y)
    return hamming(x, y)


def rank_distance_for(d: int, metric: MetricLike) -> int:
    """Per-class rank distance paired with a selection distance d."""
    if as_metric(metric) is SelectionMetric.ASYMMETRIC:
        return d
    return -(-d // 2)


# ============================================================================
# Greedy Selection
# ============================================================================

def _popcounts(n: int) -> np.ndarray:
    pop = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        pop[1 << i:1 << (i + 1)] = pop[:1 << i] + 1
    return pop


def _candidate_scores(n: int, d: int, values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised score and weight for big-endian integer profile vectors."""
    ones = np.zeros_like(values)
    dots = np.zeros_like(values)
    bitlen = np.zeros_like(values)
    for i in range(n):
        bit = (values >> (n - 1 - i)) & 1
        ones = ones + bit
        dots = dots + (1 - bit) * ones
        bitlen = np.where((values >> i) > 0, i + 1, bitlen)
    eta = bitlen - ones
    return dots - np.maximum(ones, eta) * (d - 1), ones


def _distances(values: np.ndarray, v: int, metric: SelectionMetric, pop: np.ndarray, full: int) -> np.ndarray:
    if metric is SelectionMetric.ASYMMETRIC:
        return np.maximum(pop[values & (full ^ v)], pop[v & (full ^ values)])
    return pop[values ^ v]


def _check_selection_args(n: int, d: int, weight: Optional[int]):
    max_n = get_limit("max_n")
    if not 1 <= n <= max_n:
        raise ParameterError(f"n={n} outside 1..{max_n}", module="profiles", code="OUT_OF_RANGE")
    # d > n is allowed: no two vectors are that far apart, so one is selected
    if d < 1:
        raise ParameterError(f"d={d} must be >= 1", module="profiles", code="OUT_OF_RANGE")
    if weight is not None and not 0 <= weight <= n:
        raise ParameterError(f"weight={weight} outside 0..{n}", module="profiles", code="OUT_OF_RANGE")


def greedy_select(
    n: int,
    d: int,
    metric: MetricLike = SelectionMetric.ASYMMETRIC,
    weight: Optional[int] = None
) -> list[ProfileVector]:
    """
    Greedy profile selection.

    Candidates (all of {0,1}^n, or only weight-k vectors) are visited by
    descending score(v, d'), then larger wt(v)(n - wt(v)), then smaller
    integer value; d' = d for asymmetric selection and ceil(d/2) for
    Hamming selection. Each selected vector removes every available vector
    at distance < d.

    The tie-break decides small cases: n = 2, d = 2 (asymmetric) gives
    [(1,0)]: it wins the score tie on wt(n - wt) and lies within
    distance 1 of every other vector.

    Returns:
        Selected vectors in selection order
    """
    _check_selection_args(n, d, weight)
    metric = as_metric(metric)

    values = np.arange(1 << n, dtype=np.int64)
    scores, weights = _candidate_scores(n, rank_distance_for(d, metric), values)
    if weight is not None:
        keep = weights == weight
        values, scores, weights = values[keep], scores[keep], weights[keep]

    order = np.lexsort((values, -(weights * (n - weights)), -scores))
    values = values[order]

    if d == 1:
        selected_values = [int(x) for x in values]
    else:
        pop = _popcounts(n)
        full = (1 << n) - 1
        available = np.ones(values.size, dtype=bool)
        selected_values = []
        for idx in range(values.size):
            if not available[idx]:
                continue
            v = int(values[idx])
            selected_values.append(v)
            available &= _distances(values, v, metric, pop, full) >= d

    logger.debug("greedy_select n=%d d=%d %s -> %d vectors", n, d, metric.value, len(selected_values))
    return [ProfileVector.from_int(x, n) for x in selected_values]


def is_maximal(
    selection: Sequence[ProfileVector],
    n: int,
    d: int,
    metric: MetricLike = SelectionMetric.ASYMMETRIC,
    weight: Optional[int] = None
) -> bool:
    """True if no unselected candidate could be added without a distance < d."""
    metric = as_metric(metric)
    pop = _popcounts(n)
    full = (1 << n) - 1
    values = np.arange(1 << n, dtype=np.int64)
    if weight is not None:
        values = values[pop[values] == weight]
    covered = np.zeros(values.size, dtype=bool)
    for v in selection:
        covered |= _distances(values, v.to_int(), metric, pop, full) < d
    return bool(covered.all())


def min_pairwise_distance(
    profiles: Sequence[ProfileVector],
    metric: MetricLike
) -> tuple[Optional[int], Optional[tuple[int, int]]]:
    """Least distance between two listed vectors and the first pair attaining it."""
    if len(profiles) < 2:
        return None, None
    metric = as_metric(metric)
    n = profiles[0].n
    if any(v.n != n for v in profiles):
        raise ShapeError("Profiles have different lengths", module="profiles", code="LENGTH_MISMATCH")
    pop = _popcounts(n)
    full = (1 << n) - 1
    values = np.array([v.to_int() for v in profiles], dtype=np.int64)

    best, where = None, None
    for i in range(values.size - 1):
        dist = _distances(values[i + 1:], int(values[i]), metric, pop, full)
        j = int(np.argmin(dist))
        if best is None or dist[j] < best:
            best, where = int(dist[j]), (i, i + 1 + j)
    return best, where


# ============================================================================
# Text format
# ============================================================================

def dump_profiles(profiles: Iterable[ProfileVector]) -> str:
    """One vector per line as n binary digits."""
    return "".join(v.to_text() + "\n" for v in profiles)


def load_profiles(text: str) -> list[ProfileVector]:
    vectors = [ProfileVector.from_text(line) for line in text.splitlines() if line.strip()]
    if vectors and len({v.n for v in vectors}) != 1:
        raise ParseError("Profiles have different lengths", module="profiles", code="BAD_PROFILE")
    return vectors
