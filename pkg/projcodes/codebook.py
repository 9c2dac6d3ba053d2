"""
Subspace Codes from Lifted Ferrers-Diagram Codes

A code is a list of classes, one per selected profile vector v. Each
class holds a Ferrers-diagram rank-metric code for S(v); its codewords are
substituted into the dots of P_M(v) and the row spaces of the resulting
generators are the codewords of the subspace code.

Two metrics are supported:
    injection  profiles at asymmetric distance >= d, classes with rank distance d
    subspace   profiles at Hamming distance >= d, classes with rank distance ceil(d/2)

Usage:
    code = build_code(9, 2, 2, "injection")
    rate(code)                          # log_2 M
    report = verify_min_distance(code, mode="sampled", seed=0)
"""

import json
import logging
import math
from dataclasses import dataclass, asdict, field as dc_field
from enum import Enum
from typing import Any, Iterator, Optional, Union

import numpy as np

from projcodes.bounds import log_q, punctured_size_bound
from projcodes.config import get_limit
from projcodes.errors import CapacityError, FieldError, ParameterError, ParseError, ShapeError
from projcodes.gf import FieldSpec, field_of_order, prime_power
from projcodes.matq import (
    MatrixGF,
    Subspace,
    batch_rank,
    batch_rank_packed,
    matrix_to_text,
    pack_rows,
)
from projcodes.profiles import (
    FerrersShape,
    ProfileVector,
    SelectionMetric,
    greedy_select,
    min_pairwise_distance,
    profile_matrix,
    rank_distance_for,
    score,
)
from projcodes.rankmetric import (
    LinearMatrixCode,
    contained_in,
    ferrers_code,
    gabidulin,
    min_rank_distance,
)
from projcodes.runlog import RunEventType, RunSeverity, get_run_logger, log_run_event


logger = logging.getLogger(__name__)

PAIR_CHUNK = 8192
MAX_REPORTED_VIOLATIONS = 10


class CodeMetric(Enum):
    """Distance a subspace code is designed for."""
    INJECTION = "injection"
    SUBSPACE = "subspace"


def as_code_metric(metric: Union[CodeMetric, str]) -> CodeMetric:
    if isinstance(metric, CodeMetric):
        return metric
    try:
        return CodeMetric(str(metric).lower())
    except ValueError as e:
        raise ParameterError(f"Unknown metric {metric!r}", module="codebook", code="OUT_OF_RANGE") from e


def selection_metric_for(metric: CodeMetric) -> SelectionMetric:
    return SelectionMetric.ASYMMETRIC if metric is CodeMetric.INJECTION else SelectionMetric.HAMMING


# ============================================================================
# Code types
# ============================================================================

@dataclass(frozen=True, eq=False)
class CodeClass:
    """All codewords sharing one profile vector."""
    profile: ProfileVector
    shape: FerrersShape
    subcode: LinearMatrixCode
    score: int

    @property
    def kappa(self) -> int:
        return self.subcode.dim

    @property
    def size(self) -> int:
        return self.subcode.size


@dataclass(frozen=True, eq=False)
class SubspaceCode:
    """
    A subspace code in P_q^n.

    d is the target distance in the code's metric; delta is the rank
    distance of every class subcode.
    """
    n: int
    field: FieldSpec
    d: int
    metric: CodeMetric
    classes: tuple[CodeClass, ...]
    delta: int
    weight: Optional[int] = None

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def M(self) -> int:
        return sum(c.size for c in self.classes)

    @property
    def bound_size(self) -> int:
        """Size predicted from each class's score alone."""
        return sum(self.q ** max(0, c.score) for c in self.classes)

    @property
    def selection_metric(self) -> SelectionMetric:
        return selection_metric_for(self.metric)

    @property
    def profiles(self) -> list[ProfileVector]:
        return [c.profile for c in self.classes]

    def parameters(self) -> dict[str, Any]:
        return {"n": self.n, "q": self.q, "d": self.d, "metric": self.metric.value}

    def __repr__(self) -> str:
        return f"SubspaceCode(n={self.n}, q={self.q}, d={self.d}, {self.metric.value}, classes={len(self.classes)})"


def rate(C: SubspaceCode) -> float:
    """log_q M."""
    return log_q(C.M, C.q)


def bound_rate(C: SubspaceCode) -> float:
    return log_q(C.bound_size, C.q)


# ============================================================================
# Construction
# ============================================================================

def _check_code_args(n: int, q: int, d: int):
    max_n, max_q = get_limit("max_n"), get_limit("max_q")
    if not 1 <= n <= max_n:
        raise ParameterError(f"n={n} outside 1..{max_n}", module="codebook", code="OUT_OF_RANGE")
    if not 2 <= q <= max_q or prime_power(q) is None:
        raise ParameterError(f"q={q} must be a prime power in 2..{max_q}", module="codebook", code="OUT_OF_RANGE")
    if d < 1:
        raise ParameterError(f"d={d} must be >= 1", module="codebook", code="OUT_OF_RANGE")


def _build_classes(field: FieldSpec, profiles: list[ProfileVector], delta: int) -> tuple[CodeClass, ...]:
    classes = []
    for v in profiles:
        shape = profile_matrix(v)
        subcode = ferrers_code(field, shape, delta)
        classes.append(CodeClass(v, shape, subcode, score(v, delta)))
        log_run_event(
            RunEventType.CLASS_BUILT,
            command="build",
            operation=f"class {v}",
            severity=RunSeverity.DEBUG,
            details={"profile": v.to_text(), "kappa": subcode.dim, "w": shape.w}
        )
    return tuple(classes)


def _assemble(
    n: int,
    q: int,
    d: int,
    metric: CodeMetric,
    delta: int,
    weight: Optional[int],
    command: str
) -> SubspaceCode:
    field = field_of_order(q)
    params = {"n": n, "q": q, "d": d, "metric": metric.value, "delta": delta, "weight": weight}
    run_log = get_run_logger()
    run_log.log(RunEventType.BUILD_STARTED, command=command, operation="Selecting profiles", parameters=params)

    profiles = greedy_select(n, d, selection_metric_for(metric), weight=weight)
    code = SubspaceCode(n, field, d, metric, _build_classes(field, profiles, delta), delta, weight)

    logger.info("%s: %d classes, log_q M = %.4f", command, len(code.classes), rate(code))
    run_log.log_build_finished(command, params, len(code.classes), str(code.M), rate(code))
    return code


def build_code(n: int, q: int, d: int, metric: Union[CodeMetric, str] = CodeMetric.INJECTION) -> SubspaceCode:
    """
    Build an (n, M, d) code for the injection or the subspace distance.

    Raises:
        ParameterError: n, q or d out of range
    """
    _check_code_args(n, q, d)
    metric = as_code_metric(metric)
    if d > n:
        raise ParameterError(f"d={d} exceeds n={n}", module="codebook", code="OUT_OF_RANGE")
    delta = rank_distance_for(d, selection_metric_for(metric))
    return _assemble(n, q, d, metric, delta, None, "build_code")


def build_constant_dimension(n: int, q: int, delta: int, k: Optional[int] = None) -> SubspaceCode:
    """
    Constant-dimension code: weight-k profiles (k = floor(n/2) by default)
    at Hamming distance >= 2 delta, classes with rank distance delta.
    The result is a subspace-metric code with d = 2 delta.
    """
    _check_code_args(n, q, delta)
    k = n // 2 if k is None else k
    if not 0 <= k <= n:
        raise ParameterError(f"k={k} outside 0..{n}", module="codebook", code="OUT_OF_RANGE")
    return _assemble(n, q, 2 * delta, CodeMetric.SUBSPACE, delta, k, "build_constant_dimension")


def punctured_size(n: int, q: int, d_s: int) -> int:
    """
    Size guaranteed by puncturing our constant-dimension code of length
    n + 1 with subspace distance d_s + 1 and dimension floor((n + 1) / 2).
    """
    k = (n + 1) // 2
    code = build_constant_dimension(n + 1, q, -(-(d_s + 1) // 2), k)
    return punctured_size_bound(code.M, n + 1, k, q)


def punctured_rate(n: int, q: int, d_s: int) -> float:
    size = punctured_size(n, q, d_s)
    return log_q(size, q) if size > 0 else float("-inf")


# ============================================================================
# Lifting and enumeration
# ============================================================================

def _lift_array(shape: FerrersShape, n: int, fillings: np.ndarray) -> np.ndarray:
    """Generators (N, m, n) for fillings (N, m, eta)."""
    G = np.zeros((fillings.shape[0], shape.m, n), dtype=np.int64)
    for i, pc in enumerate(shape.pivots):
        G[:, i, pc] = 1
    if shape.eta:
        G[:, :, list(shape.dot_columns)] = fillings
    return G


def lift(v: ProfileVector, filling: MatrixGF) -> Subspace:
    """
    Row space of P_M(v) with its dots replaced by the entries of filling.

    Raises:
        ShapeError: filling is not m x eta or is nonzero outside the dots
    """
    shape = profile_matrix(v)
    if filling.shape != (shape.m, shape.eta):
        raise ShapeError(
            f"Filling {filling.shape} does not match S(v) {shape.m}x{shape.eta}",
            module="codebook",
            code="MASK_VIOLATION"
        )
    if filling.entries[~shape.mask].any():
        raise ShapeError("Filling has entries outside the dots of S(v)", module="codebook", code="MASK_VIOLATION")
    G = _lift_array(shape, v.n, filling.entries[None])[0]
    return Subspace(v.n, MatrixGF(filling.field, G))


def enumerate_code(C: SubspaceCode, cap: Optional[int] = None) -> Iterator[Subspace]:
    """
    Every codeword, classes in selection order and fillings in
    coefficient-lexicographic order, stopping after cap codewords.
    """
    cap = cap if cap is not None else get_limit("cap_enum")
    emitted = 0
    for cls in C.classes:
        for block in cls.subcode.codeword_chunks():
            for G in _lift_array(cls.shape, C.n, block):
                if emitted >= cap:
                    logger.warning("enumeration truncated at %d of %d codewords", cap, C.M)
                    return
                yield Subspace(C.n, MatrixGF(C.field, G))
                emitted += 1


def is_truncated(C: SubspaceCode, cap: Optional[int] = None) -> bool:
    cap = cap if cap is not None else get_limit("cap_enum")
    return C.M > cap


def _generator_stack(C: SubspaceCode) -> tuple[np.ndarray, np.ndarray]:
    """All generators padded with zero rows to a common height, plus their dimensions."""
    height = max([c.shape.m for c in C.classes] + [1])
    stacks, dims = [], []
    for cls in C.classes:
        for block in cls.subcode.codeword_chunks():
            G = np.zeros((block.shape[0], height, C.n), dtype=np.int64)
            G[:, :cls.shape.m] = _lift_array(cls.shape, C.n, block)
            stacks.append(G)
            dims.append(np.full(block.shape[0], cls.shape.m, dtype=np.int64))
    if not stacks:
        return np.zeros((0, height, C.n), dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(stacks), np.concatenate(dims)


def sample_codeword(C: SubspaceCode, rng: np.random.Generator) -> Subspace:
    """A uniformly random codeword: class chosen proportionally to its size."""
    G, dims = _sample_generators(C, rng, 1)
    return Subspace(C.n, MatrixGF(C.field, G[0, :dims[0]]))


def _class_probabilities(C: SubspaceCode) -> np.ndarray:
    M = C.M
    probs = np.array([c.size / M for c in C.classes], dtype=float)
    return probs / probs.sum()


def _sample_generators(C: SubspaceCode, rng: np.random.Generator, count: int) -> tuple[np.ndarray, np.ndarray]:
    height = max([c.shape.m for c in C.classes] + [1])
    picks = rng.choice(len(C.classes), size=count, p=_class_probabilities(C))
    G = np.zeros((count, height, C.n), dtype=np.int64)
    dims = np.zeros(count, dtype=np.int64)
    for c in np.unique(picks):
        cls = C.classes[int(c)]
        idx = np.nonzero(picks == c)[0]
        coeffs = rng.integers(0, C.q, size=(idx.size, cls.kappa))
        G[idx, :cls.shape.m] = _lift_array(cls.shape, C.n, cls.subcode.codewords_from(coeffs))
        dims[idx] = cls.shape.m
    return G, dims


# ============================================================================
# Verification
# ============================================================================

@dataclass
class VerificationReport:
    """
    Outcome of checking a code's minimum distance.

    verified_floor is the exhaustive minimum in exhaustive mode and the
    decomposed certificate (min of the cross-class and within-class floors)
    in sampled mode. None means no pair of distinct codewords exists.
    """
    claimed_d: int
    metric: str
    mode: str
    verified_floor: Optional[int]
    pairs_checked: int
    cross_class_floor: Optional[int]
    within_class_floor: Optional[int]
    within_class_exact: bool
    fits: bool
    sampled_floor: Optional[int] = None
    violations: list[dict[str, Any]] = dc_field(default_factory=list)
    certified: bool = False

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def _distances_from(
    field: FieldSpec,
    metric: CodeMetric,
    A: np.ndarray,
    dims_a: np.ndarray,
    B: np.ndarray,
    dims_b: np.ndarray
) -> np.ndarray:
    """Pairwise d_I or d_S between generator stacks A[i] and B[i]."""
    union = batch_rank(field, np.concatenate([A, B], axis=1))
    if metric is CodeMetric.INJECTION:
        return union - np.minimum(dims_a, dims_b)
    return 2 * union - dims_a - dims_b


def _reduce_packed(X: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Clear the pivot bits of an RREF basis (packed rows) from every row of X."""
    for row in basis:
        row = int(row)
        if row == 0:
            continue
        hit = (X >> (row.bit_length() - 1)) & 1
        X = X ^ (hit * row)
    return X


def _reduce_rows(field: FieldSpec, X: np.ndarray, basis: np.ndarray) -> np.ndarray:
    for row in basis:
        nz = np.nonzero(row)[0]
        if nz.size == 0:
            continue
        p = int(nz[0])
        X = field.sub(X, field.mul(X[:, :, p][:, :, None], row[None, None, :]))
    return X


def _exhaustive_scan(C: SubspaceCode, violations: list[dict[str, Any]]) -> tuple[Optional[int], int]:
    """
    Minimum distance over all pairs. Each codeword U is compared with all
    later ones at once: rows of V reduced modulo U have rank
    dim(U + V) - dim U.
    """
    G, dims = _generator_stack(C)
    M = G.shape[0]
    best, pairs = None, 0
    packed = pack_rows(G) if C.q == 2 else None

    for i in range(M - 1):
        kU = int(dims[i])
        dV = dims[i + 1:]
        if packed is not None:
            extra = batch_rank_packed(_reduce_packed(packed[i + 1:], packed[i, :kU]), C.n)
        else:
            extra = batch_rank(C.field, _reduce_rows(C.field, G[i + 1:], G[i, :kU]))
        inter = dV - extra
        if C.metric is CodeMetric.INJECTION:
            dist = np.maximum(kU, dV) - inter
        else:
            dist = kU + dV - 2 * inter
        pairs += dist.size
        low = int(dist.min())
        best = low if best is None else min(best, low)
        if low < C.d and len(violations) < MAX_REPORTED_VIOLATIONS:
            for j in np.nonzero(dist < C.d)[0][:MAX_REPORTED_VIOLATIONS - len(violations)]:
                violations.append({"kind": "pair", "first": i, "second": i + 1 + int(j), "distance": int(dist[j])})
    return best, pairs


def _sampled_scan(C: SubspaceCode, seed: int, trials: int) -> tuple[Optional[int], int]:
    rng = np.random.default_rng(seed)
    best, pairs = None, 0
    for start in range(0, trials, PAIR_CHUNK):
        count = min(PAIR_CHUNK, trials - start)
        G, dims = _sample_generators(C, rng, 2 * count)
        A, B = G[:count], G[count:]
        distinct = (A != B).reshape(count, -1).any(axis=1)
        if not distinct.any():
            continue
        dist = _distances_from(C.field, C.metric, A[distinct], dims[:count][distinct], B[distinct], dims[count:][distinct])
        pairs += dist.size
        low = int(dist.min())
        best = low if best is None else min(best, low)
    return best, pairs


def _class_rank_floor(cls: CodeClass, delta: int, seed: int) -> tuple[Optional[int], bool]:
    """
    Least rank of a nonzero codeword of the class subcode and whether it is
    exact. Subcodes inside the Gabidulin code of the same shape inherit
    its distance; others are scanned.
    """
    sub = cls.subcode
    if sub.dim == 0:
        return None, True
    if 1 <= delta <= min(sub.m, sub.eta) and contained_in(sub, gabidulin(sub.field, sub.m, sub.eta, delta)):
        return delta, True
    if sub.size <= get_limit("max_rank_codewords"):
        return min_rank_distance(sub, mode="exhaustive").value, True
    return min_rank_distance(sub, mode="sampled", seed=seed).value, False


def _certificate(C: SubspaceCode, seed: int, report: VerificationReport):
    """Fill in the cross-class and within-class floors and the fit check."""
    for idx, cls in enumerate(C.classes):
        shape = profile_matrix(cls.profile)
        if not cls.subcode.fits(shape.mask):
            report.fits = False
            report.violations.append({"kind": "mask", "class": idx, "profile": cls.profile.to_text()})

    cross, pair = min_pairwise_distance(C.profiles, C.selection_metric)
    report.cross_class_floor = cross
    if cross is not None and cross < C.d:
        report.violations.append({
            "kind": "profiles",
            "first": C.classes[pair[0]].profile.to_text(),
            "second": C.classes[pair[1]].profile.to_text(),
            "distance": cross,
        })

    factor = 1 if C.metric is CodeMetric.INJECTION else 2
    floor, exact = None, True
    for idx, cls in enumerate(C.classes):
        rank_floor, class_exact = _class_rank_floor(cls, C.delta, seed)
        exact = exact and class_exact
        if rank_floor is None:
            continue
        value = factor * rank_floor
        if value < C.d:
            report.violations.append({"kind": "class", "class": idx, "profile": cls.profile.to_text(), "distance": value})
        floor = value if floor is None else min(floor, value)
    report.within_class_floor = floor
    report.within_class_exact = exact


def _at_least(value: Optional[int], d: int) -> bool:
    return value is None or value >= d


def verify_min_distance(
    C: SubspaceCode,
    mode: str = "exhaustive",
    seed: int = 0,
    trials: Optional[int] = None,
    cap: Optional[int] = None
) -> VerificationReport:
    """
    Check that every pair of distinct codewords is at distance >= C.d.

    Both modes compute the decomposed certificate: profile distances bound
    the distance between classes, and within a class the distance equals
    the rank distance of the fillings (twice that for d_S). Exhaustive mode
    also scans every pair; sampled mode checks random pairs.

    Raises:
        CapacityError: exhaustive mode with M above the cap (limits.cap_verify)
    """
    if mode not in ("exhaustive", "sampled"):
        raise ParameterError(f"Unknown mode {mode!r}", module="codebook", code="BAD_MODE")
    log_run_event(
        RunEventType.VERIFY_STARTED,
        command="verify",
        operation=f"{mode} check of d={C.d}",
        severity=RunSeverity.DEBUG,
        parameters=C.parameters()
    )

    report = VerificationReport(
        claimed_d=C.d,
        metric=C.metric.value,
        mode=mode,
        verified_floor=None,
        pairs_checked=0,
        cross_class_floor=None,
        within_class_floor=None,
        within_class_exact=True,
        fits=True,
    )
    _certificate(C, seed, report)
    certificate = [x for x in (report.cross_class_floor, report.within_class_floor) if x is not None]
    certificate_floor = min(certificate) if certificate else None

    if mode == "exhaustive":
        cap = cap if cap is not None else get_limit("cap_verify")
        if C.M > cap:
            raise CapacityError(
                f"M={C.M} exceeds the exhaustive verification cap {cap}",
                module="codebook",
                code="CAP_EXCEEDED",
                context={"M": str(C.M), "cap": cap}
            )
        report.verified_floor, report.pairs_checked = _exhaustive_scan(C, report.violations)
        report.certified = report.fits and _at_least(report.verified_floor, C.d)
    else:
        trials = trials if trials is not None else get_limit("sample_trials")
        report.verified_floor = certificate_floor
        if C.M > 1:
            report.sampled_floor, report.pairs_checked = _sampled_scan(C, seed, trials)
        report.certified = (
            report.fits
            and report.within_class_exact
            and _at_least(certificate_floor, C.d)
            and _at_least(report.sampled_floor, C.d)
        )

    get_run_logger().log_verification(C.parameters(), report.to_dict())
    return report


# ============================================================================
# Dumps and summaries
# ============================================================================

def dump_code(C: SubspaceCode) -> str:
    """
    Text dump: header "n q d metric M", then per class a blank line, the
    profile digits, kappa, and the subcode basis matrices separated by
    blank lines.
    """
    lines = [f"{C.n} {C.q} {C.d} {C.metric.value} {C.M}"]
    for cls in C.classes:
        lines.append("")
        lines.append(cls.profile.to_text())
        lines.append(str(cls.kappa))
        for B in cls.subcode.basis:
            lines.append("")
            lines.append(matrix_to_text(B))
    return "\n".join(lines) + "\n"


def load_code(text: str) -> SubspaceCode:
    """
    Parse a dump written by dump_code. Fillings outside the dots are kept
    so that verification can report them.

    Raises:
        ParseError: malformed header, class block or matrix rows
    """
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 5:
        raise ParseError("Header must read: n q d metric M", module="codebook", code="BAD_DUMP")

    try:
        n, q, d = (int(x) for x in rows[0][:3])
        metric = as_code_metric(rows[0][3])
        claimed_M = int(rows[0][4])
        field = field_of_order(q)
    except (ValueError, ParameterError, FieldError) as e:
        raise ParseError(f"Bad header {' '.join(rows[0])!r}", module="codebook", code="BAD_DUMP") from e

    delta = rank_distance_for(d, selection_metric_for(metric))
    pos = 1
    classes = []

    def take() -> list[str]:
        nonlocal pos
        if pos >= len(rows):
            raise ParseError("Dump ends inside a class block", module="codebook", code="BAD_DUMP")
        pos += 1
        return rows[pos - 1]

    while pos < len(rows):
        head = take()
        try:
            v = ProfileVector.from_text(head[0]) if len(head) == 1 else None
            kappa = int(take()[0])
        except (ValueError, ParseError) as e:
            raise ParseError(f"Bad class header near row {pos}", module="codebook", code="BAD_DUMP") from e
        if v is None or v.n != n or kappa < 0:
            raise ParseError(f"Bad class header near row {pos}", module="codebook", code="BAD_DUMP")

        shape = profile_matrix(v)
        basis = []
        for _ in range(kappa):
            block = []
            for _ in range(shape.m):
                row = take()
                try:
                    values = [int(x) for x in row]
                except ValueError as e:
                    raise ParseError(f"Bad matrix row near row {pos}", module="codebook", code="BAD_DUMP") from e
                if len(values) != shape.eta or any(x < 0 or x >= q for x in values):
                    raise ParseError(f"Matrix row near row {pos} does not fit {v}", module="codebook", code="BAD_DUMP")
                block.append(values)
            basis.append(MatrixGF(field, np.array(block, dtype=np.int64).reshape(shape.m, shape.eta)))
        subcode = LinearMatrixCode(field, shape.m, shape.eta, tuple(basis), delta)
        classes.append(CodeClass(v, shape, subcode, score(v, delta)))

    code = SubspaceCode(n, field, d, metric, tuple(classes), delta)
    if code.M != claimed_M:
        raise ParseError(f"Header claims M={claimed_M}, classes give {code.M}", module="codebook", code="BAD_DUMP")
    return code


def code_summary(C: SubspaceCode) -> dict[str, Any]:
    """JSON-ready summary; contains no timestamps so repeated runs match byte for byte."""
    return {
        "n": C.n,
        "q": C.q,
        "d": C.d,
        "metric": C.metric.value,
        "classes": [
            {"profile": c.profile.to_text(), "kappa": c.kappa, "score": c.score}
            for c in C.classes
        ],
        "M_digits": str(C.M),
        "rate": rate(C),
        "bound_M_digits": str(C.bound_size),
        "bound_rate": bound_rate(C),
    }


def summary_json(C: SubspaceCode) -> str:
    return json.dumps(code_summary(C), indent=2) + "\n"


def table_row(n: int, q: int, d_i: int) -> dict[str, Any]:
    """
    One comparison row for injection distance d_i (subspace distance 2 d_i):
    C1 subspace-metric code, C2 injection code, C3 constant-dimension code,
    C4 punctured constant-dimension code of length n + 1.
    """
    d_s = 2 * d_i
    c1 = build_code(n, q, d_s, CodeMetric.SUBSPACE)
    c2 = build_code(n, q, d_i, CodeMetric.INJECTION)
    c3 = build_constant_dimension(n, q, d_i)
    c4 = punctured_size(n, q, d_s)
    return {
        "q": q,
        "d_I": d_i,
        "d_S": d_s,
        "n": n,
        "C1": rate(c1),
        "C2": rate(c2),
        "C3": rate(c3),
        "C4": log_q(c4, q) if c4 > 0 else -math.inf,
        "M1": str(c1.M),
        "M2": str(c2.M),
        "M3": str(c3.M),
        "M4": str(c4),
        "C1_bound": bound_rate(c1),
        "C2_bound": bound_rate(c2),
        "C3_bound": bound_rate(c3),
    }
