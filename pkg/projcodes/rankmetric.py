"""
Rank-Metric Codes

Gabidulin MRD codes written as m x eta matrices over GF(q), and the
largest subcode of such a code that vanishes outside a Ferrers shape.

Usage:
    gf2 = field_make(2)
    C = gabidulin(gf2, 3, 3, 2)          # kappa = 6
    F = ferrers_subcode(C, profile_matrix(v), 2)
    min_rank_distance(F).value           # >= 2
"""

import logging
from dataclasses import dataclass, asdict
from functools import lru_cache
from typing import Any, Iterator, Optional, Sequence, Union

import numpy as np

from projcodes.config import get_limit
from projcodes.errors import CapacityError, ParameterError, ShapeError
from projcodes.gf import FieldSpec, ext_make, field_of_order
from projcodes.matq import MatrixGF, batch_rank, nullspace, rank
from projcodes.profiles import FerrersShape, ProfileVector, profile_matrix


logger = logging.getLogger(__name__)

CHUNK = 1 << 16


# ============================================================================
# Linear matrix codes
# ============================================================================

@dataclass(frozen=True, eq=False)
class LinearMatrixCode:
    """
    A GF(q)-linear code of m x eta matrices given by a basis.

    Codewords are the GF(q)-combinations of the basis; coefficient vectors
    are ordered lexicographically with the first coefficient most
    significant.
    """
    field: FieldSpec
    m: int
    eta: int
    basis: tuple[MatrixGF, ...]
    delta: int

    def __post_init__(self):
        basis = tuple(self.basis)
        for B in basis:
            if B.shape != (self.m, self.eta) or B.field != self.field:
                raise ShapeError(
                    f"Basis matrix {B.shape} does not match {self.m}x{self.eta} over {self.field!r}",
                    module="rankmetric",
                    code="SHAPE_MISMATCH"
                )
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.field.order ** self.dim

    def basis_array(self) -> np.ndarray:
        """kappa x (m * eta) matrix of flattened basis elements."""
        if not self.basis:
            return np.zeros((0, self.m * self.eta), dtype=np.int64)
        return np.vstack([B.flatten() for B in self.basis])

    def is_independent(self) -> bool:
        if not self.basis:
            return True
        return rank(MatrixGF(self.field, self.basis_array())) == self.dim

    def fits(self, mask: np.ndarray) -> bool:
        """True if every basis matrix is zero wherever mask is False."""
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (self.m, self.eta):
            return False
        return all(not B.entries[~mask].any() for B in self.basis)

    def codeword(self, coeffs: Sequence[int]) -> MatrixGF:
        if len(coeffs) != self.dim:
            raise ShapeError(
                f"Need {self.dim} coefficients, got {len(coeffs)}",
                module="rankmetric",
                code="SHAPE_MISMATCH"
            )
        flat = self.field.matmul(np.asarray([coeffs], dtype=np.int64), self.basis_array())
        return MatrixGF(self.field, flat.reshape(self.m, self.eta))

    def coefficients(self, start: int, stop: int) -> np.ndarray:
        """Coefficient vectors with lexicographic indices start..stop-1."""
        q = self.field.order
        if stop <= np.iinfo(np.int64).max:
            idx = np.arange(start, stop, dtype=np.int64)
        else:
            # indices past int64 stay Python ints
            idx = np.arange(stop - start, dtype=np.int64).astype(object) + start
        out = np.zeros((stop - start, self.dim), dtype=np.int64)
        for j in range(self.dim - 1, -1, -1):
            out[:, j] = (idx % q).astype(np.int64)
            idx = idx // q
        return out

    def codewords_from(self, coeffs: np.ndarray) -> np.ndarray:
        """Codeword arrays (N, m, eta) for an (N, kappa) coefficient array."""
        if self.dim == 0:
            return np.zeros((coeffs.shape[0], self.m, self.eta), dtype=np.int64)
        flat = self.field.matmul(coeffs, self.basis_array())
        return flat.reshape(-1, self.m, self.eta)

    def codeword_chunks(self, chunk: int = CHUNK) -> Iterator[np.ndarray]:
        """All codewords in coefficient-lexicographic order, in blocks."""
        total = self.size
        for start in range(0, total, chunk):
            yield self.codewords_from(self.coefficients(start, min(start + chunk, total)))

    def codewords(self) -> Iterator[MatrixGF]:
        for block in self.codeword_chunks():
            for X in block:
                yield MatrixGF(self.field, X)

    def __repr__(self) -> str:
        return f"LinearMatrixCode({self.m}x{self.eta}, kappa={self.dim}, delta={self.delta}, {self.field!r})"


def zero_code(field: FieldSpec, m: int, eta: int, delta: int) -> LinearMatrixCode:
    """The zero-dimensional code: only the all-zero filling."""
    return LinearMatrixCode(field, m, eta, (), delta)


def subcode_dim_bound(w: int, m: int, eta: int, delta: int) -> int:
    """Dimension lower bound w - max(m, eta)(delta - 1) for a Ferrers subcode of an MRD code."""
    return w - max(m, eta) * (delta - 1)


# ============================================================================
# Gabidulin codes
# ============================================================================

def _as_field(q: Union[int, FieldSpec]) -> FieldSpec:
    return q if isinstance(q, FieldSpec) else field_of_order(q)


def _full_space(field: FieldSpec, m: int, eta: int) -> LinearMatrixCode:
    basis = []
    for i in range(m):
        for j in range(eta):
            E = np.zeros((m, eta), dtype=np.int64)
            E[i, j] = 1
            basis.append(MatrixGF(field, E))
    return LinearMatrixCode(field, m, eta, tuple(basis), 1)


@lru_cache(maxsize=256)
def _gabidulin(field: FieldSpec, m: int, eta: int, delta: int) -> LinearMatrixCode:
    if delta == 1:
        # every q-polynomial of q-degree < eta: the whole matrix space
        return _full_space(field, m, eta)

    if eta > m:
        tall = _gabidulin(field, eta, m, delta)
        return LinearMatrixCode(field, m, eta, tuple(B.transpose() for B in tall.basis), delta)

    ext = ext_make(field, m)
    q = field.order
    points = np.array([q ** j for j in range(eta)], dtype=np.int64)   # 1, t, ..., t^(eta-1)
    places = q ** np.arange(m, dtype=np.int64)

    basis = []
    for i in range(eta - delta + 1):
        frob = ext.frob_pow(points, i)
        for l in range(m):
            values = ext.mul(q ** l, frob)
            # column j holds the coordinates of f(h_j) over GF(q)
            basis.append(MatrixGF(field, (values[None, :] // places[:, None]) % q))

    logger.debug("gabidulin %r m=%d eta=%d delta=%d -> kappa=%d", field, m, eta, delta, len(basis))
    return LinearMatrixCode(field, m, eta, tuple(basis), delta)


def gabidulin(q: Union[int, FieldSpec], m: int, eta: int, delta: int) -> LinearMatrixCode:
    """
    Gabidulin MRD code of m x eta matrices over GF(q) with minimum rank
    distance delta.

    Codewords are (f(h_1), ..., f(h_eta)) for q-polynomials f over GF(q^m)
    of q-degree < eta - delta + 1, evaluated at h_j = t^(j-1), each value
    expanded into a column over GF(q). For eta > m the code is built as
    eta x m and transposed.

    Raises:
        ParameterError: delta outside 1..min(m, eta)
    """
    field = _as_field(q)
    if m < 1 or eta < 1 or not 1 <= delta <= min(m, eta):
        raise ParameterError(
            f"delta={delta} outside 1..min(m, eta) for {m}x{eta}",
            module="rankmetric",
            code="DELTA_OUT_OF_RANGE",
            context={"m": m, "eta": eta, "delta": delta}
        )
    return _gabidulin(field, m, eta, delta)


# ============================================================================
# Ferrers subcodes
# ============================================================================

def ferrers_subcode(C: LinearMatrixCode, S: FerrersShape, delta: int) -> LinearMatrixCode:
    """
    Largest subcode of C vanishing outside the dots of S.

    Each forced-zero entry is a linear functional on the coefficient space
    of C; the subcode is spanned by the nullspace of those functionals.
    """
    if (C.m, C.eta) != (S.m, S.eta):
        raise ShapeError(
            f"Code shape {C.m}x{C.eta} does not match shape {S.m}x{S.eta}",
            module="rankmetric",
            code="SHAPE_MISMATCH"
        )
    zeros = np.nonzero(~S.mask.reshape(-1))[0]
    if zeros.size == 0 or C.dim == 0:
        return LinearMatrixCode(C.field, C.m, C.eta, C.basis, delta)

    B = C.basis_array()
    constraints = MatrixGF(C.field, B[:, zeros].T)
    kernel = nullspace(constraints)
    if not kernel:
        return zero_code(C.field, C.m, C.eta, delta)

    flat = C.field.matmul(np.vstack(kernel), B)
    basis = tuple(MatrixGF(C.field, row.reshape(C.m, C.eta)) for row in flat)
    return LinearMatrixCode(C.field, C.m, C.eta, basis, delta)


@lru_cache(maxsize=4096)
def _ferrers_code(field: FieldSpec, profile: ProfileVector, delta: int) -> LinearMatrixCode:
    shape = profile_matrix(profile)
    if shape.w == 0 or delta > min(shape.m, shape.eta):
        return zero_code(field, shape.m, shape.eta, delta)
    return ferrers_subcode(gabidulin(field, shape.m, shape.eta, delta), shape, delta)


def ferrers_code(field: FieldSpec, shape: FerrersShape, delta: int) -> LinearMatrixCode:
    """
    Ferrers-diagram code for shape with minimum rank distance delta, taken
    from the Gabidulin code of the same size. Shapes without dots, or with
    delta > min(m, eta), get the zero-dimensional code.
    """
    if delta < 1:
        raise ParameterError(f"delta={delta} must be >= 1", module="rankmetric", code="DELTA_OUT_OF_RANGE")
    return _ferrers_code(field, shape.profile, delta)


# ============================================================================
# Minimum rank distance
# ============================================================================

@dataclass
class RankDistanceReport:
    """
    Minimum rank over the nonzero codewords that were examined.

    value is None when the code has no nonzero codeword. In sampled mode
    value is only an upper bound on the true minimum (exact is False).
    """
    value: Optional[int]
    mode: str
    checked: int
    exact: bool

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def at_least(self, delta: int) -> bool:
        return self.value is None or self.value >= delta


def min_rank_distance(
    C: LinearMatrixCode,
    mode: str = "exhaustive",
    seed: int = 0,
    trials: Optional[int] = None,
    cap: Optional[int] = None
) -> RankDistanceReport:
    """
    Minimum rank distance of a linear code (the least rank of a nonzero codeword).

    Args:
        C: The code
        mode: "exhaustive" or "sampled"
        seed: RNG seed for sampled mode
        trials: Number of sampled codewords (limits.sample_trials by default)
        cap: Largest q^kappa scanned exhaustively (limits.max_rank_codewords by default)

    Raises:
        CapacityError: exhaustive mode with q^kappa above the cap
    """
    if C.dim == 0:
        return RankDistanceReport(None, mode, 0, True)

    if mode == "exhaustive":
        cap = cap if cap is not None else get_limit("max_rank_codewords")
        if C.size > cap:
            raise CapacityError(
                f"{C.size} codewords exceed the exhaustive cap {cap}",
                module="rankmetric",
                code="CAP_EXCEEDED",
                context={"size": C.size, "cap": cap}
            )
        best, checked = None, 0
        for start in range(1, C.size, CHUNK):
            block = C.codewords_from(C.coefficients(start, min(start + CHUNK, C.size)))
            low = int(batch_rank(C.field, block).min())
            checked += block.shape[0]
            best = low if best is None else min(best, low)
            if best == 1:
                break
        return RankDistanceReport(best, mode, checked, True)

    if mode == "sampled":
        trials = trials if trials is not None else get_limit("sample_trials")
        rng = np.random.default_rng(seed)
        coeffs = rng.integers(0, C.field.order, size=(trials, C.dim))
        coeffs = coeffs[coeffs.any(axis=1)]
        if coeffs.shape[0] == 0:
            return RankDistanceReport(None, mode, 0, False)
        best = None
        for start in range(0, coeffs.shape[0], CHUNK):
            low = int(batch_rank(C.field, C.codewords_from(coeffs[start:start + CHUNK])).min())
            best = low if best is None else min(best, low)
        return RankDistanceReport(best, mode, int(coeffs.shape[0]), False)

    raise ParameterError(f"Unknown mode {mode!r}", module="rankmetric", code="BAD_MODE")


def contained_in(C: LinearMatrixCode, D: LinearMatrixCode) -> bool:
    """True if every basis matrix of C lies in the span of D."""
    if C.dim == 0:
        return True
    if (C.m, C.eta) != (D.m, D.eta) or C.field != D.field:
        return False
    stacked = np.vstack([D.basis_array(), C.basis_array()])
    return rank(MatrixGF(C.field, stacked)) == D.dim
