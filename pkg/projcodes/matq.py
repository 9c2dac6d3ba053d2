"""
Matrices and Subspaces over GF(q)

Dense matrices over a FieldSpec, reduced row echelon form, rank,
nullspace, subspace intersection and the three distances used by the
codes: rank distance d_R, subspace distance d_S and injection distance d_I.

Column and row indices are 0-based throughout.
"""

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Optional, Sequence

import numpy as np

from projcodes.errors import ShapeError, ParseError
from projcodes.gf import FieldSpec


logger = logging.getLogger(__name__)


# ============================================================================
# Matrices
# ============================================================================

@dataclass(frozen=True, eq=False)
class MatrixGF:
    """Dense r x c matrix over one field. Entries are read-only."""
    field: FieldSpec
    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=np.int64, copy=True)
        if arr.ndim != 2:
            raise ShapeError(f"Matrix must be 2-D, got shape {arr.shape}", module="matq", code="SHAPE_MISMATCH")
        if arr.size and not self.field.contains(arr):
            raise ShapeError(f"Entries outside {self.field!r}", module="matq", code="SHAPE_MISMATCH")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    # constructors ---------------------------------------------------------

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "MatrixGF":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "MatrixGF":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "MatrixGF":
        rows = [list(r) for r in rows]
        if not rows:
            return cls.zeros(field, 0, cols or 0)
        return cls(field, np.asarray(rows, dtype=np.int64))

    # shape ----------------------------------------------------------------

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixGF)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"MatrixGF({self.rows}x{self.cols} over {self.field!r})"

    # arithmetic -------------------------------------------------------------

    def _check_same(self, other: "MatrixGF"):
        if self.field != other.field or self.shape != other.shape:
            raise ShapeError(
                f"Shape mismatch: {self.shape} vs {other.shape}",
                module="matq",
                code="SHAPE_MISMATCH"
            )

    def add(self, other: "MatrixGF") -> "MatrixGF":
        self._check_same(other)
        return MatrixGF(self.field, self.field.add(self.entries, other.entries))

    def sub(self, other: "MatrixGF") -> "MatrixGF":
        self._check_same(other)
        return MatrixGF(self.field, self.field.sub(self.entries, other.entries))

    def matmul(self, other: "MatrixGF") -> "MatrixGF":
        if self.field != other.field or self.cols != other.rows:
            raise ShapeError(
                f"Cannot multiply {self.shape} by {other.shape}",
                module="matq",
                code="SHAPE_MISMATCH"
            )
        return MatrixGF(self.field, self.field.matmul(self.entries, other.entries))

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.field, self.entries.T)

    def flatten(self) -> np.ndarray:
        return self.entries.reshape(-1).copy()

    def is_zero(self) -> bool:
        return not self.entries.any()


def vstack(top: MatrixGF, bottom: MatrixGF) -> MatrixGF:
    if top.field != bottom.field or top.cols != bottom.cols:
        raise ShapeError(
            f"Cannot stack {top.shape} on {bottom.shape}",
            module="matq",
            code="SHAPE_MISMATCH"
        )
    return MatrixGF(top.field, np.vstack([top.entries, bottom.entries]))


# ============================================================================
# Elimination
# ============================================================================

def _rref_array(field: FieldSpec, arr: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Full RREF of a raw array: pivots normalised to 1, zeros above and below."""
    A = np.array(arr, dtype=np.int64, copy=True)
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(A[r:, c])[0]
        if nonzero.size == 0:
            continue
        pr = r + int(nonzero[0])
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        A[r] = field.mul(A[r], field.inv(int(A[r, c])))
        factors = A[:, c].copy()
        factors[r] = 0
        if factors.any():
            A = field.sub(A, field.mul(factors[:, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A, pivots


def _rank_gf2(arr: np.ndarray) -> int:
    """Rank over GF(2) with rows packed into integers."""
    weights = [1 << j for j in range(arr.shape[1])]
    basis: list[int] = []
    for row in arr:
        x = sum(w for w, bit in zip(weights, row) if bit)
        for b in basis:
            x = min(x, x ^ b)
        if x:
            basis.append(x)
            basis.sort(reverse=True)
    return len(basis)


def rref(M: MatrixGF) -> tuple[MatrixGF, list[int]]:
    """
    Reduced row echelon form.

    Returns the row-equivalent RREF matrix (zero rows kept at the bottom)
    and the strictly increasing list of pivot columns.
    """
    A, pivots = _rref_array(M.field, M.entries)
    return MatrixGF(M.field, A), pivots


def rank(M: MatrixGF) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    if M.field.order == 2:
        return _rank_gf2(M.entries)
    return len(_rref_array(M.field, M.entries)[1])


def pack_rows(arr: np.ndarray) -> np.ndarray:
    """Binary rows as integers, first column most significant."""
    cols = arr.shape[-1]
    weights = (1 << np.arange(cols - 1, -1, -1)).astype(np.int64)
    return (np.asarray(arr, dtype=np.int64) * weights).sum(axis=-1)


def batch_rank_packed(X: np.ndarray, bits: int) -> np.ndarray:
    """Ranks over GF(2) of N row sets given as an (N, r) array of packed rows."""
    X = np.array(X, dtype=np.int64, copy=True)
    ranks = np.zeros(X.shape[0], dtype=np.int64)
    if X.size == 0:
        return ranks
    rows = np.arange(X.shape[0])
    for bit in range(bits - 1, -1, -1):
        has = ((X >> bit) & 1).astype(bool)
        found = has.any(axis=1)
        if not found.any():
            continue
        pivot_rows = X[rows, np.argmax(has, axis=1)]
        X = np.where(has & found[:, None], X ^ pivot_rows[:, None], X)
        ranks += found
    return ranks


def _batch_rank_gf2(arr: np.ndarray) -> np.ndarray:
    return batch_rank_packed(pack_rows(arr), arr.shape[2])


def batch_rank(field: FieldSpec, arr: np.ndarray) -> np.ndarray:
    """
    Ranks of a stack of matrices of shape (N, r, c), eliminating all N
    at once. Used for codeword and pairwise-distance scans.
    """
    arr = np.asarray(arr, dtype=np.int64)
    N, R, C = arr.shape
    if N == 0 or R == 0 or C == 0:
        return np.zeros(N, dtype=np.int64)
    if field.order == 2:
        return _batch_rank_gf2(arr)

    A = arr.copy()
    ranks = np.zeros(N, dtype=np.int64)
    row_idx = np.arange(R)
    for c in range(C):
        candidate = (A[:, :, c] != 0) & (row_idx[None, :] >= ranks[:, None])
        found = candidate.any(axis=1)
        if not found.any():
            continue
        b = np.nonzero(found)[0]
        r = ranks[b]
        pr = np.argmax(candidate[b], axis=1)
        pivot_row = A[b, pr].copy()
        A[b, pr] = A[b, r]
        pivot_row = field.mul(pivot_row, field.inv(pivot_row[:, c])[:, None])
        A[b, r] = pivot_row
        factors = A[b, :, c].copy()
        factors[row_idx[None, :] <= r[:, None]] = 0
        A[b] = field.sub(A[b], field.mul(factors[:, :, None], pivot_row[:, None, :]))
        ranks[b] += 1
        if (ranks == R).all():
            break
    return ranks


def nullspace(M: MatrixGF) -> list[np.ndarray]:
    """Basis of {x : M x = 0}, one vector per free column."""
    field = M.field
    R, pivots = _rref_array(field, M.entries)
    pivot_set = set(pivots)
    free = [c for c in range(M.cols) if c not in pivot_set]
    basis = []
    for f in free:
        x = np.zeros(M.cols, dtype=np.int64)
        x[f] = 1
        for i, pc in enumerate(pivots):
            x[pc] = int(field.neg(int(R[i, f])))
        basis.append(x)
    return basis


# ============================================================================
# Subspaces
# ============================================================================

@dataclass(frozen=True, eq=False)
class Subspace:
    """
    A subspace of GF(q)^n stored by its canonical generator: the k x n
    full-rank RREF matrix (0 x n for the zero subspace).
    """
    n: int
    generator: MatrixGF

    @classmethod
    def from_generator(cls, M: MatrixGF) -> "Subspace":
        A, pivots = _rref_array(M.field, M.entries)
        return cls(M.cols, MatrixGF(M.field, A[:len(pivots)]))

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(n, MatrixGF.zeros(field, 0, n))

    @property
    def field(self) -> FieldSpec:
        return self.generator.field

    @property
    def dim(self) -> int:
        return self.generator.rows

    def pivots(self) -> list[int]:
        return [int(np.nonzero(row)[0][0]) for row in self.generator.entries]

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.n == other.n and self.generator == other.generator

    def __hash__(self) -> int:
        return hash((self.n, self.generator))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, n={self.n}, {self.field!r})"


def _check_ambient(U: Subspace, V: Subspace):
    if U.n != V.n or U.field != V.field:
        raise ShapeError(
            f"Ambient mismatch: n={U.n} over {U.field!r} vs n={V.n} over {V.field!r}",
            module="matq",
            code="AMBIENT_MISMATCH"
        )


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    _check_ambient(U, V)
    return Subspace.from_generator(vstack(U.generator, V.generator))


def intersection_dim(U: Subspace, V: Subspace) -> int:
    _check_ambient(U, V)
    return U.dim + V.dim - rank(vstack(U.generator, V.generator))


def injection_distance(U: Subspace, V: Subspace) -> int:
    """d_I = max(dim U, dim V) - dim(U ∩ V)."""
    return max(U.dim, V.dim) - intersection_dim(U, V)


def subspace_distance(U: Subspace, V: Subspace) -> int:
    """d_S = dim U + dim V - 2 dim(U ∩ V)."""
    return U.dim + V.dim - 2 * intersection_dim(U, V)


def rank_distance(X: MatrixGF, Y: MatrixGF) -> int:
    """d_R = rank(Y - X)."""
    return rank(Y.sub(X))


# ============================================================================
# Enumeration (oracles)
# ============================================================================

def enumerate_subspaces(n: int, field: FieldSpec, k: Optional[int] = None) -> Iterator[Subspace]:
    """Every subspace of GF(q)^n (or only those of dimension k), each once."""
    dims = range(n + 1) if k is None else [k]
    for dim in dims:
        for pivots in combinations(range(n), dim):
            free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivots]
            for values in product(range(field.order), repeat=len(free)):
                G = np.zeros((dim, n), dtype=np.int64)
                for i, pc in enumerate(pivots):
                    G[i, pc] = 1
                for (i, j), val in zip(free, values):
                    G[i, j] = val
                yield Subspace(n, MatrixGF(field, G))


def random_subspace(n: int, field: FieldSpec, rng: np.random.Generator, k: Optional[int] = None) -> Subspace:
    """Row space of a random k x n matrix (k uniform in 0..n when not given)."""
    rows = int(rng.integers(0, n + 1)) if k is None else k
    return Subspace.from_generator(MatrixGF(field, rng.integers(0, field.order, size=(rows, n))))


# ============================================================================
# Text format
# ============================================================================

def matrix_to_text(M: MatrixGF) -> str:
    """One row per line, entries as integers separated by single spaces."""
    return "\n".join(" ".join(str(int(x)) for x in row) for row in M.entries)


def matrices_to_text(matrices: Sequence[MatrixGF]) -> str:
    """Blocks separated by a blank line."""
    return "\n\n".join(matrix_to_text(M) for M in matrices)


def matrices_from_text(text: str, field: FieldSpec) -> list[MatrixGF]:
    """Parse blank-line separated matrix blocks."""
    blocks: list[list[list[int]]] = [[]]
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            if blocks[-1]:
                blocks.append([])
            continue
        try:
            row = [int(tok) for tok in line.split(" ")]
        except ValueError as e:
            raise ParseError(f"Line {lineno}: {line!r} is not a matrix row", module="matq", code="BAD_MATRIX_TEXT") from e
        if blocks[-1] and len(row) != len(blocks[-1][0]):
            raise ParseError(f"Line {lineno}: ragged row", module="matq", code="BAD_MATRIX_TEXT")
        if any(x < 0 or x >= field.order for x in row):
            raise ParseError(f"Line {lineno}: entry outside GF({field.order})", module="matq", code="BAD_MATRIX_TEXT")
        blocks[-1].append(row)
    return [MatrixGF.from_rows(field, b) for b in blocks if b]
