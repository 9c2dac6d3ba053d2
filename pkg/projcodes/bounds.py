"""
Exact Counting Bounds

Gaussian coefficients, the size of the projective space, injection-metric
sphere sizes, the Gilbert-Varshamov lower bound, and the size bound for
punctured constant-dimension codes. All arithmetic is on Python integers
and Fractions; log_q is taken only for presentation.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Union

from projcodes.errors import ParameterError
from projcodes.gf import FieldSpec, prime_power
from projcodes.matq import Subspace, enumerate_subspaces, injection_distance


logger = logging.getLogger(__name__)


def _check_q(q: int):
    if prime_power(q) is None:
        raise ParameterError(f"q={q} is not a prime power", module="bounds", code="OUT_OF_RANGE")


def _check_nonneg(**values: int):
    for name, value in values.items():
        if value < 0:
            raise ParameterError(f"{name}={value} must be >= 0", module="bounds", code="OUT_OF_RANGE")


# ============================================================================
# Gaussian coefficients
# ============================================================================

@lru_cache(maxsize=None)
def gaussian(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n; 0 when k > n."""
    _check_q(q)
    _check_nonneg(n=n, k=k)
    if k > n:
        return 0
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def projective_size(n: int, q: int) -> int:
    """|P_q^n|, the number of subspaces of GF(q)^n."""
    _check_nonneg(n=n)
    return sum(gaussian(n, k, q) for k in range(n + 1))


# ============================================================================
# Sphere sizes
# ============================================================================

@lru_cache(maxsize=None)
def sphere_size(n: int, q: int, k: int, t: int) -> int:
    """
    Number of subspaces within injection distance t of a fixed
    k-dimensional subspace of GF(q)^n.

    A subspace at distance exactly r either has the same dimension and
    meets the center in dimension k - r, or differs in dimension by j and
    meets it in dimension k - r (larger) or k - r + j (smaller).
    """
    _check_nonneg(n=n, k=k, t=t)
    if k > n:
        raise ParameterError(f"k={k} exceeds n={n}", module="bounds", code="OUT_OF_RANGE")
    g = lambda a, b: gaussian(a, b, q)
    total = 0
    for r in range(min(t, n) + 1):
        total += q ** (r * r) * g(k, r) * g(n - k, r)
        for j in range(1, r + 1):
            total += q ** (r * (r - j)) * (g(k, r) * g(n - k, r - j) + g(n - k, r) * g(k, r - j))
    return total


@lru_cache(maxsize=None)
def sphere_size_subspace(n: int, q: int, k: int, t: int) -> int:
    """
    Number of subspaces within subspace distance t of a fixed
    k-dimensional center: an l-dimensional W meeting it in dimension i
    lies at distance k + l - 2i, and there are
    q^((k-i)(l-i)) [k i] [n-k l-i] of them.
    """
    _check_nonneg(n=n, k=k, t=t)
    if k > n:
        raise ParameterError(f"k={k} exceeds n={n}", module="bounds", code="OUT_OF_RANGE")
    total = 0
    for l in range(n + 1):
        for i in range(min(k, l) + 1):
            if k + l - 2 * i <= t:
                total += q ** ((k - i) * (l - i)) * gaussian(k, i, q) * gaussian(n - k, l - i, q)
    return total


def brute_force_sphere_size(n: int, field: FieldSpec, center: Subspace, t: int) -> int:
    """Count subspaces within injection distance t of center by enumeration."""
    return sum(1 for W in enumerate_subspaces(n, field) if injection_distance(center, W) <= t)


# ============================================================================
# Gilbert-Varshamov bound
# ============================================================================

@dataclass
class GVBound:
    """
    |P_q^n|^2 divided by the summed sphere sizes, kept exact.

    numerator and denominator are the unreduced terms; value is the
    reduced Fraction.
    """
    n: int
    q: int
    d: int
    numerator: int
    denominator: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def log_q(self) -> float:
        return log_q(self.value, self.q)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "q": self.q,
            "d": self.d,
            "numerator": str(self.numerator),
            "denominator": str(self.denominator),
            "value": str(self.value),
            "log_q": round(self.log_q, 4),
        }


def gv_bound(n: int, q: int, d: int) -> GVBound:
    """Gilbert-Varshamov lower bound on the largest code with injection distance d."""
    if d < 1:
        raise ParameterError(f"d={d} must be >= 1", module="bounds", code="OUT_OF_RANGE")
    _check_q(q)
    size = projective_size(n, q)
    denominator = sum(gaussian(n, k, q) * sphere_size(n, q, k, d - 1) for k in range(n + 1))
    logger.debug("gv_bound n=%d q=%d d=%d -> %d/%d", n, q, d, size * size, denominator)
    return GVBound(n, q, d, size * size, denominator)


def gv_bound_subspace(n: int, q: int, d: int) -> GVBound:
    """The same bound with subspace-distance spheres."""
    if d < 1:
        raise ParameterError(f"d={d} must be >= 1", module="bounds", code="OUT_OF_RANGE")
    _check_q(q)
    size = projective_size(n, q)
    denominator = sum(gaussian(n, k, q) * sphere_size_subspace(n, q, k, d - 1) for k in range(n + 1))
    return GVBound(n, q, d, size * size, denominator)


# ============================================================================
# Puncturing
# ============================================================================

def punctured_size_bound(M: int, n: int, k: int, q: int) -> int:
    """floor(M (q^(n-k) + q^k - 2) / (q^n - 1)) for an (n, M, d, k) code."""
    if n < 1 or not 0 <= k <= n:
        raise ParameterError(f"Need n >= 1 and 0 <= k <= n, got n={n}, k={k}", module="bounds", code="OUT_OF_RANGE")
    _check_nonneg(M=M)
    return M * (q ** (n - k) + q ** k - 2) // (q ** n - 1)


# ============================================================================
# Logarithms
# ============================================================================

def log_q(x: Union[int, Fraction], q: int) -> float:
    """
    log base q of a positive integer or Fraction. Exact powers of q give
    exact integers; big integers never pass through float.
    """
    x = Fraction(x)
    if x <= 0:
        raise ParameterError(f"log of non-positive value {x}", module="bounds", code="OUT_OF_RANGE")
    if x.denominator == 1:
        value, power = x.numerator, 0
        while value % q == 0:
            value //= q
            power += 1
        if value == 1:
            return float(power)
    return (math.log(x.numerator) - math.log(x.denominator)) / math.log(q)
