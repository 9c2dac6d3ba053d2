"""
Finite Field Arithmetic

Exact arithmetic in GF(q) for prime-power q and in extension fields
GF(q^m) over a declared base field, with coordinate expansion to the base.

Elements are plain integers. The base-|base| digits of an element are its
polynomial coefficients over the base field, lowest degree first, so for
GF(p^e) the base-p digits are the coefficients over GF(p).

Usage:
    gf4 = field_make(2, 2)
    gf16 = ext_make(gf4, 2)
    x = 2                       # the root t of t^2 + t + 1
    gf4.mul(x, x)               # -> 3, i.e. t + 1
    gf16.expand(7)              # -> coordinates over GF(4)
"""

import logging
from functools import lru_cache
from itertools import combinations, product
from typing import Optional, Sequence, Union

import numpy as np

from projcodes.config import get_limit
from projcodes.errors import FieldError


logger = logging.getLogger(__name__)

Element = Union[int, np.ndarray]

# Monic moduli shipped for the small prime-power fields: non-leading
# coefficients over GF(p), lowest degree first. Each matches what the
# modulus search below would pick.
SHIPPED_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1),         # t^2 + t + 1
    (2, 3): (1, 1, 0),      # t^3 + t + 1
    (2, 4): (1, 1, 0, 0),   # t^4 + t + 1
    (3, 2): (2, 1),         # t^2 + t + 2
}


# ============================================================================
# Integer helpers
# ============================================================================

def is_prime(p: int) -> bool:
    """Trial-division primality test (p is small here)."""
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    factors = []
    i = 2
    while i * i <= n:
        if n % i == 0:
            factors.append(i)
            while n % i == 0:
                n //= i
        i += 1
    if n > 1:
        factors.append(n)
    return factors


def prime_power(q: int) -> Optional[tuple[int, int]]:
    """Return (p, e) with q = p^e, or None if q is not a prime power."""
    if q < 2:
        return None
    factors = prime_factors(q)
    if len(factors) != 1:
        return None
    p, e = factors[0], 0
    while q > 1:
        q //= p
        e += 1
    return p, e


# ============================================================================
# Field Specification
# ============================================================================

class FieldSpec:
    """
    A finite field: either the prime field GF(p) (no base) or a degree-m
    extension of a base field given by a monic irreducible modulus.

    Immutable after construction. Fields up to
    ``limits.max_field_order_table`` elements use log/antilog tables;
    larger ones (up to ``limits.max_field_order``) multiply polynomials
    on the fly.
    """

    def __init__(self, p: int, base: Optional["FieldSpec"] = None, modulus: Sequence[int] = ()):
        if not is_prime(p):
            raise FieldError(f"Characteristic {p} is not prime", module="gf", code="NOT_PRIME")

        self.p = p
        self.base = base
        self.modulus = tuple(int(c) for c in modulus)

        if base is None:
            self.degree = 1
            self.e = 1
            self.order = p
        else:
            if base.p != p:
                raise FieldError("Base field characteristic differs", module="gf", code="FIELD_MISMATCH")
            if not self.modulus:
                raise FieldError("Extension needs a modulus", module="gf", code="BAD_MODULUS")
            self.degree = len(self.modulus)
            self.e = base.e * self.degree
            self.order = base.order ** self.degree

        max_order = get_limit("max_field_order")
        if self.order > max_order:
            raise FieldError(
                f"GF({self.order}) exceeds the supported size {max_order}",
                module="gf",
                code="SIZE_EXCEEDED",
                context={"order": self.order, "limit": max_order}
            )

        self.key = (p, base.key if base is not None else None, self.modulus)
        self._exp: Optional[np.ndarray] = None
        self._log: Optional[np.ndarray] = None
        self._inv_list: Optional[list[int]] = None

        if base is None:
            self._inv_list = [0] + [pow(x, p - 2, p) for x in range(1, p)]
        else:
            if any(c < 0 or c >= base.order for c in self.modulus):
                raise FieldError("Modulus coefficient outside the base field", module="gf", code="BAD_MODULUS")
            if not is_irreducible(self.modulus, base):
                raise FieldError(
                    f"Modulus {self.modulus} is reducible over GF({base.order})",
                    module="gf",
                    code="BAD_MODULUS"
                )
            if self.order <= get_limit("max_field_order_table"):
                self._build_tables()

    # ------------------------------------------------------------------
    # identity
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        if self.base is None:
            return f"GF({self.p})"
        return f"GF({self.order}) over GF({self.base.order})"

    @property
    def is_prime_field(self) -> bool:
        return self.base is None

    @property
    def table_mode(self) -> bool:
        return self.base is None or self._exp is not None

    @property
    def frobenius_order(self) -> int:
        """Order of the declared base field (p for a prime field)."""
        return self.base.order if self.base is not None else self.p

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def contains(self, a: Element) -> bool:
        arr = np.asarray(a)
        return bool(np.all((arr >= 0) & (arr < self.order)))

    # ------------------------------------------------------------------
    # scalar arithmetic (plain ints, used while building tables)
    # ------------------------------------------------------------------

    def _add_s(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.base is None:
            return (a + b) % self.p
        p, out, place = self.p, 0, 1
        for _ in range(self.e):
            out += (((a // place) % p + (b // place) % p) % p) * place
            place *= p
        return out

    def _neg_s(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.base is None:
            return (-a) % self.p
        p, out, place = self.p, 0, 1
        for _ in range(self.e):
            out += ((-((a // place) % p)) % p) * place
            place *= p
        return out

    def _mul_s(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.base is None:
            return (a * b) % self.p
        if self._exp is not None:
            return int(self._exp[(int(self._log[a]) + int(self._log[b])) % (self.order - 1)])
        return self._poly_mulmod(a, b)

    def _inv_s(self, a: int) -> int:
        if a == 0:
            raise FieldError("Inversion of zero", module="gf", code="ZERO_INVERSE")
        if self._inv_list is not None:
            return self._inv_list[a]
        if self._exp is not None:
            return int(self._exp[(-int(self._log[a])) % (self.order - 1)])
        return self._pow_s(a, self.order - 2)

    def _pow_s(self, a: int, k: int) -> int:
        result, base = 1, a
        while k:
            if k & 1:
                result = self._mul_s(result, base)
            base = self._mul_s(base, base)
            k >>= 1
        return result

    def _digits(self, a: int) -> list[int]:
        q = self.base.order
        out = []
        for _ in range(self.degree):
            out.append(a % q)
            a //= q
        return out

    def _encode(self, coeffs: Sequence[int]) -> int:
        q = self.base.order
        out = 0
        for c in reversed(coeffs):
            out = out * q + int(c)
        return out

    def _poly_mulmod(self, a: int, b: int) -> int:
        """Multiply two elements as polynomials over the base, reduce mod the modulus."""
        base, m = self.base, self.degree
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j, y in enumerate(db):
                if y:
                    prod[i + j] = base._add_s(prod[i + j], base._mul_s(x, y))
        return self._encode(_poly_reduce(prod, self.modulus, base))

    def _mul_by_root(self, a: int) -> int:
        """Multiply by the class of t (the modulus root)."""
        base = self.base
        coeffs = self._digits(a)
        top = coeffs[-1]
        shifted = [0] + coeffs[:-1]
        if top:
            neg_top = base._neg_s(top)
            for i, c in enumerate(self.modulus):
                if c:
                    shifted[i] = base._add_s(shifted[i], base._mul_s(neg_top, c))
        return self._encode(shifted)

    def _build_tables(self):
        """Log/antilog tables indexed by powers of the modulus root."""
        n = self.order - 1
        exp = np.zeros(2 * n, dtype=np.int64)
        log = np.zeros(self.order, dtype=np.int64)
        x = 1
        for i in range(n):
            if i > 0 and x == 1:
                raise FieldError(
                    f"Root of {self.modulus} is not primitive",
                    module="gf",
                    code="BAD_MODULUS"
                )
            exp[i] = x
            log[x] = i
            x = self._mul_by_root(x)
        exp[n:] = exp[:n]
        self._exp, self._log = exp, log
        logger.debug("built log tables for %r", self)

    # ------------------------------------------------------------------
    # vectorised arithmetic (ints or numpy arrays)
    # ------------------------------------------------------------------

    def add(self, a: Element, b: Element) -> Element:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.base is None:
            return (a + b) % self.p
        p, out, place = self.p, np.zeros(np.broadcast(a, b).shape, dtype=np.int64), 1
        for _ in range(self.e):
            out = out + (((a // place) % p + (b // place) % p) % p) * place
            place *= p
        return out

    def neg(self, a: Element) -> Element:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        if self.base is None:
            return (-a) % self.p
        p, out, place = self.p, np.zeros_like(a), 1
        for _ in range(self.e):
            out = out + ((-((a // place) % p)) % p) * place
            place *= p
        return out

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def mul(self, a: Element, b: Element) -> Element:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.base is None:
            return (a * b) % self.p
        if self._exp is not None:
            out = self._exp[self._log[a] + self._log[b]]
            return np.where((a == 0) | (b == 0), 0, out)
        return np.vectorize(self._mul_s, otypes=[np.int64])(a, b)

    def inv(self, a: Element) -> Element:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise FieldError("Inversion of zero", module="gf", code="ZERO_INVERSE")
        if self._inv_list is not None:
            return np.asarray(self._inv_list, dtype=np.int64)[a]
        if self._exp is not None:
            return self._exp[(-self._log[a]) % (self.order - 1)]
        return np.vectorize(self._inv_s, otypes=[np.int64])(a)

    def power(self, a: Element, k: int) -> Element:
        a = np.asarray(a, dtype=np.int64)
        if self._exp is not None and k >= 0:
            out = self._exp[(self._log[a] * (k % (self.order - 1))) % (self.order - 1)]
            if k == 0:
                return np.ones_like(a)
            return np.where(a == 0, 0, out)
        return np.vectorize(lambda x: self._pow_s(int(x), k), otypes=[np.int64])(a)

    def frob_pow(self, a: Element, i: int = 1) -> Element:
        """a^(Q^i) where Q is the order of the declared base field."""
        if self.base is None:
            return np.asarray(a, dtype=np.int64).copy()
        n = self.order - 1
        return self.power(a, pow(self.frobenius_order, i, n) or n)

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Matrix product over this field."""
        A, B = np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)
        if self.base is None:
            return (A @ B) % self.p
        prods = self.mul(A[:, :, None], B[None, :, :])
        if self.p == 2:
            return np.bitwise_xor.reduce(prods, axis=1)
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for k in range(A.shape[1]):
            out = self.add(out, prods[:, k, :])
        return out

    # ------------------------------------------------------------------
    # coordinates over the base
    # ------------------------------------------------------------------

    def expand(self, a: int) -> np.ndarray:
        """Coordinates of a over the base field in the basis 1, t, ..., t^(m-1)."""
        if self.base is None:
            raise FieldError(f"{self!r} has no declared base", module="gf", code="NO_BASE")
        return np.asarray(self._digits(int(a)), dtype=np.int64)

    def combine(self, coords: Sequence[int]) -> int:
        """Inverse of expand."""
        if self.base is None:
            raise FieldError(f"{self!r} has no declared base", module="gf", code="NO_BASE")
        if len(coords) != self.degree:
            raise FieldError(f"Need {self.degree} coordinates", module="gf", code="FIELD_MISMATCH")
        return self._encode([int(c) for c in coords])


# ============================================================================
# Polynomials over a field (coefficient lists, lowest degree first)
# ============================================================================

def _poly_reduce(poly: list[int], modulus: Sequence[int], field: FieldSpec) -> list[int]:
    """Remainder of poly modulo the monic polynomial t^m + sum modulus[i] t^i."""
    m = len(modulus)
    poly = list(poly)
    for top in range(len(poly) - 1, m - 1, -1):
        c = poly[top]
        if c == 0:
            continue
        neg_c = field._neg_s(c)
        shift = top - m
        poly[top] = 0
        for i, mc in enumerate(modulus):
            if mc:
                poly[shift + i] = field._add_s(poly[shift + i], field._mul_s(neg_c, mc))
    return (poly + [0] * m)[:m]


def _poly_pow_root(exponent: int, modulus: Sequence[int], field: FieldSpec) -> list[int]:
    """t^exponent reduced modulo the monic modulus, over field."""
    m = len(modulus)

    def mulmod(x: list[int], y: list[int]) -> list[int]:
        prod = [0] * (2 * m - 1)
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b:
                    prod[i + j] = field._add_s(prod[i + j], field._mul_s(a, b))
        return _poly_reduce(prod, modulus, field)

    result = [1] + [0] * (m - 1)
    base = _poly_reduce([0, 1], modulus, field) if m >= 2 else [field._neg_s(modulus[0])]
    while exponent:
        if exponent & 1:
            result = mulmod(result, base)
        base = mulmod(base, base)
        exponent >>= 1
    return result


def is_irreducible(modulus: Sequence[int], field: FieldSpec) -> bool:
    """
    Trial division of the monic polynomial t^m + sum modulus[i] t^i by every
    monic polynomial of degree 1..m//2 over field.
    """
    m = len(modulus)
    if m <= 1:
        return True
    for d in range(1, m // 2 + 1):
        for tail in product(range(field.order), repeat=d):
            if _poly_reduce(list(modulus) + [1], tail, field) == [0] * d:
                return False
    return True


def root_is_primitive(modulus: Sequence[int], field: FieldSpec) -> bool:
    """True if t generates the multiplicative group of field[t]/(modulus)."""
    n = field.order ** len(modulus) - 1
    one = [1] + [0] * (len(modulus) - 1)
    if len(modulus) == 1 and modulus[0] == 0:
        return False
    if n == 1:
        return _poly_pow_root(1, modulus, field) == one
    return all(_poly_pow_root(n // r, modulus, field) != one for r in prime_factors(n))


def find_modulus(field: FieldSpec, m: int) -> tuple[int, ...]:
    """
    First monic degree-m polynomial over field, ordered by weight and then
    lexicographically (highest-degree coefficient first), that is
    irreducible and has a primitive root.
    """
    for weight in range(0, m + 1):
        group = []
        for positions in combinations(range(m), weight):
            for values in product(range(1, field.order), repeat=weight):
                coeffs = [0] * m
                for pos, val in zip(positions, values):
                    coeffs[pos] = val
                group.append(tuple(coeffs))
        group.sort(key=lambda c: tuple(reversed(c)))
        for coeffs in group:
            if is_irreducible(coeffs, field) and root_is_primitive(coeffs, field):
                return coeffs
    raise FieldError(f"No primitive modulus of degree {m}", module="gf", code="BAD_MODULUS")


# ============================================================================
# Constructors
# ============================================================================

@lru_cache(maxsize=None)
def prime_field(p: int) -> FieldSpec:
    return FieldSpec(p)


@lru_cache(maxsize=None)
def field_make(p: int, e: int = 1) -> FieldSpec:
    """
    GF(p^e). The base of a proper extension is GF(p).

    Raises:
        FieldError: non-prime p, e < 1, or p^e above the configured bound
    """
    if not is_prime(p):
        raise FieldError(f"Characteristic {p} is not prime", module="gf", code="NOT_PRIME")
    if e < 1:
        raise FieldError(f"Degree {e} must be positive", module="gf", code="BAD_MODULUS")
    if p ** e > get_limit("max_field_order_table"):
        raise FieldError(
            f"GF({p}^{e}) exceeds the supported size",
            module="gf",
            code="SIZE_EXCEEDED",
            context={"order": p ** e}
        )
    base = prime_field(p)
    if e == 1:
        return base
    modulus = SHIPPED_MODULI.get((p, e)) or find_modulus(base, e)
    return FieldSpec(p, base, modulus)


@lru_cache(maxsize=None)
def ext_make(base: FieldSpec, m: int) -> FieldSpec:
    """
    GF(q^m) over base = GF(q). For m = 1 the result has the same order and
    element encoding as the base, with the base declared so expand works.
    """
    if m < 1:
        raise FieldError(f"Extension degree {m} must be positive", module="gf", code="BAD_MODULUS")
    if base.order ** m > get_limit("max_field_order"):
        raise FieldError(
            f"GF({base.order}^{m}) exceeds the supported size",
            module="gf",
            code="SIZE_EXCEEDED",
            context={"order": base.order ** m}
        )
    if base.is_prime_field and (base.p, m) in SHIPPED_MODULI:
        modulus = SHIPPED_MODULI[(base.p, m)]
    else:
        modulus = find_modulus(base, m)
    return FieldSpec(base.p, base, modulus)


@lru_cache(maxsize=None)
def field_of_order(q: int) -> FieldSpec:
    """GF(q) for a prime power q."""
    pe = prime_power(q)
    if pe is None:
        raise FieldError(f"{q} is not a prime power", module="gf", code="NOT_PRIME")
    return field_make(*pe)


def arith(field: FieldSpec, a: Element, b: Optional[Element] = None, kind: str = "add", i: int = 1) -> Element:
    """
    Uniform entry point: kind is one of add, sub, mul, neg, inv, frob_pow.
    frob_pow uses i as the Frobenius exponent.
    """
    if kind == "add":
        return field.add(a, b)
    if kind == "sub":
        return field.sub(a, b)
    if kind == "mul":
        return field.mul(a, b)
    if kind == "neg":
        return field.neg(a)
    if kind == "inv":
        return field.inv(a)
    if kind == "frob_pow":
        return field.frob_pow(a, i)
    raise FieldError(f"Unknown operation {kind!r}", module="gf", code="FIELD_MISMATCH")
