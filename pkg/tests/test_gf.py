"""
Unit tests for projcodes/gf.py - Finite field arithmetic.

Tests cover:
- Prime and prime-power helpers
- Field construction and size limits
- Field axioms (inverses, Frobenius)
- Coordinate expansion over the base field
"""

import pytest
import numpy as np

from projcodes.errors import FieldError
from projcodes.gf import (
    FieldSpec,
    arith,
    ext_make,
    field_make,
    field_of_order,
    find_modulus,
    is_irreducible,
    is_prime,
    prime_field,
    prime_power,
)


# ============================================================================
# Integer Helper Tests
# ============================================================================

class TestIntegerHelpers:
    """Tests for primality and prime-power detection."""

    def test_is_prime(self):
        assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]

    def test_prime_power(self):
        assert prime_power(2) == (2, 1)
        assert prime_power(4) == (2, 2)
        assert prime_power(9) == (3, 2)
        assert prime_power(16) == (2, 4)

    def test_not_prime_power(self):
        assert prime_power(1) is None
        assert prime_power(6) is None
        assert prime_power(12) is None


# ============================================================================
# Construction Tests
# ============================================================================

class TestFieldMake:
    """Tests for field_make and field_of_order."""

    def test_gf2(self):
        gf2 = field_make(2, 1)
        assert gf2.order == 2
        assert list(gf2.elements()) == [0, 1]
        assert gf2.is_prime_field

    def test_gf4_generator_squared(self, gf4):
        """x * x = x + 1 under t^2 + t + 1 (x encodes as 2, x + 1 as 3)."""
        assert gf4.order == 4
        assert gf4.modulus == (1, 1)
        assert int(gf4.mul(2, 2)) == 3

    def test_gf3_addition(self, gf3):
        assert int(gf3.add(2, 2)) == 1

    def test_non_prime_characteristic(self):
        with pytest.raises(FieldError) as exc:
            field_make(4)
        assert exc.value.code == "NOT_PRIME"

    def test_size_limit(self):
        with pytest.raises(FieldError) as exc:
            field_make(2, 17)
        assert exc.value.code == "SIZE_EXCEEDED"

    def test_field_of_order(self):
        assert field_of_order(4) == field_make(2, 2)
        assert field_of_order(5) == prime_field(5)
        with pytest.raises(FieldError):
            field_of_order(6)

    def test_reducible_modulus_rejected(self, gf2):
        # t^2 + 1 = (t + 1)^2 over GF(2)
        with pytest.raises(FieldError) as exc:
            FieldSpec(2, gf2, (1, 0))
        assert exc.value.code == "BAD_MODULUS"

    def test_shipped_moduli_match_search(self, gf2):
        assert find_modulus(gf2, 2) == (1, 1)
        assert find_modulus(gf2, 3) == (1, 1, 0)
        assert find_modulus(gf2, 4) == (1, 1, 0, 0)

    def test_is_irreducible(self, gf2):
        assert is_irreducible((1, 1, 0), gf2)       # t^3 + t + 1
        assert not is_irreducible((1, 1, 1), gf2)   # t^3 + t^2 + t + 1 = (t + 1)^3

    def test_equality_and_hash(self):
        assert field_make(2, 2) == field_make(2, 2)
        assert hash(field_make(3)) == hash(prime_field(3))
        assert field_make(2) != field_make(3)


class TestExtMake:
    """Tests for extension fields over a declared base."""

    def test_gf8_over_gf2(self, gf2):
        gf8 = ext_make(gf2, 3)
        assert gf8.order == 8
        assert gf8.base == gf2

    def test_gf16_over_gf4_frobenius_fixes_base(self, gf4):
        gf16 = ext_make(gf4, 2)
        assert gf16.order == 16
        assert gf16.frobenius_order == 4
        elements = gf16.elements()
        fixed = elements[gf16.frob_pow(elements, 1) == elements]
        assert list(fixed) == [0, 1, 2, 3]

    def test_identity_extension(self, gf2):
        gf2_again = ext_make(gf2, 1)
        assert gf2_again.order == 2
        assert list(gf2_again.expand(1)) == [1]

    def test_polynomial_mode_above_table_limit(self, gf2):
        big = ext_make(gf2, 17)
        assert big.order == 1 << 17
        assert not big.table_mode
        a = 12345
        assert int(big.mul(a, big.inv(a))) == 1

    def test_bad_degree(self, gf2):
        with pytest.raises(FieldError):
            ext_make(gf2, 0)


# ============================================================================
# Field Axiom Tests
# ============================================================================

class TestFieldAxioms:
    """Exhaustive checks on the small fields used by the codes."""

    @pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (2, 3), (2, 4), (3, 2), (5, 1), (2, 8)])
    def test_inverses(self, p, e):
        field = field_make(p, e)
        nonzero = field.elements()[1:]
        assert np.all(field.mul(nonzero, field.inv(nonzero)) == 1)

    @pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (3, 2), (2, 8)])
    def test_frobenius_is_automorphism_fixing_prime_field(self, p, e):
        field = field_make(p, e)
        a = field.elements()
        b = a[::-1]
        frob = field.frob_pow(a, 1)
        assert sorted(frob.tolist()) == a.tolist()
        assert np.array_equal(field.frob_pow(field.mul(a, b), 1), field.mul(frob, field.frob_pow(b, 1)))
        assert np.array_equal(field.frob_pow(field.add(a, b), 1), field.add(frob, field.frob_pow(b, 1)))
        assert a[frob == a].tolist() == list(range(p))

    def test_frobenius_order_divides_degree(self, gf2):
        gf8 = ext_make(gf2, 3)
        a = gf8.elements()
        assert np.array_equal(gf8.frob_pow(a, 3), a)

    def test_frob_pow_gf4(self, gf4):
        assert int(gf4.frob_pow(2, 1)) == 3

    def test_inverse_of_one(self, gf4):
        assert int(gf4.inv(1)) == 1

    def test_inverse_of_zero(self, gf4):
        with pytest.raises(FieldError) as exc:
            gf4.inv(0)
        assert exc.value.code == "ZERO_INVERSE"

    def test_distributive(self, gf3):
        gf9 = field_make(3, 2)
        a, b, c = np.meshgrid(gf9.elements(), gf9.elements(), gf9.elements(), indexing="ij")
        left = gf9.mul(a, gf9.add(b, c))
        right = gf9.add(gf9.mul(a, b), gf9.mul(a, c))
        assert np.array_equal(left, right)

    def test_matmul(self, gf4):
        A = np.array([[1, 2], [0, 3]])
        I = np.eye(2, dtype=np.int64)
        assert np.array_equal(gf4.matmul(A, I), A)


class TestArith:
    """Tests for the uniform arith entry point."""

    def test_kinds(self, gf4):
        assert int(arith(gf4, 2, 3, "add")) == 1
        assert int(arith(gf4, 2, 3, "mul")) == 1
        assert int(arith(gf4, 2, kind="inv")) == 3
        assert int(arith(gf4, 2, kind="frob_pow", i=1)) == 3
        assert int(arith(gf4, 2, 2, "sub")) == 0

    def test_unknown_kind(self, gf4):
        with pytest.raises(FieldError):
            arith(gf4, 1, 1, "div")


# ============================================================================
# Expansion Tests
# ============================================================================

class TestExpand:
    """Tests for coordinates over the base field."""

    def test_expand_zero(self, gf2):
        gf8 = ext_make(gf2, 3)
        assert list(gf8.expand(0)) == [0, 0, 0]

    def test_expand_gf4(self, gf4):
        assert list(gf4.expand(3)) == [1, 1]

    def test_expand_bijection(self, gf2):
        gf8 = ext_make(gf2, 3)
        coords = {tuple(gf8.expand(a)) for a in range(8)}
        assert len(coords) == 8
        assert all(gf8.combine(gf8.expand(a)) == a for a in range(8))

    def test_expand_linear(self, gf4):
        gf16 = ext_make(gf4, 2)
        for a in range(16):
            for b in range(16):
                lhs = gf16.expand(int(gf16.add(a, b)))
                rhs = gf4.add(gf16.expand(a), gf16.expand(b))
                assert np.array_equal(lhs, rhs)

    def test_expand_needs_base(self, gf3):
        with pytest.raises(FieldError) as exc:
            gf3.expand(1)
        assert exc.value.code == "NO_BASE"
