"""
Unit tests for projcodes/rankmetric.py - Gabidulin and Ferrers-diagram codes.

Tests cover:
- LinearMatrixCode basics
- Gabidulin MRD parameters and distance
- Ferrers subcodes (fit, dimension bound, inherited distance)
- Minimum rank distance modes
"""

import pytest
import numpy as np

from projcodes.errors import CapacityError, ParameterError, ShapeError
from projcodes.gf import field_make, field_of_order
from projcodes.matq import MatrixGF, batch_rank, rank
from projcodes.profiles import ProfileVector, profile_matrix
from projcodes.rankmetric import (
    LinearMatrixCode,
    contained_in,
    ferrers_code,
    ferrers_subcode,
    gabidulin,
    min_rank_distance,
    subcode_dim_bound,
    zero_code,
)


def pv(text):
    return ProfileVector.from_text(text)


def all_ranks(C):
    """Ranks of every nonzero codeword."""
    words = np.concatenate(list(C.codeword_chunks()))[1:]
    return batch_rank(C.field, words)


MRD_CASES = [
    (q, m, eta, delta)
    for q in (2, 3, 4)
    for m in range(1, 5)
    for eta in range(1, 5)
    for delta in range(1, min(m, eta) + 1)
]


# ============================================================================
# LinearMatrixCode Tests
# ============================================================================

class TestLinearMatrixCode:
    """Tests for the code container."""

    def test_basis_shape_checked(self, gf2):
        with pytest.raises(ShapeError):
            LinearMatrixCode(gf2, 2, 2, (MatrixGF.identity(gf2, 3),), 1)

    def test_zero_code(self, gf2):
        Z = zero_code(gf2, 2, 3, 2)
        assert Z.dim == 0
        assert Z.size == 1
        assert Z.is_independent()
        assert list(Z.codewords())[0].is_zero()

    def test_codeword_order_is_lexicographic(self, gf3):
        C = gabidulin(gf3, 2, 2, 2)
        coeffs = C.coefficients(0, C.size)
        assert coeffs[0].tolist() == [0, 0]
        assert coeffs[1].tolist() == [0, 1]
        assert coeffs[3].tolist() == [1, 0]
        assert C.codeword([1, 0]) == C.basis[0]

    def test_coefficients_are_base_q_digits_for_large_kappa(self):
        C = gabidulin(3, 6, 7, 1)
        assert C.dim == 42
        coeffs = C.coefficients(0, 5)
        assert [row[-2:].tolist() for row in coeffs] == [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1]]
        assert not coeffs[:, :-2].any()
        # 3**41 does not fit in int64
        top = C.coefficients(3 ** 41, 3 ** 41 + 2)
        assert top[0].tolist() == [1] + [0] * 41
        assert top[1].tolist() == [1] + [0] * 40 + [1]

    def test_coefficients_at_two_to_the_63(self):
        C = gabidulin(2, 8, 8, 1)
        assert C.dim == 64
        assert not C.coefficients(0, 3).any(axis=1)[0]
        assert C.coefficients(0, 3)[2].tolist() == [0] * 62 + [1, 0]
        last = C.coefficients(C.size - 2, C.size)
        assert last[0].tolist() == [1] * 63 + [0]
        assert last[1].tolist() == [1] * 64

    def test_consecutive_codewords_differ_by_last_basis_matrix(self):
        C = gabidulin(2, 8, 8, 1)
        first = next(C.codeword_chunks(chunk=2))
        assert not first[0].any()
        assert np.array_equal(first[1], C.basis[-1].entries)

    def test_codeword_needs_kappa_coefficients(self, gf2):
        C = gabidulin(gf2, 3, 3, 3)
        with pytest.raises(ShapeError):
            C.codeword([1, 0])

    def test_codewords_are_distinct(self, gf2):
        C = gabidulin(gf2, 3, 3, 2)
        words = {X for X in C.codewords()}
        assert len(words) == C.size == 64

    def test_fits(self, gf2):
        C = gabidulin(gf2, 2, 2, 1)
        assert C.fits(np.ones((2, 2), dtype=bool))
        assert not C.fits(np.eye(2, dtype=bool))
        assert not C.fits(np.ones((3, 2), dtype=bool))


# ============================================================================
# Gabidulin Tests
# ============================================================================

class TestGabidulin:
    """Tests for Gabidulin MRD codes."""

    def test_3x3_delta2(self, gf2):
        C = gabidulin(2, 3, 3, 2)
        assert C.dim == 6
        assert C.size == 64
        assert min_rank_distance(C).value == 2

    def test_3x3_delta3(self):
        C = gabidulin(2, 3, 3, 3)
        assert C.dim == 3
        assert all_ranks(C).tolist() == [3] * 7

    def test_delta1_is_full_space(self):
        C = gabidulin(2, 2, 3, 1)
        assert C.dim == 6
        assert min_rank_distance(C).value == 1

    def test_wide_code_is_transposed(self):
        C = gabidulin(2, 2, 4, 2)
        assert (C.m, C.eta) == (2, 4)
        assert C.dim == 4
        assert min_rank_distance(C).value == 2

    def test_accepts_field_spec(self, gf4):
        assert gabidulin(gf4, 2, 2, 2).field == gf4

    @pytest.mark.parametrize("delta", [0, 4])
    def test_delta_out_of_range(self, delta):
        with pytest.raises(ParameterError) as exc:
            gabidulin(2, 3, 3, delta)
        assert exc.value.code == "DELTA_OUT_OF_RANGE"

    @pytest.mark.parametrize("q,m,eta,delta", MRD_CASES)
    def test_mrd_dimension(self, q, m, eta, delta):
        C = gabidulin(q, m, eta, delta)
        assert C.dim == max(m, eta) * (min(m, eta) - delta + 1)
        assert C.is_independent()

    @pytest.mark.parametrize("q,m,eta,delta", [c for c in MRD_CASES if c[0] ** (max(c[1], c[2]) * (min(c[1], c[2]) - c[3] + 1)) <= 1 << 16])
    def test_mrd_distance(self, q, m, eta, delta):
        assert min_rank_distance(gabidulin(q, m, eta, delta)).value == delta

    @pytest.mark.slow
    @pytest.mark.parametrize("q,m,eta,delta", [c for c in MRD_CASES if 1 << 16 < c[0] ** (max(c[1], c[2]) * (min(c[1], c[2]) - c[3] + 1)) <= 1 << 20])
    def test_mrd_distance_large(self, q, m, eta, delta):
        assert min_rank_distance(gabidulin(q, m, eta, delta)).value == delta


# ============================================================================
# Ferrers Subcode Tests
# ============================================================================

class TestFerrersSubcode:
    """Tests for the largest subcode vanishing outside a Ferrers shape."""

    def test_full_mask_keeps_code(self, gf2):
        C = gabidulin(gf2, 2, 2, 2)
        S = profile_matrix(pv("1100"))
        assert S.mask.all()
        F = ferrers_subcode(C, S, 2)
        assert F.dim == C.dim

    def test_printed_example(self, gf2):
        S = profile_matrix(pv("0101100"))
        F = ferrers_code(gf2, S, 2)
        assert F.dim >= 4
        assert F.fits(S.mask)
        assert F.is_independent()
        assert min_rank_distance(F).value >= 2

    def test_delta1_gives_dot_count(self, gf3):
        for text in ("0101100", "10000", "100101", "0011"):
            S = profile_matrix(pv(text))
            assert ferrers_code(gf3, S, 1).dim == S.w

    def test_shape_mismatch(self, gf2):
        with pytest.raises(ShapeError):
            ferrers_subcode(gabidulin(gf2, 3, 3, 2), profile_matrix(pv("1100")), 2)

    def test_no_dots_gives_zero_code(self, gf2):
        F = ferrers_code(gf2, profile_matrix(pv("0111")), 1)
        assert F.dim == 0

    def test_delta_above_shape_gives_zero_code(self, gf2):
        F = ferrers_code(gf2, profile_matrix(pv("10000")), 2)
        assert F.dim == 0

    def test_bad_delta(self, gf2):
        with pytest.raises(ParameterError):
            ferrers_code(gf2, profile_matrix(pv("1000")), 0)

    def test_contained_in_mrd_parent(self, gf2):
        S = profile_matrix(pv("100100"))
        F = ferrers_code(gf2, S, 2)
        assert contained_in(F, gabidulin(gf2, S.m, S.eta, 2))
        assert not contained_in(gabidulin(gf2, S.m, S.eta, 1), gabidulin(gf2, S.m, S.eta, 2))

    @pytest.mark.oracle
    @pytest.mark.parametrize("n", range(1, 9))
    @pytest.mark.parametrize("delta", [1, 2, 3])
    def test_fit_and_dimension_bound(self, gf2, n, delta):
        for x in range(1 << n):
            S = profile_matrix(ProfileVector.from_int(x, n))
            F = ferrers_code(gf2, S, delta)
            assert F.fits(S.mask)
            assert F.dim >= subcode_dim_bound(S.w, S.m, S.eta, delta)

    @pytest.mark.slow
    @pytest.mark.oracle
    @pytest.mark.parametrize("n", range(1, 9))
    @pytest.mark.parametrize("delta", [1, 2, 3])
    def test_exhaustive_distance_sweep(self, gf2, n, delta):
        for x in range(1 << n):
            F = ferrers_code(gf2, profile_matrix(ProfileVector.from_int(x, n)), delta)
            if F.size > 1 << 16:
                continue
            report = min_rank_distance(F, mode="exhaustive")
            assert report.exact
            assert report.at_least(delta), f"{ProfileVector.from_int(x, n)}: {report.value}"

    @pytest.mark.parametrize("text,delta", [("0101100", 2), ("1001000", 2), ("110000", 2), ("1000100", 3)])
    def test_inherited_distance(self, gf2, text, delta):
        F = ferrers_code(gf2, profile_matrix(pv(text)), delta)
        report = min_rank_distance(F)
        assert report.at_least(delta)


# ============================================================================
# Minimum Rank Distance Tests
# ============================================================================

class TestMinRankDistance:
    """Tests for exhaustive and sampled minimum rank distance."""

    def test_zero_dimensional(self, gf2):
        report = min_rank_distance(zero_code(gf2, 2, 2, 2))
        assert report.value is None
        assert report.checked == 0
        assert report.at_least(5)

    def test_exhaustive_counts(self, gf2):
        report = min_rank_distance(gabidulin(gf2, 3, 3, 3))
        assert report.exact
        assert report.checked == 7

    def test_cap_exceeded(self, gf2):
        with pytest.raises(CapacityError) as exc:
            min_rank_distance(gabidulin(gf2, 3, 3, 2), cap=10)
        assert exc.value.code == "CAP_EXCEEDED"

    def test_sampled_is_upper_bound(self, gf2):
        C = gabidulin(gf2, 4, 4, 2)
        report = min_rank_distance(C, mode="sampled", seed=7, trials=2000)
        assert not report.exact
        assert report.value >= 2
        assert report.checked <= 2000
        assert report.to_dict()["mode"] == "sampled"

    def test_sampled_reproducible(self, gf2):
        C = gabidulin(gf2, 4, 4, 3)
        first = min_rank_distance(C, mode="sampled", seed=3, trials=500)
        second = min_rank_distance(C, mode="sampled", seed=3, trials=500)
        assert first == second

    def test_unknown_mode(self, gf2):
        with pytest.raises(ParameterError) as exc:
            min_rank_distance(gabidulin(gf2, 2, 2, 2), mode="guess")
        assert exc.value.code == "BAD_MODE"

    def test_q4_code(self):
        C = gabidulin(field_of_order(4), 2, 3, 2)
        assert C.dim == 3 * 1
        assert min_rank_distance(C).value == 2
        assert rank(C.basis[0]) >= 2
