# Built-in imports
from unittest import TestCase

# 3rd-party imports
from hypothesis import given, settings, strategies as st

# Local imports
from s_eulerian.geometry import ehrhart_check, ehrhart_data, \
    has_vanishing_differences, hstar_shape, lattice_count, series_identity, \
    series_identity_check
from s_eulerian.invseq import SSeq
from s_eulerian.polyx import ExactPoly, NotPalindromicError, gamma_expansion

small_s = st.lists(st.integers(1, 5), min_size=1, max_size=3).map(
    lambda values: SSeq(tuple(values)))


class TestGeometry(TestCase):
    def setUp(self):
        self.s_135 = SSeq((1, 3, 5))
        self.s_24 = SSeq((2, 4))


class TestLatticeCount(TestGeometry):
    def test_unit_dilation(self):
        self.assertEqual(4, lattice_count(SSeq((1, 2)), 1))

    def test_lecture_hall_unit_dilation(self):
        self.assertEqual(14, lattice_count(self.s_135, 1))

    def test_zero_dilation_is_the_origin(self):
        self.assertEqual(1, lattice_count(self.s_135, 0))

    def test_negative_dilation_raises(self):
        with self.assertRaises(ValueError):
            lattice_count(self.s_24, -1)

    def test_counts_grow_past_machine_integers(self):
        count = lattice_count(SSeq.type_b(8), 400)
        self.assertEqual(801**8, count)


class TestEhrhart(TestGeometry):
    def test_lecture_hall_polytopes(self):
        for s in ((1, 3, 5), (2, 4, 6), (1, 2, 3, 4), (3, 3, 3), (1, 4, 3, 8)):
            self.assertTrue(ehrhart_check(SSeq(s), len(s), 8))

    def test_data_lists_counts_and_numerator(self):
        data = ehrhart_data(self.s_24, 2, 3)
        self.assertEqual(ExactPoly([1, 6, 1]), data.hstar)
        self.assertEqual((1, 9, 25, 49), data.counts)
        self.assertEqual(list(data.counts), data.series())

    @settings(max_examples=30, deadline=None)
    @given(small_s)
    def test_any_s(self, s):
        self.assertTrue(ehrhart_check(s, len(s), 6))

    def test_counts_are_polynomial_in_t(self):
        counts = ehrhart_data(self.s_135, 3, 10).counts
        self.assertTrue(has_vanishing_differences(counts, 3))
        self.assertFalse(has_vanishing_differences(counts, 2))

    def test_non_symmetric_h_star(self):
        shape = hstar_shape(self.s_135, 3)
        self.assertTrue(shape.unimodal)
        self.assertTrue(shape.log_concave)
        with self.assertRaises(NotPalindromicError):
            gamma_expansion(ehrhart_data(self.s_135, 3, 1).hstar)


class TestSeriesIdentity(TestGeometry):
    def test_signed_permutations(self):
        for n in range(1, 5):
            self.assertTrue(series_identity_check('signedB', n, T=8))

    def test_k_ary_words(self):
        for n, k in ((1, 3), (2, 2), (3, 3), (4, 2)):
            self.assertTrue(series_identity_check('kary', n, k, T=8))

    def test_multiset_pairs(self):
        for n in range(1, 4):
            self.assertTrue(series_identity_check('multiset2', n, T=8))

    def test_signed_multiset_pairs(self):
        for n in range(1, 3):
            self.assertTrue(series_identity_check('signedMultiset', n, T=8))

    def test_macmahon_default_multiplicities(self):
        for n in range(1, 4):
            self.assertTrue(series_identity_check('macmahon', n, T=8))

    def test_macmahon_uneven_multiplicities(self):
        numerator, series, closed = series_identity(
            'macmahon', 2, T=3, multiplicities=(2, 1))
        self.assertEqual(ExactPoly([1, 2]), numerator)
        self.assertEqual([1, 6, 18, 40], closed)
        self.assertEqual(closed, series)

    def test_k_ary_needs_k(self):
        with self.assertRaises(ValueError):
            series_identity('kary', 2)

    def test_unknown_kind(self):
        with self.assertRaises(ValueError):
            series_identity('typeA', 2)
