# Built-in imports
from unittest import TestCase, mock
import os
import warnings

# 3rd-party imports
from hypothesis import given, settings, strategies as st

# Local imports
from s_eulerian.invseq import BudgetExceededError, InvSeq, SSeq, \
    ascent_set, enumerate_sequences, fraction_less, oracle_poly, \
    oracle_x_poly, partition_ranges, stats, unrank
from s_eulerian.polyx import ExactPoly, PQPoly

small_s = st.lists(st.integers(1, 5), min_size=1, max_size=4).map(
    lambda values: SSeq(tuple(values)))


class TestInvSeq(TestCase):
    def setUp(self):
        self.s_24 = SSeq((2, 4))
        self.s_135 = SSeq((1, 3, 5))


class TestSSeq(TestInvSeq):
    def test_parse(self):
        self.assertEqual((1, 3, 5), SSeq.parse('1, 3,5').s)

    def test_nonpositive_entry_raises(self):
        with self.assertRaises(ValueError):
            SSeq((1, 0, 2))

    def test_type_b(self):
        self.assertEqual((2, 4, 6), SSeq.type_b(3).s)

    def test_multiset_pairs(self):
        self.assertEqual((1, 1, 3, 2), SSeq.multiset_pairs(2).s)

    def test_signed_multiset_pairs(self):
        self.assertEqual((1, 4, 3, 8), SSeq.signed_multiset_pairs(2).s)

    def test_exc_cyc(self):
        self.assertEqual((1, 3, 5), SSeq.exc_cyc(2, 3).s)

    def test_arithmetic_step(self):
        self.assertEqual(3, SSeq.arithmetic(3, 4).arithmetic_step())
        self.assertIsNone(self.s_135.arithmetic_step())

    def test_size_is_product(self):
        self.assertEqual(15, self.s_135.size)

    def test_sequence_outside_bound_raises(self):
        with self.assertRaises(ValueError):
            InvSeq((0, 4), self.s_24)

    def test_sequence_of_wrong_length_raises(self):
        with self.assertRaises(ValueError):
            InvSeq((0,), self.s_24)


class TestFractionLess(TestInvSeq):
    def test_cross_multiplication(self):
        self.assertTrue(fraction_less(1, 3, 1, 2))
        self.assertFalse(fraction_less(2, 4, 1, 2))

    def test_consecutive_denominators_compare_numerators(self):
        # a/p < b/(p+1) exactly when a < b, for 0 <= a < p and 0 <= b <= p
        for p in range(1, 31):
            for a in range(p):
                for b in range(p + 1):
                    self.assertEqual(a < b, fraction_less(a, p, b, p + 1))


class TestAscentSet(TestInvSeq):
    def test_all_zero_sequence_has_no_ascents(self):
        self.assertEqual(frozenset(), ascent_set(InvSeq((0, 0), self.s_24)))

    def test_only_second_position_ascends(self):
        self.assertEqual(frozenset({1}),
                         ascent_set(InvSeq((0, 3), self.s_24)))

    def test_equal_ratios_are_not_ascents(self):
        self.assertEqual(frozenset({0}),
                         ascent_set(InvSeq((1, 2), self.s_24)))


class TestStats(TestInvSeq):
    def test_zero_sequence(self):
        bundle = stats(InvSeq((0, 0), self.s_24))
        self.assertEqual((0, 0, 0), (bundle.asc, bundle.amaj, bundle.weight))

    def test_type_d_ascent_from_first_two_entries(self):
        bundle = stats(InvSeq((1, 1), self.s_24))
        self.assertEqual(frozenset({0}), bundle.ascent_set_d)
        self.assertEqual(1, bundle.asc_d)

    def test_type_d_ascent_set_with_two_elements(self):
        bundle = stats(InvSeq((0, 3), self.s_24))
        self.assertEqual(frozenset({0, 1}), bundle.ascent_set_d)
        self.assertEqual(2, bundle.asc_d)

    def test_amaj_weights_ascents_from_the_end(self):
        bundle = stats(InvSeq((0, 3), self.s_24))
        self.assertEqual(1, bundle.asc)
        self.assertEqual(1, bundle.amaj)
        self.assertEqual(3, bundle.weight)

    def test_ifmaj(self):
        self.assertEqual(1, stats(InvSeq((0, 3), self.s_24), k=2).ifmaj)

    def test_ifmaj_on_wrong_shape_raises(self):
        with self.assertRaises(ValueError):
            stats(InvSeq((0, 1, 2), self.s_135), k=2)

    def test_asc_d_on_wrong_shape_raises(self):
        with self.assertRaises(ValueError):
            stats(InvSeq((0, 1, 2), self.s_135), type_d=True)

    def test_undefined_statistic_raises(self):
        bundle = stats(InvSeq((0, 1, 2), self.s_135))
        with self.assertRaises(ValueError):
            bundle.value('asc_d')

    @settings(max_examples=40, deadline=None)
    @given(small_s)
    def test_amaj_bounds_asc(self, s):
        for e in enumerate_sequences(s):
            bundle = stats(e)
            self.assertEqual(len(bundle.ascent_set), bundle.asc)
            self.assertLessEqual(bundle.asc, bundle.amaj)
            self.assertLessEqual(bundle.amaj, len(s) * bundle.asc)


class TestEnumerateSequences(TestInvSeq):
    def test_single_entry(self):
        self.assertEqual([(0,), (1,)],
                         [e.e for e in enumerate_sequences(SSeq((2,)))])

    def test_table_of_eight(self):
        sequences = [e.e for e in enumerate_sequences(self.s_24)]
        self.assertEqual(8, len(sequences))
        self.assertEqual((0, 0), sequences[0])
        self.assertEqual((1, 3), sequences[-1])

    def test_fifteen_sequences(self):
        self.assertEqual(15, len(list(enumerate_sequences(self.s_135))))

    def test_range_restriction(self):
        sequences = [e.e for e in enumerate_sequences(self.s_24, start=3,
                                                      stop=5)]
        self.assertEqual([(0, 3), (1, 0)], sequences)

    def test_unrank(self):
        self.assertEqual((1, 2), unrank(self.s_24, 6))

    def test_budget_exceeded(self):
        with self.assertRaises(BudgetExceededError) as raised:
            list(enumerate_sequences(self.s_24, budget=5))
        self.assertIn('8', str(raised.exception))

    @mock.patch.dict(os.environ, {'EULERIAN_ENUM_BUDGET': '10'})
    def test_budget_from_environment(self):
        with self.assertRaises(BudgetExceededError):
            oracle_poly(self.s_135)

    @mock.patch.dict(os.environ, {'EULERIAN_ENUM_BUDGET': 'lots'})
    def test_unreadable_budget_warns(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            self.assertEqual(15, len(list(enumerate_sequences(self.s_135))))
        self.assertTrue(any('EULERIAN_ENUM_BUDGET' in str(w.message)
                            for w in caught))

    @settings(max_examples=40, deadline=None)
    @given(small_s)
    def test_lexicographic_and_complete(self, s):
        sequences = [e.e for e in enumerate_sequences(s)]
        self.assertEqual(s.size, len(sequences))
        self.assertEqual(sorted(set(sequences)), sequences)

    def test_partition_ranges_cover_everything(self):
        ranges = partition_ranges(10, 3)
        self.assertEqual(0, ranges[0][0])
        self.assertEqual(10, ranges[-1][1])
        for (_, stop), (start, _) in zip(ranges, ranges[1:]):
            self.assertEqual(stop, start)

    def test_more_parts_than_items(self):
        self.assertEqual([(0, 1), (1, 2)], partition_ranges(2, 8))


class TestOraclePoly(TestInvSeq):
    def test_ascent_polynomial(self):
        self.assertEqual(ExactPoly([1, 10, 4]), oracle_x_poly(self.s_135))

    def test_single_sequence(self):
        self.assertEqual(PQPoly.monomial(),
                         oracle_poly(SSeq((1,)), ('asc', 'amaj', 'weight')))

    def test_type_d_tally(self):
        self.assertEqual(ExactPoly([2, 4, 2]),
                         oracle_x_poly(self.s_24, 'asc_d'))

    def test_slot_order(self):
        # x records asc, q records amaj, p records |e|
        poly = oracle_poly(SSeq((2,)), ('asc', 'amaj', 'weight'))
        self.assertEqual(PQPoly.monomial() + PQPoly.monomial(x=1, p=1, q=1),
                         poly)

    def test_ifmaj_needs_arithmetic_s(self):
        with self.assertRaises(ValueError):
            oracle_poly(self.s_135, ('asc', 'ifmaj'))

    def test_too_many_statistics(self):
        with self.assertRaises(ValueError):
            oracle_poly(self.s_24, ('asc', 'amaj', 'weight', 'asc'))

    def test_unknown_statistic(self):
        with self.assertRaises(ValueError):
            oracle_poly(self.s_24, ('des',))

    @settings(max_examples=10, deadline=None)
    @given(small_s, st.integers(2, 4))
    def test_workers_agree_with_serial_tally(self, s, workers):
        weights = ('asc', 'amaj', 'weight')
        self.assertEqual(oracle_poly(s, weights),
                         oracle_poly(s, weights, workers=workers))

    @settings(max_examples=30, deadline=None)
    @given(small_s)
    def test_total_count_is_product(self, s):
        self.assertEqual(s.size, oracle_x_poly(s)(1))
