# Built-in imports
from unittest import TestCase
from fractions import Fraction
import itertools

# 3rd-party imports
from hypothesis import given, settings, strategies as st

# Local imports
from s_eulerian.eulerian import affine_b_poly, d_poly, e_poly, fmaj_refined, \
    interlace_chain, q_eulerian, refined, refined_interlacing, refined_pq, \
    specialize, t_poly, t_refined, weighted_recurrence
from s_eulerian.invseq import SSeq, oracle_poly, oracle_x_poly
from s_eulerian.polyx import ExactPoly, PQPoly, certify_real_rooted, \
    gamma_expansion, gamma_expansion_about

small_s = st.lists(st.integers(1, 5), min_size=1, max_size=4).map(
    lambda values: SSeq(tuple(values)))

POSITIVE_Q = (Fraction(1, 3), Fraction(1, 2), 1, 2, 3)

T_4 = ([2, 22, 22, 2], [0, 20, 24, 4], [0, 14, 28, 6], [0, 10, 28, 10],
       [0, 10, 28, 10], [0, 6, 28, 14], [0, 4, 24, 20], [0, 2, 22, 22, 2])


def _total(polys):
    return sum(polys[1:], polys[0])


class TestEulerian(TestCase):
    def setUp(self):
        self.s_135 = SSeq((1, 3, 5))
        self.s_123 = SSeq((1, 2, 3))
        self.s_24 = SSeq((2, 4))


class TestRefined(TestEulerian):
    def test_first_level(self):
        family = refined(SSeq((3,)), 1)
        self.assertEqual([ExactPoly([1]), ExactPoly([0, 1]),
                          ExactPoly([0, 1])], list(family.polys))

    def test_lecture_hall_family(self):
        family = refined(self.s_135, 3)
        self.assertEqual([ExactPoly([1, 2]), ExactPoly([0, 3]),
                          ExactPoly([0, 2, 1]), ExactPoly([0, 2, 1]),
                          ExactPoly([0, 1, 2])], list(family.polys))
        self.assertEqual(ExactPoly([1, 10, 4]), family.total())

    def test_symmetric_group(self):
        self.assertEqual(ExactPoly([1, 4, 1]), e_poly(self.s_123, 3))

    def test_level_beyond_s_raises(self):
        with self.assertRaises(ValueError):
            refined(self.s_123, 4)

    def test_engine_checks_starting_family(self):
        with self.assertRaises(ValueError):
            list(weighted_recurrence(self.s_24, [PQPoly.monomial()], 1, 2))

    @settings(max_examples=50, deadline=None)
    @given(small_s)
    def test_agrees_with_enumeration(self, s):
        self.assertEqual(oracle_x_poly(s), e_poly(s, len(s)))

    @settings(max_examples=50, deadline=None)
    @given(small_s)
    def test_always_real_rooted(self, s):
        certificate = certify_real_rooted(e_poly(s, len(s)))
        self.assertTrue(certificate.is_real_rooted)

    def test_refined_polynomials_interlace(self):
        self.assertTrue(refined_interlacing(refined(self.s_135, 3)))


class TestTypeD(TestEulerian):
    def test_second_level_family(self):
        family = t_refined(2)
        self.assertEqual([ExactPoly([2]), ExactPoly([0, 2]),
                          ExactPoly([0, 2]), ExactPoly([0, 0, 2])],
                         list(family.polys))

    def test_third_level_family(self):
        expected = ([2, 4, 2], [0, 6, 2], [0, 4, 4], [0, 4, 4], [0, 2, 6],
                    [0, 2, 4, 2])
        self.assertEqual([ExactPoly(c) for c in expected],
                         list(t_refined(3).polys))

    def test_third_level_total(self):
        self.assertEqual(ExactPoly([2, 22, 22, 2]), t_poly(3))

    def test_fourth_level_family(self):
        self.assertEqual([ExactPoly(c) for c in T_4],
                         list(t_refined(4).polys))

    def test_d_polynomials(self):
        self.assertEqual(ExactPoly([1]), d_poly(1))
        self.assertEqual(ExactPoly([1, 1]), t_poly(1))
        self.assertEqual(ExactPoly([1, 44, 102, 44, 1]), d_poly(4))

    def test_recurrence_starts_at_two(self):
        with self.assertRaises(ValueError):
            t_refined(1)

    def test_agrees_with_type_d_ascents(self):
        for n in range(2, 6):
            self.assertEqual(oracle_x_poly(SSeq.type_b(n), 'asc_d'),
                             t_poly(n))

    def test_fourth_level_interlaces(self):
        self.assertTrue(refined_interlacing(t_refined(4)))

    def test_low_levels_do_not_interlace(self):
        self.assertFalse(refined_interlacing(t_refined(2)))
        self.assertFalse(refined_interlacing(t_refined(3)))

    def test_every_member_is_real_rooted(self):
        for n in range(2, 7):
            for poly in t_refined(n).polys:
                self.assertTrue(certify_real_rooted(poly).is_real_rooted)

    def test_affine_b(self):
        self.assertEqual(ExactPoly([0, 4, 4]), affine_b_poly(2))
        self.assertEqual(ExactPoly([0, 10, 28, 10]), affine_b_poly(3))

    def test_affine_b_needs_n_at_least_two(self):
        with self.assertRaises(ValueError):
            affine_b_poly(1)


class TestRefinedPQ(TestEulerian):
    def test_first_level(self):
        family = refined_pq(SSeq((2,)), 1)
        self.assertEqual([PQPoly.monomial(), PQPoly.monomial(x=1, p=1, q=1)],
                         list(family.polys))

    def test_collapses_to_standard_family(self):
        family = refined_pq(self.s_135, 3)
        self.assertEqual(list(refined(self.s_135, 3).polys),
                         specialize(family, 1, 1))

    def test_agrees_with_enumeration(self):
        self.assertEqual(oracle_poly(self.s_123, ('asc', 'amaj', 'weight')),
                         refined_pq(self.s_123, 3).total())

    @settings(max_examples=40, deadline=None)
    @given(small_s)
    def test_agrees_with_enumeration_for_any_s(self, s):
        self.assertEqual(oracle_poly(s, ('asc', 'amaj', 'weight')),
                         refined_pq(s, len(s)).total())

    def test_specialization_agrees_with_enumeration(self):
        q = Fraction(1, 2)
        expected = oracle_poly(self.s_24, ('asc', 'amaj', 'weight'))
        self.assertEqual(expected.specialize(1, q),
                         _total(specialize(refined_pq(self.s_24, 2), 1, q)))

    def test_positive_specializations_are_real_rooted(self):
        family = refined_pq(SSeq((2, 3, 5, 4)), 4)
        for p, q in ((1, Fraction(1, 3)), (2, 3), (Fraction(1, 2), 5)):
            total = _total(specialize(family, p, q))
            self.assertTrue(certify_real_rooted(total).is_real_rooted)

    def test_nonpositive_parameter_raises(self):
        family = refined_pq(self.s_24, 2)
        with self.assertRaises(ValueError):
            specialize(family, 0, 1)
        with self.assertRaises(ValueError):
            specialize(family, 1, -1)


class TestFlagMajor(TestEulerian):
    def test_first_level(self):
        family = fmaj_refined(1, 3)
        self.assertEqual(PQPoly.monomial(x=1, q=1), family.polys[2])

    def test_hyperoctahedral_sum(self):
        expected = PQPoly({(0, 0, 0): 1, (1, 0, 1): 2, (1, 0, 2): 2,
                           (1, 0, 3): 2, (2, 0, 4): 1})
        self.assertEqual(expected, fmaj_refined(2, 2).total())

    def test_collapses_to_type_b_eulerian(self):
        self.assertEqual(ExactPoly([1, 6, 1]),
                         fmaj_refined(2, 2).total().x_marginal())

    def test_agrees_with_ifmaj_enumeration(self):
        for n, k in ((1, 4), (2, 3), (3, 2), (3, 3), (4, 2)):
            s = SSeq.arithmetic(k, n)
            self.assertEqual(oracle_poly(s, ('asc', 'ifmaj')),
                             fmaj_refined(n, k).total())

    def test_positive_q_is_real_rooted(self):
        for n, k in itertools.product(range(1, 7), (2, 3)):
            family = fmaj_refined(n, k)
            for q in POSITIVE_Q:
                total = _total(specialize(family, 1, q))
                self.assertTrue(certify_real_rooted(total).is_real_rooted)

    def test_invalid_size_raises(self):
        with self.assertRaises(ValueError):
            fmaj_refined(0, 2)


class TestQEulerian(TestEulerian):
    def setUp(self):
        super().setUp()
        self.pq = refined_pq(self.s_123, 3).total()

    def test_comaj_keeps_q(self):
        poly = q_eulerian(self.pq, 3, 'comaj')
        self.assertEqual(0, poly.min_exponent('p'))
        self.assertEqual(ExactPoly([1, 4, 1]), poly.x_marginal())

    def test_maj_is_palindromic_in_x_at_q_one(self):
        self.assertTrue(q_eulerian(self.pq, 3, 'maj').x_marginal()
                        .is_palindromic())

    def test_inv_counts_inversions(self):
        poly = q_eulerian(self.pq, 3, 'inv')
        # sum over S_3 of q^inv
        by_q = {}
        for (_, _, qe), c in poly.items():
            by_q[qe] = by_q.get(qe, 0) + c
        self.assertEqual({0: 1, 1: 2, 2: 2, 3: 1}, by_q)

    def test_maj_is_real_rooted_for_positive_q(self):
        for n in range(1, 7):
            pq = refined_pq(SSeq(tuple(range(1, n + 1))), n).total()
            poly = q_eulerian(pq, n, 'maj')
            for q in POSITIVE_Q:
                certificate = certify_real_rooted(poly.specialize(1, q))
                self.assertTrue(certificate.is_real_rooted, (n, q))

    def test_wreath_maj_is_real_rooted_for_positive_q(self):
        for n, k in itertools.product(range(1, 5), (2, 3)):
            pq = refined_pq(SSeq.arithmetic(k, n), n).total()
            poly = q_eulerian(pq, n, 'maj')
            for q in POSITIVE_Q:
                certificate = certify_real_rooted(poly.specialize(1, q))
                self.assertTrue(certificate.is_real_rooted, (n, k, q))

    def test_unknown_statistic_raises(self):
        with self.assertRaises(ValueError):
            q_eulerian(self.pq, 3, 'des')


class TestInterlaceChain(TestEulerian):
    def test_classical_eulerian_chain(self):
        self.assertTrue(interlace_chain(SSeq(tuple(range(1, 9))), 8))

    def test_type_b_chain(self):
        self.assertTrue(interlace_chain(SSeq.type_b(6), 6))

    def test_single_level_is_vacuous(self):
        self.assertTrue(interlace_chain(SSeq((1,)), 1))

    @settings(max_examples=30, deadline=None)
    @given(small_s)
    def test_any_s(self, s):
        self.assertTrue(interlace_chain(s, len(s)))


class TestGammaNonnegative(TestEulerian):
    def test_symmetric_groups(self):
        for n in range(1, 9):
            gamma = gamma_expansion(e_poly(SSeq(tuple(range(1, n + 1))), n))
            self.assertTrue(gamma.nonnegative)

    def test_hyperoctahedral_groups(self):
        for n in range(1, 7):
            self.assertTrue(gamma_expansion(e_poly(SSeq.type_b(n), n))
                            .nonnegative)

    def test_type_d(self):
        for n in range(2, 7):
            self.assertTrue(gamma_expansion(t_poly(n)).nonnegative)

    def test_affine_b_is_symmetric_about_a_shifted_centre(self):
        poly = affine_b_poly(2)
        gamma = gamma_expansion_about(poly, poly.low_degree + poly.degree)
        self.assertEqual((0, 4), gamma.gammas)
