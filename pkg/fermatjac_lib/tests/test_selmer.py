import json
import unittest

from fermatjac_lib.core import arith, selmer
from fermatjac_lib.core.density import enumerate_pth_power_free
from fermatjac_lib.core.errors import HypothesisError
from fermatjac_lib.core.selmer import SelmerReport, selmer_closed_form, selmer_direct
from fermatjac_lib.core.utils import render_json

def admissible_deltas(p, bound):
    return [d for d in enumerate_pth_power_free(bound, p)
            if d % p and arith.reduce_delta(d, p).all_inert]

class HypothesisTest(unittest.TestCase):
    def test_hypotheses_record(self):
        record = selmer.hypotheses(1, 2, 5)
        self.assertTrue(all(record.values()))
        self.assertFalse(selmer.hypotheses(1, 11, 5)['all_inert'])
        self.assertFalse(selmer.hypotheses(1, 10, 5)['p_coprime_delta'])
        self.assertFalse(selmer.hypotheses(1, 1, 37)['p_regular'])
        self.assertFalse(selmer.hypotheses(1, 1, 3)['p_at_least_5'])

    def test_check_hypotheses(self):
        for r, delta, p in ((1, 11, 5), (1, 10, 5), (1, 1, 37), (1, 1, 3), (4, 2, 5)):
            with self.assertRaises(HypothesisError) as cm:
                selmer.check_hypotheses(r, delta, p)
            self.assertIn('p_regular', cm.exception.hypotheses)

class LocalImageTest(unittest.TestCase):
    def test_at_p(self):
        self.assertEqual(frozenset([3, 4, 5]), selmer.local_image_at_p(1, 2, 5).indices)
        self.assertEqual(frozenset([2, 4, 5]), selmer.local_image_at_p(1, 3, 5).indices)
        self.assertRaises(HypothesisError, selmer.local_image_at_p, 1, 2, 3)

    def test_dimensions(self):
        for p in (5, 7, 11, 13):
            for delta in admissible_deltas(p, 60)[:20]:
                for r in range(1, p - 1):
                    self.assertEqual((p + 1) // 2, selmer.local_image_at_p(r, delta, p).dimension)
                for ell in arith.reduce_delta(delta, p).factorization:
                    self.assertEqual(1, selmer.local_image_off_p(ell, delta, p).dimension)
                self.assertEqual('unramified', selmer.local_image_off_p(101, delta, p).kind)

class ClosedFormTest(unittest.TestCase):
    def test_worked_examples(self):
        closed_tests = (
            (5, 1, 2, 0, 1, ['2']),
            (5, 1, 3, 1, 2, ['3', 'E_2']),
            (5, 1, 1, 1, 1, ['E_2']),
            (7, 1, 1, 6, 1, ['E_4']),
            (7, 1, 3, 4, 1, ['3']),
        )
        for p, r, delta, B, dimension, generators in closed_tests:
            report = selmer_closed_form(r, delta, p)
            self.assertEqual((B, dimension, dimension - 1, generators),
                             (report.B, report.dimension, report.S, report.generators))

    def test_delta_one(self):
        for p in (5, 7, 11, 13):
            for r in range(1, p - 1):
                report = selmer_closed_form(r, 1, p)
                self.assertEqual(selmer.closed_form_dimension(0, report.b, p), report.dimension)

    def test_rank_S(self):
        self.assertEqual(0, selmer.selmer_rank_S(1, 2, 5))
        self.assertEqual(1, selmer.selmer_rank_S(1, 3, 5))

    def test_report_round_trip(self):
        report = selmer_closed_form(1, 3, 5)
        self.assertEqual(report, SelmerReport.from_dict(json.loads(render_json(report.to_dict()))))

    def test_torsion(self):
        self.assertEqual(1, selmer.torsion_dimension(2, 5))
        self.assertTrue(selmer.torsion_summary(32, 5)['delta_is_pth_power'])

class BoundTest(unittest.TestCase):
    def test_upper_bound(self):
        bound_tests = (
            (2, 5, 2),
            (1, 5, 1),
            (6, 5, 3),
            (1, 7, 1),
            (1, 13, 3),
        )
        for delta, p, expected in bound_tests:
            self.assertEqual(expected, selmer.selmer_upper_bound(delta, p))

    def test_bound_dominates_closed_form(self):
        for p in (5, 7, 11):
            for delta in admissible_deltas(p, 40):
                bound = selmer.selmer_upper_bound(delta, p)
                for r in range(1, p - 1):
                    self.assertLessEqual(selmer_closed_form(r, delta, p).dimension, bound)

    def test_irregular(self):
        self.assertRaises(HypothesisError, selmer.selmer_upper_bound, 1, 37)
        self.assertEqual(10, selmer.selmer_upper_bound(1, 37, dim_Cl=1))
        self.assertRaises(HypothesisError, selmer.selmer_upper_bound, 11, 5)
        self.assertEqual(5, selmer.selmer_upper_bound(11, 5, assume_principal=True))

    def test_vandiver_and_class_bounds(self):
        self.assertEqual(selmer_closed_form(1, 2, 5).dimension,
                         selmer.selmer_vandiver_bound(1, 2, 5, 0))
        self.assertEqual(1 + 1 + 2, selmer.selmer_class_bound(2, 5, 1))

class DirectTest(unittest.TestCase):
    def test_worked_examples(self):
        report = selmer_direct(1, 2, 5)
        self.assertEqual(1, report.dimension)
        self.assertEqual([{'2': 1}], report.basis)
        report = selmer_direct(1, 3, 5)
        self.assertEqual(2, report.dimension)
        self.assertTrue(selmer.same_span(report, selmer_closed_form(1, 3, 5), 5))

    def test_s_unit_generators(self):
        labels, elements = selmer.s_unit_generators(6, 5)
        self.assertEqual(['5', '2', '3', 'omega', 'E_2'], labels)
        self.assertEqual(len(labels), len(elements))

    def test_agrees_with_closed_form(self):
        for p in (5, 7, 11, 13):
            for delta in admissible_deltas(p, 100):
                for r in range(1, p - 1):
                    closed, direct = selmer.compare_methods(r, delta, p)
                    self.assertEqual(closed.dimension, direct.dimension)

    def test_independent_of_embedding(self):
        for p, r, delta in ((5, 1, 3), (5, 2, 6), (7, 2, 15), (7, 4, 3), (11, 3, 2)):
            direct = selmer_direct(r, delta, p)
            for branch in range(2, p):
                other = selmer_direct(r, delta, p, branch=branch)
                self.assertEqual(direct.dimension, other.dimension)
                self.assertTrue(selmer.same_span(direct, other, p), (p, r, delta, branch))

    def test_same_span(self):
        a = SelmerReport(5, 1, 3, 1, 1, ['3', 'E_2'], 2, 1, 'closed_form', {}, None)
        b = SelmerReport(5, 1, 3, 1, 1, [], 2, 1, 'direct', {}, [{'3': 1, 'E_2': 2}, {'3': 2}])
        c = SelmerReport(5, 1, 3, 1, 1, [], 2, 1, 'direct', {}, [{'3': 1}, {'omega': 1}])
        self.assertTrue(selmer.same_span(a, b, 5))
        self.assertFalse(selmer.same_span(a, c, 5))
