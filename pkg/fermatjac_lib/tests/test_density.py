import unittest

from fermatjac_lib.core import density
from fermatjac_lib.core.arith import Triple
from fermatjac_lib.core.density import enumerate_pth_power_free, density_experiment

class EnumerateTest(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(list(range(1, 32)), list(enumerate_pth_power_free(31, 5)))
        values = list(enumerate_pth_power_free(32, 5))
        self.assertEqual(31, len(values))
        self.assertNotIn(32, values)
        cube_free = list(enumerate_pth_power_free(27, 3))
        self.assertEqual(23, len(cube_free))
        for excluded in (8, 16, 24, 27):
            self.assertNotIn(excluded, cube_free)
        self.assertEqual([], list(enumerate_pth_power_free(0, 3)))

    def test_density_of_stream(self):
        # 1/zeta(3) = 0.8319...
        count = len(list(enumerate_pth_power_free(10 ** 5, 3)))
        self.assertAlmostEqual(0.8319, count / 10.0 ** 5, places=2)

    def test_factorization(self):
        spf = density.smallest_prime_factors(100)
        self.assertEqual({2: 2, 3: 1, 7: 1}, density._factor(84, spf))
        self.assertEqual({97: 1}, density._factor(97, spf))

class DensityTest(unittest.TestCase):
    def test_rows(self):
        report = density_experiment(5, Triple(1, 1, 3), 200, per_delta=True)
        rows = dict((row['delta'], row) for row in report.rows)
        self.assertEqual((1, 1, 1), (rows[2]['eps'], rows[2]['tau'], rows[2]['alpha']))
        self.assertEqual((-1, 1, 0), (rows[3]['eps'], rows[3]['tau'], rows[3]['alpha']))
        self.assertEqual((1, 2), (rows[10]['ord_p'], rows[10]['delta0_mod_p2']))
        self.assertEqual(set(density.DENSITY_FIELDS), set(report.rows[0].keys()))

    def test_breakdown_reconstructs_totals(self):
        report = density_experiment(7, Triple(1, 2, 4), 3000)
        self.assertEqual(report.n_total, sum(c.n for c in report.breakdown))
        self.assertEqual(report.n_plus, sum(c.n_plus for c in report.breakdown))
        self.assertIsNone(report.rows)
        self.assertEqual(report.fraction, float(report.n_plus) / report.n_total)

    def test_density_p3(self):
        report = density_experiment(3, Triple(1, 1, 1), 10 ** 5)
        self.assertTrue(report.within(0.02), report.fraction)

    def test_density_p5(self):
        report = density_experiment(5, Triple(1, 1, 3), 5 * 10 ** 4)
        self.assertTrue(report.within(0.02), report.fraction)

    def test_invalid(self):
        self.assertRaises(ValueError, density_experiment, 5, Triple(1, 1, 1), 100)
        self.assertRaises(ValueError, density_experiment, 5, Triple(1, 1, 3), 0)
