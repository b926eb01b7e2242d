import unittest
import warnings
from fractions import Fraction

from hypothesis import given, settings, strategies as st
from sympy import bernoulli, multiplicity, primerange

from fermatjac_lib.core import arith
from fermatjac_lib.core.arith import Triple, INFINITY
from fermatjac_lib.core.density import enumerate_pth_power_free
from fermatjac_lib.core.errors import HypothesisError

class TripleTest(unittest.TestCase):
    def test_invalid_triples(self):
        for r, s, t in ((0, 1, 4), (1, 1, 2), (2, 2, 5), (-1, 3, 3)):
            self.assertRaises(ValueError, Triple, r, s, t)

    def test_from_rs(self):
        self.assertEqual(Triple(2, 1, 4), Triple.from_rs(2, 1, 7))
        self.assertEqual(7, Triple.from_rs(2, 1, 7).p)

    def test_reduced(self):
        reduced_tests = (
            ((1, 1, 3), 1, (1, 1, 3)),
            ((2, 2, 1), 3, (1, 1, 3)),
            ((1, 2, 4), 4, (4, 1, 2)),
            ((1, 3, 3), 5, (5, 1, 1)),
        )
        for triple, h, expected in reduced_tests:
            self.assertEqual((h, Triple(*expected)), Triple(*triple).reduced())

    def test_orbit(self):
        self.assertEqual([Triple(1, 1, 3), Triple(2, 2, 1)], arith.triple_orbit(Triple(1, 1, 3)))
        self.assertEqual([Triple(1, 1, 1)], arith.triple_orbit(Triple(1, 1, 1)))

    @given(st.sampled_from([5, 7, 11, 13]), st.data())
    @settings(max_examples=50)
    def test_reduced_is_in_orbit(self, p, data):
        r = data.draw(st.integers(1, p - 2))
        s = data.draw(st.integers(1, p - 1 - r))
        triple = Triple(r, s, p - r - s)
        h, reduced = triple.reduced()
        self.assertEqual(1, reduced.s)
        self.assertEqual(p, reduced.p)
        self.assertIn(reduced, arith.triple_orbit(triple))

class SymbolTest(unittest.TestCase):
    def test_check_odd_prime(self):
        for p in (1, 2, 9, 15, -3):
            self.assertRaises(ValueError, arith.check_odd_prime, p)
        arith.check_odd_prime(37)

    def test_genus(self):
        self.assertEqual(1, arith.curve_genus(3))
        self.assertEqual(3, arith.curve_genus(7))

    def test_legendre(self):
        legendre_tests = (
            (2, 5, -1),
            (3, 5, -1),
            (4, 5, 1),
            (-1, 5, 1),
            (-1, 7, -1),
            (-2, 3, 1),
            (9, 5, 1),
        )
        for a, p, expected in legendre_tests:
            self.assertEqual(expected, arith.legendre(a, p))
        with warnings.catch_warnings():
            warnings.simplefilter('error')
            self.assertEqual(-1, arith.legendre(2, 5))

    @given(st.integers(1, 10 ** 6), st.integers(1, 10 ** 6), st.sampled_from([3, 5, 7, 11, 13, 37]))
    @settings(max_examples=100)
    def test_legendre_multiplicative(self, a, b, p):
        if (a * b) % p == 0:
            return
        self.assertEqual(arith.legendre(a, p) * arith.legendre(b, p), arith.legendre(a * b, p))

    def test_b_symbol(self):
        for B, expected in ((0, -1), (1, 1), (2, -1), (4, 1), (5, -1)):
            self.assertEqual(expected, arith.b_symbol(B, 5))

class SplittingTest(unittest.TestCase):
    def test_splitting_data(self):
        splitting_tests = (
            (2, 5, 4, 1, True),
            (11, 5, 1, 4, False),
            (19, 5, 2, 2, True),
            (2, 7, 3, 2, False),
            (3, 7, 6, 1, True),
        )
        for ell, p, f, g, inert_over_F in splitting_tests:
            data = arith.splitting_data(ell, p)
            self.assertEqual((f, g, inert_over_F), (data.f, data.g, data.inert_in_K_over_F))

    def test_splitting_rejects_p(self):
        self.assertRaises(ValueError, arith.splitting_data, 5, 5)
        self.assertRaises(ValueError, arith.splitting_data, 4, 5)

    def test_is_inert(self):
        for ell, p, expected in ((2, 5, True), (3, 5, True), (11, 5, False), (2, 7, False), (3, 7, True), (5, 5, False)):
            self.assertEqual(expected, arith.is_inert(ell, p))

class InvariantTest(unittest.TestCase):
    def test_u_of(self):
        u_tests = (
            (-32, 5, 2),
            (-72, 5, 1),
            (10, 5, 0),
            (-800, 5, 0),
            (2, 5, 1),
        )
        for x, p, expected in u_tests:
            self.assertEqual(expected, arith.u_of(x, p).u)
        self.assertEqual(INFINITY, arith.u_of(1, 5).u)
        self.assertEqual(INFINITY, arith.u_of(-1, 5).u)
        self.assertRaises(ValueError, arith.u_of, 0, 5)

    def test_fermat_quotient_stable(self):
        for p in (3, 5, 7):
            for delta in range(2, p ** 4 + 1):
                if delta % p == 0:
                    continue
                low = pow(delta, p - 1, p ** 6) - 1
                high = pow(delta, p - 1, p ** 8) - 1
                self.assertNotEqual(0, low)
                self.assertEqual(multiplicity(p, low), multiplicity(p, high))
                decomposition = arith.u_of(delta, p)
                self.assertEqual(multiplicity(p, low) - 1, decomposition.ord_b)
                self.assertEqual(decomposition.ord_b + 1, decomposition.u)

    def test_chi_conductor_exponent(self):
        for delta, p, expected in ((10, 5, 6), (2, 5, 2), (8, 3, 0)):
            self.assertEqual(expected, arith.chi_conductor_exponent(delta, p))

    def test_x_value(self):
        self.assertEqual(-32, arith.x_value(Triple(1, 1, 3), 2))
        self.assertEqual(-72, arith.x_value(Triple(1, 1, 3), 3))

    def test_d_value(self):
        self.assertEqual(1, arith.d_value(Triple(1, 1, 3), 3, 5))
        self.assertEqual(1, arith.d_value(Triple(1, 1, 3), 3, 5, prec=3))
        self.assertEqual(2, arith.d_value(Triple(1, 1, 3), 10, 5))
        self.assertRaises(ValueError, arith.d_value, Triple(1, 1, 3), 2, 5)

    def test_d_value_nonzero_when_u_is_1(self):
        for p in (5, 7, 11):
            triples = [Triple(r, s, p - r - s) for r in range(1, p - 1) for s in range(1, p - r)]
            for delta in enumerate_pth_power_free(200, p):
                for triple in triples:
                    if arith.u_of(arith.x_value(triple, delta), p).u == 1:
                        self.assertNotEqual(0, arith.d_value(triple, delta, p), (triple, delta))

    def test_B_value(self):
        B_tests = (
            (1, 2, 5, 0),
            (1, 3, 5, 1),
            (1, 1, 5, 1),
        )
        for r, delta, p, expected in B_tests:
            self.assertEqual(expected, arith.B_value(r, delta, p))
        self.assertRaises(HypothesisError, arith.B_value, 1, 5, 5)
        self.assertRaises(ValueError, arith.B_value, 4, 2, 5)

class BernoulliTest(unittest.TestCase):
    def test_bernoulli_number(self):
        bernoulli_tests = (
            (1, Fraction(-1, 2)),
            (2, Fraction(1, 6)),
            (3, Fraction(0)),
            (4, Fraction(-1, 30)),
            (12, Fraction(-691, 2730)),
        )
        for n, expected in bernoulli_tests:
            self.assertEqual(expected, arith.bernoulli_number(n))

    def test_bernoulli_mod_p(self):
        self.assertEqual({2: 6, 4: 3}, arith.bernoulli_mod_p(7))
        self.assertEqual({}, arith.bernoulli_mod_p(3))

    def test_bernoulli_mod_p_oracle(self):
        for p in primerange(5, 42):
            values = arith.bernoulli_mod_p(p)
            self.assertEqual(list(range(2, p - 2, 2)), sorted(values))
            for k, value in values.items():
                b = bernoulli(k)
                self.assertEqual((int(b.p) * pow(int(b.q), -1, p)) % p, value, (p, k))

    def test_regularity(self):
        for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
            self.assertTrue(arith.is_regular(p))
        regularity = arith.irregularity_index(37)
        self.assertFalse(regularity.regular)
        self.assertEqual(1, regularity.i_p)
        self.assertEqual([32], regularity.indices)
        self.assertEqual([44], arith.irregularity_index(59).indices)

class ReduceDeltaTest(unittest.TestCase):
    def test_reduce_delta(self):
        reduce_tests = (
            (96, 5, 3, 1, True),
            (-64, 3, -1, 0, True),
            (200, 5, 200, 2, False),
            (11, 5, 11, 1, False),
            (1, 7, 1, 0, True),
        )
        for delta, p, value, k, all_inert in reduce_tests:
            reduced = arith.reduce_delta(delta, p)
            self.assertEqual((value, k, all_inert), (reduced.delta, reduced.k_delta, reduced.all_inert))
        self.assertRaises(ValueError, arith.reduce_delta, 0, 5)

    @given(st.integers(1, 10 ** 4), st.integers(1, 12), st.sampled_from([3, 5, 7]))
    @settings(max_examples=50)
    def test_pth_powers_are_trivial(self, delta, m, p):
        self.assertEqual(arith.reduce_delta(delta, p).delta, arith.reduce_delta(delta * m ** p, p).delta)

class LinearAlgebraTest(unittest.TestCase):
    def test_rank(self):
        self.assertEqual(1, arith.rank_mod_p([[1, 2], [2, 4]], 2, 5))
        self.assertEqual(2, arith.rank_mod_p([[1, 2], [2, 3]], 2, 5))
        self.assertEqual(1, arith.rank_mod_p([[5, 10], [1, 7]], 2, 5))

    def test_nullspace(self):
        self.assertEqual([[3, 1]], arith.nullspace_mod_p([[1, 2]], 2, 5))
        self.assertEqual([], arith.nullspace_mod_p([[1, 0], [0, 1]], 2, 7))
        for vector in arith.nullspace_mod_p([[1, 2, 3], [0, 1, 4]], 3, 7):
            self.assertEqual(0, (vector[0] + 2 * vector[1] + 3 * vector[2]) % 7)
            self.assertEqual(0, (vector[1] + 4 * vector[2]) % 7)
