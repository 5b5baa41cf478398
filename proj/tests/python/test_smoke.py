"""Smoke tests for the python module: the headline identities on small
inputs, exercised through the binding layer."""

import unittest

import interlace


K2 = (2, [(0, 1)])
K3 = (3, [(0, 1), (0, 2), (1, 2)])
P3 = (3, [(0, 1), (1, 2)])


class PolynomialSmoke(unittest.TestCase):
    def test_q_nullity_spot_values(self):
        self.assertEqual(interlace.q_nullity(*K2), {1: 2})
        self.assertEqual(interlace.q_nullity(*P3), {1: 2, 2: 1})
        self.assertEqual(interlace.q_nullity(*K3), {1: 4})
        self.assertEqual(interlace.q_nullity(4, []), {4: 1})

    def test_methods_agree(self):
        for n, edges in (K2, K3, P3, (4, [(0, 1), (1, 2), (2, 3), (0, 3)])):
            self.assertEqual(
                interlace.q_nullity(n, edges, method="recursive"),
                interlace.q_nullity(n, edges),
            )
            self.assertEqual(
                interlace.q_global(n, edges, method="recursive"),
                interlace.q_global(n, edges),
            )

    def test_two_variable(self):
        self.assertEqual(
            interlace.q_twovar(*K2), {(2, 0): 1, (1, 0): -2, (0, 1): 2}
        )
        # A loop contributes through the adjacency diagonal.
        self.assertEqual(interlace.q_twovar(1, [], loops=[0]), {(1, 0): 1})

    def test_big_integers_survive_the_boundary(self):
        # q_N evaluated at 2 is 2^n; with n = 80 the coefficients force the
        # sum over subsets past 64 bits.
        poly = interlace.q_nullity(20, [])
        self.assertEqual(poly, {20: 1})
        value = sum(c * 2**k for k, c in poly.items())
        self.assertEqual(value, 2**20)

    def test_martin_and_euler(self):
        loops = (1, [(0, 0), (0, 0)])
        self.assertEqual(interlace.martin_directed(*loops), {1: 1})
        self.assertEqual(interlace.euler_circuit_count(*loops), 1)
        self.assertEqual(interlace.martin_undirected(*loops), {1: 1})

    def test_interlace_graph_of_word(self):
        self.assertEqual(interlace.interlace_graph_of_word([0, 1, 0, 1]), [(0, 1)])
        self.assertEqual(interlace.interlace_graph_of_word([0, 1, 1, 0]), [])

    def test_tutte_triangle(self):
        self.assertEqual(
            interlace.tutte(*K3), {(2, 0): 1, (1, 0): 1, (0, 1): 1}
        )

    def test_tutte_martin(self):
        self.assertEqual(interlace.tm_graphic(*K2), {1: 2})
        self.assertEqual(interlace.tm_graphic(*K2, global_=True), {1: 3})

    def test_delta_matroid(self):
        self.assertEqual(interlace.adjacency_delta_matroid(*K2), [[], [0, 1]])
        self.assertEqual(interlace.q_delta(2, [[], [0, 1]]), {0: 2, 1: 2})
        self.assertTrue(interlace.symmetric_exchange(2, [[], [0, 1]]))
        self.assertFalse(
            interlace.symmetric_exchange(3, [[0], [1], [2], [1, 2], []])
        )

    def test_checks_are_deterministic(self):
        ok1, report1 = interlace.run_checks("plane", seed=5)
        ok2, report2 = interlace.run_checks("plane", seed=5)
        self.assertTrue(ok1 and ok2)
        self.assertEqual(report1, report2)

    def test_errors_surface_as_exceptions(self):
        with self.assertRaises(Exception):
            interlace.euler_circuit_count(2, [(0, 1), (0, 1), (1, 0)])


if __name__ == "__main__":
    unittest.main()
