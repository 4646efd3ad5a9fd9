import json
import unittest

import phiq


class SmokeTest(unittest.TestCase):
    def test_polygon_series(self):
        self.assertEqual(
            phiq.compute_phi("P3", 15),
            [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1],
        )
        self.assertEqual(phiq.compute_phi("P2", 8), [1, 0, 0, 0, 0, 0, 0, 0, 0])
        self.assertEqual(phiq.compute_phi("P3", 15), phiq.euler_infinity(15))

    def test_golden_prefix(self):
        self.assertEqual(phiq.compute_phi("G8_2", 6), [1, -3, 3, 4, -8, -2, 2])

    def test_graph_json_input(self):
        g = phiq.catalog_graph_json("G6_2")
        parsed = json.loads(g)
        self.assertEqual(sorted(parsed.keys()),
                         ["bounded_faces", "name", "outer_face", "root", "vertices"])
        self.assertEqual(phiq.compute_phi(g, 5), phiq.compute_phi("G6_2", 5))

    def test_oracle_matches_engine(self):
        self.assertEqual(phiq.compute_phi_oracle("G6_2", 5), phiq.compute_phi("G6_2", 5))

    def test_theta_and_tqft(self):
        self.assertEqual(phiq.theta_h(2, 6), [1, 0, 0, 0, 0, 0, 0])
        self.assertEqual(phiq.compute_phi_tqft("P2", 5), [1, 1, 1, 1, 1, 1])

    def test_identify(self):
        r = phiq.identify("G1_triple", order=20)
        self.assertEqual(r["status"], "found")
        self.assertEqual(r["factors"], [3, 3, 4])

    def test_catalog(self):
        names = phiq.catalog_names()
        self.assertIn("G8_7", names)
        self.assertIn("P9", names)

    def test_suite(self):
        results = phiq.run_suite("sbb", 8)
        self.assertTrue(all(ok for _, ok in results))


if __name__ == "__main__":
    unittest.main()
