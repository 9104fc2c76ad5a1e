"""
Test Suite for the Counterexample Pipeline
Tests r-tables, inequalities, multiplicities, verdicts, bounds and the prime search
"""

import unittest
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path

import numpy as np

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from characters import xi_is_proper
from finite_fields import least_primitive_polynomial, make_field
from metabelian import BadD, DimensionMismatch, EpsilonVector, make_group
from zassenhaus import (
    BadRecord, MergeConflict, PairRecord, RTable, TRIVIAL_SUPPORT_REASON, character_sum, coset_representatives,
    corollary_threshold, delta_bound, delta_values, gauss_sum_check, inequality_system, inequality_values,
    merge_records, mu_by_coset_counts, mu_table, omega_norm_squared, parse_record, r_rows, r_table,
    recheck_record, search_prime_pairs, verdict,
)
from zassenhaus.search import BELOW_THRESHOLD

PARAMS = make_group(7, 19, 3, (1, 3), (1, 2))
EPS = EpsilonVector((2, -1, 0))

TABLE_7_NORMS = [3, 5, 2, 1, 2, 5, 3]
TABLE_7_CLASSES = [1, 2, 2, 3, 2, 2, 1]
TABLE_19_NORMS = [2, 4, 8, -5, 3, -6, 6, 1, -2, -3, -2, 1, 6, -6, 3, -5, 8, 4, 2]
TABLE_19_CLASSES = [1, 2, 3, 1, 1, 2, 2, 3, 1, 1, 1, 3, 2, 2, 1, 1, 3, 2, 1]


def bounded_vectors(d: int, m: int):
    rng = np.random.default_rng(3)
    out = []
    while len(out) < 50:
        head = [int(x) for x in rng.integers(-m, m + 1, size=d - 1)]
        if abs(1 - sum(head)) <= m:
            out.append(EpsilonVector(tuple(head + [1 - sum(head)])))
    return out


class TestRTables(unittest.TestCase):
    """Test r-tables and their printed rows"""

    def test_known_counterexample_tables(self):
        """Test r(7) = (2, 4, 1) and r(19) = (9, 6, 4) in 1-indexed order"""
        self.assertEqual(r_table(PARAMS.fp, 3).one_indexed(), (2, 4, 1))
        self.assertEqual(r_table(PARAMS.fq, 3).one_indexed(), (9, 6, 4))
        self.assertEqual(r_table(PARAMS.fp, 3).values, (1, 2, 4))

    def test_rows_reproduce_tables(self):
        """Test norms and classes of alpha + x entry by entry"""
        rows7 = r_rows(PARAMS.fp, 3)
        self.assertEqual([r.signed_norm for r in rows7], TABLE_7_NORMS)
        self.assertEqual([r.one_indexed_class for r in rows7], TABLE_7_CLASSES)
        rows19 = r_rows(PARAMS.fq, 3)
        self.assertEqual([r.signed_norm for r in rows19], TABLE_19_NORMS)
        self.assertEqual([r.one_indexed_class for r in rows19], TABLE_19_CLASSES)

    def test_sum_is_p(self):
        """Test the classes partition the p points of the line"""
        for p, d in ((5, 3), (11, 5), (13, 3), (31, 5), (41, 5)):
            fld = make_field(p, *least_primitive_polynomial(p))
            self.assertEqual(sum(r_table(fld, d).values), p)

    def test_bad_d(self):
        """Test d must divide p^2 - 1"""
        with self.assertRaises(BadD):
            r_table(PARAMS.fp, 5)


class TestInequalities(unittest.TestCase):
    """Test the circulant inequality rows"""

    def test_known_counterexample_rows(self):
        """Test (0, 0, 7) on the 7-side and (2, 14, 3) on the 19-side"""
        self.assertEqual(inequality_system(PARAMS, EPS, 7), (0, 0, 7))
        self.assertEqual(inequality_system(PARAMS, EPS, 19), (2, 14, 3))

    def test_unit_vectors_shift_the_table(self):
        """Test a unit vector returns a cyclic shift of the r-table"""
        rt = r_table(PARAMS.fq, 3)
        for k in range(3):
            self.assertEqual(inequality_values(rt, EpsilonVector.unit(3, k)), rt.shifted(k))
        self.assertEqual(inequality_values(rt, EpsilonVector.unit(3, 0)), rt.values)

    def test_failing_rows(self):
        """Test the rows of (-1, 2, 0)"""
        bad = EpsilonVector((-1, 2, 0))
        self.assertEqual(inequality_system(PARAMS, bad, 7), (3, 6, -2))
        self.assertEqual(inequality_system(PARAMS, bad, 19), (8, -1, 12))

    def test_dimension_mismatch(self):
        """Test a vector of the wrong length"""
        with self.assertRaises(DimensionMismatch):
            inequality_values(r_table(PARAMS.fp, 3), EpsilonVector((1, 0)))


class TestMuTables(unittest.TestCase):
    """Test multiplicities and their independent recount"""

    def test_known_counterexample(self):
        """Test coset multiplicities (0, 0, 7) and (2, 14, 3)"""
        mu7 = mu_table(PARAMS, EPS, 7)
        self.assertEqual(mu7.cosets, (0, 0, 7))
        self.assertEqual((mu7.trivial, mu7.n_kernel, mu7.u_kernel), (1, 0, 1))
        self.assertEqual(mu_table(PARAMS, EPS, 19).cosets, (2, 14, 3))

    def test_offsets(self):
        """Test l(g) runs through 0, 1, 2 on both sides"""
        for prime in (7, 19):
            self.assertEqual([rep.offset for rep in coset_representatives(PARAMS, prime)], [0, 1, 2])

    def test_coset_count_recount(self):
        """Test mu from coset counts and stabilizers equals the offset formula"""
        for eps in [EPS, EpsilonVector((1, 0, 0)), EpsilonVector((-1, 2, 0))] + bounded_vectors(3, 3)[:10]:
            for prime in (7, 19):
                self.assertEqual(mu_by_coset_counts(PARAMS, eps, prime), mu_table(PARAMS, eps, prime))

    def test_multiset_matches_inequalities(self):
        """Test coset multiplicities are the inequality rows up to order"""
        for eps in bounded_vectors(3, 3):
            for prime in (7, 19):
                self.assertEqual(Counter(mu_table(PARAMS, eps, prime).cosets),
                                 Counter(inequality_system(PARAMS, eps, prime)))


class TestVerdict(unittest.TestCase):
    """Test the assembled verdict"""

    def test_known_counterexample_counterexample(self):
        """Test the (2, -1, 0) vector certifies a counterexample"""
        v = verdict(PARAMS, EPS)
        self.assertTrue(v.is_counterexample)
        self.assertEqual(v.reasons, [])
        self.assertTrue(v.eigenvalue)
        self.assertTrue(v.eichler)
        self.assertEqual(v.sides[7].inequalities, (0, 0, 7))
        self.assertEqual(v.sides[19].mu.cosets, (2, 14, 3))
        for prime in (7, 19):
            self.assertTrue(xi_is_proper(PARAMS, EPS, prime))

    def test_trivial_support(self):
        """Test a unit vector gives a unit that is not a counterexample"""
        v = verdict(PARAMS, EpsilonVector((1, 0, 0)))
        self.assertTrue(v.unit_exists)
        self.assertFalse(v.is_counterexample)
        self.assertEqual(v.reasons, [TRIVIAL_SUPPORT_REASON])

    def test_failing_rows_are_reported(self):
        """Test failing rows on both sides are named"""
        v = verdict(PARAMS, EpsilonVector((-1, 2, 0)))
        self.assertFalse(v.is_counterexample)
        self.assertIn("inequality row j=2 on the 7-side is -2", v.reasons)
        self.assertIn("inequality row j=1 on the 19-side is -1", v.reasons)

    def test_sum_not_one(self):
        """Test partial augmentations must sum to 1"""
        v = verdict(PARAMS, EpsilonVector((2, 0, 0)))
        self.assertFalse(v.unit_exists)
        self.assertIn("partial augmentations sum to 2, not 1", v.reasons)


class TestBounds(unittest.TestCase):
    """Test the threshold, delta bound and Gauss sums"""

    def test_threshold(self):
        """Test d^4 M^2 / (1 - |cos(2 pi / d)|)"""
        self.assertAlmostEqual(corollary_threshold(3, 1), 162.0, places=9)
        self.assertAlmostEqual(corollary_threshold(3, 2), 648.0, places=9)
        for d in (1, 2):
            with self.assertRaises(BadD):
                corollary_threshold(d, 1)

    def test_delta_bound(self):
        """Test |r_i - p/d| stays below sqrt(p / (1 - |cos(2 pi / d)|))"""
        rt = r_table(PARAMS.fq, 3)
        deltas = delta_values(rt)
        self.assertEqual(deltas, (Fraction(-7, 3), Fraction(8, 3), Fraction(-1, 3)))
        self.assertAlmostEqual(delta_bound(19, 3), 6.164414, places=5)
        for x in deltas:
            self.assertLessEqual(abs(float(x)), delta_bound(19, 3))

    def test_gauss_identity_exact(self):
        """Test |omega|^2 = p exactly for d = 3"""
        self.assertEqual(omega_norm_squared(r_table(PARAMS.fp, 3)), 7)
        self.assertEqual(omega_norm_squared(r_table(PARAMS.fq, 3)), 19)
        for p in (163,):
            check = gauss_sum_check(make_field(p, *least_primitive_polynomial(p)), 3)
            self.assertTrue(check.exact and check.applicable and check.passes)
            self.assertEqual(check.value, p)

    def test_gauss_identity_not_applicable(self):
        """Test 3 | 168 makes the character sum collapse at 167"""
        fld = make_field(167, *least_primitive_polynomial(167))
        self.assertEqual(sorted(r_table(fld, 3).values), [55, 56, 56])
        check = gauss_sum_check(fld, 3)
        self.assertFalse(check.applicable)
        self.assertEqual(check.value, 1)
        self.assertTrue(check.passes)
        omega = character_sum(fld, 3)
        self.assertAlmostEqual(omega.real, -1.0, places=6)
        self.assertAlmostEqual(omega.imag, 0.0, places=6)

    def test_gauss_identity_float(self):
        """Test the float path for d = 5"""
        fld = make_field(11, *least_primitive_polynomial(11))
        check = gauss_sum_check(fld, 5)
        self.assertFalse(check.exact)
        self.assertTrue(check.passes)
        self.assertAlmostEqual(abs(character_sum(fld, 5)) ** 2, 11.0, places=6)

    def test_degenerate_negative_control(self):
        """Test an evenly split fabricated table gives 0"""
        self.assertEqual(omega_norm_squared(RTable(9, 3, (3, 3, 3))), 0)


class TestSearch(unittest.TestCase):
    """Test the prime pair search"""

    def test_smallest_pair(self):
        """Test (163, 167) is the first pair for d = 3, M = 1"""
        result = search_prime_pairs(3, 1, 200, workers=2)
        first = result.pairs[0]
        self.assertEqual((first.p, first.q), (163, 167))
        self.assertFalse(first.guaranteed)
        self.assertEqual(first.to_line(), "163 167 3 1 0")
        self.assertEqual(len(result.pairs), 8)
        self.assertTrue(all(check.passes for check in result.gauss))

    def test_small_primes_are_below_threshold(self):
        """Test 7 and 19 are candidates without the guarantee"""
        result = search_prime_pairs(3, 1, 200, workers=1)
        status = {c.p: c for c in result.candidates}
        self.assertTrue(status[7].coprime and status[19].coprime)
        self.assertEqual(status[7].status, BELOW_THRESHOLD)
        self.assertEqual(status[19].status, BELOW_THRESHOLD)

    def test_below_threshold_is_empty(self):
        """Test pMax below the threshold gives no pairs"""
        self.assertEqual(search_prime_pairs(3, 1, 150).pairs, [])

    def test_guaranteed_pair_passes_effective_check(self):
        """Test (211, 223) is guaranteed and every bounded vector passes"""
        result = search_prime_pairs(3, 1, 230, effective=True)
        record = next(r for r in result.pairs if (r.p, r.q) == (211, 223))
        self.assertTrue(record.guaranteed)
        self.assertEqual(record.effective.mode, "exhaustive")
        self.assertEqual(record.effective.checked, 6)
        self.assertTrue(record.effective.passed)

    def test_sampled_effective_check(self):
        """Test a tiny box limit switches to sampling"""
        result = search_prime_pairs(3, 1, 200, effective=True, box_limit=1, sample_size=12)
        self.assertTrue(all(r.effective.mode == "sampled" and r.effective.checked == 12 for r in result.pairs))

    def test_sink_receives_records_in_order(self):
        """Test records reach the sink once each"""
        seen = []
        result = search_prime_pairs(3, 1, 200, workers=4, sink=seen.append)
        self.assertEqual(seen, result.pairs)

    def test_records_round_trip(self):
        """Test record lines parse back to the same flags"""
        for record in search_prime_pairs(3, 1, 200).pairs:
            back = parse_record(record.to_line())
            self.assertEqual((back.p, back.q, back.d, back.m, back.guaranteed), record.key + (record.guaranteed,))
        with self.assertRaises(ValueError):
            parse_record("1 2 3")

    def test_merge_by_key(self):
        """Test identical keys must carry identical payloads"""
        merged = {}
        record = PairRecord(163, 167, 3, 1, False)
        self.assertTrue(merge_records(merged, record))
        self.assertFalse(merge_records(merged, record))
        with self.assertRaises(MergeConflict):
            merge_records(merged, PairRecord(163, 167, 3, 1, True))

    def test_malformed_records(self):
        """Test lines that are not five integers with a 0/1 flag"""
        for line in ("a b c d e", "163 167 3 1", "163 167 3 1 2"):
            with self.assertRaises(BadRecord):
                parse_record(line)


class TestRecheck(unittest.TestCase):
    """Test recomputing written search records"""

    def test_guaranteed_pair_reproduces(self):
        """Test (211, 223) is recomputed as guaranteed and passes every bounded vector"""
        result = recheck_record(PairRecord(211, 223, 3, 1, True), effective=True)
        self.assertTrue(result.matches)
        self.assertEqual(result.recomputed.poly_p, least_primitive_polynomial(211))
        self.assertEqual(result.recomputed.effective.mode, "exhaustive")
        self.assertEqual(result.recomputed.effective.checked, 6)

    def test_wrong_flag_is_caught(self):
        """Test a flag claiming the guarantee for (163, 167) does not reproduce"""
        result = recheck_record(PairRecord(163, 167, 3, 1, True))
        self.assertFalse(result.matches)
        self.assertEqual(result.recomputed.to_line(), "163 167 3 1 0")
        self.assertIsNone(result.recomputed.effective)
        self.assertTrue(recheck_record(PairRecord(163, 167, 3, 1, False)).matches)

    def test_even_d(self):
        """Test even d is rejected before any field is built"""
        with self.assertRaises(BadD):
            recheck_record(PairRecord(163, 167, 4, 1, False))


if __name__ == '__main__':
    unittest.main()
