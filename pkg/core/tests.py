from decimal import Decimal
from fractions import Fraction

from django.test import SimpleTestCase, override_settings

from .conf import toolkit_setting
from .exceptions import CapExceeded, GhostVertex
from .utils.precision import decimal_log, epsilon, guarded_ceil, guarded_floor
from .utils.subsets import (
    check_cap, chunk_ranges, full_mask, iter_bits, map_chunks, mask_of, popcount, submasks,
    subsets_of_size, vertices_of,
)


def _sum_block(payload, start, stop):
    return sum(payload * i for i in range(start, stop))


class SubsetTests(SimpleTestCase):

    def test_masks_and_vertices(self):
        self.assertEqual(mask_of([1, 3]), 0b101)
        self.assertEqual(vertices_of(0b10110), (2, 3, 5))
        self.assertEqual(list(iter_bits(0b1001)), [0, 3])
        self.assertEqual(full_mask(4), 0b1111)
        self.assertEqual(popcount(0b1011), 3)
        with self.assertRaises(ValueError):
            mask_of([0])

    def test_submasks_ascending(self):
        self.assertEqual(list(submasks(0b101)), [0, 0b001, 0b100, 0b101])
        self.assertEqual(len(list(submasks(full_mask(5)))), 32)

    def test_subsets_of_size(self):
        self.assertEqual(list(subsets_of_size(3, 2)), [0b011, 0b101, 0b110])
        self.assertEqual(list(subsets_of_size(3, 0)), [0])

    def test_chunk_ranges(self):
        self.assertEqual(chunk_ranges(10, chunk_bits=2), [(0, 4), (4, 8), (8, 10)])
        self.assertEqual(chunk_ranges(0, chunk_bits=2), [])

    def test_map_chunks_keeps_block_order(self):
        serial = map_chunks(_sum_block, 100, 3, jobs=1, chunk_bits=4)
        parallel = map_chunks(_sum_block, 100, 3, jobs=2, chunk_bits=4)
        self.assertEqual(serial, parallel)
        self.assertEqual(sum(serial), 3 * sum(range(100)))


class CapTests(SimpleTestCase):

    def test_soft_cap(self):
        check_cap(10, cap=10)
        with self.assertRaises(CapExceeded) as caught:
            check_cap(11, cap=10)
        self.assertEqual((caught.exception.n, caught.exception.cap), (11, 10))
        check_cap(11, cap=10, force=True)

    def test_hard_cap_survives_force(self):
        with self.assertRaises(CapExceeded):
            check_cap(27, cap=30, force=True)

    @override_settings(TOOLKIT_ENUMERATION_CAP=4)
    def test_cap_from_settings(self):
        self.assertEqual(toolkit_setting('TOOLKIT_ENUMERATION_CAP'), 4)
        self.assertEqual(toolkit_setting('TOOLKIT_ENUMERATION_CAP', 9), 9)
        with self.assertRaises(CapExceeded):
            check_cap(5)


class PrecisionTests(SimpleTestCase):

    def test_epsilon(self):
        self.assertEqual(epsilon(3), Decimal("0.125"))

    def test_log(self):
        self.assertAlmostEqual(float(decimal_log(8, 2)), 3.0, places=12)
        self.assertAlmostEqual(float(decimal_log(Fraction(1, 2), Fraction(5, 2))), -0.756471, places=5)

    def test_guarded_rounding_near_integers(self):
        three = decimal_log(8, 2)
        self.assertEqual(guarded_floor(three), 3)
        self.assertEqual(guarded_ceil(three), 3)
        self.assertEqual(guarded_floor(Decimal("2.5")), 2)
        self.assertEqual(guarded_ceil(Fraction(5, 2)), 3)


class ExceptionTests(SimpleTestCase):

    def test_ghost_vertex_message(self):
        error = GhostVertex({4, 2})
        self.assertEqual(error.vertices, (2, 4))
        self.assertIn("2, 4", str(error))
