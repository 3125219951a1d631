from decimal import Decimal
from fractions import Fraction
from unittest import mock

from django.core.cache import caches
from django.test import SimpleTestCase, override_settings

from core.exceptions import BadParameters, CapExceeded, DegenerateS, DomainError, HypothesisUnmet
from core.utils.precision import guarded_ceil, guarded_floor
from core.utils.subsets import map_chunks, mask_of, popcount
from complexes.generators import (
    cross_polytope, cycle_complex, nevo_complex, octahedron, prism_complex, random_complex, simplex,
    simplex_boundary,
)
from complexes.simplicial import generator_degree
from homology.chains import FieldSpec
from .bounds import dhs_bound, dhs_parameter, restriction_dhs_parameter, taylor_bound
from .hochster import (
    GradedBettiTable, _lattice_key, clear_lattice_store, hochster_table, hochster_table_direct,
    homology_lattice, regularity, taylor_support_check,
)
from .suitability import check_suitable

GF2 = FieldSpec(2)
GF3 = FieldSpec(3)


def corpus():
    return [
        cycle_complex(4), cycle_complex(5), simplex_boundary(2), simplex_boundary(3),
        simplex_boundary(4), simplex_boundary(5), octahedron(), prism_complex(3),
    ]


class HochsterTableTests(SimpleTestCase):

    def setUp(self):
        clear_lattice_store()

    def test_square_table(self):
        table = hochster_table(cycle_complex(4))
        self.assertEqual(table.nonzero(), [((0, 0), 1), ((1, 2), 2), ((2, 4), 1)])
        self.assertEqual(table.as_array().tolist(), [[1, 0, 0], [0, 2, 0], [0, 0, 1]])
        self.assertEqual(table.projective_dimension, 2)
        self.assertIn("total:", table.to_text())

    def test_table_dict(self):
        data = hochster_table(simplex_boundary(2)).to_dict()
        self.assertEqual(data["n"], 3)
        self.assertEqual(data["entries"], [{"i": 0, "j": 0, "beta": 1}, {"i": 1, "j": 3, "beta": 1}])

    def test_matches_independent_path(self):
        complexes = corpus() + [random_complex(n, 2, 0.45, seed) for seed in range(25) for n in (6, 7)]
        for complex_ in complexes:
            for field in (GF2, GF3):
                self.assertEqual(
                    hochster_table(complex_, field).entries,
                    hochster_table_direct(complex_, field).entries,
                    (str(complex_), field),
                )

    def test_parallel_blocks_match_serial(self):
        complex_ = prism_complex(3)
        serial = homology_lattice(complex_, GF2, jobs=1, chunk_bits=3)
        clear_lattice_store()
        parallel = homology_lattice(complex_, GF2, jobs=2, chunk_bits=3)
        self.assertEqual(serial.betti, parallel.betti)

    def test_store_serves_repeat_requests(self):
        first = homology_lattice(octahedron(), GF2)
        with mock.patch("regularity.hochster.map_chunks") as mapped:
            again = homology_lattice(octahedron(), GF2)
        mapped.assert_not_called()
        self.assertEqual(again.betti, first.betti)
        self.assertEqual(again.regularity_of(again.complex.universe), 3)
        self.assertIsNotNone(caches["lattices"].get(_lattice_key(octahedron(), GF2)))
        self.assertIsNone(caches["lattices"].get(_lattice_key(octahedron(), GF3)))

    def test_cleared_store_recomputes(self):
        homology_lattice(cycle_complex(5), GF2)
        clear_lattice_store()
        with mock.patch("regularity.hochster.map_chunks", wraps=map_chunks) as mapped:
            homology_lattice(cycle_complex(5), GF2)
        mapped.assert_called_once()

    @override_settings(TOOLKIT_ENUMERATION_CAP=6)
    def test_cap(self):
        with self.assertRaises(CapExceeded):
            hochster_table(cross_polytope(4))
        self.assertTrue(hochster_table(cross_polytope(4), force=True).entries)


class RegularityTests(SimpleTestCase):

    def test_known_values(self):
        self.assertEqual(regularity(cycle_complex(4)).reg, 2)
        self.assertEqual(regularity(cycle_complex(5)).reg, 2)
        self.assertEqual(regularity(octahedron()).reg, 3)
        for d in range(1, 6):
            self.assertEqual(regularity(simplex_boundary(d)).reg, d)

    def test_simplex_has_regularity_zero(self):
        self.assertEqual(regularity(simplex(3)).reg, 0)

    def test_witness(self):
        result = regularity(octahedron())
        self.assertEqual(result.witness_vertices, (1, 2, 3, 4, 5, 6))
        self.assertEqual(result.witness_degree, 2)
        self.assertTrue(result.validate(octahedron()))

    def test_both_formulas_agree_on_corpus(self):
        for complex_ in corpus() + [random_complex(7, 2, 0.4, seed) for seed in range(10)]:
            result = regularity(complex_, GF3)
            self.assertEqual(result.reg, hochster_table(complex_, GF3).regularity)
            self.assertTrue(result.validate(complex_))

    def test_restricted_regularities(self):
        lattice = homology_lattice(octahedron(), GF2)
        self.assertEqual(lattice.regularity_of(mask_of([1, 2])), 1)
        self.assertEqual(lattice.regularity_of(mask_of([1, 2, 3, 4])), 2)
        self.assertEqual(lattice.regularity_of(mask_of([1, 3, 5])), 0)
        self.assertEqual(lattice.regularity_of(0), 0)

    def test_taylor_support(self):
        for complex_ in corpus():
            s = generator_degree(complex_)
            self.assertTrue(taylor_support_check(hochster_table(complex_), s), str(complex_))

    def test_taylor_support_on_random_complexes(self):
        # faces stop at size 3 on 7 vertices, so none of these is a full simplex
        for seed in range(20):
            complex_ = random_complex(7, 2, 0.3 + (seed % 5) / 10, seed)
            for field in (GF2, GF3):
                table = hochster_table(complex_, field)
                self.assertTrue(taylor_support_check(table, generator_degree(complex_)), (str(complex_), field))

    def test_taylor_support_violation(self):
        table = GradedBettiTable(n=3, field=GF2, entries={(0, 0): 1, (1, 5): 1})
        result = taylor_support_check(table, 2)
        self.assertFalse(result)
        self.assertEqual(result.violations, ((1, 5, 1),))


class BoundTests(SimpleTestCase):

    def test_taylor_bound(self):
        self.assertEqual(taylor_bound(4, 2), 2)
        self.assertEqual(taylor_bound(5, 3), Fraction(10, 3))
        with self.assertRaises(DegenerateS):
            taylor_bound(5, 1)

    def test_regularity_within_taylor_bound(self):
        for complex_ in corpus():
            bound = taylor_bound(complex_.vertex_count, generator_degree(complex_))
            self.assertLessEqual(regularity(complex_).reg, guarded_floor(bound))

    def test_dhs_bound_value(self):
        bound = dhs_bound(9, 2)
        self.assertAlmostEqual(float(bound.value), 2.8928, places=3)
        self.assertEqual(bound.branch, 1)

    def test_first_branch_is_smaller_for_k_at_least_two(self):
        for k in range(2, 7):
            for n in range(k + 2, 40):
                self.assertEqual(dhs_bound(n, k).branch, 1, (n, k))

    def test_dhs_domain(self):
        with self.assertRaises(DomainError):
            dhs_bound(1, 2)
        with self.assertRaises(BadParameters):
            dhs_bound(5, 0)

    def test_dhs_parameter(self):
        self.assertEqual(dhs_parameter(cycle_complex(5)), 1)
        self.assertEqual(dhs_bound(5, 1).branch, 1)
        self.assertGreaterEqual(dhs_bound(5, 1).value, Decimal(2))
        with self.assertRaises(HypothesisUnmet):
            dhs_parameter(octahedron())
        with self.assertRaises(HypothesisUnmet):
            dhs_parameter(simplex_boundary(2))
        with self.assertRaises(HypothesisUnmet):
            dhs_parameter(cycle_complex(5), k=2)

    def test_restriction_parameter(self):
        self.assertEqual(restriction_dhs_parameter(3, 2), 1)
        self.assertEqual(restriction_dhs_parameter(3, 5), 2)
        self.assertEqual(restriction_dhs_parameter(3, 9), 3)

    def test_guarded_rounding(self):
        self.assertEqual(guarded_floor(Decimal("2.9999999999999999999")), 3)
        self.assertEqual(guarded_ceil(Decimal("3.0000000000000000001")), 3)
        self.assertEqual(guarded_ceil(Decimal("3.01")), 4)
        self.assertEqual(guarded_floor(Fraction(7, 2)), 3)


class SuitabilityTests(SimpleTestCase):

    def test_taylor_suitable_on_corpus(self):
        complexes = corpus() + [nevo_complex(3, 2)[0], nevo_complex(3, 3)[0]]
        complexes += [random_complex(7, 2, 0.5, seed) for seed in range(8)]
        for complex_ in complexes:
            result = check_suitable(complex_, "taylor")
            self.assertTrue(result, str(complex_))
            self.assertFalse(result.violations)

    def test_taylor_tight_on_simplex_boundaries(self):
        for s in (3, 4, 5):
            complex_ = simplex_boundary(s - 1)
            result = check_suitable(complex_, "taylor")
            self.assertEqual(result.worst.slack, 0)
            self.assertEqual(result.worst.subset, complex_.universe)

    def test_simplex_restrictions_are_skipped(self):
        result = check_suitable(simplex_boundary(3), "taylor")
        # every proper subset of ∂σ³ spans a simplex
        self.assertEqual(result.checked, 1)
        self.assertEqual(result.skipped, 14)

    def test_dhs_suitable(self):
        result = check_suitable(cycle_complex(5), "dhs")
        self.assertTrue(result)
        # two nonadjacent vertices: reg 1 against log_{5/2}(1/2) + 2
        self.assertEqual(popcount(result.worst.subset), 2)
        self.assertEqual(result.worst.reg, 1)
        self.assertEqual(result.skipped, 5)
        with self.assertRaises(HypothesisUnmet):
            check_suitable(octahedron(), "dhs")

    def test_unknown_bound(self):
        with self.assertRaises(BadParameters):
            check_suitable(octahedron(), "castelnuovo")
