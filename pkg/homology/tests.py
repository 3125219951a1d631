import numpy as np
from django.test import SimpleTestCase

from core.exceptions import BadParameters
from complexes.generators import (
    cross_polytope, cycle_complex, nevo_complex, octahedron, prism_complex, random_complex, simplex,
    simplex_boundary,
)
from complexes.simplicial import from_facets, join, restriction
from .chains import (
    FieldSpec, betti_of_facets, boundary_matrix, boundary_ranks, homology_audit,
    reduced_betti, reduced_euler_characteristic,
)
from .linalg import gf2_rank, pack_rows, rank_mod_p, rank_over

GF2 = FieldSpec(2)
GF3 = FieldSpec(3)

# six-vertex real projective plane
RP2 = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
]


def corpus():
    return [
        cycle_complex(4), cycle_complex(5), simplex_boundary(2), simplex_boundary(3),
        simplex_boundary(4), simplex_boundary(5), octahedron(), prism_complex(3),
        from_facets(6, RP2), nevo_complex(3, 2)[0],
    ]


class LinalgTests(SimpleTestCase):

    def test_gf2_rank(self):
        self.assertEqual(gf2_rank([0b011, 0b110, 0b101]), 2)
        self.assertEqual(gf2_rank([]), 0)
        self.assertEqual(gf2_rank([0, 0b1]), 1)

    def test_pack_rows(self):
        self.assertEqual(pack_rows(np.array([[1, 0, 1], [0, 0, 0]])), [0b10100000, 0])

    def test_rank_mod_p(self):
        self.assertEqual(rank_mod_p([[1, 2], [2, 4]], 3), 1)
        self.assertEqual(rank_mod_p([[1, 1], [1, 2]], 3), 2)
        self.assertEqual(rank_mod_p(np.zeros((0, 3)), 5), 0)

    def test_rank_depends_on_characteristic(self):
        matrix = [[1, 1], [1, 3]]
        self.assertEqual(rank_over(matrix, 2), 1)
        self.assertEqual(rank_over(matrix, 3), 2)


class FieldSpecTests(SimpleTestCase):

    def test_parse_list(self):
        self.assertEqual(FieldSpec.parse_list("2, 3,5"), [GF2, GF3, FieldSpec(5)])
        self.assertEqual(str(GF3), "GF(3)")

    def test_composite_rejected(self):
        with self.assertRaises(BadParameters):
            FieldSpec(4)
        with self.assertRaises(BadParameters):
            FieldSpec.parse_list("2,x")


class BoundaryMatrixTests(SimpleTestCase):

    def test_augmentation(self):
        matrix = boundary_matrix(cycle_complex(4), 0)
        self.assertEqual(matrix.shape, (1, 4))
        self.assertTrue(np.all(matrix == 1))

    def test_signs_over_gf3(self):
        matrix = boundary_matrix(simplex(2), 2, GF3)
        # rows {2,3}, {1,3}, {1,2} in mask order {1,2}, {1,3}, {2,3}
        self.assertEqual(matrix[:, 0].tolist(), [1, 2, 1])

    def test_boundary_squares_to_zero(self):
        for complex_ in corpus():
            for field in (GF2, GF3, FieldSpec(5)):
                for degree in range(0, complex_.dim + 1):
                    product = boundary_matrix(complex_, degree, field) @ boundary_matrix(complex_, degree + 1, field)
                    self.assertFalse(np.any(product % field.p), (str(complex_), degree, field))

    def test_degree_out_of_range(self):
        with self.assertRaises(BadParameters):
            boundary_matrix(cycle_complex(4), 3)

    def test_bitset_ranks_match_dense_ranks(self):
        for complex_ in corpus():
            ranks = boundary_ranks(complex_, GF2)
            for degree, rank in ranks.items():
                self.assertEqual(rank, rank_over(boundary_matrix(complex_, degree, GF2), 2))


class ReducedBettiTests(SimpleTestCase):

    def test_void_complex(self):
        betti = reduced_betti(restriction(octahedron(), 0))
        self.assertEqual(betti.values, (1,))
        self.assertEqual(betti[-1], 1)
        self.assertEqual(betti.top_degree, -1)

    def test_simplex_is_acyclic(self):
        self.assertEqual(reduced_betti(simplex(3)).nonzero_degrees(), [])
        self.assertIsNone(reduced_betti(simplex(3)).top_degree)

    def test_spheres(self):
        self.assertEqual(reduced_betti(simplex_boundary(1)).nonzero_degrees(), [0])
        self.assertEqual(reduced_betti(simplex_boundary(2))[1], 1)
        self.assertEqual(reduced_betti(simplex_boundary(3))[2], 1)
        self.assertEqual(reduced_betti(cycle_complex(4))[1], 1)
        for field in (GF2, GF3):
            betti = reduced_betti(octahedron(), field)
            self.assertEqual(betti.nonzero_degrees(), [2])
            self.assertEqual(betti[2], 1)

    def test_cross_polytope_sphere(self):
        self.assertEqual(reduced_betti(cross_polytope(4)).nonzero_degrees(), [3])

    def test_projective_plane_depends_on_field(self):
        rp2 = from_facets(6, RP2)
        over_two = reduced_betti(rp2, GF2)
        self.assertEqual((over_two[1], over_two[2]), (1, 1))
        self.assertEqual(reduced_betti(rp2, GF3).nonzero_degrees(), [])

    def test_torsion_free_complexes_agree_across_fields(self):
        # at most five vertices, or one-dimensional, leaves no room for torsion
        complexes = [c for c in corpus() if c.facets != from_facets(6, RP2).facets]
        complexes += [random_complex(5, 3, 0.2 + (seed % 6) / 10, seed) for seed in range(20)]
        complexes += [random_complex(8, 1, 0.4, seed) for seed in range(10)]
        for complex_ in complexes:
            self.assertEqual(
                reduced_betti(complex_, GF2).values, reduced_betti(complex_, GF3).values, str(complex_),
            )

    def test_worker_entry_point(self):
        complex_ = octahedron()
        self.assertEqual(betti_of_facets(complex_.facets, 3), reduced_betti(complex_, GF3).values)

    def test_join_kunneth(self):
        pieces = [simplex_boundary(1), cycle_complex(4), simplex_boundary(2), from_facets(6, RP2)]
        for left in pieces:
            for right in pieces[:3]:
                for field in (GF2, GF3):
                    a, b = reduced_betti(left, field), reduced_betti(right, field)
                    expected = {}
                    for i in a.nonzero_degrees():
                        for j in b.nonzero_degrees():
                            expected[i + j + 1] = expected.get(i + j + 1, 0) + a[i] * b[j]
                    joined = reduced_betti(join(left, right), field)
                    actual = {d: joined[d] for d in joined.nonzero_degrees()}
                    self.assertEqual(actual, expected, (str(left), str(right), field))


class AuditTests(SimpleTestCase):

    def test_euler_characteristic(self):
        self.assertEqual(reduced_euler_characteristic(octahedron()), 1)
        self.assertEqual(reduced_euler_characteristic(cycle_complex(5)), -1)

    def test_corpus_passes_audit(self):
        complexes = corpus() + [random_complex(7, 2, 0.5, seed) for seed in range(5)]
        for complex_ in complexes:
            for field in (GF2, GF3):
                audit = homology_audit(complex_, field)
                self.assertTrue(audit.passed, (str(complex_), field))
                self.assertEqual(audit.f_vector, complex_.f_vector())
