import tempfile
from itertools import combinations
from pathlib import Path

import networkx as nx
from django.test import SimpleTestCase, override_settings

from core.exceptions import BadParameters, EmptyInput, FullSimplex, GhostVertex, ParseError
from core.utils.subsets import mask_of, popcount, submasks
from .facet_io import format_facets, parse_facets, read_facet_file
from .generators import (
    NevoParameters, cross_polytope, cycle_complex, nevo_complex, octahedron, prism_complex,
    random_complex, simplex, simplex_boundary,
)
from .graphs import (
    graph_from_edges, induced_cycle_free_up_to, largest_induced_cycle_free_parameter, one_skeleton,
)
from .simplicial import (
    clique_complex, drop_ghosts, from_facets, generator_degree, join, minimal_nonfaces, predicates,
    restriction, stanley_reisner_generators,
)


class FromFacetsTests(SimpleTestCase):

    def test_duplicates_and_subfaces_dropped(self):
        complex_ = from_facets(3, [{1, 2}, {2, 3}, {1, 2}])
        self.assertEqual(complex_.facet_sets(), [(1, 2), (2, 3)])

    def test_contained_face_removed(self):
        complex_ = from_facets(4, [{1, 2, 3}, {1, 2}, {4}])
        self.assertEqual(complex_.facet_sets(), [(1, 2, 3), (4,)])

    def test_ghost_vertex_rejected(self):
        with self.assertRaises(GhostVertex) as ctx:
            from_facets(4, [{1, 2, 3}])
        self.assertEqual(ctx.exception.vertices, (4,))

    def test_ghost_vertex_recorded_when_lenient(self):
        complex_ = from_facets(5, [{1, 3}, {3, 5}], strict=False)
        self.assertEqual(complex_.ghosts, (2, 4))
        renumbered = drop_ghosts(complex_)
        self.assertEqual(renumbered.n, 3)
        self.assertEqual(renumbered.facet_sets(), [(1, 2), (2, 3)])

    def test_empty_input(self):
        with self.assertRaises(EmptyInput):
            from_facets(3, [])

    def test_label_outside_range(self):
        with self.assertRaises(BadParameters):
            from_facets(2, [{1, 3}])


class RestrictionAndJoinTests(SimpleTestCase):

    def test_restriction_of_triangle_boundary(self):
        restricted = restriction(simplex_boundary(2), mask_of([1, 2]))
        self.assertEqual(restricted.facet_sets(), [(1, 2)])
        self.assertEqual(restricted.universe, mask_of([1, 2]))

    def test_restriction_to_everything_is_identity(self):
        complex_ = octahedron()
        self.assertEqual(restriction(complex_, complex_.universe), complex_)

    def test_restriction_to_empty_set_is_void(self):
        restricted = restriction(octahedron(), 0)
        self.assertTrue(restricted.is_void)
        self.assertEqual(restricted.dim, -1)
        self.assertEqual(restricted.f_vector(), (1,))

    def test_octahedron_equator_is_a_four_cycle(self):
        equator = restriction(octahedron(), mask_of([1, 2, 3, 4]))
        self.assertEqual(equator.facet_sets(), [(1, 3), (1, 4), (2, 3), (2, 4)])
        brute = {
            face for face in octahedron().faces()
            if face & mask_of([1, 2, 3, 4]) == face
        }
        self.assertEqual(equator.faces(), brute)

    def test_restrictions_compose(self):
        for complex_ in (octahedron(), cycle_complex(5), prism_complex(3), random_complex(6, 2, 0.5, 3)):
            for outer in submasks(complex_.universe):
                restricted = restriction(complex_, outer)
                for inner in submasks(outer):
                    self.assertEqual(restriction(restricted, inner), restriction(complex_, inner))

    def test_join_of_two_zero_spheres(self):
        square = join(simplex_boundary(1), simplex_boundary(1))
        self.assertEqual(square.n, 4)
        self.assertEqual(square.facet_sets(), [(1, 3), (1, 4), (2, 3), (2, 4)])

    def test_join_dimension_adds(self):
        joined = join(cycle_complex(5), simplex_boundary(3))
        self.assertEqual(joined.dim, 1 + 2 + 1)
        self.assertEqual(joined.vertex_count, 9)


class NonfaceAndPredicateTests(SimpleTestCase):

    def test_octahedron_nonfaces_are_antipodal_pairs(self):
        self.assertEqual(minimal_nonfaces(octahedron()), [mask_of([1, 2]), mask_of([3, 4]), mask_of([5, 6])])

    def test_simplex_boundary_has_one_nonface(self):
        for d in range(1, 6):
            self.assertEqual(minimal_nonfaces(simplex_boundary(d)), [mask_of(range(1, d + 2))])
            self.assertEqual(generator_degree(simplex_boundary(d)), d + 1)

    def test_full_simplex_raises(self):
        with self.assertRaises(FullSimplex):
            minimal_nonfaces(simplex(3))

    def test_restrictions_keep_nonfaces_of_the_whole(self):
        complexes = [cycle_complex(5), octahedron(), prism_complex(3), nevo_complex(3, 2)[0]]
        complexes += [random_complex(7, 2, 0.45, seed) for seed in range(6)]
        for complex_ in complexes:
            nonfaces = set(minimal_nonfaces(complex_))
            s = generator_degree(complex_)
            for subset in submasks(complex_.universe):
                try:
                    restricted = minimal_nonfaces(restriction(complex_, subset))
                except FullSimplex:
                    continue
                self.assertTrue(set(restricted) <= nonfaces, (str(complex_), subset))
                self.assertLessEqual(max(popcount(m) for m in restricted), s)
                self.assertGreaterEqual(min(popcount(m) for m in restricted), 2)

    def test_generators_as_monomials(self):
        self.assertEqual(stanley_reisner_generators(cycle_complex(4)), ["x1*x3", "x2*x4"])

    def test_octahedron_is_a_flag_pseudomanifold(self):
        info = predicates(octahedron())
        self.assertTrue(info.is_pure)
        self.assertTrue(info.is_flag)
        self.assertTrue(info.is_strongly_connected)
        self.assertTrue(info.is_pseudomanifold)
        self.assertEqual(info.ridge_degree_values, [2])

    def test_triangle_boundary_is_not_flag(self):
        self.assertFalse(predicates(simplex_boundary(2)).is_flag)

    def test_cube_prism_structure(self):
        info = predicates(prism_complex(3))
        self.assertTrue(info.is_pure)
        self.assertFalse(info.is_strongly_connected)
        self.assertEqual(info.ridge_degree_values, [1])
        self.assertFalse(info.is_pseudomanifold)

    def test_higher_prism_is_not_pure(self):
        info = predicates(prism_complex(4))
        self.assertFalse(info.is_pure)
        self.assertIsNone(info.ridge_degrees)
        self.assertTrue(info.notes)

    def test_clique_complex_matches_flagness(self):
        for complex_ in (octahedron(), cycle_complex(5), cross_polytope(4)):
            rebuilt = clique_complex(one_skeleton(complex_), complex_.n)
            self.assertEqual(rebuilt.facets, complex_.facets)
        self.assertNotEqual(clique_complex(one_skeleton(simplex_boundary(2)), 3).facets, simplex_boundary(2).facets)

    def test_flagness_against_clique_complex_on_random_complexes(self):
        for seed in range(40):
            complex_ = random_complex(6 + seed % 4, 3, 0.3 + (seed % 5) / 10, seed)
            rebuilt = clique_complex(one_skeleton(complex_), complex_.n)
            self.assertEqual(predicates(complex_).is_flag, rebuilt.facets == complex_.facets, seed)

        for seed in range(20):
            graph = nx.convert_node_labels_to_integers(nx.gnp_random_graph(8, 0.5, seed=seed), first_label=1)
            flag = clique_complex(graph, 8)
            self.assertTrue(predicates(flag).is_flag, seed)
            self.assertEqual(clique_complex(one_skeleton(flag), 8).facets, flag.facets)


class GraphTests(SimpleTestCase):

    def test_one_skeleton_keeps_isolated_vertices(self):
        graph = one_skeleton(simplex_boundary(1))
        self.assertEqual(sorted(graph.nodes), [1, 2])
        self.assertEqual(graph.number_of_edges(), 0)

    def test_octahedron_skeleton(self):
        graph = one_skeleton(octahedron())
        self.assertEqual(graph.number_of_nodes(), 6)
        self.assertEqual(graph.number_of_edges(), 12)

    def test_loops_rejected(self):
        with self.assertRaises(BadParameters):
            graph_from_edges(3, [(1, 1)])

    def test_five_cycle_has_one_induced_cycle(self):
        graph = one_skeleton(cycle_complex(5))
        self.assertTrue(induced_cycle_free_up_to(graph, 4))
        search = induced_cycle_free_up_to(graph, 5)
        self.assertFalse(search)
        self.assertEqual(len(search.witness), 5)
        self.assertEqual(largest_induced_cycle_free_parameter(graph, 2), 1)

    def test_octahedron_has_induced_four_cycles(self):
        search = induced_cycle_free_up_to(one_skeleton(octahedron()), 4)
        self.assertFalse(search)
        self.assertEqual(len(search.witness), 4)

    def test_induced_cycles_against_subset_oracle(self):
        def has_induced_cycle(graph, max_length):
            for m in range(4, max_length + 1):
                for nodes in combinations(graph.nodes, m):
                    sub = graph.subgraph(nodes)
                    if nx.is_connected(sub) and all(d == 2 for _, d in sub.degree):
                        return True
            return False

        octahedral = nx.complete_graph(range(1, 7))
        octahedral.remove_edges_from([(1, 2), (3, 4), (5, 6)])
        graphs = [octahedral, nx.petersen_graph(), nx.cycle_graph(7)]
        graphs += [nx.gnp_random_graph(8, 0.25 + (seed % 4) / 10, seed=seed) for seed in range(30)]
        for index, graph in enumerate(graphs):
            for max_length in (4, 5, 6, 8):
                search = induced_cycle_free_up_to(graph, max_length)
                self.assertEqual(bool(search), not has_induced_cycle(graph, max_length), (index, max_length))
                if not search:
                    cycle = graph.subgraph(search.witness)
                    self.assertLessEqual(len(search.witness), max_length)
                    self.assertTrue(all(d == 2 for _, d in cycle.degree))
                    self.assertTrue(nx.is_connected(cycle))

    def test_chordal_graphs_are_free(self):
        self.assertTrue(induced_cycle_free_up_to(nx.complete_graph(range(1, 6)), 5))

    def test_bound_below_four_rejected(self):
        with self.assertRaises(BadParameters):
            induced_cycle_free_up_to(nx.cycle_graph(4), 3)


class GeneratorTests(SimpleTestCase):

    def test_simplex_boundaries(self):
        self.assertEqual(simplex_boundary(1).facet_sets(), [(1,), (2,)])
        self.assertEqual(len(simplex_boundary(3).facets), 4)
        self.assertEqual(one_skeleton(simplex_boundary(3)).number_of_edges(), 6)

    def test_cycle_three_is_triangle_boundary(self):
        self.assertEqual(cycle_complex(3), simplex_boundary(2))

    def test_cross_polytopes(self):
        self.assertEqual(cross_polytope(3), octahedron())
        self.assertEqual(cross_polytope(2).f_vector(), (1, 4, 4))
        self.assertEqual(cross_polytope(4).vertex_count, 8)

    def test_nevo_parameters(self):
        params = NevoParameters.compute(3, 2)
        self.assertEqual((params.q_prime, params.r_prime, params.q, params.r), (3, 0, 1, 0))
        params = NevoParameters.compute(3, 3)
        self.assertEqual((params.q_prime, params.r_prime, params.q, params.r), (4, 1, 1, 2))

    def test_nevo_two_two_is_the_octahedron(self):
        complex_, params = nevo_complex(2, 2)
        self.assertEqual(complex_, octahedron())
        self.assertEqual(params.vertex_count, 6)

    def test_nevo_remainder_is_never_one(self):
        for s in range(2, 9):
            for h in range(s - 1, 11):
                params = NevoParameters.compute(s, h)
                self.assertNotEqual(params.r, 1, (s, h))
                self.assertEqual(params.r_prime == 0, params.r == 0)

    def test_nevo_vertex_count_and_dimension(self):
        for s in range(2, 7):
            for h in range(s - 1, 9):
                complex_, params = nevo_complex(s, h)
                self.assertEqual(complex_.vertex_count, -(-s * h // (s - 1)) + 2, (s, h))
                self.assertEqual(complex_.dim, h, (s, h))
                self.assertLessEqual(generator_degree(complex_), s)

    def test_nevo_outside_range(self):
        with self.assertRaises(BadParameters):
            nevo_complex(3, 1)
        with self.assertRaises(BadParameters):
            nevo_complex(1, 3)

    def test_prism_sizes(self):
        cube = prism_complex(3)
        self.assertEqual(cube.vertex_count, 8)
        self.assertEqual([len(f) for f in cube.facet_sets()], [4] * 6)
        self.assertEqual(sorted(len(f) for f in prism_complex(4).facet_sets()), [4, 4, 4, 4, 4, 5, 5])

    def test_small_prism_logs_dimension(self):
        with self.assertLogs("complexes.generators", level="WARNING"):
            complex_ = prism_complex(2)
        self.assertEqual(complex_.dim, 3)
        self.assertEqual(sorted(len(f) for f in complex_.facet_sets()), [3, 3, 4, 4, 4])

    def test_prism_needs_d_two(self):
        with self.assertRaises(BadParameters):
            prism_complex(1)

    def test_random_complex_extremes(self):
        full = random_complex(5, 1, 1.0, seed=7)
        self.assertEqual(len(full.facets), 10)
        self.assertEqual(full.dim, 1)
        points = random_complex(6, 2, 0.0, seed=7)
        self.assertEqual(points.facet_sets(), [(v,) for v in range(1, 7)])

    def test_random_complex_is_seeded(self):
        self.assertEqual(random_complex(8, 2, 0.4, 42), random_complex(8, 2, 0.4, 42))
        self.assertNotEqual(random_complex(8, 2, 0.4, 42), random_complex(8, 2, 0.4, 43))

    def test_random_complex_fingerprint(self):
        # default_rng(42) starts 0.7740, 0.4389, 0.8586: only the pair {1, 3} survives
        complex_ = random_complex(3, 1, 0.5, 42)
        self.assertEqual(complex_.facet_sets(), [(1, 3), (2,)])
        self.assertEqual(complex_.provenance, "random:3,1,0.5,42")

    def test_random_complex_without_vertices_leaves_ghosts(self):
        complex_ = random_complex(3, 1, 0.5, 42, include_vertices=False)
        self.assertEqual(complex_.facet_sets(), [(1, 3)])
        self.assertEqual(complex_.ghosts, (2,))
        self.assertEqual(drop_ghosts(complex_).facet_sets(), [(1, 2)])
        with self.assertRaises(EmptyInput):
            random_complex(4, 1, 0.0, 1, include_vertices=False)

    @override_settings(TOOLKIT_RANDOM_CAP=6)
    def test_random_complex_cap(self):
        with self.assertRaises(BadParameters):
            random_complex(7, 1, 0.5, 0)


class FacetFileTests(SimpleTestCase):

    def test_parse_with_header_and_comments(self):
        complex_ = parse_facets("# square\nn 4\n1 2\n2 3  # edge\n3 4\n1 4\n")
        self.assertEqual(complex_.n, 4)
        self.assertEqual(complex_.facet_sets(), [(1, 2), (1, 4), (2, 3), (3, 4)])

    def test_parse_without_header(self):
        self.assertEqual(parse_facets("1 2 3\n").n, 3)

    def test_malformed_input(self):
        with self.assertRaises(ParseError):
            parse_facets("1 x\n")
        with self.assertRaises(ParseError):
            parse_facets("n 2\n1 3\n")
        with self.assertRaises(ParseError):
            parse_facets("# nothing\n")

    def test_undecodable_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "bad.facets"
            path.write_bytes(b"1 2\n2 3\xff\xfe\n")
            with self.assertRaises(ParseError):
                read_facet_file(path)
            with self.assertRaises(ParseError):
                read_facet_file(Path(tmp))

    def test_written_file_reads_back(self):
        cube = prism_complex(3)
        text = format_facets(cube)
        self.assertTrue(text.startswith("# prism:3\nn 8\n"))
        self.assertEqual(parse_facets(text), cube)
