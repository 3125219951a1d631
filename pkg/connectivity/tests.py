from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from unittest import mock

import networkx as nx
from django.test import SimpleTestCase, override_settings

from core.exceptions import CapExceeded, TooSmall
from core.utils.subsets import mask_of, popcount, submasks, vertices_of
from complexes.generators import (
    cross_polytope, cycle_complex, nevo_complex, octahedron, prism_complex, random_complex,
    simplex_boundary,
)
from complexes.graphs import one_skeleton
from .separators import (
    disconnecting_subsets, separates, vertex_connectivity, vertex_connectivity_bruteforce,
)


def corpus():
    return [
        cycle_complex(4), cycle_complex(5), simplex_boundary(2), simplex_boundary(3),
        simplex_boundary(4), octahedron(), cross_polytope(4), prism_complex(3),
        nevo_complex(3, 2)[0], nevo_complex(3, 3)[0],
    ]


class VertexConnectivityTests(SimpleTestCase):

    def test_cycle(self):
        result = vertex_connectivity(nx.cycle_graph(range(1, 6)))
        self.assertEqual(result.kappa, 2)
        self.assertEqual(len(result.min_separator), 2)
        self.assertTrue(separates(nx.cycle_graph(range(1, 6)), result.min_separator))

    def test_complete_graph(self):
        result = vertex_connectivity(nx.complete_graph(4))
        self.assertEqual(result.kappa, 3)
        self.assertEqual(result.min_separator, frozenset())

    def test_octahedron_skeleton(self):
        self.assertEqual(vertex_connectivity(one_skeleton(octahedron())).kappa, 4)

    def test_disconnected_graph(self):
        graph = nx.Graph([(1, 2), (3, 4)])
        self.assertEqual(vertex_connectivity(graph).kappa, 0)
        self.assertEqual(vertex_connectivity_bruteforce(graph).kappa, 0)

    def test_too_small(self):
        graph = nx.Graph()
        graph.add_node(1)
        with self.assertRaises(TooSmall):
            vertex_connectivity(graph)
        with self.assertRaises(TooSmall):
            vertex_connectivity_bruteforce(graph)

    def test_bruteforce_examples(self):
        self.assertEqual(vertex_connectivity_bruteforce(nx.cycle_graph(5)).kappa, 2)
        self.assertEqual(vertex_connectivity_bruteforce(nx.petersen_graph()).kappa, 3)
        result = vertex_connectivity_bruteforce(nx.path_graph(4))
        self.assertEqual(result.kappa, 1)
        self.assertIn(next(iter(result.min_separator)), {1, 2})

    @override_settings(TOOLKIT_BRUTEFORCE_CAP=5)
    def test_bruteforce_cap(self):
        with self.assertRaises(CapExceeded):
            vertex_connectivity_bruteforce(nx.cycle_graph(6))

    def test_flow_matches_bruteforce_on_random_graphs(self):
        for seed in range(200):
            n = 2 + seed % 9
            graph = nx.gnp_random_graph(n, 0.2 + (seed % 7) / 10, seed=seed)
            flow = vertex_connectivity(graph)
            brute = vertex_connectivity_bruteforce(graph)
            self.assertEqual(flow.kappa, brute.kappa, seed)
            self.assertLessEqual(flow.kappa, min(d for _, d in graph.degree))
            if flow.min_separator:
                self.assertTrue(separates(graph, flow.min_separator), seed)

    def test_no_smaller_separator(self):
        for complex_ in corpus():
            graph = one_skeleton(complex_)
            result = vertex_connectivity(graph)
            self.assertEqual(result.kappa, vertex_connectivity_bruteforce(graph).kappa, str(complex_))
            for size in range(result.kappa):
                for removed in combinations(sorted(graph.nodes), size):
                    self.assertFalse(separates(graph, removed))

    def test_parallel_pairs_match_serial(self):
        for graph in (one_skeleton(cross_polytope(4)), nx.petersen_graph()):
            serial = vertex_connectivity(graph, jobs=1)
            for jobs in (2, 4):
                with mock.patch("core.utils.subsets.ProcessPoolExecutor", wraps=ProcessPoolExecutor) as pool:
                    parallel = vertex_connectivity(graph, jobs=jobs)
                pool.assert_called_once_with(max_workers=jobs)
                self.assertEqual(parallel, serial)

    def test_serial_run_starts_no_pool(self):
        with mock.patch("core.utils.subsets.ProcessPoolExecutor") as pool:
            vertex_connectivity(nx.petersen_graph(), jobs=1)
        pool.assert_not_called()


class DisconnectingSubsetTests(SimpleTestCase):

    def test_square_diagonal(self):
        found = list(disconnecting_subsets(cycle_complex(4)))
        self.assertIn(mask_of([1, 3]), found)
        self.assertIn(mask_of([2, 4]), found)
        self.assertEqual(len(found), 2)

    def test_complete_skeleton_never_disconnects(self):
        self.assertEqual(list(disconnecting_subsets(simplex_boundary(3))), [])

    def test_octahedron_against_component_oracle(self):
        complex_ = octahedron()
        graph = one_skeleton(complex_)
        expected = [
            mask for mask in submasks(complex_.universe)
            if popcount(mask) >= 2 and nx.number_connected_components(graph.subgraph(vertices_of(mask))) >= 2
        ]
        found = list(disconnecting_subsets(complex_))
        self.assertEqual(found, expected)
        self.assertEqual(found, sorted(found))
        for mask in found:
            vertices = set(vertices_of(mask))
            self.assertTrue(any({2 * i + 1, 2 * i + 2} <= vertices for i in range(3)))

    def test_random_complexes_against_oracle(self):
        for seed in range(10):
            complex_ = random_complex(7, 1, 0.35, seed)
            graph = one_skeleton(complex_)
            expected = {
                mask for mask in submasks(complex_.universe)
                if popcount(mask) >= 2 and not nx.is_connected(graph.subgraph(vertices_of(mask)))
            }
            self.assertEqual(set(disconnecting_subsets(complex_)), expected, seed)

    def test_size_cap(self):
        found = list(disconnecting_subsets(octahedron(), size_cap=2))
        self.assertEqual(found, [mask_of([1, 2]), mask_of([3, 4]), mask_of([5, 6])])

    @override_settings(TOOLKIT_ENUMERATION_CAP=5)
    def test_enumeration_cap(self):
        with self.assertRaises(CapExceeded):
            list(disconnecting_subsets(octahedron()))
