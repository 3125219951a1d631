import json

import networkx as nx
from django.test import SimpleTestCase, TestCase

from core.exceptions import BadParameters, DegenerateS, DomainError, HypothesisUnmet
from complexes.generators import (
    cross_polytope, cycle_complex, nevo_complex, octahedron, prism_complex, simplex, simplex_boundary,
)
from complexes.simplicial import clique_complex, from_facets
from homology.chains import FieldSpec
from .cycles import find_certificate, is_vertex_minimal_cycle
from .models import VerificationRecord, VerificationStatus
from .reports import VerificationReport, hypothesis_unmet_report
from .verification import (
    balbarath_bound, dhs_connectivity_M, parse_grid, verify_corollary_connectivity,
    verify_dhs_corollary, verify_example2, verify_example6, verify_suitability, verify_theorem_main,
)

GF2 = FieldSpec(2)


def two_triangles():
    return from_facets(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])


def icosahedron():
    graph = nx.convert_node_labels_to_integers(nx.icosahedral_graph(), first_label=1)
    return clique_complex(graph, 12)


class VertexMinimalCycleTests(SimpleTestCase):

    def test_square(self):
        cert = is_vertex_minimal_cycle(cycle_complex(4), 1, [GF2])
        self.assertIsNotNone(cert)
        self.assertEqual(cert.field, GF2)
        self.assertEqual(cert.full_set_betti, 1)
        exhaustive = is_vertex_minimal_cycle(cycle_complex(4), 1, [GF2], exhaustive=True)
        self.assertEqual(exhaustive.checked_subsets, 15)
        self.assertEqual(exhaustive.method, "exhaustive")

    def test_octahedron(self):
        cert = is_vertex_minimal_cycle(octahedron(), 2)
        self.assertEqual(cert.method, "top-degree")
        self.assertEqual(cert.checked_subsets, 6)
        self.assertEqual(is_vertex_minimal_cycle(octahedron(), 2, exhaustive=True).checked_subsets, 63)

    def test_disjoint_triangles_are_not_minimal(self):
        self.assertIsNone(is_vertex_minimal_cycle(two_triangles(), 1))
        self.assertIsNone(is_vertex_minimal_cycle(two_triangles(), 1, exhaustive=True))

    def test_wrong_degree(self):
        self.assertIsNone(is_vertex_minimal_cycle(octahedron(), 1))
        self.assertIsNone(is_vertex_minimal_cycle(simplex(3), 2))

    def test_pseudomanifolds_are_minimal_cycles(self):
        complexes = [octahedron(), cross_polytope(4), cycle_complex(6), nevo_complex(3, 3)[0]]
        complexes += [simplex_boundary(d) for d in range(2, 6)]
        for complex_ in complexes:
            cert = find_certificate(complex_, [GF2])
            self.assertIsNotNone(cert, str(complex_))
            self.assertEqual(cert.h, complex_.dim)

    def test_top_degree_shortcut_agrees_with_full_scan(self):
        for complex_ in (octahedron(), nevo_complex(3, 2)[0], two_triangles(), cycle_complex(5)):
            h = complex_.dim
            quick = is_vertex_minimal_cycle(complex_, h, [GF2])
            full = is_vertex_minimal_cycle(complex_, h, [GF2], exhaustive=True)
            self.assertEqual(quick is None, full is None, str(complex_))

    def test_prisms_are_two_cycles(self):
        for d in (2, 3, 4):
            self.assertIsNotNone(is_vertex_minimal_cycle(prism_complex(d), 2), d)


class TheoremMainTests(SimpleTestCase):

    def _verify(self, complex_):
        return verify_theorem_main(complex_, find_certificate(complex_))

    def test_octahedron(self):
        report = self._verify(octahedron())
        self.assertTrue(report.passed)
        self.assertGreater(report.summary["checked"], 0)
        self.assertEqual(report.summary["min_slack"], 0)

    def test_five_cycle(self):
        report = self._verify(cycle_complex(5))
        self.assertTrue(report.passed)
        self.assertEqual(report.summary["failures"], 0)

    def test_complete_skeleton_is_vacuous(self):
        report = self._verify(simplex_boundary(3))
        self.assertTrue(report.passed)
        self.assertEqual(report.summary["checked"], 0)

    def test_corpus(self):
        complexes = [
            cycle_complex(4), cross_polytope(4), nevo_complex(3, 2)[0], nevo_complex(3, 3)[0], prism_complex(3),
        ]
        for complex_ in complexes:
            report = self._verify(complex_)
            self.assertTrue(report.passed, str(complex_))
            self.assertTrue(all(w["ok"] for w in report.witnesses))


class ConnectivityCorollaryTests(SimpleTestCase):

    def test_balbarath_bound(self):
        self.assertEqual(balbarath_bound(2, 2), 4)
        self.assertEqual(balbarath_bound(3, 4), 6)
        self.assertEqual(balbarath_bound(100, 3), 4)
        with self.assertRaises(DegenerateS):
            balbarath_bound(1, 3)
        with self.assertRaises(BadParameters):
            balbarath_bound(3, 0)

    def test_balbarath_bound_decreases_to_h_plus_one(self):
        for h in range(1, 8):
            values = [balbarath_bound(s, h) for s in range(2, 1001)]
            self.assertEqual(values, sorted(values, reverse=True))
            self.assertEqual(values[-1], h + 1)
            self.assertEqual(values[0], 2 * h)

    def test_octahedron_is_tight(self):
        report = verify_corollary_connectivity(octahedron())
        self.assertTrue(report.passed)
        self.assertEqual(report.summary["kappa"], 4)
        self.assertEqual(report.summary["bound"], 4)
        self.assertTrue(report.summary["tight"])
        kinds = [w["kind"] for w in report.witnesses]
        self.assertIn("athanasiadis", kinds)

    def test_simplex_boundary_skeleta_are_tight(self):
        for d in range(2, 5):
            report = verify_corollary_connectivity(simplex_boundary(d + 1))
            self.assertTrue(report.passed)
            self.assertEqual(report.summary["kappa"], d + 1)
            self.assertTrue(report.summary["tight"])

    def test_four_simplex_boundary(self):
        summary = verify_corollary_connectivity(simplex_boundary(4)).summary
        self.assertEqual((summary["s"], summary["h"], summary["kappa"], summary["bound"]), (5, 3, 4, 4))

    def test_nevo_three_three(self):
        summary = verify_corollary_connectivity(nevo_complex(3, 3)[0]).summary
        self.assertEqual((summary["s"], summary["h"], summary["bound"], summary["kappa"]), (3, 3, 5, 5))

    def test_hypothesis_unmet(self):
        with self.assertRaises(HypothesisUnmet):
            verify_corollary_connectivity(simplex(3))
        with self.assertRaises(HypothesisUnmet):
            verify_corollary_connectivity(two_triangles())

    def test_exhaustive_certificate_on_request(self):
        default = verify_corollary_connectivity(octahedron())
        report = verify_corollary_connectivity(octahedron(), exhaustive=True)
        self.assertTrue(report.passed)
        certificate = [w for w in report.witnesses if w["kind"] == "certificate"][0]
        self.assertEqual(certificate["method"], "exhaustive")
        self.assertEqual(report.summary["kappa"], default.summary["kappa"])


class DhsCorollaryTests(SimpleTestCase):

    def test_spot_values(self):
        value = dhs_connectivity_M(2, 2)
        self.assertEqual((value.first, value.second, value.value), (4, 3, 4))
        value = dhs_connectivity_M(2, 3)
        self.assertEqual(value.first, 10)
        self.assertEqual(value.simplified, 1)
        self.assertEqual(dhs_connectivity_M(4, 4).first, 81)

    def test_simplified_guarantee_on_grid(self):
        for k in range(1, 7):
            for h in range(2, 7):
                value = dhs_connectivity_M(k, h)
                self.assertGreaterEqual(value.value, value.simplified)
                if k >= 2:
                    self.assertGreaterEqual(value.first, value.second)

    def test_domain(self):
        with self.assertRaises(DomainError):
            dhs_connectivity_M(2, 1)
        with self.assertRaises(BadParameters):
            dhs_connectivity_M(0, 3)

    def test_icosahedron(self):
        report = verify_dhs_corollary(icosahedron())
        self.assertTrue(report.passed)
        self.assertEqual(report.summary["k"], 1)
        self.assertEqual(report.summary["kappa"], 5)
        self.assertEqual(report.summary["M"], 3)

    def test_octahedron_has_short_induced_cycles(self):
        with self.assertRaises(HypothesisUnmet):
            verify_dhs_corollary(octahedron())

    def test_one_cycles_are_rejected(self):
        with self.assertRaises(HypothesisUnmet):
            verify_dhs_corollary(cycle_complex(6))


class ExampleTests(SimpleTestCase):

    def test_parse_grid(self):
        self.assertEqual(parse_grid("s=2..3,h=s-1..3"), [(2, 1), (2, 2), (2, 3), (3, 2), (3, 3)])
        self.assertEqual(parse_grid("s=4..4,h=5..6"), [(4, 5), (4, 6)])
        with self.assertRaises(BadParameters):
            parse_grid("s=2")

    def test_nevo_grid(self):
        report = verify_example6(parse_grid("s=2..5,h=s-1..7"))
        self.assertTrue(report.passed, [w for w in report.witnesses if not w["ok"]])
        self.assertEqual(report.summary["points"], 7 + 6 + 5 + 4)

    def test_nevo_witness_contents(self):
        report = verify_example6([(3, 3)])
        witness = report.witnesses[0]
        self.assertEqual(witness["n"], 7)
        self.assertEqual(witness["kappa"], 5)
        self.assertEqual(witness["separator"], [3, 4, 5, 6, 7])
        self.assertEqual(witness["parameters"], {"s": 3, "h": 3, "q_prime": 4, "r_prime": 1, "q": 1, "r": 2})

    def test_prisms(self):
        report = verify_example2((2, 3, 4))
        self.assertTrue(report.passed)
        by_dim = {w["stated_dim"]: w for w in report.witnesses}
        self.assertEqual(by_dim[2]["literal_dim"], 3)
        self.assertTrue(by_dim[3]["is_pure"])
        self.assertFalse(by_dim[3]["is_pseudomanifold"])
        self.assertFalse(by_dim[4]["is_pure"])

    def test_taylor_suitability(self):
        report = verify_suitability(simplex_boundary(3))
        self.assertTrue(report.passed)
        tightest = [w for w in report.witnesses if w["kind"] == "tightest"][0]
        self.assertEqual(tightest["slack"], "0")

    def test_full_simplex_is_outside_the_taylor_domain(self):
        for d in (1, 2, 4):
            with self.assertRaises(HypothesisUnmet):
                verify_suitability(simplex(d))


class ReportTests(SimpleTestCase):

    def test_status_and_exit_code(self):
        report = VerificationReport(statement="theorem3", instance="octahedron")
        self.assertEqual(report.exit_code, 0)
        report.add_witness("separator", ok=False, subset=[1, 2])
        self.assertEqual(report.status, VerificationStatus.FAIL)
        self.assertEqual(report.exit_code, 1)

    def test_hypothesis_unmet(self):
        report = hypothesis_unmet_report("dhs-corollary", "octahedron", HypothesisUnmet("induced 4-cycle"))
        self.assertEqual(report.exit_code, 4)
        report.fail()
        self.assertEqual(report.status, VerificationStatus.HYPOTHESIS_UNMET)

    def test_json_is_stable(self):
        report = verify_corollary_connectivity(octahedron())
        data = json.loads(report.to_json())
        self.assertEqual(data["timings"], {})
        self.assertEqual(data["status"], "pass")
        self.assertEqual(report.to_json(), verify_corollary_connectivity(octahedron()).to_json())
        self.assertIn("connectivity", json.loads(report.to_json(include_timings=True))["timings"])


class VerificationRecordTests(TestCase):

    def test_save_record(self):
        report = verify_corollary_connectivity(octahedron())
        record = report.save_record()
        self.assertEqual(VerificationRecord.objects.count(), 1)
        self.assertEqual(record.status, "pass")
        self.assertEqual(record.report["summary"]["kappa"], 4)
        self.assertIn("corollary5", str(record))

    def test_records_are_append_only(self):
        record = hypothesis_unmet_report("corollary5", "simplex:3", HypothesisUnmet("acyclic")).save_record()
        record.status = VerificationStatus.PASS
        with self.assertRaises(ValueError):
            record.save()
