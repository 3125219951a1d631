import csv
import io
import json
import tempfile
from pathlib import Path

import jsonschema
from django.conf import settings
from django.core.management import call_command
from django.test import SimpleTestCase, TestCase, override_settings

from core.exceptions import BadParameters, ParseError
from theorems.models import VerificationRecord
from .runconfig import RunConfig, build_from_spec, parse_generator_spec


def run(*args, **options):
    """call_command with captured output; returns (exit code, stdout, stderr)"""
    out, err = io.StringIO(), io.StringIO()
    try:
        call_command(*args, stdout=out, stderr=err, **options)
        code = 0
    except SystemExit as exc:
        code = exc.code
    return code, out.getvalue(), err.getvalue()


def report_schema():
    return json.loads(Path(settings.TOOLKIT_REPORT_SCHEMA).read_text())


class RunConfigTests(SimpleTestCase):

    def test_generator_specs(self):
        self.assertEqual(parse_generator_spec("nevo:3,3"), ("nevo", [3, 3]))
        self.assertEqual(parse_generator_spec("octahedron"), ("octahedron", []))
        self.assertEqual(parse_generator_spec("random:8,2,0.4,42"), ("random", [8, 2, 0.4, 42]))
        self.assertEqual(build_from_spec("cycle:5").vertex_count, 5)

    def test_bad_specs(self):
        with self.assertRaises(ParseError):
            parse_generator_spec("dodecahedron")
        with self.assertRaises(ParseError):
            parse_generator_spec("nevo:3,x")
        with self.assertRaises(ParseError):
            build_from_spec("cycle:3,4")

    def test_argument_types_are_checked(self):
        with self.assertRaises(ParseError) as caught:
            build_from_spec("cycle:5.0")
        self.assertIn("integer", str(caught.exception))
        with self.assertRaises(ParseError) as caught:
            build_from_spec("cycle:3,4")
        self.assertIn("number of arguments", str(caught.exception))
        self.assertEqual(build_from_spec("random:6,2,1,3").provenance, "random:6,2,1,3")

    def test_random_spec_takes_seed(self):
        self.assertEqual(build_from_spec("random:6,2,0.5", seed=3), build_from_spec("random:6,2,0.5,3"))

    def test_hard_ceiling(self):
        with self.assertRaises(BadParameters):
            RunConfig.from_options("analyze", {"cap": 30})
        with self.assertRaises(BadParameters):
            RunConfig.from_options("analyze", {"primes": "2,9"})

    @override_settings(TOOLKIT_FIELD_PRIMES=[3], TOOLKIT_ENUMERATION_CAP=12)
    def test_settings_are_defaults(self):
        config = RunConfig.from_options("analyze", {})
        self.assertEqual(config.primes, (3,))
        self.assertEqual(config.cap, 12)
        self.assertEqual(RunConfig.from_options("analyze", {"cap": 8}).cap, 8)


class AnalyzeCommandTests(SimpleTestCase):

    def test_octahedron(self):
        code, out, _ = run("analyze", generate="octahedron", format="json")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data["regularity"]["reg"], 3)
        self.assertEqual(data["connectivity"]["kappa"], 4)
        self.assertEqual(data["certificate"]["h"], 2)
        self.assertTrue(data["is_pseudomanifold"])

    def test_simplex_boundary(self):
        data = json.loads(run("analyze", generate="simplex-boundary:3", format="json")[1])
        self.assertEqual(data["regularity"]["reg"], 3)
        self.assertEqual(data["connectivity"]["kappa"], 3)
        self.assertEqual(data["s"], 4)

    def test_cube_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "cube.facets"
            self.assertEqual(run("generate", "prism:3", output=str(path))[0], 0)
            code, out, _ = run("analyze", str(path))
        self.assertEqual(code, 0)
        self.assertIn("vertex minimal 2-cycle: yes", out)
        self.assertIn("pseudomanifold: no", out)
        self.assertIn("total:", out)

    def test_text_output_is_repeatable(self):
        self.assertEqual(run("analyze", generate="nevo:3,2")[1], run("analyze", generate="nevo:3,2")[1])

    def test_bad_input(self):
        self.assertEqual(run("analyze")[0], 2)
        self.assertEqual(run("analyze", generate="nevo:1,1")[0], 2)
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "broken.facets"
            path.write_text("1 2\n2 x\n")
            code, _, err = run("analyze", str(path))
        self.assertEqual(code, 2)
        self.assertIn("ParseError", err)

    def test_undecodable_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "latin.facets"
            path.write_bytes(b"1 2\n2 3\xff\xfe\n")
            code, _, err = run("analyze", str(path))
        self.assertEqual(code, 2)
        self.assertIn("ParseError", err)

    def test_output_does_not_depend_on_jobs(self):
        for generate in ("octahedron", "cross-polytope:4", "nevo:3,3"):
            outputs = {run("analyze", generate=generate, format="json", jobs=jobs)[1] for jobs in (1, 3, 4)}
            self.assertEqual(len(outputs), 1, generate)

    def test_ghost_vertices(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "ghost.facets"
            path.write_text("n 5\n1 2\n2 3\n1 3\n")
            self.assertEqual(run("analyze", str(path))[0], 2)
            code, out, _ = run("analyze", str(path), lenient=True, format="json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["n"], 3)

    def test_cap_exceeded(self):
        self.assertEqual(run("analyze", generate="cross-polytope:6", cap=10)[0], 3)


class VerifyCommandTests(SimpleTestCase):

    def assertValidReport(self, text):
        data = json.loads(text)
        jsonschema.validate(data, report_schema())
        return data

    def test_corollary_on_nevo(self):
        code, out, _ = run("verify", "corollary5", generate="nevo:3,3", format="json")
        self.assertEqual(code, 0)
        data = self.assertValidReport(out)
        self.assertEqual(data["status"], "pass")
        self.assertTrue(data["summary"]["tight"])

    def test_theorem_on_cross_polytope(self):
        code, out, _ = run("verify", "theorem3", generate="cross-polytope:3", format="json")
        self.assertEqual(code, 0)
        data = self.assertValidReport(out)
        self.assertGreater(data["summary"]["checked"], 0)
        self.assertEqual(data["summary"]["failures"], 0)

    def test_example_grid(self):
        code, out, _ = run("verify", "example6", grid="s=2..4,h=s-1..5", format="json")
        self.assertEqual(code, 0)
        data = self.assertValidReport(out)
        self.assertEqual(data["summary"]["points"], 5 + 4 + 3)

    def test_example_prisms(self):
        code, out, _ = run("verify", "example2", dims="2,3", format="json")
        self.assertEqual(code, 0)
        self.assertValidReport(out)

    def test_taylor_suitability(self):
        code, out, _ = run("verify", "taylor-suitability", generate="octahedron", format="json")
        self.assertEqual(code, 0)
        self.assertEqual(self.assertValidReport(out)["statement"], "taylor-suitability")

    def test_hypothesis_unmet(self):
        code, out, _ = run("verify", "dhs-corollary", generate="octahedron", format="json")
        self.assertEqual(code, 4)
        self.assertEqual(self.assertValidReport(out)["status"], "hypothesis-unmet")
        self.assertEqual(run("verify", "corollary5", generate="simplex:3")[0], 4)

    def test_full_simplex_fails_taylor_hypothesis(self):
        code, out, _ = run("verify", "taylor-suitability", generate="simplex:2", format="json")
        self.assertEqual(code, 4)
        self.assertEqual(self.assertValidReport(out)["status"], "hypothesis-unmet")

    def test_exhaustive_certificate(self):
        code, out, _ = run("verify", "corollary5", generate="octahedron", format="json", exhaustive=True)
        self.assertEqual(code, 0)
        certificate = [w for w in self.assertValidReport(out)["witnesses"] if w["kind"] == "certificate"][0]
        self.assertEqual(certificate["method"], "exhaustive")

    def test_reports_do_not_depend_on_jobs(self):
        for statement, generate in (("corollary5", "nevo:3,3"), ("theorem3", "cross-polytope:3")):
            outputs = {run("verify", statement, generate=generate, format="json", jobs=jobs)[1] for jobs in (1, 3, 4)}
            self.assertEqual(len(outputs), 1, statement)

    def test_text_report(self):
        code, out, _ = run("verify", "corollary5", generate="octahedron")
        self.assertEqual(code, 0)
        self.assertIn("corollary5", out)
        self.assertIn("PASS", out)

    def test_timings_on_request(self):
        data = self.assertValidReport(run("verify", "corollary5", generate="octahedron", format="json", timings=True)[1])
        self.assertIn("connectivity", data["timings"])


class VerifySaveTests(TestCase):

    def test_save_appends_record(self):
        code, _, err = run("verify", "corollary5", generate="octahedron", save=True)
        self.assertEqual(code, 0)
        self.assertIn("Saved verification record", err)
        record = VerificationRecord.objects.get()
        self.assertEqual(record.statement, "corollary5")
        jsonschema.validate(record.report, report_schema())


class SearchCommandTests(SimpleTestCase):

    def rows(self, **options):
        code, out, _ = run("search", **options)
        self.assertEqual(code, 0)
        return list(csv.DictReader(io.StringIO(out)))

    def test_nevo_grid_is_tight(self):
        rows = self.rows(family="nevo", grid="s=2..3,h=s-1..4")
        self.assertEqual(len(rows), 4 + 3)
        self.assertTrue(all(row["slack"] == "0" for row in rows))
        self.assertEqual(rows[0]["construction"], "nevo:2,1")

    def test_simplex_boundaries_are_tight(self):
        rows = self.rows(family="boundaries", dims="2..5")
        self.assertEqual([row["slack"] for row in rows], ["0"] * 4)
        self.assertEqual([row["kappa"] for row in rows], ["2", "3", "4", "5"])

    def test_random_family_is_seeded(self):
        first = run("search", family="random", count=4, n=7, seed=42)[1]
        self.assertEqual(first, run("search", family="random", count=4, n=7, seed=42)[1])
        for row in csv.DictReader(io.StringIO(first)):
            if row["slack"]:
                self.assertGreaterEqual(int(row["slack"]), 0)

    def test_cap_is_noted(self):
        rows = self.rows(family="boundaries", dims="2..3", cap=3)
        self.assertEqual(rows[0]["slack"], "0")
        self.assertTrue(rows[1]["note"].startswith("skipped"))


class GenerateCommandTests(SimpleTestCase):

    def test_writes_facet_format(self):
        code, out, _ = run("generate", "nevo:3,2")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("# nevo:3,2\nn 5\n"))

    def test_unknown_generator(self):
        self.assertEqual(run("generate", "tesseract")[0], 2)
