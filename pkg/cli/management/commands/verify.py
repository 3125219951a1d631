from core.exceptions import BadParameters, HypothesisUnmet
from cli.base import ToolkitCommand
from cli.rendering import render_report_text
from theorems.cycles import find_certificate
from theorems.reports import hypothesis_unmet_report
from theorems.verification import (
    parse_grid, verify_corollary_connectivity, verify_dhs_corollary, verify_example2,
    verify_example6, verify_suitability, verify_theorem_main,
)

STATEMENTS = ("theorem3", "corollary5", "dhs-corollary", "example6", "example2", "taylor-suitability")
DEFAULT_GRID = "s=2..5,h=s-1..7"


class Command(ToolkitCommand):
    """
    Verify one statement and exit 0 (pass), 1 (fail) or 4 (hypothesis unmet):

        python manage.py verify corollary5 --generate nevo:3,3
        python manage.py verify theorem3 --generate cross-polytope:3
        python manage.py verify example6 --grid s=2..5,h=s-1..7 --format json
    """

    help = "Machine-verify a theorem, corollary or example on a complex or grid"

    def add_arguments(self, parser):
        parser.add_argument("statement", choices=STATEMENTS)
        super().add_arguments(parser)
        parser.add_argument("--grid", default=DEFAULT_GRID, help="Grid for example6, e.g. s=2..5,h=s-1..7.")
        parser.add_argument("--dims", default="2,3,4", help="Prism dimensions for example2.")
        parser.add_argument("--k", type=int, default=None, help="Induced-cycle parameter for dhs-corollary.")
        parser.add_argument(
            "--exhaustive", action="store_true",
            help="Certify cycles on all proper subsets (theorem3, corollary5, dhs-corollary).",
        )
        parser.add_argument("--save", action="store_true", help="Append the report to the verification records.")

    def run(self, config, **options):
        statement = options["statement"]
        try:
            report = self.verify(statement, config, options)
        except HypothesisUnmet as exc:
            instance = config.generator or config.input_path or statement
            report = hypothesis_unmet_report(statement, instance, exc)

        if config.output_format == "json":
            self.emit(config, report.to_json(config.include_timings))
        else:
            self.emit(config, render_report_text(report))
        if options.get("save"):
            record = report.save_record()
            self.stderr.write(self.style.SUCCESS(f"Saved verification record #{record.pk}"))
        return report.exit_code

    def verify(self, statement, config, options):
        common = {"cap": config.cap, "force": config.force, "jobs": config.jobs}
        exhaustive = bool(options.get("exhaustive"))
        if statement == "example6":
            return verify_example6(parse_grid(options["grid"]), config.fields, jobs=config.jobs)
        if statement == "example2":
            try:
                dims = [int(d) for d in options["dims"].split(",") if d.strip()]
            except ValueError:
                raise BadParameters(f"cannot read prism dimensions '{options['dims']}'") from None
            return verify_example2(dims, config.fields, **common)

        complex_ = config.load_complex()
        if statement == "theorem3":
            cert = find_certificate(complex_, config.fields, exhaustive=exhaustive, **common)
            if cert is None:
                raise HypothesisUnmet(f"{complex_} is not a vertex minimal cycle over any configured field")
            return verify_theorem_main(complex_, cert, **common)
        if statement == "corollary5":
            return verify_corollary_connectivity(complex_, config.fields, exhaustive=exhaustive, **common)
        if statement == "dhs-corollary":
            return verify_dhs_corollary(complex_, options.get("k"), config.fields, exhaustive=exhaustive, **common)
        return verify_suitability(complex_, "taylor", config.fields[0], **common)
