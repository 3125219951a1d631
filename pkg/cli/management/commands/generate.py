from cli.base import ToolkitCommand
from cli.runconfig import build_from_spec
from complexes.facet_io import format_facets


class Command(ToolkitCommand):
    """
    Write a generated complex in the facet file format:

        python manage.py generate nevo:3,3 --output nevo33.facets
    """

    help = "Write a generated complex as a facet file"
    takes_input = False

    def add_arguments(self, parser):
        parser.add_argument("spec", help="Generator spec, e.g. prism:3 or random:8,2,0.4,42.")
        super().add_arguments(parser)

    def run(self, config, **options):
        complex_ = build_from_spec(options["spec"], config.seed)
        self.emit(config, format_facets(complex_).rstrip("\n"))
        return 0
