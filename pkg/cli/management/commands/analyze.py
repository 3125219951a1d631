from cli.analysis import analyze_complex
from cli.base import ToolkitCommand
from cli.rendering import render_analysis_text, to_json


class Command(ToolkitCommand):
    """
    One-shot report for a complex:

        python manage.py analyze cube.facets
        python manage.py analyze --generate octahedron --format json
    """

    help = "Homology, Betti table, regularity, connectivity and cycle certificate of one complex"

    def run(self, config, **options):
        complex_ = config.load_complex()
        analysis = analyze_complex(complex_, config)
        if config.output_format == "json":
            self.emit(config, to_json(analysis))
        else:
            self.emit(config, render_analysis_text(analysis))
        return 0
