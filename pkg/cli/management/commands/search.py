import logging

from core.exceptions import BadParameters, CapExceeded, FullSimplex, TooSmall
from cli.base import ToolkitCommand
from cli.rendering import render_search_csv
from complexes.generators import nevo_complex, random_complex, simplex_boundary
from complexes.graphs import one_skeleton
from complexes.simplicial import generator_degree
from connectivity.separators import vertex_connectivity
from regularity.bounds import taylor_bound
from regularity.hochster import regularity
from theorems.cycles import find_certificate
from theorems.verification import balbarath_bound, parse_grid

logger = logging.getLogger(__name__)

FAMILIES = ("nevo", "boundaries", "random")


def _range(text):
    """'2..6' -> range(2, 7)"""
    try:
        low, high = (int(v) for v in text.split(".."))
    except ValueError:
        raise BadParameters(f"cannot read range '{text}', expected A..B") from None
    return range(low, high + 1)


def search_row(complex_, config):
    """
    One CSV row: construction, n, s, h, reg, taylor_bound, kappa,
    balbarath_bound, slack. Problems are noted in the row instead of aborting.
    """
    row = {"construction": complex_.provenance, "n": complex_.vertex_count}
    common = {"cap": config.cap, "force": config.force, "jobs": config.jobs}
    try:
        row["s"] = generator_degree(complex_)
    except FullSimplex:
        row["note"] = "full simplex"
        return row
    row["taylor_bound"] = str(taylor_bound(complex_.vertex_count, row["s"]))

    try:
        cert = find_certificate(complex_, config.fields, **common)
        field = cert.field if cert else config.fields[0]
        row["reg"] = regularity(complex_, field, **common).reg
    except CapExceeded as exc:
        row["note"] = f"skipped: {exc}"
        return row

    try:
        row["kappa"] = vertex_connectivity(one_skeleton(complex_), jobs=config.jobs).kappa
    except TooSmall:
        row["note"] = "fewer than 2 vertices"
        return row

    if cert is None:
        row["note"] = "not a vertex minimal cycle"
    elif cert.h < 1:
        row["h"] = cert.h
        row["note"] = "h < 1"
    else:
        row["h"] = cert.h
        row["balbarath_bound"] = balbarath_bound(row["s"], cert.h)
        row["slack"] = row["kappa"] - row["balbarath_bound"]
        if row["slack"] < 0:
            row["note"] = "VIOLATION"
            logger.error("Connectivity bound violated by %s: %s", complex_, row)
    return row


class Command(ToolkitCommand):
    """
    Tightness exploration for the connectivity corollary, as CSV:

        python manage.py search --family nevo --grid s=2..4,h=s-1..6
        python manage.py search --family boundaries --dims 2..6
        python manage.py search --family random --count 20 --n 8 --seed 42
    """

    help = "Tabulate s, h, regularity and connectivity over a family of complexes"
    takes_input = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--family", choices=FAMILIES, default="nevo")
        parser.add_argument("--grid", default="s=2..4,h=s-1..6", help="(s, h) grid for the nevo family.")
        parser.add_argument("--dims", default="2..6", help="d range for simplex boundaries ∂σ^d.")
        parser.add_argument("--count", type=int, default=20, help="Number of random complexes.")
        parser.add_argument("--n", type=int, default=8, help="Vertex count of random complexes.")
        parser.add_argument("--dim-cap", type=int, default=2, help="Largest face dimension of random complexes.")
        parser.add_argument("--density", type=float, default=0.4, help="Face probability of random complexes.")

    def complexes(self, config, options):
        family = options["family"]
        if family == "nevo":
            for s, h in parse_grid(options["grid"]):
                yield nevo_complex(s, h)[0]
        elif family == "boundaries":
            for d in _range(options["dims"]):
                yield simplex_boundary(d)
        else:
            seed = config.seed if config.seed is not None else 0
            for offset in range(options["count"]):
                yield random_complex(options["n"], options["dim_cap"], options["density"], seed + offset)

    def run(self, config, **options):
        rows = [search_row(complex_, config) for complex_ in self.complexes(config, options)]
        self.emit(config, render_search_csv(rows).rstrip("\n"))
        return 0
