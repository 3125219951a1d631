# cli/analysis.py
"""
One-shot analysis of a complex for the `analyze` command.
"""

import logging

from core.exceptions import FullSimplex, TooSmall
from complexes.graphs import one_skeleton
from complexes.simplicial import generator_degree, predicates, stanley_reisner_generators
from connectivity.separators import vertex_connectivity
from homology.chains import reduced_betti
from regularity.hochster import hochster_table, regularity
from theorems.cycles import is_vertex_minimal_cycle

logger = logging.getLogger(__name__)


def analyze_complex(complex_, config):
    """
    n, dim, structural predicates, s, reduced Betti numbers per field, the
    Betti table and regularity over the first field, kappa and a
    certificate attempt for the top nonzero homology degree.
    """
    fields = config.fields
    info = predicates(complex_)
    try:
        s = generator_degree(complex_)
        generators = stanley_reisner_generators(complex_)
    except FullSimplex:
        s, generators = None, []

    betti = {field.p: reduced_betti(complex_, field) for field in fields}
    top = max((b.top_degree for b in betti.values() if b.top_degree is not None), default=None)

    field = fields[0]
    table = hochster_table(complex_, field, cap=config.cap, force=config.force, jobs=config.jobs)
    reg = regularity(complex_, field, cap=config.cap, force=config.force, jobs=config.jobs)

    try:
        connectivity = vertex_connectivity(one_skeleton(complex_), jobs=config.jobs).as_dict()
    except TooSmall:
        connectivity = None

    cert = None
    if top is not None:
        cert = is_vertex_minimal_cycle(complex_, top, fields, cap=config.cap, force=config.force, jobs=config.jobs)

    return {
        "complex": complex_.provenance or "input",
        "n": complex_.vertex_count,
        "dim": complex_.dim,
        "facets": [list(f) for f in complex_.facet_sets()],
        "f_vector": list(complex_.f_vector()),
        "is_pure": info.is_pure,
        "is_flag": info.is_flag,
        "is_strongly_connected": info.is_strongly_connected,
        "is_pseudomanifold": info.is_pseudomanifold,
        "ridge_degrees": info.ridge_degree_values,
        "s": s,
        "generators": generators,
        "betti": {str(p): b.as_dict() for p, b in betti.items()},
        "betti_table": table.to_dict(),
        "betti_table_text": table.to_text(),
        "regularity": reg.as_dict(),
        "connectivity": connectivity,
        "certificate": cert.as_dict() if cert else None,
        "certificate_degree": top,
    }
