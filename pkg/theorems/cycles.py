# theorems/cycles.py
"""
Vertex minimal h-cycles: H̃_h(Δ|_T; k) != 0 if and only if T = [n].

Certification runs field by field and stops at the first field that works.
"""

import logging
from dataclasses import dataclass

from core.conf import toolkit_setting
from core.utils.subsets import check_cap, iter_bits, popcount
from complexes.simplicial import restriction
from homology.chains import FieldSpec, reduced_betti
from regularity.hochster import homology_lattice

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleCertificate:
    h: int
    field: FieldSpec
    full_set_betti: int
    checked_subsets: int
    method: str = "exhaustive"

    def as_dict(self):
        return {
            "h": self.h,
            "field": self.field.p,
            "full_set_betti": self.full_set_betti,
            "checked_subsets": self.checked_subsets,
            "method": self.method,
        }


def default_fields(fields=None):
    if fields:
        return [f if isinstance(f, FieldSpec) else FieldSpec(f) for f in fields]
    return [FieldSpec(p) for p in toolkit_setting('TOOLKIT_FIELD_PRIMES')]


def _top_degree_check(complex_, h, field):
    """
    h = dim Δ: H̃_h of a restriction is its h-cycle space, which only grows
    with T, so the maximal proper subsets [n] minus one vertex decide it.
    """
    checked = 0
    for bit in iter_bits(complex_.universe):
        checked += 1
        if reduced_betti(restriction(complex_, complex_.universe & ~(1 << bit)), field)[h]:
            return None
    return checked


def _exhaustive_check(complex_, h, field, cap, force, jobs):
    lattice = homology_lattice(complex_, field, cap=cap, force=force, jobs=jobs)
    full = complex_.universe
    checked = 0
    for mask, values in lattice.items():
        if mask == full:
            continue
        checked += 1
        if 0 <= h + 1 < len(values) and values[h + 1]:
            logger.debug("H̃_%s != 0 on proper subset of size %s over %s", h, popcount(mask), field)
            return None
    return checked


def is_vertex_minimal_cycle(complex_, h, fields=None, exhaustive=False, cap=None, force=False, jobs=None):
    """
    The first field over which Δ is a vertex minimal h-cycle, as a
    CycleCertificate, or None.

    Top-dimensional cycles are decided on the n maximal proper subsets
    unless `exhaustive` asks for all 2^n - 1 of them.
    """
    check_cap(complex_.vertex_count, cap, force)
    for field in default_fields(fields):
        logger.debug("Certifying %s as a vertex minimal %s-cycle over %s", complex_, h, field)
        full_betti = reduced_betti(complex_, field)[h]
        if not full_betti:
            continue
        if h == complex_.dim and not exhaustive:
            checked, method = _top_degree_check(complex_, h, field), "top-degree"
        else:
            checked, method = _exhaustive_check(complex_, h, field, cap, force, jobs), "exhaustive"
        if checked is not None:
            return CycleCertificate(h=h, field=field, full_set_betti=full_betti, checked_subsets=checked, method=method)
    return None


def find_certificate(complex_, fields=None, exhaustive=False, cap=None, force=False, jobs=None):
    """Try every degree with H̃ != 0 over some field, highest first"""
    degrees = set()
    for field in default_fields(fields):
        degrees.update(reduced_betti(complex_, field).nonzero_degrees())
    for h in sorted(degrees, reverse=True):
        cert = is_vertex_minimal_cycle(complex_, h, fields, exhaustive=exhaustive, cap=cap, force=force, jobs=jobs)
        if cert is not None:
            return cert
    return None
