# regularity/hochster.py
"""
Graded Betti numbers of the Stanley-Reisner ring via Hochster's formula

    β_{i,j}(k[Δ]) = Σ_{|T|=j} dim H̃_{j-i-1}(Δ|_T; k)

and Castelnuovo-Mumford regularity. The reduced homology of every
restriction is computed once per (complex, field) and kept in a lattice
store shared by the table, the regularity, the suitability checks and the
theorem verifiers.
"""

import hashlib
import logging
from dataclasses import dataclass, field as dataclass_field

import numpy as np
from django.core.cache import caches

from core.exceptions import BadParameters
from core.utils.subsets import check_cap, iter_bits, map_chunks, popcount, submasks, vertices_of
from complexes.simplicial import maximal_faces, restriction
from homology.chains import BettiVector, FieldSpec, betti_of_facets, reduced_betti

logger = logging.getLogger(__name__)


def _deposit(local, bits):
    """Map a local subset index onto a vertex mask"""
    mask = 0
    position = 0
    while local:
        if local & 1:
            mask |= 1 << bits[position]
        local >>= 1
        position += 1
    return mask


def _betti_block(payload, start, stop):
    facets, bits, p = payload
    block = []
    for local in range(start, stop):
        mask = _deposit(local, bits)
        restricted = tuple(f for f in maximal_faces(f & mask for f in facets) if f)
        block.append(betti_of_facets(restricted, p))
    return block


def _top_degree(values):
    """Largest h with H̃_h != 0; -1 when the restriction is acyclic"""
    for index in range(len(values) - 1, -1, -1):
        if values[index]:
            return index - 1
    return -1


@dataclass
class HomologyLattice:
    """Reduced Betti tuples of every restriction Δ|_T, indexed by local subset index"""
    complex: object
    field: FieldSpec
    bits: tuple
    betti: list
    _restricted_regularities: list = dataclass_field(default=None, repr=False)

    def mask_of(self, local):
        return _deposit(local, self.bits)

    def local_of(self, mask):
        local = 0
        for position, bit in enumerate(self.bits):
            if mask >> bit & 1:
                local |= 1 << position
        return local

    def betti_at(self, mask):
        return BettiVector(field=self.field, values=self.betti[self.local_of(mask)])

    def items(self):
        """(mask, betti tuple) for every subset T of the universe"""
        for local, values in enumerate(self.betti):
            yield self.mask_of(local), values

    def restricted_regularities(self):
        """
        reg(k[Δ|_T]) for every T, indexed by local index:
        1 + the largest h with H̃_h(Δ|_U) != 0 for some U ⊆ T.
        """
        if self._restricted_regularities is None:
            best = [_top_degree(values) for values in self.betti]
            for local in range(1, len(best)):
                rest = local
                while rest:
                    low = rest & -rest
                    below = best[local ^ low]
                    if below > best[local]:
                        best[local] = below
                    rest ^= low
            self._restricted_regularities = [h + 1 for h in best]
        return self._restricted_regularities

    def regularity_of(self, mask):
        return self.restricted_regularities()[self.local_of(mask)]


LATTICE_CACHE = 'lattices'


def _lattice_key(complex_, field):
    digest = hashlib.sha1(repr((complex_.facets, complex_.universe)).encode()).hexdigest()
    return f"lattice:{field.p}:{digest}"


def homology_lattice(complex_, field=None, cap=None, force=False, jobs=None, chunk_bits=None):
    """
    The lattice of restriction homologies for `complex_` over `field`.

    Computed once (2^n restrictions, split into blocks for the worker pool)
    and then served from the `lattices` cache.
    """
    field = field or FieldSpec()
    store = caches[LATTICE_CACHE]
    key = _lattice_key(complex_, field)
    cached = store.get(key)
    if cached is not None:
        return cached

    check_cap(complex_.vertex_count, cap, force)
    bits = tuple(iter_bits(complex_.universe))
    total = 1 << len(bits)
    logger.info("Enumerating %s restrictions of %s over %s", total, complex_, field)
    blocks = map_chunks(_betti_block, total, (complex_.facets, bits, field.p), jobs, chunk_bits)
    lattice = HomologyLattice(
        complex=complex_,
        field=field,
        bits=bits,
        betti=[values for block in blocks for values in block],
    )
    logger.info("Finished %s restrictions of %s", total, complex_)
    store.add(key, lattice)
    return lattice


def clear_lattice_store():
    caches[LATTICE_CACHE].clear()


@dataclass(frozen=True)
class GradedBettiTable:
    """Nonzero β_{i,j}(k[Δ]) keyed by (i, j)"""
    n: int
    field: FieldSpec
    entries: dict

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def nonzero(self):
        return sorted(self.entries.items())

    @property
    def regularity(self):
        return max(j - i for (i, j) in self.entries)

    @property
    def projective_dimension(self):
        return max(i for (i, _) in self.entries)

    def as_array(self):
        """Rows j-i, columns i (Macaulay2 orientation)"""
        array = np.zeros((self.regularity + 1, self.projective_dimension + 1), dtype=np.int64)
        for (i, j), beta in self.entries.items():
            array[j - i, i] = beta
        return array

    def to_dict(self):
        return {
            "field": self.field.p,
            "n": self.n,
            "entries": [{"i": i, "j": j, "beta": beta} for (i, j), beta in self.nonzero()],
        }

    def to_text(self):
        array = self.as_array()
        totals = array.sum(axis=0)
        widths = [max(len(str(i)), len(str(totals[i]))) for i in range(array.shape[1])]
        lines = [
            " ".join([f"{'':>6}"] + [f"{i:>{widths[i]}}" for i in range(array.shape[1])]),
            " ".join([f"{'total:':>6}"] + [f"{totals[i]:>{widths[i]}}" for i in range(array.shape[1])]),
        ]
        for row in range(array.shape[0]):
            cells = [str(v) if v else "." for v in array[row]]
            lines.append(" ".join([f"{str(row) + ':':>6}"] + [f"{c:>{widths[i]}}" for i, c in enumerate(cells)]))
        return "\n".join(lines)


def table_from_lattice(lattice):
    entries = {}
    for mask, values in lattice.items():
        j = popcount(mask)
        for index, value in enumerate(values):
            if value:
                h = index - 1
                key = (j - h - 1, j)
                entries[key] = entries.get(key, 0) + value
    return GradedBettiTable(n=len(lattice.bits), field=lattice.field, entries=entries)


def hochster_table(complex_, field=None, cap=None, force=False, jobs=None):
    """β_{i,j}(k[Δ]) by full enumeration of restrictions"""
    return table_from_lattice(homology_lattice(complex_, field, cap=cap, force=force, jobs=jobs))


def hochster_table_direct(complex_, field=None, cap=None, force=False):
    """
    Same table, recomputing every restriction from scratch without the store.

    Kept as an independent path for cross-checking `hochster_table`.
    """
    field = field or FieldSpec()
    check_cap(complex_.vertex_count, cap, force)
    entries = {}
    for mask in submasks(complex_.universe):
        betti = reduced_betti(restriction(complex_, mask), field)
        j = popcount(mask)
        for h in betti.nonzero_degrees():
            key = (j - h - 1, j)
            entries[key] = entries.get(key, 0) + betti[h]
    return GradedBettiTable(n=complex_.vertex_count, field=field, entries=entries)


@dataclass(frozen=True)
class RegularityResult:
    reg: int
    witness_set: int
    witness_degree: int
    field: FieldSpec

    @property
    def witness_vertices(self):
        return vertices_of(self.witness_set)

    def validate(self, complex_):
        """Recompute H̃_h(Δ|_T) for the stored witness"""
        betti = reduced_betti(restriction(complex_, self.witness_set), self.field)
        return betti[self.witness_degree] != 0 and self.witness_degree + 1 == self.reg

    def as_dict(self):
        return {
            "reg": self.reg,
            "witness_set": list(self.witness_vertices),
            "witness_degree": self.witness_degree,
            "field": self.field.p,
        }


def regularity(complex_, field=None, cap=None, force=False, jobs=None):
    """
    reg(k[Δ]) computed twice: as max{j-i : β_{i,j} != 0} from the table and as
    1 + max{h : H̃_h(Δ|_T) != 0 for some T}. The two must agree.
    """
    lattice = homology_lattice(complex_, field, cap=cap, force=force, jobs=jobs)
    table = table_from_lattice(lattice)

    best = None
    for local, values in enumerate(lattice.betti):
        h = _top_degree(values)
        key = (-h, bin(local).count("1"), local)
        if best is None or key < best[0]:
            best = (key, local, h)
    _, local, h = best

    if table.regularity != h + 1:
        logger.error("Regularity mismatch for %s: table %s, restrictions %s", complex_, table.regularity, h + 1)
        raise AssertionError(f"regularity formulas disagree: {table.regularity} != {h + 1}")
    return RegularityResult(reg=h + 1, witness_set=lattice.mask_of(local), witness_degree=h, field=lattice.field)


@dataclass(frozen=True)
class TaylorSupportResult:
    passed: bool
    s: int
    violations: tuple = ()

    def __bool__(self):
        return self.passed


def taylor_support_check(table, s):
    """Every nonzero β_{i,j} with i >= 1 must satisfy j <= s*i"""
    if s < 1:
        raise BadParameters(f"generator degree must be positive, got {s}")
    violations = tuple((i, j, beta) for (i, j), beta in table.nonzero() if i >= 1 and j > s * i)
    if violations:
        logger.error("Taylor support violated at %s (s=%s)", violations, s)
    return TaylorSupportResult(passed=not violations, s=s, violations=violations)
