# homology/chains.py
"""
Reduced simplicial homology over prime fields.

Chains are oriented by ascending vertex order. Degree 0 maps onto the empty
face (augmentation), so the complex {∅} has a single nonzero reduced Betti
number in degree -1.

Usage:
    from homology.chains import FieldSpec, reduced_betti

    betti = reduced_betti(cycle_complex(5), FieldSpec(2))
    betti[1]  # -> 1
"""

import logging
from dataclasses import dataclass

import numpy as np

from core.exceptions import BadParameters
from core.utils.subsets import iter_bits
from complexes.simplicial import SimplicialComplex
from .linalg import gf2_rank, rank_over

logger = logging.getLogger(__name__)


def is_prime(p):
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True, order=True)
class FieldSpec:
    """The prime field GF(p)"""
    p: int = 2

    def __post_init__(self):
        if not is_prime(self.p):
            raise BadParameters(f"field characteristic must be prime, got {self.p}")

    @classmethod
    def parse_list(cls, text):
        """'2,3' -> [GF(2), GF(3)]"""
        try:
            return [cls(int(token)) for token in str(text).split(",") if token.strip()]
        except ValueError:
            raise BadParameters(f"cannot read prime list '{text}'") from None

    def __str__(self):
        return f"GF({self.p})"


@dataclass(frozen=True)
class BettiVector:
    """
    Reduced Betti numbers for degrees -1..dim.

    `values[0]` is the degree -1 entry; degrees outside the range read as 0.
    """
    field: FieldSpec
    values: tuple

    def __getitem__(self, degree):
        index = degree + 1
        if 0 <= index < len(self.values):
            return self.values[index]
        return 0

    @property
    def top_degree(self):
        """Largest degree with nonzero homology, or None when acyclic"""
        nonzero = self.nonzero_degrees()
        return nonzero[-1] if nonzero else None

    def nonzero_degrees(self):
        return [i - 1 for i, value in enumerate(self.values) if value]

    def euler_characteristic(self):
        return sum((-1) ** (i + 1) * value for i, value in enumerate(self.values))

    def as_dict(self):
        return {str(i - 1): value for i, value in enumerate(self.values)}

    def __str__(self):
        entries = ", ".join(f"{i - 1}:{v}" for i, v in enumerate(self.values) if v)
        return f"{self.field} {{{entries}}}"


def _face_index(faces):
    return {face: index for index, face in enumerate(faces)}


def boundary_matrix(complex_, degree, field=None):
    """
    Matrix of ∂_degree over GF(p): rows are (degree-1)-faces (∅ for degree 0),
    columns are degree-faces, entries (-1)^k mod p for deleting the k-th vertex.
    """
    field = field or FieldSpec()
    if degree < 0 or degree > complex_.dim + 1:
        raise BadParameters(f"boundary degree {degree} outside 0..{complex_.dim + 1}")
    by_dim = complex_.faces_by_dimension()
    rows = by_dim.get(degree - 1, [])
    cols = by_dim.get(degree, [])
    matrix = np.zeros((len(rows), len(cols)), dtype=np.int64)
    row_index = _face_index(rows)
    for col, face in enumerate(cols):
        for position, bit in enumerate(iter_bits(face)):
            matrix[row_index[face & ~(1 << bit)], col] = 1 if position % 2 == 0 else field.p - 1
    return matrix


def _gf2_boundary_rank(lower, upper):
    """Rank of ∂ from `upper` faces to `lower` faces, one bitset row per upper face"""
    index = _face_index(lower)
    rows = []
    for face in upper:
        row = 0
        for bit in iter_bits(face):
            row |= 1 << index[face & ~(1 << bit)]
        rows.append(row)
    return gf2_rank(rows)


def boundary_ranks(complex_, field):
    """{degree: rank ∂_degree} for degrees 0..dim"""
    by_dim = complex_.faces_by_dimension()
    ranks = {}
    for degree in range(0, complex_.dim + 1):
        if field.p == 2:
            ranks[degree] = _gf2_boundary_rank(by_dim[degree - 1], by_dim[degree])
        else:
            ranks[degree] = rank_over(boundary_matrix(complex_, degree, field), field.p)
    return ranks


def reduced_betti(complex_, field=None):
    """β̃_i = dim C_i - rank ∂_i - rank ∂_{i+1} for i = -1..dim"""
    field = field or FieldSpec()
    by_dim = complex_.faces_by_dimension()
    ranks = boundary_ranks(complex_, field)
    values = []
    for degree in range(-1, complex_.dim + 1):
        chains = len(by_dim[degree])
        values.append(chains - ranks.get(degree, 0) - ranks.get(degree + 1, 0))
    return BettiVector(field=field, values=tuple(values))


def betti_of_facets(facets, p):
    """
    Reduced Betti tuple (degree -1 first) straight from facet masks.

    Used by enumeration workers, which must not depend on Django settings.
    """
    complex_ = SimplicialComplex(n=0, facets=tuple(facets), universe=0)
    return reduced_betti(complex_, FieldSpec(p)).values


@dataclass(frozen=True)
class HomologyAudit:
    field: FieldSpec
    rank_nullity: bool
    euler: bool
    boundary_squared_zero: bool
    f_vector: tuple
    betti: BettiVector

    @property
    def passed(self):
        return self.rank_nullity and self.euler and self.boundary_squared_zero


def reduced_euler_characteristic(complex_):
    """Σ (-1)^i f_i over i = -1..dim, with f_-1 = 1"""
    return sum((-1) ** (i + 1) * f for i, f in enumerate(complex_.f_vector()))


def homology_audit(complex_, field=None):
    """Rank-nullity, Euler characteristic and ∂∘∂ = 0 for one complex"""
    field = field or FieldSpec()
    betti = reduced_betti(complex_, field)
    ranks = boundary_ranks(complex_, field)
    f_vector = complex_.f_vector()

    rank_nullity = all(
        f_vector[degree + 1] == ranks.get(degree, 0) + ranks.get(degree + 1, 0) + betti[degree]
        for degree in range(-1, complex_.dim + 1)
    )
    euler = betti.euler_characteristic() == reduced_euler_characteristic(complex_)

    squared_zero = True
    for degree in range(0, complex_.dim + 1):
        product = boundary_matrix(complex_, degree, field) @ boundary_matrix(complex_, degree + 1, field)
        if np.any(product % field.p):
            squared_zero = False
            logger.error("∂_%s∘∂_%s != 0 over %s for %s", degree, degree + 1, field, complex_)

    if not (rank_nullity and euler):
        logger.error("Homology audit failed over %s for %s", field, complex_)
    return HomologyAudit(
        field=field,
        rank_nullity=rank_nullity,
        euler=euler,
        boundary_squared_zero=squared_zero,
        f_vector=f_vector,
        betti=betti,
    )
