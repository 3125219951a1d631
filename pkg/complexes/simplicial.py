# complexes/simplicial.py
"""
Simplicial complexes on the vertex set [n], stored as their facets.

Faces are never stored: every face query enumerates subsets of facets. Vertex
sets are bitmasks (see core.utils.subsets); labels are 1-based at the API.

Usage:
    from complexes.simplicial import from_facets, restriction, join

    square = from_facets(4, [{1, 2}, {2, 3}, {3, 4}, {1, 4}])
    path = restriction(square, mask_of([1, 2, 3]))
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from core.exceptions import BadParameters, EmptyInput, FullSimplex, GhostVertex, RidgeDegreesUndefined
from core.utils.subsets import full_mask, iter_bits, mask_of, popcount, submasks, vertices_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimplicialComplex:
    """
    A finite simplicial complex given by its facets.

    `universe` is the vertex set the complex lives on: [n] for a normalized
    complex, T for a restriction Δ|_T. A complex with no facets is {∅}.
    """
    n: int
    facets: tuple
    universe: int
    provenance: str = field(default="", compare=False)
    ghosts: tuple = field(default=(), compare=False)

    @property
    def dim(self):
        if not self.facets:
            return -1
        return max(popcount(f) for f in self.facets) - 1

    @property
    def vertex_count(self):
        return popcount(self.universe)

    @property
    def vertices(self):
        return vertices_of(self.universe)

    @property
    def is_void(self):
        """True for the complex {∅}, e.g. the restriction to the empty set"""
        return not self.facets

    def facet_sets(self):
        """Facets as tuples of 1-based labels"""
        return [vertices_of(f) for f in self.facets]

    def contains(self, face_mask):
        return any(face_mask & facet == face_mask for facet in self.facets)

    def faces(self):
        """Every face (including ∅) as a set of masks"""
        found = {0}
        for facet in self.facets:
            found.update(submasks(facet))
        return found

    def faces_by_dimension(self):
        """Map dimension -> sorted list of face masks, for dimensions -1..dim"""
        by_dim = {d: [] for d in range(-1, self.dim + 1)}
        for face in self.faces():
            by_dim[popcount(face) - 1].append(face)
        for faces in by_dim.values():
            faces.sort()
        return by_dim

    def f_vector(self):
        """(f_-1, f_0, ..., f_dim)"""
        return tuple(len(faces) for _, faces in sorted(self.faces_by_dimension().items()))

    def __str__(self):
        label = self.provenance or "complex"
        return f"{label} (n={self.vertex_count}, dim={self.dim}, facets={len(self.facets)})"


def maximal_faces(masks):
    """Inclusion-maximal masks, deduplicated, in ascending vertex order"""
    kept = []
    for mask in sorted(set(masks), key=popcount, reverse=True):
        if not any(mask & other == mask for other in kept):
            kept.append(mask)
    return tuple(sorted(kept, key=vertices_of))


def from_facets(n, faces, provenance="", strict=True):
    """
    Build the complex on [n] generated by `faces` (iterables of 1-based labels).

    Non-maximal and repeated faces are dropped. Vertices of [n] lying in no
    face raise GhostVertex when `strict`; otherwise they are logged and kept
    on `ghosts` so the caller can renumber (see `drop_ghosts`).
    """
    faces = [tuple(face) for face in faces]
    if not faces:
        raise EmptyInput("no faces given")
    if n < 1:
        raise BadParameters(f"vertex count must be positive, got {n}")

    masks = []
    for face in faces:
        if any(v < 1 or v > n for v in face):
            raise BadParameters(f"face {face} is not contained in [1..{n}]")
        masks.append(mask_of(face))

    facets = maximal_faces(masks)
    used = 0
    for facet in facets:
        used |= facet
    ghosts = vertices_of(full_mask(n) & ~used)
    if ghosts:
        if strict:
            raise GhostVertex(ghosts)
        logger.warning("Complex %s has ghost vertices %s", provenance or "<input>", ghosts)

    return SimplicialComplex(n=n, facets=facets, universe=full_mask(n), provenance=provenance, ghosts=ghosts)


def drop_ghosts(complex_):
    """Renumber vertices densely so that every vertex lies in some facet"""
    used = sorted(set(v for facet in complex_.facet_sets() for v in facet))
    relabel = {old: new for new, old in enumerate(used, start=1)}
    faces = [[relabel[v] for v in facet] for facet in complex_.facet_sets()]
    return from_facets(len(used), faces, provenance=complex_.provenance)


def restriction(complex_, subset):
    """
    Δ|_T: the faces of Δ contained in T.

    The result lives on universe T; restricting to the empty set gives {∅}.
    """
    if subset & ~complex_.universe:
        raise BadParameters("restriction set is not contained in the vertex universe")
    facets = maximal_faces(facet & subset for facet in complex_.facets)
    facets = tuple(f for f in facets if f)
    return SimplicialComplex(
        n=complex_.n,
        facets=facets,
        universe=subset,
        provenance=f"{complex_.provenance}|{list(vertices_of(subset))}" if complex_.provenance else "",
    )


def join(left, right):
    """
    Simplicial join Δ1 * Δ2; Δ2's vertices are shifted by n1.

    Both operands must be normalized (universe = [n]).
    """
    left_facets = left.facets or (0,)
    right_facets = right.facets or (0,)
    facets = maximal_faces(f1 | (f2 << left.n) for f1 in left_facets for f2 in right_facets)
    n = left.n + right.n
    provenance = f"{left.provenance or 'complex'} * {right.provenance or 'complex'}"
    return SimplicialComplex(n=n, facets=tuple(f for f in facets if f), universe=full_mask(n), provenance=provenance)


def minimal_nonfaces(complex_):
    """
    Inclusion-minimal subsets of the universe that are not faces.

    These are the supports of the minimal monomial generators of the
    Stanley-Reisner ideal. Raises FullSimplex when there are none.
    """
    faces = complex_.faces()
    universe_bits = list(iter_bits(complex_.universe))
    found = [1 << b for b in universe_bits if (1 << b) not in faces]

    # A nonface of size k is minimal iff all of its (k-1)-subsets are faces,
    # so candidates are faces extended by one larger vertex.
    level = sorted(f for f in faces if popcount(f) == 1)
    while level:
        next_level = []
        for face in level:
            top = face.bit_length() - 1
            for bit in universe_bits:
                if bit <= top:
                    continue
                candidate = face | (1 << bit)
                if candidate in faces:
                    next_level.append(candidate)
                elif all(candidate & ~(1 << b) in faces for b in iter_bits(candidate)):
                    found.append(candidate)
        level = next_level

    if not found:
        raise FullSimplex(f"{complex_} is a full simplex; its Stanley-Reisner ideal is zero")
    return sorted(set(found), key=lambda m: (popcount(m), vertices_of(m)))


def generator_degree(complex_):
    """s: the largest cardinality of a minimal nonface"""
    return max(popcount(m) for m in minimal_nonfaces(complex_))


def stanley_reisner_generators(complex_):
    """Minimal monomial generators of I_Δ, e.g. ['x1*x3', 'x2*x4']"""
    return ["*".join(f"x{v}" for v in vertices_of(m)) for m in minimal_nonfaces(complex_)]


@dataclass(frozen=True)
class ComplexPredicates:
    dim: int
    is_pure: bool
    is_flag: bool
    is_strongly_connected: bool
    ridge_degrees: Counter = None
    is_pseudomanifold: bool = False
    notes: tuple = ()

    @property
    def ridge_degree_values(self):
        return sorted(self.ridge_degrees) if self.ridge_degrees is not None else None


def ridge_degrees(complex_):
    """Counter {number of facets containing the ridge: number of such ridges}"""
    d = complex_.dim
    if len({popcount(f) for f in complex_.facets}) > 1:
        raise RidgeDegreesUndefined(f"{complex_} is not pure")
    containment = Counter()
    for facet in complex_.facets:
        for bit in iter_bits(facet):
            containment[facet & ~(1 << bit)] += 1
    if d < 0:
        return Counter()
    return Counter(containment.values())


def facet_dual_graph(complex_):
    """Facets adjacent when they share a face of dimension dim-1"""
    d = complex_.dim
    graph = nx.Graph()
    graph.add_nodes_from(complex_.facets)
    for f1, f2 in combinations(complex_.facets, 2):
        if popcount(f1) == popcount(f2) == d + 1 and popcount(f1 & f2) == d:
            graph.add_edge(f1, f2)
    return graph


def predicates(complex_):
    """Structural predicates behind the pseudomanifold and flag hypotheses"""
    notes = []
    is_pure = len({popcount(f) for f in complex_.facets}) <= 1

    try:
        is_flag = all(popcount(m) == 2 for m in minimal_nonfaces(complex_))
    except FullSimplex:
        is_flag = True

    dual = facet_dual_graph(complex_)
    is_strongly_connected = dual.number_of_nodes() <= 1 or nx.is_connected(dual)

    try:
        degrees = ridge_degrees(complex_)
    except RidgeDegreesUndefined as exc:
        degrees = None
        notes.append(str(exc))

    is_pseudomanifold = (
        is_pure
        and is_strongly_connected
        and degrees is not None
        and set(degrees) == {2}
    )
    return ComplexPredicates(
        dim=complex_.dim,
        is_pure=is_pure,
        is_flag=is_flag,
        is_strongly_connected=is_strongly_connected,
        ridge_degrees=degrees,
        is_pseudomanifold=is_pseudomanifold,
        notes=tuple(notes),
    )


def clique_complex(graph, n):
    """Flag complex of `graph` on [n]: facets are the maximal cliques"""
    cliques = [sorted(c) for c in nx.find_cliques(graph)] if graph.number_of_nodes() else []
    return from_facets(n, cliques, provenance="clique complex", strict=False)
