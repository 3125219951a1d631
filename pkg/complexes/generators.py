# complexes/generators.py
"""
Constructors for the complex families used by the verifiers: simplex
boundaries, joins and cross-polytopes, the tightness family for the
connectivity corollary, the prism complex, cycles and seeded random
complexes. Every output carries a provenance string.
"""

import logging
from dataclasses import dataclass
from functools import reduce
from itertools import combinations

import numpy as np

from core.conf import toolkit_setting
from core.exceptions import BadParameters
from .simplicial import SimplicialComplex, from_facets, join

logger = logging.getLogger(__name__)


def simplex(d):
    """The full d-simplex on d+1 vertices"""
    if d < 0:
        raise BadParameters(f"simplex dimension must be >= 0, got {d}")
    return from_facets(d + 1, [range(1, d + 2)], provenance=f"simplex:{d}")


def simplex_boundary(d):
    """∂σ^d: all d-subsets of [d+1], a (d-1)-sphere"""
    if d < 1:
        raise BadParameters(f"simplex boundary needs d >= 1, got {d}")
    faces = combinations(range(1, d + 2), d)
    return from_facets(d + 1, faces, provenance=f"simplex-boundary:{d}")


def cycle_complex(m):
    """The m-cycle as a 1-dimensional complex"""
    if m < 3:
        raise BadParameters(f"a cycle needs at least 3 vertices, got {m}")
    edges = [(i, i % m + 1) for i in range(1, m + 1)]
    return from_facets(m, edges, provenance=f"cycle:{m}")


def join_all(complexes, provenance=""):
    joined = reduce(join, complexes)
    return SimplicialComplex(n=joined.n, facets=joined.facets, universe=joined.universe, provenance=provenance)


def cross_polytope(m):
    """Boundary of the m-dimensional cross-polytope: m copies of S^0 joined"""
    if m < 1:
        raise BadParameters(f"cross-polytope needs m >= 1, got {m}")
    return join_all([simplex_boundary(1)] * m, provenance=f"cross-polytope:{m}")


def octahedron():
    return join_all([simplex_boundary(1)] * 3, provenance="octahedron")


@dataclass(frozen=True)
class NevoParameters:
    """
    The two euclidean divisions behind the tightness family:
        s*h = (s-1)*q_prime + r_prime
        ceil(s*h / (s-1)) = s*q + r
    """
    s: int
    h: int
    q_prime: int
    r_prime: int
    q: int
    r: int

    @classmethod
    def compute(cls, s, h):
        if s < 2 or h < s - 1:
            raise BadParameters(f"tightness family needs s >= 2 and h >= s-1, got s={s}, h={h}")
        q_prime, r_prime = divmod(s * h, s - 1)
        bound = -(-s * h // (s - 1))
        q, r = divmod(bound, s)
        params = cls(s=s, h=h, q_prime=q_prime, r_prime=r_prime, q=q, r=r)
        params.check()
        return params

    @property
    def bound(self):
        """ceil(s*h / (s-1))"""
        return self.s * self.q + self.r

    @property
    def vertex_count(self):
        return self.bound + 2

    def check(self):
        # The remainder r = 1 cannot occur; assert it rather than assume it.
        if self.r == 1:
            raise AssertionError(f"remainder r = 1 for s={self.s}, h={self.h}")
        if not 0 <= self.r_prime <= self.s - 2 or not 0 <= self.r <= self.s - 1:
            raise AssertionError(f"remainders out of range: {self}")
        if (self.r_prime == 0) != (self.r == 0):
            raise AssertionError(f"r' = 0 must coincide with r = 0: {self}")

    def as_dict(self):
        return {
            "s": self.s, "h": self.h, "q_prime": self.q_prime,
            "r_prime": self.r_prime, "q": self.q, "r": self.r,
        }


def nevo_complex(s, h):
    """
    A vertex minimal h-cycle on ceil(sh/(s-1)) + 2 vertices whose
    minimal nonfaces have size <= s and whose skeleton is exactly
    ceil(sh/(s-1))-connected.

    ∂σ^1 * (∂σ^{s-1})^{*q}            when r = 0
    ∂σ^1 * (∂σ^{s-1})^{*q} * ∂σ^{r-1}  when 2 <= r <= s-1
    """
    params = NevoParameters.compute(s, h)
    parts = [simplex_boundary(1)] + [simplex_boundary(s - 1)] * params.q
    if params.r >= 2:
        parts.append(simplex_boundary(params.r - 1))
    complex_ = join_all(parts, provenance=f"nevo:{s},{h}")
    logger.debug("nevo:%s,%s built with %s", s, h, params)
    return complex_, params


def prism_complex(d):
    """
    Faces are the vertex sets lying on a common face of the (d+1)-prism.

    Vertices 1..d+1 are the ring a_1..a_{d+1}, d+2..2d+2 the ring b_1..b_{d+1};
    the generators are both bases and the d+1 quadrilaterals
    {a_i, a_{i+1}, b_i, b_{i+1}} (indices cyclic).
    """
    if d < 2:
        raise BadParameters(f"prism complex needs d >= 2, got {d}")
    k = d + 1
    a = list(range(1, k + 1))
    b = list(range(k + 1, 2 * k + 1))
    faces = [a, b]
    for i in range(k):
        j = (i + 1) % k
        faces.append([a[i], a[j], b[i], b[j]])
    complex_ = from_facets(2 * k, faces, provenance=f"prism:{d}")
    if complex_.dim != d:
        logger.warning("prism:%s built literally has dimension %s, not %s", d, complex_.dim, d)
    return complex_


def random_complex(n, dim_cap, density, seed, include_vertices=True):
    """
    Seeded random complex on [n]: each face of size 2..dim_cap+1 kept
    independently with probability `density`.

    With `include_vertices` every vertex is added as a face; without it,
    vertices in no kept face are left as ghosts on the result.
    """
    cap = toolkit_setting('TOOLKIT_RANDOM_CAP')
    if n < 1 or n > cap:
        raise BadParameters(f"random complexes are limited to 1 <= n <= {cap}, got {n}")
    if not 0.0 <= density <= 1.0:
        raise BadParameters(f"density must lie in [0, 1], got {density}")

    rng = np.random.default_rng(seed)
    faces = [(v,) for v in range(1, n + 1)] if include_vertices else []
    for size in range(2, dim_cap + 2):
        candidates = list(combinations(range(1, n + 1), size))
        if not candidates:
            break
        keep = rng.random(len(candidates)) < density
        faces.extend(face for face, kept in zip(candidates, keep) if kept)
    provenance = f"random:{n},{dim_cap},{density},{seed}" + ("" if include_vertices else ",0")
    return from_facets(n, faces, provenance=provenance, strict=False)


GENERATORS = {
    "simplex": simplex,
    "simplex-boundary": simplex_boundary,
    "cycle": cycle_complex,
    "cross-polytope": cross_polytope,
    "octahedron": octahedron,
    "nevo": lambda s, h: nevo_complex(s, h)[0],
    "prism": prism_complex,
    "random": random_complex,
}
