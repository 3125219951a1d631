# connectivity/separators.py
"""
Vertex connectivity of 1-skeleta.

A graph is m-connected when it has more than m vertices and deleting fewer
than m vertices leaves it connected. kappa is the largest such m: for K_n it
is n-1 with an empty separator, otherwise the size of a minimum vertex set
whose removal leaves a disconnected graph on at least two vertices.
"""

import logging
from dataclasses import dataclass
from itertools import combinations

import networkx as nx
from networkx.algorithms.connectivity import build_auxiliary_node_connectivity, minimum_st_node_cut
from networkx.algorithms.flow import build_residual_network, edmonds_karp

from core.conf import toolkit_setting
from core.exceptions import CapExceeded, TooSmall
from core.utils.subsets import check_cap, iter_bits, map_chunks, popcount, submasks
from complexes.graphs import one_skeleton

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConnectivityResult:
    kappa: int
    min_separator: frozenset = frozenset()

    def as_dict(self):
        return {"kappa": self.kappa, "min_separator": sorted(self.min_separator)}


def _is_complete(graph):
    n = graph.number_of_nodes()
    return graph.number_of_edges() == n * (n - 1) // 2


def _cut_block(payload, start, stop):
    """Smallest s-t vertex cut among nonadjacent pairs[start:stop]"""
    graph, pairs = payload
    auxiliary = build_auxiliary_node_connectivity(graph)
    residual = build_residual_network(auxiliary, "capacity")
    best = None
    for source, target in pairs[start:stop]:
        cut = minimum_st_node_cut(
            graph, source, target,
            flow_func=edmonds_karp, auxiliary=auxiliary, residual=residual,
        )
        if best is None or len(cut) < len(best):
            best = cut
    return best


def vertex_connectivity(graph, jobs=None):
    """
    kappa and one minimum separator, by vertex-split max-flow (Menger) over
    every nonadjacent pair; pair blocks may run in parallel, the minimum is
    taken in pair order.
    """
    n = graph.number_of_nodes()
    if n < 2:
        raise TooSmall(f"vertex connectivity needs at least 2 vertices, got {n}")
    if _is_complete(graph):
        return ConnectivityResult(kappa=n - 1)
    if not nx.is_connected(graph):
        return ConnectivityResult(kappa=0)

    nodes = sorted(graph.nodes)
    pairs = [(u, v) for u, v in combinations(nodes, 2) if not graph.has_edge(u, v)]
    jobs = max(1, toolkit_setting('TOOLKIT_JOBS', jobs))
    # one block per worker, rounded up to a power of two
    per_worker = -(-len(pairs) // jobs)
    chunk_bits = (per_worker - 1).bit_length()
    cuts = map_chunks(_cut_block, len(pairs), (graph, pairs), jobs=jobs, chunk_bits=chunk_bits)
    best = None
    for cut in cuts:
        if cut is not None and (best is None or len(cut) < len(best)):
            best = cut
    return ConnectivityResult(kappa=len(best), min_separator=frozenset(best))


def _disconnected_after(graph, removed):
    survivors = [v for v in graph.nodes if v not in removed]
    if len(survivors) < 2:
        return False
    return not nx.is_connected(graph.subgraph(survivors))


def vertex_connectivity_bruteforce(graph, cap=None):
    """Same contract as vertex_connectivity, by ascending-size subset search"""
    cap = toolkit_setting('TOOLKIT_BRUTEFORCE_CAP', cap)
    n = graph.number_of_nodes()
    if n < 2:
        raise TooSmall(f"vertex connectivity needs at least 2 vertices, got {n}")
    if n > cap:
        raise CapExceeded(n, cap)
    nodes = sorted(graph.nodes)
    for size in range(0, n - 1):
        for removed in combinations(nodes, size):
            if _disconnected_after(graph, set(removed)):
                return ConnectivityResult(kappa=size, min_separator=frozenset(removed))
    return ConnectivityResult(kappa=n - 1)


def separates(graph, separator):
    """True when deleting `separator` leaves a disconnected graph on >= 2 vertices"""
    return _disconnected_after(graph, set(separator))


def _adjacency_masks(graph):
    adjacency = {}
    for v in graph.nodes:
        mask = 0
        for u in graph.neighbors(v):
            mask |= 1 << (u - 1)
        adjacency[v - 1] = mask
    return adjacency


def _restriction_disconnected(mask, adjacency):
    """Flood fill from the lowest vertex inside `mask`"""
    reached = mask & -mask
    frontier = reached
    while frontier:
        grown = 0
        for bit in iter_bits(frontier):
            grown |= adjacency[bit]
        grown &= mask & ~reached
        reached |= grown
        frontier = grown
    return reached != mask


def disconnecting_subsets(complex_, size_cap=None, cap=None, force=False):
    """
    Yield, in ascending mask order, every T with |T| >= 2 whose restriction
    Δ|_T has a disconnected 1-skeleton (isolated vertices count).
    """
    check_cap(complex_.vertex_count, cap, force)
    adjacency = _adjacency_masks(one_skeleton(complex_))
    for mask in submasks(complex_.universe):
        size = popcount(mask)
        if size < 2 or (size_cap is not None and size > size_cap):
            continue
        if _restriction_disconnected(mask, adjacency):
            yield mask
