# complexes/graphs.py
"""
1-skeleta as networkx graphs, and the induced-cycle search behind the
flag / no-induced-cycle hypothesis of the DHS regularity bound.
"""

import logging
from dataclasses import dataclass

import networkx as nx

from core.exceptions import BadParameters
from core.utils.subsets import iter_bits

logger = logging.getLogger(__name__)


def one_skeleton(complex_):
    """
    Graph on the complex's universe whose edges are its 1-faces.

    Nodes are 1-based vertex labels; isolated vertices are kept.
    """
    graph = nx.Graph()
    graph.add_nodes_from(b + 1 for b in iter_bits(complex_.universe))
    for facet in complex_.facets:
        bits = list(iter_bits(facet))
        for i, u in enumerate(bits):
            for v in bits[i + 1:]:
                graph.add_edge(u + 1, v + 1)
    return graph


def graph_from_edges(n, edges):
    """Simple undirected graph on [n]; loops are rejected"""
    graph = nx.Graph()
    graph.add_nodes_from(range(1, n + 1))
    for u, v in edges:
        if u == v:
            raise BadParameters(f"loop at vertex {u}")
        graph.add_edge(u, v)
    return graph


@dataclass(frozen=True)
class InducedCycleSearch:
    free: bool
    max_length: int
    witness: tuple = ()

    def __bool__(self):
        return self.free


def induced_cycle_free_up_to(graph, max_length):
    """
    True iff `graph` has no chordless cycle of length m for 4 <= m <= max_length.

    Exhaustive DFS over chordless paths: each cycle is rooted at its smallest
    vertex and paths only grow through larger vertices.
    """
    if max_length < 4:
        raise BadParameters(f"cycle length bound must be at least 4, got {max_length}")

    order = sorted(graph.nodes)
    adjacency = {v: set(graph.neighbors(v)) for v in order}

    def extend(path, blocked):
        # blocked: neighbours of the interior path vertices (chords if reused)
        root, last = path[0], path[-1]
        for nxt in sorted(adjacency[last]):
            if nxt <= root or nxt in path or nxt in blocked:
                continue
            if root in adjacency[nxt]:
                if len(path) + 1 >= 4:
                    return tuple(path + [nxt])
                continue
            if len(path) + 1 < max_length:
                found = extend(path + [nxt], blocked | adjacency[last])
                if found:
                    return found
        return ()

    for root in order:
        for second in sorted(adjacency[root]):
            if second <= root:
                continue
            witness = extend([root, second], set())
            if witness:
                logger.debug("Induced %s-cycle found: %s", len(witness), witness)
                return InducedCycleSearch(free=False, max_length=max_length, witness=witness)
    return InducedCycleSearch(free=True, max_length=max_length)


def largest_induced_cycle_free_parameter(graph, cap):
    """
    Largest k <= cap such that no induced m-cycle exists for 4 <= m <= k+3,
    or 0 when there is an induced 4-cycle.
    """
    best = 0
    for k in range(1, cap + 1):
        if not induced_cycle_free_up_to(graph, k + 3):
            break
        best = k
    return best

