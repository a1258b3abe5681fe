# -*- coding: utf-8 -*-
"""
src.landscape_atlas.analysis.props.py - Landscape-Atlas
Created by NCagle
2025-02-12
      _
   __(.)<
~~~⋱___)~~~

Topological properties of a rank landscape: optima, suboptima (traps),
neutral edges, neutral networks and plateaus.

A node is a local optimum when no neighbor has a strictly smaller rank.
A non-global local optimum is a strict suboptimum when every neighbor is
strictly worse, and a weak suboptimum when some neighbor ties with it.
"""

import logging
from typing import List, Tuple

import networkx as nx

from landscape_atlas.analysis.hypercube import edges, neighbors, require_enumerable
from landscape_atlas.models.base import DeceptiveFlag, NodeRole, RankVector
from landscape_atlas.models.records import PropertyReport
from landscape_atlas.utils.constants import DEFAULT_MAX_N

logger = logging.getLogger(__name__)


def is_local_optimum(rv: RankVector, x: int) -> bool:
    return all(rv[y] >= rv[x] for y in neighbors(x, rv.n))


def node_roles(rv: RankVector) -> Tuple[NodeRole, ...]:
    """Role of every node, indexed by node."""
    roles = []
    for x in range(rv.size):
        if rv[x] == 1:
            roles.append(NodeRole.GLOBAL_OPTIMUM)
        elif not is_local_optimum(rv, x):
            roles.append(NodeRole.OTHER)
        elif any(rv[y] == rv[x] for y in neighbors(x, rv.n)):
            roles.append(NodeRole.WEAK_SUBOPTIMUM)
        else:
            roles.append(NodeRole.STRICT_SUBOPTIMUM)
    return tuple(roles)


def improving_moves(rv: RankVector) -> List[Tuple[int, int]]:
    """Directed moves (x, y) to a neighbor y with a strictly smaller rank."""
    return [
        (x, y)
        for x in range(rv.size)
        for y in neighbors(x, rv.n)
        if rv[y] < rv[x]
    ]


def neutral_edges(rv: RankVector) -> List[Tuple[int, int]]:
    """Undirected edges (x, y), x < y, joining nodes of equal rank."""
    return [(x, y) for x, y in edges(rv.n) if rv[x] == rv[y]]


def neutral_graph(rv: RankVector) -> nx.Graph:
    """Subgraph of neutral edges; only nodes touching one are present."""
    graph = nx.Graph()
    graph.add_edges_from(neutral_edges(rv))
    return graph


def analyze(rv: RankVector, max_n: int = DEFAULT_MAX_N) -> PropertyReport:
    """
    Property report of one rank landscape

    Arguments:
        rv (RankVector): Landscape to analyze
        max_n (int): Enumeration cap

    Returns:
        PropertyReport: Optima, trap, neutrality and plateau counts

    Raises:
        CapacityError: rv.n above max_n
    """
    require_enumerable(rv.n, max_n)
    roles = node_roles(rv)
    strict = roles.count(NodeRole.STRICT_SUBOPTIMUM)
    weak = roles.count(NodeRole.WEAK_SUBOPTIMUM)
    global_optima = roles.count(NodeRole.GLOBAL_OPTIMUM)

    graph = neutral_graph(rv)
    networks = [sorted(component) for component in nx.connected_components(graph)]

    optimal_plateaus = suboptimal_plateaus = 0
    plateau_sizes = []
    for nodes in networks:
        if not all(is_local_optimum(rv, x) for x in nodes):
            continue
        plateau_sizes.append(len(nodes))
        if rv[nodes[0]] == 1:
            optimal_plateaus += 1
        else:
            suboptimal_plateaus += 1

    if strict:
        deceptive_flag = DeceptiveFlag.STRICT
    elif weak:
        deceptive_flag = DeceptiveFlag.WEAK
    else:
        deceptive_flag = DeceptiveFlag.NONE

    return PropertyReport(
        k_ranks=rv.k,
        global_optima=global_optima,
        strict_suboptima=strict,
        weak_suboptima=weak,
        neutral_edges=graph.number_of_edges(),
        neutral_node_count=graph.number_of_nodes(),
        neutral_networks=len(networks),
        optimal_plateaus=optimal_plateaus,
        suboptimal_plateaus=suboptimal_plateaus,
        deceptive_flag=deceptive_flag,
        neutral_flag=graph.number_of_edges() > 0,
        plateau_flag=bool(plateau_sizes),
        local_optima=global_optima + strict + weak,
        plateau_sizes=tuple(sorted(plateau_sizes)),
    )
