# -*- coding: utf-8 -*-
"""
tests.test_props.py - Landscape-Atlas
Created by NCagle
2025-02-12
      _
   __(.)<
~~~⋱___)~~~

╔════════════════╗
║ Property Tests ║
╚════════════════╝
Tests for optima, traps, neutrality and plateaus.

✅ Node roles
    - Global optima, strict and weak suboptima
✅ Neutral networks
    - Neutral edges, networks, neutral degree
    - Plateaus need every node to be a local optimum
✅ Class-level checks
    - Two-dimensional table rows as a multiset
    - Invariance under every automorphism
"""
from collections import Counter

import numpy as np
import pytest

from landscape_atlas.analysis.canon import classify_all, transform
from landscape_atlas.analysis.hypercube import all_automorphisms
from landscape_atlas.analysis.props import (
    analyze,
    improving_moves,
    is_local_optimum,
    neutral_edges,
    neutral_graph,
    node_roles,
)
from landscape_atlas.analysis.rankspace import all_partitions, enumerate_rank_vectors, rank_of
from landscape_atlas.models.base import DeceptiveFlag, NodeRole, RankVector
from landscape_atlas.utils.constants import PLATEAU_TRAP_3D, STRICT_TRAP_3D
from landscape_atlas.utils.errors import CapacityError


pytestmark = pytest.mark.analysis


"""
╔════════════╗
║ Node Roles ║
╚════════════╝
"""
def test_onemax_square():
    report = analyze(RankVector(2, (3, 2, 2, 1)))
    assert report.k_ranks == 3
    assert report.global_optima == 1
    assert (report.strict_suboptima, report.weak_suboptima) == (0, 0)
    assert report.neutral_edges == 0
    assert report.deceptive_flag is DeceptiveFlag.NONE
    assert not report.neutral_flag


def test_trapped_square(trapped_square):
    report = analyze(trapped_square)
    assert report.global_optima == 1
    assert report.strict_suboptima == 1
    assert report.deceptive_flag is DeceptiveFlag.STRICT
    assert report.neutral_edges == 0
    assert report.local_optima == 2
    assert node_roles(trapped_square) == (
        NodeRole.STRICT_SUBOPTIMUM, NodeRole.OTHER, NodeRole.OTHER, NodeRole.GLOBAL_OPTIMUM,
    )


def test_improving_moves_lower_rank(trapped_square):
    moves = improving_moves(trapped_square)
    assert (1, 0) in moves and (1, 3) in moves
    assert all(trapped_square[y] < trapped_square[x] for x, y in moves)
    assert not any(x == 0 for x, _ in moves)
    assert is_local_optimum(trapped_square, 0)
    assert not is_local_optimum(trapped_square, 2)


"""
╔══════════════════╗
║ Neutral Networks ║
╚══════════════════╝
"""
def test_constant_square(constant_square):
    report = analyze(constant_square)
    assert report.global_optima == 4
    assert report.neutral_networks == 1
    assert report.optimal_plateaus == 1
    assert report.suboptimal_plateaus == 0
    assert report.neutral_node_count == 4
    assert report.neutral_edges == 4
    assert report.plateau_sizes == (4,)
    assert report.table_row() == (4, 0, 1, 1, 0, 4)


def test_weak_suboptimal_plateau():
    rv = RankVector(3, PLATEAU_TRAP_3D)
    report = analyze(rv)
    assert report.global_optima == 1
    assert (report.strict_suboptima, report.weak_suboptima) == (0, 2)
    assert report.deceptive_flag is DeceptiveFlag.WEAK
    assert report.suboptimal_plateaus == 1
    assert report.plateau_sizes == (2,)
    assert neutral_edges(rv) == [(3, 7)]


def test_strict_trap_cube():
    rv = RankVector(3, STRICT_TRAP_3D)
    report = analyze(rv)
    assert node_roles(rv)[7] is NodeRole.STRICT_SUBOPTIMUM
    assert report.strict_suboptima == 1
    assert report.deceptive_flag is DeceptiveFlag.STRICT
    assert not report.neutral_flag
    assert not report.plateau_flag


def test_neutral_network_with_exit_is_not_a_plateau():
    # 01 and 11 share rank 2; 01 can still improve to 00
    rv = RankVector(2, (1, 2, 3, 2))
    report = analyze(rv)
    assert report.neutral_networks == 1
    assert report.neutral_node_count == 2
    assert not report.plateau_flag
    assert report.weak_suboptima == 1


def test_neutral_graph_only_holds_touched_nodes():
    graph = neutral_graph(RankVector(2, (1, 2, 3, 2)))
    assert set(graph.nodes) == {1, 3}


def test_analyze_capacity():
    with pytest.raises(CapacityError):
        analyze(RankVector(4, tuple(range(1, 17))))


"""
╔════════════════════╗
║ Class-Level Checks ║
╚════════════════════╝
"""
def test_two_dimensional_rows_match_reference(reference_2d):
    rows = [analyze(form).table_row() for form, _ in classify_all(2)]
    assert Counter(rows) == Counter(reference_2d["properties"])


def test_two_dimensional_plateaus_never_deceptive():
    for form, _ in classify_all(2):
        report = analyze(form)
        assert not (report.plateau_flag and report.deceptive)


@pytest.mark.parametrize("n", [1, 2])
def test_properties_invariant_exhaustive(n):
    group = all_automorphisms(n)
    for partition in all_partitions(n):
        for rv in enumerate_rank_vectors(partition, n):
            report = analyze(rv)
            assert all(analyze(transform(a, rv)) == report for a in group)


def test_properties_invariant_sampled_three_dimensional():
    rng = np.random.default_rng(11)
    group = all_automorphisms(3)
    for _ in range(100):
        rv = rank_of(rng.integers(0, 5, size=8).tolist(), 3)
        report = analyze(rv)
        for index in rng.choice(len(group), size=5, replace=False):
            assert analyze(transform(group[int(index)], rv)) == report
