# -*- coding: utf-8 -*-
"""
tests.test_hypercube.py - Landscape-Atlas
Created by NCagle
2025-02-08
      _
   __(.)<
~~~⋱___)~~~

╔═════════════════╗
║ Hypercube Tests ║
╚═════════════════╝
Tests for nodes, neighborhoods and the automorphism group.

✅ Neighborhoods
    - n neighbors at Hamming distance 1, symmetric
    - Invalid nodes rejected
✅ Automorphisms
    - Published translation and rotation table entries
    - Group size, identity, closure under composition and inverse
    - Adjacency preservation, no duplicate action tables
    - Capacity cap
"""
from itertools import product

import pytest

from landscape_atlas.analysis.hypercube import (
    Automorphism,
    action_matrix,
    action_table,
    all_automorphisms,
    apply,
    compose,
    edges,
    from_bits,
    hamming_distance,
    hypercube_graph,
    identity,
    inverse,
    neighbors,
    to_bits,
)
from landscape_atlas.utils.errors import CapacityError, DomainError


pytestmark = pytest.mark.analysis


def _bits(text: str) -> int:
    return from_bits(text)


"""
╔═══════════════╗
║ Neighborhoods ║
╚═══════════════╝
"""
@pytest.mark.parametrize("x, n, expected", [
    ("00", 2, {"01", "10"}),
    ("000", 3, {"001", "010", "100"}),
    ("111", 3, {"110", "101", "011"}),
])
def test_neighbors(x, n, expected):
    assert {to_bits(y, n) for y in neighbors(_bits(x), n)} == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_neighbors_symmetric_and_distance_one(n):
    for x in range(1 << n):
        found = neighbors(x, n)
        assert len(found) == n
        for y in found:
            assert hamming_distance(x, y) == 1
            assert x in neighbors(y, n)


@pytest.mark.parametrize("x", [-1, 4, 2.0])
def test_neighbors_reject_invalid_nodes(x):
    with pytest.raises(DomainError):
        neighbors(x, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_edge_count(n):
    assert len(edges(n)) == n * 2 ** (n - 1)
    graph = hypercube_graph(n)
    assert graph.number_of_nodes() == 2 ** n
    assert graph.number_of_edges() == n * 2 ** (n - 1)


def test_bit_rendering_lsb_rightmost():
    assert to_bits(1, 3) == "001"
    assert to_bits(6, 3) == "110"
    assert from_bits("011") == 3
    with pytest.raises(DomainError):
        from_bits("012")


"""
╔═══════════════╗
║ Automorphisms ║
╚═══════════════╝
"""
@pytest.mark.parametrize("z, sigma, x, expected", [
    ("10", "", "00", "10"),        # translation
    ("00", "10", "01", "10"),      # swap rotation
    ("010", "", "000", "010"),     # flip the second bit
])
def test_apply_examples(z, sigma, x, expected):
    a = Automorphism.from_strings(z, sigma)
    assert to_bits(apply(a, _bits(x)), len(z)) == expected


@pytest.mark.parametrize("sigma, mapping", [
    ("120", {"001": "100", "010": "001", "100": "010"}),
    ("201", {"001": "010", "010": "100", "100": "001"}),
    ("021", {"001": "001", "010": "100", "100": "010"}),
])
def test_three_dimensional_rotation_table(sigma, mapping):
    a = Automorphism.from_strings("000", sigma)
    for source, image in mapping.items():
        assert to_bits(apply(a, _bits(source)), 3) == image


@pytest.mark.parametrize("n, size", [(1, 2), (2, 8), (3, 48)])
def test_group_size_and_identity(n, size):
    group = all_automorphisms(n)
    assert len(group) == size
    assert group[0] == identity(n)
    assert len({a.action_table for a in group}) == size


@pytest.mark.parametrize("n", [1, 2, 3])
def test_group_closed_under_compose_and_inverse(n):
    group = all_automorphisms(n)
    tables = {a.action_table for a in group}
    for a, b in product(group, repeat=2):
        ab = compose(a, b)
        assert ab.action_table in tables
        for x in range(1 << n):
            assert apply(ab, x) == apply(a, apply(b, x))
    for a in group:
        assert compose(a, inverse(a)).is_identity
        assert compose(inverse(a), a).is_identity
        assert compose(identity(n), a) == a


def test_compose_of_two_swapped_translations_is_identity():
    a = Automorphism.from_strings("10", "10")
    b = Automorphism.from_strings("01", "10")
    composed = compose(a, b)
    assert composed.sigma == (0, 1)
    for x in range(4):
        assert apply(composed, x) == apply(a, apply(b, x))
    assert composed.is_identity


@pytest.mark.parametrize("n", [1, 2, 3])
def test_automorphisms_preserve_adjacency(n):
    edge_set = set(edges(n))
    for a in all_automorphisms(n):
        for x, y in edge_set:
            image = tuple(sorted((apply(a, x), apply(a, y))))
            assert image in edge_set


def test_compose_dimension_mismatch():
    with pytest.raises(DomainError):
        compose(identity(2), identity(3))


def test_capacity_cap():
    with pytest.raises(CapacityError):
        all_automorphisms(4)
    assert len(all_automorphisms(4, max_n=4)) == 384


def test_action_matrix_rows_match_group():
    matrix = action_matrix(3)
    assert matrix.shape == (48, 8)
    for row, a in zip(matrix, all_automorphisms(3)):
        assert tuple(int(v) for v in row) == a.action_table


def test_action_table_lists_images_in_node_order():
    a = Automorphism.from_strings("01", "10")
    assert action_table(a) == a.action_table == tuple(apply(a, x) for x in range(4))

