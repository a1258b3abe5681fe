# -*- coding: utf-8 -*-
"""
tests.test_atlas_build_lookup.py - Landscape-Atlas
Created by NCagle
2025-02-17
      _
   __(.)<
~~~⋱___)~~~

╔════════════════════════════╗
║ Atlas Build & Lookup Tests ║
╚════════════════════════════╝
Tests for building the inventory and finding the class of a landscape.

✅ Building
    - Record counts and ranking totals per dimension
    - Rebuilding a dimension replaces it
    - Worker pool gives the same atlas
    - Capacity cap
✅ Lookup
    - Equivalent fitness tables share a record
    - Lookup is invariant under every automorphism
    - Missing dimensions and bad inputs
✅ Signatures
"""
import pytest

from landscape_atlas.analysis.canon import transform
from landscape_atlas.analysis.hypercube import all_automorphisms
from landscape_atlas.analysis.rankspace import count_rankings, rank_of
from landscape_atlas.atlas.manager import AtlasManager
from landscape_atlas.config import Settings
from landscape_atlas.utils.constants import CLASS_COUNTS, INJECTIVE_CLASS_COUNTS
from landscape_atlas.utils.errors import CapacityError, DomainError, NotFoundError


pytestmark = pytest.mark.atlas

F1 = [4.0, 1.0, 9.0, 3.0]
F4 = [7.0, 3.0, 2.9, 2.0]
F5 = [3.0, 3.0, 7.0, 2.0]


"""
╔══════════╗
║ Building ║
╚══════════╝
"""
def test_build_one_dimensional(atlas_1d):
    records = atlas_1d.atlas.records_for(1)
    assert len(records) == 2
    assert [r.canonical_ranks.ranks for r in records] == [(1, 1), (1, 2)]


def test_build_two_dimensional(atlas_2d):
    records = atlas_2d.atlas.records_for(2)
    assert len(records) == CLASS_COUNTS[2]
    assert sum(r.orbit_size for r in records) == 75
    assert [r.class_id for r in records] == list(range(14))
    assert records[0].tags == ("constant", "boolean", "neutral", "plateau")
    assert atlas_2d.totals() == {2: {"classes": 14, "rankings": 75}}


def test_build_records_are_consistent(atlas_2d):
    for record in atlas_2d.atlas:
        assert record.partition.total == 4
        assert record.orbit_size * record.stabilizer_order == 8
        assert record.properties.k_ranks == record.k


def test_rebuild_replaces_dimension(settings):
    manager = AtlasManager(settings)
    manager.build(1)
    manager.build(2)
    manager.build(2)
    assert manager.atlas.dimensions == (1, 2)
    assert len(manager.atlas) == 2 + 14
    assert "n2" in manager.atlas.params


def test_build_all_covers_each_dimension(settings):
    manager = AtlasManager(settings)
    atlas = manager.build_all([1, 2])
    assert atlas is manager.atlas
    assert atlas.dimensions == (1, 2)
    assert manager.totals() == {1: {"classes": 2, "rankings": 3}, 2: {"classes": 14, "rankings": 75}}

def test_worker_pool_matches_serial(atlas_2d, settings):
    manager = AtlasManager(Settings(progress=False, workers=2))
    manager.build(2)
    assert manager.atlas.records == atlas_2d.atlas.records


def test_build_capacity(settings):
    with pytest.raises(CapacityError):
        AtlasManager(settings).build(4)


@pytest.mark.slow
def test_build_three_dimensional(atlas_3d):
    records = atlas_3d.atlas.records_for(3)
    assert len(records) == CLASS_COUNTS[3]
    assert sum(r.orbit_size for r in records) == count_rankings(3).total
    assert sum(1 for r in records if "injective" in r.tags) == INJECTIVE_CLASS_COUNTS[3]


"""
╔════════╗
║ Lookup ║
╚════════╝
"""
def test_equivalent_tables_share_a_record(atlas_2d):
    record = atlas_2d.lookup(F1)
    assert atlas_2d.lookup(F4) is record
    assert atlas_2d.lookup(F1, n=2) is record
    assert record.canonical_ranks.is_injective


def test_different_class_for_tied_table(atlas_2d):
    record = atlas_2d.lookup(F5)
    assert record is not atlas_2d.lookup(F1)
    assert record.k == 3


def test_constant_table(atlas_2d):
    assert atlas_2d.lookup([5.0] * 4).properties.global_optima == 4


def test_lookup_invariant_under_automorphisms(atlas_2d):
    rv = rank_of([0.5, 2.0, 2.0, -1.0], 2)
    record = atlas_2d.lookup_rank_vector(rv)
    for a in all_automorphisms(2):
        assert atlas_2d.lookup_rank_vector(transform(a, rv)) is record


def test_lookup_with_tie_tolerance(atlas_2d):
    manager = AtlasManager(Settings(progress=False, tie_epsilon=0.01), atlas_2d.atlas)
    assert manager.lookup([1.0, 1.001, 2.0, 3.0]).k == 3
    assert atlas_2d.lookup([1.0, 1.001, 2.0, 3.0]).k == 4


def test_lookup_missing_dimension(atlas_2d):
    with pytest.raises(NotFoundError):
        atlas_2d.lookup([1.0] * 8)


@pytest.mark.parametrize("fitness", [[1.0, 2.0, 3.0], [1.0], [1.0, float("nan"), 2.0, 3.0]])
def test_lookup_bad_input(atlas_2d, fitness):
    with pytest.raises(DomainError):
        atlas_2d.lookup(fitness)


def test_lookup_length_disagrees_with_n(atlas_2d):
    with pytest.raises(DomainError):
        atlas_2d.lookup(F1, n=3)


def test_get(atlas_2d):
    assert atlas_2d.get(2, 0).canonical_ranks.ranks == (1, 1, 1, 1)
    with pytest.raises(NotFoundError):
        atlas_2d.get(2, 14)
    with pytest.raises(NotFoundError):
        atlas_2d.get(3, 0)


"""
╔════════════╗
║ Signatures ║
╚════════════╝
"""
def test_find_by_signature(atlas_2d):
    for record in atlas_2d.atlas:
        assert record in atlas_2d.find_by_signature(record.signature(), n=2)
    assert atlas_2d.find_by_signature(("no", "such", "class")) == []


def test_signature_collisions_are_groups_of_ids(atlas_2d):
    for signature, ids in atlas_2d.signature_collisions(2).items():
        assert len(ids) > 1
        assert all(atlas_2d.get(2, i).signature() == signature for i in ids)
