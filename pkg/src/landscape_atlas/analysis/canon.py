# -*- coding: utf-8 -*-
"""
src.landscape_atlas.analysis.canon.py - Landscape-Atlas
Created by NCagle
2025-02-11
      _
   __(.)<
~~~⋱___)~~~

Canonical forms of rank vectors under the hypercube automorphism group,
and classification of every rank vector of a dimension into invariant
landscape classes.

The canonical form is the lexicographically smallest rank vector in the
orbit. Class ids are positions in the sorted list of canonical forms.
"""

import logging
from math import factorial
from multiprocessing import Pool
from typing import FrozenSet, Iterable, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from landscape_atlas.analysis.hypercube import (
    Automorphism,
    action_matrix,
    action_table,
    all_automorphisms,
    require_enumerable,
)
from landscape_atlas.analysis.rankspace import (
    all_partitions,
    count_partitions,
    rank_vector_array,
)
from landscape_atlas.models.base import Partition, RankVector, check_dimension
from landscape_atlas.models.records import OrbitInfo
from landscape_atlas.utils.constants import DEFAULT_MAX_N
from landscape_atlas.utils.errors import DomainError

logger = logging.getLogger(__name__)

# Rank vectors canonicalized per numpy batch
CHUNK_ROWS = 4096

ClassEntry = Tuple[RankVector, OrbitInfo]


"""
╔═════════════════════════╗
║ Single-Vector Functions ║
╚═════════════════════════╝
"""
def transform(a: Automorphism, rv: RankVector) -> RankVector:
    """
    The landscape rv composed with a: node x gets the rank of node a(x).

    Raises:
        DomainError: a and rv belong to different dimensions
    """
    if a.n != rv.n:
        raise DomainError(f"Automorphism for n={a.n} applied to rank vector for n={rv.n}")
    return RankVector(rv.n, tuple(rv.ranks[image] for image in action_table(a)))


def _images(rv: RankVector, max_n: int) -> List[Tuple[Automorphism, RankVector]]:
    return [(a, transform(a, rv)) for a in all_automorphisms(rv.n, max_n)]


def canonicalize(rv: RankVector, max_n: int = DEFAULT_MAX_N) -> Tuple[RankVector, OrbitInfo]:
    """
    Canonical form and orbit data of a rank vector

    Arguments:
        rv (RankVector): Any rank vector
        max_n (int): Enumeration cap

    Returns:
        Tuple[RankVector, OrbitInfo]: Lexicographically smallest image, and
            (distinct images, automorphisms fixing rv)

    Raises:
        CapacityError: rv.n above max_n
    """
    images = [image for _, image in _images(rv, max_n)]
    info = OrbitInfo(
        orbit_size=len(set(images)),
        stabilizer_order=sum(1 for image in images if image == rv),
    )
    return min(images), info


def orbit(rv: RankVector, max_n: int = DEFAULT_MAX_N) -> FrozenSet[RankVector]:
    return frozenset(image for _, image in _images(rv, max_n))


def stabilizer(rv: RankVector, max_n: int = DEFAULT_MAX_N) -> List[Automorphism]:
    return [a for a, image in _images(rv, max_n) if image == rv]


def witness(
    source: RankVector,
    target: RankVector,
    max_n: int = DEFAULT_MAX_N
) -> Optional[Automorphism]:
    """
    An automorphism a with transform(a, source) == target, or None when the
    two landscapes are not invariant to each other.
    """
    if source.n != target.n:
        return None
    for a, image in _images(source, max_n):
        if image == target:
            return a
    return None


def same_class(a: RankVector, b: RankVector, max_n: int = DEFAULT_MAX_N) -> bool:
    return witness(a, b, max_n) is not None


def count_injective_classes(n: int) -> int:
    """(2**n)! rankings over 2**n * n! automorphisms, i.e. (2**n - 1)! / n!."""
    check_dimension(n)
    return factorial((1 << n) - 1) // factorial(n)


"""
╔═════════════════════╗
║ Bulk Classification ║
╚═════════════════════╝
"""
def _place_values(n: int) -> np.ndarray:
    # Base 2**n + 1, first node most significant, so integer order is
    # lexicographic order of rank vectors
    size = 1 << n
    return (size + 1) ** np.arange(size - 1, -1, -1, dtype=np.int64)


def _decode(code: int, n: int) -> Tuple[int, ...]:
    size = 1 << n
    digits = []
    for _ in range(size):
        code, digit = divmod(code, size + 1)
        digits.append(digit)
    return tuple(reversed(digits))


def canonical_codes(vectors: np.ndarray, n: int) -> np.ndarray:
    """
    Canonical code of each row of a (rows, 2**n) rank array.

    Every automorphism is applied at once by fancy indexing; the minimum
    code over the group is the code of the canonical form.
    """
    tables = action_matrix(n)
    places = _place_values(n)
    codes = np.empty(len(vectors), dtype=np.int64)
    for start in range(0, len(vectors), CHUNK_ROWS):
        chunk = vectors[start:start + CHUNK_ROWS].astype(np.int64)
        images = chunk[:, tables]                     # (rows, |G|, 2**n)
        codes[start:start + CHUNK_ROWS] = (images @ places).min(axis=1)
    return codes


def classify_partition(partition: Partition, n: int, max_n: int = DEFAULT_MAX_N) -> List[ClassEntry]:
    """
    Classes among the rank vectors of one partition.

    Automorphisms preserve ranks, so a whole orbit always lies inside one
    partition and orbit sizes are exact counts within it.
    """
    vectors = rank_vector_array(partition, n, max_n)
    codes, counts = np.unique(canonical_codes(vectors, n), return_counts=True)
    group_size = len(action_matrix(n))
    return [
        (
            RankVector(n, _decode(int(code), n)),
            OrbitInfo(orbit_size=int(count), stabilizer_order=group_size // int(count)),
        )
        for code, count in zip(codes, counts)
    ]


def _classify_job(job: Tuple[Partition, int, int]) -> List[ClassEntry]:
    return classify_partition(*job)


def classify_all(
    n: int,
    max_n: int = DEFAULT_MAX_N,
    workers: int = 1,
    progress: bool = False
) -> List[ClassEntry]:
    """
    Every invariant landscape class of dimension n

    Arguments:
        n (int): Dimension
        max_n (int): Enumeration cap
        workers (int): Processes; partitions are classified independently
        progress (bool): Show a progress bar over partitions

    Returns:
        List[Tuple[RankVector, OrbitInfo]]: Sorted by canonical form; the
            list index is the class id

    Raises:
        CapacityError: n above max_n
    """
    require_enumerable(n, max_n)
    jobs: Iterable = ((partition, n, max_n) for partition in all_partitions(n))
    bar_options = dict(total=count_partitions(n), desc=f"Classifying n={n}", disable=not progress)

    entries: List[ClassEntry] = []
    if workers > 1:
        with Pool(processes=workers) as pool:
            for found in tqdm(pool.imap(_classify_job, jobs), **bar_options):
                entries.extend(found)
    else:
        for job in tqdm(jobs, **bar_options):
            entries.extend(_classify_job(job))

    entries.sort(key=lambda entry: entry[0])
    logger.info("n=%d: %d classes", n, len(entries))
    return entries
