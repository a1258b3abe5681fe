# -*- coding: utf-8 -*-
"""
src.landscape_atlas.analysis.rankspace.py - Landscape-Atlas
Created by NCagle
2025-02-09
      _
   __(.)<
~~~⋱___)~~~

Rank vectors, partitions of the 2**n nodes into rank levels, enumeration
of every rank-invariant function class, and exact counting for any n.

All counts are Python integers, so nothing overflows for large n.

Example Usage:
rank_of([4.0, 1.0, 9.0, 3.0], 2)             # -> RankVector CADB
[str(p) for p in enumerate_partitions(2, 3)]  # -> ['(2,1,1)', '(1,2,1)', '(1,1,2)']
count_rankings(3).total                       # -> 545835
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from landscape_atlas.analysis.hypercube import require_enumerable
from landscape_atlas.models.base import Partition, RankVector, check_dimension
from landscape_atlas.utils.constants import DEFAULT_MAX_N, RANK_LETTERS
from landscape_atlas.utils.errors import DomainError

logger = logging.getLogger(__name__)


"""
╔════════════════╗
║ Rank Functions ║
╚════════════════╝
"""
def quantize(fitness: Sequence[float], epsilon: float) -> List[float]:
    """
    Round every value to the nearest multiple of epsilon so that values
    closer than the tolerance share a rank. epsilon = 0 leaves values as-is.
    """
    if epsilon < 0:
        raise DomainError(f"epsilon must be >= 0, got {epsilon}")
    if epsilon == 0:
        return [float(f) for f in fitness]
    try:
        return [round(float(f) / epsilon) * epsilon for f in fitness]
    except (OverflowError, ValueError) as e:
        raise DomainError(f"epsilon {epsilon} cannot quantize these values: {e}") from e


def rank_of(
    fitness: Sequence[float],
    n: int,
    tie_epsilon: float = 0.0
) -> RankVector:
    """
    Rank vector of a fitness table under minimization

    Arguments:
        fitness (Sequence[float]): 2**n values, entry i belongs to node i
        n (int): Dimension
        tie_epsilon (float): Pre-rounding tolerance, see quantize

    Returns:
        RankVector: Entry i is 1 + the number of distinct values below fitness[i]

    Raises:
        DomainError: Wrong length or a non-finite value
    """
    check_dimension(n)
    values = list(fitness)
    if len(values) != 1 << n:
        raise DomainError(f"Expected {1 << n} fitness values for n={n}, got {len(values)}")
    try:
        values = [float(v) for v in values]
    except (TypeError, ValueError) as e:
        raise DomainError(f"Fitness values must be numbers: {e}") from e
    if not all(math.isfinite(v) for v in values):
        raise DomainError(f"Fitness values must be finite: {values}")

    values = quantize(values, tie_epsilon)
    levels = {value: rank for rank, value in enumerate(sorted(set(values)), start=1)}
    return RankVector(n, tuple(levels[v] for v in values))


def is_rank_invariant(
    fitness_a: Sequence[float],
    fitness_b: Sequence[float],
    n: int,
    tie_epsilon: float = 0.0
) -> bool:
    """Whether two fitness tables induce the same rank vector."""
    return rank_of(fitness_a, n, tie_epsilon) == rank_of(fitness_b, n, tie_epsilon)


def letters(rv: RankVector) -> str:
    return rv.letters


def from_letters(text: str) -> RankVector:
    """
    Parse "CADB" into a rank vector; the dimension follows from the length.

    Raises:
        DomainError: Length is not a power of two or a letter is invalid
    """
    size = len(text)
    if size < 2 or size & (size - 1):
        raise DomainError(f"Length {size} of {text!r} is not a power of two >= 2")
    try:
        ranks = tuple(RANK_LETTERS.index(c) + 1 for c in text.upper())
    except ValueError as e:
        raise DomainError(f"Invalid rank letter in {text!r}") from e
    return RankVector(size.bit_length() - 1, ranks)


def partition_of(rv: RankVector) -> Partition:
    counts = Counter(rv.ranks)
    return Partition(tuple(counts[r] for r in range(1, rv.k + 1)))


"""
╔════════════╗
║ Partitions ║
╚════════════╝
"""
def _check_k(n: int, k: int) -> None:
    check_dimension(n)
    if not isinstance(k, int) or not 1 <= k <= 1 << n:
        raise DomainError(f"k must lie in [1, {1 << n}] for n={n}, got {k!r}")


def next_v(v: Tuple[int, ...], k: int) -> Optional[Tuple[int, ...]]:
    """
    Successor of a non-decreasing vector over 1..k, or None after the last.

    The last entry below k is incremented and every entry after it is
    reset to the incremented value.
    """
    for j in range(len(v) - 1, -1, -1):
        if v[j] < k:
            bumped = v[j] + 1
            return v[:j] + (bumped,) * (len(v) - j)
    return None


def partition_from_v(v: Tuple[int, ...], k: int) -> Partition:
    """lambda_i = 1 + (number of entries of v equal to i)."""
    counts = Counter(v)
    return Partition(tuple(1 + counts[i] for i in range(1, k + 1)))


def enumerate_partitions(n: int, k: int) -> List[Partition]:
    """
    Every partition of the 2**n nodes into k non-empty rank levels,
    C(2**n - 1, k - 1) in total, in next_v order.

    Raises:
        DomainError: k outside [1, 2**n]
    """
    _check_k(n, k)
    u = (1 << n) - k
    v: Optional[Tuple[int, ...]] = (1,) * u
    partitions = []
    while v is not None:
        partitions.append(partition_from_v(v, k))
        v = next_v(v, k)
    return partitions


def all_partitions(n: int) -> Iterator[Partition]:
    """Partitions for k = 1 .. 2**n, k-major."""
    for k in range(1, (1 << check_dimension(n)) + 1):
        yield from enumerate_partitions(n, k)


def count_partitions(n: int, k: Optional[int] = None) -> int:
    """C(2**n - 1, k - 1), or 2**(2**n - 1) summed over all k."""
    check_dimension(n)
    if k is None:
        return 1 << ((1 << n) - 1)
    _check_k(n, k)
    return comb((1 << n) - 1, k - 1)


"""
╔══════════╗
║ Counting ║
╚══════════╝
"""
@dataclass(frozen=True)
class RankingCount:
    """
    Arguments:
        n (int): Dimension
        per_k (Dict[int, int]): Rank functions with exactly k ranks
        partitions_per_k (Dict[int, int]): Partitions with k parts
    """
    n: int
    per_k: Dict[int, int]
    partitions_per_k: Dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.per_k.values())

    @property
    def total_partitions(self) -> int:
        return sum(self.partitions_per_k.values())


def count_rank_functions(partition: Partition, n: int) -> int:
    """
    Multinomial 2**n! / prod(lambda_j!)

    Raises:
        DomainError: Parts do not sum to 2**n
    """
    check_dimension(n)
    if partition.total != 1 << n:
        raise DomainError(f"Partition {partition} does not sum to {1 << n}")
    count = factorial(1 << n)
    for part in partition:
        count //= factorial(part)
    return count


def surjections(m: int, k: int) -> int:
    """Maps from m items onto exactly k ranks, by inclusion-exclusion."""
    return sum((-1) ** j * comb(k, j) * (k - j) ** m for j in range(k + 1))


def count_rankings(n: int) -> RankingCount:
    """
    Number of rank functions over the n-cube, total and per rank count.

    Summing multinomials over all partitions is only practical for small
    n, so the per-k figure is the surjection count, which equals that sum.
    """
    check_dimension(n)
    m = 1 << n
    per_k = {k: surjections(m, k) for k in range(1, m + 1)}
    partitions_per_k = {k: comb(m - 1, k - 1) for k in range(1, m + 1)}
    return RankingCount(n, per_k, partitions_per_k)


@lru_cache(maxsize=None)
def fubini(m: int) -> int:
    """Ordered Bell number a(m) = sum_{j=1..m} C(m, j) a(m - j), a(0) = 1."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    values = [1]
    for size in range(1, m + 1):
        values.append(sum(comb(size, j) * values[size - j] for j in range(1, size + 1)))
    return values[m]


"""
╔═════════════════════════╗
║ Rank Vector Enumeration ║
╚═════════════════════════╝
"""
def next_permutation(values: List[int]) -> bool:
    """
    Advance values to the next lexicographic permutation in place.
    Repeated values are handled, so this walks multiset permutations.

    Returns:
        bool: False once values was the last permutation
    """
    j = len(values) - 2
    while j >= 0 and values[j] >= values[j + 1]:
        j -= 1
    if j < 0:
        return False
    l = len(values) - 1
    while values[j] >= values[l]:
        l -= 1
    values[j], values[l] = values[l], values[j]
    values[j + 1:] = reversed(values[j + 1:])
    return True


def _first_arrangement(partition: Partition) -> List[int]:
    return [rank for rank, part in enumerate(partition, start=1) for _ in range(part)]


def enumerate_rank_vectors(
    partition: Partition,
    n: int,
    max_n: int = DEFAULT_MAX_N
) -> Iterator[RankVector]:
    """
    Stream every rank vector with the given partition in lexicographic order.

    Raises:
        CapacityError: n above max_n
        DomainError: Partition does not sum to 2**n
    """
    require_enumerable(n, max_n)
    count_rank_functions(partition, n)
    values = _first_arrangement(partition)
    while True:
        yield RankVector(n, tuple(values))
        if not next_permutation(values):
            return


def rank_vector_array(
    partition: Partition,
    n: int,
    max_n: int = DEFAULT_MAX_N
) -> np.ndarray:
    """
    All rank vectors of a partition stacked as an int8 array of shape
    (F_lambda, 2**n), rows in lexicographic order.
    """
    require_enumerable(n, max_n)
    rows = np.empty((count_rank_functions(partition, n), 1 << n), dtype=np.int8)
    values = _first_arrangement(partition)
    i = 0
    while True:
        rows[i] = values
        i += 1
        if not next_permutation(values):
            break
    return rows
