# -*- coding: utf-8 -*-
"""
src.landscape_atlas.models.base.py - Landscape-Atlas
Created by NCagle
2025-02-03
      _
   __(.)<
~~~⋱___)~~~

Core value types: rank vectors over the hypercube, rank-count partitions
and the small enumerations used by the property and climber reports.
"""

from dataclasses import dataclass
from enum import Enum, auto
from typing import Tuple

from landscape_atlas.utils.constants import RANK_LETTERS
from landscape_atlas.utils.errors import DomainError


class DeceptiveFlag(Enum):
    NONE = auto()
    WEAK = auto()
    STRICT = auto()

class NodeRole(Enum):
    GLOBAL_OPTIMUM = auto()
    STRICT_SUBOPTIMUM = auto()
    WEAK_SUBOPTIMUM = auto()
    OTHER = auto()

class Comparison(Enum):
    BETTER = auto()
    WORSE = auto()
    EQUAL = auto()


def check_dimension(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"Dimension must be a positive integer, got {n!r}")
    return n


def rank_letter(rank: int) -> str:
    """A for rank 1 through Z for rank 26; higher ranks are written "(27)"."""
    if rank <= len(RANK_LETTERS):
        return RANK_LETTERS[rank - 1]
    return f"({rank})"


@dataclass(frozen=True, order=True)
class RankVector:
    """
    Rank assignment over all 2**n nodes of the hypercube

    Arguments:
        n (int): Number of binary variables
        ranks (Tuple[int, ...]): Entry i is the rank of node i (1 = best)

    Notes:
        Ranks must cover 1..k without gaps for some k <= 2**n.
        Ordering is lexicographic on (n, ranks), which is the order
        canonical forms and class ids are defined by.

    Usage:
    # Correct
    RankVector(2, (3, 1, 4, 2))

    # Incorrect - rank 2 is missing, raises DomainError
    RankVector(2, (1, 3, 3, 1))
    """
    n: int
    ranks: Tuple[int, ...]


    def __post_init__(self):
        check_dimension(self.n)
        ranks = tuple(int(r) for r in self.ranks)
        object.__setattr__(self, "ranks", ranks)

        size = 1 << self.n
        if len(ranks) != size:
            raise DomainError(
                f"Rank vector for n={self.n} needs {size} entries, got {len(ranks)}"
            )
        if min(ranks) != 1:
            raise DomainError(f"Ranks must start at 1: {ranks}")
        if set(ranks) != set(range(1, max(ranks) + 1)):
            raise DomainError(f"Ranks must cover 1..k without gaps: {ranks}")


    @property
    def size(self) -> int:
        return len(self.ranks)

    @property
    def k(self) -> int:
        """Number of distinct ranks."""
        return max(self.ranks)

    @property
    def is_injective(self) -> bool:
        return self.k == self.size

    @property
    def letters(self) -> str:
        """Ranks as letters, node 0 first (A = rank 1)."""
        return "".join(rank_letter(r) for r in self.ranks)

    def __getitem__(self, node: int) -> int:
        return self.ranks[node]

    def __len__(self) -> int:
        return len(self.ranks)

    def __str__(self) -> str:
        return self.letters


@dataclass(frozen=True)
class Partition:
    """
    Node counts per rank, (lambda_1, ..., lambda_k)

    Arguments:
        parts (Tuple[int, ...]): parts[i] is the number of nodes with rank i + 1
    """
    parts: Tuple[int, ...]


    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise DomainError("Partition needs at least one part")
        if any(p < 1 for p in parts):
            raise DomainError(f"Every part must be >= 1: {parts}")


    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"
