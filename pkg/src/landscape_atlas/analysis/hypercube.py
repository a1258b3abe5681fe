# -*- coding: utf-8 -*-
"""
src.landscape_atlas.analysis.hypercube.py - Landscape-Atlas
Created by NCagle
2025-02-08
      _
   __(.)<
~~~⋱___)~~~

The n-dimensional Boolean hypercube: nodes, 1-flip neighborhoods and the
automorphism group of translations and rotations.

Conventions:
    - Node i is the n-bit string of i with the least significant bit as the
      rightmost character, so node 1 is "0...01" and bit j is variable x_{j+1}.
    - A rotation sigma moves bits: bit j of r_sigma(x) is bit sigma[j] of x.
      sigma is written as the string of its images, e.g. "021".
    - An automorphism (z, sigma) maps x to r_sigma(x) XOR z
      (permute first, then translate).

Example Usage:
a = Automorphism.from_strings("01", "10")    # z = 01, swap both variables
apply(a, 0b01)                                # -> 0b11
len(all_automorphisms(3))                     # -> 48
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations
from typing import List, Tuple

import networkx as nx
import numpy as np

from landscape_atlas.models.base import check_dimension
from landscape_atlas.utils.constants import DEFAULT_MAX_N
from landscape_atlas.utils.errors import CapacityError, DomainError

logger = logging.getLogger(__name__)


def require_enumerable(n: int, max_n: int = DEFAULT_MAX_N) -> int:
    """
    Guard for operations that materialize all 2**n nodes per landscape.

    Raises:
        DomainError: n is not a positive integer
        CapacityError: n above max_n
    """
    check_dimension(n)
    if n > max_n:
        raise CapacityError(n, max_n)
    return n


def check_node(x: int, n: int) -> int:
    check_dimension(n)
    if not isinstance(x, (int, np.integer)) or not 0 <= x < (1 << n):
        raise DomainError(f"Node {x!r} is not valid for n={n}")
    return int(x)


"""
╔═══════════════════╗
║ Nodes and Edges   ║
╚═══════════════════╝
"""
def to_bits(x: int, n: int) -> str:
    return format(check_node(x, n), f"0{n}b")


def from_bits(bits: str) -> int:
    if not bits or any(c not in "01" for c in bits):
        raise DomainError(f"Not a bitstring: {bits!r}")
    return int(bits, 2)


def hamming_distance(x: int, y: int) -> int:
    return bin(x ^ y).count("1")


def neighbors(x: int, n: int) -> Tuple[int, ...]:
    """
    The n nodes one bit flip away from x, lowest flipped bit first.

    Raises:
        DomainError: x is not a node of the n-cube
    """
    x = check_node(x, n)
    return tuple(x ^ (1 << i) for i in range(n))


def edges(n: int) -> List[Tuple[int, int]]:
    """All n * 2**(n-1) edges as (x, y) with x < y."""
    check_dimension(n)
    return [
        (x, x | (1 << i))
        for x in range(1 << n)
        for i in range(n)
        if not x & (1 << i)
    ]


@lru_cache(maxsize=None)
def neighbor_table(n: int) -> np.ndarray:
    """Array of shape (2**n, n); row x holds neighbors(x, n)."""
    nodes = np.arange(1 << n)[:, None]
    flips = (1 << np.arange(n))[None, :]
    table = nodes ^ flips
    table.setflags(write=False)
    return table


def hypercube_graph(n: int) -> nx.Graph:
    """Undirected hypercube graph with integer node labels."""
    graph = nx.Graph()
    graph.add_nodes_from(range(1 << check_dimension(n)))
    graph.add_edges_from(edges(n))
    return graph


"""
╔═══════════════╗
║ Automorphisms ║
╚═══════════════╝
"""
def rotate(sigma: Tuple[int, ...], x: int) -> int:
    """Bit j of the result is bit sigma[j] of x."""
    out = 0
    for j, source in enumerate(sigma):
        out |= ((x >> source) & 1) << j
    return out


def parse_permutation(text: str) -> Tuple[int, ...]:
    """"021" -> (0, 2, 1)"""
    sigma = tuple(int(c) for c in text)
    if sorted(sigma) != list(range(len(sigma))):
        raise DomainError(f"Not a permutation of 0..{len(sigma) - 1}: {text!r}")
    return sigma


@dataclass(frozen=True, order=True)
class Automorphism:
    """
    Translation mask plus coordinate permutation acting on hypercube nodes

    Arguments:
        n (int): Dimension
        z (int): Translation mask, applied by XOR after rotating
        sigma (Tuple[int, ...]): Rotation; bit j of the image is bit sigma[j]

    Notes:
        Stored as (z, sigma) so it stays valid for any n; the full action
        table is only built on demand.
    """
    n: int
    z: int
    sigma: Tuple[int, ...]


    def __post_init__(self):
        check_dimension(self.n)
        object.__setattr__(self, "sigma", tuple(int(s) for s in self.sigma))
        if sorted(self.sigma) != list(range(self.n)):
            raise DomainError(f"sigma {self.sigma} is not a permutation of 0..{self.n - 1}")
        check_node(self.z, self.n)


    @classmethod
    def from_strings(cls, z: str, sigma: str = "") -> "Automorphism":
        """Build from a bitstring mask and a permutation string like "021"."""
        n = len(z)
        perm = parse_permutation(sigma) if sigma else tuple(range(n))
        if len(perm) != n:
            raise DomainError("Mask and permutation lengths differ")
        return cls(n, from_bits(z), perm)


    @cached_property
    def action_table(self) -> Tuple[int, ...]:
        """Image of every node, indexed by node."""
        return tuple(rotate(self.sigma, x) ^ self.z for x in range(1 << self.n))

    @property
    def is_identity(self) -> bool:
        return self.z == 0 and self.sigma == tuple(range(self.n))

    def __str__(self) -> str:
        return f"z={format(self.z, f'0{self.n}b')} sigma={''.join(map(str, self.sigma))}"


def identity(n: int) -> Automorphism:
    return Automorphism(check_dimension(n), 0, tuple(range(n)))


def apply(a: Automorphism, x: int) -> int:
    """Image of node x: r_sigma(x) XOR z."""
    return rotate(a.sigma, check_node(x, a.n)) ^ a.z


def action_table(a: Automorphism) -> Tuple[int, ...]:
    """Image of every node under a, indexed by node."""
    return a.action_table


def compose(a: Automorphism, b: Automorphism) -> Automorphism:
    """
    The automorphism applying b first, then a.

    Rotations are linear over XOR, so
    a(b(x)) = r_a(r_b(x)) ^ r_a(z_b) ^ z_a.

    Raises:
        DomainError: a and b act on different dimensions
    """
    if a.n != b.n:
        raise DomainError(f"Cannot compose automorphisms of n={a.n} and n={b.n}")
    sigma = tuple(b.sigma[a.sigma[j]] for j in range(a.n))
    z = rotate(a.sigma, b.z) ^ a.z
    return Automorphism(a.n, z, sigma)


def inverse(a: Automorphism) -> Automorphism:
    sigma_inv = [0] * a.n
    for j, source in enumerate(a.sigma):
        sigma_inv[source] = j
    sigma_inv = tuple(sigma_inv)
    return Automorphism(a.n, rotate(sigma_inv, a.z), sigma_inv)


@lru_cache(maxsize=None)
def _all_automorphisms(n: int) -> Tuple[Automorphism, ...]:
    group = tuple(
        Automorphism(n, z, sigma)
        for sigma in permutations(range(n))
        for z in range(1 << n)
    )
    logger.debug("Built %d automorphisms for n=%d", len(group), n)
    return group


def all_automorphisms(n: int, max_n: int = DEFAULT_MAX_N) -> Tuple[Automorphism, ...]:
    """
    Every hypercube automorphism, 2**n * n! in total, identity first.

    Raises:
        CapacityError: n above max_n
    """
    return _all_automorphisms(require_enumerable(n, max_n))


@lru_cache(maxsize=None)
def action_matrix(n: int) -> np.ndarray:
    """
    Array of shape (|G|, 2**n); row g is the action table of the g-th
    automorphism in all_automorphisms order.
    """
    table = np.array(
        [a.action_table for a in _all_automorphisms(check_dimension(n))],
        dtype=np.int64,
    )
    table.setflags(write=False)
    return table
