# -*- coding: utf-8 -*-
"""
src.landscape_atlas.models.records.py - Landscape-Atlas
Created by NCagle
2025-02-07
      _
   __(.)<
~~~⋱___)~~~

Result records produced by the analyses and stored in the atlas.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, sqrt
from typing import Optional, Tuple

from landscape_atlas.models.base import (
    Comparison,
    DeceptiveFlag,
    Partition,
    RankVector,
)
from landscape_atlas.utils.errors import DomainError


def group_order(n: int) -> int:
    """Number of hypercube automorphisms, 2**n * n!."""
    return (1 << n) * factorial(n)


@dataclass(frozen=True)
class OrbitInfo:
    """
    Arguments:
        orbit_size (int): Distinct rank vectors in the class
        stabilizer_order (int): Automorphisms fixing the representative
    """
    orbit_size: int
    stabilizer_order: int

    def __post_init__(self):
        if self.orbit_size < 1 or self.stabilizer_order < 1:
            raise DomainError("Orbit size and stabilizer order must be >= 1")


@dataclass(frozen=True)
class PropertyReport:
    """
    Topological summary of one rank landscape

    Arguments:
        k_ranks (int): Number of distinct ranks
        global_optima (int): Nodes with rank 1
        strict_suboptima (int): Non-global local optima with all neighbors worse
        weak_suboptima (int): Non-global local optima with an equal neighbor
        neutral_edges (int): Adjacent pairs with equal rank
        neutral_node_count (int): Nodes touching at least one neutral edge
        neutral_networks (int): Components of the neutral-edge subgraph
        optimal_plateaus (int): Networks of local optima at rank 1
        suboptimal_plateaus (int): Networks of local optima above rank 1
        deceptive_flag (DeceptiveFlag): STRICT if any strict suboptimum,
            WEAK if only weak suboptima, else NONE
        neutral_flag (bool): At least one neutral edge
        plateau_flag (bool): At least one plateau
        local_optima (int): All nodes without a strictly better neighbor
        plateau_sizes (Tuple[int, ...]): Node count of each plateau, ascending
    """
    k_ranks: int
    global_optima: int
    strict_suboptima: int
    weak_suboptima: int
    neutral_edges: int
    neutral_node_count: int
    neutral_networks: int
    optimal_plateaus: int
    suboptimal_plateaus: int
    deceptive_flag: DeceptiveFlag
    neutral_flag: bool
    plateau_flag: bool
    local_optima: int = 0
    plateau_sizes: Tuple[int, ...] = field(default_factory=tuple)


    def __post_init__(self):
        if self.global_optima < 1:
            raise DomainError("A landscape has at least one global optimum")
        if self.neutral_flag != (self.neutral_edges >= 1):
            raise DomainError("neutral_flag must match neutral_edges")
        if self.plateau_flag != (self.plateaus >= 1):
            raise DomainError("plateau_flag must match the plateau counts")
        if self.plateau_flag and not self.neutral_flag:
            raise DomainError("A plateau implies a neutral edge")
        if self.local_optima != self.global_optima + self.suboptima:
            raise DomainError("local_optima must equal global optima plus suboptima")
        if any(size < 2 for size in self.plateau_sizes):
            raise DomainError("Plateaus have at least two nodes")

        expected = (
            DeceptiveFlag.STRICT if self.strict_suboptima
            else DeceptiveFlag.WEAK if self.weak_suboptima
            else DeceptiveFlag.NONE
        )
        if self.deceptive_flag is not expected:
            raise DomainError(f"deceptive_flag should be {expected.name}")


    @property
    def suboptima(self) -> int:
        return self.strict_suboptima + self.weak_suboptima

    @property
    def plateaus(self) -> int:
        return self.optimal_plateaus + self.suboptimal_plateaus

    @property
    def neutral_degree(self) -> int:
        """Published table column name for neutral_node_count."""
        return self.neutral_node_count

    @property
    def deceptive(self) -> bool:
        return self.deceptive_flag is not DeceptiveFlag.NONE

    def table_row(self) -> Tuple[int, int, int, int, int, int]:
        """(global optima, suboptima, networks, optimal plateaus, suboptimal plateaus, neutral degree)"""
        return (
            self.global_optima,
            self.suboptima,
            self.neutral_networks,
            self.optimal_plateaus,
            self.suboptimal_plateaus,
            self.neutral_degree,
        )


@dataclass(frozen=True)
class ClimbReport:
    """
    Exact expected behavior of a hill climber from a uniform random start

    Arguments:
        success_rate (Fraction): Probability of stopping at rank 1
        exp_steps_success (Fraction): Expected moves given success
        exp_evals_success (Fraction): Expected evaluations given success
        exp_steps_fail (Optional[Fraction]): Expected moves given failure,
            None when success_rate is 1
        exp_evals_fail (Optional[Fraction]): Expected evaluations given failure
        multistart_ert (Fraction): Expected evaluations of restart-until-success
        exp_steps_overall (Fraction): Unconditional expected moves of one run
        exp_evals_overall (Fraction): Unconditional expected evaluations of one run
    """
    success_rate: Fraction
    exp_steps_success: Fraction
    exp_evals_success: Fraction
    exp_steps_fail: Optional[Fraction]
    exp_evals_fail: Optional[Fraction]
    multistart_ert: Fraction
    exp_steps_overall: Fraction
    exp_evals_overall: Fraction


    def __post_init__(self):
        if not 0 < self.success_rate <= 1:
            raise DomainError(f"success_rate out of range: {self.success_rate}")
        if (self.success_rate == 1) != (self.exp_evals_fail is None):
            raise DomainError("Failure values are present exactly when success_rate < 1")
        if (self.exp_steps_fail is None) != (self.exp_evals_fail is None):
            raise DomainError("Failure steps and evaluations go together")
        if self.multistart_ert < self.exp_evals_success:
            raise DomainError("ERT cannot be below the expected evaluations of a successful run")


    def table_row(self) -> tuple:
        """(success, steps | success, evals | success, steps | fail, evals | fail, ERT)"""
        return (
            self.success_rate,
            self.exp_steps_success,
            self.exp_evals_success,
            self.exp_steps_fail,
            self.exp_evals_fail,
            self.multistart_ert,
        )


@dataclass(frozen=True)
class ClimberComparison:
    """
    Best-improvement measured against first-improvement on one landscape.

    success is BETTER when best-improvement has the higher success rate;
    ert is BETTER when best-improvement has the smaller ERT.
    """
    success: Comparison
    ert: Comparison


@dataclass(frozen=True)
class SimulationSummary:
    runs: int
    success_rate: float
    mean_evals: float
    std_error: float


    def agrees_with(self, exact: Fraction, sigmas: float = 3.0) -> bool:
        """
        Whether an exact success rate lies within `sigmas` standard errors.
        A zero standard error (all runs agree) falls back to one run's
        resolution so deterministic landscapes compare equal.
        """
        tolerance = sigmas * max(self.std_error, 1.0 / self.runs)
        return abs(self.success_rate - float(exact)) <= tolerance


    @classmethod
    def from_outcomes(cls, successes: int, runs: int, total_evals: int) -> "SimulationSummary":
        p = successes / runs
        return cls(
            runs=runs,
            success_rate=p,
            mean_evals=total_evals / runs,
            std_error=sqrt(p * (1.0 - p) / runs),
        )


@dataclass(frozen=True)
class ClassRecord:
    """
    One invariant landscape class

    Arguments:
        n (int): Dimension
        class_id (int): Index in lexicographic canonical-form order
        canonical_ranks (RankVector): Lexicographically smallest member
        partition (Partition): Node counts per rank
        orbit_size (int): Distinct rankings in the class
        stabilizer_order (int): Automorphisms fixing canonical_ranks
        properties (PropertyReport): Topological summary
        perf_best (ClimbReport): Best-improvement climber
        perf_first (ClimbReport): First-improvement climber
    """
    n: int
    class_id: int
    canonical_ranks: RankVector
    partition: Partition
    orbit_size: int
    stabilizer_order: int
    properties: PropertyReport
    perf_best: ClimbReport
    perf_first: ClimbReport


    def __post_init__(self):
        if self.canonical_ranks.n != self.n:
            raise DomainError("canonical_ranks dimension differs from record dimension")
        if self.class_id < 0:
            raise DomainError(f"class_id must be >= 0, got {self.class_id}")
        if self.orbit_size * self.stabilizer_order != group_order(self.n):
            raise DomainError(
                f"orbit {self.orbit_size} x stabilizer {self.stabilizer_order} "
                f"!= {group_order(self.n)} for class {self.class_id}"
            )
        if self.partition.total != self.canonical_ranks.size:
            raise DomainError("Partition does not cover every node")


    @property
    def k(self) -> int:
        return self.canonical_ranks.k

    @property
    def tags(self) -> Tuple[str, ...]:
        """Descriptive labels: injective, constant (one rank), boolean (at most two ranks)."""
        tags = []
        if self.canonical_ranks.is_injective:
            tags.append("injective")
        if self.k == 1:
            tags.append("constant")
        if self.k <= 2:
            tags.append("boolean")
        if self.properties.deceptive:
            tags.append("deceptive")
        if self.properties.neutral_flag:
            tags.append("neutral")
        if self.properties.plateau_flag:
            tags.append("plateau")
        return tuple(tags)

    def signature(self) -> tuple:
        """
        Id-free fingerprint used to match classes across catalogs
        that number classes differently.

        Returns:
            tuple: (k, orbit size, property table row, best row, first row)
        """
        return (
            self.k,
            self.orbit_size,
            self.properties.table_row(),
            self.perf_best.table_row(),
            self.perf_first.table_row(),
        )
