# -*- coding: utf-8 -*-
"""
src.landscape_atlas.atlas.verify.py - Landscape-Atlas
Created by NCagle
2025-02-20
      _
   __(.)<
~~~⋱___)~~~

Reference checks against the published inventory.

    fast  counting for n <= 4, classes, orbits, properties and climber
          tables for n <= 2, exhaustive invariance for n <= 2
    full  everything in fast plus the n = 3 inventory, its cross-tab and
          tallies, sampled invariance, worked examples and the
          Monte-Carlo oracle

Each check yields a CheckResult; the CLI prints them and exits 1 on any
failure. Published figures the evaluation model does not reproduce are
reported with both values and do not fail the suite.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, List, Optional, Sequence

import numpy as np

from landscape_atlas.analysis.canon import canonicalize, count_injective_classes, transform
from landscape_atlas.analysis.climb import (
    analyze_best,
    analyze_first,
    best_moves,
    simulate_best,
    simulate_first,
    success_by_rank,
)
from landscape_atlas.analysis.hypercube import all_automorphisms
from landscape_atlas.analysis.props import analyze
from landscape_atlas.analysis.rankspace import (
    all_partitions,
    count_partitions,
    count_rankings,
    enumerate_rank_vectors,
    fubini,
)
from landscape_atlas.atlas.manager import AtlasManager
from landscape_atlas.models.base import RankVector
from landscape_atlas.models.records import ClassRecord
from landscape_atlas.utils import constants as ref
from landscape_atlas.utils.errors import DomainError

logger = logging.getLogger(__name__)

LEVELS = ("fast", "full")


@dataclass(frozen=True)
class CheckResult:
    """
    One named check. A reported result never fails the suite; it marks a
    published figure this model does not reproduce and shows both values.
    """
    name: str
    passed: bool
    expected: str = ""
    found: str = ""
    reported: bool = False

    def line(self) -> str:
        if self.reported:
            return f"  ⚠️ {self.name}: published {self.expected}, found {self.found}"
        if self.passed:
            return f"  ✅ {self.name}"
        return f"  ❌ {self.name}: expected {self.expected}, found {self.found}"


def check(name: str, expected, found) -> CheckResult:
    return CheckResult(name, expected == found, repr(expected), repr(found))


def report(name: str, published, found) -> CheckResult:
    """Passes whatever the outcome; flagged as reported when the values differ."""
    return CheckResult(name, True, repr(published), repr(found), reported=published != found)


def _sort_rows(rows: Sequence[tuple]) -> List[tuple]:
    # None sorts first
    return sorted(rows, key=lambda row: tuple((v is not None, v if v is not None else 0) for v in row))


"""
╔═════════════╗
║ Fast Checks ║
╚═════════════╝
"""
def counting_checks() -> Iterator[CheckResult]:
    for n, per_k in ref.RANKINGS_PER_K.items():
        counts = count_rankings(n)
        yield check(f"rankings per k, n={n}", per_k, tuple(counts.per_k.values()))
        yield check(f"Fubini cross-check, n={n}", fubini(1 << n), counts.total)
    for n, total in ref.PARTITION_TOTALS.items():
        yield check(f"partitions, n={n}", total, count_partitions(n))
        yield check(f"partitions per k add up, n={n}", total, count_rankings(n).total_partitions)
    for n, expected in ref.INJECTIVE_CLASS_COUNTS.items():
        yield check(f"injective classes (closed form), n={n}", expected, count_injective_classes(n))
    yield check("rankings, n=1", 3, count_rankings(1).total)


def inventory_checks(records: Sequence[ClassRecord], n: int) -> Iterator[CheckResult]:
    yield check(f"classes, n={n}", ref.CLASS_COUNTS[n], len(records))
    yield check(
        f"injective classes (enumerated), n={n}",
        ref.INJECTIVE_CLASS_COUNTS[n],
        sum(1 for r in records if r.canonical_ranks.is_injective),
    )
    yield check(
        f"orbit sizes add up to rankings, n={n}",
        count_rankings(n).total,
        sum(r.orbit_size for r in records),
    )


def table_checks_2d(manager: AtlasManager) -> Iterator[CheckResult]:
    records = manager.atlas.records_for(2)
    yield check(
        "orbit sizes, n=2",
        sorted(ref.ORBIT_SIZES_2D),
        sorted(r.orbit_size for r in records),
    )
    yield check(
        "property table, n=2",
        sorted(ref.PROPERTIES_2D),
        sorted(r.properties.table_row() for r in records),
    )
    yield check(
        "best-improvement table, n=2",
        _sort_rows(ref.BEST_IMPROVEMENT_2D),
        _sort_rows([r.perf_best.table_row() for r in records]),
    )
    yield check(
        "first-improvement table, n=2",
        _sort_rows(ref.FIRST_IMPROVEMENT_2D),
        _sort_rows([r.perf_first.table_row() for r in records]),
    )
    stats = manager.stats(2)
    yield check(
        "ERT tally (first faster, best faster, equal), n=2",
        ref.ERT_TALLY_2D,
        (stats.ert_tally.worse, stats.ert_tally.better, stats.ert_tally.equal),
    )
    yield check(
        "deceptive classes (strict, weak only), n=2",
        (2, 2),
        (stats.shares["strict_deceptive"], stats.shares["weak_only_deceptive"]),
    )
    yield check(
        "best-improvement never less successful, n=2",
        True,
        all(r.perf_best.success_rate >= r.perf_first.success_rate for r in records),
    )


def _invariance_failures(rv: RankVector, automorphisms, max_n: int) -> List[str]:
    base = (canonicalize(rv, max_n), analyze(rv, max_n), analyze_best(rv, max_n), analyze_first(rv, max_n))
    failures = []
    for a in automorphisms:
        image = transform(a, rv)
        if (canonicalize(image, max_n), analyze(image, max_n),
                analyze_best(image, max_n), analyze_first(image, max_n)) != base:
            failures.append(f"{rv.letters} under {a}")
    return failures


def exhaustive_invariance_checks(n: int, max_n: int) -> Iterator[CheckResult]:
    group = all_automorphisms(n, max_n)
    failures = []
    for partition in all_partitions(n):
        for rv in enumerate_rank_vectors(partition, n, max_n):
            failures.extend(_invariance_failures(rv, group, max_n))
    yield CheckResult(
        f"automorphism invariance (exhaustive), n={n}",
        not failures, "no failures", "; ".join(failures[:5]),
    )


"""
╔═════════════╗
║ Full Checks ║
╚═════════════╝
"""
def table_checks_3d(manager: AtlasManager) -> Iterator[CheckResult]:
    stats = manager.stats(3)
    yield check("property cross-tab, n=3", ref.CROSS_TAB_3D, stats.cross_tab)
    yield check(
        "success tally (best better, first better, equal), n=3",
        ref.SUCCESS_TALLY_3D,
        (stats.success_tally.better, stats.success_tally.worse, stats.success_tally.equal),
    )
    ert_tally = (stats.ert_tally.worse, stats.ert_tally.better, stats.ert_tally.equal)
    yield check("ERT tally (first faster, best faster, equal), n=3", ref.MODEL_ERT_TALLY_3D, ert_tally)
    yield report("published ERT tally, n=3", ref.ERT_TALLY_3D, ert_tally)
    yield check("deceptive classes, n=3", 8530, stats.shares["deceptive"])
    yield check("plateau classes, n=3", 2355, stats.shares["plateau"])
    yield check("injective share, n=3", "7.01", stats.percent(stats.shares["injective"]))
    yield check(
        "classes with several global optima, n=3",
        ref.MULTIPLE_GLOBAL_OPTIMA_3D,
        stats.shares["multiple_global_optima"],
    )

    def near(label: str, target: float, count: int, tolerance: float = 0.5) -> CheckResult:
        share = 100.0 * count / stats.classes
        return CheckResult(
            f"{label} share about {target}%, n=3",
            True,
            f"{target} +/- {tolerance}",
            f"{share:.2f}",
            reported=abs(share - target) > tolerance,
        )

    yield near("multiple global optima", 30.0, stats.shares["multiple_global_optima"])
    yield near("suboptimal plateau", 3.5, stats.shares["suboptimal_plateau"])
    yield CheckResult(
        "deceptive share over 70%, n=3",
        stats.shares["deceptive"] * 100 > 70 * stats.classes,
        "> 70%", stats.percent(stats.shares["deceptive"]),
    )
    yield CheckResult(
        "neutral share over 63%, n=3",
        stats.shares["neutral"] * 100 > 63 * stats.classes,
        "> 63%", stats.percent(stats.shares["neutral"]),
    )


def worked_example_checks(manager: AtlasManager) -> Iterator[CheckResult]:
    plateau_trap = RankVector(3, ref.PLATEAU_TRAP_3D)
    strict_trap = RankVector(3, ref.STRICT_TRAP_3D)

    record = manager.lookup_rank_vector(plateau_trap)
    yield check(
        "plateau trap: one two-node suboptimal plateau",
        (1, (2,)),
        (record.properties.suboptimal_plateaus, record.properties.plateau_sizes),
    )
    yield check(
        "plateau trap: best-improvement success",
        ref.PLATEAU_TRAP_SUCCESS,
        record.perf_best.success_rate,
    )
    yield check(
        "plateau trap: success by start rank",
        ref.PLATEAU_TRAP_BY_RANK,
        success_by_rank(plateau_trap, best_moves, manager.settings.max_n),
    )
    record = manager.lookup_rank_vector(strict_trap)
    yield check(
        "strict trap: best-improvement success",
        ref.STRICT_TRAP_SUCCESS,
        record.perf_best.success_rate,
    )
    yield check(
        "strict trap: success by start rank",
        ref.STRICT_TRAP_BY_RANK,
        success_by_rank(strict_trap, best_moves, manager.settings.max_n),
    )


def sampled_invariance_checks(rng: np.random.Generator, pairs: int, max_n: int) -> Iterator[CheckResult]:
    group = all_automorphisms(3, max_n)
    failures = []
    for _ in range(pairs):
        k = int(rng.integers(1, 9))
        # Random surjection onto 1..k: every rank once, the rest at random
        ranks = list(range(1, k + 1)) + [int(v) for v in rng.integers(1, k + 1, size=8 - k)]
        rng.shuffle(ranks)
        rv = RankVector(3, tuple(ranks))
        a = group[int(rng.integers(len(group)))]
        failures.extend(_invariance_failures(rv, [a], max_n))
    yield CheckResult(
        f"automorphism invariance ({pairs} sampled pairs), n=3",
        not failures, "no failures", "; ".join(failures[:5]),
    )


def simulation_checks(
    records: Sequence[ClassRecord],
    rng: np.random.Generator,
    classes: int,
    runs: int
) -> Iterator[CheckResult]:
    chosen = rng.choice(len(records), size=min(classes, len(records)), replace=False)
    for index in sorted(int(i) for i in chosen):
        record = records[index]
        rv = record.canonical_ranks
        for label, simulate, report in (
            ("best", simulate_best, record.perf_best),
            ("first", simulate_first, record.perf_first),
        ):
            summary = simulate(rv, runs, rng)
            yield CheckResult(
                f"Monte-Carlo {label}-improvement, n={record.n} class {record.class_id}",
                summary.agrees_with(report.success_rate),
                f"{float(report.success_rate):.4f} within 3 SE",
                f"{summary.success_rate:.4f} (SE {summary.std_error:.5f})",
            )


"""
╔═══════════╗
║ Run Suite ║
╚═══════════╝
"""
def run_checks(
    level: str,
    manager: Optional[AtlasManager] = None,
    progress: Optional[Callable[[CheckResult], None]] = None
) -> List[CheckResult]:
    """
    Run the fast or full suite

    Arguments:
        level (str): "fast" or "full"
        manager (Optional[AtlasManager]): Atlas to check; missing dimensions
            are built on demand
        progress (Optional[Callable]): Called with each result as it arrives

    Returns:
        List[CheckResult]: Every check, passed or not
    """
    if level not in LEVELS:
        raise DomainError(f"level must be one of {LEVELS}, got {level!r}")
    manager = manager if manager is not None else AtlasManager()
    settings = manager.settings
    rng = np.random.default_rng(settings.seed)

    dimensions = (1, 2) if level == "fast" else (1, 2, 3)
    manager.build_all([n for n in dimensions if n not in manager.atlas.dimensions])

    def suite() -> Iterator[CheckResult]:
        yield from counting_checks()
        for n in dimensions:
            yield from inventory_checks(manager.atlas.records_for(n), n)
        yield from table_checks_2d(manager)
        yield from exhaustive_invariance_checks(1, settings.max_n)
        yield from exhaustive_invariance_checks(2, settings.max_n)
        if level == "full":
            yield from table_checks_3d(manager)
            yield from worked_example_checks(manager)
            yield from sampled_invariance_checks(rng, 1000, settings.max_n)
            yield from simulation_checks(
                manager.atlas.records_for(3), rng,
                settings.simulation_classes, settings.simulation_runs,
            )

    results = []
    for result in suite():
        if not result.passed:
            logger.warning("Check failed: %s", result.name)
        if progress is not None:
            progress(result)
        results.append(result)
    return results
