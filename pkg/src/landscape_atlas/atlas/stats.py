# -*- coding: utf-8 -*-
"""
src.landscape_atlas.atlas.stats.py - Landscape-Atlas
Created by NCagle
2025-02-18
      _
   __(.)<
~~~⋱___)~~~

Aggregate statistics over the classes of one dimension: property
cross-tabulation, histograms, best-vs-first tallies, cumulative
distributions and headline shares.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from landscape_atlas.analysis.climb import compare
from landscape_atlas.models.base import Comparison
from landscape_atlas.models.records import ClassRecord
from landscape_atlas.utils.errors import DomainError
from landscape_atlas.utils.formatting import format_percent

CrossKey = Tuple[bool, bool, bool]

# Row order of the property cross-tab: (deceptive, neutral, plateau).
# A plateau needs a neutral edge, so the other two combinations are empty.
CROSS_TAB_ROWS: Tuple[CrossKey, ...] = (
    (False, False, False),
    (True, False, False),
    (False, True, False),
    (True, True, False),
    (False, True, True),
    (True, True, True),
)

HISTOGRAM_FIELDS = (
    "k_ranks",
    "orbit_size",
    "global_optima",
    "suboptima",
    "neutral_edges",
    "plateaus",
    "suboptimal_plateaus",
)


@dataclass(frozen=True)
class Tally:
    """Counts of BETTER / WORSE / EQUAL for best-improvement against first."""
    better: int
    worse: int
    equal: int

    @property
    def total(self) -> int:
        return self.better + self.worse + self.equal


@dataclass(frozen=True)
class AtlasStats:
    """
    Arguments:
        n (int): Dimension
        classes (int): Number of classes
        cross_tab (Dict[CrossKey, int]): Classes per (deceptive, neutral, plateau)
        histograms (Dict[str, Dict[int, int]]): Value -> classes, per field
        success_tally (Tally): BETTER = best-improvement succeeds more often
        ert_tally (Tally): BETTER = best-improvement has the smaller ERT
        cumulative (Dict[str, List[Tuple[Fraction, int]]]): (threshold,
            classes at or below it) for success rate and ERT of each climber
        shares (Dict[str, int]): Headline class counts
    """
    n: int
    classes: int
    cross_tab: Dict[CrossKey, int]
    histograms: Dict[str, Dict[int, int]]
    success_tally: Tally
    ert_tally: Tally
    cumulative: Dict[str, List[Tuple[Fraction, int]]]
    shares: Dict[str, int]


    def percent(self, count: int) -> str:
        return format_percent(count, self.classes)

    def cross_tab_rows(self) -> List[Tuple[CrossKey, int, str]]:
        return [(key, self.cross_tab[key], self.percent(self.cross_tab[key])) for key in CROSS_TAB_ROWS]


def _field_value(record: ClassRecord, name: str) -> int:
    if name == "orbit_size":
        return record.orbit_size
    return getattr(record.properties, name)


def _tally(results: Sequence[Comparison]) -> Tally:
    counts = Counter(results)
    return Tally(counts[Comparison.BETTER], counts[Comparison.WORSE], counts[Comparison.EQUAL])


def cumulative_distribution(values: Sequence[Fraction]) -> List[Tuple[Fraction, int]]:
    """(threshold, number of values <= threshold) at every distinct value."""
    counts = Counter(values)
    running = 0
    points = []
    for threshold in sorted(counts):
        running += counts[threshold]
        points.append((threshold, running))
    return points


def compute_stats(records: Sequence[ClassRecord]) -> AtlasStats:
    """
    Statistics over the classes of a single dimension

    Raises:
        DomainError: Empty input or mixed dimensions
    """
    if not records:
        raise DomainError("Statistics need at least one class")
    dims = {r.n for r in records}
    if len(dims) != 1:
        raise DomainError(f"Statistics are per dimension, got n in {sorted(dims)}")

    cross_tab = Counter(
        (r.properties.deceptive, r.properties.neutral_flag, r.properties.plateau_flag)
        for r in records
    )
    histograms = {
        name: dict(sorted(Counter(_field_value(r, name) for r in records).items()))
        for name in HISTOGRAM_FIELDS
    }
    comparisons = [compare(r.perf_best, r.perf_first) for r in records]

    cumulative = {
        "best_success": cumulative_distribution([r.perf_best.success_rate for r in records]),
        "first_success": cumulative_distribution([r.perf_first.success_rate for r in records]),
        "best_ert": cumulative_distribution([r.perf_best.multistart_ert for r in records]),
        "first_ert": cumulative_distribution([r.perf_first.multistart_ert for r in records]),
    }

    shares = {
        "injective": sum(1 for r in records if r.canonical_ranks.is_injective),
        "non_injective": sum(1 for r in records if not r.canonical_ranks.is_injective),
        "multiple_global_optima": sum(1 for r in records if r.properties.global_optima >= 2),
        "deceptive": sum(1 for r in records if r.properties.deceptive),
        "strict_deceptive": sum(1 for r in records if r.properties.strict_suboptima),
        "weak_only_deceptive": sum(
            1 for r in records if r.properties.weak_suboptima and not r.properties.strict_suboptima
        ),
        "neutral": sum(1 for r in records if r.properties.neutral_flag),
        "plateau": sum(1 for r in records if r.properties.plateau_flag),
        "suboptimal_plateau": sum(1 for r in records if r.properties.suboptimal_plateaus),
    }

    return AtlasStats(
        n=records[0].n,
        classes=len(records),
        cross_tab={key: cross_tab.get(key, 0) for key in CROSS_TAB_ROWS},
        histograms=histograms,
        success_tally=_tally([c.success for c in comparisons]),
        ert_tally=_tally([c.ert for c in comparisons]),
        cumulative=cumulative,
        shares=shares,
    )
