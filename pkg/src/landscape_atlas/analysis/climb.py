# -*- coding: utf-8 -*-
"""
src.landscape_atlas.analysis.climb.py - Landscape-Atlas
Created by NCagle
2025-02-14
      _
   __(.)<
~~~⋱___)~~~

Exact performance of best- and first-improvement hill climbers on a rank
landscape, plus a Monte-Carlo simulation of the same processes.

Both climbers start at a uniformly random node and stop when no neighbor
is strictly better. Evaluation accounting:
    - 1 evaluation for the starting node
    - best-improvement: n evaluations per neighborhood scan, the final
      (unsuccessful) scan included
    - first-improvement: with m of n neighbors improving, a random scan
      order finds the first improvement after (n + 1) / (m + 1)
      evaluations on average; the final scan costs n

Every move strictly lowers the rank, so the move graph is acyclic and a
single pass over nodes in increasing rank order gives exact expectations.
The identity of the first improving neighbor under a random scan order is
uniform over the improving neighbors and independent of its position,
which keeps the first-improvement recursion linear.

Example Usage:
report = analyze_best(RankVector(2, (2, 3, 4, 1)))
report.success_rate       # -> Fraction(3, 4)
report.multistart_ert     # -> Fraction(16, 3)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from landscape_atlas.analysis.hypercube import neighbor_table, neighbors, require_enumerable
from landscape_atlas.models.base import Comparison, RankVector, rank_letter
from landscape_atlas.models.records import ClimbReport, ClimberComparison, SimulationSummary
from landscape_atlas.utils.constants import DEFAULT_MAX_N

logger = logging.getLogger(__name__)

# (successors, evaluations spent at the node before moving)
MoveRule = Callable[[RankVector, int], Tuple[List[int], Fraction]]


@dataclass
class _NodeValue:
    """Per-start expectations, each weighted by the outcome indicator."""
    p: Fraction
    evals_success: Fraction
    evals_fail: Fraction
    steps_success: Fraction
    steps_fail: Fraction


def _improving(rv: RankVector, x: int) -> List[int]:
    return [y for y in neighbors(x, rv.n) if rv[y] < rv[x]]


def best_moves(rv: RankVector, x: int) -> Tuple[List[int], Fraction]:
    improving = _improving(rv, x)
    if not improving:
        return [], Fraction(rv.n)
    best = min(rv[y] for y in improving)
    return [y for y in improving if rv[y] == best], Fraction(rv.n)


def first_moves(rv: RankVector, x: int) -> Tuple[List[int], Fraction]:
    improving = _improving(rv, x)
    if not improving:
        return [], Fraction(rv.n)
    return improving, Fraction(rv.n + 1, len(improving) + 1)


def _solve(rv: RankVector, rule: MoveRule) -> List[_NodeValue]:
    values: List[Optional[_NodeValue]] = [None] * rv.size
    one = Fraction(1)

    for x in sorted(range(rv.size), key=lambda node: rv[node]):
        successors, cost = rule(rv, x)
        if not successors:
            p = one if rv[x] == 1 else Fraction(0)
            values[x] = _NodeValue(p, cost * p, cost * (one - p), Fraction(0), Fraction(0))
            continue

        assert all(rv[y] < rv[x] for y in successors), "moves must lower the rank"
        weight = Fraction(1, len(successors))
        nexts = [values[y] for y in successors]
        p = weight * sum(v.p for v in nexts)
        values[x] = _NodeValue(
            p=p,
            evals_success=cost * p + weight * sum(v.evals_success for v in nexts),
            evals_fail=cost * (one - p) + weight * sum(v.evals_fail for v in nexts),
            steps_success=p + weight * sum(v.steps_success for v in nexts),
            steps_fail=(one - p) + weight * sum(v.steps_fail for v in nexts),
        )
    return values


def _report(values: Sequence[_NodeValue]) -> ClimbReport:
    size = len(values)
    success = sum((v.p for v in values), Fraction(0)) / size
    fail = 1 - success
    # Weighted by outcome, starting evaluation included
    evals_s = sum((v.evals_success + v.p for v in values), Fraction(0)) / size
    evals_f = sum((v.evals_fail + (1 - v.p) for v in values), Fraction(0)) / size
    steps_s = sum((v.steps_success for v in values), Fraction(0)) / size
    steps_f = sum((v.steps_fail for v in values), Fraction(0)) / size

    # Starting at a global optimum always succeeds
    assert success >= Fraction(1, size)
    exp_evals_success = evals_s / success
    if fail:
        exp_steps_fail, exp_evals_fail = steps_f / fail, evals_f / fail
        ert = exp_evals_success + fail / success * exp_evals_fail
    else:
        exp_steps_fail = exp_evals_fail = None
        ert = exp_evals_success

    return ClimbReport(
        success_rate=success,
        exp_steps_success=steps_s / success,
        exp_evals_success=exp_evals_success,
        exp_steps_fail=exp_steps_fail,
        exp_evals_fail=exp_evals_fail,
        multistart_ert=ert,
        exp_steps_overall=steps_s + steps_f,
        exp_evals_overall=evals_s + evals_f,
    )


def analyze_best(rv: RankVector, max_n: int = DEFAULT_MAX_N) -> ClimbReport:
    """
    Exact report for the climber moving to a uniformly random member of
    the best strictly improving neighbors.

    Raises:
        CapacityError: rv.n above max_n
    """
    require_enumerable(rv.n, max_n)
    return _report(_solve(rv, best_moves))


def analyze_first(rv: RankVector, max_n: int = DEFAULT_MAX_N) -> ClimbReport:
    """
    Exact report for the climber taking the first strictly improving
    neighbor of a uniformly random scan order.

    Raises:
        CapacityError: rv.n above max_n
    """
    require_enumerable(rv.n, max_n)
    return _report(_solve(rv, first_moves))


# ~~~~~ Per Start ~~~~~
def success_by_start(
    rv: RankVector,
    rule: MoveRule = best_moves,
    max_n: int = DEFAULT_MAX_N
) -> Tuple[Fraction, ...]:
    """Probability of ending at a global optimum from each start node, indexed by node."""
    require_enumerable(rv.n, max_n)
    return tuple(v.p for v in _solve(rv, rule))


def success_by_rank(
    rv: RankVector,
    rule: MoveRule = best_moves,
    max_n: int = DEFAULT_MAX_N
) -> Dict[str, Tuple[Fraction, ...]]:
    """
    Start-node success probabilities grouped by the rank letter of the start

    Returns:
        Dict[str, Tuple[Fraction, ...]]: Letter -> probabilities of the nodes
            holding that rank, in node order
    """
    grouped: Dict[str, List[Fraction]] = {}
    for x, p in enumerate(success_by_start(rv, rule, max_n)):
        grouped.setdefault(rank_letter(rv[x]), []).append(p)
    return {letter: tuple(grouped[letter]) for letter in sorted(grouped)}


def _order(a: Fraction, b: Fraction, smaller_is_better: bool) -> Comparison:
    if a == b:
        return Comparison.EQUAL
    if (a < b) == smaller_is_better:
        return Comparison.BETTER
    return Comparison.WORSE


def compare(best: ClimbReport, first: ClimbReport) -> ClimberComparison:
    """Best-improvement relative to first-improvement on the same landscape."""
    return ClimberComparison(
        success=_order(best.success_rate, first.success_rate, smaller_is_better=False),
        ert=_order(best.multistart_ert, first.multistart_ert, smaller_is_better=True),
    )


"""
╔═════════════╗
║ Monte-Carlo ║
╚═════════════╝
"""
def _simulate(
    rv: RankVector,
    runs: int,
    rng: np.random.Generator,
    first_improvement: bool
) -> SimulationSummary:
    n = rv.n
    table = neighbor_table(n)
    ranks = np.asarray(rv.ranks, dtype=np.int64)

    position = rng.integers(0, rv.size, size=runs)
    evals = np.ones(runs, dtype=np.int64)
    active = np.arange(runs)

    while active.size:
        here = position[active]
        around = table[here]                                  # (active, n)
        around_ranks = ranks[around]
        improving = around_ranks < ranks[here][:, None]
        moving = improving.any(axis=1)

        stuck = active[~moving]
        evals[stuck] += n

        rows = np.flatnonzero(moving)
        if first_improvement:
            scan = np.argsort(rng.random((rows.size, n)), axis=1)
            hits = np.take_along_axis(improving[rows], scan, axis=1)
            first_hit = hits.argmax(axis=1)
            choice = scan[np.arange(rows.size), first_hit]
            evals[active[rows]] += first_hit + 1
        else:
            target = around_ranks[rows]
            ties = target == target.min(axis=1)[:, None]
            keys = np.where(ties, rng.random((rows.size, n)), -1.0)
            choice = keys.argmax(axis=1)
            evals[active[rows]] += n

        position[active[rows]] = around[rows, choice]
        active = active[rows]

    successes = int(np.count_nonzero(ranks[position] == 1))
    return SimulationSummary.from_outcomes(successes, runs, int(evals.sum()))


def simulate_best(
    rv: RankVector,
    runs: int,
    rng: Optional[np.random.Generator] = None,
    max_n: int = DEFAULT_MAX_N
) -> SimulationSummary:
    """Monte-Carlo estimate for the best-improvement climber."""
    require_enumerable(rv.n, max_n)
    return _simulate(rv, runs, rng or np.random.default_rng(), first_improvement=False)


def simulate_first(
    rv: RankVector,
    runs: int,
    rng: Optional[np.random.Generator] = None,
    max_n: int = DEFAULT_MAX_N
) -> SimulationSummary:
    """Monte-Carlo estimate for the first-improvement climber."""
    require_enumerable(rv.n, max_n)
    return _simulate(rv, runs, rng or np.random.default_rng(), first_improvement=True)
