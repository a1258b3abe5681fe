# -*- coding: utf-8 -*-
"""
src.landscape_atlas.atlas.manager.py - Landscape-Atlas
Created by NCagle
2025-02-17
      _
   __(.)<
~~~⋱___)~~~

AtlasManager builds, queries, audits and persists the class inventory.

Example Usage:
# Build the two-dimensional inventory
manager = AtlasManager(settings)
manager.build(2)

# Find the class of an arbitrary fitness table
record = manager.lookup([4.0, 1.0, 9.0, 3.0])
record.class_id, record.canonical_ranks.letters

# Persist and reload
manager.save("data/atlas/atlas_n2.jsonl")
same = AtlasManager.load("data/atlas/atlas_n2.jsonl", settings)
"""

# Standard library imports
import csv
import logging
import os
import shutil
from datetime import datetime as dt
from multiprocessing import Pool
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from tqdm import tqdm

# Application-specific imports
from landscape_atlas.analysis.canon import canonicalize, classify_all
from landscape_atlas.analysis.climb import analyze_best, analyze_first
from landscape_atlas.analysis.hypercube import require_enumerable
from landscape_atlas.analysis.props import analyze
from landscape_atlas.analysis.rankspace import count_rankings, partition_of, rank_of
from landscape_atlas.atlas.schema import Atlas, read_atlas, write_atlas
from landscape_atlas.atlas.stats import AtlasStats, compute_stats
from landscape_atlas.config import Settings
from landscape_atlas.models.base import RankVector
from landscape_atlas.models.records import ClassRecord, OrbitInfo
from landscape_atlas.utils.constants import CSV_FORMAT
from landscape_atlas.utils.errors import DomainError, NotFoundError
from landscape_atlas.utils.formatting import format_decimal

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    "n",
    "class_id",
    "letters",
    "k",
    "orbit_size",
    "stabilizer_order",
    "global_optima",
    "strict_suboptima",
    "weak_suboptima",
    "neutral_edges",
    "neutral_degree",
    "neutral_networks",
    "optimal_plateaus",
    "suboptimal_plateaus",
    "deceptive",
    "best_success",
    "best_steps_success",
    "best_evals_success",
    "best_steps_fail",
    "best_evals_fail",
    "best_ert",
    "first_success",
    "first_steps_success",
    "first_evals_success",
    "first_steps_fail",
    "first_evals_fail",
    "first_ert",
)


def analyze_class(
    n: int,
    class_id: int,
    canonical: RankVector,
    info: OrbitInfo,
    max_n: int
) -> ClassRecord:
    """Full record for one class: properties plus both climbers."""
    return ClassRecord(
        n=n,
        class_id=class_id,
        canonical_ranks=canonical,
        partition=partition_of(canonical),
        orbit_size=info.orbit_size,
        stabilizer_order=info.stabilizer_order,
        properties=analyze(canonical, max_n),
        perf_best=analyze_best(canonical, max_n),
        perf_first=analyze_first(canonical, max_n),
    )


def _analyze_job(job: Tuple[int, int, RankVector, OrbitInfo, int]) -> ClassRecord:
    return analyze_class(*job)


class AtlasManager:
    """
    Owner of an Atlas and the indexes used to query it

    Arguments:
        settings (Optional[Settings]): Runtime settings; defaults when None
        atlas (Optional[Atlas]): Existing atlas to manage

    Notes:
        Building a dimension replaces any records already held for it.
        The atlas itself is immutable; the manager swaps in new instances.
    """
    def __init__(self, settings: Optional[Settings] = None, atlas: Optional[Atlas] = None):
        self.settings = settings or Settings()
        self._atlas = atlas if atlas is not None else Atlas(())
        self._index: Dict[Tuple[int, Tuple[int, ...]], ClassRecord] = {}
        self._reindex()


    @property
    def atlas(self) -> Atlas:
        return self._atlas

    def _reindex(self) -> None:
        self._index = {(r.n, r.canonical_ranks.ranks): r for r in self._atlas.records}


    """
    ╔════════════════════╗
    ║ Building the Atlas ║
    ╚════════════════════╝
    """
    def build(self, n: int) -> Atlas:
        """
        Classify every rank vector of dimension n and analyze each class

        Arguments:
            n (int): Dimension

        Returns:
            Atlas: The full managed atlas, now including dimension n

        Raises:
            CapacityError: n above settings.max_n
        """
        max_n = self.settings.max_n
        require_enumerable(n, max_n)
        started = dt.now()

        entries = classify_all(
            n,
            max_n=max_n,
            workers=self.settings.workers,
            progress=self.settings.progress,
        )
        jobs = [(n, class_id, canonical, info, max_n) for class_id, (canonical, info) in enumerate(entries)]
        bar_options = dict(total=len(jobs), desc=f"Analyzing n={n}", disable=not self.settings.progress)

        if self.settings.workers > 1:
            with Pool(processes=self.settings.workers) as pool:
                records = list(tqdm(pool.imap(_analyze_job, jobs, chunksize=64), **bar_options))
        else:
            records = [_analyze_job(job) for job in tqdm(jobs, **bar_options)]

        kept = tuple(r for r in self._atlas.records if r.n != n)
        params = dict(self._atlas.params)
        params[f"n{n}"] = {"max_n": max_n, "workers": self.settings.workers}
        self._atlas = Atlas(kept + tuple(records), params)
        self._reindex()

        logger.info(
            "Built n=%d: %d classes in %.1fs",
            n, len(records), (dt.now() - started).total_seconds()
        )
        return self._atlas


    def build_all(self, dimensions: Iterable[int]) -> Atlas:
        """Build each dimension in turn, replacing any already present."""
        for n in dimensions:
            self.build(n)
        return self._atlas


    """
    ╔═══════════════════╗
    ║ Lookup Operations ║
    ╚═══════════════════╝
    """
    # ~~~~~ By Landscape ~~~~~
    def lookup_rank_vector(self, rv: RankVector) -> ClassRecord:
        """
        Raises:
            NotFoundError: Dimension absent from the atlas
        """
        self._atlas.records_for(rv.n)
        canonical, _ = canonicalize(rv, self.settings.max_n)
        try:
            return self._index[(rv.n, canonical.ranks)]
        except KeyError:
            # Unreachable for a complete dimension
            raise NotFoundError(f"Canonical form {canonical.letters} missing from the atlas") from None


    def lookup(self, fitness: Sequence[float], n: Optional[int] = None) -> ClassRecord:
        """
        Class of an arbitrary fitness table

        Arguments:
            fitness (Sequence[float]): 2**n values, entry i belongs to node i
            n (Optional[int]): Dimension; inferred from the length when None

        Returns:
            ClassRecord: The unique matching class

        Raises:
            DomainError: Length is not a power of two, or disagrees with n
            NotFoundError: Dimension absent from the atlas
        """
        values = list(fitness)
        if n is None:
            size = len(values)
            if size < 2 or size & (size - 1):
                raise DomainError(f"{size} values is not 2**n for any n >= 1")
            n = size.bit_length() - 1
        rv = rank_of(values, n, self.settings.tie_epsilon)
        return self.lookup_rank_vector(rv)


    # ~~~~~ By Identity ~~~~~
    def get(self, n: int, class_id: int) -> ClassRecord:
        return self._atlas.get(n, class_id)


    def find_by_signature(self, signature: tuple, n: Optional[int] = None) -> List[ClassRecord]:
        """
        Classes whose signature matches exactly. More than one result is a
        signature collision and is logged.
        """
        pool = self._atlas.records if n is None else self._atlas.records_for(n)
        found = [r for r in pool if r.signature() == signature]
        if len(found) > 1:
            logger.warning(
                "Signature shared by %d classes: %s",
                len(found), ", ".join(f"n={r.n}#{r.class_id}" for r in found)
            )
        return found


    def signature_collisions(self, n: int) -> Dict[tuple, List[int]]:
        """Signatures carried by more than one class of dimension n."""
        groups: Dict[tuple, List[int]] = {}
        for record in self._atlas.records_for(n):
            groups.setdefault(record.signature(), []).append(record.class_id)
        return {sig: ids for sig, ids in groups.items() if len(ids) > 1}


    """
    ╔══════════════════╗
    ║ Atlas Statistics ║
    ╚══════════════════╝
    """
    def stats(self, n: int) -> AtlasStats:
        return compute_stats(self._atlas.records_for(n))


    def totals(self) -> Dict[int, Dict[str, int]]:
        """Classes and rankings held per dimension."""
        return {
            n: {
                "classes": len(self._atlas.records_for(n)),
                "rankings": sum(r.orbit_size for r in self._atlas.records_for(n)),
            }
            for n in self._atlas.dimensions
        }


    """
    ╔════════════════════════════╗
    ║ Data Validation Operations ║
    ╚════════════════════════════╝
    """
    def audit(self) -> Dict[str, List[Dict[str, Any]]]:
        """
        Recompute every record from its canonical ranks and compare

        Returns:
            Dict[str, List[Dict]]: Issue lists; all empty for a sound atlas
                - not_canonical: stored form is not its own canonical form
                - orbit_mismatch: orbit or stabilizer differ
                - property_mismatch / best_mismatch / first_mismatch
                - id_order: ids not in canonical-form order
                - ranking_totals: orbit sizes do not add up to the ranking count

        Notes:
            Walks every class, so n=3 takes as long as a rebuild of the
            analyses (classification itself is not repeated).
        """
        issues: Dict[str, List[Dict[str, Any]]] = {
            "not_canonical": [],
            "orbit_mismatch": [],
            "partition_mismatch": [],
            "property_mismatch": [],
            "best_mismatch": [],
            "first_mismatch": [],
            "id_order": [],
            "ranking_totals": [],
        }
        max_n = self.settings.max_n

        for n in self._atlas.dimensions:
            records = self._atlas.records_for(n)
            for position, record in enumerate(
                tqdm(records, desc=f"Auditing n={n}", disable=not self.settings.progress)
            ):
                where = {"n": n, "class_id": record.class_id}
                canonical, info = canonicalize(record.canonical_ranks, max_n)
                if canonical != record.canonical_ranks:
                    issues["not_canonical"].append({**where, "canonical": canonical.letters})
                if (info.orbit_size, info.stabilizer_order) != (record.orbit_size, record.stabilizer_order):
                    issues["orbit_mismatch"].append(
                        {**where, "stored": (record.orbit_size, record.stabilizer_order),
                         "computed": (info.orbit_size, info.stabilizer_order)}
                    )
                if partition_of(record.canonical_ranks) != record.partition:
                    issues["partition_mismatch"].append(where)
                if analyze(record.canonical_ranks, max_n) != record.properties:
                    issues["property_mismatch"].append(where)
                if analyze_best(record.canonical_ranks, max_n) != record.perf_best:
                    issues["best_mismatch"].append(where)
                if analyze_first(record.canonical_ranks, max_n) != record.perf_first:
                    issues["first_mismatch"].append(where)
                if record.class_id != position or (
                    position and records[position - 1].canonical_ranks >= record.canonical_ranks
                ):
                    issues["id_order"].append(where)

            expected = count_rankings(n).total
            found = sum(r.orbit_size for r in records)
            if found != expected:
                issues["ranking_totals"].append({"n": n, "expected": expected, "found": found})

        bad = sum(len(v) for v in issues.values())
        if bad:
            logger.warning("Audit found %d issue(s)", bad)
        return issues


    """
    ╔══════════════════════════╗
    ║ Import/Export Operations ║
    ╚══════════════════════════╝
    """
    def save(self, path: Union[os.PathLike, str]) -> Path:
        return write_atlas(self._atlas, path)


    @classmethod
    def load(
        cls,
        path: Union[os.PathLike, str],
        settings: Optional[Settings] = None
    ) -> "AtlasManager":
        """
        Raises:
            AtlasFormatError: File fails the format checks
            OSError: File cannot be read
        """
        return cls(settings, read_atlas(path))


    def merge_file(self, path: Union[os.PathLike, str]) -> Atlas:
        """Add the dimensions stored in another atlas file."""
        self._atlas = self._atlas.merged(read_atlas(path))
        self._reindex()
        return self._atlas


    def export_csv(self, path: Union[os.PathLike, str]) -> Path:
        """
        Flat table, one row per class, decimals only

        Notes:
            The first line is a comment carrying the format tag; values
            absent for a climber that always succeeds are written as "-".
        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(f"# {CSV_FORMAT}\n")
            writer = csv.writer(f)
            writer.writerow(CSV_COLUMNS)
            for r in self._atlas.records:
                p = r.properties
                writer.writerow(
                    [
                        r.n,
                        r.class_id,
                        r.canonical_ranks.letters,
                        r.k,
                        r.orbit_size,
                        r.stabilizer_order,
                        p.global_optima,
                        p.strict_suboptima,
                        p.weak_suboptima,
                        p.neutral_edges,
                        p.neutral_degree,
                        p.neutral_networks,
                        p.optimal_plateaus,
                        p.suboptimal_plateaus,
                        p.deceptive_flag.name.lower(),
                    ]
                    + [format_decimal(v) for v in r.perf_best.table_row()]
                    + [format_decimal(v) for v in r.perf_first.table_row()]
                )
        logger.info("Exported %d rows to %s", len(self._atlas), path)
        return path


    def backup(self, backup_dir: Union[os.PathLike, str]) -> Optional[Path]:
        """
        Timestamped copy of the atlas file and its CSV export

        Arguments:
            backup_dir (Union[str, Path]): Directory receiving backup_<timestamp>/

        Returns:
            Optional[Path]: Backup directory, or None when it failed
        """
        timestamp = dt.now().strftime("%Y%m%d_%H%M%S")
        target = Path(backup_dir) / f"backup_{timestamp}"
        try:
            target.mkdir(parents=True, exist_ok=True)
            self.save(target / "atlas.jsonl")
            self.export_csv(target / "atlas.csv")
            return target

        except OSError as e:
            logger.error("Backup failed: %s", e)
            shutil.rmtree(target, ignore_errors=True)
            return None
