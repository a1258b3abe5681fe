# -*- coding: utf-8 -*-
"""
src.landscape_atlas.atlas.schema.py - Landscape-Atlas
Created by NCagle
2025-02-16
      _
   __(.)<
~~~⋱___)~~~

Atlas container and its line-delimited JSON file format.

File layout:
    line 1   header {"format", "dimensions", "digest", "params"}
    line 2+  one ClassRecord per line, sorted by (n, class_id)

Exact values are stored as {"exact": "13/3", "decimal": 4.333333}; the
decimal is a convenience and is ignored on load. The digest is the
SHA-256 of the record lines joined by newlines.
"""

import hashlib
import json
import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from landscape_atlas.models.base import DeceptiveFlag, Partition, RankVector
from landscape_atlas.models.records import ClassRecord, ClimbReport, PropertyReport
from landscape_atlas.utils.constants import ATLAS_FORMAT, STORED_DECIMALS
from landscape_atlas.utils.errors import AtlasFormatError, NotFoundError
from landscape_atlas.utils.formatting import to_decimal

logger = logging.getLogger(__name__)

_PROPERTY_COUNTS = (
    "k_ranks",
    "global_optima",
    "strict_suboptima",
    "weak_suboptima",
    "neutral_edges",
    "neutral_node_count",
    "neutral_networks",
    "optimal_plateaus",
    "suboptimal_plateaus",
    "local_optima",
)

_CLIMB_FIELDS = (
    "success_rate",
    "exp_steps_success",
    "exp_evals_success",
    "exp_steps_fail",
    "exp_evals_fail",
    "multistart_ert",
    "exp_steps_overall",
    "exp_evals_overall",
)


@dataclass(frozen=True)
class Atlas:
    """
    Immutable inventory of classes for one or more dimensions

    Arguments:
        records (Tuple[ClassRecord, ...]): Sorted by (n, class_id)
        params (Dict[str, Any]): Build parameters kept as provenance
    """
    records: Tuple[ClassRecord, ...]
    params: Dict[str, Any] = field(default_factory=dict)


    def __post_init__(self):
        records = tuple(sorted(self.records, key=lambda r: (r.n, r.class_id)))
        object.__setattr__(self, "records", records)
        seen = set()
        for record in records:
            key = (record.n, record.class_id)
            if key in seen:
                raise AtlasFormatError(f"Duplicate class id {record.class_id} for n={record.n}")
            seen.add(key)


    @property
    def dimensions(self) -> Tuple[int, ...]:
        return tuple(sorted({r.n for r in self.records}))

    def records_for(self, n: int) -> List[ClassRecord]:
        """
        Raises:
            NotFoundError: n is not part of the atlas
        """
        found = [r for r in self.records if r.n == n]
        if not found:
            raise NotFoundError(f"Atlas holds no classes for n={n} (has {list(self.dimensions)})")
        return found

    def get(self, n: int, class_id: int) -> ClassRecord:
        for record in self.records_for(n):
            if record.class_id == class_id:
                return record
        raise NotFoundError(f"No class {class_id} for n={n}")

    def merged(self, other: "Atlas") -> "Atlas":
        """Combine atlases of different dimensions."""
        overlap = set(self.dimensions) & set(other.dimensions)
        if overlap:
            raise AtlasFormatError(f"Both atlases hold dimension(s) {sorted(overlap)}")
        return Atlas(self.records + other.records, {**self.params, **other.params})

    @property
    def digest(self) -> str:
        return content_digest(record_line(r) for r in self.records)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


"""
╔═══════════════════════╗
║ Record <-> Dictionary ║
╚═══════════════════════╝
"""
def fraction_to_json(value: Optional[Fraction]) -> Optional[Dict[str, Any]]:
    if value is None:
        return None
    return {"exact": str(value), "decimal": float(to_decimal(value, STORED_DECIMALS))}


def fraction_from_json(value: Optional[Dict[str, Any]]) -> Optional[Fraction]:
    if value is None:
        return None
    try:
        return Fraction(value["exact"])
    except (KeyError, TypeError, ValueError) as e:
        raise AtlasFormatError(f"Bad exact value: {value!r}") from e


def properties_to_dict(report: PropertyReport) -> Dict[str, Any]:
    data: Dict[str, Any] = {name: getattr(report, name) for name in _PROPERTY_COUNTS}
    data["deceptive"] = report.deceptive_flag.name
    data["neutral"] = report.neutral_flag
    data["plateau"] = report.plateau_flag
    data["plateau_sizes"] = list(report.plateau_sizes)
    return data


def properties_from_dict(data: Dict[str, Any]) -> PropertyReport:
    return PropertyReport(
        **{name: int(data[name]) for name in _PROPERTY_COUNTS},
        deceptive_flag=DeceptiveFlag[data["deceptive"]],
        neutral_flag=bool(data["neutral"]),
        plateau_flag=bool(data["plateau"]),
        plateau_sizes=tuple(data["plateau_sizes"]),
    )


def climb_to_dict(report: ClimbReport) -> Dict[str, Any]:
    return {name: fraction_to_json(getattr(report, name)) for name in _CLIMB_FIELDS}


def climb_from_dict(data: Dict[str, Any]) -> ClimbReport:
    return ClimbReport(**{name: fraction_from_json(data[name]) for name in _CLIMB_FIELDS})


def record_to_dict(record: ClassRecord) -> Dict[str, Any]:
    return {
        "n": record.n,
        "class_id": record.class_id,
        "ranks": list(record.canonical_ranks.ranks),
        "letters": record.canonical_ranks.letters,
        "partition": list(record.partition.parts),
        "orbit_size": record.orbit_size,
        "stabilizer_order": record.stabilizer_order,
        "tags": list(record.tags),
        "properties": properties_to_dict(record.properties),
        "best": climb_to_dict(record.perf_best),
        "first": climb_to_dict(record.perf_first),
    }


def record_from_dict(data: Dict[str, Any]) -> ClassRecord:
    """
    Raises:
        AtlasFormatError: Missing field or a value failing model validation
    """
    try:
        n = int(data["n"])
        return ClassRecord(
            n=n,
            class_id=int(data["class_id"]),
            canonical_ranks=RankVector(n, tuple(data["ranks"])),
            partition=Partition(tuple(data["partition"])),
            orbit_size=int(data["orbit_size"]),
            stabilizer_order=int(data["stabilizer_order"]),
            properties=properties_from_dict(data["properties"]),
            perf_best=climb_from_dict(data["best"]),
            perf_first=climb_from_dict(data["first"]),
        )
    except AtlasFormatError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise AtlasFormatError(f"Invalid class record: {e}") from e


def record_line(record: ClassRecord) -> str:
    return json.dumps(record_to_dict(record), sort_keys=True, ensure_ascii=False)


def content_digest(lines: Iterable[str]) -> str:
    return hashlib.sha256("\n".join(lines).encode("utf-8")).hexdigest()


"""
╔════════════╗
║ Atlas File ║
╚════════════╝
"""
def header_for(atlas: Atlas, lines: List[str]) -> Dict[str, Any]:
    dimensions = {}
    for n in atlas.dimensions:
        records = atlas.records_for(n)
        dimensions[str(n)] = {
            "classes": len(records),
            "rankings": sum(r.orbit_size for r in records),
        }
    return {
        "format": ATLAS_FORMAT,
        "dimensions": dimensions,
        "digest": content_digest(lines),
        "params": atlas.params,
    }


def write_atlas(atlas: Atlas, path: Union[os.PathLike, str]) -> Path:
    """Write atlas as header + one record per line; parent dirs are created."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [record_line(r) for r in atlas.records]
    with open(path, "w", encoding="utf-8") as f:
        f.write(json.dumps(header_for(atlas, lines), sort_keys=True) + "\n")
        for line in lines:
            f.write(line + "\n")
    logger.info("Wrote %d records to %s", len(lines), path)
    return path


def read_atlas(path: Union[os.PathLike, str]) -> Atlas:
    """
    Load and check an atlas file

    Raises:
        AtlasFormatError: Unknown format tag, bad JSON, count or digest mismatch
        OSError: File cannot be read
    """
    with open(path, "r", encoding="utf-8") as f:
        raw = [line.rstrip("\n") for line in f if line.strip()]
    if not raw:
        raise AtlasFormatError(f"{path} is empty")

    try:
        header = json.loads(raw[0])
        rows = [json.loads(line) for line in raw[1:]]
    except json.JSONDecodeError as e:
        raise AtlasFormatError(f"{path}: invalid JSON ({e})") from e

    if not isinstance(header, dict) or header.get("format") != ATLAS_FORMAT:
        raise AtlasFormatError(
            f"{path}: expected format {ATLAS_FORMAT!r}, got {header.get('format') if isinstance(header, dict) else header!r}"
        )

    atlas = Atlas(tuple(record_from_dict(row) for row in rows), dict(header.get("params", {})))

    if atlas.digest != header.get("digest"):
        raise AtlasFormatError(f"{path}: content digest mismatch")
    for n_text, expected in header.get("dimensions", {}).items():
        found = sum(1 for r in atlas.records if r.n == int(n_text))
        if found != expected.get("classes"):
            raise AtlasFormatError(
                f"{path}: header lists {expected.get('classes')} classes for n={n_text}, found {found}"
            )
    logger.info("Read %d records from %s", len(atlas), path)
    return atlas
