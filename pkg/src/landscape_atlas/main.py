# -*- coding: utf-8 -*-
"""
src.landscape_atlas.main.py - Landscape-Atlas
Created by NCagle
2025-02-22
      _
   __(.)<
~~~⋱___)~~~

Command-line front end.

Example Usage:
landscape-atlas counts --n 4
landscape-atlas build --n 2 --out data/atlas/atlas_n2.jsonl
landscape-atlas lookup --n 2 --fitness 4.0,1.0,9.0,3.0
landscape-atlas render --n 2 --class-id 3 --out class3.dot
landscape-atlas stats --n 3 --csv-dir out/
landscape-atlas verify --level fast

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 capacity error, 4 I/O error.
"""

import argparse
import csv
import logging
import sys
from pathlib import Path
from time import perf_counter
from typing import List, Optional, Sequence

from landscape_atlas.analysis.canon import count_injective_classes
from landscape_atlas.analysis.rankspace import count_rankings, rank_of
from landscape_atlas.atlas.manager import AtlasManager
from landscape_atlas.atlas.verify import LEVELS, run_checks
from landscape_atlas.config import Settings, load_settings
from landscape_atlas.models.records import ClassRecord, ClimbReport
from landscape_atlas.utils.errors import AtlasError, DomainError, VerificationError
from landscape_atlas.utils.formatting import format_decimal, format_exact
from landscape_atlas.utils.render import landscape_to_dot, parse_dot

logger = logging.getLogger("landscape_atlas")


def parse_fitness(text: str) -> List[float]:
    """
    "4.0,1.0,9.0,3.0" -> [4.0, 1.0, 9.0, 3.0]

    Raises:
        DomainError: Empty entry or a value that is not a number
    """
    try:
        return [float(part) for part in text.split(",")]
    except ValueError as e:
        raise DomainError(f"Fitness must be comma-separated numbers: {text!r}") from e


"""
╔═══════════════════╗
║ Shared Helpers    ║
╚═══════════════════╝
"""
def _open_atlas(args: argparse.Namespace, settings: Settings, n: int) -> AtlasManager:
    # An explicit --atlas must exist; the default location falls back to
    # an in-memory build
    if args.atlas:
        return AtlasManager.load(args.atlas, settings)
    default = settings.atlas_path(n)
    if default.exists():
        return AtlasManager.load(default, settings)
    logger.info("No atlas at %s; building n=%d in memory", default, n)
    manager = AtlasManager(settings)
    manager.build(n)
    return manager


def _climb_lines(label: str, report: ClimbReport) -> List[str]:
    rows = (
        ("success rate", report.success_rate),
        ("steps | success", report.exp_steps_success),
        ("evals | success", report.exp_evals_success),
        ("steps | fail", report.exp_steps_fail),
        ("evals | fail", report.exp_evals_fail),
        ("ERT", report.multistart_ert),
    )
    lines = [f"  {label}"]
    for name, value in rows:
        lines.append(f"    {name:<16} {format_decimal(value):>8}   ({format_exact(value)})")
    return lines


def describe_record(record: ClassRecord) -> str:
    p = record.properties
    lines = [
        f"class {record.class_id} (n={record.n})",
        f"  canonical ranks   {record.canonical_ranks.letters}",
        f"  partition         {record.partition}",
        f"  orbit / stabilizer {record.orbit_size} / {record.stabilizer_order}",
        f"  tags              {', '.join(record.tags) or '-'}",
        f"  global optima     {p.global_optima}",
        f"  suboptima         {p.strict_suboptima} strict, {p.weak_suboptima} weak ({p.deceptive_flag.name.lower()})",
        f"  neutral edges     {p.neutral_edges} (degree {p.neutral_degree}, {p.neutral_networks} network(s))",
        f"  plateaus          {p.optimal_plateaus} optimal, {p.suboptimal_plateaus} suboptimal",
    ]
    lines += _climb_lines("best-improvement", record.perf_best)
    lines += _climb_lines("first-improvement", record.perf_first)
    return "\n".join(lines)


"""
╔══════════╗
║ Commands ║
╚══════════╝
"""
def cmd_counts(args: argparse.Namespace, settings: Settings) -> int:
    counts = count_rankings(args.n)
    print(f"n={args.n}, |X|={1 << args.n}")
    print(f"{'k':>3}  {'partitions':>12}  rank functions")
    for k, rankings in counts.per_k.items():
        print(f"{k:>3}  {counts.partitions_per_k[k]:>12}  {rankings}")
    print(f"total partitions      {counts.total_partitions}")
    print(f"total rank functions  {counts.total}")
    print(f"injective classes     {count_injective_classes(args.n)}")
    return 0


def cmd_build(args: argparse.Namespace, settings: Settings) -> int:
    started = perf_counter()
    manager = AtlasManager(settings)
    manager.build(args.n)
    out = manager.save(args.out or settings.atlas_path(args.n))
    totals = manager.totals()[args.n]
    print(
        f"n={args.n}: {totals['classes']} classes, {totals['rankings']} rankings "
        f"-> {out} ({perf_counter() - started:.1f}s)"
    )
    return 0


def cmd_lookup(args: argparse.Namespace, settings: Settings) -> int:
    fitness = parse_fitness(args.fitness)
    manager = _open_atlas(args, settings, args.n)
    record = manager.lookup(fitness, args.n)
    print(f"ranks {rank_of(fitness, args.n, settings.tie_epsilon).letters}")
    print(describe_record(record))
    return 0


def cmd_render(args: argparse.Namespace, settings: Settings) -> int:
    if args.fitness:
        rv = rank_of(parse_fitness(args.fitness), args.n, settings.tie_epsilon)
        title = "landscape"
    elif args.class_id is not None:
        rv = _open_atlas(args, settings, args.n).get(args.n, args.class_id).canonical_ranks
        title = f"class_{args.class_id}"
    else:
        raise DomainError("render needs --class-id or --fitness")

    dot = landscape_to_dot(rv, title=title)
    parse_dot(dot)
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(dot, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        print(dot, end="")
    return 0


def _write_cumulative(directory: Path, n: int, name: str, points) -> Path:
    path = directory / f"n{n}_{name}.csv"
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(("threshold", "exact", "count"))
        for threshold, count in points:
            writer.writerow((format_decimal(threshold), format_exact(threshold), count))
    return path


def cmd_stats(args: argparse.Namespace, settings: Settings) -> int:
    manager = _open_atlas(args, settings, args.n)
    stats = manager.stats(args.n)

    print(f"n={args.n}: {stats.classes} classes")
    print("deceptive neutral plateau     count       %")
    for (deceptive, neutral, plateau), count, percent in stats.cross_tab_rows():
        marks = "".join(f"{'yes' if flag else 'no':<9}" for flag in (deceptive, neutral, plateau))
        print(f"{marks}{count:>6}  {percent:>6}")
    print(f"total{stats.classes:>28}")

    for name, histogram in stats.histograms.items():
        cells = ", ".join(f"{value}: {count}" for value, count in histogram.items())
        print(f"{name:<20} {cells}")

    for label, tally in (("success rate", stats.success_tally), ("ERT", stats.ert_tally)):
        print(
            f"{label:<13} best better {tally.better} ({stats.percent(tally.better)}%), "
            f"first better {tally.worse} ({stats.percent(tally.worse)}%), equal {tally.equal}"
        )
    for name, count in stats.shares.items():
        print(f"{name:<24} {count:>6}  {stats.percent(count):>6}%")

    if args.csv_dir:
        directory = Path(args.csv_dir)
        directory.mkdir(parents=True, exist_ok=True)
        for name, points in stats.cumulative.items():
            print(f"wrote {_write_cumulative(directory, args.n, name, points)}")
    return 0


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    results = run_checks(args.level, AtlasManager(settings), progress=lambda r: print(r.line()))
    failed = [r.name for r in results if not r.passed]
    reported = sum(1 for r in results if r.reported)
    summary = f"{len(results) - len(failed)} passed, {len(failed)} failed"
    print(f"{summary}, {reported} reported" if reported else summary)
    if failed:
        raise VerificationError(failed)
    return 0


def cmd_export(args: argparse.Namespace, settings: Settings) -> int:
    manager = AtlasManager.load(args.atlas, settings)
    print(f"wrote {manager.export_csv(args.out)}")
    return 0


def cmd_audit(args: argparse.Namespace, settings: Settings) -> int:
    manager = AtlasManager.load(args.atlas, settings)
    issues = manager.audit()
    bad = 0
    for name, found in issues.items():
        bad += len(found)
        print(f"  {'✅' if not found else '❌'} {name}: {len(found)}")
        for issue in found[:10]:
            print(f"      {issue}")
    if bad:
        raise VerificationError([name for name, found in issues.items() if found])
    return 0


"""
╔════════╗
║ Parser ║
╚════════╝
"""
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="landscape-atlas",
        description="Inventory of invariant pseudo-Boolean rank landscapes",
    )
    parser.add_argument("--config", help="JSON settings file (default data/config.json if present)")
    parser.add_argument("--max-n", type=int, help="Largest dimension for full enumeration")
    parser.add_argument("--tie-epsilon", type=float, help="Round fitness to multiples of this before ranking")
    parser.add_argument("--seed", type=int, help="Seed for sampled checks and simulation")
    parser.add_argument("--workers", type=int, help="Processes for classification and analysis")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("-v", "--verbose", action="store_true", help="Shortcut for --log-level INFO")
    parser.add_argument("--no-progress", action="store_true", help="Hide progress bars")

    commands = parser.add_subparsers(dest="command", required=True)

    counts = commands.add_parser("counts", help="Partitions and rank functions per k")
    counts.add_argument("--n", type=int, required=True)
    counts.set_defaults(handler=cmd_counts)

    build = commands.add_parser("build", help="Build and save the atlas for one dimension")
    build.add_argument("--n", type=int, required=True)
    build.add_argument("--out", help="Atlas file (default <atlas_dir>/atlas_n<N>.jsonl)")
    build.set_defaults(handler=cmd_build)

    lookup = commands.add_parser("lookup", help="Class of a fitness table")
    lookup.add_argument("--n", type=int, required=True)
    lookup.add_argument("--fitness", required=True, help="2**n comma-separated values, node 0 first")
    lookup.add_argument("--atlas", help="Atlas file")
    lookup.set_defaults(handler=cmd_lookup)

    render = commands.add_parser("render", help="Dot graph of a class or fitness table")
    render.add_argument("--n", type=int, required=True)
    render.add_argument("--class-id", type=int)
    render.add_argument("--fitness")
    render.add_argument("--atlas", help="Atlas file")
    render.add_argument("--out", help="Dot file (default stdout)")
    render.set_defaults(handler=cmd_render)

    stats = commands.add_parser("stats", help="Cross-tab, histograms, tallies and distributions")
    stats.add_argument("--n", type=int, required=True)
    stats.add_argument("--atlas", help="Atlas file")
    stats.add_argument("--csv-dir", help="Directory for cumulative-distribution CSVs")
    stats.set_defaults(handler=cmd_stats)

    verify = commands.add_parser("verify", help="Check against the published reference values")
    verify.add_argument("--level", choices=LEVELS, default="fast")
    verify.set_defaults(handler=cmd_verify)

    export = commands.add_parser("export", help="Flat CSV export of an atlas")
    export.add_argument("--atlas", required=True)
    export.add_argument("--out", required=True)
    export.set_defaults(handler=cmd_export)

    audit = commands.add_parser("audit", help="Recompute every record and report mismatches")
    audit.add_argument("--atlas", required=True)
    audit.set_defaults(handler=cmd_audit)

    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=level.upper(),
        format="%(asctime)s %(levelname)-8s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings(
            args.config,
            max_n=args.max_n,
            tie_epsilon=args.tie_epsilon,
            seed=args.seed,
            workers=args.workers,
            log_level="INFO" if args.verbose else args.log_level,
            progress=False if args.no_progress else None,
        )
        configure_logging(settings.log_level)
        return args.handler(args, settings)

    except AtlasError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
