"""Command-line entry point: ``ribbonjones invariants|check|cable``.

Output is plain ``key=value`` blocks separated by blank lines, identical
for identical input, flags and seed.  Exit status: 0 success, 1 a checker
failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .bandsurface import (BandError, BandFile, DivisibilityBreach, boundary_link, load_band,
                          surface_determinant, surface_stats)
from .diagram import DiagramError, TableEntry, bundled_links, cable, parse_link_table
from .jones import EngineError, jones_profile
from .laurent import NotInQSubring
from .theorems import SUITES, orientation_slots, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
ENGINES = ("statesum", "sweep", "auto")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    engine: str = "auto"
    series_order: int = 4
    seed: int = 0
    trials: int | None = None
    paths: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.series_order < 0:
            raise UsageError("--order must be non-negative")
        if self.trials is not None and self.trials < 1:
            raise UsageError("--trials must be at least 1")
        if self.engine not in ENGINES:
            raise UsageError(f"--engine must be one of {', '.join(ENGINES)}")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror or exc}") from None


def load_links(path: str) -> list[TableEntry]:
    """Entries of a ``.pd`` or ``.tbl`` file; bare ``PD[...]`` lines get the file stem as name."""
    text = _read(path)
    stem = Path(path).stem
    lines = text.splitlines()
    bare = [i for i, ln in enumerate(lines) if ln.strip().startswith("PD")]
    for n, i in enumerate(bare):
        label = stem if len(bare) == 1 else f"{stem}:{n + 1}"
        lines[i] = f"{label} {lines[i].strip()}"
    try:
        entries = parse_link_table("\n".join(lines), path)
    except DiagramError as exc:
        raise UsageError(str(exc)) from None
    if not entries:
        raise UsageError(f"{path}: no diagrams found")
    return entries


def load_band_file(path: str) -> BandFile:
    text = _read(path)
    try:
        band = load_band(text, Path(path).stem)
    except BandError as exc:
        raise UsageError(f"{path}: {exc}") from None
    if not band.surface.tiles:
        raise UsageError(f"{path}: no tiles found")
    return band


def render_link(entry: TableEntry, config: RunConfig) -> str:
    report = jones_profile(entry.diagram, entry.name, config.engine, config.series_order)
    lines = [report.render()]
    if entry.expected_detV is not None:
        lines.append(f"expected_detV={entry.expected_detV}")
    if entry.expected_null is not None:
        lines.append(f"expected_null={entry.expected_null}")
    return "\n".join(lines)


def render_band(band: BandFile, config: RunConfig) -> str:
    s = band.surface
    stats = surface_stats(s)
    choice = band.orientation()
    if choice == "induced" and not stats.orientable:
        # no canonical orientation; default to the traversal order
        choice = (1,) * orientation_slots(s)
    d = boundary_link(s, choice)
    report = jones_profile(d, band.name, config.engine, config.series_order)
    det = surface_determinant(s, choice, config.engine, stats)
    orient_text = choice if isinstance(choice, str) else ",".join(map(str, choice))
    lines = [
        f"surface={band.name}",
        f"tiles={s.render()}",
        stats.render(),
        f"orientation={orient_text}",
        report.render(),
        f"surface_det={det}",
    ]
    for key in sorted(band.meta):
        lines.append(f"meta_{key}={band.meta[key]}")
    return "\n".join(lines)


def cmd_invariants(config: RunConfig, link: str | None = None) -> tuple[int, list[str]]:
    blocks: list[str] = []
    items: list[TableEntry | BandFile] = []
    if config.paths:
        for path in config.paths:
            if path.endswith(".band"):
                items.append(load_band_file(path))
            elif path.endswith((".pd", ".tbl")):
                items += load_links(path)
            else:
                raise UsageError(f"{path}: expected a .pd, .tbl or .band file")
    else:
        items = list(bundled_links().values())
    if link is not None:
        items = [it for it in items if it.name == link]
        if not items:
            raise UsageError(f"no link named {link!r}")
    for it in items:
        if isinstance(it, BandFile):
            blocks.append(render_band(it, config))
        else:
            blocks.append(render_link(it, config))
    return EXIT_OK, blocks


def cmd_check(suite: str, config: RunConfig) -> tuple[int, list[str]]:
    engine = "sweep" if config.engine == "auto" else config.engine
    outcomes = run_suite(suite, config.trials, config.seed, engine)
    passed = all(o.passed for o in outcomes)
    blocks = [o.render() for o in outcomes]
    blocks.append(f"suite={suite}\npassed={'true' if passed else 'false'}")
    return (EXIT_OK if passed else EXIT_FAIL), blocks


def _resolve_link(name: str) -> TableEntry:
    if name.endswith((".pd", ".tbl")):
        return load_links(name)[0]
    table = bundled_links()
    if name not in table:
        raise UsageError(f"unknown link {name!r}; bundled: {', '.join(table)}")
    return table[name]


def cmd_cable(name: str, c: int, config: RunConfig) -> tuple[int, list[str]]:
    if c < 1:
        raise UsageError("cable multiplicity must be at least 1")
    entry = _resolve_link(name)
    try:
        d = cable(entry.diagram, c)
    except DiagramError as exc:
        raise UsageError(str(exc)) from None
    label = f"cable({entry.name},{c})"
    return EXIT_OK, [jones_profile(d, label, config.engine, config.series_order).render()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--engine", default="auto", choices=ENGINES,
                        help="bracket engine; auto uses the state sum up to 18 crossings")
    common.add_argument("--order", type=int, default=4, metavar="K",
                        help="series order for the d_k / v_k expansions (default 4)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=None,
                        help="random trials per checker (suite defaults otherwise)")

    parser = argparse.ArgumentParser(
        prog="ribbonjones",
        description="Jones polynomial invariants of links and of the surfaces they bound.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("invariants", parents=[common],
                       help="reports for .pd/.tbl links and .band surfaces")
    p.add_argument("paths", nargs="*", help="input files; the bundled table if omitted")
    p.add_argument("--link", metavar="NAME", help="only the entry with this name")
    p = sub.add_parser("check", parents=[common], help="run checker suites")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p = sub.add_parser("cable", parents=[common], help="report for a 0-framed c-cable")
    p.add_argument("link", help="bundled link name or .pd file")
    p.add_argument("c", type=int)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        config = RunConfig(args.engine, args.order, args.seed, args.trials,
                           list(getattr(args, "paths", [])))
        if args.command == "invariants":
            code, blocks = cmd_invariants(config, args.link)
        elif args.command == "check":
            code, blocks = cmd_check(args.suite, config)
        else:
            code, blocks = cmd_cable(args.link, args.c, config)
    except (UsageError, EngineError, BandError, DiagramError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DivisibilityBreach, NotInQSubring) as exc:
        print(f"error: invariant breach: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print("\n\n".join(blocks))
    return code


if __name__ == "__main__":
    sys.exit(main())
