"""Command-line scenario runner.

    meshca run --grid 5 --radios 2 --channels 3 --alg ois --out results/
    meshca suite suite.json --jobs 4 --out results/
    meshca export-dot --grid 3 --radios 2 --channels 3 --out graphs/

Exit codes: 0 ok, 2 configuration error, 3 algorithm precondition failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from .assignment import ALGORITHMS, run_algorithm
from .conflict import build_emmcg
from .errors import MeshCAError, PreconditionError
from .report import (
    ReportRow,
    ca_document,
    distribution_table,
    dumps,
    emmcg_adjacency,
    emmcg_dot,
    load_ca_document,
    render_csv,
    report_row,
    tid_series,
)
from .topology import WmnGraph, generate_grid, generate_random, load_wmn

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_PRECONDITION = 3


class ConfigError(MeshCAError, ValueError):
    """Invalid scenario or suite configuration."""


@dataclass(frozen=True)
class Scenario:
    """One topology + algorithm + seed combination.

    Exactly one of ``grid``, ``random`` (node count, area, range) or ``wmn``
    (path to a WMN document) selects the topology. ``channels=None`` means
    one more than the radio count, or the document's own channel count.
    """

    algorithm: str
    grid: int | None = None
    random: tuple[int, float, float] | None = None
    wmn: str | None = None
    radios: int = 2
    channels: int | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise ConfigError(f"unknown algorithm {self.algorithm!r}; choose from {', '.join(ALGORITHMS)}")
        if sum(x is not None for x in (self.grid, self.random, self.wmn)) != 1:
            raise ConfigError("give exactly one of grid, random or wmn")
        if self.radios < 1:
            raise ConfigError("radios must be at least 1")
        if self.channels is not None and self.channels < 1:
            raise ConfigError("channels must be at least 1")

    @property
    def size(self) -> str:
        if self.grid is not None:
            return f"{self.grid}x{self.grid}"
        if self.random is not None:
            n, area, rng = self.random
            return f"rand{n}-{area:g}-{rng:g}"
        return Path(self.wmn).stem

    @property
    def name(self) -> str:
        return f"{self.size}-{self.algorithm}-s{self.seed}"

    def build(self) -> tuple[WmnGraph, int]:
        """The mesh and the channel count M to assign with."""
        m = self.channels if self.channels is not None else self.radios + 1
        if self.grid is not None:
            return generate_grid(self.grid, self.radios, m), m
        if self.random is not None:
            n, area, rng = self.random
            return generate_random(n, area, rng, self.radios, m, self.seed), m
        try:
            doc = json.loads(Path(self.wmn).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read WMN document {self.wmn}: {exc}") from exc
        g = load_wmn(doc)
        return g, self.channels if self.channels is not None else g.channel_count


@dataclass(frozen=True)
class Outcome:
    row: ReportRow
    files: dict[str, str]


def run_scenario(s: Scenario, dot: bool = False) -> Outcome:
    """Run the pipeline and render every report file in memory."""
    g, m = s.build()
    cg = build_emmcg(g)
    trace = run_algorithm(s.algorithm, g, cg, m, seed=s.seed)
    doc = ca_document(trace.algorithm, s.seed, trace.final_ca, trace.tid_sequence)
    load_ca_document(json.loads(dumps(doc)), g, cg)
    row = report_row(s.name, s.algorithm, g, cg, trace.final_ca, m, size=s.size)
    files = {
        f"{s.name}.ca.json": dumps(doc),
        f"{s.name}.csv": render_csv([row]),
        f"{s.name}.table.txt": distribution_table([row]),
    }
    if dot:
        files[f"{s.name}.emmcg.dot"] = emmcg_dot(cg)
    for event in trace.guard_events:
        print(f"warning: {s.name}: {event}", file=sys.stderr)
    return Outcome(row, files)


def exit_code(exc: BaseException) -> int:
    return EXIT_PRECONDITION if isinstance(exc, PreconditionError) else EXIT_CONFIG


def _write(out: Path, files: dict[str, str]) -> None:
    out.mkdir(parents=True, exist_ok=True)
    for name, text in files.items():
        (out / name).write_text(text)


# -- suites -------------------------------------------------------------------------

_SCENARIO_KEYS = {"alg", "algorithm", "grid", "random", "wmn", "radios", "channels", "seed"}
_SUITE_KEYS = {"scenarios", "grids", "algorithms", "radios", "channels", "seed", "out"}


def _parse_random(value: Any) -> tuple[int, float, float]:
    parts = value.split(",") if isinstance(value, str) else list(value)
    try:
        n, area, rng = parts
        return int(n), float(area), float(rng)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"random topology needs N,AREA,RANGE, got {value!r}") from exc


def suite_scenarios(
    config: dict[str, Any], overrides: dict[str, Any], base_dir: Path | None = None
) -> list[Scenario]:
    """Expand a suite document into scenarios.

    Explicit ``scenarios`` entries come first, then the ``grids`` x
    ``algorithms`` cross product. Top-level ``radios``, ``channels`` and
    ``seed`` act as defaults; non-None ``overrides`` beat both. Relative
    ``wmn`` paths resolve against ``base_dir``.
    """
    if not isinstance(config, dict):
        raise ConfigError("suite config must be a JSON object")
    unknown = set(config) - _SUITE_KEYS
    if unknown:
        raise ConfigError(f"unknown suite keys: {sorted(unknown)}")
    base = {k: config[k] for k in ("radios", "channels", "seed") if k in config}
    forced = {k: v for k, v in overrides.items() if v is not None}
    entries = list(config.get("scenarios", []))
    grids, algorithms = config.get("grids", []), config.get("algorithms", [])
    if bool(grids) != bool(algorithms):
        raise ConfigError("grids and algorithms must be given together")
    entries += [{"grid": n, "alg": a} for n in grids for a in algorithms]
    out = []
    for k, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise ConfigError(f"scenario {k} is not an object")
        unknown = set(entry) - _SCENARIO_KEYS
        if unknown:
            raise ConfigError(f"scenario {k}: unknown keys {sorted(unknown)}")
        merged = {**base, **entry, **forced}
        alg = merged.get("alg", merged.get("algorithm"))
        wmn = merged.get("wmn")
        if wmn is not None and base_dir is not None:
            wmn = str(base_dir / wmn)
        try:
            out.append(
                Scenario(
                    algorithm=alg,
                    grid=merged.get("grid"),
                    random=_parse_random(merged["random"]) if "random" in merged else None,
                    wmn=wmn,
                    radios=int(merged.get("radios", 2)),
                    channels=merged.get("channels"),
                    seed=int(merged.get("seed", 0)),
                )
            )
        except ConfigError as exc:
            raise ConfigError(f"scenario {k}: {exc}") from exc
    return out


def _attempt(args: tuple[Scenario, bool]) -> tuple[Outcome | None, str | None, int]:
    s, dot = args
    try:
        return run_scenario(s, dot), None, EXIT_OK
    except MeshCAError as exc:
        return None, f"{type(exc).__name__}: {exc}", exit_code(exc)


def run_suite(scenarios: Sequence[Scenario], out: Path, jobs: int = 1, dot: bool = False) -> int:
    """Run every scenario, then write merged reports ordered by scenario index."""
    work = [(s, dot) for s in scenarios]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_attempt, work))
    else:
        results = [_attempt(w) for w in work]

    rows, failures, files = [], [], {}
    for s, (outcome, error, code) in zip(scenarios, results):
        if outcome is None:
            failures.append((s.name, error, code))
            continue
        rows.append(outcome.row)
        doc_name = f"{s.name}.ca.json"
        files[f"ca/{doc_name}"] = outcome.files[doc_name]
        if dot:
            files[f"dot/{s.name}.emmcg.dot"] = outcome.files[f"{s.name}.emmcg.dot"]

    width = max((len(r.channel_radios) for r in rows), default=0)
    files["suite.csv"] = render_csv(rows, width)
    files["table.txt"] = distribution_table(rows)
    files["tid_series.csv"] = tid_series(rows)
    for name, text in files.items():
        path = out / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)

    sys.stdout.write(files["table.txt"])
    if not failures:
        return EXIT_OK
    print(f"{len(failures)} of {len(scenarios)} scenarios failed:", file=sys.stderr)
    for name, error, _ in failures:
        print(f"  {name}: {error}", file=sys.stderr)
    return max(code for *_, code in failures)


# -- argument parsing ---------------------------------------------------------------


def _topology_flags(p: argparse.ArgumentParser, required: bool) -> None:
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument("--grid", type=int, metavar="N", help="N x N lattice with spacing equal to the range")
    group.add_argument("--random", metavar="N,AREA,RANGE", help="N nodes placed uniformly in an AREA square")
    group.add_argument("--wmn", metavar="FILE", help="WMN JSON document")
    p.add_argument("--radios", type=int, default=None, help="radios per node for generated meshes (default 2)")
    p.add_argument("--channels", type=int, default=None, metavar="M", help="orthogonal channel count")
    p.add_argument("--seed", type=int, default=None, help="seed for random placement and tie-breaks")
    p.add_argument("--out", default=None, metavar="DIR", help="output directory (default .)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="meshca", description="Static channel assignment for multi-radio meshes")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one scenario")
    _topology_flags(run, required=True)
    run.add_argument("--alg", choices=ALGORITHMS, default="ois")
    run.add_argument("--dot", action="store_true", help="also write the conflict graph as DOT")

    suite = sub.add_parser("suite", help="run the scenarios of a JSON suite file")
    suite.add_argument("config", help="suite JSON file")
    suite.add_argument("--radios", type=int, default=None)
    suite.add_argument("--channels", type=int, default=None, metavar="M")
    suite.add_argument("--seed", type=int, default=None)
    suite.add_argument("--out", default=None, metavar="DIR")
    suite.add_argument("--jobs", type=int, default=1, help="worker processes")
    suite.add_argument("--dot", action="store_true")

    export = sub.add_parser("export-dot", help="write the conflict graph as DOT and JSON adjacency")
    _topology_flags(export, required=True)
    return parser


def _scenario_from_args(args: argparse.Namespace, algorithm: str) -> Scenario:
    return Scenario(
        algorithm=algorithm,
        grid=args.grid,
        random=_parse_random(args.random) if args.random else None,
        wmn=args.wmn,
        radios=args.radios if args.radios is not None else 2,
        channels=args.channels,
        seed=args.seed or 0,
    )


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            s = _scenario_from_args(args, args.alg)
            outcome = run_scenario(s, args.dot)
            _write(Path(args.out or "."), outcome.files)
            sys.stdout.write(outcome.files[f"{s.name}.csv"])
            return EXIT_OK
        if args.command == "export-dot":
            s = _scenario_from_args(args, "uniform")
            g, _ = s.build()
            cg = build_emmcg(g)
            _write(
                Path(args.out or "."),
                {f"{s.size}.emmcg.dot": emmcg_dot(cg), f"{s.size}.emmcg.json": dumps(emmcg_adjacency(cg))},
            )
            print(f"{s.size}: {cg.m} links, {len(cg.interference_edges)} interference, "
                  f"{len(cg.colocation_edges)} co-location edges")
            return EXIT_OK
        try:
            config = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read suite config {args.config}: {exc}") from exc
        overrides = {"radios": args.radios, "channels": args.channels, "seed": args.seed}
        scenarios = suite_scenarios(config, overrides, Path(args.config).parent)
        out = Path(args.out or config.get("out", "."))
        if args.jobs < 1:
            raise ConfigError("--jobs must be at least 1")
        return run_suite(scenarios, out, args.jobs, args.dot)
    except MeshCAError as exc:
        print(f"meshca: error: {exc}", file=sys.stderr)
        return exit_code(exc)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
