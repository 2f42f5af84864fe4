"""Command-line pipeline: ingest an edge list, compute closures, extract
backbones, and write reports; plus verification and descriptive-stats modes.

Exit codes: 0 success, 1 input or configuration error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .algebra import get_algebra
from .backbone import extract_backbone, verify_backbone_sufficiency
from .closure import closure_apsp, closure_distance_product
from .errors import DistBackboneError
from .graph import Semantics, WeightedDigraph, to_distance
from .io import (
    load_edge_list,
    load_graph_json,
    save_classification,
    save_closure_tsv,
    save_edge_list,
)
from .stats import backbone_report, graph_stats

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2

THREADS_ENV = "DISTBACKBONE_THREADS"
NODE_GUARD = 10_000


@dataclass
class RunConfig:
    input_path: Path
    semantics: Semantics
    directed: bool = True
    fmt: str = "auto"  # auto | tsv | csv | json
    normalize: str | None = None
    measures: tuple[str, ...] = ("metric", "ultrametric")
    tolerance: float = 1e-9
    out_dir: Path | None = None
    threads: int = 1
    force: bool = False
    export_closure: bool = False

    def __post_init__(self):
        self.input_path = Path(self.input_path)
        self.measures = tuple(m for m in self.measures if m)
        if not self.measures:
            raise DistBackboneError("at least one measure is required")
        if self.tolerance <= 0:
            raise DistBackboneError("tolerance must be positive")
        if self.threads < 1:
            raise DistBackboneError("thread count must be >= 1")
        if self.out_dir is not None:
            self.out_dir = Path(self.out_dir)


def _load_input(config: RunConfig) -> WeightedDigraph:
    fmt = config.fmt
    if fmt == "auto":
        fmt = "json" if config.input_path.suffix.lower() == ".json" else "edge-list"
    if fmt == "json":
        graph = load_graph_json(config.input_path)
        if graph.semantics is not config.semantics or graph.directed != config.directed:
            raise DistBackboneError(
                "graph JSON declares different semantics/direction than the flags"
            )
        return graph
    delimiter = {"tsv": "\t", "csv": ","}.get(fmt)
    return load_edge_list(
        config.input_path,
        config.semantics,
        config.directed,
        delimiter=delimiter,
        normalize=config.normalize,
    )


def _as_distance(graph: WeightedDigraph) -> WeightedDigraph:
    return to_distance(graph) if graph.semantics is Semantics.PROXIMITY else graph


def _guard_size(graph: WeightedDigraph, config: RunConfig):
    if graph.n_nodes > NODE_GUARD and not config.force:
        raise DistBackboneError(
            f"graph has {graph.n_nodes} nodes; all-pairs closure is quadratic in "
            f"memory and worse in time above {NODE_GUARD} nodes. Re-run with "
            "--force to proceed."
        )


def cmd_backbone(config: RunConfig) -> int:
    graph = _load_input(config)
    _guard_size(graph, config)
    dist_graph = _as_distance(graph)
    out = config.out_dir
    out.mkdir(parents=True, exist_ok=True)

    backbones = []
    for name in config.measures:
        algebra = get_algebra(name)
        closure = closure_apsp(dist_graph, algebra, threads=config.threads)
        backbone = extract_backbone(dist_graph, closure, tolerance=config.tolerance)
        backbones.append(backbone)
        save_edge_list(backbone.subgraph, out / f"backbone_{name}.tsv")
        save_classification(
            dist_graph, closure, backbone, out / f"classification_{name}.tsv"
        )
        if config.export_closure:
            save_closure_tsv(dist_graph, closure, out / f"closure_{name}.tsv")

    report = backbone_report(dist_graph, backbones)
    (out / "report.json").write_text(report.to_json(), encoding="utf-8")
    print(report.format_text())
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    graph = _load_input(config)
    _guard_size(graph, config)
    dist_graph = _as_distance(graph)
    out = config.out_dir

    for name in config.measures:
        algebra = get_algebra(name)
        artifact = out / f"backbone_{name}.tsv"
        if not artifact.exists():
            raise DistBackboneError(
                f"missing artifact {artifact}; run the backbone command first"
            )

        closure = closure_apsp(dist_graph, algebra, threads=config.threads)
        oracle = closure_distance_product(dist_graph, algebra)
        bad = ~np.isclose(closure.dist, oracle.dist, rtol=config.tolerance, atol=config.tolerance)
        if bad.any():
            i, j = map(int, np.argwhere(bad)[0])
            print(
                f"verify {name}: search and matrix closures disagree at "
                f"({dist_graph.labels[i]!r} -> {dist_graph.labels[j]!r})",
                file=sys.stderr,
            )
            return EXIT_VERIFY

        # Artifact edges must be a subset of the graph, then reproduce its closure.
        loaded = load_edge_list(artifact, Semantics.DISTANCE, config.directed)
        edges = {}
        for (i, j), w in loaded.edges.items():
            try:
                gi, gj = dist_graph.index(loaded.labels[i]), dist_graph.index(loaded.labels[j])
            except KeyError:
                print(f"verify {name}: backbone names unknown node", file=sys.stderr)
                return EXIT_VERIFY
            original = dist_graph.weight(gi, gj)
            if original is None or abs(original - w) > config.tolerance * max(1.0, original):
                print(
                    f"verify {name}: backbone edge "
                    f"({loaded.labels[i]!r} -> {loaded.labels[j]!r}) does not match "
                    "the input graph",
                    file=sys.stderr,
                )
                return EXIT_VERIFY
            edges[(gi, gj)] = original
        sub = WeightedDigraph(
            dist_graph.labels, edges, Semantics.DISTANCE, config.directed
        )
        reduced = closure_apsp(sub, algebra, threads=config.threads)
        bad = ~np.isclose(reduced.dist, closure.dist, rtol=config.tolerance, atol=config.tolerance)
        if bad.any():
            i, j = map(int, np.argwhere(bad)[0])
            print(
                f"verify {name}: backbone does not preserve the closure at "
                f"({dist_graph.labels[i]!r} -> {dist_graph.labels[j]!r})",
                file=sys.stderr,
            )
            return EXIT_VERIFY
        print(f"verify {name}: ok")
    return EXIT_OK


def cmd_stats(config: RunConfig) -> int:
    graph = _load_input(config)
    print(json.dumps(graph_stats(graph), indent=2, sort_keys=True))
    return EXIT_OK


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _add_common(parser: argparse.ArgumentParser, with_out: bool):
    parser.add_argument("--input", required=True, help="edge list (TSV/CSV) or graph JSON")
    parser.add_argument(
        "--format",
        choices=("auto", "tsv", "csv", "json"),
        default="auto",
        help="input format (default: by file extension)",
    )
    sem = parser.add_mutually_exclusive_group(required=True)
    sem.add_argument(
        "--proximity",
        dest="semantics",
        action="store_const",
        const=Semantics.PROXIMITY,
        help="weights are similarities in (0, 1]",
    )
    sem.add_argument(
        "--distance",
        dest="semantics",
        action="store_const",
        const=Semantics.DISTANCE,
        help="weights are non-negative dissimilarities",
    )
    direction = parser.add_mutually_exclusive_group()
    direction.add_argument("--directed", dest="directed", action="store_true", default=True)
    direction.add_argument("--undirected", dest="directed", action="store_false")
    parser.add_argument(
        "--normalize",
        choices=("none", "max"),
        default="none",
        help="rescale raw weights before validation (max: divide by the largest)",
    )
    parser.add_argument(
        "--measure",
        default="metric,ultrametric",
        help="comma-separated list of registered length measures",
    )
    parser.add_argument("--tol", type=float, default=1e-9, help="relative equality tolerance")
    parser.add_argument(
        "--threads",
        type=int,
        default=_default_threads(),
        help=f"closure worker threads (default: ${THREADS_ENV} or 1)",
    )
    parser.add_argument("--force", action="store_true", help="skip the large-graph guard")
    if with_out:
        parser.add_argument("--out", required=True, help="artifact directory")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distbackbone",
        description="Shortest-path closures and distance backbones of weighted graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_backbone = sub.add_parser("backbone", help="extract backbones and write a report")
    _add_common(p_backbone, with_out=True)
    p_backbone.add_argument(
        "--export-closure", action="store_true", help="also write full closure TSVs"
    )

    p_verify = sub.add_parser("verify", help="cross-check closures and stored backbones")
    _add_common(p_verify, with_out=True)

    p_stats = sub.add_parser("stats", help="descriptive statistics (no closure)")
    _add_common(p_stats, with_out=False)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        input_path=Path(args.input),
        semantics=args.semantics,
        directed=args.directed,
        fmt=args.format,
        normalize=None if args.normalize == "none" else args.normalize,
        measures=tuple(m.strip() for m in args.measure.split(",")),
        tolerance=args.tol,
        out_dir=Path(args.out) if getattr(args, "out", None) else None,
        threads=args.threads,
        force=args.force,
        export_closure=getattr(args, "export_closure", False),
    )


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors; remap
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    handlers = {"backbone": cmd_backbone, "verify": cmd_verify, "stats": cmd_stats}
    try:
        config = _config_from_args(args)
        return handlers[args.command](config)
    except DistBackboneError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
