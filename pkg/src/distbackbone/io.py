"""Edge-list, JSON, and report file formats.

The edge-list format is delimiter-separated ``source, target, weight`` rows
with an optional header, UTF-8 labels.  Undirected graphs are written one row
per unordered pair; directed graphs one row per ordered edge.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .backbone import Backbone
from .closure import ClosureResult
from .errors import DistBackboneError
from .graph import Semantics, WeightedDigraph, build_graph


def _delimiter_for(path: Path, delimiter: str | None) -> str:
    if delimiter is not None:
        return delimiter
    return "," if path.suffix.lower() == ".csv" else "\t"


def _parse_weight(text: str):
    try:
        return float(text)
    except ValueError:
        return None


def load_edge_list(
    path,
    semantics: Semantics,
    directed: bool = True,
    delimiter: str | None = None,
    normalize: str | None = None,
) -> WeightedDigraph:
    """Read an edge list; ``normalize="max"`` rescales weights by their maximum.

    The header row, if any, is detected by its weight column not parsing as a
    number.  Malformed rows raise with the offending line number.
    """
    path = Path(path)
    delim = _delimiter_for(path, delimiter)
    triples = []
    with path.open(newline="", encoding="utf-8") as fh:
        for lineno, row in enumerate(csv.reader(fh, delimiter=delim), start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != 3:
                raise DistBackboneError(
                    f"{path}:{lineno}: expected 3 columns (source, target, weight), "
                    f"got {len(row)}"
                )
            w = _parse_weight(row[2].strip())
            if w is None:
                if lineno == 1:
                    continue  # header
                raise DistBackboneError(
                    f"{path}:{lineno}: weight {row[2]!r} is not a number"
                )
            triples.append((row[0].strip(), row[1].strip(), w))
    if normalize not in (None, "none", "max"):
        raise DistBackboneError(f"unknown normalization rule {normalize!r}")
    if normalize == "max" and triples:
        top = max(w for _, _, w in triples)
        if top <= 0:
            raise DistBackboneError(f"{path}: cannot max-normalize, largest weight is {top}")
        triples = [(a, b, w / top) for a, b, w in triples]
    return build_graph(triples, semantics, directed)


def save_edge_list(graph: WeightedDigraph, path, delimiter: str | None = None) -> None:
    path = Path(path)
    delim = _delimiter_for(path, delimiter)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, delimiter=delim, lineterminator="\n")
        writer.writerow(["source", "target", "weight"])
        for i, j in sorted(graph.edges):
            if not graph.directed and i > j:
                continue
            writer.writerow([graph.labels[i], graph.labels[j], repr(graph.edges[(i, j)])])


def graph_to_json(graph: WeightedDigraph) -> dict:
    edges = [
        {"s": graph.labels[i], "t": graph.labels[j], "w": w}
        for (i, j), w in sorted(graph.edges.items())
        if graph.directed or i < j
    ]
    return {
        "nodes": list(graph.labels),
        "edges": edges,
        "semantics": graph.semantics.value,
        "directed": graph.directed,
    }


def graph_from_json(payload: dict) -> WeightedDigraph:
    try:
        semantics = Semantics(payload["semantics"])
        directed = bool(payload["directed"])
        nodes = [str(x) for x in payload["nodes"]]
        triples = [(e["s"], e["t"], float(e["w"])) for e in payload["edges"]]
    except (KeyError, TypeError) as exc:
        raise DistBackboneError(f"malformed graph JSON: {exc}") from exc
    graph = build_graph(triples, semantics, directed)
    # Re-attach nodes that carry no edges.
    missing = [x for x in nodes if x not in graph.labels]
    if missing:
        labels = list(graph.labels) + missing
        graph = WeightedDigraph(labels, graph.edges, semantics, directed)
    return graph


def save_graph_json(graph: WeightedDigraph, path) -> None:
    Path(path).write_text(
        json.dumps(graph_to_json(graph), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )


def load_graph_json(path) -> WeightedDigraph:
    return graph_from_json(json.loads(Path(path).read_text(encoding="utf-8")))


def save_classification(
    graph: WeightedDigraph,
    closure: ClosureResult,
    backbone: Backbone,
    path,
    delimiter: str | None = None,
) -> None:
    """Per-edge verdicts: source, target, weight, class, closure_length."""
    path = Path(path)
    delim = _delimiter_for(path, delimiter)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, delimiter=delim, lineterminator="\n")
        writer.writerow(["source", "target", "weight", "class", "closure_length"])
        for i, j in sorted(backbone.classification):
            writer.writerow(
                [
                    graph.labels[i],
                    graph.labels[j],
                    repr(graph.edges[(i, j)]),
                    backbone.classification[(i, j)].value,
                    repr(float(closure.dist[i, j])),
                ]
            )


def load_classification(path, delimiter: str | None = None) -> list[dict]:
    path = Path(path)
    delim = _delimiter_for(path, delimiter)
    rows = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh, delimiter=delim)
        header = next(reader, None)
        for row in reader:
            rows.append(
                {
                    "source": row[0],
                    "target": row[1],
                    "weight": float(row[2]),
                    "class": row[3],
                    "closure_length": float(row[4]),
                }
            )
    return rows


def save_closure_tsv(
    graph: WeightedDigraph, closure: ClosureResult, path, delimiter: str | None = None
) -> None:
    """Finite off-diagonal closure lengths as (source, target, closure_length)."""
    path = Path(path)
    delim = _delimiter_for(path, delimiter)
    finite = np.argwhere(np.isfinite(closure.dist))
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, delimiter=delim, lineterminator="\n")
        writer.writerow(["source", "target", "closure_length"])
        for i, j in finite:
            if i == j:
                continue
            writer.writerow(
                [graph.labels[i], graph.labels[j], repr(float(closure.dist[i, j]))]
            )
