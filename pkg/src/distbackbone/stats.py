"""Descriptive and redundancy statistics for graphs and their backbones."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .backbone import Backbone
from .errors import TooFewNodesError
from .graph import WeightedDigraph


def density(graph: WeightedDigraph) -> float:
    """Fraction of possible node pairs realized as edges.

    Directed graphs use ordered pairs; undirected use unordered pairs.  The
    two reduce to the same expression because undirected graphs store both
    orientations.
    """
    n = graph.n_nodes
    if n < 2:
        raise TooFewNodesError(f"density needs at least 2 nodes, got {n}")
    return len(graph.edges) / (n * (n - 1))


def tau(backbone: Backbone) -> float:
    """Fraction of edges on the backbone; 1.0 for an edgeless graph (vacuous)."""
    total = len(backbone.classification)
    if total == 0:
        return 1.0
    return backbone.triangular_count / total


@dataclass(frozen=True)
class MeasureReport:
    """Backbone share under one length measure."""

    tau: float
    sigma: float
    backbone_edges: int


@dataclass(frozen=True)
class BackboneReport:
    """One summary row: graph size, density, and per-measure backbone shares.

    Fractions are kept at full precision; rendering to the conventional
    two-decimal percentages is left to ``format_text``.
    """

    nodes: int
    edges: int
    density: float | None
    measures: dict[str, MeasureReport]
    ratio_u_over_m: float | None

    def to_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "edges": self.edges,
            "density": self.density,
            "measures": {
                name: {
                    "tau": m.tau,
                    "sigma": m.sigma,
                    "backbone_edges": m.backbone_edges,
                }
                for name, m in self.measures.items()
            },
            "ratio_u_over_m": self.ratio_u_over_m,
        }

    def to_json(self) -> str:
        """Canonical serialization: sorted keys, two-space indent, newline."""
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def format_text(self) -> str:
        lines = [
            f"nodes:   {self.nodes}",
            f"edges:   {self.edges}",
            f"density: {_fmt_density(self.density)}",
        ]
        for name in sorted(self.measures):
            m = self.measures[name]
            lines.append(
                f"{name}: tau={m.tau * 100:.2f}%  sigma={m.sigma * 100:.2f}%  "
                f"backbone_edges={m.backbone_edges}"
            )
        if self.ratio_u_over_m is not None:
            lines.append(f"ultrametric/metric ratio: {self.ratio_u_over_m * 100:.2f}%")
        return "\n".join(lines)


def _fmt_density(value):
    if value is None:
        return "undefined"
    return f"{value:.3g}"


def backbone_report(graph: WeightedDigraph, backbones: list[Backbone]) -> BackboneReport:
    """Assemble one report row from backbones extracted from ``graph``."""
    measures = {}
    for b in backbones:
        if len(b.classification) != len(graph.edges):
            raise ValueError(
                f"backbone {b.algebra!r} classifies {len(b.classification)} entries, "
                f"graph stores {len(graph.edges)}"
            )
        t = tau(b)
        measures[b.algebra] = MeasureReport(
            tau=t, sigma=1.0 - t, backbone_edges=b.subgraph.edge_count
        )
    ratio = None
    if "metric" in measures and "ultrametric" in measures:
        ratio = measures["ultrametric"].tau / measures["metric"].tau
    return BackboneReport(
        nodes=graph.n_nodes,
        edges=graph.edge_count,
        density=density(graph) if graph.n_nodes >= 2 else None,
        measures=measures,
        ratio_u_over_m=ratio,
    )


def graph_stats(graph: WeightedDigraph) -> dict:
    """Descriptive statistics only; no closure is computed.

    ``asymmetric_edge_fraction`` is the share of stored ordered edges whose
    reverse is absent (0 for undirected graphs by construction).
    """
    weights = list(graph.edges.values())
    one_way = sum(1 for (i, j) in graph.edges if (j, i) not in graph.edges)
    return {
        "nodes": graph.n_nodes,
        "edges": graph.edge_count,
        "directed": graph.directed,
        "semantics": graph.semantics.value,
        "density": density(graph) if graph.n_nodes >= 2 else None,
        "weight_min": min(weights) if weights else None,
        "weight_max": max(weights) if weights else None,
        "zero_weight_edges": graph.zero_weight_edges,
        "asymmetric_edge_fraction": one_way / len(graph.edges) if graph.edges else 0.0,
    }
