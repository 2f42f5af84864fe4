"""Weighted directed graphs with explicit proximity or distance semantics."""

from __future__ import annotations

import math
import warnings
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .algebra import distance_weight, proximity_weight
from .errors import (
    DuplicateEdgeError,
    NegativeWeightError,
    ProximityRangeError,
    SelfLoopWarning,
    SemanticsError,
)


class Semantics(Enum):
    """Whether edge weights measure similarity or dissimilarity.

    Proximity weights live in (0, 1] and an absent edge means 0; distance
    weights live in [0, inf) and an absent edge means infinity.
    """

    PROXIMITY = "proximity"
    DISTANCE = "distance"


SYMMETRIZE_RULES = ("min", "max", "mean")


class WeightedDigraph:
    """Immutable node-labelled graph with sparse non-negative weighted edges.

    Edges are stored as a map from (source_index, target_index) to weight;
    absent entries stand for proximity 0 / distance infinity, never stored
    explicitly.  Self-loops are not stored: every node is implicitly at
    proximity 1 / distance 0 from itself.  Undirected graphs keep both
    orientations of each pair so directed algorithms apply unchanged.

    Instances are treated as immutable after construction; derived views
    (adjacency lists, matrices) are cached and shared.
    """

    def __init__(
        self,
        labels: Sequence[str],
        edges: dict[tuple[int, int], float],
        semantics: Semantics,
        directed: bool = True,
    ):
        self.labels = tuple(str(x) for x in labels)
        self.edges = {(int(i), int(j)): float(w) for (i, j), w in edges.items()}
        self.semantics = Semantics(semantics)
        self.directed = bool(directed)
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}
        self._adjacency = None
        self._validate()

    def _validate(self):
        if len(self._label_index) != len(self.labels):
            raise DuplicateEdgeError("node labels must be unique")
        n = len(self.labels)
        for (i, j), w in self.edges.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) references a missing node index")
            if i == j:
                raise ValueError(f"self-loop stored at node {self.labels[i]!r}")
            if math.isnan(w):
                raise NegativeWeightError(f"edge {self._name(i, j)} has NaN weight")
            if self.semantics is Semantics.PROXIMITY:
                if not 0.0 < w <= 1.0:
                    raise ProximityRangeError(
                        f"proximity weight {w!r} on edge {self._name(i, j)} "
                        "is outside (0, 1]"
                    )
            else:
                if w < 0.0 or math.isinf(w):
                    raise NegativeWeightError(
                        f"distance weight {w!r} on edge {self._name(i, j)} "
                        "is not finite and non-negative"
                    )
        if not self.directed:
            for (i, j), w in self.edges.items():
                if self.edges.get((j, i)) != w:
                    raise DuplicateEdgeError(
                        f"undirected graph is not symmetric at {self._name(i, j)}"
                    )

    def _name(self, i, j):
        return f"({self.labels[i]!r} -> {self.labels[j]!r})"

    # ------------------------------------------------------------------
    # basic accessors

    @property
    def n_nodes(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        """Stored ordered entries for directed graphs, unordered pairs otherwise."""
        return len(self.edges) if self.directed else len(self.edges) // 2

    @property
    def zero_weight_edges(self) -> int:
        zero = sum(1 for w in self.edges.values() if w == 0.0)
        return zero if self.directed else zero // 2

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"unknown node label {label!r}") from None

    def weight(self, i: int, j: int) -> float | None:
        return self.edges.get((i, j))

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def adjacency(self) -> tuple:
        """Out-neighbour lists as ((target, weight), ...) sorted by target."""
        if self._adjacency is None:
            lists = [[] for _ in range(self.n_nodes)]
            for (i, j), w in self.edges.items():
                lists[i].append((j, w))
            self._adjacency = tuple(tuple(sorted(row)) for row in lists)
        return self._adjacency

    def to_matrix(self) -> np.ndarray:
        """Dense adjacency with the semantic fill (0/1 diagonal, inf/0 absent)."""
        n = self.n_nodes
        if self.semantics is Semantics.DISTANCE:
            m = np.full((n, n), np.inf)
            np.fill_diagonal(m, 0.0)
        else:
            m = np.zeros((n, n))
            np.fill_diagonal(m, 1.0)
        for (i, j), w in self.edges.items():
            m[i, j] = w
        return m

    @classmethod
    def from_matrix(
        cls,
        labels: Sequence[str],
        matrix: np.ndarray,
        semantics: Semantics,
        directed: bool = True,
    ) -> "WeightedDigraph":
        """Build a sparse graph from a dense matrix, dropping the semantic fill."""
        matrix = np.asarray(matrix, dtype=float)
        n = len(labels)
        if matrix.shape != (n, n):
            raise ValueError("matrix shape does not match the label count")
        edges = {}
        absent_is_zero = Semantics(semantics) is Semantics.PROXIMITY
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                w = matrix[i, j]
                if absent_is_zero:
                    if w > 0.0:
                        edges[(i, j)] = w
                elif np.isfinite(w):
                    edges[(i, j)] = w
        return cls(labels, edges, semantics, directed)

    def __eq__(self, other):
        if not isinstance(other, WeightedDigraph):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.edges == other.edges
            and self.semantics is other.semantics
            and self.directed == other.directed
        )

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return (
            f"<WeightedDigraph {kind} {self.semantics.value} "
            f"|X|={self.n_nodes} edges={self.edge_count}>"
        )


def build_graph(
    edge_triples: Iterable[tuple[str, str, float]],
    semantics: Semantics,
    directed: bool = True,
) -> WeightedDigraph:
    """Construct a graph from (source_label, target_label, weight) triples.

    Node indices are assigned in first-appearance order.  A repeated ordered
    pair is an error; for undirected graphs the reverse orientation may be
    listed once more but must carry the same weight.  Self-loop triples are
    dropped with a counted ``SelfLoopWarning``.
    """
    semantics = Semantics(semantics)
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: dict[tuple[int, int], float] = {}
    seen: set[tuple[int, int]] = set()
    dropped_loops = 0

    def intern(label: str) -> int:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    for a, b, w in edge_triples:
        a, b = str(a), str(b)
        if a == b:
            dropped_loops += 1
            continue
        i, j = intern(a), intern(b)
        w = float(w)
        if (i, j) in seen:
            raise DuplicateEdgeError(f"duplicate edge ({a!r} -> {b!r})")
        seen.add((i, j))
        if directed:
            edges[(i, j)] = w
        else:
            prior = edges.get((j, i))
            if prior is not None and prior != w:
                raise DuplicateEdgeError(
                    f"conflicting weights {prior!r} and {w!r} for undirected "
                    f"pair ({a!r}, {b!r})"
                )
            edges[(i, j)] = w
            edges[(j, i)] = w

    if dropped_loops:
        warnings.warn(
            f"dropped {dropped_loops} self-loop edge(s)", SelfLoopWarning, stacklevel=2
        )
    return WeightedDigraph(labels, edges, semantics, directed)


def to_distance(graph: WeightedDigraph) -> WeightedDigraph:
    """Reinterpret a proximity graph as a distance graph via d = 1/p - 1."""
    if graph.semantics is not Semantics.PROXIMITY:
        raise SemanticsError("to_distance expects a proximity graph")
    edges = {k: distance_weight(w) for k, w in graph.edges.items()}
    return WeightedDigraph(graph.labels, edges, Semantics.DISTANCE, graph.directed)


def to_proximity(graph: WeightedDigraph) -> WeightedDigraph:
    """Reinterpret a distance graph as a proximity graph via p = 1/(d + 1)."""
    if graph.semantics is not Semantics.DISTANCE:
        raise SemanticsError("to_proximity expects a distance graph")
    edges = {k: proximity_weight(w) for k, w in graph.edges.items()}
    return WeightedDigraph(graph.labels, edges, Semantics.PROXIMITY, graph.directed)


def symmetrize(graph: WeightedDigraph, rule: str = "min") -> WeightedDigraph:
    """Collapse directions: each unordered pair keeps the rule-combined weight.

    ``rule`` is one of "min", "max", "mean", applied over whichever of the
    two directed weights exist.  Applying it to an undirected graph returns
    an equal graph, so the operation is idempotent.
    """
    if rule not in SYMMETRIZE_RULES:
        raise ValueError(f"rule must be one of {SYMMETRIZE_RULES}, got {rule!r}")
    pooled: dict[tuple[int, int], list[float]] = {}
    for (i, j), w in graph.edges.items():
        pooled.setdefault((min(i, j), max(i, j)), []).append(w)
    combine = {"min": min, "max": max, "mean": lambda ws: sum(ws) / len(ws)}[rule]
    edges = {}
    for (i, j), ws in pooled.items():
        w = float(combine(ws))
        edges[(i, j)] = w
        edges[(j, i)] = w
    return WeightedDigraph(graph.labels, edges, graph.semantics, directed=False)
