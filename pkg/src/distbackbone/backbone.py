"""Classify edges against the generalized triangle inequality and extract
the invariant subgraph that preserves every shortest path."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .algebra import PathAlgebra, get_algebra
from .closure import ClosureResult, closure_apsp
from .errors import ClosureMismatchError, NotSemiTriangularError
from .graph import WeightedDigraph


class EdgeClass(Enum):
    TRIANGULAR = "triangular"
    SEMI_TRIANGULAR = "semi-triangular"


def _is_triangular(weight: float, closure_length: float, tolerance: float) -> bool:
    # Equality in floating point: relative to the edge weight, floored at 1.
    return abs(weight - closure_length) <= tolerance * max(1.0, weight)


@dataclass(frozen=True)
class Backbone:
    """Result of classifying every stored edge of a distance graph.

    ``subgraph`` contains exactly the triangular edges with their original
    weights and the full node set (isolated nodes included); semi-triangular
    edges keep their weight in ``classification`` so later tooling can study
    how much longer they are than their best indirect path.
    """

    algebra: str
    subgraph: WeightedDigraph
    classification: dict[tuple[int, int], EdgeClass]
    tolerance: float

    @property
    def triangular_count(self) -> int:
        return sum(1 for c in self.classification.values() if c is EdgeClass.TRIANGULAR)

    @property
    def semi_triangular_count(self) -> int:
        return len(self.classification) - self.triangular_count


class SufficiencyCheck(NamedTuple):
    ok: bool
    witness: tuple[int, int] | None


def extract_backbone(
    graph: WeightedDigraph, closure: ClosureResult, tolerance: float = 1e-9
) -> Backbone:
    """Keep each edge whose weight equals its closure length, drop the rest.

    An edge survives iff no indirect path is shorter under the closure's
    algebra, i.e. it obeys the generalized triangle inequality.  Equality is
    tested at ``tolerance`` (relative, floored at 1) because summed float
    path lengths round.  Each ordered pair is judged independently; for
    undirected graphs the two orientations coincide and are classified once.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    n = graph.n_nodes
    if closure.dist.shape != (n, n):
        raise ClosureMismatchError(
            f"closure is {closure.dist.shape}, graph has {n} nodes"
        )
    classification: dict[tuple[int, int], EdgeClass] = {}
    kept: dict[tuple[int, int], float] = {}
    for (i, j), w in graph.edges.items():
        if not graph.directed and i > j:
            continue
        length = closure.dist[i, j]
        if length > w + tolerance * max(1.0, w):
            raise ClosureMismatchError(
                f"closure length {length!r} exceeds direct weight {w!r} at "
                f"({graph.labels[i]!r} -> {graph.labels[j]!r}); "
                "closure was not computed from this graph"
            )
        cls = (
            EdgeClass.TRIANGULAR
            if _is_triangular(w, length, tolerance)
            else EdgeClass.SEMI_TRIANGULAR
        )
        pairs = [(i, j)] if graph.directed else [(i, j), (j, i)]
        for pair in pairs:
            classification[pair] = cls
            if cls is EdgeClass.TRIANGULAR:
                kept[pair] = w
    subgraph = WeightedDigraph(graph.labels, kept, graph.semantics, graph.directed)
    return Backbone(closure.algebra, subgraph, classification, tolerance)


def verify_backbone_sufficiency(
    graph: WeightedDigraph,
    backbone: Backbone,
    algebra: PathAlgebra,
    closure: ClosureResult | None = None,
    threads: int = 1,
) -> SufficiencyCheck:
    """Check that the backbone alone reproduces every closure length.

    Recomputes the closure on the backbone subgraph and compares it entrywise
    with the closure of the full graph (recomputed unless supplied).  Holds
    by construction for a correctly extracted backbone, so this doubles as a
    self-check and as a tamper detector for stored artifacts.
    """
    if closure is None:
        closure = closure_apsp(graph, algebra, threads=threads)
    reduced = closure_apsp(backbone.subgraph, algebra, threads=threads)
    mismatch = _first_mismatch(reduced.dist, closure.dist, backbone.tolerance)
    return SufficiencyCheck(mismatch is None, mismatch)


def _first_mismatch(a: np.ndarray, b: np.ndarray, tolerance: float):
    if a.shape != b.shape:
        raise ClosureMismatchError(f"cannot compare closures of shapes {a.shape} and {b.shape}")
    close = np.isclose(a, b, rtol=tolerance, atol=tolerance)
    bad = np.argwhere(~close)
    if bad.size:
        i, j = bad[0]
        return int(i), int(j)
    return None


def semi_triangular_witness(
    graph: WeightedDigraph,
    closure: ClosureResult,
    source,
    target,
    algebra: PathAlgebra | None = None,
    tolerance: float = 1e-9,
) -> int:
    """Return an intermediate node proving the edge has a shorter indirect path.

    For a semi-triangular edge (i, j) there is some k with
    ``g(closure[i, k], closure[k, j]) <= closure[i, j] < weight(i, j)``;
    the smallest such index is returned.  Asking about a triangular edge or
    a non-edge raises ``NotSemiTriangularError``.
    """
    i = graph.index(source) if isinstance(source, str) else int(source)
    j = graph.index(target) if isinstance(target, str) else int(target)
    w = graph.weight(i, j)
    if w is None:
        raise NotSemiTriangularError(f"no stored edge ({source!r} -> {target!r})")
    length = closure.dist[i, j]
    if _is_triangular(w, length, tolerance):
        raise NotSemiTriangularError(
            f"edge ({source!r} -> {target!r}) is triangular; no shortcut exists"
        )
    if algebra is None:
        algebra = get_algebra(closure.algebra)
    through = algebra.g(closure.dist[i, :], closure.dist[:, j])
    through[i] = np.inf
    through[j] = np.inf
    ok = through <= length + tolerance * max(1.0, length)
    hits = np.flatnonzero(ok)
    if not hits.size:
        raise RuntimeError(
            "no witness found for a semi-triangular edge; closure is inconsistent"
        )
    return int(hits[0])
