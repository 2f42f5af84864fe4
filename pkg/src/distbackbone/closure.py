"""All-pairs shortest-path closures of distance graphs, plus the proximity twin.

Two independent routes compute the same closure:

* ``closure_apsp`` runs a label-setting search (a Dijkstra generalized to any
  lawful length measure) from every source.  This is the fast path.
* ``closure_distance_product`` iterates the matrix composition
  ``D[i, j] <- min(D[i, j], min_k g(D1[i, k], D[k, j]))`` to its fixpoint.
  It is slower but so simple it serves as the oracle the search is checked
  against.

Both routes treat absent edges as infinite, keep a zero diagonal, and leave
unreachable pairs at infinity (directed closures need not become complete).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from heapq import heappop, heappush

import numpy as np

from .algebra import PathAlgebra, ProximityAlgebra
from .errors import SemanticsError
from .graph import Semantics, WeightedDigraph

# Cap on the (rows, n, n) broadcast temporaries used by matrix composition.
_BLOCK_CELLS = 1 << 23


@dataclass(frozen=True)
class ClosureResult:
    """All-pairs closure lengths under one path algebra.

    ``dist[i, j]`` is the best path length from i to j (0 on the diagonal,
    infinity when unreachable).  ``kappa`` reports composition depth: the
    fixpoint iteration count for the matrix route, the hop count of the
    longest selected shortest path for the search route.  The two routes may
    legitimately report different kappa when optimal paths tie.
    """

    algebra: str
    dist: np.ndarray
    kappa: int

    @property
    def reachable(self) -> np.ndarray:
        return np.isfinite(self.dist)


def _require_distance(graph: WeightedDigraph):
    if graph.semantics is not Semantics.DISTANCE:
        raise SemanticsError("closures are computed on distance graphs; convert first")


def _sssp(adjacency, n, source, extend):
    """Label-setting search; returns (lengths, hop counts of selected paths).

    Valid because aggregation is min and ``extend`` is monotone with identity
    0, so settled labels can never improve.  Heap entries are (length, node)
    tuples, which makes pop order, and therefore hop counts, deterministic.
    """
    dist = [np.inf] * n
    hops = [0] * n
    done = bytearray(n)
    dist[source] = 0.0
    heap = [(0.0, source)]
    while heap:
        d_u, u = heappop(heap)
        if done[u]:
            continue
        done[u] = 1
        next_hop = hops[u] + 1
        for v, w in adjacency[u]:
            if done[v]:
                continue
            cand = extend(d_u, w)
            if cand < dist[v]:
                dist[v] = cand
                hops[v] = next_hop
                heappush(heap, (cand, v))
    return dist, hops


def closure_sssp(graph: WeightedDigraph, algebra: PathAlgebra, source) -> np.ndarray:
    """Closure lengths from one source node (by index or label)."""
    _require_distance(graph)
    src = graph.index(source) if isinstance(source, str) else int(source)
    if not 0 <= src < graph.n_nodes:
        raise ValueError(f"source index {src} out of range")
    dist, _ = _sssp(graph.adjacency(), graph.n_nodes, src, algebra.scalar_g)
    return np.asarray(dist)


def closure_apsp(
    graph: WeightedDigraph, algebra: PathAlgebra, threads: int = 1
) -> ClosureResult:
    """All-pairs closure via per-source label-setting searches.

    Sources are independent, so the rows may be computed by a worker pool;
    the assembled matrix is identical for any thread count.
    """
    _require_distance(graph)
    n = graph.n_nodes
    adjacency = graph.adjacency()
    extend = algebra.scalar_g

    def row(s):
        return _sssp(adjacency, n, s, extend)

    if threads > 1 and n > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(row, range(n)))
    else:
        rows = [row(s) for s in range(n)]

    dist = np.full((n, n), np.inf)
    kappa = 0
    for s, (lengths, hops) in enumerate(rows):
        dist[s] = lengths
        kappa = max(kappa, max(hops, default=0))
    return ClosureResult(algebra.name, dist, kappa)


def _compose(first_hop, rest, combine, pick):
    """pick_k combine(first_hop[i, k], rest[k, j]), row-blocked to bound memory."""
    n = first_hop.shape[0]
    out = np.empty((n, n))
    rows = max(1, _BLOCK_CELLS // max(1, n * n))
    for start in range(0, n, rows):
        stop = min(start + rows, n)
        legs = combine(first_hop[start:stop, :, None], rest[None, :, :])
        out[start:stop] = pick(legs, axis=1)
    return out


def closure_distance_product(
    graph: WeightedDigraph, algebra: PathAlgebra
) -> ClosureResult:
    """All-pairs closure by iterating the matrix composition to its fixpoint.

    Each iteration extends the admissible path length by one hop, so the
    recorded ``kappa`` is the hop depth at which the closure stabilized,
    bounded by the graph diameter.  Exact convergence is guaranteed: lengths
    only decrease and range over the finite set of simple-path lengths.
    """
    _require_distance(graph)
    base = graph.to_matrix()
    closure = base.copy()
    kappa = 1
    for _ in range(graph.n_nodes + 1):
        stepped = np.minimum(closure, _compose(base, closure, algebra.g, np.min))
        if np.array_equal(stepped, closure):
            return ClosureResult(algebra.name, closure, kappa)
        closure = stepped
        kappa += 1
    raise RuntimeError(
        "distance product did not converge; impossible for a lawful algebra"
    )


def transitive_closure_proximity(
    graph: WeightedDigraph, algebra: ProximityAlgebra
) -> np.ndarray:
    """Proximity closure: strongest norm-composed path per pair, diagonal 1.

    Alternative paths are aggregated with ``max`` (the conorm every conjugate
    algebra here uses), which guarantees a finite fixpoint.  Equals the
    conjugate distance closure pushed through the weight map.
    """
    if graph.semantics is not Semantics.PROXIMITY:
        raise SemanticsError("proximity closure expects a proximity graph")
    base = graph.to_matrix()
    closure = base.copy()
    for _ in range(graph.n_nodes + 1):
        stepped = np.maximum(closure, _compose(base, closure, algebra.norm, np.max))
        if np.array_equal(stepped, closure):
            return closure
        closure = stepped
    raise RuntimeError(
        "proximity composition did not converge; impossible for a lawful norm"
    )
