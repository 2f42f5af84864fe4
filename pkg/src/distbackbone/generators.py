"""Seeded synthetic graph generators for benchmarks, tests, and demos."""

from __future__ import annotations

import numpy as np

from .graph import Semantics, WeightedDigraph


def _node_labels(n: int) -> list[str]:
    return [f"n{i}" for i in range(n)]


def _sample_ordered_pairs(n: int, count: int, rng) -> list[tuple[int, int]]:
    # Flat indices over the n*(n-1) ordered pairs, skipping the diagonal.
    total = n * (n - 1)
    if count > total:
        raise ValueError(f"cannot place {count} edges among {total} ordered pairs")
    flat = rng.choice(total, size=count, replace=False)
    pairs = []
    for f in flat:
        i, r = divmod(int(f), n - 1)
        j = r if r < i else r + 1
        pairs.append((i, j))
    return pairs


def random_digraph(
    n: int,
    density: float,
    seed: int,
    integer: bool = False,
    max_weight: float = 10.0,
) -> WeightedDigraph:
    """Directed distance graph with exactly round(density * n * (n-1)) edges.

    Float weights are uniform in [0, max_weight); integer weights uniform in
    {0, ..., max_weight}, so zero-weight edges occur.
    """
    rng = np.random.default_rng(seed)
    count = int(round(density * n * (n - 1)))
    pairs = _sample_ordered_pairs(n, count, rng)
    if integer:
        weights = rng.integers(0, int(max_weight) + 1, size=count).astype(float)
    else:
        weights = rng.uniform(0.0, max_weight, size=count)
    edges = {pair: float(w) for pair, w in zip(pairs, weights)}
    return WeightedDigraph(_node_labels(n), edges, Semantics.DISTANCE, directed=True)


def random_proximity_graph(
    n: int, density: float, seed: int, directed: bool = True
) -> WeightedDigraph:
    """Directed or undirected proximity graph with weights in (0, 1]."""
    rng = np.random.default_rng(seed)
    if directed:
        count = int(round(density * n * (n - 1)))
        pairs = _sample_ordered_pairs(n, count, rng)
    else:
        count = int(round(density * n * (n - 1) / 2))
        pairs = _sample_unordered_pairs(n, count, rng)
    edges = {}
    for pair in pairs:
        w = float(1.0 - rng.uniform(0.0, 1.0))  # uniform in (0, 1]
        edges[pair] = w
        if not directed:
            edges[(pair[1], pair[0])] = w
    return WeightedDigraph(_node_labels(n), edges, Semantics.PROXIMITY, directed)


def _sample_unordered_pairs(n: int, count: int, rng) -> list[tuple[int, int]]:
    total = n * (n - 1) // 2
    if count > total:
        raise ValueError(f"cannot place {count} edges among {total} pairs")
    flat = rng.choice(total, size=count, replace=False)
    pairs = []
    for f in sorted(int(x) for x in flat):
        # Invert the row-major index over the strict upper triangle.
        i = 0
        row = n - 1
        while f >= row:
            f -= row
            i += 1
            row -= 1
        pairs.append((i, i + 1 + f))
    return pairs


def symmetric_random_graph(
    n: int, density: float, seed: int, integer: bool = False, max_weight: float = 10.0
) -> WeightedDigraph:
    """Directed distance graph whose edge map is exactly symmetric."""
    rng = np.random.default_rng(seed)
    count = int(round(density * n * (n - 1) / 2))
    pairs = _sample_unordered_pairs(n, count, rng)
    if integer:
        weights = rng.integers(0, int(max_weight) + 1, size=count).astype(float)
    else:
        weights = rng.uniform(0.0, max_weight, size=count)
    edges = {}
    for (i, j), w in zip(pairs, weights):
        edges[(i, j)] = float(w)
        edges[(j, i)] = float(w)
    return WeightedDigraph(_node_labels(n), edges, Semantics.DISTANCE, directed=True)


def planar_euclidean_graph(n: int, seed: int) -> WeightedDigraph:
    """Delaunay triangulation of random points, weighted by straight-line distance.

    Euclidean weights make every edge the shortest connection between its
    endpoints, so the whole graph obeys the ordinary triangle inequality and
    its additive-length backbone should be (essentially) the entire graph.
    """
    from scipy.spatial import Delaunay

    rng = np.random.default_rng(seed)
    points = rng.uniform(0.0, 1.0, size=(n, 2))
    tri = Delaunay(points)
    pairs = set()
    for simplex in tri.simplices:
        a, b, c = (int(x) for x in simplex)
        for i, j in ((a, b), (b, c), (a, c)):
            pairs.add((min(i, j), max(i, j)))
    edges = {}
    for i, j in pairs:
        w = float(np.hypot(*(points[i] - points[j])))
        edges[(i, j)] = w
        edges[(j, i)] = w
    return WeightedDigraph(_node_labels(n), edges, Semantics.DISTANCE, directed=False)
