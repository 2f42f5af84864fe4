"""Shared fixtures: the seeded random-graph corpus used across test modules."""

from __future__ import annotations

import pytest

from distbackbone.generators import random_digraph, symmetric_random_graph

CORPUS_SIZES = (5, 8, 10, 13, 17, 21, 24, 29, 34, 38, 42, 47, 51, 55, 60)
CORPUS_DENSITIES = (0.1, 0.3, 0.6, 1.0)


def build_corpus(seeds=(101, 202)):
    """(tag, graph, is_integer) triples; >= 200 directed distance graphs."""
    graphs = []
    for seed in seeds:
        for n in CORPUS_SIZES:
            for density in CORPUS_DENSITIES:
                for integer in (False, True):
                    # Skip duplicates of tiny integer combos that add no coverage.
                    tag = f"n{n}_d{density}_{'int' if integer else 'flt'}_s{seed}"
                    graphs.append(
                        (tag, random_digraph(n, density, seed=seed + n, integer=integer), integer)
                    )
    return graphs


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """A light slice for per-module tests; acceptance runs the full corpus."""
    return corpus[::12]


@pytest.fixture(scope="session")
def symmetric_corpus():
    graphs = []
    for n in (6, 11, 19, 30, 44):
        for integer in (False, True):
            tag = f"sym_n{n}_{'int' if integer else 'flt'}"
            graphs.append((tag, symmetric_random_graph(n, 0.4, seed=n, integer=integer)))
    return graphs


@pytest.fixture(scope="session")
def closure_cache():
    """Memo for expensive closures, shared across acceptance criteria."""
    return {}
