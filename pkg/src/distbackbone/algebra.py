"""Path-length algebras on distance weights and their proximity-side twins.

Distance graphs compose path lengths with a binary operation ``g`` and pick
the best alternative path with ``min``.  Proximity graphs do the same through
a pair of generalized logical operations (a conorm for alternatives, a norm
for composition).  The two views are linked by the strictly decreasing weight
map ``d = 1/p - 1``, so every distance algebra induces a conjugate proximity
algebra and vice versa.

A lawful ``g`` is commutative, associative, monotone, has 0 as its identity
element, and absorbs infinity (an unreachable hop makes the whole path
unreachable).  The two built-ins are ``METRIC`` (``g = +``, ordinary path
length) and ``ULTRAMETRIC`` (``g = max``, the widest single hop on the path).
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import AlgebraLawError, UnknownAlgebraError


def distance_weight(p):
    """Map proximity weights to distance weights, elementwise: d = 1/p - 1.

    Accepts scalars or arrays; p = 0 maps to infinity, p = 1 to 0.
    """
    p = np.asarray(p, dtype=float)
    with np.errstate(divide="ignore"):
        d = 1.0 / p - 1.0
    return d if d.shape else float(d)

def proximity_weight(d):
    """Inverse weight map, elementwise: p = 1/(d + 1); infinity maps to 0."""
    d = np.asarray(d, dtype=float)
    p = 1.0 / (d + 1.0)
    return p if p.shape else float(p)


class PathAlgebra:
    """A path-length measure for shortest-path closures.

    ``g`` composes two leg lengths into one path length and must broadcast
    over numpy arrays; ``scalar_g`` may supply a faster plain-float variant
    for the label-setting search (defaults to ``g``).  Alternative paths are
    always aggregated with ``min``.
    """

    __slots__ = ("name", "g", "scalar_g")

    def __init__(self, name: str, g: Callable, scalar_g: Callable | None = None):
        self.name = str(name)
        self.g = g
        self.scalar_g = g if scalar_g is None else scalar_g

    def __repr__(self):
        return f"PathAlgebra({self.name!r})"


class ProximityAlgebra:
    """A (conorm, norm) pair acting on proximity weights in [0, 1]."""

    __slots__ = ("name", "conorm", "norm")

    def __init__(self, name: str, conorm: Callable, norm: Callable):
        self.name = str(name)
        self.conorm = conorm
        self.norm = norm

    def __repr__(self):
        return f"ProximityAlgebra({self.name!r})"


METRIC = PathAlgebra("metric", operator.add)
ULTRAMETRIC = PathAlgebra("ultrametric", np.maximum, scalar_g=max)


def g_extend(algebra: PathAlgebra, a, b):
    """Compose two path lengths under the algebra (infinity-absorbing)."""
    return algebra.g(a, b)


def conjugate_proximity_algebra(algebra: PathAlgebra) -> ProximityAlgebra:
    """Proximity-side (conorm, norm) pair equivalent to (min, g).

    The conorm is always ``max`` because the weight map is strictly
    decreasing; the norm is ``g`` pushed through the map.  For the built-ins
    this yields ``min`` (ultrametric) and ``pq / (p + q - pq)`` (metric).
    """

    def norm(p, q):
        return proximity_weight(algebra.g(distance_weight(p), distance_weight(q)))

    return ProximityAlgebra(f"{algebra.name}-conjugate", np.maximum, norm)


@dataclass(frozen=True)
class LawViolation:
    law: str
    witness: tuple
    detail: str


def check_algebra_laws(
    algebra: PathAlgebra,
    samples: int = 10_000,
    seed: int = 0,
    rtol: float = 1e-9,
) -> list[LawViolation]:
    """Spot-check algebra laws on random operands; empty list means lawful.

    Draws ``samples`` operand triples from [0, 10] with 0 and infinity mixed
    in, and records the first counterexample found for each law.  Sampling
    cannot prove lawfulness, but any returned violation is a hard one.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)

    def draw():
        x = rng.uniform(0.0, 10.0, samples)
        mark = rng.random(samples)
        x[mark < 0.02] = 0.0
        x[mark > 0.98] = np.inf
        return x

    a, b, c = draw(), draw(), draw()
    g = algebra.g
    zero = np.zeros(samples)
    inf = np.full(samples, np.inf)
    found: list[LawViolation] = []

    def close(x, y):
        return np.isclose(x, y, rtol=rtol, atol=rtol)

    def record(ok, law, operands, detail):
        bad = np.flatnonzero(~np.asarray(ok))
        if bad.size:
            i = bad[0]
            found.append(LawViolation(law, tuple(float(o[i]) for o in operands), detail))

    with np.errstate(invalid="ignore"):
        record(close(g(a, b), g(b, a)), "commutativity", (a, b),
               "g(a, b) != g(b, a)")
        record(close(g(g(a, b), c), g(a, g(b, c))), "associativity", (a, b, c),
               "g(g(a, b), c) != g(a, g(b, c))")
        record(close(g(a, zero), a), "identity", (a,),
               "g(a, 0) != a")
        record(np.asarray(g(a, inf)) == np.inf, "infinity absorption", (a,),
               "g(a, inf) != inf")
        step_a = rng.uniform(0.0, 5.0, samples)
        step_b = rng.uniform(0.0, 5.0, samples)
        lo = g(a, b)
        hi = g(a + step_a, b + step_b)
        slack = rtol * np.where(np.isfinite(lo), np.abs(lo) + 1.0, 0.0)
        record(lo <= hi + slack, "monotonicity", (a, b, step_a, step_b),
               "g is not monotone in its operands")
    return found


_registry: dict[str, PathAlgebra] = {METRIC.name: METRIC, ULTRAMETRIC.name: ULTRAMETRIC}


def register_algebra(algebra: PathAlgebra, samples: int = 10_000, seed: int = 0) -> PathAlgebra:
    """Law-check an algebra on random samples and make it available by name."""
    existing = _registry.get(algebra.name)
    if existing is not None and existing is not algebra:
        raise AlgebraLawError(f"an algebra named {algebra.name!r} is already registered")
    violations = check_algebra_laws(algebra, samples=samples, seed=seed)
    if violations:
        first = violations[0]
        raise AlgebraLawError(
            f"algebra {algebra.name!r} violates {first.law} "
            f"(witness operands {first.witness})"
        )
    _registry[algebra.name] = algebra
    return algebra


def get_algebra(name: str) -> PathAlgebra:
    """Look up a registered algebra by name."""
    try:
        return _registry[name]
    except KeyError:
        known = ", ".join(sorted(_registry))
        raise UnknownAlgebraError(f"unknown measure {name!r} (registered: {known})") from None


def registered_algebras() -> list[str]:
    return sorted(_registry)
