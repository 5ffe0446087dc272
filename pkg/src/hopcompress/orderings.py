"""Edge-ordering strategies feeding the incremental compressor.

The compressor's output depends only on the order in which it scans the
edges, so better orderings buy smaller kept sets. Provided here: seeded
uniform shuffles, a local edge-connectivity greedy order, and a
simulated-annealing search over the permutation space.
"""

from __future__ import annotations

import dataclasses
import math
import random
import time
from dataclasses import dataclass

from .compress import CompressionResult, ProportionFunction, compress_basic
from .graph import Edge, Graph, enumerate_simple_paths


@dataclass(frozen=True)
class EdgeOrdering:
    """A permutation of a graph's edge set, tagged with its provenance."""

    edges: tuple[Edge, ...]
    strategy: str
    seed: int | None = None

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)


@dataclass(frozen=True)
class SaParams:
    """Annealing schedule: ``iterations`` swap trials starting at
    temperature ``t0``, cooled geometrically by ``alpha`` each trial."""

    iterations: int = 1000
    t0: float = 10.0
    alpha: float = 0.99
    seed: int = 0

    def __post_init__(self):
        if self.iterations < 0:
            raise ValueError("iterations must be >= 0")
        if self.t0 <= 0:
            raise ValueError("t0 must be positive")
        if not 0 < self.alpha < 1:
            raise ValueError("alpha must be in (0, 1)")


def random_order(g: Graph, seed: int) -> EdgeOrdering:
    """Uniformly random edge permutation (seeded Fisher-Yates shuffle)."""
    edges = list(g.edges())
    random.Random(seed).shuffle(edges)
    return EdgeOrdering(edges=tuple(edges), strategy="random", seed=seed)


def ec_scores(g: Graph, t: int) -> dict[Edge, int]:
    """Bounded-length path counts per edge.

    For every edge (u, v), every simple path of at most ``t`` edges
    between u and v adds one to the score of each edge it traverses
    (the direct edge counts itself). High scores mark bridge-like
    edges whose removal would hurt many short detours.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    scores = dict.fromkeys(g.edges(), 0)
    for u, v in g.edges():
        for path in enumerate_simple_paths(g, u, v, t):
            for a, b in zip(path, path[1:]):
                scores[(a, b) if a < b else (b, a)] += 1
    return scores


def ec_order(g: Graph, t: int) -> EdgeOrdering:
    """Edges sorted by descending connectivity score, ties by canonical id."""
    scores = ec_scores(g, t)
    ranked = sorted(scores, key=lambda e: (-scores[e], e))
    return EdgeOrdering(edges=tuple(ranked), strategy="ec", seed=None)


def sa_compress(g: Graph, pf: ProportionFunction, params: SaParams) -> CompressionResult:
    """Search the ordering space by simulated annealing.

    The initial state equals ``random_order(g, params.seed)``; the swap
    positions and acceptance draws continue from the same seeded stream.
    Each trial swaps two distinct positions, recompresses, keeps the
    swapped order on strict improvement and otherwise with probability
    exp((current cost - new cost) / T); the exponent is never positive,
    so the acceptance chance shrinks as T cools. The best order seen is
    tracked and compressed once more for the returned result, whose
    ``seconds`` covers the whole search.
    """
    start = time.perf_counter()
    rng = random.Random(params.seed)
    current = list(g.edges())
    rng.shuffle(current)

    cost_current = compress_basic(g, pf, current).kept_count()
    best = list(current)
    cost_best = cost_current

    m = len(current)
    temperature = params.t0
    for _ in range(params.iterations):
        if m >= 2:
            i, j = rng.sample(range(m), 2)
            candidate = list(current)
            candidate[i], candidate[j] = candidate[j], candidate[i]
        else:
            candidate = list(current)
        cost = compress_basic(g, pf, candidate).kept_count()
        if cost < cost_best:
            best = candidate
            cost_best = cost
        if cost < cost_current:
            current = candidate
            cost_current = cost
        else:
            r = rng.random()
            if math.exp((cost_current - cost) / temperature) > r:
                current = candidate
                cost_current = cost
        temperature *= params.alpha

    ordering = EdgeOrdering(edges=tuple(best), strategy="sa", seed=params.seed)
    result = compress_basic(g, pf, ordering)
    return dataclasses.replace(result, seconds=time.perf_counter() - start)


def order_for(
    g: Graph,
    pf: ProportionFunction,
    strategy: str,
    seed: int = 0,
) -> EdgeOrdering:
    """Build the named deterministic-or-seeded ordering ("random" | "ec" | "lp")."""
    if strategy in ("random", "basic", "basic-random"):
        return random_order(g, seed)
    if strategy == "ec":
        return ec_order(g, pf.t)
    if strategy == "lp":
        from .lp import lp_order

        return lp_order(g, pf)
    raise ValueError(f"unknown ordering strategy {strategy!r}")
