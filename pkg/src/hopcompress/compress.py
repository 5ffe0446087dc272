"""Hop-constrained neighborhood preservation: constraints, compressor, verifier.

A compression keeps a subset of edges such that, for every vertex v and
every hop level i in 1..t, at least a proportion p(i) of v's original
neighbors stays within i hops of v in the compressed graph. Proportions
are exact rationals and every threshold comparison is exact.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidOrderingError, NotASubgraphError
from .graph import Edge, Graph, canonical_edge


def parse_proportion(text: str) -> Fraction:
    """Parse one proportion given as a decimal ("0.5") or ratio ("1/2")."""
    try:
        value = Fraction(text.strip())
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None
    if not 0 <= value <= 1:
        raise ValueError(f"proportion {text!r} outside [0, 1]")
    return value


@dataclass(frozen=True)
class ProportionFunction:
    """The kept-neighbor proportions p(1..t).

    ``props[i-1]`` is the proportion required at hop level i; the function
    is constant at ``props[-1]`` beyond level t. Must be monotone
    non-decreasing with every value in [0, 1].
    """

    props: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.props:
            raise ValueError("need at least one proportion")
        prev = Fraction(0)
        for i, p in enumerate(self.props, start=1):
            if not 0 <= p <= 1:
                raise ValueError(f"p({i})={p} outside [0, 1]")
            if p < prev:
                raise ValueError(f"p({i})={p} < p({i - 1})={prev}: must be non-decreasing")
            prev = p

    @property
    def t(self) -> int:
        return len(self.props)

    def at(self, x: int) -> Fraction:
        """p(x) for x >= 1, saturating at p(t)."""
        if x < 1:
            raise ValueError("hop level must be >= 1")
        return self.props[min(x, self.t) - 1]

    @classmethod
    def parse(cls, text: str) -> ProportionFunction:
        """Parse a comma list like ``"0,0.5"`` or ``"1/2,1"`` (t is its length)."""
        return cls(tuple(parse_proportion(part) for part in text.split(",")))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.props)


@dataclass(frozen=True)
class Violation:
    """One broken constraint: vertex misses the level-``level`` threshold."""

    vertex: int
    level: int
    required: Fraction  # p(level) * |original neighbors|
    achieved: int

    def __str__(self) -> str:
        return (
            f"vertex {self.vertex}: {self.achieved} of its neighbors within "
            f"{self.level} hop(s), needs at least {self.required}"
        )


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violations: tuple[Violation, ...]

    def __post_init__(self):
        assert self.ok == (not self.violations)


@dataclass(frozen=True)
class CompressionResult:
    """Kept-edge set plus run statistics."""

    kept: frozenset[Edge]
    n: int
    m: int
    proportions: ProportionFunction
    strategy: str
    seed: int | None
    seconds: float

    def kept_count(self) -> int:
        return len(self.kept)

    def subgraph(self) -> Graph:
        return Graph.from_edges(self.n, self.kept)


def _levels_ok(
    v: int,
    base: Sequence[int] | frozenset[int] | set[int],
    adjacency: Sequence[Sequence[int]],
    ratios: Sequence[tuple[int, int]],
) -> tuple[bool, int, int]:
    """Check all hop levels for one vertex.

    ``base`` is the reference neighbor set, ``adjacency`` the graph being
    probed, ``ratios`` the (numerator, denominator) pairs of p(1..t).
    Runs one BFS from ``v`` bounded by depth t, counting how many base
    neighbors have been reached after each level. Comparisons are exact:
    count must satisfy count * den >= num * deg. Returns (ok, failing
    level, count at that level); level is 0 when all pass.
    """
    base_set = base if isinstance(base, (set, frozenset)) else set(base)
    deg = len(base_set)
    if deg == 0:
        return True, 0, 0
    t = len(ratios)
    count = 0
    seen = {v}
    frontier = [v]
    for level in range(1, t + 1):
        nxt: list[int] = []
        for x in frontier:
            for y in adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if y in base_set:
                        count += 1
        num, den = ratios[level - 1]
        if count * den < num * deg:
            return False, level, count
        if count == deg:
            return True, 0, count  # every base neighbor found already
        if not nxt:
            # the count is final; report the first deeper level that fails
            for rest in range(level + 1, t + 1):
                num, den = ratios[rest - 1]
                if count * den < num * deg:
                    return False, rest, count
            return True, 0, count
        frontier = nxt
    return True, 0, count


def check_node(
    v: int,
    base_neighbors: Iterable[int],
    gc: Graph | Sequence[Sequence[int]],
    pf: ProportionFunction,
) -> bool:
    """Does ``v`` satisfy every hop-level constraint in ``gc``?

    ``base_neighbors`` is v's direct neighborhood in the reference graph
    (the full graph during verification, the replayed prefix during
    compression). True iff for each i in 1..t at least p(i) of the base
    neighbors lies within i hops of v in ``gc``.
    """
    adjacency = gc.adjacency if isinstance(gc, Graph) else gc
    ratios = [(p.numerator, p.denominator) for p in pf.props]
    base = set(base_neighbors)
    ok, _, _ = _levels_ok(v, base, adjacency, ratios)
    return ok


def _validate_ordering(g: Graph, edges: Sequence[Edge]) -> None:
    if len(edges) != g.m or {canonical_edge(u, v) for u, v in edges} != g.edge_set():
        raise InvalidOrderingError("ordering is not a permutation of the graph's edges")


def compress_basic(g: Graph, pf: ProportionFunction, order) -> CompressionResult:
    """Single incremental scan over the edges in the given order.

    Edges are replayed one by one into a growing reference graph; after
    appending (u, v) the hop constraints of u and v are re-checked against
    their reference degrees, and the edge is kept whenever either endpoint
    would otherwise fall short at some level. Keeping the edge restores
    every level for both endpoints at once (the new neighbor is within
    one hop), so the final kept set satisfies the constraints against the
    full graph under any ordering.

    ``order`` is an :class:`~hopcompress.orderings.EdgeOrdering` or a
    plain edge sequence; it must be a permutation of the edge set.
    """
    strategy = getattr(order, "strategy", "custom")
    seed = getattr(order, "seed", None)
    edges: Sequence[Edge] = getattr(order, "edges", order)
    _validate_ordering(g, edges)

    start = time.perf_counter()
    n = g.n
    ratios = [(p.numerator, p.denominator) for p in pf.props]
    reference: list[set[int]] = [set() for _ in range(n)]  # replayed prefix
    kept_adj: list[list[int]] = [[] for _ in range(n)]
    kept: list[Edge] = []
    for u, v in edges:
        reference[u].add(v)
        reference[v].add(u)
        keep = not _levels_ok(u, reference[u], kept_adj, ratios)[0]
        if not keep:
            keep = not _levels_ok(v, reference[v], kept_adj, ratios)[0]
        if keep:
            kept.append(canonical_edge(u, v))
            kept_adj[u].append(v)
            kept_adj[v].append(u)
    seconds = time.perf_counter() - start
    return CompressionResult(
        kept=frozenset(kept),
        n=n,
        m=g.m,
        proportions=pf,
        strategy=strategy,
        seed=seed,
        seconds=seconds,
    )


def verify(g: Graph, gc: Graph, pf: ProportionFunction) -> VerificationReport:
    """Independently check a compressed graph against the original.

    ``gc`` must be on the same vertex set with edges drawn from ``g``
    (raises :class:`NotASubgraphError` naming the first extra edge).
    Every vertex is re-checked from scratch against its full original
    neighborhood with one depth-t BFS; all violations are reported.
    """
    if gc.n != g.n:
        raise ValueError(f"vertex count mismatch: {gc.n} != {g.n}")
    for e in gc.edges():
        if not g.has_edge(*e):
            raise NotASubgraphError(e)
    ratios = [(p.numerator, p.denominator) for p in pf.props]
    violations: list[Violation] = []
    for v in range(g.n):
        base = g.adjacency[v]
        ok, level, count = _levels_ok(v, base, gc.adjacency, ratios)
        if not ok:
            violations.append(
                Violation(
                    vertex=v,
                    level=level,
                    required=pf.at(level) * len(base),
                    achieved=count,
                )
            )
    return VerificationReport(ok=not violations, violations=tuple(violations))
