"""Shared independent oracles for cross-checking the library.

Everything here is deliberately written from first principles (plain
recursion, all-pairs BFS) so it shares no code path with the package.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import strategies as st

from hopcompress import Graph, ProportionFunction


def recursive_simple_paths(g: Graph, u: int, v: int, max_len: int) -> list[tuple[int, ...]]:
    """Brute-force enumerator, independent of the library's iterative DFS."""

    found: list[tuple[int, ...]] = []

    def extend(path: list[int]) -> None:
        last = path[-1]
        if last == v:
            found.append(tuple(path))
            return
        if len(path) - 1 >= max_len:
            return
        for w in g.adjacency[last]:
            if w not in path:
                path.append(w)
                extend(path)
                path.pop()

    extend([u])
    return sorted(found)


def oracle_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def oracle_satisfies(g: Graph, gc: Graph, pf: ProportionFunction) -> bool:
    """Definition check via all-pairs BFS, independent of verify()."""
    for v in range(g.n):
        base = g.adjacency[v]
        if not base:
            continue
        dist = oracle_distances(gc, v)
        for level in range(1, pf.t + 1):
            reached = sum(1 for u in base if dist.get(u, 10**9) <= level)
            if Fraction(reached) < pf.at(level) * len(base):
                return False
    return True


@st.composite
def small_graphs(draw, min_n: int = 2, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(
        st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))
        if pairs
        else st.just([])
    )
    return Graph.from_edges(n, edges)


@st.composite
def proportion_functions(draw, max_t: int = 3):
    t = draw(st.integers(1, max_t))
    values = sorted(
        draw(
            st.lists(
                st.fractions(min_value=0, max_value=1, max_denominator=6),
                min_size=t,
                max_size=t,
            )
        )
    )
    return ProportionFunction(tuple(values))


@pytest.fixture
def triangle():
    return Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def diamond():
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
