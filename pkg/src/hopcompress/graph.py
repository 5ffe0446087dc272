"""Immutable simple undirected graphs with hop-bounded queries.

Vertices are dense integer ids ``0..n-1``. Graphs loaded from edge-list
files keep the original vertex labels in ``Graph.labels`` so results can
be written back in the caller's id space.
"""

from __future__ import annotations

import warnings
from collections import deque
from typing import IO, Iterable, Iterator, Sequence

from .errors import EdgeListFormatError

Edge = tuple[int, int]
Path = tuple[int, ...]


def canonical_edge(u: int, v: int) -> Edge:
    """Return the endpoints as a ``(min, max)`` pair."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph, immutable after construction.

    Safe for unlimited concurrent readers; every traversal owns its own
    scratch state.
    """

    __slots__ = ("n", "m", "adjacency", "labels")

    def __init__(self, adjacency: Sequence[Iterable[int]], labels: Sequence[int] | None = None):
        adj = tuple(tuple(sorted(neighbors)) for neighbors in adjacency)
        n = len(adj)
        degree_sum = 0
        for u, neighbors in enumerate(adj):
            prev = -1
            for v in neighbors:
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
                if not 0 <= v < n:
                    raise ValueError(f"neighbor {v} of vertex {u} out of range")
                if v == prev:
                    raise ValueError(f"duplicate edge ({u}, {v})")
                if u not in adj[v]:
                    raise ValueError(f"asymmetric adjacency: {u}->{v} but not {v}->{u}")
                prev = v
            degree_sum += len(neighbors)
        # handshaking: every edge appears in exactly two adjacency rows
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", degree_sum // 2)
        object.__setattr__(self, "adjacency", adj)
        if labels is not None and len(labels) != n:
            raise ValueError("labels must have one entry per vertex")
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], labels: Sequence[int] | None = None) -> Graph:
        """Build a graph on ``n`` vertices from an iterable of edges."""
        adjacency: list[list[int]] = [[] for _ in range(n)]
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = canonical_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            adjacency[u].append(v)
            adjacency[v].append(u)
        return cls(adjacency, labels=labels)

    def edges(self) -> Iterator[Edge]:
        """Yield canonical ``u < v`` edges in ascending order."""
        for u, neighbors in enumerate(self.adjacency):
            for v in neighbors:
                if u < v:
                    yield (u, v)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges())

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        a, b = self.adjacency[u], self.adjacency[v]
        return v in a if len(a) <= len(b) else u in b

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.adjacency == other.adjacency
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.adjacency, self.labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def load_edge_list(source: IO[str] | Iterable[str]) -> Graph:
    """Parse an edge-list text stream into a :class:`Graph`.

    Lines starting with ``#`` are comments; data lines hold two unsigned
    integers separated by whitespace. Vertex ids are relabeled onto a
    dense ``0..n-1`` range (ascending original order); the original ids
    are kept in ``Graph.labels``. Duplicate edges are collapsed with a
    single warning reporting how many were dropped; self-loops are
    rejected.
    """
    raw_edges: list[tuple[int, int]] = []
    for line_number, line in enumerate(source, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise EdgeListFormatError(
                f"expected two integers, got {stripped!r}", line_number
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListFormatError(
                f"non-integer token in {stripped!r}", line_number
            ) from None
        if u < 0 or v < 0:
            raise EdgeListFormatError(f"negative vertex id in {stripped!r}", line_number)
        if u == v:
            raise EdgeListFormatError(f"self-loop at vertex {u}", line_number)
        raw_edges.append((u, v))

    ids = sorted({x for e in raw_edges for x in e})
    dense = {label: i for i, label in enumerate(ids)}

    edges: set[Edge] = set()
    duplicates = 0
    for u, v in raw_edges:
        e = canonical_edge(dense[u], dense[v])
        if e in edges:
            duplicates += 1
        else:
            edges.add(e)
    if duplicates:
        warnings.warn(f"collapsed {duplicates} duplicate edge(s)", stacklevel=2)
    return Graph.from_edges(len(ids), sorted(edges), labels=ids)


def write_edge_list(g: Graph, out: IO[str]) -> None:
    """Write canonical ``u < v`` edges ascending, one per line.

    Original labels are emitted when the graph carries them (the label
    map is ascending, so canonical order is preserved either way).
    """
    labels = g.labels
    for u, v in g.edges():
        if labels is not None:
            out.write(f"{labels[u]} {labels[v]}\n")
        else:
            out.write(f"{u} {v}\n")


def k_hop_neighbors(g: Graph, v: int, k: int) -> set[int]:
    """All vertices at distance ``1..k`` from ``v`` (``v`` itself excluded).

    Depth-bounded BFS, O(n + m) worst case.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if k < 1:
        raise ValueError("k must be >= 1")
    adjacency = g.adjacency
    seen = {v}
    result: set[int] = set()
    frontier = [v]
    for _ in range(k):
        nxt: list[int] = []
        for x in frontier:
            for y in adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    result.add(y)
                    nxt.append(y)
        if not nxt:
            break
        frontier = nxt
    return result


def bfs_distances(adjacency: Sequence[Sequence[int]], source: int, cutoff: int | None = None) -> dict[int, int]:
    """Hop distances from ``source`` to every reachable vertex.

    ``cutoff`` bounds the search depth; distances beyond it are omitted.
    """
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        d = dist[x]
        if cutoff is not None and d >= cutoff:
            continue
        for y in adjacency[x]:
            if y not in dist:
                dist[y] = d + 1
                queue.append(y)
    return dist


def enumerate_simple_paths(g: Graph, u: int, v: int, max_len: int) -> list[Path]:
    """Every simple path from ``u`` to ``v`` with at most ``max_len`` edges.

    Paths are returned exactly once each, in lexicographic order of their
    vertex sequences (the natural emission order of a DFS over sorted
    adjacency). The direct edge, when present, appears as the length-1
    path. Cost grows as b**max_len for average branching factor b.
    """
    if u == v:
        raise ValueError("endpoints must differ")
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    adjacency = g.adjacency
    paths: list[Path] = []
    on_path = [False] * g.n
    on_path[u] = True
    path = [u]
    # stack of per-vertex neighbor cursors, mirroring `path`
    cursors = [0]
    while cursors:
        x = path[-1]
        i = cursors[-1]
        neighbors = adjacency[x]
        if i >= len(neighbors):
            cursors.pop()
            path.pop()
            on_path[x] = False
            continue
        cursors[-1] = i + 1
        y = neighbors[i]
        if y == v:
            paths.append(tuple(path) + (v,))
            continue
        if not on_path[y] and len(path) <= max_len - 1:
            on_path[y] = True
            path.append(y)
            cursors.append(0)
    return paths
