"""Graphs for the burning games: dense integer vertices, bitmask friendly.

Only finite, connected, simple graphs are allowed.  Connectivity is
validated once at construction so every solver downstream can assume it.
Grid graphs (strong products of paths) keep their (side, dim) shape and
translate between vertex indices and 1-based grid coordinates on demand
via a mixed-radix codec; nothing stores coordinates per vertex.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import GraphError

DEFAULT_VERTEX_BUDGET = 10**6


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with the given vertex indices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def coord_to_vertex(coords: Sequence[int], side: int) -> int:
    """Mixed-radix encoding of 1-based grid coordinates (first axis fastest)."""
    v = 0
    for c in reversed(coords):
        if not 1 <= c <= side:
            raise GraphError(f"coordinate {c} outside [1, {side}]")
        v = v * side + (c - 1)
    return v


def vertex_to_coord(v: int, side: int, dim: int) -> tuple[int, ...]:
    """Inverse of :func:`coord_to_vertex`."""
    out = []
    for _ in range(dim):
        out.append(v % side + 1)
        v //= side
    return tuple(out)


class Graph:
    """Immutable connected simple graph on vertices 0..n-1.

    Instances never mutate after construction and are safe to share
    between concurrent solver workers.
    """

    def __init__(
        self,
        adjacency: Sequence[Iterable[int]],
        label: str = "",
        grid: tuple[int, int] | None = None,
    ):
        adj = tuple(frozenset(nbrs) for nbrs in adjacency)
        n = len(adj)
        if n == 0:
            raise GraphError("a graph needs at least one vertex")
        for v, nbrs in enumerate(adj):
            for w in nbrs:
                if not 0 <= w < n:
                    raise GraphError(f"neighbor {w} of vertex {v} out of range")
                if w == v:
                    raise GraphError(f"vertex {v} has a self-loop")
                if v not in adj[w]:
                    raise GraphError(f"adjacency is not symmetric at {v}-{w}")
        self.n = n
        self.adj = adj
        self.grid = grid
        self.full_mask = (1 << n) - 1
        self.label = label or "edges:" + ",".join(
            f"{v}-{w}" for v in range(n) for w in sorted(adj[v]) if v < w
        )
        self._adj_masks: tuple[int, ...] | None = None
        self._dist: list[list[int]] | None = None
        self._check_connected()

    def _check_connected(self) -> None:
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in self.adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != self.n:
            raise GraphError(f"graph is disconnected ({len(seen)} of {self.n} reachable)")

    @property
    def adj_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks, built lazily (O(n^2) bits)."""
        if self._adj_masks is None:
            self._adj_masks = tuple(mask_of(nbrs) for nbrs in self.adj)
        return self._adj_masks

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def distances_from(self, v: int) -> list[int]:
        """Unit-weight shortest path distances from ``v`` (BFS)."""
        dist = [-1] * self.n
        dist[v] = 0
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    @property
    def distance_matrix(self) -> list[list[int]]:
        """All-pairs distances; cached after the first request."""
        if self._dist is None:
            self._dist = [self.distances_from(v) for v in range(self.n)]
        return self._dist

    def ball(self, v: int, radius: int) -> int:
        """Bitmask of vertices within distance ``radius`` of ``v`` (bounded BFS)."""
        if radius < 0:
            return 0
        out = 1 << v
        frontier = [v]
        dist = {v: 0}
        while frontier:
            nxt = []
            for u in frontier:
                du = dist[u]
                if du == radius:
                    continue
                for w in self.adj[u]:
                    if w not in dist:
                        dist[w] = du + 1
                        out |= 1 << w
                        nxt.append(w)
            frontier = nxt
        return out

    def coord_of(self, v: int) -> tuple[int, ...]:
        if self.grid is None:
            raise GraphError("graph has no grid structure")
        side, dim = self.grid
        return vertex_to_coord(v, side, dim)

    def vertex_at(self, coords: Sequence[int]) -> int:
        if self.grid is None:
            raise GraphError("graph has no grid structure")
        side, dim = self.grid
        if len(coords) != dim:
            raise GraphError(f"expected {dim} coordinates, got {len(coords)}")
        return coord_to_vertex(coords, side)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph({self.label!r}, n={self.n})"


def path(n: int) -> Graph:
    """The path on n vertices, 0 adjacent to 1 adjacent to ... adjacent to n-1."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for v in range(n - 1):
        adjacency[v].append(v + 1)
        adjacency[v + 1].append(v)
    return Graph(adjacency, label=f"path:n={n}", grid=(n, 1))


def strong_path(n: int, d: int, max_vertices: int = DEFAULT_VERTEX_BUDGET) -> Graph:
    """d-fold strong product of the path on n vertices.

    Vertices are the grid [1, n]^d; two vertices are adjacent exactly when
    every coordinate differs by at most one (Chebyshev distance 1).  d = 2
    is the n x n king graph.
    """
    if n < 1 or d < 1:
        raise GraphError("strong_path needs n, d >= 1")
    total = n**d
    if total > max_vertices:
        raise GraphError(
            f"strong_path({n},{d}) has {total} vertices, over the budget of {max_vertices}"
        )
    adjacency: list[list[int]] = [[] for _ in range(total)]
    for v in range(total):
        coords = vertex_to_coord(v, n, d)
        per_axis = [
            [(c + off - 1) * n**i for off in (-1, 0, 1) if 1 <= c + off <= n]
            for i, c in enumerate(coords)
        ]
        for parts in itertools.product(*per_axis):
            w = sum(parts)
            if w != v:
                adjacency[v].append(w)
    return Graph(adjacency, label=f"strongpath:n={n},d={d}", grid=(n, d))


def from_edges(edges: Iterable[tuple[int, int]], n: int | None = None, label: str = "") -> Graph:
    """Graph from an explicit edge list; vertex count inferred when omitted."""
    edge_list = [(min(u, w), max(u, w)) for u, w in edges]
    if n is None:
        if not edge_list:
            raise GraphError("cannot infer vertex count from an empty edge list")
        n = max(max(e) for e in edge_list) + 1
    adjacency: list[set[int]] = [set() for _ in range(n)]
    for u, w in edge_list:
        if u == w:
            raise GraphError(f"self-loop at {u}")
        if not (0 <= u < n and 0 <= w < n):
            raise GraphError(f"edge {u}-{w} out of range")
        adjacency[u].add(w)
        adjacency[w].add(u)
    return Graph(adjacency, label=label)


def parse_graph_spec(spec: str, max_vertices: int = DEFAULT_VERTEX_BUDGET) -> Graph:
    """Parse the graph mini-language.

    Accepted forms::

        path:n=9
        strongpath:n=3,d=2
        edges:0-1,1-2,2-3
    """
    spec = spec.strip()
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise GraphError(f"malformed graph spec {spec!r} (missing ':')")
    if kind == "edges":
        try:
            pairs = [tuple(int(x) for x in item.split("-")) for item in rest.split(",") if item]
        except ValueError as exc:
            raise GraphError(f"malformed edge list in {spec!r}") from exc
        if any(len(p) != 2 for p in pairs):
            raise GraphError(f"malformed edge list in {spec!r}")
        return from_edges(pairs, label=spec)  # type: ignore[arg-type]
    params = {}
    for item in rest.split(","):
        key, eq, value = item.partition("=")
        if not eq:
            raise GraphError(f"malformed parameter {item!r} in graph spec {spec!r}")
        try:
            params[key.strip()] = int(value)
        except ValueError as exc:
            raise GraphError(f"parameter {key!r} in {spec!r} is not an integer") from exc
    if kind == "path":
        if set(params) != {"n"}:
            raise GraphError(f"path spec takes exactly n=..., got {spec!r}")
        return path(params["n"])
    if kind == "strongpath":
        if set(params) != {"n", "d"}:
            raise GraphError(f"strongpath spec takes n=...,d=..., got {spec!r}")
        return strong_path(params["n"], params["d"], max_vertices=max_vertices)
    raise GraphError(f"unknown graph kind {kind!r}")


def eccentricity_stats(g: Graph) -> tuple[int, int]:
    """(radius, diameter) of a connected graph via all-pairs BFS."""
    eccs = [max(g.distances_from(v)) for v in range(g.n)]
    return min(eccs), max(eccs)
