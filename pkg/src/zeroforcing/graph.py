"""Undirected simple graphs with tombstone vertex removal.

Vertex ids are the integers ``0..n-1`` and never change. Removing a vertex
marks it dead and detaches it from its neighbours, so results computed on a
mutated working copy still refer to the ids of the original graph.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid operation on a graph (bad vertex, self-loop, ...)."""


class Graph:
    __slots__ = ("adj", "removed", "n_alive")

    def __init__(self, n: int = 0):
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        self.adj: list[set[int]] = [set() for _ in range(n)]
        self.removed: list[bool] = [False] * n
        self.n_alive = n

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    @property
    def n(self) -> int:
        """Number of vertex ids, dead ones included."""
        return len(self.adj)

    def __len__(self) -> int:
        return self.n_alive

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.removed == other.removed and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, alive={self.n_alive}, edges={self.edge_count()})"

    def _check_alive(self, v: int) -> None:
        if not 0 <= v < len(self.adj):
            raise GraphError(f"vertex {v} out of range 0..{len(self.adj) - 1}")
        if self.removed[v]:
            raise GraphError(f"vertex {v} has been removed")

    def is_alive(self, v: int) -> bool:
        return 0 <= v < len(self.adj) and not self.removed[v]

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        self._check_alive(u)
        self._check_alive(v)
        self.adj[u].add(v)
        self.adj[v].add(u)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < len(self.adj) and v in self.adj[u]

    def remove_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise GraphError(f"no edge {u}-{v}")
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def remove_vertex(self, v: int) -> None:
        self._check_alive(v)
        for w in self.adj[v]:
            self.adj[w].discard(v)
        self.adj[v] = set()
        self.removed[v] = True
        self.n_alive -= 1

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def vertices(self) -> Iterator[int]:
        """Alive vertex ids in increasing order."""
        return (v for v, dead in enumerate(self.removed) if not dead)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.vertices() for v in sorted(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degrees(self) -> list[int]:
        return [len(self.adj[v]) for v in self.vertices()]

    def leaves(self) -> list[int]:
        return [v for v in self.vertices() if len(self.adj[v]) == 1]

    def copy(self) -> Graph:
        g = Graph.__new__(Graph)
        g.adj = [set(s) for s in self.adj]
        g.removed = list(self.removed)
        g.n_alive = self.n_alive
        return g

    def neighbor_masks(self) -> list[int]:
        """Neighbour bitmasks indexed by vertex id (dead vertices get 0)."""
        masks = []
        for s in self.adj:
            m = 0
            for w in s:
                m |= 1 << w
            masks.append(m)
        return masks


@dataclass(frozen=True)
class ChainReport:
    is_isolated_chain: bool
    other_end: int | None
    path: tuple[int, ...]


def walk_chain(g: Graph, leaf: int) -> tuple[int, ...]:
    """Vertices visited walking from ``leaf`` through degree-2 vertices.

    The walk stops at the first vertex whose degree is not 2, which is the
    last element of the returned tuple.
    """
    path = [leaf]
    prev, cur = leaf, next(iter(g.adj[leaf]))
    path.append(cur)
    while len(g.adj[cur]) == 2:
        a, b = g.adj[cur]
        prev, cur = cur, (b if a == prev else a)
        path.append(cur)
    return tuple(path)


def chain_probe(g: Graph, leaf: int) -> ChainReport:
    if not g.is_alive(leaf) or g.degree(leaf) != 1:
        raise GraphError(f"vertex {leaf} is not a leaf")
    path = walk_chain(g, leaf)
    end = path[-1]
    if g.degree(end) == 1:
        return ChainReport(True, end, path)
    return ChainReport(False, None, path)


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    g._check_alive(source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = du
                queue.append(w)
    return dist


def eccentricity(g: Graph, v: int) -> int:
    return max(bfs_distances(g, v).values())


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted id lists, ordered by their smallest id."""
    seen = [False] * g.n
    comps = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def write_edgelist(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w") as fh:
        fh.write(f"N {g.n}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def read_edgelist(path: str | os.PathLike) -> Graph:
    """Read ``u v`` lines; ``#`` starts a comment, an optional first line
    ``N <count>`` declares the vertex count (isolated vertices included)."""
    declared = None
    edges = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "N":
                if declared is not None or edges or len(parts) != 2:
                    raise GraphError(f"{path}:{lineno}: misplaced vertex-count line")
                declared = int(parts[1])
                continue
            if len(parts) != 2:
                raise GraphError(f"{path}:{lineno}: expected 'u v', got {line!r}")
            edges.append((int(parts[0]), int(parts[1])))
    top = max((max(e) for e in edges), default=-1) + 1
    if declared is not None and declared < top:
        raise GraphError(f"{path}: edge references vertex >= declared N={declared}")
    return Graph.from_edges(declared if declared is not None else top, edges)
