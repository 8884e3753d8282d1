"""Vertex cover by leaf removal with a maximum-degree fallback, plus a
brute-force minimum cover for small graphs."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph, GraphError

EXACT_CAP = 16


@dataclass
class CoverResult:
    cover: list[int]
    delta_v: int

    @property
    def v_lm(self) -> int:
        return len(self.cover)


def is_vertex_cover(g: Graph, s: Iterable[int]) -> bool:
    chosen = set(s)
    return all(u in chosen or v in chosen for u, v in g.edges())


def lm_vertex_cover(g: Graph) -> CoverResult:
    """While a leaf exists, put its neighbour in the cover and delete both;
    otherwise cover and delete the lowest-id vertex of maximum degree.

    Leaves are taken FIFO, initial ones in id order. Stale queue entries are
    skipped and isolated vertices are dropped without being covered.
    """
    w = g.copy()
    adj, removed = w.adj, w.removed
    cover: list[int] = []
    delta_v = 0
    queue = deque(v for v in w.vertices() if len(adj[v]) == 1)
    heap = [(-len(adj[v]), v) for v in w.vertices()]
    heapq.heapify(heap)

    def take(v: int) -> None:
        cover.append(v)
        nbrs = list(adj[v])
        w.remove_vertex(v)
        for u in sorted(nbrs):
            if len(adj[u]) == 1:
                queue.append(u)

    while True:
        while queue:
            leaf = queue.popleft()
            if removed[leaf] or len(adj[leaf]) != 1:
                continue
            (hub,) = adj[leaf]
            w.remove_vertex(leaf)
            take(hub)
        while heap:
            d, v = heapq.heappop(heap)
            if removed[v]:
                continue
            if len(adj[v]) != -d:
                heapq.heappush(heap, (-len(adj[v]), v))
                continue
            break
        else:
            break
        if d == 0:
            break
        take(v)
        delta_v += 1
    return CoverResult(cover, delta_v)


def exact_vertex_cover(g: Graph, cap: int = EXACT_CAP) -> tuple[int, list[int]]:
    verts = list(g.vertices())
    if len(verts) > cap:
        raise GraphError(f"exact oracle capped at {cap} vertices, graph has {len(verts)}")
    index = {v: i for i, v in enumerate(verts)}
    edge_masks = [(1 << index[u]) | (1 << index[v]) for u, v in g.edges()]
    for size in range(len(verts) + 1):
        for combo in combinations(range(len(verts)), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if all(e & mask for e in edge_masks):
                return size, [verts[i] for i in combo]
    raise AssertionError("unreachable: all vertices always cover")
