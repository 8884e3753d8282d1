"""Zero forcing: closure, verification, the leaf/max-degree (LM) heuristic
and a brute-force oracle for small graphs."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable

from .graph import Graph, GraphError

EXACT_CAP = 16


class LmMode(str, Enum):
    CLOSURE_CONSISTENT = "closure-consistent"
    STRICT_LITERAL = "strict-literal"


@dataclass
class ForcingResult:
    zfs: list[int]
    delta_z: int
    rule_trace: list[tuple[str, int]] | None = field(default=None, repr=False)

    @property
    def z_lm(self) -> int:
        return len(self.zfs)


def closure(g: Graph, initial_black: Iterable[int]) -> set[int]:
    """Black set reached by repeatedly letting a black vertex with exactly one
    white neighbour colour that neighbour black."""
    black = set()
    for v in initial_black:
        if not g.is_alive(v):
            raise GraphError(f"vertex {v} is not alive")
        black.add(v)
    adj = g.adj
    n_white = {v: sum(1 for w in adj[v] if w not in black) for v in black}
    queue = deque(sorted(v for v in black if n_white[v] == 1))
    while queue:
        v = queue.popleft()
        if n_white[v] != 1:
            continue
        target = next(w for w in adj[v] if w not in black)
        black.add(target)
        n_white[target] = sum(1 for w in adj[target] if w not in black)
        if n_white[target] == 1:
            queue.append(target)
        for w in adj[target]:
            if w in black and w != target:
                n_white[w] -= 1
                if n_white[w] == 1:
                    queue.append(w)
    return black


def is_forcing_set(g: Graph, s: Iterable[int]) -> bool:
    return len(closure(g, s)) == g.n_alive


def _closure_mask(nbr: list[int], black: int) -> int:
    changed = True
    while changed:
        changed = False
        b = black
        while b:
            low = b & -b
            b ^= low
            white = nbr[low.bit_length() - 1] & ~black
            if white and not white & (white - 1):
                black |= white
                changed = True
    return black


def exact_zero_forcing(g: Graph, cap: int = EXACT_CAP) -> tuple[int, list[int]]:
    """Minimum zero forcing set by enumeration: sizes ascending, subsets in
    lexicographic order within a size. Returns ``(Z, witness)``."""
    verts = list(g.vertices())
    k = len(verts)
    if k > cap:
        raise GraphError(f"exact oracle capped at {cap} vertices, graph has {k}")
    index = {v: i for i, v in enumerate(verts)}
    nbr = [sum(1 << index[w] for w in g.adj[v]) for v in verts]
    full = (1 << k) - 1
    for size in range(k + 1):
        for combo in combinations(range(k), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if _closure_mask(nbr, mask) == full:
                return size, [verts[i] for i in combo]
    raise AssertionError("unreachable: the full vertex set is always forcing")


def minimum_rank_lower_bound(n: int, z: int) -> int:
    if z > n:
        raise ValueError(f"forcing set size {z} exceeds vertex count {n}")
    return n - z


class _LMRun:
    """Mutable working state for one LM run on a private copy of the graph."""

    def __init__(self, g: Graph, mode: LmMode, trace: bool):
        self.w = g.copy()
        self.mode = LmMode(mode)
        self.black = [False] * g.n
        self.zfs: list[int] = []
        self.delta_z = 0
        self.trace: list[tuple[str, int]] | None = [] if trace else None
        adj = self.w.adj
        # vertices that may have degree <= 1; superset, filtered on use
        self.low = {v for v in self.w.vertices() if len(adj[v]) <= 1}
        self.heap = [(-len(adj[v]), v) for v in self.w.vertices()]
        heapq.heapify(self.heap)

    def _log(self, tag: str, v: int) -> None:
        if self.trace is not None:
            self.trace.append((tag, v))

    def _remove(self, v: int) -> None:
        adj = self.w.adj
        for u in adj[v]:
            if len(adj[u]) <= 2:
                self.low.add(u)
        self.w.remove_vertex(v)
        self.low.discard(v)

    def _add_to_set(self, v: int, tag: str) -> None:
        self.black[v] = True
        self.zfs.append(v)
        self._log(tag, v)

    def _force_from(self, leaf: int) -> None:
        """A black leaf forces its neighbour and is removed; repeats while the
        neighbour is left as a (black) leaf."""
        adj = self.w.adj
        while True:
            (u,) = adj[leaf]
            self._remove(leaf)
            if not self.black[u]:
                self.black[u] = True
                self._log("force", u)
            if len(adj[u]) != 1:
                return
            leaf = u

    def _walk(self, prev: int, cur: int, stop_at_black: bool = False) -> list[int]:
        adj, black = self.w.adj, self.black
        path = [cur]
        while len(adj[cur]) == 2 and not (stop_at_black and black[cur]):
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
            path.append(cur)
        return path

    def process_leaf(self, leaf: int) -> None:
        if self.black[leaf]:
            self._force_from(leaf)
        elif self.mode is LmMode.STRICT_LITERAL:
            self._process_literal(leaf)
        else:
            self._process_consistent(leaf)

    def _process_literal(self, leaf: int) -> None:
        adj = self.w.adj
        (hub,) = adj[leaf]
        end = self._walk(leaf, hub)[-1]
        if len(adj[end]) == 1 and not self.black[end]:
            self._add_to_set(leaf, "chain")
            self._force_from(leaf)
            return
        for s in sorted(adj[hub]):
            if s != leaf and len(adj[s]) == 1 and not self.black[s]:
                self._add_to_set(s, "sibling")
                self._remove(s)

    def _process_consistent(self, leaf: int) -> None:
        adj = self.w.adj
        (nb,) = adj[leaf]
        path = [leaf] + self._walk(leaf, nb, stop_at_black=True)
        end = path[-1]
        if self.black[end]:
            self._hand_over(end, path[:-1])
        elif len(adj[end]) == 1:
            self._add_to_set(leaf, "chain")
            self._force_from(leaf)
        elif len(adj[end]) >= 3 and self._sibling_chains(end, path[-2]):
            if not self.w.removed[end]:
                self._hand_over(end, path[:-1])

    def _hand_over(self, owner: int, chain: list[int]) -> None:
        """Black ``owner`` keeps a white pendant chain as its last force.

        The owner and the chain leave the working graph now; the owner forces
        the chain once all its other neighbours are black, which holds at the
        end of the run, so the chain counts as forced.
        """
        for v in reversed(chain):
            self.black[v] = True
            self._log("handover", v)
        self._remove(owner)
        for v in chain:
            self._remove(v)

    def _sibling_chains(self, hub: int, own: int) -> bool:
        """Add the tips of every other white pendant chain on ``hub`` and let
        them force down to it. Returns whether any tip was added."""
        adj, black = self.w.adj, self.black
        tips = []
        for y in sorted(adj[hub]):
            if y == own or black[y]:
                continue
            tip = self._walk(hub, y, stop_at_black=True)[-1]
            if len(adj[tip]) == 1 and not black[tip]:
                tips.append(tip)
        for tip in tips:
            if self.w.removed[tip] or black[tip]:
                continue
            self._add_to_set(tip, "sibling")
            self._force_from(tip)
        return bool(tips)

    def sweep_isolated(self) -> None:
        adj = self.w.adj
        for v in sorted(self.low):
            if not self.w.removed[v] and not adj[v]:
                if not self.black[v]:
                    self._add_to_set(v, "isolated")
                self._remove(v)

    def max_degree_step(self) -> None:
        adj, removed = self.w.adj, self.w.removed
        while True:
            d, v = heapq.heappop(self.heap)
            if removed[v]:
                continue
            if len(adj[v]) != -d:
                heapq.heappush(self.heap, (-len(adj[v]), v))
                continue
            break
        if self.black[v]:
            self._log("maxdeg-black", v)
        else:
            self._add_to_set(v, "maxdeg")
            self.delta_z += 1
        self._remove(v)

    def run(self) -> ForcingResult:
        w = self.w
        adj, removed = w.adj, w.removed
        while w.n_alive:
            before = w.n_alive
            snapshot = sorted(v for v in self.low if not removed[v] and len(adj[v]) == 1)
            for leaf in snapshot:
                if not removed[leaf] and len(adj[leaf]) == 1:
                    self.process_leaf(leaf)
            self.sweep_isolated()
            if w.n_alive and w.n_alive == before:
                self.max_degree_step()
                self.sweep_isolated()
        return ForcingResult(self.zfs, self.delta_z, self.trace)


def lm_zero_forcing(
    g: Graph, mode: LmMode | str = LmMode.CLOSURE_CONSISTENT, trace: bool = False
) -> ForcingResult:
    """Leaf and maximum-degree removal heuristic for a small zero forcing set.

    Each round snapshots the current leaves and applies, per leaf: the
    isolated-chain rule (white leaf, white far end: the leaf joins the set),
    the black-leaf rule (force the neighbour, drop the leaf, recurse), and the
    sibling rule. If a round plus the isolated-vertex sweep removes nothing,
    the lowest-id vertex of maximum degree joins the set and is removed;
    those additions are counted in ``delta_z``.

    In ``strict-literal`` mode the sibling rule only adds white leaves at
    distance 2 and leaves the hub white. In ``closure-consistent`` mode it
    adds the white tips of every other pendant chain on the branch vertex and
    lets them force their chains and the branch vertex.

    The input graph is not modified.
    """
    return _LMRun(g, mode, trace).run()
