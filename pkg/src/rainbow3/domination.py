"""Dominating-set variants: predicate checks, exact minimum searches at desk
scale, a many-leaf spanning-tree heuristic, and dominating paths of interval
graphs."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph, GraphError, build_graph, is_connected


class DominationError(ValueError):
    """The supplied set does not satisfy the required domination property."""


class LimitError(RuntimeError):
    """An exact search was asked to exceed its configured size limit."""


EXACT = "exact"
HEURISTIC = "heuristic"
USER = "user"


@dataclass(frozen=True)
class DominationKind:
    """Which strengthening of domination is required.

    k_dominating: every outside vertex needs that many neighbors inside D
    (1 is plain domination).  k_way: every outside vertex needs that total
    degree in G.  connected: G[D] must be connected.
    """

    connected: bool = False
    k_dominating: int = 1
    k_way: int = 0

    def label(self) -> str:
        parts = []
        if self.connected:
            parts.append("connected")
        if self.k_dominating > 1:
            parts.append(f"{self.k_dominating}-dominating")
        elif self.k_way > 0:
            parts.append(f"{self.k_way}-way")
        else:
            parts.append("dominating")
        return " ".join(parts)


PLAIN = DominationKind()
CONNECTED = DominationKind(connected=True)


def k_way(k: int, connected: bool = True) -> DominationKind:
    return DominationKind(connected=connected, k_dominating=1, k_way=k)


def k_dominating(k: int, connected: bool = True) -> DominationKind:
    return DominationKind(connected=connected, k_dominating=k)


@dataclass(frozen=True)
class DominatingSet:
    vertices: frozenset
    kind: DominationKind
    provenance: str

    @property
    def size(self) -> int:
        return len(self.vertices)

    def sorted(self) -> list[int]:
        return sorted(self.vertices)


def feet(g: Graph, dom: Iterable[int], v: int) -> tuple[int, ...]:
    """Neighbors of the outside vertex v inside D, ascending (its legs' feet)."""
    dset = set(dom)
    return tuple(w for w in g.adj[v] if w in dset)


def check_domination(g: Graph, dom: Iterable[int], kind: DominationKind) -> bool:
    """True iff ``dom`` satisfies the named domination property in g."""
    dset = frozenset(dom)
    if any(v < 0 or v >= g.n for v in dset):
        return False
    need = kind.k_dominating
    for v in range(g.n):
        if v in dset:
            continue
        if kind.k_way and g.degree(v) < kind.k_way:
            return False
        count = 0
        for w in g.adj[v]:
            if w in dset:
                count += 1
                if count >= need:
                    break
        if count < need:
            return False
    if kind.connected and not is_connected(g, dset):
        return False
    return True


def _first_valid_subset(g: Graph, kind: DominationKind, limit: int) -> frozenset:
    """Smallest set satisfying ``kind``, size-then-lexicographic order."""
    if g.n > limit:
        raise LimitError(
            f"exact enumeration limited to n <= {limit}, got n={g.n}; "
            "use the heuristic variant"
        )
    nbr_mask = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            dmask = 0
            for v in combo:
                dmask |= 1 << v
            # fast domination reject before the connectivity scan
            ok = True
            need = kind.k_dominating
            for v in range(g.n):
                bit = 1 << v
                if dmask & bit:
                    continue
                inter = nbr_mask[v] & dmask
                if need == 1:
                    if not inter:
                        ok = False
                        break
                elif bin(inter).count("1") < need:
                    ok = False
                    break
                if kind.k_way and g.degree(v) < kind.k_way:
                    ok = False
                    break
            if not ok:
                continue
            if kind.connected and not _mask_connected(nbr_mask, dmask, combo[0]):
                continue
            return frozenset(combo)
    raise DominationError(f"no {kind.label()} set exists")


def _mask_connected(nbr_mask: list, dmask: int, start: int) -> bool:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            v = low.bit_length() - 1
            f ^= low
            nxt |= nbr_mask[v] & dmask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == dmask


def min_connected_dominating_set(g: Graph, limit: int = 24) -> DominatingSet:
    """Smallest connected dominating set by increasing-size enumeration;
    ties broken lexicographically.  Exact only up to the size limit."""
    if not is_connected(g):
        raise GraphError("graph must be connected")
    verts = _first_valid_subset(g, CONNECTED, limit)
    return DominatingSet(verts, CONNECTED, EXACT)


def min_connected_k_dominating_set(g: Graph, k: int, limit: int = 24) -> DominatingSet:
    """Smallest connected k-dominating set (exact enumeration)."""
    if not is_connected(g):
        raise GraphError("graph must be connected")
    verts = _first_valid_subset(g, k_dominating(k), limit)
    return DominatingSet(verts, k_dominating(k), EXACT)


def cds_heuristic(g: Graph) -> DominatingSet:
    """Non-leaf vertices of a greedily grown many-leaf spanning tree.

    Always a valid connected dominating set (post-checked); no size
    guarantee is asserted.
    """
    if not is_connected(g):
        raise GraphError("graph must be connected")
    if g.n == 1:
        return DominatingSet(frozenset({0}), CONNECTED, HEURISTIC)
    root = max(range(g.n), key=lambda v: (g.degree(v), -v))
    in_tree = {root}
    internal: set[int] = set()
    while len(in_tree) < g.n:
        best_v, best_new = -1, -1
        for v in sorted(in_tree):
            new = sum(1 for w in g.adj[v] if w not in in_tree)
            if new > best_new:
                best_v, best_new = v, new
        if best_new <= 0:
            raise GraphError("graph must be connected")
        internal.add(best_v)
        for w in g.adj[best_v]:
            in_tree.add(w)
    if not internal:
        internal = {root}
    result = DominatingSet(frozenset(internal), CONNECTED, HEURISTIC)
    if not check_domination(g, result.vertices, CONNECTED):
        raise AssertionError("heuristic produced an invalid connected dominating set")
    return result


def _reconnect(g: Graph, dset: set) -> None:
    """Grow dset with shortest-path vertices until G[dset] is connected.

    Smallest-id tie-breaks throughout.  For sets built from a connected
    dominating core this never has to add anything.
    """
    while not is_connected(g, dset):
        comps: list[set] = []
        left = set(dset)
        while left:
            s = min(left)
            comp = {s}
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in g.adj[u]:
                    if w in dset and w not in comp:
                        comp.add(w)
                        queue.append(w)
            comps.append(comp)
            left -= comp
        base = comps[0]
        # BFS from the first fragment to the nearest other fragment
        parent = {v: None for v in sorted(base)}
        queue = deque(sorted(base))
        hit = None
        while queue and hit is None:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in parent:
                    parent[w] = u
                    if w in dset:
                        hit = w
                        break
                    queue.append(w)
        if hit is None:
            raise GraphError("graph must be connected")
        v = parent[hit]
        while v is not None and v not in base:
            dset.add(v)
            v = parent[v]


def three_way_dominating_set(g: Graph, exact_limit: int = 24) -> DominatingSet:
    """Connected dominating set unioned with every vertex of degree < 3.

    Uses the exact minimum connected dominating set when n is within the
    enumeration limit, otherwise the many-leaf heuristic.  The result always
    satisfies connected 3-way domination.
    """
    try:
        core = min_connected_dominating_set(g, limit=exact_limit)
    except LimitError:
        core = cds_heuristic(g)
    dset = set(core.vertices) | {v for v in range(g.n) if g.degree(v) < 3}
    _reconnect(g, dset)
    result = DominatingSet(frozenset(dset), k_way(3), core.provenance)
    if not check_domination(g, result.vertices, k_way(3)):
        raise AssertionError("three-way construction produced an invalid set")
    return result


# ---------------------------------------------------------------------------
# Interval graphs.  Input is the interval representation itself: one
# (lo, hi) pair per vertex.

def interval_graph(intervals: Sequence[tuple[float, float]]) -> Graph:
    n = len(intervals)
    edges = []
    for i, j in itertools.combinations(range(n), 2):
        lo_i, hi_i = intervals[i]
        lo_j, hi_j = intervals[j]
        if max(lo_i, lo_j) <= min(hi_i, hi_j):
            edges.append((i, j))
    return build_graph(n, edges)


def interval_dominating_path(intervals: Sequence[tuple[float, float]]) -> list[int]:
    """Dominating path of the interval graph by a greedy left-to-right sweep
    over right endpoints.  Consecutive path vertices overlap; the vertex set
    dominates (post-checked).  No length guarantee is made."""
    if not intervals:
        raise GraphError("empty interval system")
    g = interval_graph(intervals)
    if not is_connected(g):
        raise GraphError("interval graph is disconnected")
    lo_min = min(lo for lo, _ in intervals)
    # start with the furthest-reaching interval touching the leftmost point
    start = max(
        (i for i, (lo, hi) in enumerate(intervals) if lo <= lo_min <= hi),
        key=lambda i: (intervals[i][1], -i),
    )
    path = [start]
    reach = intervals[start][1]
    while True:
        rightmost = max(hi for _, hi in intervals)
        if reach >= rightmost:
            break
        candidates = [
            i
            for i, (lo, hi) in enumerate(intervals)
            if i not in path and lo <= reach and hi > reach
        ]
        if not candidates:
            break
        nxt = max(candidates, key=lambda i: (intervals[i][1], -i))
        path.append(nxt)
        reach = intervals[nxt][1]
    if not check_domination(g, path, PLAIN):
        raise AssertionError("greedy sweep failed to dominate the interval graph")
    return path


def read_intervals(text: str) -> list[tuple[float, float]]:
    """Interval input file: one 'lo hi' pair per line, floats."""
    out = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise GraphError(f"bad interval line {line!r}")
        out.append((float(parts[0]), float(parts[1])))
    return out
