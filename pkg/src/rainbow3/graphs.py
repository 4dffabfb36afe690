"""Immutable graph core: canonical edge lists, BFS trees with the level
structure the colorings rely on, shortest-path tables and 3-terminal
Steiner distances.

All values are immutable after construction and every operation is a pure
function, so shared graphs are safe to use concurrently.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable


class GraphError(ValueError):
    """Malformed graph input or an unmet structural precondition."""


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Canonical (min, max) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1 with canonical adjacency."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._edge_set

    @property
    def _edge_set(self) -> frozenset:
        # computed lazily once; object.__setattr__ sidesteps frozen
        cached = self.__dict__.get("_edge_set_cache")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_edge_set_cache", cached)
        return cached

    def vertices(self) -> range:
        return range(self.n)


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a canonical Graph, collapsing duplicate edges.

    Rejects self-loops and out-of-range endpoints, naming the offending
    pair.  The adjacency order is deterministic (ascending), so the result
    does not depend on the order of ``edge_list``.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    seen = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) not allowed")
        seen.add(edge_key(u, v))
    edges = tuple(sorted(seen))
    adj_lists: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj_lists[u].append(v)
        adj_lists[v].append(u)
    adj = tuple(tuple(sorted(a)) for a in adj_lists)
    return Graph(n=n, edges=edges, adj=adj)


def induced_subgraph(g: Graph, verts: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``verts`` relabeled 0..k-1; returns (graph, new->old map)."""
    order = sorted(set(verts))
    index = {v: i for i, v in enumerate(order)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return build_graph(len(order), edges), order


def is_connected(g: Graph, within: Iterable[int] | None = None) -> bool:
    """Connectivity of g, or of the induced subgraph on ``within``."""
    verts = set(within) if within is not None else set(range(g.n))
    if not verts:
        return True
    start = min(verts)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in verts and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen == verts


def components_minus(g: Graph, dom: Iterable[int]) -> list[tuple[int, ...]]:
    """Connected components of G - D, each a sorted vertex tuple, in
    smallest-vertex order."""
    dset = set(dom)
    if any(v < 0 or v >= g.n for v in dset):
        raise GraphError("dominating set contains out-of-range vertices")
    seen: set[int] = set()
    comps: list[tuple[int, ...]] = []
    for s in range(g.n):
        if s in dset or s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in dset and w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    return comps


@dataclass(frozen=True)
class BfsTree:
    """Rooted BFS tree of one component, with the data the periodic
    coloring consumes: heights, parents, visitation order, first level and
    first-level-ancestor labels.

    ``first_level`` lists the root's children in visitation order; its last
    entry is the distinguished vertex whose subtree is the unique type-II
    subtree.  ``pi`` maps every non-root vertex to its first-level ancestor.
    """

    root: int
    order: tuple[int, ...]
    parent: dict
    height: dict
    children: dict
    first_level: tuple[int, ...]
    pi: dict
    pos: dict

    def is_type_two(self, v: int) -> bool:
        return v != self.root and self.pi[v] == self.first_level[-1]

    def subtree_label(self, v: int):
        """('root', None) | ('I', first-level index) | ('II', None)."""
        if v == self.root:
            return ("root", None)
        if self.is_type_two(v):
            return ("II", None)
        return ("I", self.first_level.index(self.pi[v]))

    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in self.order if v != self.root and not self.children[v])

    def vertices(self) -> tuple[int, ...]:
        return self.order


def bfs_tree(g: Graph, component: Iterable[int], root: int) -> BfsTree:
    """BFS tree of a connected component, visiting neighbors in ascending id."""
    comp = set(component)
    if root not in comp:
        raise GraphError(f"root {root} not in component")
    parent: dict = {root: None}
    height = {root: 0}
    children: dict = {root: []}
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in comp and w not in parent:
                parent[w] = u
                height[w] = height[u] + 1
                children[w] = []
                children[u].append(w)
                order.append(w)
                queue.append(w)
    if len(order) != len(comp):
        raise GraphError("component is not connected")
    first_level = tuple(children[root])
    pi: dict = {}
    for v in order[1:]:
        p = parent[v]
        pi[v] = v if p == root else pi[p]
    pos = {v: i for i, v in enumerate(order)}
    return BfsTree(
        root=root,
        order=tuple(order),
        parent=parent,
        height=height,
        children={v: tuple(c) for v, c in children.items()},
        first_level=first_level,
        pi=pi,
        pos=pos,
    )


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from source; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Symmetric shortest-path matrix; raises naming two unreachable vertices."""
    rows = []
    for s in range(g.n):
        dist = bfs_distances(g, s)
        for v, d in enumerate(dist):
            if d < 0:
                raise GraphError(f"graph is disconnected: no path between {s} and {v}")
        rows.append(tuple(dist))
    return tuple(rows)


def diameter(g: Graph) -> int:
    dist = all_pairs_distances(g)
    return max(max(row) for row in dist)


def steiner_distance3(g: Graph, s: Iterable[int]) -> int:
    """Minimum size (edge count) of a tree containing the 3-vertex set ``s``.

    For three terminals an optimal Steiner tree is three shortest paths
    meeting at one median vertex, so the minimum over all vertices m of
    d(m,s1)+d(m,s2)+d(m,s3) is exact.
    """
    terms = sorted(set(s))
    if len(terms) != 3 or terms[0] < 0 or terms[-1] >= g.n:
        raise GraphError(f"need exactly 3 distinct vertices of g, got {terms}")
    dists = [bfs_distances(g, t) for t in terms]
    best = None
    for m in range(g.n):
        if any(d[m] < 0 for d in dists):
            continue
        total = dists[0][m] + dists[1][m] + dists[2][m]
        if best is None or total < best:
            best = total
    if best is None:
        raise GraphError(f"terminals {terms} are not connected")
    return best


def sdiam3_with_triple(g: Graph) -> tuple[int, tuple[int, int, int]]:
    """(max Steiner distance over all triples, lexicographically first argmax)."""
    if g.n < 3:
        raise GraphError(f"sdiam3 needs at least 3 vertices, got n={g.n}")
    dist = all_pairs_distances(g)
    best = -1
    best_triple = (0, 1, 2)
    for a, b, c in itertools.combinations(range(g.n), 3):
        da, db, dc = dist[a], dist[b], dist[c]
        val = min(da[m] + db[m] + dc[m] for m in range(g.n))
        if val > best:
            best = val
            best_triple = (a, b, c)
    return best, best_triple


def sdiam3(g: Graph) -> int:
    """Maximum Steiner distance over all 3-vertex sets."""
    return sdiam3_with_triple(g)[0]


# ---------------------------------------------------------------------------
# Edge-list text format: first line "n m", then m lines "u v" (0-indexed);
# everything after '#' on a line is a comment.

def read_edge_list(text: str) -> Graph:
    tokens: list[str] = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body:
            tokens.extend(body.split())
    if len(tokens) < 2:
        raise GraphError("edge list needs a header line 'n m'")
    try:
        n, m = int(tokens[0]), int(tokens[1])
    except ValueError as exc:
        raise GraphError(f"bad header {tokens[:2]!r}: {exc}") from None
    rest = tokens[2:]
    if len(rest) != 2 * m:
        raise GraphError(f"expected {2 * m} endpoint tokens for m={m}, got {len(rest)}")
    try:
        pairs = [(int(rest[2 * i]), int(rest[2 * i + 1])) for i in range(m)]
    except ValueError as exc:
        raise GraphError(f"bad edge token: {exc}") from None
    return build_graph(n, pairs)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
