"""Deterministic constructors for every graph family the test corpus and
the extremal examples use: basic families, the block-chain lower-bound
construction, threshold/chain/windmill instances and seeded random graphs
with a minimum-degree floor."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .graphs import Graph, GraphError, build_graph


@dataclass(frozen=True)
class FamilyGraph:
    """A generated graph together with its family name, parameters and the
    labeled-vertex map tests address structure through."""

    family: str
    params: dict
    graph: Graph
    labels: dict = field(default_factory=dict)


def complete_graph(n: int) -> Graph:
    return build_graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(s: int, t: int) -> Graph:
    return build_graph(s + t, ((i, s + j) for i in range(s) for j in range(t)))


def path_graph(n: int) -> Graph:
    return build_graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices with center 0."""
    return build_graph(n, ((0, i) for i in range(1, n)))


def standard_family(name: str, *params: int) -> Graph:
    makers = {
        "complete": complete_graph,
        "complete-bipartite": complete_bipartite,
        "path": path_graph,
        "cycle": cycle_graph,
        "star": star_graph,
    }
    if name not in makers:
        raise GraphError(f"unknown family {name!r}")
    return makers[name](*params)


def gstar(delta: int, m: int) -> FamilyGraph:
    """Chain of m cliques on delta+1 vertices between two end cliques on
    delta+2 vertices, bridged through vertices 2 and 1 of consecutive
    blocks, with the internal edge between vertices 1 and 2 of every block
    deleted.  Minimum degree delta; the diameter grows linearly in m."""
    if delta < 3:
        raise GraphError(f"gstar needs delta >= 3, got {delta}")
    if m < 0:
        raise GraphError(f"gstar needs m >= 0, got {m}")
    sizes = [delta + 2] + [delta + 1] * m + [delta + 2]
    starts = []
    total = 0
    for size in sizes:
        starts.append(total)
        total += size
    labels: dict = {}
    edges: list[tuple[int, int]] = []
    for block, size in enumerate(sizes):
        base = starts[block]
        for j in range(size):
            labels[f"x{block}_{j + 1}"] = base + j
        for a, b in itertools.combinations(range(size), 2):
            if (a, b) == (0, 1):
                continue  # the deleted x_{i,1} x_{i,2} edge
            edges.append((base + a, base + b))
    for block in range(len(sizes) - 1):
        edges.append((labels[f"x{block}_2"], labels[f"x{block + 1}_1"]))
    graph = build_graph(total, edges)
    return FamilyGraph("gstar", {"delta": delta, "m": m}, graph, labels)


def threshold_example(t: int) -> FamilyGraph:
    """t degree-3 vertices all adjacent to a common triangle: x1..xt each
    joined to y1,y2,y3, and the y's mutually adjacent.  Reproduced by
    weights 1 on the y's, 0 elsewhere, threshold 1."""
    if t < 1:
        raise GraphError(f"threshold example needs t >= 1, got {t}")
    labels = {f"x{i + 1}": i for i in range(t)}
    for j in range(3):
        labels[f"y{j + 1}"] = t + j
    edges = [(t, t + 1), (t, t + 2), (t + 1, t + 2)]
    edges.extend((i, t + j) for i in range(t) for j in range(3))
    graph = build_graph(t + 3, edges)
    return FamilyGraph("threshold", {"t": t}, graph, labels)


def chain_example(k: int, t: int) -> FamilyGraph:
    """Bipartite graph with nested neighborhoods: a1..a_{k-3} see only
    b1,b2,b3 while the last three a's see all of b1..bt."""
    if k < 4 or t < 4:
        raise GraphError(f"chain example needs k,t >= 4, got k={k} t={t}")
    labels = {f"a{i + 1}": i for i in range(k)}
    labels.update({f"b{j + 1}": k + j for j in range(t)})
    edges = []
    for i in range(k - 3):
        edges.extend((i, k + j) for j in range(3))
    for i in range(k - 3, k):
        edges.extend((i, k + j) for j in range(t))
    graph = build_graph(k + t, edges)
    return FamilyGraph("chain", {"k": k, "t": t}, graph, labels)


def french_windmill(t: int) -> FamilyGraph:
    """t copies of K4 sharing the single hub v0; block i lives on
    {v0, ui, vi, wi}."""
    if t < 1:
        raise GraphError(f"windmill needs t >= 1, got {t}")
    labels = {"v0": 0}
    edges = []
    for i in range(t):
        u, v, w = 1 + 3 * i, 2 + 3 * i, 3 + 3 * i
        labels[f"u{i + 1}"], labels[f"v{i + 1}"], labels[f"w{i + 1}"] = u, v, w
        edges.extend([(0, u), (0, v), (0, w), (u, v), (u, w), (v, w)])
    graph = build_graph(3 * t + 1, edges)
    return FamilyGraph("french-windmill", {"t": t}, graph, labels)


def threshold_from_weights(weights, threshold: float) -> Graph:
    """Edge uv iff w(u)+w(v) >= threshold."""
    n = len(weights)
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(n), 2)
        if weights[i] + weights[j] >= threshold
    ]
    return build_graph(n, edges)


def random_min_degree(n: int, delta: int, seed: int) -> Graph:
    """Seeded connected graph with minimum degree >= delta.

    A random spanning tree is augmented by random edges at every deficient
    vertex; byte-identical for a fixed seed."""
    if n < delta + 1:
        raise GraphError(f"need n >= delta+1, got n={n} delta={delta}")
    rng = random.Random(seed)
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        a = order[i]
        b = order[rng.randrange(i)]
        edges.add((a, b) if a < b else (b, a))
    deg = [0] * n
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    for v in range(n):
        while deg[v] < delta:
            choices = [
                w
                for w in range(n)
                if w != v and ((v, w) if v < w else (w, v)) not in edges
            ]
            if not choices:
                raise GraphError(f"cannot raise degree of {v} to {delta}")
            w = rng.choice(choices)
            edges.add((v, w) if v < w else (w, v))
            deg[v] += 1
            deg[w] += 1
    return build_graph(n, sorted(edges))
