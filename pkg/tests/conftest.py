"""Shared brute-force oracles, fixture graphs and hypothesis strategies.

The oracles here are deliberately dumb reimplementations (subset and
subtree enumeration with plain set logic) so the library never checks
itself against its own machinery.
"""
from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from rainbow3 import build_graph


# ---------------------------------------------------------------------------
# Oracles.

def oracle_connected(vertices, edges) -> bool:
    verts = set(vertices)
    if not verts:
        return True
    adj = {v: set() for v in verts}
    for u, v in edges:
        if u in verts and v in verts:
            adj[u].add(v)
            adj[v].add(u)
    seen = {min(verts)}
    stack = [min(verts)]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == verts


def oracle_steiner3(g, terms) -> int:
    """Minimum tree size containing the terminals, by enumerating vertex
    subsets whose induced subgraph is connected, smallest first."""
    terms = set(terms)
    others = [v for v in range(g.n) if v not in terms]
    for extra in range(len(others) + 1):
        for combo in itertools.combinations(others, extra):
            verts = terms | set(combo)
            if oracle_connected(verts, g.edges):
                return len(verts) - 1
    return None


def oracle_is_tree(edges) -> bool:
    verts = set()
    for u, v in edges:
        verts.add(u)
        verts.add(v)
    if len(edges) != len(verts) - 1:
        return False
    return oracle_connected(verts, edges)


def oracle_rainbow_s_tree(g, coloring, s) -> bool:
    """Subtree enumeration: some edge subset forms a tree containing s with
    pairwise distinct colors."""
    s = set(s)
    for size in range(max(2, len(s) - 1), g.n):
        for combo in itertools.combinations(g.edges, size):
            cols = [coloring.assignment[e] for e in combo]
            if len(set(cols)) != size:
                continue
            if not oracle_is_tree(combo):
                continue
            verts = set()
            for u, v in combo:
                verts.add(u)
                verts.add(v)
            if s <= verts:
                return True
    return False


def oracle_min_connected_dominating(g):
    """Smallest connected dominating set by full enumeration (plain sets)."""
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            dset = set(combo)
            if not oracle_connected(dset, g.edges):
                continue
            if all(
                v in dset or any(w in dset for w in g.adj[v]) for v in range(g.n)
            ):
                return dset
    return set(range(g.n))


def oracle_min_connected_k_dominating(g, k):
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            dset = set(combo)
            if not oracle_connected(dset, g.edges):
                continue
            if all(
                v in dset or sum(1 for w in g.adj[v] if w in dset) >= k
                for v in range(g.n)
            ):
                return dset
    return set(range(g.n))


# ---------------------------------------------------------------------------
# Fixture builders.

def hub_graph(comp_edges, n_comp, spare=()):
    """Component vertices 0..n_comp-1 all legged to hub n_comp, second hub
    n_comp+1 supplying extra legs to ``spare``; D is the two hubs."""
    h, h2 = n_comp, n_comp + 1
    edges = list(comp_edges) + [(v, h) for v in range(n_comp)] + [(h, h2)]
    edges += [(v, h2) for v in spare]
    return build_graph(n_comp + 2, edges), frozenset({h, h2})


def wheel_graph(n):
    """Cycle C_n plus a hub adjacent to every rim vertex; D = {hub}."""
    cyc = [(i, (i + 1) % n) for i in range(n)]
    spokes = [(i, n) for i in range(n)]
    return build_graph(n + 1, cyc + spokes), frozenset({n})


def prism_graph(k):
    """Circular ladder on 2k rim vertices plus a hub; D = {hub}."""
    outer = [(i, (i + 1) % k) for i in range(k)]
    inner = [(k + i, k + (i + 1) % k) for i in range(k)]
    rungs = [(i, k + i) for i in range(k)]
    spokes = [(v, 2 * k) for v in range(2 * k)]
    return build_graph(2 * k + 1, outer + inner + rungs + spokes), frozenset({2 * k})


# The worked small example: component 0-1, 0-2, 2-3 over D={4,5}, where 3 is
# a level-2 leaf under the type-II subtree and both leaves own a spare leg.
EXAMPLE_GRAPH_EDGES = [
    (0, 1), (0, 2), (2, 3),
    (0, 4), (1, 4), (2, 4), (3, 4),
    (1, 5), (3, 5), (4, 5),
]


@pytest.fixture
def example_graph():
    return build_graph(6, EXAMPLE_GRAPH_EDGES), frozenset({4, 5})


# ---------------------------------------------------------------------------
# Hypothesis strategies.

@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    """Random connected graph: a random attachment tree plus extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        parent = draw(st.integers(0, v - 1))
        edges.add((parent, v))
    pairs = list(itertools.combinations(range(n), 2))
    extra = draw(st.lists(st.sampled_from(pairs), max_size=2 * n))
    edges.update(extra)
    return build_graph(n, edges)


@st.composite
def graphs_with_subsets(draw, min_n=2, max_n=8):
    g = draw(connected_graphs(min_n, max_n))
    dset = draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=g.n))
    k = draw(st.integers(1, 4))
    return g, frozenset(dset), k


@st.composite
def colored_graphs(draw, max_n=7, max_colors=4):
    g = draw(connected_graphs(min_n=3, max_n=max_n))
    cols = {e: draw(st.integers(1, max_colors)) for e in g.edges}
    return g, cols
