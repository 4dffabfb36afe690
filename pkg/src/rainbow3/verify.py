"""Independent verification machinery.

Everything here checks colorings without trusting how they were built:
rainbow-tree existence by mask dynamic programming, exhaustive 3-rainbow
verification, safety-certificate checking, the pickability predicate with
its brute-force twin, the transcribed color-set class tables, and an exact
minimum-color solver used as ground truth on small instances.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .coloring import EdgeColoring, SafetyCertificate
from .graphs import Graph, GraphError, edge_key, sdiam3


class VerifyLimitError(RuntimeError):
    """A verifier or solver was asked to exceed its configured limit."""


@dataclass(frozen=True)
class VerifyReport:
    verdict: bool
    witness: tuple | None
    triples_checked: int
    colors: int

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness": list(self.witness) if self.witness is not None else None,
            "triples_checked": self.triples_checked,
            "colors": self.colors,
        }


# ---------------------------------------------------------------------------
# Color-set class tables.
#
# Seven labeled collections of color-set triples; each triple is (first-path
# colors, second, third) with the second and third unordered.  Class 0 holds
# the shapes where at least two paths are single edges.

def _t(*parts: str) -> tuple[frozenset, ...]:
    return tuple(frozenset(int(ch) for ch in p) for p in parts)


CLASS_TABLE: dict[int, tuple[tuple[frozenset, ...], ...]] = {
    0: (
        _t("1", "2", "3"),
        _t("1", "2", "34"),
        _t("1", "2", "36"),
        _t("2", "3", "14"),
        _t("2", "3", "15"),
        _t("1", "3", "24"),
        _t("1", "3", "25"),
    ),
    1: (
        _t("1", "24", "35"),
        _t("1", "36", "24"),
        _t("1", "36", "25"),
        _t("1", "24", "56"),
        _t("1", "36", "45"),
        _t("1", "36", "245"),
        _t("1", "24", "356"),
        _t("1", "346", "25"),
    ),
    2: (
        _t("2", "36", "14"),
        _t("2", "14", "35"),
        _t("2", "14", "56"),
        _t("2", "36", "15"),
        _t("2", "36", "45"),
        _t("2", "46", "35"),
        _t("2", "36", "145"),
        _t("2", "14", "356"),
        _t("2", "346", "15"),
    ),
    3: (
        _t("3", "15", "26"),
        _t("3", "25", "16"),
        _t("3", "15", "46"),
        _t("3", "25", "46"),
        _t("3", "15", "24"),
        _t("3", "25", "14"),
        _t("3", "25", "146"),
        _t("3", "15", "246"),
    ),
    4: (
        _t("4", "36", "15"),
        _t("4", "36", "25"),
        _t("4", "36", "125"),
    ),
    5: (
        _t("5", "14", "26"),
        _t("5", "24", "16"),
    ),
    6: (
        _t("6", "25", "34"),
        _t("6", "15", "34"),
        _t("6", "15", "24"),
        _t("6", "245", "13"),
    ),
}

_CLASS_LOOKUP: dict[frozenset, int] = {}
for _label, _entries in CLASS_TABLE.items():
    for _entry in _entries:
        _CLASS_LOOKUP[frozenset(_entry)] = _label


def all_class_triples() -> list[tuple[frozenset, ...]]:
    """The 41 table triples, class 0 through 6, in listed order."""
    return [t for label in range(7) for t in CLASS_TABLE[label]]


def class_membership(triple: Sequence[frozenset]) -> int | None:
    """Class containing the triple, matching the second/third sets unordered,
    or None.  The first set must be one of the entry's singletons."""
    if len(triple) != 3:
        return None
    sets = tuple(frozenset(s) for s in triple)
    label = _CLASS_LOOKUP.get(frozenset(sets))
    if label is None:
        return None
    if len(sets[0]) != 1:
        return None
    return label


# ---------------------------------------------------------------------------
# Pickability: can one path per vertex be chosen so the three unions are
# jointly rainbow?

def pickable(cu: Sequence[frozenset], cv: Sequence[frozenset], cw: Sequence[frozenset]) -> bool:
    """Characterization test: the first-path colors differ somewhere, or a
    vertex has two single-edge paths, or some pair of later paths of two
    distinct vertices is color-disjoint."""
    triples = (tuple(map(frozenset, cu)), tuple(map(frozenset, cv)), tuple(map(frozenset, cw)))
    firsts = [t[0] for t in triples]
    if not (firsts[0] == firsts[1] == firsts[2]):
        return True
    # degenerate pre-pass: two single-edge paths at one vertex
    if any(sum(1 for s in t if len(s) == 1) >= 2 for t in triples):
        return True
    for x, y in itertools.combinations(range(3), 2):
        for s, t in itertools.product((1, 2), repeat=2):
            if not (triples[x][s] & triples[y][t]):
                return True
    return False


def pickable_bruteforce(cu, cv, cw) -> bool:
    """Oracle twin: try all 27 path selections; true iff some selection has
    pairwise-disjoint color sets (duplicate-free multiset union)."""
    triples = (tuple(map(frozenset, cu)), tuple(map(frozenset, cv)), tuple(map(frozenset, cw)))
    for i, j, k in itertools.product(range(3), repeat=3):
        a, b, c = triples[0][i], triples[1][j], triples[2][k]
        if len(a) + len(b) + len(c) == len(a | b | c):
            return True
    return False


# ---------------------------------------------------------------------------
# Rainbow S-tree existence.
#
# Walk masks: a rainbow walk uses pairwise-distinct edge colors, so the
# union of three color-disjoint rainbow walks meeting at a median vertex is
# a connected rainbow subgraph, and its spanning tree is a rainbow S-tree.
# Conversely a rainbow S-tree restricts to three such walks at its median.

def _color_bits(g: Graph, c: EdgeColoring) -> tuple[dict, list[list[tuple[int, int]]]]:
    palette = sorted({c.assignment[e] for e in g.edges})
    bit = {col: 1 << i for i, col in enumerate(palette)}
    adj_bits: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        b = bit[c.assignment[(u, v)]]
        adj_bits[u].append((v, b))
        adj_bits[v].append((u, b))
    return bit, adj_bits


def _single_source_masks(
    n: int,
    adj_bits: list[list[tuple[int, int]]],
    source: int,
    state_budget: int,
) -> list[list[int]]:
    """Minimal color masks of rainbow walks from source to every vertex.

    Processes states in ascending popcount, so each antichain is add-only.
    """
    ant: list[list[int]] = [[] for _ in range(n)]
    ant[source].append(0)
    buckets: dict[int, list[tuple[int, int]]] = {0: [(source, 0)]}
    states = 1
    size = 0
    while buckets:
        if size not in buckets:
            size = min(buckets)
        layer = buckets.pop(size)
        for v, mask in layer:
            for w, b in adj_bits[v]:
                if mask & b:
                    continue
                m2 = mask | b
                existing = ant[w]
                if any(a & m2 == a for a in existing):
                    continue
                existing.append(m2)
                states += 1
                if states > state_budget:
                    raise VerifyLimitError(
                        f"rainbow-walk state budget {state_budget} exceeded"
                    )
                buckets.setdefault(size + 1, []).append((w, m2))
        size += 1
    return ant


def exists_rainbow_s_tree(
    g: Graph,
    c: EdgeColoring,
    s: Iterable[int],
    max_colors: int = 14,
    state_budget: int = 200_000,
) -> bool:
    """True iff some tree of g contains the 3-set ``s`` with pairwise
    distinct edge colors.

    Dynamic programming over (vertex, terminal, used-color set) states:
    each terminal's rainbow walks extend edge-by-edge on fresh colors, and
    the three walk families merge at a median vertex on pairwise disjoint
    color sets.
    """
    terms = sorted(set(s))
    if len(terms) != 3 or terms[0] < 0 or terms[-1] >= g.n:
        raise GraphError(f"need exactly 3 distinct vertices of g, got {terms}")
    if c.num_colors > max_colors:
        raise VerifyLimitError(
            f"coloring uses {c.num_colors} colors, above the limit {max_colors}"
        )
    missing = [e for e in g.edges if e not in c.assignment]
    if missing:
        raise GraphError(f"coloring is not total: {missing[0]} uncolored")
    _, adj_bits = _color_bits(g, c)
    ants = [
        _single_source_masks(g.n, adj_bits, t, state_budget) for t in terms
    ]
    return _median_join(g.n, ants) is not None


def _median_join(n: int, ants: list[list[list[int]]], order: Iterable[int] | None = None):
    """First median vertex admitting pairwise-disjoint walk masks, or None."""
    medians = order if order is not None else range(n)
    for m in medians:
        aa, bb, cc = ants[0][m], ants[1][m], ants[2][m]
        if not (aa and bb and cc):
            continue
        for ma in aa:
            for mb in bb:
                if ma & mb:
                    continue
                mab = ma | mb
                for mc in cc:
                    if not (mab & mc):
                        return m
    return None


def is_3_rainbow(
    g: Graph,
    c: EdgeColoring,
    max_colors: int = 14,
    state_budget: int = 200_000,
) -> VerifyReport:
    """Check every vertex triple for a rainbow tree; first failure wins.

    Walk antichains are computed once per source vertex and shared across
    the C(n,3) triples; a move-to-front median list keeps the per-triple
    join cheap on valid colorings.
    """
    if g.n < 3:
        return VerifyReport(True, None, 0, c.num_colors)
    if c.num_colors > max_colors:
        raise VerifyLimitError(
            f"coloring uses {c.num_colors} colors, above the limit {max_colors}"
        )
    missing = [e for e in g.edges if e not in c.assignment]
    if missing:
        raise GraphError(f"coloring is not total: {missing[0]} uncolored")
    _, adj_bits = _color_bits(g, c)
    ants = [
        _single_source_masks(g.n, adj_bits, v, state_budget) for v in range(g.n)
    ]
    medians = list(range(g.n))
    checked = 0
    for a, b, cc in itertools.combinations(range(g.n), 3):
        checked += 1
        m = _median_join(g.n, [ants[a], ants[b], ants[cc]], medians)
        if m is None:
            return VerifyReport(False, (a, b, cc), checked, c.num_colors)
        if medians[0] != m:
            medians.remove(m)
            medians.insert(0, m)
    return VerifyReport(True, None, checked, c.num_colors)


# ---------------------------------------------------------------------------
# Safety certificates.

def verify_certificate(
    g: Graph, c: EdgeColoring, dom: Iterable[int], cert: SafetyCertificate
) -> bool:
    """Check the three stored paths: v-D endpoints, inner vertices outside D,
    pairwise internal disjointness, and the rainbowness of the union."""
    dset = set(dom)
    if cert.vertex in dset:
        return False
    paths = cert.paths
    if len(paths) != 3 or len(paths[0]) != 2:
        return False
    seen_colors: set[int] = set()
    for path in paths:
        if len(path) < 2 or path[0] != cert.vertex:
            return False
        if path[-1] not in dset:
            return False
        if any(p in dset for p in path[1:-1]):
            return False
        if len(set(path)) != len(path):
            return False
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                return False
            col = c.assignment.get(edge_key(a, b))
            if col is None or col in seen_colors:
                return False
            seen_colors.add(col)
    for i, j in itertools.combinations(range(3), 2):
        inner_i = set(paths[i][1:-1])
        inner_j = set(paths[j][1:-1])
        if inner_i & set(paths[j]) or inner_j & set(paths[i]):
            return False
    return True


# ---------------------------------------------------------------------------
# Exact minimum 3-rainbow color count.
#
# Backtracking over edge colorings with first-use color canonicalization.
# Because a rainbow tree with k colors has at most k edges, enumerating all
# trees up to k edges per triple gives an exact incremental feasibility
# structure: a branch dies the moment some triple has no conflict-free tree
# left.

def _trees_by_triple(g: Graph, k: int) -> list[list[tuple[int, ...]]] | None:
    """For each vertex triple, every <=k-edge subtree containing it, as
    tuples of edge indices.  None signals an empty list for some triple."""
    n = g.n
    edge_index = {e: i for i, e in enumerate(g.edges)}
    triples = list(itertools.combinations(range(n), 3))
    triple_pos = {t: i for i, t in enumerate(triples)}
    per_triple: list[list[tuple[int, ...]]] = [[] for _ in triples]
    max_size = min(k, g.m)
    for size in range(2, max_size + 1):
        for combo in itertools.combinations(g.edges, size):
            verts: set[int] = set()
            for u, v in combo:
                verts.add(u)
                verts.add(v)
            if len(verts) != size + 1:
                continue
            # acyclic and |V| = |E|+1 => tree; check connectivity via union-find
            parent = {v: v for v in verts}

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            ok = True
            for u, v in combo:
                ru, rv = find(u), find(v)
                if ru == rv:
                    ok = False
                    break
                parent[ru] = rv
            if not ok:
                continue
            idxs = tuple(edge_index[e] for e in combo)
            for t in itertools.combinations(sorted(verts), 3):
                per_triple[triple_pos[t]].append(idxs)
    if any(not lst for lst in per_triple):
        return None
    return per_triple


def _search_coloring(g: Graph, k: int, node_budget: int) -> dict | None:
    """First k-coloring (canonical order) under which every triple keeps a
    rainbow tree, or None."""
    per_triple = _trees_by_triple(g, k)
    if per_triple is None:
        return None
    m = g.m
    tree_edges: list[tuple[int, ...]] = []
    tree_triple: list[int] = []
    for ti, lst in enumerate(per_triple):
        for idxs in lst:
            tree_edges.append(idxs)
            tree_triple.append(ti)
    trees_with_edge: list[list[int]] = [[] for _ in range(m)]
    for tid, idxs in enumerate(tree_edges):
        for ei in idxs:
            trees_with_edge[ei].append(tid)
    alive = [True] * len(tree_edges)
    alive_count = [len(lst) for lst in per_triple]
    color = [0] * m
    nodes = 0

    def assign(ei: int, col: int) -> list[int] | None:
        """Kill trees that now carry a color conflict; None on a dead triple."""
        color[ei] = col
        killed: list[int] = []
        for tid in trees_with_edge[ei]:
            if not alive[tid]:
                continue
            conflict = False
            for ej in tree_edges[tid]:
                if ej != ei and color[ej] == col:
                    conflict = True
                    break
            if conflict:
                alive[tid] = False
                killed.append(tid)
                ti = tree_triple[tid]
                alive_count[ti] -= 1
                if alive_count[ti] == 0:
                    _undo(ei, killed)
                    return None
        return killed

    def _undo(ei: int, killed: list[int]) -> None:
        color[ei] = 0
        for tid in killed:
            alive[tid] = True
            alive_count[tree_triple[tid]] += 1

    def dfs(ei: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise VerifyLimitError(f"exact search node budget {node_budget} exceeded")
        if ei == m:
            return True
        for col in range(1, min(k, used + 1) + 1):
            killed = assign(ei, col)
            if killed is None:
                continue
            if dfs(ei + 1, max(used, col)):
                return True
            _undo(ei, killed)
        return False

    if dfs(0, 0):
        return {e: color[i] for i, e in enumerate(g.edges)}
    return None


def exact_rx3_coloring(
    g: Graph,
    kmax: int = 8,
    max_edges: int = 14,
    node_budget: int = 20_000_000,
) -> tuple[int, dict] | None:
    """(minimum color count, witness coloring), or None above kmax."""
    if kmax > 8:
        raise VerifyLimitError(f"kmax is limited to 8, got {kmax}")
    if g.m > max_edges:
        raise VerifyLimitError(
            f"exact solver limited to {max_edges} edges, got {g.m}"
        )
    if g.n < 3:
        raise GraphError(f"3-rainbow index needs n >= 3, got n={g.n}")
    lower = max(2, sdiam3(g))
    for k in range(lower, kmax + 1):
        found = _search_coloring(g, k, node_budget)
        if found is not None:
            return k, found
    return None


def exact_rx3(g: Graph, kmax: int = 8, max_edges: int = 14) -> int | None:
    """Minimum number of colors in a 3-rainbow coloring, or None if it
    exceeds kmax."""
    result = exact_rx3_coloring(g, kmax=kmax, max_edges=max_edges)
    return None if result is None else result[0]
