"""Constructive 3-rainbow colorings driven by strengthened dominating sets.

Two schemes are built here.  The 3-extra-color scheme colors the legs of
every outside vertex 1/2/3 and needs a connected 3-dominating set.  The
6-extra-color scheme needs only a connected three-way dominating set and
runs in two stages per component of G-D: a periodic coloring over the BFS
tree, then a sequential repair pass that colors one chosen edge per still
dangerous leaf (recoloring at most that leaf's own leg) until every outside
vertex carries three internally disjoint super-rainbow paths into D.

Colorings of distinct components never interact, so components could be
processed concurrently; within one component the repair pass is strictly
sequential.  All returned values are immutable.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .domination import (
    DominatingSet,
    DominationError,
    check_domination,
    k_dominating,
    k_way,
)
from .graphs import (
    BfsTree,
    Graph,
    GraphError,
    bfs_tree,
    components_minus,
    edge_key,
    induced_subgraph,
    is_connected,
)


class ColoringInternalError(RuntimeError):
    """The repair-pass dispatcher hit a situation its tables rule out."""


class CertificateError(RuntimeError):
    """A stored safety certificate stopped verifying mid-construction."""


@dataclass(frozen=True)
class EdgeColoring:
    """Total mapping from canonical edges to positive integer colors."""

    assignment: dict
    num_colors: int

    @classmethod
    def from_dict(cls, assignment: dict) -> "EdgeColoring":
        return cls(dict(assignment), len(set(assignment.values())) if assignment else 0)

    def color(self, u: int, v: int) -> int:
        return self.assignment[edge_key(u, v)]

    def colors_used(self) -> list[int]:
        return sorted(set(self.assignment.values()))


@dataclass(frozen=True)
class SafetyCertificate:
    """Three internally disjoint super-rainbow v-D paths for one outside
    vertex; the first path is always the single leg edge."""

    vertex: int
    paths: tuple
    color_sets: tuple


@dataclass(frozen=True)
class ColoringReport:
    method: str
    n: int
    dom: tuple
    d: int
    num_colors: int
    inner_method: str
    components: int = 0
    stage2_steps: int = 0
    recolored: int = 0
    rule_keys: tuple = ()


def _path_colors(colors: dict, path: tuple) -> frozenset:
    return frozenset(colors[edge_key(a, b)] for a, b in zip(path, path[1:]))


def _cert_sets(colors: dict, paths: tuple) -> tuple:
    return tuple(_path_colors(colors, p) for p in paths)


# ---------------------------------------------------------------------------
# Baseline: distinct colors down a spanning tree.

def spanning_tree_coloring(h: Graph) -> EdgeColoring:
    """Spanning-tree edges get distinct colors 1..n-1, every other edge
    reuses color 1.  Any triple is connected by a rainbow subtree of the
    spanning tree, so this is always a valid 3-rainbow coloring."""
    if h.n == 0:
        return EdgeColoring.from_dict({})
    if not is_connected(h):
        raise GraphError("graph must be connected")
    assignment: dict = {}
    seen = {0}
    queue = deque([0])
    nxt = 1
    while queue:
        u = queue.popleft()
        for w in h.adj[u]:
            if w not in seen:
                seen.add(w)
                assignment[edge_key(u, w)] = nxt
                nxt += 1
                queue.append(w)
    for e in h.edges:
        if e not in assignment:
            assignment[e] = 1
    return EdgeColoring.from_dict(assignment)


# ---------------------------------------------------------------------------
# Coloring the inside of D.

@dataclass(frozen=True)
class InnerLimits:
    """Instance sizes up to which the exact minimum-color solver is tried."""

    max_vertices: int = 8
    max_edges: int = 14
    kmax: int = 8


def inner_coloring(
    g: Graph, dom: Iterable[int], offset: int, limits: InnerLimits = InnerLimits()
) -> tuple[EdgeColoring, str]:
    """3-rainbow coloring of G[D] shifted to colors offset+1..offset+d.

    Solved to the exact minimum when G[D] is small enough, otherwise by the
    spanning-tree coloring with |D|-1 colors (which the additive set-size
    bounds rely on).  Returns (coloring, method)."""
    dverts = sorted(set(dom))
    if not dverts:
        return EdgeColoring.from_dict({}), "empty"
    sub, back = induced_subgraph(g, dverts)
    if sub.n == 1:
        return EdgeColoring.from_dict({}), "empty"
    if not is_connected(sub):
        raise GraphError("G[D] is disconnected")
    solved = None
    if sub.n >= 3 and sub.n <= limits.max_vertices and sub.m <= limits.max_edges:
        from .verify import VerifyLimitError, exact_rx3_coloring

        try:
            solved = exact_rx3_coloring(sub, kmax=min(limits.kmax, sub.n - 1))
        except VerifyLimitError:
            solved = None
    if solved is not None:
        _, colmap = solved
        method = "exact"
    else:
        colmap = spanning_tree_coloring(sub).assignment
        method = "spanning"
    shifted = {
        edge_key(back[u], back[v]): col + offset for (u, v), col in colmap.items()
    }
    return EdgeColoring.from_dict(shifted), method


# ---------------------------------------------------------------------------
# The 3-extra-color scheme over a connected 3-dominating set.

def three_dom_coloring(
    g: Graph, dom, limits: InnerLimits = InnerLimits()
) -> tuple[EdgeColoring, ColoringReport]:
    """Color one leg of every outside vertex 1, one 2 and the rest 3, give
    G[D] fresh colors 4..d+3, and color everything left 1.  Uses at most
    d+3 colors in total."""
    dset = _as_vertex_set(dom)
    if not check_domination(g, dset, k_dominating(3)):
        raise DominationError("D must be a connected 3-dominating set")
    colors: dict = {}
    for v in range(g.n):
        if v in dset:
            continue
        ft = [w for w in g.adj[v] if w in dset]
        colors[edge_key(v, ft[0])] = 1
        colors[edge_key(v, ft[1])] = 2
        for w in ft[2:]:
            colors[edge_key(v, w)] = 3
    inner, inner_method = inner_coloring(g, dset, offset=3, limits=limits)
    colors.update(inner.assignment)
    for e in g.edges:
        if e not in colors:
            colors[e] = 1
    coloring = EdgeColoring.from_dict(colors)
    report = ColoringReport(
        method="theorem4",
        n=g.n,
        dom=tuple(sorted(dset)),
        d=inner.num_colors,
        num_colors=coloring.num_colors,
        inner_method=inner_method,
    )
    return coloring, report


def _as_vertex_set(dom) -> frozenset:
    if isinstance(dom, DominatingSet):
        return dom.vertices
    return frozenset(dom)


# ---------------------------------------------------------------------------
# Stage 1 of the 6-extra-color scheme: the periodic coloring.
#
# (tree-edge color, leg color) by height mod 3.  Type II is the subtree of
# the last first-level vertex; all other subtrees are type I.  The root's
# leg gets 2, matching the h=0 column.

_TYPE_I_FE = {0: (6, 2), 1: (4, 1), 2: (5, 3)}
_TYPE_II_FE = {0: (4, 2), 1: (5, 3), 2: (6, 1)}


@dataclass
class Stage1State:
    """Mutable per-component record threaded through the two stages."""

    tree: BfsTree
    leg: dict = field(default_factory=dict)         # vertex -> chosen foot
    colors: dict = field(default_factory=dict)      # shared edge -> color map
    certs: dict = field(default_factory=dict)       # vertex -> (p1, p2, p3)
    flagged: set = field(default_factory=set)
    dangerous: list = field(default_factory=list)   # leaves, later the ordered A
    recolored: set = field(default_factory=set)
    steps: list = field(default_factory=list)

    def leg_edge(self, v: int) -> tuple:
        return edge_key(v, self.leg[v])

    def tree_edge(self, v: int) -> tuple:
        return edge_key(v, self.tree.parent[v])

    def leg_color(self, v: int) -> int:
        return self.colors[self.leg_edge(v)]

    def tree_edge_color(self, v: int) -> int:
        return self.colors[self.tree_edge(v)]


def stage1_periodic(
    g: Graph, dom: Iterable[int], component: Iterable[int], tree: BfsTree, colors: dict | None = None
) -> Stage1State:
    """Periodic coloring of one >=3-vertex component.

    Colors every vertex's tree edge and one leg by the (subtree type,
    height mod 3) table.  Afterwards every non-leaf holds three internally
    disjoint super-rainbow paths into D and every leaf is dangerous."""
    comp = set(component)
    if len(comp) < 3:
        raise GraphError("periodic stage needs a component with >= 3 vertices")
    if len(tree.first_level) < 2:
        raise ColoringInternalError(
            "BFS root of a >=3-vertex component must have two component neighbors"
        )
    dset = set(dom)
    state = Stage1State(tree=tree, colors=colors if colors is not None else {})
    for v in sorted(comp):
        ft = [w for w in g.adj[v] if w in dset]
        if not ft:
            raise DominationError(f"vertex {v} has no leg into D")
        state.leg[v] = ft[0]
    state.colors[state.leg_edge(tree.root)] = 2
    for v in tree.order[1:]:
        table = _TYPE_II_FE if tree.is_type_two(v) else _TYPE_I_FE
        f_col, e_col = table[tree.height[v] % 3]
        state.colors[state.tree_edge(v)] = f_col
        state.colors[state.leg_edge(v)] = e_col
    root = tree.root
    first, last = tree.first_level[0], tree.first_level[-1]
    state.certs[root] = (
        (root, state.leg[root]),
        (root, first, state.leg[first]),
        (root, last, state.leg[last]),
    )
    state.flagged.add(root)
    for v in tree.order[1:]:
        kids = tree.children[v]
        if kids:
            ch = kids[0]
            state.certs[v] = (
                (v, state.leg[v]),
                (v, tree.parent[v], state.leg[tree.parent[v]]),
                (v, ch, state.leg[ch]),
            )
            state.flagged.add(v)
        else:
            state.dangerous.append(v)
    return state


def order_dangerous(a: Iterable[int], tree: BfsTree) -> list[int]:
    """Processing order for the still dangerous leaves: descending
    first-level index of the subtree, then ascending height, then BFS
    visitation order."""
    rank = {v: i for i, v in enumerate(tree.first_level)}
    return sorted(a, key=lambda v: (-rank[tree.pi[v]], tree.height[v], tree.pos[v]))


# ---------------------------------------------------------------------------
# Stage 2 dispatch tables.
#
# Key: (case, height mod 3, h(v) - h(w), was the target's leg recolored).
# Cases: the processed leaf sits under the last first-level vertex (cases 1
# and 2) or not (3 and 4), and the chosen edge leads into a type-I subtree
# (1 and 3) or only type-II targets exist (2 and 4).
#
# Row: color of the chosen edge wv; optional recolor of w's leg; shapes of
# w's second path (via parent or grandparent) and third path (via v, short
# or through v's parent); same for v when it gets certified; the expected
# color-set triples, checked at runtime against the produced certificates.

_SHAPE_P, _SHAPE_PP = "p", "pp"
_SHAPE_V1, _SHAPE_V2 = "v1", "v2"
_SHAPE_W1, _SHAPE_W2 = "w1", "w2"


@dataclass(frozen=True)
class _Rule:
    edge_color: int
    recolor: int | None
    wi_p2: str
    wi_p3: str
    v_cert: tuple | None
    expect_wi: tuple
    expect_v: tuple | None


_RULES_SPEC = """
1 0  0 F  c5 -   p  v2  p w2  2|14|356  2|36|145
1 0 +1 F  c5 -   pp v1  pp w1 2|346|15  1|346|25
1 1  0 F  c6 -   p  v1  p w1  3|25|16   1|24|36
1 1 +1 F  c4 r6  p  v1  p w1  6|25|34   3|15|46
1 2  0 F  c2 r4  p  v2  p w1  4|36|125  3|15|24
1 2 +1 F  c5 -   p  v1  p w1  1|36|25   2|36|15
2 0 -1 B  c5 -   p  v2  - -   2|14|356  -
2 0  0 F  c6 r5  p  v1  p w1  5|14|26   2|14|56
2 0  0 T  c6 -   p  v1  - -   2|14|56   -
2 0 +1 F  c6 -   p  v1  p w2  2|14|36   3|25|146
2 1 -1 B  c6 -   p  v2  - -   3|25|146  -
2 1  0 F  c4 r6  p  v1  p w1  6|25|34   3|25|46
2 1  0 T  c4 -   p  v1  - -   3|25|46   -
2 1 +1 F  c4 -   p  v1  p w2  3|25|14   1|36|245
2 2 -1 B  c4 -   p  v2  - -   1|36|245  -
2 2  0 F  c5 r4  p  v1  p w1  4|36|15   1|36|45
2 2  0 T  c5 -   p  v1  - -   1|36|45   -
2 2 +1 F  c5 -   p  v1  p w2  1|36|25   2|14|356
3 0 -1 B  c4 -   p  v2  - -   2|36|145  -
3 0  0 F  c5 r4  p  v1  p w1  4|36|25   2|36|45
3 0  0 T  c5 -   p  v1  - -   2|36|45   -
3 0 +1 F  c5 -   p  v1  p w2  2|36|15   1|24|356
3 1 -1 B  c5 -   p  v2  - -   1|24|356  -
3 1  0 F  c6 r5  p  v1  p w1  5|24|16   1|24|56
3 1  0 T  c6 -   p  v1  - -   1|24|56   -
3 1 +1 F  c6 -   p  v1  p w2  1|24|36   3|15|246
3 2 -1 B  c6 -   p  v2  - -   3|15|246  -
3 2  0 F  c4 r6  p  v1  p w1  6|15|34   3|15|46
3 2  0 T  c4 -   p  v1  - -   3|15|46   -
3 2 +1 F  c4 -   p  v1  p w2  3|15|24   2|36|145
4 0 -1 F  c5 -   p  v1  - -   2|36|15   -
4 0 -1 T  c5 -   p  v1  - -   2|36|45   -
4 0  0 F  c5 -   p  v2  - -   2|36|145  -
4 0  0 T  c4 -   p  v1  - -   2|36|45   -
4 1 -1 F  c5 -   pp v1  - -   1|346|25  -
4 1 -1 T  c6 -   p  v1  - -   1|24|56   -
4 1  0 F  c6 -   p  v1  - -   1|24|36   -
4 1  0 T  c3 -   p  v1  - -   1|24|36   -
4 2 -1 F  c4 r6  p  v1  - -   6|15|34   -
4 2 -1 T  c4 -   p  v1  - -   3|15|46   -
4 2  0 F  c3 r6  pp v1  - -   6|245|13  -
4 2  0 T  c6 -   p  v1  - -   3|15|46   -
"""


def _parse_sets(spec: str) -> tuple | None:
    if spec == "-":
        return None
    return tuple(frozenset(int(ch) for ch in part) for part in spec.split("|"))


def _load_rules() -> dict:
    rules: dict = {}
    for line in _RULES_SPEC.strip().splitlines():
        case, hmod, dh, flag, col, rec, p2, p3, vp2, vp3, exp_wi, exp_v = line.split()
        rule = _Rule(
            edge_color=int(col[1:]),
            recolor=None if rec == "-" else int(rec[1:]),
            wi_p2=p2,
            wi_p3=p3,
            v_cert=None if vp2 == "-" else (vp2, vp3),
            expect_wi=_parse_sets(exp_wi),
            expect_v=_parse_sets(exp_v),
        )
        flags = (False, True) if flag == "B" else ((flag == "T"),)
        for f in flags:
            rules[(int(case), int(hmod), int(dh), f)] = rule
    return rules


STAGE2_RULES = _load_rules()


def stage2_rule_keys() -> list[tuple]:
    """Every (case, h mod 3, height offset, leg-recolored) key the
    dispatcher can be asked for."""
    keys = []
    for hmod in range(3):
        for dh in (0, 1):
            keys.append((1, hmod, dh, False))
        for dh in (-1, 0, 1):
            keys.append((2, hmod, dh, False))
            keys.append((3, hmod, dh, False))
            if dh in (-1, 0):
                keys.append((2, hmod, dh, True))
                keys.append((3, hmod, dh, True))
        for dh in (-1, 0):
            keys.append((4, hmod, dh, False))
            keys.append((4, hmod, dh, True))
    return keys


@dataclass(frozen=True)
class StepInfo:
    w: int
    v: int
    case: int
    h_mod: int
    dh: int
    ev_recolored: bool
    edge_color: int
    recolored_to: int | None

    @property
    def rule_key(self) -> tuple:
        return (self.case, self.h_mod, self.dh, self.ev_recolored)


def _shape_parent(state: Stage1State, x: int, kind: str) -> tuple:
    tree = state.tree
    p = tree.parent[x]
    if kind == _SHAPE_P:
        return (x, p, state.leg[p])
    pp = tree.parent[p]
    if pp is None:
        raise ColoringInternalError(f"grandparent path requested at height {tree.height[x]}")
    return (x, p, pp, state.leg[pp])


def _shape_via_v(state: Stage1State, w: int, v: int, kind: str) -> tuple:
    if kind == _SHAPE_V1:
        return (w, v, state.leg[v])
    pv = state.tree.parent[v]
    return (w, v, pv, state.leg[pv])


def _shape_via_w(state: Stage1State, v: int, w: int, kind: str) -> tuple:
    if kind == _SHAPE_W1:
        return (v, w, state.leg[w])
    pw = state.tree.parent[w]
    return (v, w, pw, state.leg[pw])


def _expect_check(state: Stage1State, vertex: int, expected: tuple) -> None:
    got = _cert_sets(state.colors, state.certs[vertex])
    if tuple(got) != tuple(expected):
        raise ColoringInternalError(
            f"certificate color sets for vertex {vertex} came out as "
            f"{[sorted(s) for s in got]}, table says {[sorted(s) for s in expected]}"
        )


def stage2_repair_step(g: Graph, state: Stage1State, w: int) -> StepInfo:
    """Process one dangerous leaf: pick its repair edge, color it, recolor
    the leaf's own leg when the tables say so, and certify the endpoints.

    Raises ColoringInternalError when the situation contradicts the
    dispatch tables; that would falsify the transcription, not the method.
    """
    tree = state.tree
    comp = set(tree.order)
    targets = [
        u for u in g.adj[w] if u in comp and edge_key(w, u) not in state.colors
    ]
    if not targets:
        raise ColoringInternalError(
            f"dangerous leaf {w} reached the dispatcher with no uncolored edge"
        )
    type_one = [u for u in targets if not tree.is_type_two(u)]
    if tree.is_type_two(w):
        case = 1 if type_one else 2
    else:
        case = 3 if type_one else 4
    pool = type_one if type_one else targets
    v = min(pool, key=lambda u: (tree.height[u], u))
    h = tree.height[w]
    dh = tree.height[v] - h
    if abs(dh) > 1:
        raise ColoringInternalError(f"edge ({w},{v}) skips a BFS level")
    if case == 1 and dh not in (0, 1):
        raise ColoringInternalError(
            f"case 1 target at height offset {dh}; type-I targets of a type-II "
            "leaf must sit at the same height or one level deeper"
        )
    if case == 4 and dh not in (-1, 0):
        raise ColoringInternalError(
            f"case 4 target at height offset {dh}; type-II targets of a type-I "
            "leaf must sit at the same height or one level higher"
        )
    ev_rec = v in state.recolored
    if case == 1 and ev_rec:
        raise ColoringInternalError("case 1 targets never have a recolored leg")
    if case in (2, 3) and dh == 1 and ev_rec:
        raise ColoringInternalError("a target one level deeper cannot be recolored yet")
    if case in (2, 3) and dh == -1 and v not in state.flagged:
        raise ColoringInternalError("a target one level higher must already be flagged")
    if case == 4 and v not in state.flagged:
        raise ColoringInternalError("case 4 targets must already be flagged")
    rule = STAGE2_RULES.get((case, h % 3, dh, ev_rec))
    if rule is None:
        raise ColoringInternalError(
            f"no dispatch rule for case={case} h%3={h % 3} dh={dh} recolored={ev_rec}"
        )
    state.colors[edge_key(w, v)] = rule.edge_color
    if rule.recolor is not None:
        state.colors[state.leg_edge(w)] = rule.recolor
        state.recolored.add(w)
        root = tree.root
        root_cert = state.certs.get(root)
        # the root's stored second path may ride on w's leg; reroute it via v
        if root_cert is not None and len(root_cert[1]) == 3 and root_cert[1][1] == w:
            state.certs[root] = (
                root_cert[0],
                (root, v, state.leg[v]),
                root_cert[2],
            )
    state.certs[w] = (
        (w, state.leg[w]),
        _shape_parent(state, w, rule.wi_p2),
        _shape_via_v(state, w, v, rule.wi_p3),
    )
    state.flagged.add(w)
    _expect_check(state, w, rule.expect_wi)
    if rule.v_cert is not None and v not in state.flagged:
        vp2, vp3 = rule.v_cert
        state.certs[v] = (
            (v, state.leg[v]),
            _shape_parent(state, v, vp2),
            _shape_via_w(state, v, w, vp3),
        )
        state.flagged.add(v)
        _expect_check(state, v, rule.expect_v)
    elif rule.v_cert is None and v not in state.flagged:
        raise ColoringInternalError(
            f"rule {(case, h % 3, dh, ev_rec)} leaves target {v} uncertified"
        )
    info = StepInfo(
        w=w,
        v=v,
        case=case,
        h_mod=h % 3,
        dh=dh,
        ev_recolored=ev_rec,
        edge_color=rule.edge_color,
        recolored_to=rule.recolor,
    )
    state.steps.append(info)
    return info


# ---------------------------------------------------------------------------
# Small components.

def _color_isolated_vertex(g: Graph, dset: set, v: int, colors: dict, certs: dict) -> None:
    ft = [w for w in g.adj[v] if w in dset]
    if len(ft) < 3:
        raise DominationError(f"isolated outside vertex {v} has {len(ft)} legs, needs 3")
    colors[edge_key(v, ft[0])] = 1
    colors[edge_key(v, ft[1])] = 2
    for w in ft[2:]:
        colors[edge_key(v, w)] = 3
    certs[v] = ((v, ft[0]), (v, ft[1]), (v, ft[2]))


def _color_isolated_edge(
    g: Graph, dset: set, u: int, v: int, colors: dict, certs: dict
) -> None:
    fu = [w for w in g.adj[u] if w in dset]
    fv = [w for w in g.adj[v] if w in dset]
    if len(fu) < 2 or len(fv) < 2:
        raise DominationError(f"isolated edge ({u},{v}) endpoints need two legs each")
    colors[edge_key(u, fu[0])] = 1
    for w in fu[1:]:
        colors[edge_key(u, w)] = 2
    colors[edge_key(v, fv[0])] = 2
    for w in fv[1:]:
        colors[edge_key(v, w)] = 3
    colors[edge_key(u, v)] = 4
    certs[u] = ((u, fu[0]), (u, fu[1]), (u, v, fv[1]))
    certs[v] = ((v, fv[0]), (v, fv[1]), (v, u, fu[0]))


# ---------------------------------------------------------------------------
# The full 6-extra-color scheme.

def three_way_coloring(
    g: Graph,
    dom,
    limits: InnerLimits = InnerLimits(),
    check_steps: bool = False,
) -> tuple[EdgeColoring, list[SafetyCertificate], ColoringReport]:
    """3-rainbow coloring using at most 6 colors outside D plus a fresh
    palette inside, with machine-checkable safety certificates.

    With ``check_steps`` every previously certified vertex is re-verified
    after each individual repair step; a violation raises CertificateError.
    """
    dset = _as_vertex_set(dom)
    if not check_domination(g, dset, k_way(3)):
        raise DominationError("D must be a connected three-way dominating set")
    colors: dict = {}
    cert_paths: dict = {}
    comps = components_minus(g, dset)
    stage2_steps: list[StepInfo] = []
    recolored = 0
    for comp in comps:
        if len(comp) == 1:
            _color_isolated_vertex(g, dset, comp[0], colors, cert_paths)
            continue
        if len(comp) == 2:
            _color_isolated_edge(g, dset, comp[0], comp[1], colors, cert_paths)
            continue
        compset = set(comp)
        roots = [
            v for v in comp if sum(1 for w in g.adj[v] if w in compset) >= 2
        ]
        if not roots:
            raise ColoringInternalError(
                f"component {comp} has no vertex with two inside neighbors"
            )
        tree = bfs_tree(g, comp, min(roots))
        state = stage1_periodic(g, dset, comp, tree, colors)
        for leaf in state.dangerous:
            _repair_leaf_with_leg(g, dset, state, leaf)
        remaining = [v for v in state.dangerous if v not in state.flagged]
        state.dangerous = order_dangerous(remaining, tree)
        for w in state.dangerous:
            if w in state.flagged:
                continue
            stage2_repair_step(g, state, w)
            if check_steps:
                _check_flagged(g, dset, state)
        stage2_steps.extend(state.steps)
        recolored += len(state.recolored)
        cert_paths.update(state.certs)
    for u, v in g.edges:
        if (u not in dset or v not in dset) and edge_key(u, v) not in colors:
            colors[edge_key(u, v)] = 1
    inner, inner_method = inner_coloring(g, dset, offset=6, limits=limits)
    colors.update(inner.assignment)
    coloring = EdgeColoring.from_dict(colors)
    certificates = _finalize_certificates(g, dset, coloring, cert_paths)
    report = ColoringReport(
        method="theorem3",
        n=g.n,
        dom=tuple(sorted(dset)),
        d=inner.num_colors,
        num_colors=coloring.num_colors,
        inner_method=inner_method,
        components=len(comps),
        stage2_steps=len(stage2_steps),
        recolored=recolored,
        rule_keys=tuple(sorted({s.rule_key for s in stage2_steps})),
    )
    return coloring, certificates, report


def _repair_leaf_with_leg(g: Graph, dset: set, state: Stage1State, leaf: int) -> None:
    """Stage 2 for leaves that still own an uncolored leg: color the
    smallest-foot one with the smallest color missing from the leaf's two
    existing paths."""
    spare = [
        w for w in g.adj[leaf] if w in dset and edge_key(leaf, w) not in state.colors
    ]
    if not spare:
        return
    foot = min(spare)
    tree = state.tree
    p = tree.parent[leaf]
    p1 = (leaf, state.leg[leaf])
    p3 = (leaf, p, state.leg[p])
    used = _path_colors(state.colors, p1) | _path_colors(state.colors, p3)
    col = min(c for c in range(1, 7) if c not in used)
    state.colors[edge_key(leaf, foot)] = col
    state.certs[leaf] = (p1, (leaf, foot), p3)
    state.flagged.add(leaf)


def _check_flagged(g: Graph, dset: set, state: Stage1State) -> None:
    from .verify import verify_certificate

    snapshot = EdgeColoring.from_dict(state.colors)
    for x in sorted(state.flagged):
        if x not in state.certs:
            continue
        cert = SafetyCertificate(
            vertex=x,
            paths=tuple(state.certs[x]),
            color_sets=_cert_sets(state.colors, state.certs[x]),
        )
        if not verify_certificate(g, snapshot, dset, cert):
            raise CertificateError(
                f"certificate of flagged vertex {x} stopped verifying after a repair step"
            )


def _finalize_certificates(
    g: Graph, dset: frozenset, coloring: EdgeColoring, cert_paths: dict
) -> list[SafetyCertificate]:
    from .verify import verify_certificate

    out = []
    for v in range(g.n):
        if v in dset:
            continue
        if v not in cert_paths:
            raise ColoringInternalError(f"outside vertex {v} ended without a certificate")
        paths = tuple(tuple(p) for p in cert_paths[v])
        cert = SafetyCertificate(
            vertex=v, paths=paths, color_sets=_cert_sets(coloring.assignment, paths)
        )
        if not verify_certificate(g, coloring, dset, cert):
            raise CertificateError(f"final certificate of vertex {v} does not verify")
        out.append(cert)
    return out


# ---------------------------------------------------------------------------
# Coloring text format: header comments record method, D, d and the total
# color count; then one "u v color" line per edge.

def write_coloring(coloring: EdgeColoring, report: ColoringReport) -> str:
    lines = [
        f"# method={report.method} n={report.n} d={report.d} colors={report.num_colors}"
    ]
    if report.dom:
        lines.append("# dom=" + ",".join(str(v) for v in report.dom))
    for (u, v), col in sorted(coloring.assignment.items()):
        lines.append(f"{u} {v} {col}")
    return "\n".join(lines) + "\n"


def read_coloring(text: str):
    """Parse a coloring file back into (graph, coloring, meta)."""
    from .graphs import build_graph

    meta: dict = {}
    rows = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            for token in stripped[1:].split():
                if "=" in token:
                    key, val = token.split("=", 1)
                    meta[key] = val
            continue
        parts = stripped.split()
        if len(parts) != 3:
            raise GraphError(f"bad coloring line {line!r}")
        rows.append((int(parts[0]), int(parts[1]), int(parts[2])))
    if "n" not in meta:
        raise GraphError("coloring header must record n")
    n = int(meta["n"])
    graph = build_graph(n, [(u, v) for u, v, _ in rows])
    assignment = {edge_key(u, v): c for u, v, c in rows}
    meta_out: dict = {"method": meta.get("method", "unknown"), "n": n}
    if "d" in meta:
        meta_out["d"] = int(meta["d"])
    if "colors" in meta:
        meta_out["colors"] = int(meta["colors"])
    if "dom" in meta and meta["dom"]:
        meta_out["dom"] = tuple(int(t) for t in meta["dom"].split(","))
    return graph, EdgeColoring.from_dict(assignment), meta_out
