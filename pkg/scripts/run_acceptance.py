#!/usr/bin/env python3
"""Standalone acceptance run: executes every criterion outside pytest and
prints one PASS/FAIL line each.  Exits nonzero if any criterion fails.

The reduced lower-bound check at two windmill blocks is expected to FAIL:
that instance genuinely admits a 3-rainbow 3-coloring (see the decisions
ledger); the three-block supplementary check demonstrates the intended
argument.
"""
import itertools
import math
import pathlib
import random
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from rainbow3 import (
    EdgeColoring,
    all_class_triples,
    chain_example,
    class_membership,
    complete_bipartite,
    complete_graph,
    diameter,
    exact_rx3,
    exists_rainbow_s_tree,
    french_windmill,
    gstar,
    is_3_rainbow,
    pickable,
    pickable_bruteforce,
    random_min_degree,
    sdiam3,
    steiner_distance3,
    three_dom_coloring,
    three_way_coloring,
    three_way_dominating_set,
    threshold_example,
    verify_certificate,
)

RESULTS = []


def report(name, ok, detail=""):
    RESULTS.append(ok)
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())


# Dumb enumeration oracles, independent of the library machinery.

def _connected(verts, edges):
    verts = set(verts)
    if not verts:
        return True
    adj = {v: set() for v in verts}
    for u, v in edges:
        if u in verts and v in verts:
            adj[u].add(v)
            adj[v].add(u)
    seen, stack = {min(verts)}, [min(verts)]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == verts


def oracle_steiner3(g, terms):
    terms = set(terms)
    others = [v for v in range(g.n) if v not in terms]
    for extra in range(len(others) + 1):
        for combo in itertools.combinations(others, extra):
            if _connected(terms | set(combo), g.edges):
                return len(terms) + extra - 1
    return None


def oracle_rainbow_s_tree(g, coloring, s):
    s = set(s)
    for size in range(2, g.n):
        for combo in itertools.combinations(g.edges, size):
            cols = [coloring.assignment[e] for e in combo]
            if len(set(cols)) != size:
                continue
            verts = {x for e in combo for x in e}
            if len(verts) != size + 1 or not _connected(verts, combo):
                continue
            if s <= verts:
                return True
    return False


def criterion_1():
    start = time.time()
    g = french_windmill(3).graph
    coloring, _, _ = three_way_coloring(g, {0})
    verdict = is_3_rainbow(g, coloring).verdict
    elapsed = time.time() - start
    report(
        "1 (coloring)",
        coloring.num_colors == 6 and verdict and elapsed < 5.0,
        f"windmill t=3: {coloring.num_colors} colors, verified={verdict}, {elapsed:.2f}s",
    )
    res2 = exact_rx3(french_windmill(2).graph, kmax=3, max_edges=12)
    report(
        "1 (reduced lower bound, t=2 as stated)",
        res2 is None,
        f"search returned {res2!r}; a valid 3-coloring exists, see ledger",
    )
    res3 = exact_rx3(g, kmax=3, max_edges=18)
    report("1 (supplementary, t=3)", res3 is None, "no 3-rainbow 3-coloring at t=3")


def criterion_2():
    start = time.time()
    k33 = exact_rx3(complete_bipartite(3, 3))
    elapsed = time.time() - start
    k3, k4 = exact_rx3(complete_graph(3)), exact_rx3(complete_graph(4))
    report(
        "2",
        k33 == 3 and elapsed < 10 and k3 == 2 and k4 in (2, 3),
        f"rx3(K33)={k33} ({elapsed:.2f}s), rx3(K3)={k3}, rx3(K4)={k4}",
    )


def criterion_3():
    ok = True
    parts = []
    for t in (5, 20, 129):
        made = threshold_example(t)
        dom = frozenset(made.labels[y] for y in ("y1", "y2", "y3"))
        col, _ = three_dom_coloring(made.graph, dom)
        ok &= col.num_colors <= 5 and is_3_rainbow(made.graph, col).verdict
        parts.append(f"threshold({t})={col.num_colors}")
    for t in (10, 40):
        made = chain_example(6, t)
        dom = frozenset(made.labels[x] for x in ("a4", "a5", "a6", "b1", "b2", "b3"))
        col, _ = three_dom_coloring(made.graph, dom)
        ok &= col.num_colors <= 6 and is_3_rainbow(made.graph, col).verdict
        parts.append(f"chain(6,{t})={col.num_colors}")
    report("3", ok, ", ".join(parts))


def criterion_4():
    start = time.time()
    triples = all_class_triples()
    mismatch = sum(
        1
        for cu in triples
        for cv in triples
        for cw in triples
        if pickable(cu, cv, cw) != pickable_bruteforce(cu, cv, cw)
    )
    within = all(
        pickable_bruteforce(cu, cv, cw)
        for label in range(1, 7)
        for cu, cv, cw in itertools.product(
            [t for t in triples if class_membership(t) == label], repeat=3
        )
    )
    cex = (
        (frozenset({1}), frozenset({2, 4}), frozenset({5, 6})),
        (frozenset({1}), frozenset({2, 5}), frozenset({4, 6})),
        (frozenset({1}), frozenset({2, 6}), frozenset({4, 5})),
    )
    elapsed = time.time() - start
    report(
        "4",
        mismatch == 0 and within and not pickable(*cex) and elapsed < 10,
        f"41^3 triples, {mismatch} mismatches, {elapsed:.1f}s",
    )


def criteria_5_and_8():
    ok5 = ok8 = True
    steps = 0
    for i in range(200):
        n = 8 + (i % 23)
        g = random_min_degree(n, 3, seed=i)
        dom = three_way_dominating_set(g, exact_limit=20)
        try:
            coloring, certs, rep = three_way_coloring(g, dom, check_steps=True)
        except Exception as exc:  # a stage-2 safety violation would land here
            ok8 = False
            print(f"  corpus graph {i}: {exc}")
            continue
        steps += rep.stage2_steps
        good = (
            is_3_rainbow(g, coloring, max_colors=24).verdict
            and all(verify_certificate(g, coloring, dom.vertices, c) for c in certs)
            and all(class_membership(c.color_sets) is not None for c in certs)
            and coloring.num_colors <= dom.size + 5
        )
        if dom.provenance == "exact":
            good &= coloring.num_colors <= math.floor(0.75 * n) + 3
        ok5 &= good
    report("5", ok5, f"200 random graphs (n<=30, delta>=3), {steps} repair steps")
    report("8", ok8, "per-step certificate re-verification saw zero violations")


def criterion_6():
    ok = all(
        diameter(gstar(3, m).graph) == (3 * gstar(3, m).graph.n - 10) // 4
        and sdiam3(gstar(3, m).graph) >= diameter(gstar(3, m).graph)
        for m in range(7)
    )
    report("6", ok, "diam(gstar(3,m)) = (3n-10)/4 and sdiam3 >= diam for m=0..6")


def criterion_7():
    ok = True
    checked = 0
    for g in [french_windmill(2).graph, complete_graph(5), complete_bipartite(3, 4)]:
        for s in itertools.combinations(range(g.n), 3):
            ok &= steiner_distance3(g, s) == oracle_steiner3(g, s)
            checked += 1
    for seed in range(8):
        rng = random.Random(seed)
        g = random_min_degree(rng.randrange(4, 8), 2, seed=seed)
        if g.m > 12:
            continue
        col = EdgeColoring.from_dict({e: rng.randrange(1, 5) for e in g.edges})
        for s in itertools.combinations(range(g.n), 3):
            ok &= exists_rainbow_s_tree(g, col, s) == oracle_rainbow_s_tree(g, col, s)
            checked += 1
    report("7", ok, f"{checked} oracle comparisons")


def main():
    criterion_1()
    criterion_2()
    criterion_3()
    criterion_4()
    criteria_5_and_8()
    criterion_6()
    criterion_7()
    return 0 if all(RESULTS) else 1


if __name__ == "__main__":
    raise SystemExit(main())
