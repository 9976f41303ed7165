"""Checks of the labeling gadgets against their stated contracts.

Every function returns a list of violation strings (empty means the
contract holds), so the acceptance suite can count failures.
"""

from __future__ import annotations

import random
from collections import Counter

from antimagic.decomposition import Cycle, DecompositionPlan, Trail
from antimagic.gadgets import label_even_cycle, label_family, label_open_trail, label_two_regular
from antimagic.graph import BipartiteGraph, LabelWindow

from conftest import cycle_graph, random_trail_graph


def plain_sums(g: BipartiteGraph, labels: dict[int, int]):
    xs, ys = Counter(), Counter()
    for e, lab in labels.items():
        x, y = g.edges[e]
        xs[x] += lab
        ys[y] += lab
    return xs, ys


def check_paths(half: int, a: int, rng: random.Random) -> list[str]:
    g, tr = random_trail_graph(half, rng, x_pool=max(2, half // 2 + 1))
    b = a + 2 * half - 1
    labels = label_open_trail(tr, a, b)
    bad = []
    if sorted(labels.values()) != list(range(a, b + 1)):
        bad.append("labels are not exactly [a, b]")
    xs, ys = plain_sums(g, labels)
    deg = Counter(g.edges[e][0] for e in tr.edges)
    for x, d in deg.items():
        if 2 * xs[x] != d * (a + b):
            bad.append(f"x{x}: sum {xs[x]} != d(x)(a+b)/2 with d={d}")
    first, last = tr.ys[0], tr.ys[-1]
    inner = [ys[y] for y in tr.ys[1:-1]]
    if len(set(inner)) != len(inner):
        bad.append("interior Y sums repeat")
    if half % 2 == 0:
        want_first = b
        ok = lambda v: v % 2 == 1 and (2 * a + 1 <= v <= 2 * a + 2 * half - 3 or 2 * b - 2 * half + 5 <= v <= 2 * b - 3)
    else:
        want_first = a
        ok = lambda v: v % 2 == 1 and (2 * a + 3 <= v <= 2 * a + 2 * half - 3 or 2 * b - 2 * half + 5 <= v <= 2 * b - 1)
    if ys[first] != want_first:
        bad.append(f"first endpoint sum {ys[first]} != {want_first}")
    if ys[last] != b - half + 1:
        bad.append(f"last endpoint sum {ys[last]} != {b - half + 1}")
    for v in inner:
        if not ok(v):
            bad.append(f"interior sum {v} outside the stated odd ranges")
    return bad


def check_cycle2(half: int, a: int) -> list[str]:
    g, cy = cycle_graph(half)
    b = a + 2 * half - 1
    labels = label_even_cycle(cy, a, b)
    bad = []
    if sorted(labels.values()) != list(range(a, b + 1)):
        bad.append("labels are not exactly [a, b]")
    xs, ys = plain_sums(g, labels)
    if set(xs.values()) != {a + b}:
        bad.append(f"X sums {sorted(set(xs.values()))} != a+b")
    vals = [ys[y] for y in cy.ys]
    if len(set(vals)) != len(vals):
        bad.append("Y sums repeat")
    for v in vals:
        low = 2 * a + 1 <= v <= 2 * a + 2 * half - 3
        if low and v % 2 == 0:
            bad.append(f"low-range sum {v} is even")
        if not (low or v == 2 * b - half or 2 * b - 2 * half + 5 <= v <= 2 * b - 2):
            bad.append(f"Y sum {v} outside the widened range")
    return bad


def random_cycle_union(rng: random.Random, max_edges: int):
    """Disjoint even cycles with shuffled vertex names, edge ids in walk order."""
    halves = []
    total = 0
    while True:
        k = rng.randint(2, max(2, (max_edges - total) // 2))
        if total + 2 * k > max_edges:
            break
        halves.append(k)
        total += 2 * k
        if rng.random() < 0.3:
            break
    if not halves:
        halves = [2]
    nv = sum(halves)
    xperm, yperm = rng.sample(range(nv), nv), rng.sample(range(nv), nv)
    edges, cycles, base = [], [], 0
    for k in halves:
        xs = [xperm[base + i] for i in range(k)]
        ys = [yperm[base + i] for i in range(k)]
        ids = []
        for i in range(k):
            ids.append(len(edges))
            edges.append((xs[i], ys[i]))
            ids.append(len(edges))
            edges.append((xs[(i + 1) % k], ys[i]))
        cycles.append(Cycle(tuple(ids), tuple(xs), tuple(ys)))
        base += k
    return BipartiteGraph(nv, nv, tuple(edges)), cycles


def check_cycle1(g: BipartiteGraph, cycles, lo: int) -> list[str]:
    hi = lo + g.edge_count - 1
    res = label_two_regular(cycles, LabelWindow(lo, hi))
    bad = []
    if sorted(res.labels.values()) != list(range(lo, hi + 1)):
        bad.append("labels are not exactly the window")
    xs, ys = plain_sums(g, res.labels)
    vals = list(xs.values()) + list(ys.values())
    if len(set(vals)) != len(vals):
        bad.append("vertex sums repeat")
    if not all(2 * lo + 1 <= v <= 2 * hi - 1 for v in vals):
        bad.append("a vertex sum is outside [2a+1, 2b-1]")
    return bad


def random_plan(rng: random.Random, even_p: bool = False):
    """Random family: p trails of length 2 mod 4, q of 0 mod 4, ell cycles of 0 mod 4.

    X vertices are drawn from a small shared pool, so they repeat inside and
    across items; Y vertices are never shared.  ``even_p`` restricts p to
    {0, 2, 4}, the only values the constructions produce.
    """
    p = rng.choice((0, 2, 4)) if even_p else rng.randint(0, 4)
    q, ell = rng.randint(0, 3), rng.randint(0, 3)
    if p + q + ell == 0:
        q = 1
    pool = rng.randint(4, 8)
    edges, items_p, items_q, items_c = [], [], [], []
    y_next = 0

    def trail(half):
        nonlocal y_next
        xs = []
        for _ in range(half):
            xs.append(rng.choice([x for x in range(pool) if not xs or x != xs[-1]]))
        ys = list(range(y_next, y_next + half + 1))
        y_next += half + 1
        ids = []
        for i in range(half):
            ids.append(len(edges))
            edges.append((xs[i], ys[i]))
            ids.append(len(edges))
            edges.append((xs[i], ys[i + 1]))
        return Trail(tuple(ids), tuple(ys), tuple(xs))

    def cycle(half):
        nonlocal y_next
        xs = rng.sample(range(pool), half)
        ys = list(range(y_next, y_next + half))
        y_next += half
        ids = []
        for i in range(half):
            ids.append(len(edges))
            edges.append((xs[i], ys[i]))
            ids.append(len(edges))
            edges.append((xs[(i + 1) % half], ys[i]))
        return Cycle(tuple(ids), tuple(xs), tuple(ys))

    for _ in range(p):
        items_p.append(trail(2 * rng.randint(0, 4) + 1))
    for _ in range(q):
        items_q.append(trail(2 * rng.randint(1, 4)))
    for _ in range(ell):
        items_c.append(cycle(2 * rng.randint(1, pool // 2)))
    g = BipartiteGraph(pool, y_next, tuple(edges))
    return g, DecompositionPlan(tuple(items_p), tuple(items_q), tuple(items_c))


def check_pathcycle(g: BipartiteGraph, plan: DecompositionPlan, c: int) -> list[str]:
    size = plan.edge_count()
    d = c + size - 1
    res = label_family(plan, c, d)
    bad = []
    if sorted(res.labels.values()) != list(range(c, d + 1)):
        bad.append("labels are not exactly [c, d]")
    xs, ys = plain_sums(g, res.labels)
    deg = Counter(g.edges[e][0] for e in res.labels)
    for x, dx in deg.items():
        if 2 * xs[x] != dx * (c + d):
            bad.append(f"x{x}: sum {xs[x]} != d_H(x)(c+d)/2")
    if len(res.endpoint_expectations) != 2 * (plan.p + plan.q):
        bad.append("wrong number of endpoint expectations")
    for ex in res.endpoint_expectations:
        ys[ex.y] += ex.increment
    vals = [ys[y] for it in plan.items() for y in it.ys]
    if len(set(vals)) != len(vals):
        bad.append("Y sums repeat after adding the endpoint increments")
    k1 = sum(t.half for t in plan.mod2_trails)
    top = max(2 * d + 2 * plan.q - k1, 2 * d)
    if not all(2 * c - 2 * plan.p <= v <= top for v in vals):
        bad.append("a Y sum is outside [2c-2p, max(2d+2q-k1, 2d)]")
    return bad
