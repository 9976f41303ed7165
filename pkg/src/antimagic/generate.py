"""Seeded biregular bipartite graph generators and a named instance catalog."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import Infeasible, RetriesExhausted
from .graph import BipartiteGraph


@dataclass(frozen=True)
class GenSpec:
    m: int
    n: int
    s: int
    t: int
    seed: int = 0
    max_retries: int = 200

    def check(self) -> None:
        m, n, s, t = self.m, self.n, self.s, self.t
        if min(m, n, s, t) < 1:
            raise Infeasible(f"all of m, n, s, t must be positive, got {(m, n, s, t)}")
        if m * s != n * t:
            raise Infeasible(f"m*s = {m * s} differs from n*t = {n * t}")
        if s > n or t > m:
            raise Infeasible(f"no simple graph: need s <= n and t <= m, got s={s}, n={n}, t={t}, m={m}")


def _pair_stubs(spec: GenSpec, rng: random.Random) -> list[tuple[int, int]]:
    y_stubs = [y for y in range(spec.n) for _ in range(spec.t)]
    rng.shuffle(y_stubs)
    return [(i // spec.s, y) for i, y in enumerate(y_stubs)]


def _is_simple(edges) -> bool:
    return len(set(edges)) == len(edges)


def _swap_repair(edges: list[tuple[int, int]], rng: random.Random, budget: int) -> bool:
    """Remove duplicate edges by degree-preserving double swaps, in place."""
    for _ in range(budget):
        count = {}
        for xy in edges:
            count[xy] = count.get(xy, 0) + 1
        dup = [i for i, xy in enumerate(edges) if count[xy] > 1]
        if not dup:
            return True
        i = dup[0]
        j = rng.randrange(len(edges))
        (x1, y1), (x2, y2) = edges[i], edges[j]
        if x1 == x2 or y1 == y2:
            continue
        if (x1, y2) in count or (x2, y1) in count:
            continue
        edges[i], edges[j] = (x1, y2), (x2, y1)
    return False


def gen_biregular(spec: GenSpec, method: str = "auto") -> BipartiteGraph:
    """Random simple biregular graph from the configuration model.

    ``method="rejection"`` resamples the whole stub matching until it is
    simple, which is unbiased but hopeless for dense profiles (the success
    rate is about ``exp(-(s-1)(t-1)/2)``).  ``"auto"`` tries a few whole
    samples and then repairs duplicates by double-edge swaps.  Either way the
    result depends only on ``spec``; edges are listed sorted by ``(x, y)``.
    """
    spec.check()
    if method not in ("auto", "rejection"):
        raise ValueError(f"unknown method {method!r}")
    m, n, s = spec.m, spec.n, spec.s
    if s == n:
        # complete bipartite graph, the only option
        return BipartiteGraph(m, n, tuple((x, y) for x in range(m) for y in range(n)))
    rng = random.Random(spec.seed)
    tries = spec.max_retries if method == "rejection" else min(spec.max_retries, 5)
    for _ in range(tries):
        edges = _pair_stubs(spec, rng)
        if _is_simple(edges):
            return BipartiteGraph(m, n, tuple(sorted(edges)))
    if method == "auto":
        for _ in range(spec.max_retries):
            edges = _pair_stubs(spec, rng)
            if _swap_repair(edges, rng, budget=50 * len(edges)):
                return BipartiteGraph(m, n, tuple(sorted(edges)))
    raise RetriesExhausted(f"no simple graph after {spec.max_retries} attempts for {spec}")


def profile_grid() -> list[tuple[int, int]]:
    """``(s, t)`` pairs of the end-to-end test grid."""
    grid = [(s, 1) for s in range(1, 7)]
    grid += [(s, 2) for s in range(2, 10)]
    grid += [(s, t) for t in range(3, 6) for s in range(t, 8)]
    return grid


def grid_sizes(s: int, t: int, max_edges: int = 500) -> list[tuple[int, int]]:
    """All ``(m, n)`` with ``ms = nt <= max_edges`` admitting a simple graph."""
    g = math.gcd(s, t)
    out = []
    k = 1
    while True:
        m, n = k * t // g, k * s // g
        if m * s > max_edges:
            break
        if s <= n and t <= m:
            out.append((m, n))
        k += 1
    return out


def random_grid_instances(s: int, t: int, count: int, seed: int = 0, max_edges: int = 500):
    """``count`` seeded random instances of profile ``(s, t)`` with varying size."""
    sizes = grid_sizes(s, t, max_edges)
    rng = random.Random(f"{seed}:{s}:{t}")
    for _ in range(count):
        m, n = sizes[rng.randrange(len(sizes))]
        yield gen_biregular(GenSpec(m, n, s, t, seed=rng.randrange(2**31)))


# ---------------------------------------------------------------------------
# catalog


def complete_bipartite(a: int, b: int) -> BipartiteGraph:
    return BipartiteGraph(a, b, tuple((x, y) for x in range(a) for y in range(b)))


def star(s: int) -> BipartiteGraph:
    return complete_bipartite(1, s)


def even_cycles(*halves: int) -> BipartiteGraph:
    """Disjoint union of cycles ``C_{2k}`` for each ``k`` in ``halves``."""
    edges = []
    base = 0
    for k in halves:
        for i in range(k):
            edges.append((base + i, base + i))
            edges.append((base + (i + 1) % k, base + i))
        base += k
    return BipartiteGraph(base, base, tuple(edges))


def disjoint_union(*graphs: BipartiteGraph) -> BipartiteGraph:
    edges = []
    bx = by = 0
    for g in graphs:
        edges.extend((x + bx, y + by) for x, y in g.edges)
        bx += g.x_count
        by += g.y_count
    return BipartiteGraph(bx, by, tuple(edges))


# Seeds below were picked by search so that the instances exercise the
# sub-structures named in the comments; tests re-check those properties.
_SEEDED = {
    # Case t=2, s odd with both trail classes (p > 0 and q > 0)
    "t2_s3_mixed_trails": GenSpec(8, 12, 3, 2, seed=1),
    "t2_s5_mixed_trails": GenSpec(10, 25, 5, 2, seed=1),
    # t=2, s=4 and s=6: after removing F there is a 6-cycle, a 10-cycle
    # and at least one cycle of length 0 mod 4
    "t2_s4_mixed_cycles": GenSpec(10, 20, 4, 2, seed=6),
    "t2_s6_mixed_cycles": GenSpec(10, 30, 6, 2, seed=4),
    # t >= 3 random
    "t3_s4_random": GenSpec(9, 12, 4, 3, seed=2),
    "t4_s6_random": GenSpec(12, 18, 6, 4, seed=2),
}


def named_instances() -> dict[str, BipartiteGraph]:
    cat = {
        "K_1_1": star(1),
        "K_1_3": star(3),
        "K_1_5": star(5),
        "two_K_1_2": disjoint_union(star(2), star(2)),
        "C4": even_cycles(2),
        "C6": even_cycles(3),
        "C8": even_cycles(4),
        "C4+C6": even_cycles(2, 3),
        "K_2_3": complete_bipartite(2, 3),
        "K_2_4": complete_bipartite(2, 4),
        "K_2_5": complete_bipartite(2, 5),
        "K_2_6": complete_bipartite(2, 6),
        "K_3_3": complete_bipartite(3, 3),
        "K_4_4": complete_bipartite(4, 4),
        "K_3_5": complete_bipartite(3, 5),
    }
    for name, spec in _SEEDED.items():
        cat[name] = gen_biregular(spec)
    return cat
