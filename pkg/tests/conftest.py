"""Shared strategies and the acceptance summary printed after the run."""

from __future__ import annotations

import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from antimagic.decomposition import Cycle, Trail
from antimagic.generate import GenSpec, gen_biregular, grid_sizes, profile_grid
from antimagic.graph import BipartiteGraph

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def biregular_graphs(draw, profiles=None, max_edges=200):
    s, t = draw(st.sampled_from(profiles or profile_grid()))
    sizes = grid_sizes(s, t, max_edges)
    m, n = draw(st.sampled_from(sizes))
    seed = draw(st.integers(0, 2**31 - 1))
    return gen_biregular(GenSpec(m, n, s, t, seed=seed))


def random_trail_graph(half: int, rng: random.Random, x_pool: int | None = None):
    """A graph that is one open trail ``y0 x y1 x ... y_half``; X vertices may repeat."""
    x_pool = x_pool or max(2, half)
    xs = []
    for _ in range(half):
        choices = [x for x in range(x_pool) if not xs or x != xs[-1]]
        xs.append(rng.choice(choices))
    ys = list(range(half + 1))
    edges, eids = [], []
    for i in range(half):
        eids.append(len(edges))
        edges.append((xs[i], ys[i]))
        eids.append(len(edges))
        edges.append((xs[i], ys[i + 1]))
    g = BipartiteGraph(x_pool, half + 1, tuple(edges))
    return g, Trail(tuple(eids), tuple(ys), tuple(xs))


def cycle_graph(half: int):
    """``C_{2 half}`` as a graph plus its :class:`Cycle`, vertices in walk order."""
    edges = []
    for i in range(half):
        edges.append((i, i))
        edges.append(((i + 1) % half, i))
    g = BipartiteGraph(half, half, tuple(edges))
    return g, Cycle(tuple(range(2 * half)), tuple(range(half)), tuple(range(half)))
