"""Structural subroutines used by the construction.

X-saturating matchings, splitting an edge set into open trails with
Y-disjoint interiors, suppression of degree-2 Y vertices, 2-factors of
even-regular multigraphs and decomposition of even graphs into simple
cycles.  Every routine breaks ties by the lowest edge id so results are
reproducible for a fixed input.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .errors import (
    EvenComponent,
    Infeasible,
    OddDegree,
    OddLength,
    WrongCase,
)
from .graph import BipartiteGraph, GraphProfile


@dataclass(frozen=True)
class Matching:
    """Edge ids of a matching, ordered by X endpoint."""

    pairs: tuple[int, ...]

    def __len__(self):
        return len(self.pairs)


@dataclass(frozen=True)
class Trail:
    """Trail ``y1 x1 y2 x2 ... xk y(k+1)`` stored as parallel sequences.

    ``edges[2i]`` joins ``ys[i]`` to ``xs[i]`` and ``edges[2i+1]`` joins
    ``xs[i]`` to ``ys[i+1]``.  A closed trail omits the repeated final Y
    vertex (``len(ys) == len(xs)``) and its last edge returns to ``ys[0]``.
    """

    edges: tuple[int, ...]
    ys: tuple[int, ...]
    xs: tuple[int, ...]
    closed: bool = False

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def half(self) -> int:
        return len(self.edges) // 2

    @property
    def endpoint_a(self) -> int:
        return self.ys[0]

    @property
    def endpoint_b(self) -> int:
        return self.ys[0] if self.closed else self.ys[-1]

    def as_cycle(self) -> "Cycle":
        """View a closed trail as ``x y x y ...`` starting at its last X vertex."""
        if not self.closed:
            raise ValueError("only closed trails can be viewed as cycles")
        k = len(self.xs)
        xs = (self.xs[-1],) + self.xs[:-1]
        edges = (self.edges[-1],) + self.edges[:-1]
        return Cycle(edges, xs, self.ys[:k])


@dataclass(frozen=True)
class Cycle:
    """Closed walk ``x1 y1 x2 y2 ... xk yk x1``.

    ``edges[2i]`` joins ``xs[i]`` to ``ys[i]``; ``edges[2i+1]`` joins
    ``ys[i]`` to ``xs[(i+1) % k]``.
    """

    edges: tuple[int, ...]
    xs: tuple[int, ...]
    ys: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def half(self) -> int:
        return len(self.edges) // 2


@dataclass(frozen=True)
class CycleSet:
    cycles: tuple[Cycle, ...]

    def __iter__(self):
        return iter(self.cycles)

    def __len__(self):
        return len(self.cycles)

    def edge_ids(self) -> list[int]:
        return [e for c in self.cycles for e in c.edges]


@dataclass(frozen=True)
class TwoFactor:
    """Edge set in which every X vertex has degree 2 and every Y vertex 0 or 2."""

    edge_ids: tuple[int, ...]


@dataclass(frozen=True)
class SuppressedMultigraph:
    """Multigraph on X obtained by replacing each Y vertex by one edge.

    Multigraph edge ``k`` is ``ends[k] = (u, w)`` and corresponds to Y vertex
    ``back[k][0]`` whose two graph edges are ``back[k][1]`` (at ``u``) and
    ``back[k][2]`` (at ``w``).
    """

    vertex_count: int
    ends: tuple[tuple[int, int], ...]
    back: tuple[tuple[int, int, int], ...]

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.vertex_count, dtype=np.int64)
        for u, w in self.ends:
            deg[u] += 1
            deg[w] += 1
        return deg


@dataclass(frozen=True)
class DecompositionPlan:
    """Trails and cycles bucketed by length modulo 4.

    ``mod2_trails`` (count ``p``), ``mod0_trails`` (``q``) and ``mod0_cycles``
    (``ell``) are the items fed to the family labeler in that order;
    ``mod2_cycles`` (``h``) are only used by the even-``s`` construction.
    """

    mod2_trails: tuple[Trail, ...] = ()
    mod0_trails: tuple[Trail, ...] = ()
    mod0_cycles: tuple[Cycle, ...] = ()
    mod2_cycles: tuple[Cycle, ...] = ()

    @property
    def p(self) -> int:
        return len(self.mod2_trails)

    @property
    def q(self) -> int:
        return len(self.mod0_trails)

    @property
    def ell(self) -> int:
        return len(self.mod0_cycles)

    @property
    def h(self) -> int:
        return len(self.mod2_cycles)

    def items(self) -> list[Trail | Cycle]:
        return [*self.mod2_trails, *self.mod0_trails, *self.mod0_cycles]

    def edge_count(self) -> int:
        return sum(it.length for it in self.items())


# ---------------------------------------------------------------------------
# matching


def x_saturating_matching(graph: BipartiteGraph, profile: GraphProfile | None = None) -> Matching:
    """Maximum bipartite matching, required to cover every X vertex."""
    if graph.edge_count == 0:
        if graph.x_count:
            raise Infeasible("X vertices without edges cannot be saturated")
        return Matching(())
    adj = csr_matrix(
        (np.ones(graph.edge_count, dtype=np.int8), (graph.x_of, graph.y_of)),
        shape=(graph.x_count, graph.y_count),
    )
    match = maximum_bipartite_matching(adj, perm_type="column")
    if np.any(match < 0):
        missing = np.flatnonzero(match < 0).tolist()
        raise Infeasible(f"no matching saturates X; unmatched X vertices {missing[:10]}")
    lookup = {xy: e for e, xy in enumerate(graph.edges)}
    return Matching(tuple(lookup[(x, int(y))] for x, y in enumerate(match)))


def is_matching(graph: BipartiteGraph, edge_ids: Iterable[int]) -> bool:
    xs, ys = set(), set()
    for e in edge_ids:
        x, y = graph.edges[e]
        if x in xs or y in ys:
            return False
        xs.add(x)
        ys.add(y)
    return True


# ---------------------------------------------------------------------------
# Euler circuits on small edge-labelled multigraphs


def _euler_circuit(adj: dict[int, list[tuple[int, int]]], ends: dict[int, tuple[int, int]], start: int):
    """Hierholzer's algorithm; returns ``[(edge, tail, head), ...]`` from ``start``.

    ``adj[v]`` lists ``(edge, other)`` pairs sorted by edge key; ``ends`` is
    only used for its keys (the set of edges in the component).
    """
    used = set()
    ptr = defaultdict(int)
    stack = [(None, None, start)]
    circuit = []
    while stack:
        _, _, v = stack[-1]
        nbrs = adj[v]
        i = ptr[v]
        while i < len(nbrs) and nbrs[i][0] in used:
            i += 1
        ptr[v] = i
        if i == len(nbrs):
            circuit.append(stack.pop())
        else:
            e, w = nbrs[i]
            used.add(e)
            stack.append((e, v, w))
    circuit.reverse()
    # first entry is the (None, None, start) sentinel
    return [step for step in circuit[1:]]


def _components(vertices: Iterable[int], adj: dict[int, list[tuple[int, int]]]) -> list[list[int]]:
    seen = set()
    comps = []
    for v in sorted(vertices):
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        stack = [v]
        while stack:
            u = stack.pop()
            for _, w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


# ---------------------------------------------------------------------------
# open trails


def open_trail_decomposition(
    graph: BipartiteGraph, edge_ids: Iterable[int], allow_closed: bool = True
) -> list[Trail]:
    """Partition ``edge_ids`` into trails whose endpoints are the degree-1 Y vertices.

    X vertices must have even degree and Y vertices degree at most 2 in the
    edge subset.  Within each component the odd vertices are paired by dummy
    edges, an Euler circuit is taken and cut at the dummies, so every
    degree-2 Y vertex ends up interior to exactly one trail.  A component
    with no odd vertex yields one closed trail (``closed=True``) unless
    ``allow_closed`` is False, in which case :class:`EvenComponent` is raised.
    """
    edge_ids = sorted(set(edge_ids))
    off = graph.x_count  # Y vertex j is node off + j
    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for e in edge_ids:
        x, y = graph.edges[e]
        adj[x].append((e, off + y))
        adj[off + y].append((e, x))
    for v, nb in adj.items():
        d = len(nb)
        if v < off and d % 2:
            raise OddDegree(f"X vertex {v} has odd degree {d}")
        if v >= off and d > 2:
            raise OddDegree(f"Y vertex {v - off} has degree {d} > 2")

    trails = []
    dummy_base = graph.edge_count
    for comp in _components(adj.keys(), adj):
        odd = [v for v in comp if len(adj[v]) % 2]
        if not odd:
            if not allow_closed:
                raise EvenComponent(f"component containing vertex {comp[0]} has no odd vertex")
            start = next(v for v in comp if v >= off)
            steps = _euler_circuit(adj, {}, start)
            trails.append(_trail_from_steps(steps, off, closed=True))
            continue
        cadj = {v: list(adj[v]) for v in comp}
        dummies = set()
        for k in range(0, len(odd), 2):
            a, b = odd[k], odd[k + 1]
            d = dummy_base + k // 2
            dummies.add(d)
            cadj[a].append((d, b))
            cadj[b].append((d, a))
        dummy_base += len(odd) // 2
        steps = _euler_circuit(cadj, {}, odd[0])
        # rotate so that the circuit starts right after a dummy edge
        first = next(i for i, st in enumerate(steps) if st[0] in dummies)
        steps = steps[first + 1:] + steps[: first + 1]
        seg = []
        for st in steps:
            if st[0] in dummies:
                trails.append(_trail_from_steps(seg, off, closed=False))
                seg = []
            else:
                seg.append(st)
    return trails


def _trail_from_steps(steps, off: int, closed: bool) -> Trail:
    edges = tuple(st[0] for st in steps)
    ys, xs = [], []
    for i, (_, tail, head) in enumerate(steps):
        if i % 2 == 0:
            ys.append(tail - off)
            xs.append(head)
    if not closed:
        ys.append(steps[-1][2] - off)
    return Trail(edges, tuple(ys), tuple(xs), closed=closed)


# ---------------------------------------------------------------------------
# 2-factors


def suppress_degree_two(graph: BipartiteGraph, profile: GraphProfile) -> SuppressedMultigraph:
    """Replace every Y vertex (all of degree 2) by an edge between its two neighbours."""
    if profile.t != 2:
        raise WrongCase(f"suppression needs t = 2, got t = {profile.t}")
    ends, back = [], []
    for y, inc in enumerate(graph.y_incident):
        e1, e2 = inc
        ends.append((graph.edges[e1][0], graph.edges[e2][0]))
        back.append((y, e1, e2))
    return SuppressedMultigraph(graph.x_count, tuple(ends), tuple(back))


def two_factor(multigraph: SuppressedMultigraph) -> TwoFactor:
    """2-factor of an even-regular multigraph, subdivided back into graph edges.

    Each component is oriented along an Euler circuit so that every vertex
    has equal in- and out-degree; a perfect matching of the resulting
    ``(s/2)``-regular out-copy/in-copy bipartite graph picks one outgoing
    and one incoming edge per vertex.
    """
    deg = multigraph.degrees()
    if multigraph.vertex_count == 0 or not len(set(deg.tolist())) == 1:
        raise WrongCase("two_factor needs a regular multigraph")
    s = int(deg[0])
    if s == 0 or s % 2:
        raise WrongCase(f"two_factor needs positive even degree, got {s}")

    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for k, (u, w) in enumerate(multigraph.ends):
        adj[u].append((k, w))
        adj[w].append((k, u))
    directed = {}
    for comp in _components(range(multigraph.vertex_count), adj):
        for k, tail, head in _euler_circuit(adj, {}, comp[0]):
            directed[k] = (tail, head)

    first_edge = {}
    for k in sorted(directed):
        first_edge.setdefault(directed[k], k)
    rows = [t for t, _ in first_edge]
    cols = [h for _, h in first_edge]
    nv = multigraph.vertex_count
    split = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(nv, nv))
    match = maximum_bipartite_matching(split, perm_type="column")
    if np.any(match < 0):
        raise Infeasible("split graph has no perfect matching")

    chosen = []
    for u, w in enumerate(match.tolist()):
        k = first_edge[(u, w)]
        _, e1, e2 = multigraph.back[k]
        chosen.extend((e1, e2))
    return TwoFactor(tuple(sorted(chosen)))


# ---------------------------------------------------------------------------
# cycles


def cycle_decomposition(graph: BipartiteGraph, edge_ids: Iterable[int]) -> CycleSet:
    """Split an edge set with all degrees even into simple cycles.

    Walks along unused edges (lowest id first) keeping the current path on a
    stack; whenever the walk returns to a vertex already on the stack the
    closed part is emitted as a cycle.
    """
    edge_ids = sorted(set(edge_ids))
    off = graph.x_count
    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for e in edge_ids:
        x, y = graph.edges[e]
        adj[x].append((e, off + y))
        adj[off + y].append((e, x))
    for v, nb in adj.items():
        if len(nb) % 2:
            side = "X" if v < off else "Y"
            raise OddDegree(f"{side} vertex {v if v < off else v - off} has odd degree {len(nb)}")

    used = set()
    ptr = defaultdict(int)
    cycles = []
    for start in sorted(adj):
        path_v = [start]
        path_e = []
        pos = {start: 0}
        while path_v:
            v = path_v[-1]
            nbrs = adj[v]
            i = ptr[v]
            while i < len(nbrs) and nbrs[i][0] in used:
                i += 1
            ptr[v] = i
            if i == len(nbrs):
                # only the walk's start can be exhausted with an empty edge stack
                del pos[path_v.pop()]
                if path_e:
                    raise OddDegree("walk got stuck; degrees are not all even")
                continue
            e, w = nbrs[i]
            used.add(e)
            if w in pos:
                k = pos[w]
                cyc_e = path_e[k:] + [e]
                cyc_v = path_v[k:]
                cycles.append(_canonical_cycle(graph, cyc_e))
                for u in cyc_v[1:]:
                    del pos[u]
                del path_v[k + 1:]
                del path_e[k:]
            else:
                pos[w] = len(path_v)
                path_v.append(w)
                path_e.append(e)
    cycles.sort(key=lambda c: min(c.edges))
    return CycleSet(tuple(cycles))


def _canonical_cycle(graph: BipartiteGraph, edges: Sequence[int]) -> Cycle:
    """Rotate a closed edge sequence to start at the X end of its smallest edge."""
    k = len(edges)
    i = min(range(k), key=lambda j: edges[j])
    nxt, prv = edges[(i + 1) % k], edges[(i - 1) % k]
    x0, y0 = graph.edges[edges[i]]
    # walk in the direction that leaves x0 through the smallest edge
    if graph.edges[nxt][1] == y0:
        seq = [edges[(i + j) % k] for j in range(k)]
    else:
        assert graph.edges[prv][1] == y0
        seq = [edges[(i - j) % k] for j in range(k)]
    xs = tuple(graph.edges[seq[j]][0] for j in range(0, k, 2))
    ys = tuple(graph.edges[seq[j]][1] for j in range(0, k, 2))
    return Cycle(tuple(seq), xs, ys)


# ---------------------------------------------------------------------------
# classification


def _order_key(item):
    return (-item.length, min(item.edges))


def classify_and_order(
    trails: Sequence[Trail] = (), cycles: Sequence[Cycle] = ()
) -> DecompositionPlan:
    """Bucket by length mod 4; descending length, ties by smallest edge id.

    Closed trails are treated as cycles.
    """
    mod2_t, mod0_t, mod0_c, mod2_c = [], [], [], []
    for tr in trails:
        if tr.length % 2:
            raise OddLength(f"trail of odd length {tr.length}")
        if tr.closed:
            (mod0_c if tr.length % 4 == 0 else mod2_c).append(tr.as_cycle())
        else:
            (mod0_t if tr.length % 4 == 0 else mod2_t).append(tr)
    for cy in cycles:
        if cy.length % 2:
            raise OddLength(f"cycle of odd length {cy.length}")
        (mod0_c if cy.length % 4 == 0 else mod2_c).append(cy)
    return DecompositionPlan(
        tuple(sorted(mod2_t, key=_order_key)),
        tuple(sorted(mod0_t, key=_order_key)),
        tuple(sorted(mod0_c, key=_order_key)),
        tuple(sorted(mod2_c, key=_order_key)),
    )
