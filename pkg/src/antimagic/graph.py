"""Core graph types, biregularity profiling and oriented vertex sums.

Vertices on each side are indexed ``0..count-1`` and every edge is
identified by its position in ``BipartiteGraph.edges``.  Orientation and
labels are per-edge tuples indexed by the same edge id.

Text format (read and written by :func:`parse_graph` / :func:`format_graph`)::

    # comment
    bipartite <x_count> <y_count> <edge_count>
    <x_index> <y_index>
    ...
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyGraph, GraphFormatError, NotBiregular

# Keeps every oriented sum (at most max_degree * |E|) inside int64.
MAX_EDGES = 10**6


@dataclass(frozen=True)
class BipartiteGraph:
    """Simple bipartite graph ``G[X, Y]`` with stable 0-based edge ids."""

    x_count: int
    y_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(x), int(y)) for x, y in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.x_count < 0 or self.y_count < 0:
            raise GraphFormatError("vertex counts must be non-negative")
        if len(edges) > MAX_EDGES:
            raise GraphFormatError(f"more than {MAX_EDGES} edges")
        seen = set()
        for eid, (x, y) in enumerate(edges):
            if not (0 <= x < self.x_count and 0 <= y < self.y_count):
                raise GraphFormatError(f"edge {eid} = ({x}, {y}) is out of range")
            if (x, y) in seen:
                raise GraphFormatError(f"edge {eid} = ({x}, {y}) is a duplicate")
            seen.add((x, y))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def x_of(self) -> np.ndarray:
        return np.fromiter((x for x, _ in self.edges), dtype=np.int64, count=len(self.edges))

    @cached_property
    def y_of(self) -> np.ndarray:
        return np.fromiter((y for _, y in self.edges), dtype=np.int64, count=len(self.edges))

    @cached_property
    def x_incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids at each X vertex, ascending."""
        inc = [[] for _ in range(self.x_count)]
        for eid, (x, _) in enumerate(self.edges):
            inc[x].append(eid)
        return tuple(tuple(v) for v in inc)

    @cached_property
    def y_incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids at each Y vertex, ascending."""
        inc = [[] for _ in range(self.y_count)]
        for eid, (_, y) in enumerate(self.edges):
            inc[y].append(eid)
        return tuple(tuple(v) for v in inc)

    def x_degrees(self) -> np.ndarray:
        return np.bincount(self.x_of, minlength=self.x_count)

    def y_degrees(self) -> np.ndarray:
        return np.bincount(self.y_of, minlength=self.y_count)

    def swap_sides(self) -> "BipartiteGraph":
        """Same graph with X and Y exchanged; edge ids are preserved."""
        return BipartiteGraph(self.y_count, self.x_count, tuple((y, x) for x, y in self.edges))


@dataclass(frozen=True)
class GraphProfile:
    """Canonical profile: ``m = |X|``, ``n = |Y|``, X-degree ``s`` >= Y-degree ``t``."""

    m: int
    n: int
    s: int
    t: int
    swapped: bool = False


@dataclass(frozen=True)
class Orientation:
    """Per-edge direction; ``x_to_y[e]`` is False when edge ``e`` points from Y to X."""

    x_to_y: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "x_to_y", tuple(bool(v) for v in self.x_to_y))

    @classmethod
    def all_x_to_y(cls, edge_count: int) -> "Orientation":
        return cls((True,) * edge_count)

    def reversed_edges(self) -> list[int]:
        return [e for e, d in enumerate(self.x_to_y) if not d]

    def flipped(self, *edge_ids: int) -> "Orientation":
        dirs = list(self.x_to_y)
        for e in edge_ids:
            dirs[e] = not dirs[e]
        return Orientation(tuple(dirs))


@dataclass(frozen=True)
class Labeling:
    """Per-edge positive integer labels.

    A valid antimagic labeling is a bijection onto ``1..|E|``; construction
    does not enforce it so that the verifier can report violations.
    """

    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(v) for v in self.labels))

    def __len__(self):
        return len(self.labels)

    def __getitem__(self, eid):
        return self.labels[eid]

    def is_bijection(self) -> bool:
        return sorted(self.labels) == list(range(1, len(self.labels) + 1))


@dataclass(frozen=True)
class VertexSums:
    x_sums: tuple[int, ...]
    y_sums: tuple[int, ...]

    def total(self) -> int:
        return sum(self.x_sums) + sum(self.y_sums)


@dataclass(frozen=True)
class LabelWindow:
    """Contiguous label interval ``[lo, hi]``."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.hi < self.lo - 1:
            raise ValueError(f"empty window must have hi == lo - 1, got [{self.lo}, {self.hi}]")

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def values(self) -> range:
        return range(self.lo, self.hi + 1)


def validate_and_profile(graph: BipartiteGraph) -> GraphProfile:
    """Check biregularity and return the canonical profile.

    The sides are reported as swapped when the input X-degree is smaller
    than its Y-degree; use :func:`canonicalize` to obtain the swapped graph.
    """
    if graph.edge_count == 0:
        raise EmptyGraph("graph has no edges")
    dx = set(graph.x_degrees().tolist())
    dy = set(graph.y_degrees().tolist())
    if len(dx) != 1:
        raise NotBiregular(f"X side has degrees {sorted(dx)}")
    if len(dy) != 1:
        raise NotBiregular(f"Y side has degrees {sorted(dy)}")
    (s,), (t,) = dx, dy
    if s >= t:
        return GraphProfile(graph.x_count, graph.y_count, s, t, swapped=False)
    return GraphProfile(graph.y_count, graph.x_count, t, s, swapped=True)


def canonicalize(graph: BipartiteGraph) -> tuple[BipartiteGraph, GraphProfile]:
    """Return the graph with sides arranged so that ``s >= t``, plus its profile."""
    profile = validate_and_profile(graph)
    if profile.swapped:
        return graph.swap_sides(), profile
    return graph, profile


def oriented_vertex_sums(
    graph: BipartiteGraph,
    orientation: Orientation,
    labels: Labeling | Sequence[int],
    edge_ids: Iterable[int] | None = None,
) -> VertexSums:
    """Labels of arcs entering a vertex minus labels of arcs leaving it.

    ``edge_ids`` restricts the evaluation to a sub-edge-set (the sums of the
    spanning subgraph with those edges); entries of ``labels`` outside the
    subset are ignored.
    """
    lab = np.asarray(labels.labels if isinstance(labels, Labeling) else labels, dtype=np.int64)
    fwd = np.asarray(orientation.x_to_y, dtype=bool)
    if edge_ids is None:
        idx = np.arange(graph.edge_count)
    else:
        idx = np.fromiter(edge_ids, dtype=np.int64)
    signed = np.where(fwd[idx], lab[idx], -lab[idx])
    xs = np.zeros(graph.x_count, dtype=np.int64)
    ys = np.zeros(graph.y_count, dtype=np.int64)
    np.add.at(xs, graph.x_of[idx], -signed)
    np.add.at(ys, graph.y_of[idx], signed)
    return VertexSums(tuple(xs.tolist()), tuple(ys.tolist()))


def undirected_vertex_sums(
    graph: BipartiteGraph,
    labels: Labeling | Sequence[int] | dict[int, int],
    edge_ids: Iterable[int] | None = None,
) -> VertexSums:
    """Plain (unoriented) vertex sums over ``edge_ids`` or over all edges."""
    if isinstance(labels, dict):
        edge_ids = list(labels) if edge_ids is None else edge_ids
        lab = np.zeros(graph.edge_count, dtype=np.int64)
        for e, v in labels.items():
            lab[e] = v
        labels = lab
    sums = oriented_vertex_sums(graph, Orientation.all_x_to_y(graph.edge_count), labels, edge_ids)
    return VertexSums(tuple(-v for v in sums.x_sums), sums.y_sums)


def parse_graph(text: str) -> BipartiteGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty graph file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "bipartite":
        raise GraphFormatError(f"bad header line: {lines[0]!r}")
    try:
        x_count, y_count, edge_count = (int(v) for v in head[1:])
    except ValueError:
        raise GraphFormatError(f"bad header line: {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != edge_count:
        raise GraphFormatError(f"header declares {edge_count} edges, found {len(body)}")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line: {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"bad edge line: {ln!r}") from None
    return BipartiteGraph(x_count, y_count, tuple(edges))


def format_graph(graph: BipartiteGraph) -> str:
    out = [f"bipartite {graph.x_count} {graph.y_count} {graph.edge_count}"]
    out.extend(f"{x} {y}" for x, y in graph.edges)
    return "\n".join(out) + "\n"


def read_graph(path: str | Path) -> BipartiteGraph:
    return parse_graph(Path(path).read_text())


def write_graph(graph: BipartiteGraph, path: str | Path) -> None:
    Path(path).write_text(format_graph(graph))
