"""Definition-level check of antimagic orientations and a tiny exhaustive oracle.

Nothing here calls the construction code or the sum kernel of
:mod:`antimagic.graph`; sums are recomputed from the edge list directly.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field

from .errors import TooLarge
from .graph import BipartiteGraph, Labeling, Orientation, VertexSums

Vertex = tuple[str, int]


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    bijection_ok: bool
    sums: VertexSums
    collisions: tuple[tuple[Vertex, Vertex], ...] = field(default=())
    sign_split_ok: bool = False

    def summary(self) -> str:
        if self.ok:
            return "antimagic: labels are a bijection and all oriented sums differ"
        parts = []
        if not self.bijection_ok:
            parts.append("labels are not a bijection onto 1..|E|")
        if self.collisions:
            shown = ", ".join(f"{a[0]}{a[1]}={b[0]}{b[1]}" for a, b in self.collisions[:10])
            parts.append(f"{len(self.collisions)} colliding pairs: {shown}")
        return "; ".join(parts)


def verify_labeling(graph: BipartiteGraph, orientation: Orientation, labeling: Labeling) -> VerifyReport:
    """Check that ``labeling`` is a bijection onto ``1..|E|`` and that all
    ``|X| + |Y|`` oriented sums (in minus out) are pairwise distinct."""
    E = graph.edge_count
    labels = list(labeling.labels)
    dirs = list(orientation.x_to_y)
    if len(labels) != E or len(dirs) != E:
        empty = VertexSums(tuple([0] * graph.x_count), tuple([0] * graph.y_count))
        return VerifyReport(False, False, empty, (), False)

    bijection_ok = set(labels) == set(range(1, E + 1))

    xs = [0] * graph.x_count
    ys = [0] * graph.y_count
    for (x, y), lab, fwd in zip(graph.edges, labels, dirs):
        if fwd:
            xs[x] -= lab
            ys[y] += lab
        else:
            xs[x] += lab
            ys[y] -= lab

    by_value = defaultdict(list)
    for i, v in enumerate(xs):
        by_value[v].append(("x", i))
    for j, v in enumerate(ys):
        by_value[v].append(("y", j))
    collisions = []
    for v in sorted(by_value):
        group = by_value[v]
        collisions.extend(itertools.combinations(group, 2))

    sign_split_ok = all(v < 0 for v in xs) and all(v > 0 for v in ys)
    ok = bijection_ok and not collisions
    return VerifyReport(ok, bijection_ok, VertexSums(tuple(xs), tuple(ys)), tuple(collisions), sign_split_ok)


@dataclass(frozen=True)
class OracleResult:
    witness: tuple[Orientation, Labeling] | None
    searched: str
    exhausted: bool


def brute_force_oracle(graph: BipartiteGraph, max_edges: int = 9) -> OracleResult:
    """Exhaustive search for an antimagic orientation of a tiny graph.

    The all-X-to-Y orientation is searched first; the remaining orientations
    are tried in lexicographic order only if that fails.  Labels are assigned
    edge by edge in increasing order, so the first witness found under a
    given orientation is its lexicographically smallest labeling.
    ``searched`` states exactly which space was covered.
    """
    E = graph.edge_count
    if E > max_edges:
        raise TooLarge(f"{E} edges exceeds oracle limit {max_edges}")
    if E == 0:
        return OracleResult(None, "empty graph", True)

    # vertices completed once edge k (in id order) is labeled
    last_edge = {}
    for e, (x, y) in enumerate(graph.edges):
        last_edge[("x", x)] = e
        last_edge[("y", y)] = e
    completes = defaultdict(list)
    for v, e in last_edge.items():
        completes[e].append(v)
    incident = {v: [] for v in last_edge}
    for e, (x, y) in enumerate(graph.edges):
        incident[("x", x)].append(e)
        incident[("y", y)].append(e)

    def search(dirs):
        labels = [0] * E
        used = [False] * (E + 1)
        done_sums = set()

        def vsum(v):
            side = v[0]
            total = 0
            for e in incident[v]:
                head_is_y = dirs[e]
                into_v = head_is_y if side == "y" else not head_is_y
                total += labels[e] if into_v else -labels[e]
            return total

        def rec(k):
            if k == E:
                return True
            for lab in range(1, E + 1):
                if used[lab]:
                    continue
                used[lab] = True
                labels[k] = lab
                added = []
                clash = False
                for v in completes[k]:
                    sv = vsum(v)
                    if sv in done_sums:
                        clash = True
                        break
                    done_sums.add(sv)
                    added.append(sv)
                if not clash and rec(k + 1):
                    return True
                for sv in added:
                    done_sums.discard(sv)
                used[lab] = False
            labels[k] = 0
            return False

        return list(labels) if rec(0) else None

    fwd = (True,) * E
    found = search(fwd)
    if found is not None:
        return OracleResult((Orientation(fwd), Labeling(found)), "orientation all-X-to-Y, all label permutations", False)
    for bits in itertools.product((True, False), repeat=E):
        if bits == fwd:
            continue
        found = search(bits)
        if found is not None:
            return OracleResult((Orientation(bits), Labeling(found)), "all orientations up to the witness", False)
    return OracleResult(None, f"all 2^{E} orientations x all {E}! labelings", True)
