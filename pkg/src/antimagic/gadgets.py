"""Labeling gadgets for cycles, open trails and families of both.

Each gadget labels the edges of one structure with an exact contiguous
window of integers.  The sums quoted in docstrings are plain (unoriented)
sums over the gadget's own edges; the case drivers decide orientation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .decomposition import Cycle, CycleSet, DecompositionPlan, Trail
from .errors import (
    BadWindow,
    LengthClassViolation,
    NotTwoRegular,
    OddHalfLength,
    RepeatedYVertex,
    WindowMismatch,
    YOverlap,
)
from .graph import LabelWindow


@dataclass(frozen=True)
class EndpointExpectation:
    """Label the surrounding construction must add at trail endpoint ``y``."""

    y: int
    increment: int


@dataclass(frozen=True)
class GadgetResult:
    labels: dict[int, int]
    endpoint_expectations: tuple[EndpointExpectation, ...] = field(default=())


def _cycle_vertices(c: Cycle) -> list[tuple[str, int]]:
    return [("x", v) for v in c.xs] + [("y", v) for v in c.ys]


def label_two_regular(cycles: CycleSet | Iterable[Cycle], window: LabelWindow) -> GadgetResult:
    """Vertex-distinguishing labeling of a disjoint union of even cycles.

    Cycle ``j`` (in the given order) receives the sub-window
    ``[A+1, A+L]`` and, walking around it from its first edge, the offsets
    ``1, 3, 5, ..., L-1, L, L-2, ..., 4, 2``.  The vertex sums of that cycle
    are then ``2A + {3} | {4, 8, ..., 2L-4} | {2L-1} | {6, 10, ..., 2L-2}``:
    pairwise distinct, inside ``[2A+3, 2A+2L-1]``, and successive cycles
    occupy disjoint sum ranges.  Hence all sums are distinct and lie in
    ``[2*lo+1, 2*hi-1]``.
    """
    cycles = list(cycles)
    seen = set()
    total = 0
    for c in cycles:
        if c.length < 4 or c.length % 2:
            raise NotTwoRegular(f"cycle of length {c.length}")
        verts = _cycle_vertices(c)
        if len(set(verts)) != len(verts) or seen.intersection(verts):
            raise NotTwoRegular("cycles must be simple and vertex-disjoint")
        seen.update(verts)
        total += c.length
    if window.size != total:
        raise WindowMismatch(f"window [{window.lo}, {window.hi}] has size {window.size}, need {total}")

    labels = {}
    base = window.lo - 1
    for c in cycles:
        L = c.length
        offsets = list(range(1, L, 2)) + list(range(L, 0, -2))
        for e, off in zip(c.edges, offsets):
            labels[e] = base + off
        base += L
    return GadgetResult(labels)


def _trail_y_index(k: int) -> int:
    """1-based index of the Y vertex that owns trail edge ``k`` (0-based)."""
    return k // 2 + 1 if k % 2 == 0 else (k + 1) // 2 + 1


def _trail_streams(trail: Trail, low: int, high: int) -> dict[int, int]:
    k = trail.half
    low_parity = 0 if k % 2 == 0 else 1
    labels = {}
    for pos, e in enumerate(trail.edges):
        if _trail_y_index(pos) % 2 == low_parity:
            labels[e] = low
            low += 1
        else:
            labels[e] = high
            high -= 1
    return labels


def label_open_trail(trail: Trail, a: int, b: int) -> dict[int, int]:
    """Label an open trail of length ``2k`` with ``[a, b]``, ``b - a = 2k - 1``.

    Walking from ``y1``, edges at Y vertices of one index parity take
    ``a, a+1, ..., a+k-1`` and edges at the other parity take
    ``b, b-1, ..., b-k+1``.  The low stream goes to even indices when ``k``
    is even and to odd indices when ``k`` is odd.  Every X occurrence sees one
    edge of each stream with sum ``a + b``, interior Y sums are distinct odd
    numbers, and ``y1`` / ``y(k+1)`` end at ``b`` / ``b-k+1`` (k even) or
    ``a`` / ``b-k+1`` (k odd).
    """
    if trail.closed:
        raise BadWindow("label_open_trail needs an open trail")
    k = trail.half
    if trail.length != 2 * k or k == 0:
        raise BadWindow(f"trail length {trail.length} is not a positive even number")
    if a != b - 2 * k + 1:
        raise BadWindow(f"window [{a}, {b}] does not match trail length {trail.length}")
    if len(set(trail.ys)) != len(trail.ys):
        raise RepeatedYVertex("trail repeats a Y vertex")
    return _trail_streams(trail, a, b)


def _cycle_streams(cycle: Cycle, a: int, b: int) -> dict[int, int]:
    k = cycle.half
    low = [a + 1, a] + list(range(a + 2, a + k))
    high = [b] + list(range(b - 2, b - k, -1)) + [b - 1]
    li = hi = 0
    labels = {}
    for pos, e in enumerate(cycle.edges):
        # y_(pos//2 + 1) owns edges 2i and 2i+1
        if (pos // 2) % 2 == 0:
            labels[e] = low[li]
            li += 1
        else:
            labels[e] = high[hi]
            hi += 1
    return labels


def label_even_cycle(cycle: Cycle, a: int, b: int) -> dict[int, int]:
    """Label a cycle ``x1 y1 ... xk yk`` (k even) with ``[a, b]``.

    Edges at ``y1, y3, ...`` take ``a+1, a, a+2, a+3, ..., a+k-1`` in walk
    order and edges at ``y2, y4, ...`` take ``b, b-2, b-3, ..., b-k+1, b-1``.
    Every X vertex sums to ``a + b``; the Y sums are pairwise distinct.
    """
    k = cycle.half
    if k % 2:
        raise OddHalfLength(f"cycle length {cycle.length} is not divisible by 4")
    if a != b - 2 * k + 1:
        raise BadWindow(f"window [{a}, {b}] does not match cycle length {cycle.length}")
    if len(set(cycle.ys)) != len(cycle.ys):
        raise RepeatedYVertex("cycle repeats a Y vertex")
    return _cycle_streams(cycle, a, b)


def label_family(plan: DecompositionPlan, c: int, d: int) -> GadgetResult:
    """Label trails and cycles of ``H`` with ``[c, d]`` using nested windows.

    Item ``i`` (mod-2 trails, then mod-0 trails, then mod-0 cycles) gets
    ``a_i = c + sum(k_j for j < i)`` and ``b_i = d - sum(k_j for j < i)``
    where ``2 k_j`` is the length of item ``j``, so ``a_i + b_i = c + d`` and
    every X vertex of ``H`` sums to ``deg_H(x) (c + d) / 2``.  The returned
    expectations are the extra labels the caller must put on the edge outside
    ``H`` at each trail endpoint; once they are added all Y sums of ``H`` are
    pairwise distinct.
    """
    p, q = plan.p, plan.q
    for tr in plan.mod2_trails:
        if tr.closed or tr.length % 4 != 2:
            raise LengthClassViolation(f"mod-2 slot holds a trail of length {tr.length}")
    for tr in plan.mod0_trails:
        if tr.closed or tr.length % 4 != 0:
            raise LengthClassViolation(f"mod-0 slot holds a trail of length {tr.length}")
    for cy in plan.mod0_cycles:
        if cy.length % 4 != 0:
            raise LengthClassViolation(f"mod-0 cycle slot holds length {cy.length}")
    seen_y = set()
    for it in plan.items():
        ys = set(it.ys)
        if len(ys) != len(it.ys):
            raise RepeatedYVertex("item repeats a Y vertex")
        if seen_y & ys:
            raise YOverlap("items share a Y vertex")
        seen_y |= ys
    size = plan.edge_count()
    if c != d - size + 1:
        raise WindowMismatch(f"window [{c}, {d}] does not fit {size} edges")

    labels = {}
    expectations = []
    used = 0
    for i, item in enumerate(plan.items(), start=1):
        a_i, b_i = c + used, d - used
        # low stream climbs from a_i, high stream descends from b_i
        if isinstance(item, Trail):
            labels.update(_trail_streams(item, a_i, b_i))
        else:
            labels.update(_cycle_streams(item, a_i, b_i))
        if i <= p:
            expectations.append(EndpointExpectation(item.ys[0], c - 2 * p + i - 1))
            expectations.append(EndpointExpectation(item.ys[-1], c - i))
        elif i <= p + q:
            top = d + 2 * q - 2 * (i - p - 1)
            expectations.append(EndpointExpectation(item.ys[0], top))
            expectations.append(EndpointExpectation(item.ys[-1], top - 1))
        used += item.half
    return GadgetResult(labels, tuple(expectations))
