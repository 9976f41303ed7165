"""Case drivers that assemble a full antimagic orientation.

Every driver works on the canonical graph (X-degree ``s`` >= Y-degree
``t``), returns an ``(Orientation, Labeling)`` pair and checks it with the
verifier before handing it back.  Formulas are written with 1-based ``i`` to
keep them readable; vertex and edge ids stay 0-based.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass

from .decomposition import (
    Cycle,
    DecompositionPlan,
    Matching,
    Trail,
    TwoFactor,
    classify_and_order,
    cycle_decomposition,
    open_trail_decomposition,
    suppress_degree_two,
    two_factor,
    x_saturating_matching,
)
from .errors import ConstructionFailed, WrongCase
from .gadgets import label_family, label_two_regular
from .graph import (
    BipartiteGraph,
    GraphProfile,
    LabelWindow,
    Labeling,
    Orientation,
    canonicalize,
)
from .verify import VerifyReport, verify_labeling


class CaseTag(enum.Enum):
    T1 = "T1"
    T_GE3_ODD = "T_GE3_ODD"
    T_GE3_EVEN = "T_GE3_EVEN"
    T2_S_ODD = "T2_S_ODD"
    T2_S2 = "T2_S2"
    T2_S4 = "T2_S4"
    T2_S_GE6 = "T2_S_GE6"

    def __str__(self):
        return self.value


def case_tag(profile: GraphProfile) -> CaseTag:
    s, t = profile.s, profile.t
    if t == 1:
        return CaseTag.T1
    if t >= 3:
        return CaseTag.T_GE3_ODD if t % 2 else CaseTag.T_GE3_EVEN
    if s % 2:
        return CaseTag.T2_S_ODD
    if s == 2:
        return CaseTag.T2_S2
    return CaseTag.T2_S4 if s == 4 else CaseTag.T2_S_GE6


def _finish(graph, dirs, labels, what) -> tuple[Orientation, Labeling]:
    if any(v is None for v in labels):
        missing = [e for e, v in enumerate(labels) if v is None]
        raise ConstructionFailed(f"{what}: edges left unlabeled {missing[:10]}")
    orientation, labeling = Orientation(dirs), Labeling(labels)
    report = verify_labeling(graph, orientation, labeling)
    if not report.ok:
        raise ConstructionFailed(f"{what}: {report.summary()}", report)
    return orientation, labeling


def _check_profile(profile, ok, what):
    if not ok:
        raise WrongCase(f"{what} cannot handle s={profile.s}, t={profile.t}")


# ---------------------------------------------------------------------------
# t = 1


def case_t1(graph: BipartiteGraph, profile: GraphProfile) -> tuple[Orientation, Labeling]:
    """Disjoint stars: the edges of ``x_i`` take ``s(i-1)+1 .. si``."""
    _check_profile(profile, profile.t == 1, "case_t1")
    s = profile.s
    labels = [None] * graph.edge_count
    for x, inc in enumerate(graph.x_incident):
        for j, e in enumerate(inc, start=1):
            labels[e] = s * x + j
    return _finish(graph, [True] * graph.edge_count, labels, "case_t1")


# ---------------------------------------------------------------------------
# t >= 3


def _matched_row_labels(t: int, m: int, i: int) -> list[int]:
    """Labels of the ``t - 1`` non-matching edges at the ``i``-th matched y."""
    if t % 2:
        row = []
        for k in range(1, (t - 1) // 2 + 1):
            row += [(2 * k - 1) * m + i, (2 * k + 1) * m - i + 1]
        return row
    row = [2 * i - 1, 3 * m - i + 1, 4 * m - i + 1]
    for k in range(2, (t - 2) // 2 + 1):
        row += [2 * k * m + i, (2 * k + 2) * m - i + 1]
    return row


def case_t_ge3(
    graph: BipartiteGraph, profile: GraphProfile, matching: Matching | None = None
) -> tuple[Orientation, Labeling]:
    """All edges X to Y.

    The matched Y vertices get constant-sum label rows on ``G - M``, the
    unmatched ones consecutive blocks of ``t`` labels above ``tm``.  X is
    then ranked by its ``G - M`` sum and the ``r``-th vertex's matching
    edge gets ``r`` (t odd) or ``2r`` (t even).
    """
    _check_profile(profile, profile.t >= 3, "case_t_ge3")
    t, m = profile.t, profile.m
    if matching is None:
        matching = x_saturating_matching(graph, profile)
    in_m = set(matching.pairs)
    matched_y = sorted(graph.edges[e][1] for e in matching.pairs)
    matched_set = set(matched_y)
    unmatched_y = [y for y in range(graph.y_count) if y not in matched_set]

    labels = [None] * graph.edge_count
    for i, y in enumerate(matched_y, start=1):
        h_edges = [e for e in graph.y_incident[y] if e not in in_m]
        for e, lab in zip(h_edges, _matched_row_labels(t, m, i)):
            labels[e] = lab
    for j, y in enumerate(unmatched_y):
        base = t * m + t * j
        for k, e in enumerate(graph.y_incident[y], start=1):
            labels[e] = base + k

    h_sum = [0] * graph.x_count
    for e, lab in enumerate(labels):
        if lab is not None:
            h_sum[graph.edges[e][0]] += lab
    order = sorted(range(graph.x_count), key=lambda x: (h_sum[x], x))
    step = 1 if t % 2 else 2
    m_edge_of_x = {graph.edges[e][0]: e for e in matching.pairs}
    for r, x in enumerate(order, start=1):
        labels[m_edge_of_x[x]] = step * r
    return _finish(graph, [True] * graph.edge_count, labels, "case_t_ge3")


# ---------------------------------------------------------------------------
# t = 2, s odd


def _even_component(graph: BipartiteGraph, rest: list[int]):
    """First component of ``rest`` without a degree-1 Y vertex, as a vertex set."""
    off = graph.x_count
    adj = defaultdict(list)
    for e in rest:
        x, y = graph.edges[e]
        adj[x].append(off + y)
        adj[off + y].append(x)
    seen = set()
    for v in sorted(adj):
        if v in seen:
            continue
        comp, stack = {v}, [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        if not any(u >= off and len(adj[u]) == 1 for u in comp):
            return comp
    return None


def repair_matching(graph: BipartiteGraph, matching: Matching) -> Matching:
    """Swap matching edges until every component of ``G - M`` has a degree-1 Y vertex.

    For an offending component K, its lowest X vertex ``x`` trades its
    matching edge for its lowest ``G - M`` edge ``xy`` inside K.  K loses no
    connectivity (an all-even graph has no bridge) and gains the odd vertex
    ``y``, so the number of offending components drops by one each round.
    """
    pairs = list(matching.pairs)
    while True:
        in_m = set(pairs)
        rest = [e for e in range(graph.edge_count) if e not in in_m]
        comp = _even_component(graph, rest)
        if comp is None:
            return Matching(tuple(pairs))
        x = min(v for v in comp if v < graph.x_count)
        e_new = next(e for e in graph.x_incident[x] if e not in in_m)
        # y of e_new has degree 2 in G - M, so it was unmatched
        pairs[next(i for i, e in enumerate(pairs) if graph.edges[e][0] == x)] = e_new


def t2_s_odd_layout(
    graph: BipartiteGraph, profile: GraphProfile, matching: Matching | None = None
) -> tuple[Matching, DecompositionPlan]:
    """Repaired matching and the trail plan of ``G - M`` used by :func:`case_t2_s_odd`."""
    if matching is None:
        matching = x_saturating_matching(graph, profile)
    matching = repair_matching(graph, matching)
    in_m = set(matching.pairs)
    rest = [e for e in range(graph.edge_count) if e not in in_m]
    trails = open_trail_decomposition(graph, rest, allow_closed=False)
    return matching, classify_and_order(trails)


def case_t2_s_odd(
    graph: BipartiteGraph, profile: GraphProfile, matching: Matching | None = None
) -> tuple[Orientation, Labeling]:
    """All edges X to Y; ``G - M`` splits into ``m/2`` open trails labeled as a family
    with ``(c, d) = (2p+1, sm-2q)``, and each matching edge gets the increment
    its Y endpoint expects."""
    _check_profile(profile, profile.t == 2 and profile.s % 2 == 1, "case_t2_s_odd")
    s, m = profile.s, profile.m
    matching, plan = t2_s_odd_layout(graph, profile, matching)
    res = label_family(plan, 2 * plan.p + 1, s * m - 2 * plan.q)

    labels = [None] * graph.edge_count
    for e, lab in res.labels.items():
        labels[e] = lab
    m_edge_of_y = {graph.edges[e][1]: e for e in matching.pairs}
    for ex in res.endpoint_expectations:
        labels[m_edge_of_y[ex.y]] = ex.increment
    return _finish(graph, [True] * graph.edge_count, labels, "case_t2_s_odd")


# ---------------------------------------------------------------------------
# t = 2, s even


def _six_edges(c: Cycle) -> dict[str, int]:
    """Designated edges of a cycle ``x1 y1 ... xk yk`` (k odd, k >= 3)."""
    k = c.half
    e = c.edges
    return {
        "x1y1": e[0],
        "y1x2": e[1],
        "x2y2": e[2],
        "xkyk-1": e[2 * k - 3],
        "ykxk": e[2 * k - 2],
        "x1yk": e[2 * k - 1],
    }


def _inner_path(c: Cycle) -> Trail | None:
    """The trail ``y2 x3 ... x(k-1) y(k-1)`` left after removing the designated edges."""
    k = c.half
    if k < 5:
        return None
    edges = c.edges[3 : 2 * k - 3]
    ys = c.ys[1 : k - 1]
    xs = c.xs[2 : k - 1]
    return Trail(tuple(edges), tuple(ys), tuple(xs))


@dataclass(frozen=True)
class EvenLayout:
    """Pieces of the even-``s`` construction.

    ``mod2_cycles`` are the cycles of ``G - E(F)`` of length 2 mod 4 with the
    6-cycles first; ``paths[j]`` is the inner path of the ``j``-th longer
    one, in the same order.
    """

    factor: TwoFactor
    mod2_cycles: tuple[Cycle, ...]
    paths: tuple[Trail, ...]
    mod0_cycles: tuple[Cycle, ...]


def t2_s_even_layout(graph: BipartiteGraph, profile: GraphProfile) -> EvenLayout:
    factor = two_factor(suppress_degree_two(graph, profile))
    f_set = set(factor.edge_ids)
    rest = [e for e in range(graph.edge_count) if e not in f_set]
    plan = classify_and_order(cycles=list(cycle_decomposition(graph, rest)))
    six = [c for c in plan.mod2_cycles if c.half == 3]
    longer = [c for c in plan.mod2_cycles if c.half > 3]
    paths = tuple(_inner_path(c) for c in longer)
    return EvenLayout(factor, tuple(six + longer), paths, plan.mod0_cycles)


def case_t2_s_even(graph: BipartiteGraph, profile: GraphProfile) -> tuple[Orientation, Labeling]:
    """Even ``s`` with ``t = 2``.

    ``s = 2``: the graph is a union of even cycles, labeled directly.
    Otherwise a 2-factor F takes the top ``2m`` labels; ``G - E(F)`` is cut
    into cycles, six edges of every cycle of length 2 mod 4 are pre-labeled
    from both ends of the remaining window, and what is left (paths of
    length 0 mod 4 and cycles of length 0 mod 4) is labeled as a family.
    """
    s, m = profile.s, profile.m
    _check_profile(profile, profile.t == 2 and s % 2 == 0, "case_t2_s_even")
    E = graph.edge_count
    if s == 2:
        cycles = cycle_decomposition(graph, range(E))
        res = label_two_regular(cycles, LabelWindow(1, E))
        labels = [None] * E
        for e, lab in res.labels.items():
            labels[e] = lab
        return _finish(graph, [True] * E, labels, "case_t2_s_even")

    lay = t2_s_even_layout(graph, profile)
    mod2, h = lay.mod2_cycles, len(lay.mod2_cycles)
    top = (s - 2) * m

    labels = [None] * E
    dirs = [True] * E
    for i, c in enumerate(mod2, start=1):
        d6 = _six_edges(c)
        if s == 4:
            pre = {
                "x1y1": i,
                "x1yk": 2 * m - i + 1,
                "y1x2": h + 2 * i - 1,
                "ykxk": h + 2 * i,
                "x2y2": 2 * m + 2 - h - 2 * i,
                "xkyk-1": 2 * m + 1 - h - 2 * i,
            }
            dirs[d6["x1y1"]] = dirs[d6["x1yk"]] = False
        else:
            pre = {
                "x1y1": i,
                "x1yk": h + i,
                "y1x2": 2 * h + 2 * i - 1,
                "ykxk": 2 * h + 2 * i,
                "x2y2": top - 2 * i + 2,
                "xkyk-1": top + 1 - 2 * i,
            }
            dirs[d6["x1y1"]] = False
        for name, lab in pre.items():
            labels[d6[name]] = lab

    plan = DecompositionPlan(mod0_trails=lay.paths, mod0_cycles=lay.mod0_cycles)
    if s == 4:
        c, d = 3 * h + 1, 2 * m - 3 * h
    else:
        c, d = 4 * h + 1, top - 2 * h
    res = label_family(plan, c, d)
    for e, lab in res.labels.items():
        labels[e] = lab

    f_cycles = cycle_decomposition(graph, lay.factor.edge_ids)
    res_f = label_two_regular(f_cycles, LabelWindow(top + 1, s * m))
    for e, lab in res_f.labels.items():
        labels[e] = lab
    return _finish(graph, dirs, labels, "case_t2_s_even")


# ---------------------------------------------------------------------------
# dispatch


def antimagic_orientation(graph: BipartiteGraph) -> tuple[Orientation, Labeling, CaseTag, VerifyReport]:
    """Antimagic orientation and labeling of any biregular bipartite graph.

    The returned orientation refers to the sides of ``graph`` as given, even
    when the construction ran on the side-swapped copy.
    """
    canon, profile = canonicalize(graph)
    tag = case_tag(profile)
    if tag is CaseTag.T1:
        orientation, labeling = case_t1(canon, profile)
    elif tag in (CaseTag.T_GE3_ODD, CaseTag.T_GE3_EVEN):
        orientation, labeling = case_t_ge3(canon, profile)
    elif tag is CaseTag.T2_S_ODD:
        orientation, labeling = case_t2_s_odd(canon, profile)
    else:
        orientation, labeling = case_t2_s_even(canon, profile)
    if profile.swapped:
        # edge ids are shared; only the meaning of "X to Y" flips
        orientation = Orientation(tuple(not d for d in orientation.x_to_y))
    report = verify_labeling(graph, orientation, labeling)
    if not report.ok:
        raise ConstructionFailed(f"case {tag}: {report.summary()}", report)
    return orientation, labeling, tag, report
