"""Antimagic orientations of biregular bipartite graphs."""

from .construction import (
    CaseTag,
    antimagic_orientation,
    case_t1,
    case_t2_s_even,
    case_t2_s_odd,
    case_t_ge3,
    case_tag,
)
from .errors import AntimagicError, ConstructionFailed, Infeasible, NotBiregular
from .graph import (
    BipartiteGraph,
    GraphProfile,
    Labeling,
    LabelWindow,
    Orientation,
    VertexSums,
    canonicalize,
    oriented_vertex_sums,
    parse_graph,
    read_graph,
    validate_and_profile,
    write_graph,
)
from .verify import VerifyReport, brute_force_oracle, verify_labeling

__all__ = [
    "AntimagicError",
    "BipartiteGraph",
    "CaseTag",
    "ConstructionFailed",
    "GraphProfile",
    "Infeasible",
    "LabelWindow",
    "Labeling",
    "NotBiregular",
    "Orientation",
    "VerifyReport",
    "VertexSums",
    "antimagic_orientation",
    "brute_force_oracle",
    "canonicalize",
    "case_t1",
    "case_t2_s_even",
    "case_t2_s_odd",
    "case_t_ge3",
    "case_tag",
    "oriented_vertex_sums",
    "parse_graph",
    "read_graph",
    "validate_and_profile",
    "verify_labeling",
    "write_graph",
]
