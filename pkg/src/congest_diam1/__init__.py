"""Broadcast-network simulator and constant-round protocols for
underlying-complete digraphs, with hard-instance families and
brute-force oracles."""

from .apsp3 import (
    FSequence,
    apsp3_protocol,
    estimate_distance,
    estimate_matrix,
    f_sequence_global,
    f_sequence_local,
    f_sequences_global,
    m_values,
)
from .bfs import bfs_sssp_protocol
from .engine import (
    BitBudget,
    BroadcastMessage,
    BudgetExceeded,
    RunReport,
    VertexAlgorithm,
    VertexContext,
    run,
)
from .families import (
    InstanceDescriptor,
    LabeledInstance,
    build_instance,
    enumerate_diam1_digraphs,
    expected_dist_j,
    expected_reach_f,
    gen_f,
    gen_fprime,
    gen_j,
    gen_random_diam1,
    parse_descriptor,
    random_diam1_corpus,
    validate_instance,
)
from .graph import (
    Digraph,
    DistMatrix,
    InvalidInput,
    ReachMatrix,
    degree_profile,
    is_underlying_complete,
    underlying_diameter,
)
from .messages import decode_pair, decode_uint, encode_uint, encode_width, pair_message
from .oracles import (
    apsp_oracle,
    closed_set_check,
    reach_oracle,
    reachable_from,
    sssp_oracle,
)
from .reach1 import reach1_protocol, reach_matrix_from_degrees, reachable_set_from_degrees

__all__ = [
    "BitBudget",
    "BroadcastMessage",
    "BudgetExceeded",
    "Digraph",
    "DistMatrix",
    "FSequence",
    "InstanceDescriptor",
    "InvalidInput",
    "LabeledInstance",
    "ReachMatrix",
    "RunReport",
    "VertexAlgorithm",
    "VertexContext",
    "apsp3_protocol",
    "apsp_oracle",
    "bfs_sssp_protocol",
    "build_instance",
    "closed_set_check",
    "decode_pair",
    "decode_uint",
    "degree_profile",
    "encode_uint",
    "encode_width",
    "enumerate_diam1_digraphs",
    "estimate_distance",
    "estimate_matrix",
    "expected_dist_j",
    "expected_reach_f",
    "f_sequence_global",
    "f_sequence_local",
    "f_sequences_global",
    "gen_f",
    "gen_fprime",
    "gen_j",
    "gen_random_diam1",
    "is_underlying_complete",
    "m_values",
    "pair_message",
    "parse_descriptor",
    "random_diam1_corpus",
    "reach1_protocol",
    "reach_matrix_from_degrees",
    "reach_oracle",
    "reachable_from",
    "reachable_set_from_degrees",
    "run",
    "sssp_oracle",
    "underlying_diameter",
    "validate_instance",
]
