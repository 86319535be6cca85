"""
Graph library package.
Exports graph values, the codec, invariants, classification, builders and generators.
"""

from graphs.errors import (
    BadParameter,
    CodecError,
    Disconnected,
    EmptyGraph,
    GraphError,
    InvalidEdge,
    NotATree,
    SelfLoop,
    TooLarge,
    TooSmall,
    VertexOutOfRange,
)
from graphs.graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    bfs_distances,
    build_graph,
    degree,
    is_biconnected,
    is_connected,
    is_tree,
)
from graphs.codec import decode_graph6, decode_sparse6, encode_graph6, graph6_text, stream_graph6
from graphs.invariants import InvariantProfile, distance_levels, eccentric_set, profile
from graphs.classify import ClassificationReport, classify, is_center_regular_tree, ud_pairs
from graphs.construct import FamilySpec, build_from_spec, standard_family
from graphs.canonical import canonical_form, canonical_labeling
from graphs.enumeration import GeneratorConfig, connected_graphs, generate, trees

__all__ = [
    "BadParameter",
    "CodecError",
    "Disconnected",
    "EmptyGraph",
    "GraphError",
    "InvalidEdge",
    "NotATree",
    "SelfLoop",
    "TooLarge",
    "TooSmall",
    "VertexOutOfRange",
    "DistanceMatrix",
    "Graph",
    "all_pairs_distances",
    "bfs_distances",
    "build_graph",
    "degree",
    "is_biconnected",
    "is_connected",
    "is_tree",
    "decode_graph6",
    "decode_sparse6",
    "encode_graph6",
    "graph6_text",
    "stream_graph6",
    "InvariantProfile",
    "distance_levels",
    "eccentric_set",
    "profile",
    "ClassificationReport",
    "classify",
    "is_center_regular_tree",
    "ud_pairs",
    "FamilySpec",
    "build_from_spec",
    "standard_family",
    "canonical_form",
    "canonical_labeling",
    "GeneratorConfig",
    "connected_graphs",
    "generate",
    "trees",
]
