"""Space families: surfaces, graph-defined groups, and known spaces."""

from rgood.families.graphs import (
    AbelianFreeRank,
    BestvinaBradyOutcome,
    LabeledArtinGraph,
    SimpleGraph,
    TriState,
    TwoComplex,
    VeryLargeWitness,
    artin_even_witness,
    artin_presentation,
    bestvina_brady_rule,
    complex_pi1_presentation,
    flag_two_skeleton,
    format_graph,
    parse_artin_graph,
    parse_graph,
    raag_presentation,
    raag_rule,
    simply_connected_status,
)
from rgood.families.known import KnownSpace, canonical_tag, known_space, known_space_verdict
from rgood.families.surfaces import SurfaceDescriptor, surface_presentation

__all__ = [
    "AbelianFreeRank",
    "BestvinaBradyOutcome",
    "KnownSpace",
    "LabeledArtinGraph",
    "SimpleGraph",
    "SurfaceDescriptor",
    "TriState",
    "TwoComplex",
    "VeryLargeWitness",
    "artin_even_witness",
    "artin_presentation",
    "bestvina_brady_rule",
    "canonical_tag",
    "complex_pi1_presentation",
    "flag_two_skeleton",
    "format_graph",
    "known_space",
    "known_space_verdict",
    "parse_artin_graph",
    "parse_graph",
    "raag_presentation",
    "raag_rule",
    "simply_connected_status",
    "surface_presentation",
]
