"""Exact independence, vertex cover and matching numbers for named graph
families, with a verifier for Nordhaus-Gaddum style sum/product claims."""

from .claims import (
    REGISTRY,
    ClaimOutcome,
    VerificationReport,
    evaluate_claim,
    list_claims,
    nordhaus_gaddum,
    sweep,
)
from .families import Family, FamilySpec, parse_family_spec
from .graph import (
    Graph,
    GraphFormatError,
    complement,
    decode_graph6,
    disjoint_union,
    encode_graph6,
    from_edge_list,
    join,
    line_graph,
    to_dot,
)
from .invariants import (
    InvariantReport,
    SolverGuardError,
    alpha_bruteforce,
    alpha_exact,
    beta,
    has_perfect_matching,
    invariant_report,
    matching_number,
    matching_via_line_graph,
)

__version__ = "0.1.0"
