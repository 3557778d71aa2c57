"""Intersecting set-family toolkit."""

from .classifier import (
    Embedding,
    Verdict,
    VerdictKind,
    classify_3graph,
    classify_rgraph,
    decompose_matching,
    decompose_th4prime,
    embed,
    embedding_is_valid,
)
from .constructions import (
    ConstructionError,
    ConstructionId,
    ConstructionParams,
    build_construction,
    layout_table,
    size_formula,
    special_vertices,
    validate_construction_params,
)
from .enumeration import (
    DEFAULT_CEILING,
    EnumerationFilter,
    canonical_form,
    enumerate_intersecting,
    invariant_key,
)
from .hypergraph import (
    Hypergraph,
    SetFamily,
    cover_number,
    delete_vertices,
    is_intersecting,
    link_graph,
    mask_of,
    matching_number,
    min_cover,
    vertices_of,
)
from .io import (
    ParseError,
    hypergraph_from_json,
    hypergraph_to_json,
    parse_hypergraph,
    parse_set_family,
    serialize_hypergraph,
    serialize_set_family,
    set_family_from_json,
    set_family_to_json,
)
from .kernel import (
    KernelDecomposition,
    ThresholdScheme,
    b_kernel,
    b_star,
    kernel_bound,
    kernel_invariant_violations,
    paper_r,
    paper_rs,
    reduce_to_3graph,
)
from .sunflower import Sunflower, er_bound, find_sunflower, find_sunflower_with_core
from .verify import STATEMENTS, VerificationReport, verify

__version__ = "0.1.0"

__all__ = [
    "Embedding",
    "Verdict",
    "VerdictKind",
    "classify_3graph",
    "classify_rgraph",
    "decompose_matching",
    "decompose_th4prime",
    "embed",
    "embedding_is_valid",
    "ConstructionError",
    "ConstructionId",
    "ConstructionParams",
    "build_construction",
    "layout_table",
    "size_formula",
    "special_vertices",
    "validate_construction_params",
    "DEFAULT_CEILING",
    "EnumerationFilter",
    "canonical_form",
    "enumerate_intersecting",
    "invariant_key",
    "Hypergraph",
    "SetFamily",
    "cover_number",
    "delete_vertices",
    "is_intersecting",
    "link_graph",
    "mask_of",
    "matching_number",
    "min_cover",
    "vertices_of",
    "ParseError",
    "hypergraph_from_json",
    "hypergraph_to_json",
    "parse_hypergraph",
    "parse_set_family",
    "serialize_hypergraph",
    "serialize_set_family",
    "set_family_from_json",
    "set_family_to_json",
    "KernelDecomposition",
    "ThresholdScheme",
    "b_kernel",
    "b_star",
    "kernel_bound",
    "kernel_invariant_violations",
    "paper_r",
    "paper_rs",
    "reduce_to_3graph",
    "Sunflower",
    "er_bound",
    "find_sunflower",
    "find_sunflower_with_core",
    "STATEMENTS",
    "VerificationReport",
    "verify",
]
