"""qmut: a quiver-mutation laboratory.

Mutation of quivers with frozen vertices (icebound arrows included),
canonical forms and isomorphism, bounded mutation-class search, hardness
reduction gadgets certified against classical oracles, and the exact
dynamics of two-mutable-vertex quivers.
"""

from .canonical import canonical_form, canonical_key, is_isomorphic
from .documents import (
    parse_quiver,
    quiver_from_document,
    quiver_to_document,
    serialize_quiver,
)
from .dynamics import (
    AltState,
    ConjectureReport,
    DynamicsTrace,
    Growth,
    alt_orbit,
    alt_state_from_quiver,
    build_path_quiver,
    classify_growth,
    closed_form_step,
    conjecture_scan,
    has_nontrivial_start,
    orbit_size,
    ratio_fixed_point_map,
    ratio_limit_check,
    ratio_target,
)
from .explore import (
    ISOMORPHISM,
    LABELED,
    CollectPairMultiplicities,
    ExplorationReport,
    NoIcebound,
    PairExactlyK,
    SearchLimits,
    commuting_orbit,
    explore,
)
from .gadgets import (
    SubsetSumInstance,
    X3CInstance,
    build_subset_sum_gadget,
    build_x3c_gadget,
    decide_icebound_free_via_gadget,
    decide_k_via_gadget,
    gadget_form,
    parse_subset_sum_text,
    parse_x3c_text,
    subset_sum_oracle,
    x3c_oracle,
)
from .quiver import Quiver, example_five_vertex, new_quiver
from . import errors

__all__ = [
    "AltState",
    "CollectPairMultiplicities",
    "ConjectureReport",
    "DynamicsTrace",
    "ExplorationReport",
    "Growth",
    "ISOMORPHISM",
    "LABELED",
    "NoIcebound",
    "PairExactlyK",
    "Quiver",
    "SearchLimits",
    "SubsetSumInstance",
    "X3CInstance",
    "alt_orbit",
    "alt_state_from_quiver",
    "build_path_quiver",
    "build_subset_sum_gadget",
    "build_x3c_gadget",
    "canonical_form",
    "canonical_key",
    "classify_growth",
    "closed_form_step",
    "commuting_orbit",
    "conjecture_scan",
    "decide_icebound_free_via_gadget",
    "decide_k_via_gadget",
    "errors",
    "example_five_vertex",
    "explore",
    "gadget_form",
    "has_nontrivial_start",
    "is_isomorphic",
    "new_quiver",
    "orbit_size",
    "parse_quiver",
    "parse_subset_sum_text",
    "parse_x3c_text",
    "quiver_from_document",
    "quiver_to_document",
    "ratio_fixed_point_map",
    "ratio_limit_check",
    "ratio_target",
    "serialize_quiver",
    "subset_sum_oracle",
    "x3c_oracle",
]

__version__ = "0.1.0"
