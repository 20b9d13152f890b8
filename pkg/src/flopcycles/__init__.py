"""Exceptional-curve combinatorics of three-dimensional nonsingular flops.

ADE configurations of (-2)-curves, their fundamental cycles, marked diagrams
with their length, partial resolutions, and the length-by-length case
analysis that pins down the singularity of a general hyperplane section.
"""

from .dynkin import (
    ADEType,
    CurveConfiguration,
    Cycle,
    InvalidRankError,
    NotADEError,
    build_ade,
    classify_tree,
    delete_vertex,
    intersection_matrix,
    is_negative_definite,
    pairing,
)
from .fundamental_cycle import (
    ComputationTrace,
    brute_force_fundamental_cycle,
    fundamental_cycle_closed_form,
    laufer_fundamental_cycle,
)
from .flop_model import (
    MarkedDiagram,
    PartialResolution,
    SectionData,
    attachment_points,
    d_multiplicity,
    end_component_multiplicities,
    enumerate_marked,
    mark,
    partial_resolution,
)
from .classifier import (
    ClassificationReport,
    InferenceRule,
    THEOREM_TABLE,
    classify,
    verify_all,
    verify_proof_facts,
    verify_uniqueness,
)

__version__ = "0.1.0"
