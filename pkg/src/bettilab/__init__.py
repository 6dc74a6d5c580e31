"""Exact graded Betti diagrams of edge ideals of the cycle-deleted
Generalized Andrasfai family, with closed-form oracles and a verification CLI."""

from .graphs import (
    GAParams,
    Graph,
    IntervalDecomposition,
    circulant,
    count_induced_complete_bipartite,
    enumerate_induced_matchings,
    ga_prime,
    generalized_andrasfai,
    induced_matching_number,
    intervals,
    remove_cycle_edges,
    vertex_connectivity,
)
from .complexes import SimplicialComplex, independence_complex
from .homology import (
    GF2,
    FieldSpec,
    HomologyProfile,
    boundary_matrix,
    independence_profile,
    join_profile,
    mayer_vietoris_check,
    rank_gf2,
    rank_mod_p,
    reduce_dominated_vertex,
    reduce_pendant,
    reduced_homology,
)
from .hochster import (
    BettiDiagram,
    DiagramShape,
    diagram_shape,
    dual_betti_via_links,
    hochster_betti,
    linear_strand_rvt,
    main_diagonal_katzman,
    projective_dimension,
    regularity,
    stanley_reisner_betti,
)
from . import formulas
from .verify import CheckResult, conjecture_report, undeleted_check, verify_instance

__version__ = "0.1.0"
