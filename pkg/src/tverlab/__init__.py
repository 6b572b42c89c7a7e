"""Exact rational toolkit for Tukey depth, Tverberg partitions, Z2 index
computations, and simplex covering certificates."""

from .complexes import (
    BarycentricComplex,
    PLMapSpec,
    Realization,
    SimplicialComplex,
    barycenter,
    barycentric_subdivision,
    cone,
    faces_of_simplex,
    full_simplex,
    pl_image_of_face,
    pl_value,
    realize_standard,
    realize_subdivision,
    simplex,
    skeleton,
    squaring_map,
    standard_center,
)
from .conemap import (
    CounterexampleSpec,
    IsolationFailure,
    IsolationReport,
    ProbeResult,
    build_counterexample,
    enumerate_disjoint_tuples,
    probe_tverberg_plus_one,
    verify_isolation,
)
from .cover import (
    CoverCertificate,
    FiberReport,
    HPolytopeBody,
    UnboundedBodyError,
    barycentric_to_centered,
    constant_map,
    coordinate_projection_map,
    facet_touching_check,
    fiber_width_demo,
    grid_points_in_simplex,
    h_polytope,
    interval_body,
    min_cover_homothety,
    standard_simplex_body,
)
from .depth import (
    DepthCertificate,
    PointConfig,
    ReductionPlan,
    TverbergCertificate,
    centerpoint,
    check_depth_certificate,
    check_tverberg_certificate,
    guaranteed_size,
    hull_membership_depth,
    iter_partitions,
    point_config,
    random_point_config,
    reduce_central_from_tverberg,
    reduction_plan,
    tukey_depth,
    tverberg_partition,
)
from .exactlp import (
    EQ,
    INFEASIBLE,
    LE,
    OPTIMAL,
    UNBOUNDED,
    FarkasCertificate,
    LinearSystem,
    LPOutcome,
    VPolytope,
    check_dual_bound,
    check_farkas,
    check_witness,
    common_point_with_weights,
    eq,
    in_convex_hull,
    le,
    lp_feasible,
    lp_minimize,
    polytopes_common_point,
    strict_separator,
    strictly_separable,
)
from .rationals import Rational, parse_point, point, point_strs, rat, rat_str
from .rng import SplitMix64, rational_sphere_point
from .z2 import (
    F2Cochain,
    FixedSimplexError,
    Z2Complex,
    characteristic_cocycle,
    cross_polytope_sphere,
    cup_power,
    disjoint_union_index,
    hind,
    is_coboundary,
    quotient,
    subdivide_z2,
    z2_disjoint_union,
)

__version__ = "0.1.0"

__all__ = [
    "BarycentricComplex",
    "CounterexampleSpec",
    "CoverCertificate",
    "DepthCertificate",
    "EQ",
    "F2Cochain",
    "FarkasCertificate",
    "FiberReport",
    "FixedSimplexError",
    "HPolytopeBody",
    "INFEASIBLE",
    "IsolationFailure",
    "IsolationReport",
    "LE",
    "LPOutcome",
    "LinearSystem",
    "OPTIMAL",
    "PLMapSpec",
    "PointConfig",
    "ProbeResult",
    "Rational",
    "Realization",
    "ReductionPlan",
    "SimplicialComplex",
    "SplitMix64",
    "TverbergCertificate",
    "UNBOUNDED",
    "UnboundedBodyError",
    "VPolytope",
    "Z2Complex",
    "barycenter",
    "barycentric_subdivision",
    "barycentric_to_centered",
    "build_counterexample",
    "centerpoint",
    "characteristic_cocycle",
    "check_depth_certificate",
    "check_dual_bound",
    "check_farkas",
    "check_tverberg_certificate",
    "check_witness",
    "common_point_with_weights",
    "cone",
    "constant_map",
    "coordinate_projection_map",
    "cross_polytope_sphere",
    "cup_power",
    "disjoint_union_index",
    "enumerate_disjoint_tuples",
    "eq",
    "faces_of_simplex",
    "facet_touching_check",
    "fiber_width_demo",
    "full_simplex",
    "grid_points_in_simplex",
    "guaranteed_size",
    "h_polytope",
    "hind",
    "hull_membership_depth",
    "in_convex_hull",
    "interval_body",
    "is_coboundary",
    "iter_partitions",
    "le",
    "lp_feasible",
    "lp_minimize",
    "min_cover_homothety",
    "parse_point",
    "pl_image_of_face",
    "pl_value",
    "point",
    "point_config",
    "point_strs",
    "polytopes_common_point",
    "probe_tverberg_plus_one",
    "quotient",
    "random_point_config",
    "rat",
    "rat_str",
    "rational_sphere_point",
    "realize_standard",
    "realize_subdivision",
    "reduce_central_from_tverberg",
    "reduction_plan",
    "simplex",
    "skeleton",
    "squaring_map",
    "standard_center",
    "standard_simplex_body",
    "strict_separator",
    "strictly_separable",
    "subdivide_z2",
    "tukey_depth",
    "tverberg_partition",
    "verify_isolation",
    "z2_disjoint_union",
]
