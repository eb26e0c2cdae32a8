"""Exact computation of torus-action GIT quotients as toric varieties."""

from .cones import (
    Cone,
    Fan,
    FanViolation,
    Polytope,
    UnimodularAffineMap,
    cone_contains,
    dual_cone,
    faces,
    is_strongly_convex,
    lattice_equivalent,
    make_cone,
    make_fan,
    normal_fan,
    polytope_from_points,
    polytope_lattice_points,
    validate_fan,
)
from .errors import (
    DimensionMismatch,
    EmptyGeneratorList,
    LatticeModeUnsupported,
    NotFullDimensional,
    NotStronglyConvex,
    ProblemFileError,
    ToricGITError,
    UnboundedPolytope,
    UnboundedSolutionSet,
    ZeroTorusEntry,
)
from .lattice import hermite_normal_form, integer_kernel, solve_diophantine
from .polyhedra import enumerate_nonneg_solutions, lattice_points
from .quotient import (
    ActionData,
    ChamberReport,
    GradedMonomial,
    LatticeCoset,
    QuotientReport,
    SweepResult,
    UnstableLocus,
    build_report,
    chamber_test,
    check_invariance,
    graded_monomials,
    identify_wps,
    invariant_ring,
    make_action,
    quotient_fan,
    quotient_polytope,
    sweep,
    unstable_locus,
)
from .semigroups import (
    HilbertBasisResult,
    LatticeIsomorphism,
    MonomialAlgebra,
    UnboundedSlice,
    chart_ring,
    hilbert_basis,
    make_algebra,
    monomial_isomorphic,
    monomial_string,
    semigroup_contains,
)
from .wps import WeightVector, is_well_formed, make_weights, wps_action, wps_polytope

__version__ = "0.1.0"
