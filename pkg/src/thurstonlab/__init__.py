"""Thurston norms, exceptional Euler classes and complexity bounds for circle bundles over 3-manifolds."""

from .algebra import LaurentPoly, level_sums, newton_polytope, specialize, support_points
from .bundle import (
    Bundle4,
    ClassH2M,
    CoverDatum,
    Manifold3,
    betti_numbers,
    euler_of_cover,
    kernel_e,
    self_intersection,
    validate_cover,
)
from .exceptional import exceptional_segments, theta_test, xi_enumerate, xi_test
from .niceness import NiceStatus, face_sum_criterion, is_nice
from .norms import DualBall, alexander_dual_ball, dual_face, fibered_cone_test, thurston_norm, validate_dual_ball
from .polytope import Location, LocationKind, Polytope, Segment, edges, hull, locate, observation_check
from .swtheory import (
    BoundStatus,
    SWSupport,
    adjunction_bound,
    baldridge_average,
    basic_classes_M,
    claim_witness,
    refined_bound,
    smoothed_complexity,
    symplectic_status,
)

__version__ = "0.1.0"
