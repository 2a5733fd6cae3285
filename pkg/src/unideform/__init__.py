"""Power deformations of normalized analytic functions on the unit disk.

The package computes with truncated power series of functions f with
f(0) = 0 and f'(0) = 1, applies the power deformation z (f(z)/z)^c and its
integral relatives, reconstructs the exponent regions that keep the
deformation locally univalent, and tests class membership (starlike,
spirallike, convex, strongly spirallike) numerically on compact subgrids.
"""

from .functions import (
    AnalyticFunction,
    alexander,
    integral_deform_I,
    integral_deform_J,
    log_coordinate_phi,
    log_coordinate_psi,
    log_derivative_ratio,
    power_deform,
)
from .predicates import (
    PredicateReport,
    SampleGrid,
    boundedness_probe,
    goodman_check,
    is_convex,
    is_locally_univalent,
    is_spirallike,
    is_strongly_spirallike,
    is_univalent_numeric,
    standard_grid,
)
from .regions import (
    ClassId,
    ClassSpec,
    Disk,
    ExponentRegion,
    Segment,
    closed_form_exponent_region,
    closed_form_variability,
    complement_of_T_image,
    mobius_T,
    mobius_T_inv,
    region_boundary_points,
    region_contains,
    region_subset,
    scale_region,
    signed_distance,
)
from .sampling import SampledRegion, sampled_exponent_region, winding_number
from .series import (
    DEFAULT_ORDER,
    PowerSeries,
    evaluate,
    series_exp,
    series_from_json,
    series_log,
    series_mul,
    series_pow,
    series_to_json,
)
from .zoo import (
    ZooSpec,
    half_plane,
    identity_fn,
    koebe,
    make_named,
    parse_function_spec,
    spirallike_koebe,
    starlike_order,
    strongly_spirallike,
    strongly_starlike,
)

__version__ = "0.1.0"
