"""Maximum-area triangles with two fixed sides in the Poincare disc."""

from .disc import (
    ORIGIN,
    Arc,
    Diameter,
    DiscAutomorphism,
    DiscPoint,
    Geodesic,
    HyperbolicCircle,
    InversePoint,
    angle_at,
    circumcenter,
    distance,
    geodesic_through,
    hyperbolic_circle_realization,
    hyperbolic_midpoint,
    invert_in_absolute,
    mobius_to_origin,
    point_along,
)
from .errors import (
    ChordMisses,
    CollinearPoints,
    DegenerateInput,
    DegenerateTriangle,
    DomainError,
    GeometryError,
    InvalidInput,
    InvalidSides,
    NoCompactCircumcircle,
    PointNotOnChord,
    PointNotOnGeodesic,
    PointOutsideDisc,
)
from .isoperimetric import (
    RegularPolygonSpec,
    circle_area_for_perimeter,
    reflection_step_check,
    regular_polygon,
)
from .max_area import (
    MaxAreaSolution,
    alpha_star_surface,
    brute_force_optimum,
    check_conditions,
    construct,
    euclidean_limit_report,
)
from .shvartsman import (
    EqualAreaChord,
    area_on_chord,
    chord_for_angle,
    max_angle_for_point,
)
from .triangle import (
    HyperbolicTriangle,
    TriangleMetrics,
    area_from_sides_and_angle,
    measure,
    place_triangle,
    side_from_cosine_theorem,
)

__version__ = "0.1.0"
