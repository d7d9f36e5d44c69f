"""Triangle metrics, defect area and the trigonometric identities built on them."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .disc import (
    ORIGIN,
    DiscPoint,
    angle_at,
    distance,
    geodesic_through,
    is_diameter_pair,
    mobius_to_origin,
)
from .errors import DegenerateTriangle, DomainError, InvalidSides, PointOutsideDisc


@dataclass(frozen=True)
class HyperbolicTriangle:
    a_vertex: DiscPoint
    b_vertex: DiscPoint
    c_vertex: DiscPoint

    @property
    def vertices(self) -> tuple[DiscPoint, DiscPoint, DiscPoint]:
        return self.a_vertex, self.b_vertex, self.c_vertex


@dataclass(frozen=True)
class TriangleMetrics:
    """Sides ``a = BC``, ``b = AC``, ``c = AB``, the opposite angles and the defect."""

    side_a: float
    side_b: float
    side_c: float
    angle_alpha: float
    angle_beta: float
    angle_gamma: float
    defect: float

    @property
    def area(self) -> float:
        return self.defect


def _on_one_geodesic(p: DiscPoint, q: DiscPoint, r: DiscPoint) -> bool:
    # move p to the origin: the other two then lie on one geodesic iff on one diameter
    to_origin = mobius_to_origin(p)
    return is_diameter_pair(to_origin(q), to_origin(r))


def measure(t: HyperbolicTriangle) -> TriangleMetrics:
    A, B, C = t.vertices
    if A == B or B == C or A == C:
        raise DegenerateTriangle("triangle has coincident vertices")
    if _on_one_geodesic(A, B, C):
        raise DegenerateTriangle("triangle vertices lie on one geodesic")
    alpha = angle_at(A, geodesic_through(A, B), geodesic_through(A, C))
    beta = angle_at(B, geodesic_through(B, C), geodesic_through(B, A))
    gamma = angle_at(C, geodesic_through(C, A), geodesic_through(C, B))
    defect = math.pi - (alpha + beta + gamma)
    if not defect > 0:
        raise DegenerateTriangle(f"non-positive defect {defect!r}")
    return TriangleMetrics(
        side_a=distance(B, C),
        side_b=distance(A, C),
        side_c=distance(A, B),
        angle_alpha=alpha,
        angle_beta=beta,
        angle_gamma=gamma,
        defect=defect,
    )


def _check_sides_and_angle(b: float, c: float, alpha: float) -> None:
    if not (b > 0 and c > 0 and math.isfinite(b) and math.isfinite(c)):
        raise InvalidSides(f"sides must be positive and finite, got b={b}, c={c}")
    if not 0.0 < alpha < math.pi:
        raise DomainError(f"angle must lie in (0, pi), got {alpha}")


def side_from_cosine_theorem(b: float, c: float, alpha: float) -> float:
    """Third side opposite ``alpha``: ch a = ch b ch c - sh b sh c cos alpha.

    Evaluated in the equivalent half-angle form
    sh^2(a/2) = sh^2((b - c)/2) + sh b sh c sin^2(alpha/2), which keeps full
    relative precision for short sides where arcosh is ill-conditioned.
    """
    _check_sides_and_angle(b, c, alpha)
    half = math.sinh(0.5 * (b - c)) ** 2 + math.sinh(b) * math.sinh(c) * math.sin(0.5 * alpha) ** 2
    if not half >= 0.0:
        raise DomainError(f"cosine theorem produced an invalid value {half!r}")
    return 2.0 * math.asinh(math.sqrt(half))


def area_from_sides_and_angle(b: float, c: float, alpha: float) -> float:
    """Area from two sides and the included angle.

    cot(S/2) = (coth(b/2) coth(c/2) - cos alpha) / sin alpha, with S/2 in (0, pi/2).
    """
    _check_sides_and_angle(b, c, alpha)
    num = math.sin(alpha)
    den = 1.0 / (math.tanh(0.5 * b) * math.tanh(0.5 * c)) - math.cos(alpha)
    return 2.0 * math.atan2(num, den)


def place_triangle(b: float, c: float, alpha: float) -> HyperbolicTriangle:
    """Canonical placement: A at the origin, B on the positive x-axis, angle alpha at A."""
    _check_sides_and_angle(b, c, alpha)
    rb, rc = math.tanh(0.5 * b), math.tanh(0.5 * c)
    try:
        B = DiscPoint(rc, 0.0)
        C = DiscPoint(rb * math.cos(alpha), rb * math.sin(alpha))
    except PointOutsideDisc as exc:
        raise InvalidSides(f"sides b={b}, c={c} cannot be realized in the disc") from exc
    return HyperbolicTriangle(ORIGIN, B, C)
