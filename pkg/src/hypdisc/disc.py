"""Primitives of the Poincare disc model.

Points are stored as Euclidean coordinates inside the open unit disc.  All
maps and constructions work on complex numbers internally, since disc
automorphisms are most naturally written as Moebius transformations.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

from .errors import (
    CollinearPoints,
    DegenerateInput,
    NoCompactCircumcircle,
    PointNotOnGeodesic,
    PointOutsideDisc,
)

ALGEBRAIC_TOL = 1e-12
GEOMETRIC_TOL = 1e-9
# points closer than this to the absolute are rejected
BOUNDARY_MARGIN = 1e-9


@dataclass(frozen=True)
class DiscPoint:
    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise PointOutsideDisc(f"non-finite coordinates ({self.x}, {self.y})")
        if math.hypot(self.x, self.y) > 1.0 - BOUNDARY_MARGIN:
            raise PointOutsideDisc(
                f"({self.x}, {self.y}) is not strictly inside the absolute"
            )

    @classmethod
    def from_complex(cls, z: complex) -> "DiscPoint":
        return cls(z.real, z.imag)

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @property
    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def __iter__(self):
        yield self.x
        yield self.y


ORIGIN = DiscPoint(0.0, 0.0)


@dataclass(frozen=True)
class InversePoint:
    """Image of an interior point under inversion in the absolute."""

    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not math.hypot(self.x, self.y) > 1.0:
            raise DegenerateInput(f"({self.x}, {self.y}) is not outside the absolute")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @property
    def norm(self) -> float:
        return math.hypot(self.x, self.y)


@dataclass(frozen=True)
class Diameter:
    """Geodesic through the origin, oriented along ``direction``."""

    direction: tuple[float, float]

    def __post_init__(self):
        dx, dy = (float(v) for v in self.direction)
        if abs(math.hypot(dx, dy) - 1.0) > ALGEBRAIC_TOL:
            raise DegenerateInput("diameter direction must be a unit vector")
        object.__setattr__(self, "direction", (dx, dy))


@dataclass(frozen=True)
class Arc:
    """Geodesic on a Euclidean circle orthogonal to the absolute.

    ``ccw`` records the direction of travel around ``center``.
    """

    center: tuple[float, float]
    radius: float
    ccw: bool = True

    def __post_init__(self):
        cx, cy = (float(v) for v in self.center)
        object.__setattr__(self, "center", (cx, cy))
        object.__setattr__(self, "radius", float(self.radius))
        if not self.radius > 0:
            raise DegenerateInput("arc radius must be positive")
        # relative slack: rounding in |c|^2 - r^2 scales with |c|^2
        slack = ALGEBRAIC_TOL * max(1.0, cx * cx + cy * cy)
        if abs(cx * cx + cy * cy - self.radius**2 - 1.0) > slack:
            raise DegenerateInput("arc is not orthogonal to the absolute")


Geodesic = Union[Diameter, Arc]


@dataclass(frozen=True)
class HyperbolicCircle:
    center: DiscPoint
    radius: float

    def __post_init__(self):
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise DegenerateInput("hyperbolic radius must be positive and finite")


def _cross(u: complex, v: complex) -> float:
    return u.real * v.imag - u.imag * v.real


def _dot(u: complex, v: complex) -> float:
    return u.real * v.real + u.imag * v.imag


def distance(p: DiscPoint, q: DiscPoint) -> float:
    """Hyperbolic distance between two disc points (curvature -1)."""
    zp, zq = p.z, q.z
    num = abs(zp - zq)
    if num == 0.0:
        return 0.0
    return 2.0 * math.atanh(num / abs(1.0 - zp.conjugate() * zq))


def invert_in_absolute(b: DiscPoint) -> InversePoint:
    """Reflect ``b`` in the unit circle, ``b / |b|^2``."""
    r2 = b.x * b.x + b.y * b.y
    if r2 == 0.0:
        raise DegenerateInput("the origin inverts to the point at infinity")
    return InversePoint(b.x / r2, b.y / r2)


def is_diameter_pair(p: DiscPoint, q: DiscPoint) -> bool:
    return abs(_cross(p.z, q.z)) <= ALGEBRAIC_TOL * p.norm * q.norm


def geodesic_through(p: DiscPoint, q: DiscPoint) -> Geodesic:
    """Geodesic through ``p`` and ``q``, oriented from ``p`` towards ``q``.

    Off the diameters this is the circle through ``p``, ``q`` and the
    inverse of ``p``; its center solves ``c.p = (1 + |p|^2) / 2`` and the
    same for ``q``, which avoids forming the (possibly huge) inverse point.
    """
    if p == q:
        raise DegenerateInput("a geodesic needs two distinct points")
    zp, zq = p.z, q.z
    if is_diameter_pair(p, q):
        d = (zq - zp) / abs(zq - zp)
        return Diameter((d.real, d.imag))
    det = _cross(zp, zq)
    rp = 0.5 * (1.0 + abs(zp) ** 2)
    rq = 0.5 * (1.0 + abs(zq) ** 2)
    cx = (rp * zq.imag - rq * zp.imag) / det
    cy = (zp.real * rq - zq.real * rp) / det
    c = complex(cx, cy)
    radius = math.sqrt(cx * cx + cy * cy - 1.0)
    return Arc((cx, cy), radius, ccw=_cross(zp - c, zq - c) > 0)


def distance_to_geodesic_curve(v: DiscPoint, g: Geodesic) -> float:
    """Euclidean distance from ``v`` to the supporting line or circle of ``g``."""
    if isinstance(g, Diameter):
        return abs(_cross(complex(*g.direction), v.z))
    return abs(abs(v.z - complex(*g.center)) - g.radius)


def tangent_at(g: Geodesic, v: DiscPoint) -> complex:
    """Unit tangent of the oriented geodesic ``g`` at ``v``."""
    if distance_to_geodesic_curve(v, g) > GEOMETRIC_TOL:
        raise PointNotOnGeodesic(f"{v} is not on {g}")
    if isinstance(g, Diameter):
        return complex(*g.direction)
    radial = (v.z - complex(*g.center)) / g.radius
    return radial * 1j if g.ccw else radial * -1j


def angle_at(v: DiscPoint, g1: Geodesic, g2: Geodesic) -> float:
    """Angle in [0, pi] between the oriented tangents of two geodesics at ``v``.

    The model is conformal, so this is the Euclidean angle between tangents.
    """
    t1 = tangent_at(g1, v)
    t2 = tangent_at(g2, v)
    return math.atan2(abs(_cross(t1, t2)), _dot(t1, t2))


@dataclass(frozen=True)
class DiscAutomorphism:
    """Orientation-preserving isometry ``z -> rotation * (z - a) / (1 - conj(a) z)``."""

    a: complex = 0j
    rotation: complex = 1 + 0j

    def apply(self, z: complex) -> complex:
        return self.rotation * (z - self.a) / (1.0 - self.a.conjugate() * z)

    def __call__(self, p: DiscPoint) -> DiscPoint:
        return DiscPoint.from_complex(self.apply(p.z))

    def inverse(self) -> "DiscAutomorphism":
        return DiscAutomorphism(-self.a * self.rotation, self.rotation.conjugate())


def mobius_to_origin(a: DiscPoint) -> DiscAutomorphism:
    """Disc automorphism sending ``a`` to the origin."""
    return DiscAutomorphism(a.z)


def hyperbolic_circle_realization(c: HyperbolicCircle) -> tuple[tuple[float, float], float]:
    """Euclidean center and radius of a hyperbolic circle.

    An origin-centred circle of hyperbolic radius r has Euclidean radius
    tanh(r / 2); the general case is its image under the automorphism taking
    the origin to ``c.center``.
    """
    rho = math.tanh(0.5 * c.radius)
    a = c.center.z
    n2 = abs(a) ** 2
    denom = 1.0 - rho * rho * n2
    center = a * (1.0 - rho * rho) / denom
    return (center.real, center.imag), rho * (1.0 - n2) / denom


def point_along(p: DiscPoint, q: DiscPoint, t: float) -> DiscPoint:
    """Point on the geodesic segment from ``p`` to ``q`` at fraction ``t`` of its length."""
    if p == q:
        raise DegenerateInput("segment endpoints coincide")
    to_origin = mobius_to_origin(p)
    w = to_origin.apply(q.z)
    d = distance(p, q)
    m = w / abs(w) * math.tanh(0.5 * t * d)
    return DiscPoint.from_complex(to_origin.inverse().apply(m))


def hyperbolic_midpoint(p: DiscPoint, q: DiscPoint) -> DiscPoint:
    return point_along(p, q, 0.5)


def circumcenter(p: DiscPoint, q: DiscPoint, r: DiscPoint) -> DiscPoint:
    """Hyperbolic center of the circle through three points.

    Hyperbolic circles are Euclidean circles inside the disc, so the
    Euclidean circumcircle is taken and its hyperbolic center recovered as
    the hyperbolic midpoint of its two intersections with the diameter
    through its Euclidean center.
    """
    zp, zq, zr = p.z, q.z, r.z
    u, v = zq - zp, zr - zp
    det = 2.0 * _cross(u, v)
    scale = abs(u) * abs(v)
    if scale == 0.0 or abs(det) <= ALGEBRAIC_TOL * scale:
        raise CollinearPoints("points are collinear or coincident")
    uu, vv = abs(u) ** 2, abs(v) ** 2
    offset = complex(v.imag * uu - u.imag * vv, u.real * vv - v.real * uu) / det
    center = zp + offset
    radius = abs(offset)
    cn = abs(center)
    if abs(cn * cn - radius * radius - 1.0) <= GEOMETRIC_TOL * max(1.0, cn * cn):
        raise CollinearPoints("points lie on one geodesic")
    if cn + radius >= 1.0 - BOUNDARY_MARGIN:
        raise NoCompactCircumcircle(
            "the Euclidean circumcircle meets or leaves the absolute"
        )
    if cn <= ALGEBRAIC_TOL:
        return ORIGIN
    direction = center / cn
    near = DiscPoint.from_complex(direction * (cn - radius))
    far = DiscPoint.from_complex(direction * (cn + radius))
    return hyperbolic_midpoint(near, far)


def rotate(p: DiscPoint, angle: float) -> DiscPoint:
    return DiscPoint.from_complex(p.z * cmath.exp(1j * angle))
