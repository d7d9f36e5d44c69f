"""Chords of equal area.

With A at the center of the disc and B fixed, every point C of the chord of
the absolute whose extension passes through the inverse point B' makes a
triangle ABC of the same area, twice the angle between the chord and B'A.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .disc import (
    BOUNDARY_MARGIN,
    GEOMETRIC_TOL,
    ORIGIN,
    DiscPoint,
    InversePoint,
    invert_in_absolute,
)
from .errors import ChordMisses, DegenerateInput, PointNotOnChord, PointOutsideDisc
from .triangle import HyperbolicTriangle, measure

ENDPOINT_MARGIN = 1e-6


@dataclass(frozen=True)
class EqualAreaChord:
    b_point: DiscPoint
    b_inverse: InversePoint
    tau: float
    endpoints: tuple[tuple[float, float], tuple[float, float]]

    @property
    def area(self) -> float:
        return 2.0 * self.tau

    def distance_to_line(self, p: tuple[float, float]) -> float:
        (x0, y0), (x1, y1) = self.endpoints
        dx, dy = x1 - x0, y1 - y0
        return abs(dx * (p[1] - y0) - dy * (p[0] - x0)) / math.hypot(dx, dy)

    def sample(self, n: int, margin: float = ENDPOINT_MARGIN) -> list[DiscPoint]:
        """``n`` points spread uniformly along the chord.

        ``margin`` is the Euclidean length excluded at each endpoint, widened
        on near-tangent chords so samples stay clear of the absolute.
        """
        (x0, y0), (x1, y1) = self.endpoints
        length = math.hypot(x1 - x0, y1 - y0)
        # 1 - |p|^2 = s (length - s) at Euclidean offset s from an endpoint
        frac = max(margin, 4.0 * BOUNDARY_MARGIN / length) / length
        if frac >= 0.5:
            raise ChordMisses("chord too short to sample inside the disc")
        ts = np.linspace(frac, 1.0 - frac, n)
        return [DiscPoint(x0 + t * (x1 - x0), y0 + t * (y1 - y0)) for t in ts]


def max_angle_for_point(b: DiscPoint) -> float:
    """Largest chord angle for which the line through B' still meets the disc."""
    if b.norm == 0.0:
        raise DegenerateInput("B must differ from the center")
    return math.asin(b.norm)


def chord_for_angle(b: DiscPoint, tau: float) -> EqualAreaChord:
    b_inv = invert_in_absolute(b)
    tau_max = max_angle_for_point(b)
    if not tau > 0:
        raise DegenerateInput(f"tau must be positive, got {tau}")
    if tau >= tau_max:
        raise ChordMisses(f"tau={tau} >= {tau_max}: the line through B' misses the disc")
    # B' at (R, 0) after rotating B onto the positive x-axis; the chord leaves
    # it towards the origin, tilted by tau into the upper half-plane
    R = b_inv.norm
    disc = 1.0 - (R * math.sin(tau)) ** 2
    if not disc > 0:
        raise ChordMisses("chord is tangent to the absolute")
    root = math.sqrt(disc)
    u = complex(-math.cos(tau), math.sin(tau))
    spin = cmath.exp(1j * math.atan2(b.y, b.x))
    ends = []
    for t in (R * math.cos(tau) - root, R * math.cos(tau) + root):
        e = (R + t * u) * spin
        ends.append((e.real, e.imag))
    return EqualAreaChord(b, b_inv, tau, (ends[0], ends[1]))


def area_on_chord(b: DiscPoint, chord: EqualAreaChord, c: DiscPoint) -> float:
    """Defect of triangle (origin, b, c) for ``c`` on the chord."""
    if c.norm >= 1.0:
        raise PointOutsideDisc(f"{c} is outside the disc")
    if chord.distance_to_line((c.x, c.y)) > GEOMETRIC_TOL:
        raise PointNotOnChord(f"{c} is not on the chord")
    return measure(HyperbolicTriangle(ORIGIN, b, c)).defect
