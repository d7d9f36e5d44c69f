"""Regular polygons against the circle at fixed hyperbolic perimeter."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInput
from .max_area import optimal_area
from .triangle import area_from_sides_and_angle, side_from_cosine_theorem


@dataclass(frozen=True)
class RegularPolygonSpec:
    n: int
    perimeter: float
    circumradius: float
    area: float


def _perimeter_at(n: int, r: float) -> float:
    return n * side_from_cosine_theorem(r, r, 2.0 * math.pi / n)


def regular_polygon(n: int, perimeter: float) -> RegularPolygonSpec:
    """Regular n-gon of the given perimeter, triangulated from its center.

    The circumradius is found by bisection to full double precision.
    """
    if not (isinstance(n, int) and n >= 3):
        raise InvalidInput(f"n must be an integer >= 3, got {n!r}")
    if not (perimeter > 0 and math.isfinite(perimeter)):
        raise InvalidInput(f"perimeter must be positive, got {perimeter!r}")
    lo, hi = 0.0, 1.0
    while _perimeter_at(n, hi) < perimeter:
        lo, hi = hi, 2.0 * hi
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _perimeter_at(n, mid) < perimeter:
            lo = mid
        else:
            hi = mid
    r = lo if perimeter - _perimeter_at(n, lo) <= _perimeter_at(n, hi) - perimeter else hi
    area = n * area_from_sides_and_angle(r, r, 2.0 * math.pi / n)
    return RegularPolygonSpec(n, perimeter, r, area)


def circle_radius_for_perimeter(perimeter: float) -> float:
    if not (perimeter > 0 and math.isfinite(perimeter)):
        raise InvalidInput(f"perimeter must be positive, got {perimeter!r}")
    return math.asinh(perimeter / (2.0 * math.pi))


def circle_area_for_perimeter(perimeter: float) -> float:
    """Area 2 pi (cosh r - 1) of the circle with circumference 2 pi sinh r."""
    r = circle_radius_for_perimeter(perimeter)
    return 4.0 * math.pi * math.sinh(0.5 * r) ** 2


def richardson_limit(areas: dict[int, float], levels: int = 3) -> float:
    """Extrapolate polygon areas to n -> infinity.

    ``areas`` must hold n, 2n, 4n, ...; the error expands in even powers of 1/n.
    """
    ns = sorted(areas)
    table = [areas[n] for n in ns[-(levels + 1):]]
    for k in range(1, levels + 1):
        f = 4.0**k
        table = [(f * table[i + 1] - table[i]) / (f - 1.0) for i in range(len(table) - 1)]
    return table[0]


def reflection_step_check(b: float, c: float, alpha: float) -> tuple[float, float]:
    """Area before and after re-opening the apex angle to the optimum."""
    original = area_from_sides_and_angle(b, c, alpha)
    return original, optimal_area(b, c)
