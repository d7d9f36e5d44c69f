"""Maximum-area triangle with two fixed sides.

A sits at the origin and B on the positive x-axis.  C ranges over the
Euclidean circle of radius tanh(b/2) about the origin, and the area is
largest where the line through C and the inverse point B' is tangent to
that circle.  The optimum satisfies

    cos(alpha*) = sin(S*/2) = tanh(b/2) tanh(c/2)
    sinh^2(a*/2) = sinh^2(b/2) + sinh^2(c/2)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np
from scipy.optimize import minimize_scalar

from .disc import (
    ORIGIN,
    DiscPoint,
    HyperbolicCircle,
    InversePoint,
    circumcenter,
    distance,
    hyperbolic_midpoint,
    invert_in_absolute,
)
from .errors import InvalidSides, NoCompactCircumcircle, PointOutsideDisc
from .triangle import HyperbolicTriangle, area_from_sides_and_angle, measure

GRID_POINTS = 1024
GOLDEN_TOL = 1e-10


def _check_sides(b: float, c: float) -> None:
    if not (b > 0 and c > 0 and math.isfinite(b) and math.isfinite(c)):
        raise InvalidSides(f"sides must be positive and finite, got b={b}, c={c}")


def _one_minus_tanh(x: float) -> float:
    return 2.0 / (math.exp(2.0 * x) + 1.0)


def _tanh_product(b: float, c: float) -> tuple[float, float]:
    """tanh(b/2) tanh(c/2) and its complement to one, both without cancellation."""
    tb, tc = math.tanh(0.5 * b), math.tanh(0.5 * c)
    return tb * tc, _one_minus_tanh(0.5 * b) + tb * _one_minus_tanh(0.5 * c)


def optimal_angle(b: float, c: float) -> float:
    _check_sides(b, c)
    k, one_minus_k = _tanh_product(b, c)
    return math.atan2(math.sqrt(one_minus_k * (1.0 + k)), k)


def optimal_area(b: float, c: float) -> float:
    _check_sides(b, c)
    k, one_minus_k = _tanh_product(b, c)
    return 2.0 * math.atan2(k, math.sqrt(one_minus_k * (1.0 + k)))


def optimal_third_side(b: float, c: float) -> float:
    _check_sides(b, c)
    return 2.0 * math.asinh(math.hypot(math.sinh(0.5 * b), math.sinh(0.5 * c)))


@dataclass(frozen=True)
class MaxAreaSolution:
    b: float
    c: float
    triangle: HyperbolicTriangle
    b_inverse: InversePoint
    omega: HyperbolicCircle
    alpha_star: float
    s_star: float
    a_star: float

    @property
    def tangent_point(self) -> DiscPoint:
        return self.triangle.c_vertex


def construct(b: float, c: float) -> MaxAreaSolution:
    """Build the optimal triangle for sides AC = b and AB = c."""
    _check_sides(b, c)
    alpha = optimal_angle(b, c)
    rb = math.tanh(0.5 * b)
    try:
        B = DiscPoint(math.tanh(0.5 * c), 0.0)
        # tangency point of the upper tangent from B' to the circle |z| = rb
        C = DiscPoint(rb * math.cos(alpha), rb * math.sin(alpha))
    except PointOutsideDisc as exc:
        raise InvalidSides(
            f"sides b={b}, c={c} are too long to realize in double precision"
        ) from exc
    return MaxAreaSolution(
        b=b,
        c=c,
        triangle=HyperbolicTriangle(ORIGIN, B, C),
        b_inverse=invert_in_absolute(B),
        omega=HyperbolicCircle(ORIGIN, b),
        alpha_star=alpha,
        s_star=optimal_area(b, c),
        a_star=optimal_third_side(b, c),
    )


def brute_force_optimum(b: float, c: float) -> tuple[float, float]:
    """Maximize the two-sides-and-angle area formula over the apex angle.

    Independent of the tangent construction: a grid scan seeds a
    golden-section search on the best bracket.
    """
    _check_sides(b, c)
    grid = np.linspace(0.0, math.pi, GRID_POINTS + 2)[1:-1]
    kb = 1.0 / (math.tanh(0.5 * b) * math.tanh(0.5 * c))
    values = 2.0 * np.arctan2(np.sin(grid), kb - np.cos(grid))
    i = int(np.clip(np.argmax(values), 1, GRID_POINTS - 2))

    def neg_area(alpha):
        return -area_from_sides_and_angle(b, c, alpha)

    res = minimize_scalar(
        neg_area,
        bracket=(grid[i - 1], grid[i], grid[i + 1]),
        method="golden",
        tol=GOLDEN_TOL,
    )
    return float(res.x), float(-res.fun)


@dataclass
class ConditionReport:
    """Residuals of the six equivalent optimality conditions.

    Condition (1) also requires alpha < pi/2; condition (2) is ``inf`` when
    the circumcircle is not compact.
    """

    b: float
    c: float
    residuals: dict[str, float] = field(default_factory=dict)
    alpha_below_right_angle: bool = True
    tol: float = 1e-9

    @property
    def passed(self) -> dict[str, bool]:
        out = {k: bool(v < self.tol) for k, v in self.residuals.items()}
        out["c1"] = out["c1"] and self.alpha_below_right_angle
        return out

    @property
    def ok(self) -> bool:
        return all(self.passed.values())


def check_conditions(
    sol: Union[MaxAreaSolution, HyperbolicTriangle], tol: float = 1e-9
) -> ConditionReport:
    """Evaluate conditions (0)-(5) on the geometry of a triangle.

    Every quantity is measured on the triangle itself; for a bare triangle
    the fixed sides are its measured sides AC and AB.
    """
    tri = sol.triangle if isinstance(sol, MaxAreaSolution) else sol
    m = measure(tri)
    b, c = (sol.b, sol.c) if isinstance(sol, MaxAreaSolution) else (m.side_b, m.side_c)
    k = math.tanh(0.5 * b) * math.tanh(0.5 * c)
    _, s_hat = brute_force_optimum(b, c)
    A, B, C = tri.vertices
    try:
        c2 = distance(circumcenter(A, B, C), hyperbolic_midpoint(B, C))
    except NoCompactCircumcircle:
        c2 = math.inf
    residuals = {
        "c0": abs(s_hat - m.defect),
        "c1": abs(m.angle_alpha - (m.angle_beta + m.angle_gamma)),
        "c2": c2,
        "c3": abs(math.sin(0.5 * m.defect) - k),
        "c4": abs(math.cos(m.angle_alpha) - k),
        "c5": abs(
            math.sinh(0.5 * m.side_a) ** 2
            - math.sinh(0.5 * b) ** 2
            - math.sinh(0.5 * c) ** 2
        ),
    }
    return ConditionReport(b, c, residuals, m.angle_alpha < 0.5 * math.pi, tol)


def alpha_star_surface(b_grid: Sequence[float], c_grid: Sequence[float]) -> np.ndarray:
    """Optimal apex angle on a grid, rows indexed by b and columns by c."""
    return np.array([[optimal_angle(b, c) for c in c_grid] for b in b_grid])


@dataclass(frozen=True)
class EuclideanLimitReport:
    epsilon: float
    alpha_gap: float
    area_ratio_gap: float
    pythagoras_ratio_gap: float
    pythagoras_defect: float


def euclidean_limit_report(epsilon: float) -> EuclideanLimitReport:
    """How far the b = c = epsilon optimum is from a Euclidean right triangle."""
    if not 0.0 < epsilon <= 0.1:
        raise InvalidSides(f"epsilon must lie in (0, 0.1], got {epsilon}")
    alpha = optimal_angle(epsilon, epsilon)
    s = optimal_area(epsilon, epsilon)
    a = optimal_third_side(epsilon, epsilon)
    e2 = epsilon * epsilon
    return EuclideanLimitReport(
        epsilon=epsilon,
        alpha_gap=abs(alpha - 0.5 * math.pi),
        area_ratio_gap=abs(s / (0.5 * e2 * math.sin(alpha)) - 1.0),
        pythagoras_ratio_gap=abs(a * a / (2.0 * e2) - 1.0),
        pythagoras_defect=a * a - 2.0 * e2,
    )
