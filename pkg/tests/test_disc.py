import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from scipy.integrate import quad

from hypdisc import (
    ORIGIN,
    Arc,
    CollinearPoints,
    DegenerateInput,
    Diameter,
    DiscPoint,
    HyperbolicCircle,
    NoCompactCircumcircle,
    PointNotOnGeodesic,
    PointOutsideDisc,
    angle_at,
    circumcenter,
    construct,
    distance,
    geodesic_through,
    hyperbolic_circle_realization,
    hyperbolic_midpoint,
    invert_in_absolute,
    mobius_to_origin,
    point_along,
)
from hypdisc.disc import distance_to_geodesic_curve

from conftest import disc_points, random_point

# frozen from scipy.integrate.quad of 2 / (1 - r^2) over [0.3, 0.6]
DIST_03_06 = 0.767255152713667


def metric_length(r0, r1):
    return quad(lambda r: 2.0 / (1.0 - r * r), r0, r1, epsabs=1e-14, epsrel=1e-14)[0]


class TestDiscPoint:
    def test_rejects_points_on_or_near_absolute(self):
        with pytest.raises(PointOutsideDisc):
            DiscPoint(1.0, 0.0)
        with pytest.raises(PointOutsideDisc):
            DiscPoint(0.0, 1.0 - 1e-10)
        with pytest.raises(PointOutsideDisc):
            DiscPoint(float("nan"), 0.0)

    def test_accepts_interior(self):
        p = DiscPoint(0.6, -0.7)
        assert p.z == complex(0.6, -0.7)


class TestDistance:
    def test_coincident(self):
        assert distance(ORIGIN, ORIGIN) == 0.0

    def test_euclidean_radius_tanh_half(self):
        q = DiscPoint(math.tanh(0.5), 0.0)
        assert distance(ORIGIN, q) == pytest.approx(1.0, abs=1e-15)

    def test_against_metric_quadrature(self):
        assert distance(DiscPoint(0.3, 0), DiscPoint(0.6, 0)) == pytest.approx(
            DIST_03_06, abs=1e-12
        )

    @pytest.mark.filterwarnings("ignore::scipy.integrate.IntegrationWarning")
    def test_radial_distance_matches_quadrature_on_samples(self, rng):
        for _ in range(100):
            p = random_point(rng, 0.99)
            assert abs(distance(ORIGIN, p) - metric_length(0.0, p.norm)) < 1e-9

    @given(disc_points(), disc_points())
    def test_symmetric_nonnegative(self, p, q):
        d = distance(p, q)
        assert d >= 0.0
        assert d == pytest.approx(distance(q, p), abs=1e-12)
        assert (d == 0.0) == (p == q)

    def test_triangle_inequality(self, rng):
        for _ in range(1000):
            p, q, r = (random_point(rng) for _ in range(3))
            assert distance(p, r) <= distance(p, q) + distance(q, r) + 1e-12


class TestInversion:
    @pytest.mark.parametrize(
        "b, expected",
        [((0.5, 0.0), (2.0, 0.0)), ((0.0, 0.25), (0.0, 4.0)), ((0.3, 0.4), (1.2, 1.6))],
    )
    def test_examples(self, b, expected):
        inv = invert_in_absolute(DiscPoint(*b))
        assert (inv.x, inv.y) == pytest.approx(expected, abs=1e-15)

    def test_origin_is_degenerate(self):
        with pytest.raises(DegenerateInput):
            invert_in_absolute(ORIGIN)

    @given(disc_points())
    def test_involution(self, p):
        assume(p.norm > 1e-3)
        inv = invert_in_absolute(p)
        assert inv.norm * p.norm == pytest.approx(1.0, abs=1e-12)
        back = inv.z / abs(inv.z) ** 2
        assert abs(back - p.z) < 1e-12
        assert abs(inv.x * p.y - inv.y * p.x) < 1e-12


class TestGeodesicThrough:
    def test_diameter(self):
        g = geodesic_through(DiscPoint(0.2, 0), DiscPoint(0.7, 0))
        assert isinstance(g, Diameter)
        assert g.direction == pytest.approx((1.0, 0.0))

    def test_arc_example(self):
        # circle through (0.5, 0), its inverse (2, 0) and (0, 0.5): the
        # perpendicular bisector of the first two gives x = 1.25, symmetry y = x
        g = geodesic_through(DiscPoint(0.5, 0), DiscPoint(0, 0.5))
        assert isinstance(g, Arc)
        assert g.center == pytest.approx((1.25, 1.25), abs=1e-12)
        assert g.radius == pytest.approx(math.sqrt(0.75**2 + 1.25**2), abs=1e-12)

    def test_arc_passes_through_inverse_point(self):
        p, q = DiscPoint(0.4, 0.1), DiscPoint(-0.2, 0.5)
        g = geodesic_through(p, q)
        inv = invert_in_absolute(p)
        assert abs(abs(inv.z - complex(*g.center)) - g.radius) < 1e-12

    def test_same_point(self):
        with pytest.raises(DegenerateInput):
            geodesic_through(DiscPoint(0.1, 0.1), DiscPoint(0.1, 0.1))

    def test_random_arcs_orthogonal_and_through_points(self, rng):
        for _ in range(1000):
            p, q = random_point(rng), random_point(rng)
            g = geodesic_through(p, q)
            if isinstance(g, Arc):
                cx, cy = g.center
                assert abs(cx * cx + cy * cy - g.radius**2 - 1.0) < 1e-12 * max(
                    1.0, cx * cx + cy * cy
                )
            assert distance_to_geodesic_curve(p, g) < 1e-12 * max(1.0, getattr(g, "radius", 1.0))
            assert distance_to_geodesic_curve(q, g) < 1e-12 * max(1.0, getattr(g, "radius", 1.0))


class TestAngleAt:
    def test_perpendicular_diameters(self):
        g1, g2 = Diameter((1.0, 0.0)), Diameter((0.0, 1.0))
        assert angle_at(ORIGIN, g1, g2) == pytest.approx(math.pi / 2, abs=1e-15)

    def test_geodesic_with_itself(self):
        p, q = DiscPoint(0.1, 0.3), DiscPoint(-0.4, 0.2)
        g = geodesic_through(p, q)
        assert angle_at(p, g, g) == 0.0
        assert angle_at(point_along(p, q, 0.3), g, g) == 0.0

    def test_apex_of_optimal_unit_triangle(self):
        sol = construct(1.0, 1.0)
        A, B, C = sol.triangle.vertices
        alpha = angle_at(A, geodesic_through(A, B), geodesic_through(A, C))
        assert alpha == pytest.approx(math.acos(math.tanh(0.5) ** 2), abs=1e-12)
        assert alpha == pytest.approx(1.35559, abs=1e-4)

    def test_point_off_geodesic(self):
        g = geodesic_through(DiscPoint(0.1, 0.3), DiscPoint(-0.4, 0.2))
        with pytest.raises(PointNotOnGeodesic):
            angle_at(ORIGIN, g, g)


class TestMobius:
    def test_origin_is_identity(self, rng):
        T = mobius_to_origin(ORIGIN)
        p = random_point(rng)
        assert T(p) == p

    def test_sends_point_to_origin(self):
        T = mobius_to_origin(DiscPoint(0.5, 0.0))
        assert abs(T(DiscPoint(0.5, 0.0)).z) == 0.0

    def test_isometry_and_inverse(self, rng):
        for _ in range(1000):
            a, p, q = random_point(rng, 0.9), random_point(rng, 0.9), random_point(rng, 0.9)
            T = mobius_to_origin(a)
            assert abs(distance(T(p), T(q)) - distance(p, q)) < 1e-12 * max(
                1.0, distance(p, q)
            )
            assert abs(T.inverse()(T(p)).z - p.z) < 1e-12


class TestCircleRealization:
    def test_origin_centered(self):
        center, radius = hyperbolic_circle_realization(HyperbolicCircle(ORIGIN, 1.0))
        assert center == (0.0, 0.0)
        assert radius == pytest.approx(0.4621172, abs=1e-7)

    def test_small_radius(self):
        _, radius = hyperbolic_circle_realization(HyperbolicCircle(ORIGIN, 1e-9))
        assert radius < 1e-9

    def test_transported_circle_points_at_radius(self):
        hc = HyperbolicCircle(DiscPoint(0.3, 0.0), 0.5)
        (cx, cy), rho = hyperbolic_circle_realization(hc)
        for t in np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False):
            p = DiscPoint(cx + rho * math.cos(t), cy + rho * math.sin(t))
            assert abs(distance(hc.center, p) - 0.5) < 1e-9


class TestMidpoint:
    def test_symmetric(self):
        m = hyperbolic_midpoint(DiscPoint(-0.3, 0), DiscPoint(0.3, 0))
        assert abs(m.z) < 1e-15

    def test_from_origin(self):
        m = hyperbolic_midpoint(ORIGIN, DiscPoint(math.tanh(0.5), 0))
        assert (m.x, m.y) == pytest.approx((0.2449187, 0.0), abs=1e-7)

    def test_degenerate(self):
        with pytest.raises(DegenerateInput):
            hyperbolic_midpoint(ORIGIN, ORIGIN)

    def test_random_equidistant_and_on_geodesic(self, rng):
        for _ in range(500):
            p, q = random_point(rng), random_point(rng)
            m = hyperbolic_midpoint(p, q)
            assert abs(distance(p, m) - distance(m, q)) < 1e-10
            assert abs(distance(p, m) + distance(m, q) - distance(p, q)) < 1e-10


class TestCircumcenter:
    def test_equilateral(self):
        pts = [DiscPoint(0.3 * math.cos(t), 0.3 * math.sin(t)) for t in (0, 2 * math.pi / 3, 4 * math.pi / 3)]
        assert abs(circumcenter(*pts).z) < 1e-12

    def test_optimal_triangle_center_is_midpoint_of_bc(self):
        A, B, C = construct(1.0, 1.0).triangle.vertices
        o = circumcenter(A, B, C)
        assert distance(o, hyperbolic_midpoint(B, C)) < 1e-9

    def test_random_equidistant(self, rng):
        checked = 0
        for _ in range(500):
            p, q, r = (random_point(rng, 0.6) for _ in range(3))
            try:
                o = circumcenter(p, q, r)
            except (NoCompactCircumcircle, CollinearPoints):
                continue
            checked += 1
            d = distance(o, p)
            assert abs(distance(o, q) - d) < 1e-9 * max(1.0, d)
            assert abs(distance(o, r) - d) < 1e-9 * max(1.0, d)
        assert checked > 100

    def test_circle_exits_disc(self):
        pts = [DiscPoint(0.9, 0.0), DiscPoint(0.0, 0.9), DiscPoint(0.3, 0.3)]
        # oracle: Euclidean circumradius + |center| reaches the absolute
        zs = [p.z for p in pts]
        a, b, c = zs
        d = 2 * (a.real * (b.imag - c.imag) + b.real * (c.imag - a.imag) + c.real * (a.imag - b.imag))
        ux = (abs(a) ** 2 * (b.imag - c.imag) + abs(b) ** 2 * (c.imag - a.imag) + abs(c) ** 2 * (a.imag - b.imag)) / d
        uy = (abs(a) ** 2 * (c.real - b.real) + abs(b) ** 2 * (a.real - c.real) + abs(c) ** 2 * (b.real - a.real)) / d
        center = complex(ux, uy)
        assert abs(center) + abs(a - center) >= 1.0
        with pytest.raises(NoCompactCircumcircle):
            circumcenter(*pts)

    def test_collinear(self):
        with pytest.raises(CollinearPoints):
            circumcenter(DiscPoint(0.1, 0), DiscPoint(0.2, 0), DiscPoint(0.5, 0))
        p, q = DiscPoint(0.4, 0.1), DiscPoint(-0.2, 0.5)
        with pytest.raises(CollinearPoints):
            circumcenter(p, point_along(p, q, 0.4), q)
