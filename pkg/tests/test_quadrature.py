from __future__ import annotations

import math

import numpy as np
import pytest

from clifford_workbench.algebra.point import Point
from clifford_workbench.errors import DomainError
from clifford_workbench.integrals.quadrature import (
    BallVolume,
    BoxBoundary,
    QuadratureRule,
    SphereSurface,
    build_rule,
    export_rule,
    import_rule,
    pairwise_sum,
    parse_domain,
)

SPHERE_AREA = {1: 2.0 * math.pi, 2: 4.0 * math.pi, 3: 2.0 * math.pi**2}
BALL_VOLUME = {1: math.pi, 2: 4.0 * math.pi / 3.0}


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("radius", [0.5, 1.0, 2.0])
def test_sphere_area(n, radius):
    rule = build_rule(SphereSurface(Point.origin(n), radius), 2)
    assert rule.total_weight() == pytest.approx(SPHERE_AREA[n] * radius**n, rel=1e-12)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sphere_normals(n):
    center = Point.from_coords([0.1 * (k + 1) for k in range(n + 1)])
    rule = build_rule(SphereSurface(center, 0.7), 2)
    assert np.allclose(np.linalg.norm(rule.normals, axis=1), 1.0)
    assert np.allclose(rule.nodes, center.as_array() + 0.7 * rule.normals)
    assert np.linalg.norm(pairwise_sum(rule.normals * rule.weights[:, None])) <= 1e-12


def test_sphere_moment():
    # integral of y0^2 over the unit 2-sphere
    rule = build_rule(SphereSurface(Point.origin(2), 1.0), 2)
    value = float(pairwise_sum(rule.weights * rule.nodes[:, 0] ** 2))
    assert value == pytest.approx(4.0 * math.pi / 3.0, rel=1e-12)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_box_surface(n):
    rule = build_rule(BoxBoundary.centered(n, 1.0), 1)
    assert rule.total_weight() == pytest.approx(2 * (n + 1) * 2.0**n, rel=1e-12)
    assert np.linalg.norm(pairwise_sum(rule.normals * rule.weights[:, None])) <= 1e-12
    assert np.allclose(np.abs(rule.nodes).max(axis=1), 1.0)


def test_unit_cube_faces():
    box = BoxBoundary.unit_cube(2)
    rule = build_rule(box, 2)
    assert rule.total_weight() == pytest.approx(6.0, rel=1e-12)
    assert not box.contains(Point(0.0, (0.5, 0.5)))
    assert box.contains(Point(0.5, (0.5, 0.5)))


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("refinement", [1, 2])
def test_ball_volume(n, refinement):
    rule = build_rule(BallVolume(Point.origin(n), 1.5), refinement)
    assert rule.total_weight() == pytest.approx(BALL_VOLUME[n] * 1.5 ** (n + 1), rel=1e-12)
    assert rule.normals is None
    assert np.all(np.linalg.norm(rule.nodes, axis=1) < 1.5)


def test_refinement_grows_the_rule():
    sizes = [build_rule(SphereSurface(Point.origin(2)), r).size for r in (1, 2, 3)]
    assert sizes == sorted(sizes)
    assert len(set(sizes)) == 3


def test_unsupported_dimensions():
    with pytest.raises(DomainError):
        build_rule(SphereSurface(Point.origin(4)), 1)
    with pytest.raises(DomainError):
        build_rule(BoxBoundary.centered(4), 1)
    with pytest.raises(DomainError):
        build_rule(BallVolume(Point.origin(3)), 1)
    with pytest.raises(ValueError):
        build_rule(SphereSurface(Point.origin(2)), 0)


def test_degenerate_box():
    with pytest.raises(DomainError):
        BoxBoundary(lo=(0.0, 0.0), hi=(1.0, 0.0))
    with pytest.raises(DomainError):
        BoxBoundary(lo=(0.0,), hi=(1.0,))


def test_rule_validation():
    domain = SphereSurface(Point.origin(1))
    nodes = np.array([[1.0, 0.0], [-1.0, 0.0]])
    with pytest.raises(DomainError):
        QuadratureRule(domain, nodes, np.array([1.0, -1.0]), normals=nodes)
    with pytest.raises(DomainError):
        QuadratureRule(domain, nodes, np.array([1.0, 1.0]))
    with pytest.raises(DomainError):
        QuadratureRule(domain, nodes, np.array([1.0, 1.0]), normals=2 * nodes)
    with pytest.raises(DomainError):
        QuadratureRule(BallVolume(Point.origin(1)), nodes, np.array([1.0, 1.0]), normals=nodes)


@pytest.mark.parametrize(
    "domain",
    [
        SphereSurface(Point(0.1, (0.2, -0.3)), 0.75),
        BoxBoundary(lo=(-1.0, 0.0, -0.5), hi=(1.0, 2.0, 0.5)),
        BallVolume(Point(0.0, (0.5,)), 0.25),
    ],
)
def test_rule_table_round_trip(domain, tmp_path):
    rule = build_rule(domain, 1)
    path = export_rule(rule, tmp_path / "rules" / f"{domain.kind}.txt")
    loaded = import_rule(path)
    assert loaded.domain == domain
    assert loaded.refinement == 1
    assert np.array_equal(loaded.nodes, rule.nodes)
    assert np.array_equal(loaded.weights, rule.weights)
    if rule.is_surface:
        assert np.array_equal(loaded.normals, rule.normals)


def test_third_party_table(tmp_path):
    path = tmp_path / "circle.txt"
    np.savetxt(path, [[1.0, 0.0, math.pi, 1.0, 0.0], [-1.0, 0.0, math.pi, -1.0, 0.0]])
    with pytest.raises(DomainError):
        import_rule(path)
    rule = import_rule(path, SphereSurface(Point.origin(1)))
    assert rule.total_weight() == pytest.approx(2.0 * math.pi)
    with pytest.raises(DomainError):
        import_rule(path, SphereSurface(Point.origin(2)))


def test_parse_domain():
    assert parse_domain("sphere center=0.0,0.0 radius=2.0") == SphereSurface(Point.origin(1), 2.0)
    with pytest.raises(DomainError):
        parse_domain("torus center=0,0")
    with pytest.raises(DomainError):
        parse_domain("ball radius=1.0")


def test_pairwise_sum_is_order_fixed():
    values = np.random.default_rng(3).normal(size=(1001, 4))
    first = pairwise_sum(values)
    second = pairwise_sum(values.copy())
    assert np.array_equal(first, second)
    assert np.allclose(first, values.sum(axis=0))
    assert np.array_equal(pairwise_sum(np.zeros((0, 3))), np.zeros(3))


def test_boundary_distance():
    sphere = SphereSurface(Point(0.0, (1.0, 0.0)), 2.0)
    assert sphere.boundary_distance(Point(0.0, (1.0, 0.0))) == pytest.approx(2.0)
    assert sphere.boundary_distance(Point(0.0, (4.0, 0.0))) == pytest.approx(1.0)
    assert sphere.boundary_distance(Point(0.0, (3.0, 0.0))) == pytest.approx(0.0, abs=1e-15)

    box = BoxBoundary.unit_cube(2)
    assert box.boundary_distance(Point(0.5, (0.5, 0.5))) == pytest.approx(0.5)
    assert box.boundary_distance(Point(0.9, (0.5, 0.2))) == pytest.approx(0.1)
    assert box.boundary_distance(Point(2.0, (0.5, 0.5))) == pytest.approx(1.0)
    assert box.boundary_distance(Point(2.0, (2.0, 0.5))) == pytest.approx(math.sqrt(2.0))
    assert box.boundary_distance(Point(1.0, (0.5, 0.5))) == 0.0


@pytest.mark.parametrize("domain", [
    SphereSurface(Point.origin(1)),
    SphereSurface(Point.origin(2)),
    BoxBoundary.centered(2),
    BallVolume(Point.origin(2)),
], ids=lambda d: f"{d.kind}-{d.n}")
def test_spacing_shrinks_with_refinement(domain):
    coarse, fine = build_rule(domain, 2), build_rule(domain, 4)
    assert 0.0 < fine.spacing < coarse.spacing < 1.0


def test_circle_spacing():
    rule = build_rule(SphereSurface(Point.origin(1)), 2)
    assert rule.spacing == pytest.approx(2.0 * math.pi / rule.size)
