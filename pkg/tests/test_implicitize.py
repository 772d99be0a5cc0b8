import pytest

from model.implicitize import (degree_of_map_curve, hypersurface_implicit_gcd, perfect_power,
                               plane_curve_implicit, regularity_bound_curve,
                               regularity_bound_from_degrees)
from model.matrixrep import build_rep, certify
from model.oracle import InstanceSpec, implicit_identity_check, random_instance
from model.polyring import FieldSpec, parse_parameterization, parse_polynomial
from model.syzygy import mu_basis

from conftest import LINE


def test_perfect_power_over_Q(line):
    c, F, e = perfect_power(parse_polynomial("2*x^3 + 6*x^2*y + 6*x*y^2 + 2*y^3", line))
    assert (c, F, e) == (2, parse_polynomial("x + y", line), 3)


def test_perfect_power_of_a_non_power(line):
    f = parse_polynomial("x^2*y", line)
    assert perfect_power(f)[1:] == (f, 1)


def test_perfect_power_over_a_prime_field(line):
    ring = line.with_field(FieldSpec.prime(7))
    _, F, e = perfect_power(parse_polynomial("x^2 + 2*x*y + y^2", ring))
    assert (F, e) == (parse_polynomial("x + y", ring), 2)


def test_perfect_power_rejects_zero(line):
    with pytest.raises(ValueError):
        perfect_power(parse_polynomial("0", line))


def test_implicit_circle(circle):
    result = plane_curve_implicit(circle)
    assert result.F == parse_polynomial("T1^2 - T2^2 - T3^2", circle.target_ring)
    assert result.e == 1
    assert result.to_json()["method"] == "determinant"


def test_implicit_double_conic(double_conic):
    result = plane_curve_implicit(double_conic)
    assert result.F == parse_polynomial("T1*T3 - T2^2", double_conic.target_ring)
    assert result.e == 2


def test_plane_curve_needs_three_maps(twisted_cubic):
    with pytest.raises(ValueError):
        plane_curve_implicit(twisted_cubic)


@pytest.mark.parametrize("maps, expected", [
    (["x^3", "x^2*y", "x*y^2", "y^3"], 1),
    (["x^4", "x^2*y^2", "y^4"], 2),
    (["x^6", "x^4*y^2", "x^2*y^4", "y^6"], 2),
])
def test_degree_of_map_curve(maps, expected):
    assert degree_of_map_curve(parse_parameterization(maps, LINE)) == expected


def test_sphere_equation_from_minors(sphere):
    result = hypersurface_implicit_gcd(build_rep(sphere, 1, indeg=1))
    assert result.F == parse_polynomial("T1^2 - T2^2 - T3^2 - T4^2", sphere.target_ring)
    assert result.e == 1
    assert result.extraneous == ()
    assert result.F.compose(list(sphere.maps)).is_zero


def test_minors_need_enough_columns(twisted_cubic):
    with pytest.raises(ValueError):
        hypersurface_implicit_gcd(build_rep(twisted_cubic, 0, force=True))


@pytest.mark.parametrize("mu, bound, inequality", [
    ((1, 1, 1), 2, True),
    ((2, 3), 5, True),
    ((0, 3), 3, None),
])
def test_regularity_bound_from_degrees(mu, bound, inequality):
    result = regularity_bound_from_degrees(mu)
    assert result.bound == bound
    assert result.codim_inequality is inequality


def test_regularity_bound_needs_birational_map(double_conic, twisted_cubic):
    assert not regularity_bound_curve(mu_basis(double_conic)).applicable
    assert regularity_bound_curve(mu_basis(twisted_cubic)).to_json()["applicable"]


@pytest.mark.parametrize("seed", range(7))
def test_random_plane_curves_satisfy_their_equation(seed):
    param = random_instance(InstanceSpec((2,), 3, (2 + seed % 3,), seed=seed, coefficient_bound=4))
    result = plane_curve_implicit(param)
    assert implicit_identity_check(param, result.F)
    assert result.e * result.F.total_degree == param.degree.total


@pytest.mark.parametrize("seed", range(3))
def test_random_quadric_surfaces_satisfy_their_equation(seed):
    param = random_instance(InstanceSpec((3,), 4, (2,), seed=seed, coefficient_bound=3))
    certificate = certify(param)
    M = build_rep(param, certificate.region.lower_corner, certificate=certificate)
    result = hypersurface_implicit_gcd(M)
    assert implicit_identity_check(param, result.F)
