import pytest

from model.oracle import (InstanceSpec, default_ring, draw_instance, enumerate_fiber_Fq,
                          fiber_degree_exact_P1, implicit_identity_check, is_reduced_at,
                          point_count, projective_points, random_instance)
from model.polyring import RATIONALS, FieldSpec, Polynomial, parse_parameterization, parse_polynomial
from model.syzygy import mu_basis

F5 = FieldSpec.prime(5)
F7 = FieldSpec.prime(7)


def _texts(field, blocks):
    return [[field.format_element(c) for c in block] for block in blocks]


def test_exact_fiber_degree_P1(twisted_cubic, double_conic):
    assert fiber_degree_exact_P1(twisted_cubic, (1, 2, 4, 8)) == 1
    assert fiber_degree_exact_P1(twisted_cubic, (1, 0, 0, 1)) == 0
    assert fiber_degree_exact_P1(double_conic, (1, 1, 1)) == 2
    with pytest.raises(ValueError):
        fiber_degree_exact_P1(twisted_cubic, (0, 0, 0, 0))


@pytest.mark.parametrize("blocks, q, expected", [((2,), 7, 8), ((3,), 2, 7), ((2, 2), 3, 16)])
def test_point_count(blocks, q, expected):
    assert point_count(blocks, q) == expected
    assert len(list(projective_points(blocks, FieldSpec.prime(q)))) == expected


def test_projective_points_are_canonical():
    points = list(projective_points((2,), F5))
    assert _texts(F5, points[0]) == [["1", "0"]]
    assert _texts(F5, points[-1]) == [["0", "1"]]


def test_enumeration_limits():
    with pytest.raises(ValueError):
        projective_points((2,), RATIONALS)
    with pytest.raises(ValueError):
        projective_points((2,), FieldSpec.prime(263))
    with pytest.raises(ValueError):
        projective_points((3, 3), FieldSpec.prime(257))


def test_enumerated_fiber_of_the_twisted_cubic(twisted_cubic_f7):
    (point,) = enumerate_fiber_Fq(twisted_cubic_f7, (1, 2, 4, 8))
    assert _texts(F7, point) == [["1", "2"]]


def test_enumerated_fiber_of_a_double_cover(line):
    param = parse_parameterization(["x^4", "x^2*y^2", "y^4"], line.with_field(F7))
    found = [_texts(F7, pt) for pt in enumerate_fiber_Fq(param, (1, 1, 1))]
    assert found == [[["1", "1"]], [["1", "6"]]]
    assert fiber_degree_exact_P1(param, (1, 1, 1)) == 2


def test_reducedness(twisted_cubic, double_conic):
    assert is_reduced_at(twisted_cubic, (1, 2, 4, 8), [(1, 2)])
    assert not is_reduced_at(double_conic, (1, 0, 0), [(1, 0)])


def test_implicit_identity_check(circle):
    T = circle.target_ring
    assert implicit_identity_check(circle, parse_polynomial("T1^2 - T2^2 - T3^2", T))
    assert not implicit_identity_check(circle, parse_polynomial("T1*T2", T))
    with pytest.raises(ValueError):
        implicit_identity_check(circle, parse_polynomial("x", circle.ring))


def test_default_rings():
    assert default_ring((2,)).variables == ("x", "y")
    assert default_ring((4,)).variables == ("x0", "x1", "x2", "x3")
    assert default_ring((2, 2)).variables == ("x0", "x1", "y0", "y1")


def test_random_instances_are_reproducible():
    spec = InstanceSpec((2,), 4, (3,), seed=11)
    first, second = random_instance(spec), random_instance(spec)
    assert first.texts() == second.texts()
    assert first.removed_factor is None
    assert sum(mu_basis(first).degrees) == 3


def test_planted_contracted_line():
    param, _ = draw_instance(InstanceSpec((3,), 4, (3,), seed=2, plants=("contracted_line",)))
    x = Polynomial.variable(param.ring, "x")
    assert all(x.divides(f) for f in param.maps[:3])
    assert not x.divides(param.maps[3])


def test_planted_base_point():
    param = random_instance(InstanceSpec((3,), 4, (2,), seed=5, plants=("base_point",)))
    assert not any(param.evaluate((1, 0, 0)))


@pytest.mark.parametrize("kwargs", [
    dict(blocks=(2,), r=3, degree=(2, 2)),
    dict(blocks=(2,), r=3, degree=(2,), plants=("wormhole",)),
    dict(blocks=(2,), r=3, degree=(2,), plants=("contracted_line",)),
    dict(blocks=(2,), r=4, degree=(2,)),
    dict(blocks=(2,), r=3, degree=(2,), plants=("base_point",)),
])
def test_instance_spec_validation(kwargs):
    with pytest.raises(ValueError):
        InstanceSpec(**kwargs)


def test_instance_spec_json():
    spec = InstanceSpec((2, 2), 4, (1, 1), field=F7, seed=3)
    assert spec.to_json() == {"blocks": [2, 2], "r": 4, "degree": [1, 1], "field": F7.to_json(),
                              "seed": 3, "plants": [], "coefficient_bound": 9}
