import pytest

from constants import NEGATIVE_SECTION_JUSTIFICATION
from model.congruence import (HYPOTHESIS_FINITE, HYPOTHESIS_NO_NEGATIVE_SECTION,
                              DegenerateQueryError, DegenerateSurfaceError, SurfaceParam,
                              build_normal_congruence, default_degree, foot_predicate,
                              project_point)
from model.polyring import RATIONALS, GradedRingSpec, MultiDegree

from conftest import LINE, SURFACE


@pytest.fixture
def plane_congruence(plane_surface):
    return build_normal_congruence(plane_surface, classify_base_locus=False)


@pytest.fixture
def sphere_congruence(sphere_surface):
    return build_normal_congruence(sphere_surface, hypothesis=HYPOTHESIS_NO_NEGATIVE_SECTION,
                                   classify_base_locus=False)


def test_surface_needs_four_maps_on_a_surface_source():
    with pytest.raises(ValueError):
        SurfaceParam.of(SURFACE, ["x1", "x2", "x3"])
    with pytest.raises(ValueError):
        SurfaceParam.of(LINE, ["x", "y", "x", "y"])


def test_normal_of_a_plane(plane_surface):
    normal = plane_surface.normal
    assert [c.to_text() for c in normal.components] == ["0", "0", "-1"]
    assert normal.degree == MultiDegree.of(0)


def test_degenerate_surface_has_no_normal():
    with pytest.raises(DegenerateSurfaceError):
        SurfaceParam.of(SURFACE, ["x1", "x2", "x1", "x2"]).normal


def test_foot_predicate_on_the_sphere(sphere_surface):
    assert foot_predicate(sphere_surface, (1, 2, 0, 0), (1, 0, 1))
    assert not foot_predicate(sphere_surface, (1, 2, 0, 0), (1, 1, 0))
    assert foot_predicate(sphere_surface, (1, 2, 0, 0), (1.0, 0.0, 1.0))


def test_plane_congruence(plane_congruence):
    assert plane_congruence.x_degree == MultiDegree.of(1)
    assert plane_congruence.e == 1
    assert plane_congruence.param.ring.blocks[-1] == ("tb", "t")
    assert plane_congruence.hypothesis == HYPOTHESIS_NO_NEGATIVE_SECTION
    assert plane_congruence.justification == NEGATIVE_SECTION_JUSTIFICATION
    region = plane_congruence.certificate().region
    assert [c.components for c in region.corners] == [(1, 0), (0, 2)]
    assert default_degree(plane_congruence) == MultiDegree.of(1, 1)


def test_sphere_congruence_degrees(sphere_congruence):
    assert sphere_congruence.x_degree == MultiDegree.of(2)
    assert sphere_congruence.e == 1
    assert default_degree(sphere_congruence) == MultiDegree.of(4, 1)
    assert sphere_congruence.to_json()["hypothesis"] == "b"


def test_explicit_finite_hypothesis_drops_the_justification(plane_surface):
    cong = build_normal_congruence(plane_surface, hypothesis=HYPOTHESIS_FINITE,
                                   classify_base_locus=False)
    assert cong.justification is None
    assert cong.assumptions() == ("base locus is finite",)
    with pytest.raises(ValueError):
        build_normal_congruence(plane_surface, hypothesis="c", classify_base_locus=False)


def test_line_variables_must_not_clash():
    ring = GradedRingSpec((("t", "u", "v"),), RATIONALS)
    with pytest.raises(ValueError):
        build_normal_congruence(SurfaceParam.of(ring, ["t", "u", "v", "0"]))


@pytest.mark.parametrize("a, b, c", [(3, -2, 5), (0, 0, 0), (-7, 1, -4)])
def test_projection_onto_a_plane(plane_congruence, a, b, c):
    report = project_point(plane_congruence, (1, a, b, c))
    assert report.degree == 1
    assert report.certified
    (foot,) = report.feet
    assert foot.foot == (a, b, 0)
    assert foot.to_json(RATIONALS)["parameter"] == ["1", str(a), str(b)]


def test_projection_onto_the_sphere(sphere_congruence):
    report = project_point(sphere_congruence, (1, 2, 0, 0))
    assert report.degree == 2
    assert sorted(f.foot for f in report.feet) == [(-1, 0, 0), (1, 0, 0)]
    assert report.to_json()["nu"] == [4, 1]


def test_center_of_the_sphere_is_degenerate(sphere_congruence):
    with pytest.raises(DegenerateQueryError):
        project_point(sphere_congruence, (1, 0, 0, 0))


def test_query_must_be_affine(plane_congruence):
    with pytest.raises(ValueError):
        project_point(plane_congruence, (0, 1, 0, 0))
    with pytest.raises(ValueError):
        project_point(plane_congruence, (1, 0, 0))
