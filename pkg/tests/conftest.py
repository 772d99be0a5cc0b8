import pytest

from model.congruence import SurfaceParam
from model.polyring import RATIONALS, FieldSpec, GradedRingSpec, parse_parameterization

LINE = GradedRingSpec((("x", "y"),), RATIONALS)
PLANE = GradedRingSpec((("x", "y", "z"),), RATIONALS)
SURFACE = GradedRingSpec((("x1", "x2", "x3"),), RATIONALS)

SPHERE_MAPS = ("x1^2+x2^2+x3^2", "2*x1*x3", "2*x1*x2", "x1^2-x2^2-x3^2")


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    """Reports and cache entries land in a temporary directory."""
    monkeypatch.chdir(tmp_path)


@pytest.fixture
def line():
    return LINE


@pytest.fixture
def plane_ring():
    return PLANE


@pytest.fixture
def twisted_cubic():
    return parse_parameterization(["x^3", "x^2*y", "x*y^2", "y^3"], LINE)


@pytest.fixture
def twisted_cubic_f7():
    return parse_parameterization(["x^3", "x^2*y", "x*y^2", "y^3"], LINE.with_field(FieldSpec.prime(7)))


@pytest.fixture
def circle():
    return parse_parameterization(["x^2+y^2", "2*x*y", "x^2-y^2"], LINE)


@pytest.fixture
def double_conic():
    return parse_parameterization(["x^4", "x^2*y^2", "y^4"], LINE)


@pytest.fixture
def conic():
    return parse_parameterization(["x^2", "x*y", "y^2"], LINE)


@pytest.fixture
def sphere():
    return parse_parameterization(SPHERE_MAPS, SURFACE)


@pytest.fixture
def sphere_f101():
    return parse_parameterization(SPHERE_MAPS, SURFACE.with_field(FieldSpec.prime(101)))


@pytest.fixture
def planted():
    return parse_parameterization(["x*y^2", "x*y*z", "x*z^2", "y^3"], PLANE)


@pytest.fixture
def sphere_surface():
    return SurfaceParam.of(SURFACE, SPHERE_MAPS)


@pytest.fixture
def plane_surface():
    return SurfaceParam.of(SURFACE, ["x1", "x2", "x3", "0"])
