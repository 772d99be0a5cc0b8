import pytest

from model.polyring import (RATIONALS, FieldCoefficientError, FieldSpec, GradedRingSpec, MultiDegree,
                            NotHomogeneousError, Parameterization, Polynomial, PolynomialSyntaxError,
                            UnknownVariableError, gcd, graded_basis, graded_dimension, lift,
                            parse_parameterization, parse_polynomial, to_text)


def test_graded_basis_single_block_is_lex_descending(line):
    assert graded_basis(line, 2) == ((2, 0), (1, 1), (0, 2))


def test_graded_basis_two_blocks_first_block_slowest():
    ring = GradedRingSpec((("x0", "x1"), ("y0", "y1")), RATIONALS)
    assert graded_basis(ring, (1, 1)) == ((1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1))


def test_graded_basis_negative_degree_is_empty(plane_ring):
    assert graded_basis(plane_ring, -1) == ()
    assert graded_dimension(plane_ring, -1) == 0


@pytest.mark.parametrize("nu, expected", [(0, 1), (1, 3), (2, 6), (5, 21)])
def test_graded_dimension_matches_basis(plane_ring, nu, expected):
    assert graded_dimension(plane_ring, nu) == expected
    assert len(graded_basis(plane_ring, nu)) == expected


def test_multidegree_arithmetic():
    a, b = MultiDegree.of(3, 1), MultiDegree.of(1, 2)
    assert (a + b).components == (4, 3)
    assert (a - b).clamp().components == (2, 0)
    assert a >= MultiDegree.of(3, 0)
    assert not a >= b
    assert MultiDegree.unit(3, 1).components == (0, 1, 0)


def test_parse_and_evaluate(plane_ring):
    f = parse_polynomial("x^2 - 3/7*y*z + 2", plane_ring)
    assert f.evaluate((1, 7, 1)) == 0


def test_parse_over_prime_field_reduces_coefficients(line):
    ring = line.with_field(FieldSpec.prime(7))
    f = parse_polynomial("8*x + 1/2*y", ring)
    assert f == parse_polynomial("x + 4*y", ring)


def test_parse_rejects_denominator_divisible_by_p(line):
    ring = line.with_field(FieldSpec.prime(5))
    with pytest.raises(FieldCoefficientError):
        parse_polynomial("1/5*x", ring)


def test_parse_unknown_variable(line):
    with pytest.raises(UnknownVariableError) as err:
        parse_polynomial("x + w", line)
    assert err.value.position == 4


@pytest.mark.parametrize("text", ["x +", "x ^ y", "(x + y", "", "x $ y"])
def test_parse_syntax_errors(line, text):
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial(text, line)


@pytest.mark.parametrize("text", ["x^3 - 2*x*y^2 + 5/3*y^3", "-x^2 + 1/2*y^2", "x*y", "0"])
def test_canonical_text_parses_back(line, text):
    f = parse_polynomial(text, line)
    assert parse_polynomial(to_text(f), line) == f


def test_to_text_orders_terms(line):
    assert to_text(parse_polynomial("y^2 - x^2 + x*y", line)) == "-x^2 + x*y + y^2"


def test_gcd_is_monic(line):
    f = parse_polynomial("2*x^2 - 2*y^2", line)
    g = parse_polynomial("3*x^2 + 3*x*y", line)
    assert gcd(f, g) == parse_polynomial("x + y", line)


def test_gcd_of_zero_and_p_is_monic_p(line):
    f = parse_polynomial("3*x - 3*y", line)
    assert gcd(Polynomial.zero(line), f) == parse_polynomial("x - y", line)


def test_diff_and_compose(line):
    f = parse_polynomial("x^2*y", line)
    assert f.diff("x") == parse_polynomial("2*x*y", line)
    target = GradedRingSpec((("T1", "T2"),), RATIONALS)
    g = parse_polynomial("T1*T2", target)
    images = [parse_polynomial("x", line), parse_polynomial("x + y", line)]
    assert g.compose(images) == parse_polynomial("x^2 + x*y", line)


def test_lift_into_extended_ring(line):
    wide = line.extend(("tb", "t"))
    f = parse_polynomial("x*y", line)
    lifted = lift(f, wide)
    assert lifted == parse_polynomial("x*y", wide)
    assert lifted.multidegree == MultiDegree.of(2, 0)


def test_parameterization_removes_common_factor(line):
    param = parse_parameterization(["x^2", "x*y", "x^2 + x*y"], line)
    assert param.removed_factor == parse_polynomial("x", line)
    assert param.texts() == ["x", "y", "x + y"]
    assert param.degree == MultiDegree.of(1)


def test_parameterization_rejects_mixed_degrees(line):
    with pytest.raises(NotHomogeneousError):
        parse_parameterization(["x^2", "y"], line)


def test_parameterization_rejects_inhomogeneous_form(line):
    with pytest.raises(NotHomogeneousError):
        parse_parameterization(["x^2 + y", "y^2"], line)


def test_parameterization_allows_zero_maps(plane_surface):
    assert plane_surface.param.degree == MultiDegree.of(1)


def test_field_elements_round_trip():
    for field in (RATIONALS, FieldSpec.prime(101)):
        for text in ("0", "12", "-3"):
            assert field.format_element(field.parse_element(text)) == (
                text if field.is_rational or not text.startswith("-") else "98")
    assert RATIONALS.format_element(RATIONALS.parse_element("3/7")) == "3/7"


def test_prime_field_requires_prime():
    with pytest.raises(ValueError):
        FieldSpec.prime(12)


def test_ring_rejects_zero_constant_map(line):
    with pytest.raises(ValueError):
        Parameterization(line, (Polynomial.zero(line), Polynomial.zero(line)))
