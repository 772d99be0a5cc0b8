import pytest

from model.polyring import MultiDegree, Polynomial, parse_polynomial
from model.syzygy import (downgrade, h1_coordinates, hilbert_burch_check, initial_syzygy_degree,
                          koszul_cycles, koszul_H1, minimal_generators_up_to, mu_basis, rees_layer,
                          substitute_maps, syzygies_in_degree, upgrade_syzygy)


def _is_syzygy(param, components):
    total = Polynomial.zero(param.ring)
    for a, f in zip(components, param.maps):
        total = total + a * f
    return total.is_zero


def test_twisted_cubic_has_three_linear_syzygies(twisted_cubic):
    piece = syzygies_in_degree(twisted_cubic, 1)
    assert len(piece) == 3
    assert all(_is_syzygy(twisted_cubic, s) for s in piece.basis)


def test_sphere_has_four_linear_syzygies(sphere):
    assert len(syzygies_in_degree(sphere, 1)) == 4
    generators = minimal_generators_up_to(sphere, 1)
    assert [g.degree for g in generators] == [MultiDegree.of(1)] * 4


def test_no_syzygies_in_degree_zero(twisted_cubic):
    assert len(syzygies_in_degree(twisted_cubic, 0)) == 0


def test_minimal_generators_stay_in_degree_one(twisted_cubic):
    generators = minimal_generators_up_to(twisted_cubic, 2)
    assert len(generators) == 3
    assert all(g.degree == MultiDegree.of(1) for g in generators)


@pytest.mark.parametrize("name, degrees", [
    ("twisted_cubic", (1, 1, 1)),
    ("circle", (1, 1)),
    ("conic", (1, 1)),
    ("double_conic", (2, 2)),
])
def test_mu_basis_degrees(request, name, degrees):
    param = request.getfixturevalue(name)
    mu = mu_basis(param)
    assert tuple(sorted(mu.degrees)) == degrees
    assert sum(mu.degrees) == param.degree.total
    assert hilbert_burch_check(mu) != 0


def test_mu_basis_over_prime_field(twisted_cubic_f7):
    assert mu_basis(twisted_cubic_f7).degrees == (1, 1, 1)


def test_mu_basis_needs_a_line(sphere):
    with pytest.raises(ValueError):
        mu_basis(sphere)


def test_initial_syzygy_degree(planted, sphere):
    assert initial_syzygy_degree(planted) == 1
    assert initial_syzygy_degree(sphere) == 1


def test_koszul_one_cycles_are_syzygies(conic):
    Z1 = koszul_cycles(conic, 1, 1)
    assert len(Z1) == len(syzygies_in_degree(conic, 1))
    assert Z1.degree == MultiDegree.of(3)


def test_koszul_top_cycles_vanish(conic):
    assert len(koszul_cycles(conic, 3, 2)) == 0


def test_h1_of_twisted_cubic_in_degree_six(twisted_cubic):
    piece = koszul_H1(twisted_cubic, 6)
    assert len(piece.boundaries) == 6
    assert len(piece) == 3


def test_upgrade_of_a_linear_syzygy(twisted_cubic):
    cycle = [parse_polynomial(t, twisted_cubic.ring) for t in ("y", "-x", "0", "0")]
    equation = upgrade_syzygy(twisted_cubic, cycle, 1)
    assert equation == parse_polynomial("y*T1 - x*T2", twisted_cubic.rees_ring)
    assert downgrade(twisted_cubic, equation) == tuple(cycle)


def test_rees_layer_of_twisted_cubic_is_its_ideal(twisted_cubic):
    layer = rees_layer(twisted_cubic, 0, 2)
    assert len(layer) == 3
    for equation in layer.equations:
        assert equation.multidegree == MultiDegree.of(0, 2)
        assert substitute_maps(twisted_cubic, equation).is_zero


def test_downgrade_inverts_upgrade_on_h1(twisted_cubic):
    layer = rees_layer(twisted_cubic, 0, 2)
    piece = koszul_H1(twisted_cubic, 6)
    for cycle, equation in zip(layer.cycles, layer.equations):
        assert h1_coordinates(piece, downgrade(twisted_cubic, equation)) == h1_coordinates(piece, cycle)


@pytest.mark.parametrize("nu, ell", [(0, 2), (1, 2), (0, 3)])
def test_layer_dimension_matches_h1(twisted_cubic, nu, ell):
    layer = rees_layer(twisted_cubic, nu, ell)
    assert len(layer) == len(koszul_H1(twisted_cubic, nu + 3 * ell))
    assert all(substitute_maps(twisted_cubic, e).is_zero for e in layer.equations)


def test_rees_layer_starts_at_two(twisted_cubic):
    with pytest.raises(ValueError):
        rees_layer(twisted_cubic, 1, 1)
