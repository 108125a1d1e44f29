import pytest

from classes.exceptions import NotNef, NotReflexive, PreconditionFailed
from classes.generators import (
    check_degrees, diamond_split_parts, half_lattice_parts, pd_partition_parts, polygon, product_parts,
    projective_space_rays, simplex_multiple,
)
from classes.nef_partition import validate
from classes.polytope import is_reflexive, minkowski_sum_all, polar_dual, scale, translate


def test_projective_space_rays():
    rays = projective_space_rays(3)
    assert rays == [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]


def test_check_degrees():
    assert check_degrees([3, 3]) == 5
    assert check_degrees([5]) == 4
    with pytest.raises(PreconditionFailed):
        check_degrees([1, 4])
    with pytest.raises(PreconditionFailed):
        check_degrees([])


def test_pd_parts_sum_to_anticanonical_simplex():
    parts = pd_partition_parts([3, 3])
    delta = minkowski_sum_all(parts, 5)
    assert delta == translate(simplex_multiple(6, 5), (-1,) * 5)
    assert is_reflexive(delta)
    assert [p.l for p in parts] == [56, 56]


def test_pd_quintic_single_part():
    parts = pd_partition_parts([5])
    assert len(parts) == 1
    assert parts[0].l == 126
    assert is_reflexive(parts[0])


def test_pd_parts_validate():
    for degrees in ([3, 3], [2, 4], [2, 2, 3], [2, 2, 2, 2]):
        np = validate(pd_partition_parts(degrees))
        assert np.r == len(degrees)
        assert np.d == sum(degrees) - 1
        assert [sum(row) for row in np.phi] == list(degrees)


def test_pd_parts_intermediate_counts():
    small, big = sorted(pd_partition_parts([2, 4]), key=lambda p: p.l)
    assert small.l == 21
    assert big.l == 126
    assert scale(big, 2).l_star == 21


def test_product_of_polygons(diamond, square):
    parts = product_parts([diamond, square])
    assert all(p.ambient_dim == 4 for p in parts)
    np = validate(parts)
    assert np.r == 2
    assert polar_dual(np.delta).is_lattice


def test_product_rejects_non_reflexive_factor(diamond):
    with pytest.raises(NotReflexive):
        product_parts([diamond, scale(diamond, 2)])


def test_diamond_split_is_not_nef():
    parts = diamond_split_parts()
    assert minkowski_sum_all(parts, 2) == polygon('diamond')
    with pytest.raises(NotNef):
        validate(parts)


def test_half_lattice_parts_validate():
    np = validate(half_lattice_parts())
    assert np.d == 4
    assert all(p.intrinsic_dim == 2 for p in np.parts)
    assert all(p.l_star == 1 for p in np.parts)
