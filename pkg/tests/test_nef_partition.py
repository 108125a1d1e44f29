import pytest

from classes.exceptions import DomainError, EmptyPart, FaceError, InputError, NotNef, NotReflexive
from classes.generators import diamond_split_parts, pd_partition_parts
from classes.nef_partition import (
    _set_partitions, decompose, dual_partition, enumerate_partitions, faces_at_boundary_point,
    gamma_containment_check, support_sets, validate, vertex_assignment,
)
from classes.polytope import boundary_lattice_points, hull_from_vertices, minkowski_sum_all, origin_polytope, scale


def test_validate_records_phi(pd_33):
    assert pd_33.r == 2
    assert pd_33.d == 5
    assert pd_33.codim == 3
    assert len(pd_33.delta_star.vertices) == 6
    for i in range(6):
        assert sum(row[i] for row in pd_33.phi) == 1
    assert [sum(row) for row in pd_33.phi] == [3, 3]


def test_validate_rejects_diamond_split():
    with pytest.raises(NotNef) as excinfo:
        validate(diamond_split_parts())
    assert 'phi_' in str(excinfo.value)
    assert excinfo.value.value not in (0, 1)


def test_validate_rejects_bad_input(diamond):
    with pytest.raises(InputError):
        validate([])
    with pytest.raises(InputError):
        validate([diamond, hull_from_vertices([(0, 0, 0)], 3)])
    with pytest.raises(NotReflexive):
        validate([scale(diamond, 2)])


def test_validate_rejects_point_part(diamond):
    with pytest.raises(EmptyPart) as excinfo:
        validate([diamond, origin_polytope(2)])
    assert isinstance(excinfo.value, DomainError)
    assert excinfo.value.part == 1


def test_nablas_and_lattice_count(pd_33):
    assert [nabla.l for nabla in pd_33.nablas] == [4, 4]
    assert pd_33.delta_star.l == sum(n.l for n in pd_33.nablas) - pd_33.r + 1


def test_dual_partition_is_an_involution(pd_33, product_diamonds):
    for np in (pd_33, product_diamonds):
        dual = dual_partition(np)
        assert dual.r == np.r
        assert dual_partition(dual).same_parts(np)


def test_set_partitions_counts():
    assert len(list(_set_partitions(4, 2))) == 7
    assert len(list(_set_partitions(5, 3))) == 25
    assert list(_set_partitions(0, 1)) == []


def test_enumerate_diamond_has_no_two_part_partition(diamond):
    assert enumerate_partitions(diamond, 2) == []


def test_enumerate_square(square):
    found = enumerate_partitions(square, 2)
    assert len(found) == 7
    for np in found:
        assert minkowski_sum_all(np.parts, 2) == square


def test_enumerate_is_independent_of_worker_count(square):
    serial = enumerate_partitions(square, 2, n_jobs=1)
    threaded = enumerate_partitions(square, 2, n_jobs=2)
    assert [np.parts for np in serial] == [np.parts for np in threaded]


def test_enumerate_finds_pd_partition():
    np = validate(pd_partition_parts([2, 2]))
    found = enumerate_partitions(np.delta, 2)
    assert any(candidate.same_parts(np) for candidate in found)


def test_faces_at_boundary_point(pd_33):
    v = pd_33.delta_star.vertices[0]
    faces = faces_at_boundary_point(pd_33, v)
    assert len(faces) == 2
    with pytest.raises(FaceError):
        faces_at_boundary_point(pd_33, (0,) * 5)


def test_support_sets(pd_33):
    sets = support_sets(pd_33)
    assert sum(len(s) for s in sets.nabla_zero) == len(boundary_lattice_points(pd_33.delta_star))
    assert all(len(s) == 3 for s in sets.nabla_zero)


def test_vertex_assignment_modes(product_diamonds):
    points = boundary_lattice_points(product_diamonds.delta_star)
    canonical = vertex_assignment(product_diamonds)
    assert sorted(v for group in canonical for v in group) == sorted(points)
    strict = vertex_assignment(product_diamonds, strict=True)
    assert sum(len(g) for g in strict) >= len(points)
    assert gamma_containment_check(product_diamonds) == []


def test_decompose_product(product_diamonds):
    report = decompose(product_diamonds)
    assert len(report.components) == 2
    assert report.sublattice_index == 1
    assert report.splits_over_z
    assert [c.index_subset for c in report.components] == [(0,), (1,)]


def test_decompose_half_lattice(half_lattice):
    report = decompose(half_lattice)
    assert len(report.components) == 2
    assert report.sublattice_index == 2
    assert not report.splits_over_z
    assert report.to_dict()['sublatticeIndex'] == 2


def test_decompose_irreducible(pd_33):
    report = decompose(pd_33)
    assert len(report.components) == 1
    assert report.components[0].index_subset == (0, 1)
    assert report.splits_over_z


def test_enumerate_pd5_finds_every_split_class(pd_33):
    found = enumerate_partitions(pd_33.delta, 2)
    splits = {tuple(sorted(sum(row) for row in np.phi)) for np in found}
    assert {(3, 3), (2, 4), (1, 5)} <= splits
    assert any(np.same_parts(pd_33) for np in found)


def test_enumerate_single_part_is_delta(square):
    found = enumerate_partitions(square, 1)
    assert len(found) == 1
    assert found[0].parts == (square,)


def change_basis(parts, matrix):
    d = len(matrix)
    return [hull_from_vertices([tuple(sum(v[i] * matrix[i][j] for i in range(d)) for j in range(d))
                                for v in p.vertices], d)
            for p in parts]


def decomposition_shape(report):
    return ([c.index_subset for c in report.components],
            [c.polytope.intrinsic_dim for c in report.components],
            report.sublattice_index)


@pytest.mark.parametrize("fixture", ["product_diamonds", "half_lattice"])
def test_decompose_ignores_part_order_and_basis(request, fixture):
    np = request.getfixturevalue(fixture)
    expected = decomposition_shape(decompose(np))

    reordered = decompose(validate(list(reversed(np.parts))))
    assert sorted(decomposition_shape(reordered)[1]) == sorted(expected[1])
    assert reordered.sublattice_index == expected[2]

    shear = [[1, 0, 1, 0], [0, 1, 0, 0], [0, 1, 1, 0], [1, 0, 0, 1]]
    moved = decompose(validate(change_basis(np.parts, shear)))
    assert decomposition_shape(moved) == expected
