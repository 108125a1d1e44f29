from fractions import Fraction
from itertools import product

import pytest

from classes.exceptions import FaceError, NotInteriorError, NotReflexive
from classes.generators import REFLEXIVE_POLYGONS, polygon, simplex_multiple
from classes.hull import facets_of_points, vertices_of_inequalities
from classes.polytope import (
    HalfSpace, boundary_lattice_points, dual_face, face_in_direction, faces_of_dim, facet_interior_sum,
    hull_from_vertices, is_minkowski_summand, is_reflexive, minimal_face_containing, minkowski_sum,
    minkowski_sum_all, origin_polytope, polar_dual, scale, support_value, translate,
)


def recentered_simplex(k, d):
    return translate(simplex_multiple(k, d), (-1,) * d)


def test_hull_drops_non_vertices(diamond):
    p = hull_from_vertices(list(diamond.vertices) + [(0, 0), (1, 0)], 2)
    assert p == diamond
    assert len(p.vertices) == 4
    assert len(p.facets) == 4


def test_diamond_counts(diamond):
    assert diamond.l == 5
    assert diamond.l_star == 1
    assert diamond.b == 1
    assert diamond.interior_lattice_points == ((0, 0),)


def test_half_space_requires_primitive_normal():
    with pytest.raises(ValueError):
        HalfSpace((2, 0), 1)
    assert HalfSpace((1, 0), 1).contains((-1, 5))


def test_simplex_lattice_point_counts():
    assert simplex_multiple(3, 5).l == 56
    assert scale(simplex_multiple(3, 5), 2).l_star == 1
    assert simplex_multiple(2, 5).l == 21
    assert simplex_multiple(4, 5).l == 126
    assert simplex_multiple(8, 5).l_star == 21


def test_facet_interior_sum_of_six_simplex():
    assert facet_interior_sum(simplex_multiple(6, 5)) == 30


def test_lower_dimensional_segment():
    segment = hull_from_vertices([(0, 0), (2, 2)], 2)
    assert segment.intrinsic_dim == 1
    assert not segment.is_full_dimensional
    assert segment.lattice_points == ((0, 0), (1, 1), (2, 2))
    assert segment.l_star == 1
    assert segment.b == -1
    assert segment.relative_interior_contains((1, 1))
    assert not segment.relative_interior_contains((1, 0))


def test_lower_dimensional_triangle_in_space():
    triangle = hull_from_vertices([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)
    assert triangle.intrinsic_dim == 2
    assert triangle.l == 3
    assert triangle.l_star == 0
    assert len(triangle.equations) == 1
    assert len(triangle.faces) == 7


def test_point_polytope_has_one_interior_point():
    p = origin_polytope(3)
    assert p.intrinsic_dim == 0
    assert p.l == 1
    assert p.l_star == 1
    assert p.b == 1


def test_minkowski_sum_of_diamonds(diamond):
    assert minkowski_sum(diamond, diamond) == scale(diamond, 2)
    assert minkowski_sum_all([], 2) == origin_polytope(2)


def test_support_value_and_face_in_direction(diamond):
    assert support_value(diamond, (1, 1)) == 1
    face = face_in_direction(diamond, (1, 1))
    assert face.dim == 1
    assert sorted(face.vertices) == [(-1, 0), (0, -1)]
    assert face_in_direction(diamond, (0, 0)).is_whole


def test_polar_dual_of_diamond_is_square(diamond, square):
    dual = polar_dual(diamond)
    assert dual.is_lattice
    assert dual.polytope == square
    assert polar_dual(square).polytope == diamond


def test_polar_dual_rational_vertices(diamond):
    dual = polar_dual(scale(diamond, 2))
    assert not dual.is_lattice
    assert (Fraction(1, 2), Fraction(1, 2)) in dual.vertices
    with pytest.raises(NotReflexive):
        dual.polytope


def test_polar_dual_needs_interior_origin():
    with pytest.raises(NotInteriorError):
        polar_dual(simplex_multiple(1, 2))


def test_reflexivity():
    assert is_reflexive(recentered_simplex(6, 5))
    assert not is_reflexive(recentered_simplex(3, 5))
    for name in ('diamond', 'square', 'p2', 'p2dual', 'hexagon'):
        assert is_reflexive(polygon(name))


def test_faces_and_dual_faces(square):
    assert len(faces_of_dim(square, 0)) == 4
    assert len(faces_of_dim(square, 1)) == 4
    for face in square.faces:
        if face.is_whole:
            with pytest.raises(FaceError):
                dual_face(square, face)
            continue
        assert face.dim + dual_face(square, face).dim == 1


def test_boundary_points_and_minimal_faces(diamond):
    assert len(boundary_lattice_points(diamond)) == 4
    assert minimal_face_containing(diamond, (1, 0)).dim == 0
    with pytest.raises(FaceError):
        minimal_face_containing(diamond, (0, 0))
    with pytest.raises(FaceError):
        minimal_face_containing(diamond, (1, 1))
    with pytest.raises(NotReflexive):
        boundary_lattice_points(scale(diamond, 2))


def test_minkowski_summand_witness(square, diamond):
    horizontal = hull_from_vertices([(-1, 0), (1, 0)], 2)
    vertical = hull_from_vertices([(0, -1), (0, 1)], 2)
    witness = is_minkowski_summand(horizontal, square)
    assert witness is not None
    assert witness.mu == 1
    assert witness.complement == vertical
    assert is_minkowski_summand(horizontal, diamond) is None


def test_simplex_summands_need_stretching():
    small = recentered_simplex(3, 5)
    big = recentered_simplex(6, 5)
    witness = is_minkowski_summand(big, small)
    assert witness is not None
    assert witness.mu == 2


def test_facets_of_square_points():
    facets = facets_of_points([(1, 1), (1, -1), (-1, 1), (-1, -1), (0, 0)], 2)
    assert facets == [((-1, 0), 1), ((0, -1), 1), ((0, 1), 1), ((1, 0), 1)]


def test_facets_need_full_dimension():
    with pytest.raises(ValueError):
        facets_of_points([(0, 0), (1, 1)], 2)


def test_vertices_of_inequalities_are_exact():
    halves = [((2, 0), 1), ((-2, 0), 1), ((0, 1), 1), ((0, -1), 1)]
    assert vertices_of_inequalities(halves, 2) == [
        (Fraction(-1, 2), -1), (Fraction(-1, 2), 1), (Fraction(1, 2), -1), (Fraction(1, 2), 1),
    ]


def test_vertices_of_inequalities_empty_and_unbounded():
    assert vertices_of_inequalities([((1,), -2), ((-1,), 1)], 1) == []
    with pytest.raises(ValueError):
        vertices_of_inequalities([((1, 0), 1)], 2)


REFLEXIVE_SAMPLES = [polygon(name) for name in sorted(REFLEXIVE_POLYGONS)] + [recentered_simplex(4, 3)]


@pytest.mark.parametrize("p", REFLEXIVE_SAMPLES)
def test_hull_of_lattice_points_is_identity(p):
    assert hull_from_vertices(p.lattice_points, p.ambient_dim) == p


@pytest.mark.parametrize("p", REFLEXIVE_SAMPLES)
def test_lattice_points_split_into_interior_and_boundary(p):
    assert p.l == p.l_star + len(boundary_lattice_points(p))
    assert p.l_star == 1


@pytest.mark.parametrize("p", REFLEXIVE_SAMPLES)
def test_face_in_direction_is_the_argmin(p):
    d = p.ambient_dim
    for y in product(range(-1, 2), repeat=d):
        values = {x: sum(a * b for a, b in zip(x, y)) for x in p.lattice_points}
        low = min(values.values())
        assert low == -support_value(p, y)
        face = face_in_direction(p, y)
        assert sorted(face.polytope.lattice_points) == sorted(x for x, v in values.items() if v == low)


def test_polytope_caches_are_bounded():
    from classes import polytope
    for cached in (polytope._hull, polytope.minkowski_sum, polytope.polar_dual):
        assert cached.cache_info().maxsize == polytope.HULL_CACHE_SIZE
