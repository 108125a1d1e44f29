# =============================================================================
# classes/hull.py
# Exact V <-> H conversion through the Parma Polyhedra Library
# =============================================================================
import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

import ppl

from classes.exact_math import IntVector, dot, primitive

logger = logging.getLogger(__name__)


def _coefficients(obj, dim: int) -> List[int]:
    # ppl drops trailing zero coefficients
    coeffs = [int(c) for c in obj.coefficients()]
    return coeffs + [0] * (dim - len(coeffs))


def facets_of_points(points: Sequence[IntVector], dim: int) -> List[Tuple[IntVector, int]]:
    """Facet inequalities <a, z> >= -b of the hull of full-dimensional points in Z^dim"""
    if dim == 0:
        return []
    poly = ppl.C_Polyhedron(dim, 'empty')
    for p in points:
        poly.add_generator(ppl.point(ppl.Linear_Expression([int(x) for x in p], 0)))

    facets = []
    for constraint in poly.minimized_constraints():
        if constraint.is_equality():
            raise ValueError(f"points span less than dimension {dim}")
        normal = tuple(_coefficients(constraint, dim))
        if not any(normal):
            continue
        normal = primitive(normal)
        offset = -min(dot(p, normal) for p in points)
        facets.append((normal, offset))
    logger.debug(f"Hull of {len(points)} points in dim {dim}: {len(facets)} facets")
    return sorted(facets)


def vertices_of_inequalities(inequalities: Sequence[Tuple[IntVector, int]],
                             dim: int) -> List[Tuple[Fraction, ...]]:
    """Vertices of the polyhedron {x : <a, x> >= -b}, exact rationals.

    An empty system gives an empty list; an unbounded one raises ValueError.
    """
    poly = ppl.C_Polyhedron(dim, 'universe')
    for a, b in inequalities:
        poly.add_constraint(ppl.Linear_Expression([int(x) for x in a], int(b)) >= 0)
    if poly.is_empty():
        return []

    vertices = []
    for generator in poly.minimized_generators():
        if not generator.is_point():
            raise ValueError("inequality system is unbounded")
        divisor = int(generator.divisor())
        vertices.append(tuple(Fraction(x, divisor) for x in _coefficients(generator, dim)))
    return sorted(vertices)
