# =============================================================================
# classes/generators.py
# Standard nef-partitions: projective space, products, and two small examples
# =============================================================================
import logging
from typing import Dict, List, Sequence, Tuple

from classes.exceptions import NotReflexive, PreconditionFailed
from classes.polytope import LatticePolytope, hull_from_vertices, is_reflexive

logger = logging.getLogger(__name__)

# a few of the sixteen reflexive polygons, keyed by a short name
REFLEXIVE_POLYGONS: Dict[str, Tuple[Tuple[int, int], ...]] = {
    'diamond': ((1, 0), (0, 1), (-1, 0), (0, -1)),
    'square': ((1, 1), (1, -1), (-1, 1), (-1, -1)),
    'p2': ((1, 0), (0, 1), (-1, -1)),
    'p2dual': ((-1, -1), (2, -1), (-1, 2)),
    'hexagon': ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)),
}


def polygon(name: str) -> LatticePolytope:
    return hull_from_vertices(REFLEXIVE_POLYGONS[name], 2)


def projective_space_rays(d: int) -> List[Tuple[int, ...]]:
    """Rays e_1, ..., e_d, e_0 = -(e_1 + ... + e_d) of the fan of P^d"""
    rays = [tuple(int(i == k) for i in range(d)) for k in range(d)]
    rays.append(tuple(-1 for _ in range(d)))
    return rays


def check_degrees(degrees: Sequence[int]) -> int:
    """Return d for degrees summing to d + 1; every degree must be at least 2"""
    if not degrees:
        raise PreconditionFailed("degrees nonempty")
    if any(int(k) < 2 for k in degrees):
        raise PreconditionFailed("degrees >= 2", f"got {list(degrees)}")
    return sum(degrees) - 1


def pd_partition_parts(degrees: Sequence[int]) -> List[LatticePolytope]:
    """Delta_j = b_j + d_j * conv(0, e_1, ..., e_d) in M = Z^d.

    Rays are handed out in order: the first d_1 rays of P^d go to part 1 and
    so on. The shift b_j = -(sum of the assigned e_k, k >= 1) makes the support
    value of part j equal to 1 on its rays and 0 elsewhere, so that the sum is
    the anticanonical polytope {x_k >= -1, x_1 + ... + x_d <= 1}.
    """
    d = check_degrees(degrees)
    ray_indices = list(range(1, d + 1)) + [0]
    parts = []
    start = 0
    for degree in degrees:
        block = ray_indices[start:start + degree]
        start += degree
        shift = [0] * d
        for k in block:
            if k >= 1:
                shift[k - 1] = -1
        vertices = [tuple(shift)]
        for k in range(d):
            vertex = list(shift)
            vertex[k] += degree
            vertices.append(tuple(vertex))
        parts.append(hull_from_vertices(vertices, d))
    logger.debug(f"Built P^{d} partition for degrees {list(degrees)}")
    return parts


def simplex_multiple(k: int, d: int) -> LatticePolytope:
    """k * conv(0, e_1, ..., e_d)"""
    vertices = [(0,) * d] + [tuple(k * int(i == j) for i in range(d)) for j in range(d)]
    return hull_from_vertices(vertices, d)


def product_parts(factors: Sequence[LatticePolytope]) -> List[LatticePolytope]:
    """Embed reflexive factors into complementary coordinate blocks"""
    for n, f in enumerate(factors):
        if not is_reflexive(f):
            raise NotReflexive(f"product factor {n + 1} is not reflexive")
    total = sum(f.ambient_dim for f in factors)
    parts = []
    offset = 0
    for f in factors:
        before = (0,) * offset
        after = (0,) * (total - offset - f.ambient_dim)
        parts.append(hull_from_vertices([before + v + after for v in f.vertices], total))
        offset += f.ambient_dim
    return parts


def diamond_split_parts() -> List[LatticePolytope]:
    """The diamond as a sum of two segments; not a nef-partition"""
    return [hull_from_vertices([(-1, 0), (0, -1)], 2), hull_from_vertices([(0, 0), (1, 1)], 2)]


def half_lattice_parts() -> List[LatticePolytope]:
    """Two diamonds in complementary planes over M = Z^4 + (1/2, 1/2, 1/2, 1/2).

    Written in the basis b_1 = (1/2, 1/2, 1/2, 1/2), b_2 = e_2, b_3 = e_3, b_4 = e_4
    of M, i.e. c = (2x_1, x_2 - x_1, x_3 - x_1, x_4 - x_1). In these coordinates
    M = Z^4 and the diamond spanned by e_1, e_2 has vertices (+-2, -+1, -+1, -+1)
    and (0, +-1, 0, 0).
    """
    first = [(2, -1, -1, -1), (-2, 1, 1, 1), (0, 1, 0, 0), (0, -1, 0, 0)]
    second = [(0, 0, 1, 0), (0, 0, -1, 0), (0, 0, 0, 1), (0, 0, 0, -1)]
    return [hull_from_vertices(first, 4), hull_from_vertices(second, 4)]
