# =============================================================================
# classes/polytope.py
# Lattice polytopes: hulls, lattice points, faces, Minkowski sums, polar duals
# =============================================================================
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from classes.exact_math import (
    IntVector, dot, primitive, rank, saturated_row_basis, solve_rational, unimodular_inverse,
)
from classes.exceptions import FaceError, InvariantViolation, NotInteriorError, NotReflexive
from classes.hull import facets_of_points

logger = logging.getLogger(__name__)

HULL_CACHE_SIZE = 1024


def _sub(u: Sequence[int], v: Sequence[int]) -> IntVector:
    return tuple(a - b for a, b in zip(u, v))


def _add(u: Sequence[int], v: Sequence[int]) -> IntVector:
    return tuple(a + b for a, b in zip(u, v))


def affine_dim(points: Sequence[IntVector]) -> int:
    if not points:
        return -1
    base = points[0]
    return rank([_sub(p, base) for p in points[1:]]) if len(points) > 1 else 0


@dataclass(frozen=True)
class HalfSpace:
    """The closed half-space {x : <x, normal> >= -offset}"""
    normal: IntVector
    offset: int

    def __post_init__(self):
        if not any(self.normal):
            raise ValueError("half-space normal must be nonzero")
        if primitive(self.normal) != tuple(self.normal):
            raise ValueError(f"half-space normal {self.normal} is not primitive")

    def slack(self, x: Sequence[int]) -> int:
        return dot(x, self.normal) + self.offset

    def contains(self, x: Sequence[int]) -> bool:
        return self.slack(x) >= 0


@dataclass(frozen=True)
class SpanEquation:
    """The affine hyperplane {x : <x, normal> = value}"""
    normal: IntVector
    value: int

    def holds(self, x: Sequence[int]) -> bool:
        return dot(x, self.normal) == self.value


@dataclass(frozen=True)
class _Frame:
    """Integral affine chart of the affine span: x = origin + sum z_i * to_ambient[i]"""
    origin: IntVector
    to_local: Tuple[IntVector, ...]
    to_ambient: Tuple[IntVector, ...]

    def local(self, x: Sequence[int]) -> IntVector:
        shifted = _sub(x, self.origin)
        return tuple(dot(shifted, col) for col in self.to_local)

    def ambient(self, z: Sequence[int]) -> IntVector:
        x = list(self.origin)
        for zi, row in zip(z, self.to_ambient):
            if zi:
                for j, r in enumerate(row):
                    x[j] += zi * r
        return tuple(x)


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of finitely many points of Z^d, with both descriptions.

    Two polytopes are equal when their vertex sets are equal.
    """
    ambient_dim: int
    vertices: Tuple[IntVector, ...]
    facets: Tuple[HalfSpace, ...] = field(compare=False)
    equations: Tuple[SpanEquation, ...] = field(compare=False)
    intrinsic_dim: int = field(compare=False)
    frame: _Frame = field(compare=False, repr=False)
    local_facets: Tuple[Tuple[IntVector, int], ...] = field(compare=False, repr=False)

    @property
    def is_full_dimensional(self) -> bool:
        return self.intrinsic_dim == self.ambient_dim

    def contains(self, x: Sequence[int]) -> bool:
        return all(e.holds(x) for e in self.equations) and all(f.contains(x) for f in self.facets)

    def relative_interior_contains(self, x: Sequence[int]) -> bool:
        if not all(e.holds(x) for e in self.equations):
            return False
        if self.intrinsic_dim == 0:
            return tuple(x) == self.vertices[0]
        return all(f.slack(x) > 0 for f in self.facets)

    @cached_property
    def lattice_points(self) -> Tuple[IntVector, ...]:
        return self._enumerate(strict=False)

    @cached_property
    def interior_lattice_points(self) -> Tuple[IntVector, ...]:
        return self._enumerate(strict=True)

    @property
    def l(self) -> int:
        return len(self.lattice_points)

    @cached_property
    def l_star(self) -> int:
        return len(self.interior_lattice_points)

    @property
    def b(self) -> int:
        return (-1) ** self.intrinsic_dim * self.l_star

    def _enumerate(self, strict: bool) -> Tuple[IntVector, ...]:
        k = self.intrinsic_dim
        if k == 0:
            return (self.vertices[0],)
        local_vertices = [self.frame.local(v) for v in self.vertices]
        points = [self.frame.ambient(z) for z in
                  _scan_box(local_vertices, self.local_facets, k, 1 if strict else 0)]
        logger.debug(f"Enumerated {len(points)} {'interior ' if strict else ''}points "
                     f"of a {k}-dim polytope with {len(self.vertices)} vertices")
        return tuple(sorted(points))

    @cached_property
    def vertex_incidence(self) -> Tuple[FrozenSet[int], ...]:
        """For each facet, the indices of the vertices lying on it"""
        return tuple(frozenset(i for i, v in enumerate(self.vertices) if f.slack(v) == 0)
                     for f in self.facets)

    @cached_property
    def faces(self) -> Tuple['Face', ...]:
        """Every nonempty face, sorted by (dim, vertex indices)"""
        incidence = self.vertex_incidence
        whole = frozenset(range(len(self.vertices)))
        found = {whole} | set(incidence)
        frontier = set(incidence)
        while frontier:
            fresh = set()
            for subset in frontier:
                for facet_set in incidence:
                    meet = subset & facet_set
                    if meet and meet not in found:
                        fresh.add(meet)
            found |= fresh
            frontier = fresh

        faces = []
        zero = (0,) * self.ambient_dim
        for subset in found:
            containing = [self.facets[j].normal for j, inc in enumerate(incidence) if subset <= inc]
            direction = reduce(_add, containing, zero) if subset != whole else zero
            indices = tuple(sorted(subset))
            faces.append(Face(self, indices, direction, affine_dim([self.vertices[i] for i in indices])))
        faces.sort(key=lambda f: (f.dim, f.vertex_indices))
        return tuple(faces)


def _scan_box(vertices: List[IntVector], facets: Sequence[Tuple[IntVector, int]],
              k: int, margin: int) -> List[IntVector]:
    """Integer points z with <a, z> + b >= margin for every facet, scanned coordinate
    by coordinate inside the vertex bounding box. Each prefix is pruned using the
    largest value the remaining coordinates can contribute inside the box."""
    lo = [min(v[i] for v in vertices) for i in range(k)]
    hi = [max(v[i] for v in vertices) for i in range(k)]
    # rest[f][i]: max over the box of sum_{l > i} a_l z_l
    rest = []
    for a, _ in facets:
        suffix = [0] * (k + 1)
        for i in range(k - 1, -1, -1):
            suffix[i] = suffix[i + 1] + max(a[i] * lo[i], a[i] * hi[i])
        rest.append([suffix[i + 1] for i in range(k)])

    results: List[IntVector] = []
    partial = [0] * len(facets)
    prefix: List[int] = []

    def descend(i: int):
        low, high = lo[i], hi[i]
        for f, (a, b) in enumerate(facets):
            need = margin - b - partial[f] - rest[f][i]
            ai = a[i]
            if ai > 0:
                low = max(low, -((-need) // ai))
            elif ai < 0:
                high = min(high, need // ai)
            elif need > 0:
                return
            if low > high:
                return
        for z in range(low, high + 1):
            prefix.append(z)
            if i == k - 1:
                results.append(tuple(prefix))
            else:
                for f, (a, _) in enumerate(facets):
                    partial[f] += a[i] * z
                descend(i + 1)
                for f, (a, _) in enumerate(facets):
                    partial[f] -= a[i] * z
            prefix.pop()

    descend(0)
    return results


@dataclass(frozen=True)
class Face:
    """A nonempty face of a lattice polytope"""
    parent: LatticePolytope
    vertex_indices: Tuple[int, ...]
    supporting_direction: IntVector = field(compare=False)
    dim: int = field(compare=False)

    @property
    def vertices(self) -> Tuple[IntVector, ...]:
        return tuple(self.parent.vertices[i] for i in self.vertex_indices)

    @property
    def is_whole(self) -> bool:
        return len(self.vertex_indices) == len(self.parent.vertices)

    @cached_property
    def polytope(self) -> LatticePolytope:
        return hull_from_vertices(self.vertices, self.parent.ambient_dim)


def hull_from_vertices(points: Iterable[Sequence[int]], ambient_dim: int) -> LatticePolytope:
    """Irredundant vertex and facet descriptions of the hull of lattice points.

    Lower-dimensional hulls get their facets inside the affine span plus the
    span equations.
    """
    pts = tuple(sorted({tuple(int(x) for x in p) for p in points}))
    if not pts:
        raise ValueError("hull of an empty point set")
    for p in pts:
        if len(p) != ambient_dim:
            raise ValueError(f"point {p} does not have {ambient_dim} coordinates")
    return _hull(pts, ambient_dim)


@lru_cache(maxsize=HULL_CACHE_SIZE)
def _hull(pts: Tuple[IntVector, ...], d: int) -> LatticePolytope:
    origin = pts[0]
    diffs = [_sub(p, origin) for p in pts[1:]]
    k = rank(diffs) if diffs else 0

    if k == d:
        identity = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
        frame = _Frame((0,) * d, identity, identity)
        equations: Tuple[SpanEquation, ...] = ()
    else:
        _, completion = saturated_row_basis(diffs, d)
        inverse = unimodular_inverse(completion)
        frame = _Frame(origin,
                       tuple(inverse.column(i) for i in range(k)),
                       tuple(completion.row(i) for i in range(k)))
        equations = tuple(
            SpanEquation(inverse.column(i), dot(origin, inverse.column(i))) for i in range(k, d)
        )

    local_points = [frame.local(p) for p in pts]
    if k == 0:
        return LatticePolytope(d, (origin,), (), equations, 0, frame, ())

    local_facets = tuple(facets_of_points(local_points, k))
    vertices = []
    for p, z in zip(pts, local_points):
        tight = [a for a, b in local_facets if dot(a, z) + b == 0]
        if rank(tight) == k:
            vertices.append(p)

    facets = []
    for a, b in local_facets:
        normal = [0] * d
        for ai, col in zip(a, frame.to_local):
            if ai:
                for j, c in enumerate(col):
                    normal[j] += ai * c
        normal = primitive(normal)
        facets.append(HalfSpace(normal, b - dot(frame.origin, normal)))
    facets.sort(key=lambda h: (h.normal, h.offset))
    return LatticePolytope(d, tuple(sorted(vertices)), tuple(facets), equations, k, frame, local_facets)


def point_polytope(point: Sequence[int]) -> LatticePolytope:
    return hull_from_vertices([point], len(point))


def origin_polytope(d: int) -> LatticePolytope:
    return point_polytope((0,) * d)


def translate(p: LatticePolytope, t: Sequence[int]) -> LatticePolytope:
    return hull_from_vertices([_add(v, t) for v in p.vertices], p.ambient_dim)


def scale(p: LatticePolytope, k: int) -> LatticePolytope:
    return hull_from_vertices([tuple(k * x for x in v) for v in p.vertices], p.ambient_dim)


@lru_cache(maxsize=HULL_CACHE_SIZE)
def minkowski_sum(p: LatticePolytope, q: LatticePolytope) -> LatticePolytope:
    if p.ambient_dim != q.ambient_dim:
        raise ValueError(f"Minkowski sum of polytopes in dims {p.ambient_dim} and {q.ambient_dim}")
    return hull_from_vertices([_add(u, v) for u in p.vertices for v in q.vertices], p.ambient_dim)


def minkowski_sum_all(polys: Sequence[LatticePolytope], ambient_dim: int) -> LatticePolytope:
    """Sum of a family; the empty family sums to the origin polytope"""
    return reduce(minkowski_sum, polys, origin_polytope(ambient_dim))


def minkowski_dim(polys: Sequence[LatticePolytope]) -> int:
    """Dimension of the Minkowski sum, read off the edge directions without a hull"""
    directions = [_sub(v, p.vertices[0]) for p in polys for v in p.vertices[1:]]
    return rank(directions) if directions else 0


def support_value(p: LatticePolytope, y: Sequence[int]) -> int:
    """a = -min over p of <x, y>"""
    return -min(dot(v, y) for v in p.vertices)


def face_in_direction(p: LatticePolytope, y: Sequence[int]) -> Face:
    values = [dot(v, y) for v in p.vertices]
    low = min(values)
    indices = tuple(i for i, val in enumerate(values) if val == low)
    return Face(p, indices, tuple(y), affine_dim([p.vertices[i] for i in indices]))


def faces_of_dim(p: LatticePolytope, k: int) -> List[Face]:
    return [f for f in p.faces if f.dim == k]


def is_reflexive(p: LatticePolytope) -> bool:
    # primitive normals with all offsets 1 force 0 to be the only interior point
    return p.is_full_dimensional and bool(p.facets) and all(f.offset == 1 for f in p.facets)


@dataclass(frozen=True)
class PolarDual:
    """{y : <x, y> >= -1 for x in p}; vertices are rational in general"""
    vertices: Tuple[Tuple[Fraction, ...], ...]
    is_lattice: bool
    ambient_dim: int

    @cached_property
    def polytope(self) -> LatticePolytope:
        if not self.is_lattice:
            raise NotReflexive("polar dual has non-integral vertices")
        return hull_from_vertices([tuple(int(x) for x in v) for v in self.vertices], self.ambient_dim)


@lru_cache(maxsize=HULL_CACHE_SIZE)
def polar_dual(p: LatticePolytope) -> PolarDual:
    if not p.is_full_dimensional or any(f.offset <= 0 for f in p.facets):
        raise NotInteriorError("polar dual needs a full-dimensional polytope with 0 strictly inside")
    vertices = tuple(sorted(tuple(Fraction(x, f.offset) for x in f.normal) for f in p.facets))
    is_lattice = all(x.denominator == 1 for v in vertices for x in v)
    return PolarDual(vertices, is_lattice, p.ambient_dim)


def dual_face(p: LatticePolytope, face: Face) -> Face:
    """Theta* = {y in p* : <x, y> = -1 for x in Theta}, a face of the polar dual"""
    if not is_reflexive(p):
        raise NotReflexive("dual faces are defined here for reflexive polytopes")
    if face.is_whole:
        raise FaceError("the whole polytope has an empty dual face")
    dual = polar_dual(p).polytope
    direction = reduce(_add, face.vertices, (0,) * p.ambient_dim)
    result = face_in_direction(dual, direction)
    members = set(face.vertex_indices)
    expected = sorted(f.normal for f, inc in zip(p.facets, p.vertex_incidence) if members <= inc)
    if sorted(result.vertices) != expected:
        raise InvariantViolation(f"dual face of {face.vertices} does not match the incident facet normals")
    return result


def boundary_lattice_points(p: LatticePolytope) -> Tuple[IntVector, ...]:
    """V(p): the lattice points of a reflexive polytope other than the origin"""
    if not is_reflexive(p):
        raise NotReflexive("boundary lattice points are taken on reflexive polytopes")
    zero = (0,) * p.ambient_dim
    return tuple(x for x in p.lattice_points if x != zero)


def minimal_face_containing(p: LatticePolytope, v: Sequence[int]) -> Face:
    v = tuple(v)
    if not p.contains(v):
        raise FaceError(f"point {list(v)} lies outside the polytope")
    tight = [j for j, f in enumerate(p.facets) if f.slack(v) == 0]
    if not tight:
        raise FaceError(f"point {list(v)} lies in the relative interior")
    indices = tuple(i for i, vert in enumerate(p.vertices)
                    if all(p.facets[j].slack(vert) == 0 for j in tight))
    direction = reduce(_add, (p.facets[j].normal for j in tight), (0,) * p.ambient_dim)
    return Face(p, indices, direction, affine_dim([p.vertices[i] for i in indices]))


def facet_interior_sum(p: LatticePolytope) -> int:
    """Sum of l* over the facets of p"""
    return sum(f.polytope.l_star for f in faces_of_dim(p, p.intrinsic_dim - 1))


@dataclass(frozen=True)
class SummandWitness:
    mu: int
    complement: LatticePolytope


def is_minkowski_summand(part: LatticePolytope, whole: LatticePolytope) -> Optional[SummandWitness]:
    """Witness (mu, complement) with mu*whole = part + complement, or None.

    part is a summand exactly when its support function is linear on the normal
    cone of every vertex of whole; mu is then the smallest integer stretching
    every edge of whole at least as much as part moves along it.
    """
    if part.ambient_dim != whole.ambient_dim:
        raise ValueError("summand test across different ambient dimensions")
    if not whole.is_full_dimensional:
        raise FaceError("Minkowski summand test needs a full-dimensional whole")

    chosen: List[IntVector] = []
    for w_index, w in enumerate(whole.vertices):
        generators = [f.normal for f, inc in zip(whole.facets, whole.vertex_incidence) if w_index in inc]
        interior = reduce(_add, generators, (0,) * whole.ambient_dim)
        face = face_in_direction(part, interior)
        if len(face.vertex_indices) != 1:
            return None
        x = face.vertices[0]
        if any(dot(x, g) != -support_value(part, g) for g in generators):
            return None
        chosen.append(x)

    mu = 1
    for edge in faces_of_dim(whole, 1):
        i, j = edge.vertex_indices
        step = _sub(whole.vertices[j], whole.vertices[i])
        moved = _sub(chosen[j], chosen[i])
        ratio = solve_rational([[s] for s in step], moved)
        if ratio is None or ratio[0] < 0:
            return None
        mu = max(mu, math.ceil(ratio[0]))

    complement = hull_from_vertices(
        [_sub(tuple(mu * c for c in w), x) for w, x in zip(whole.vertices, chosen)], whole.ambient_dim
    )
    if minkowski_sum(part, complement) != scale(whole, mu):
        raise InvariantViolation("Minkowski summand witness failed reconstruction")
    return SummandWitness(mu, complement)
