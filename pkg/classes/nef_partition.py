# =============================================================================
# classes/nef_partition.py
# Nef-partitions: validation, duality, enumeration, decomposition
# =============================================================================
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from classes.data_models import DecompositionComponent, DecompositionReport, SupportSets
from classes.exact_math import IntMatrix, IntVector, lattice_index, saturated_row_basis
from classes.exceptions import DomainError, EmptyPart, FaceError, InputError, InvariantViolation, NotNef, NotReflexive
from classes.hull import vertices_of_inequalities
from classes.polytope import (
    Face, LatticePolytope, boundary_lattice_points, dual_face, face_in_direction, hull_from_vertices,
    is_reflexive, minimal_face_containing, minkowski_sum_all, polar_dual, support_value,
)

logger = logging.getLogger(__name__)


def part_sort_key(p: LatticePolytope):
    return (p.intrinsic_dim, p.vertices)


@dataclass(frozen=True)
class NefPartition:
    """Delta = Delta_1 + ... + Delta_r with 0/1 support values on the vertices of Delta*"""
    delta: LatticePolytope
    parts: Tuple[LatticePolytope, ...]
    delta_star: LatticePolytope
    phi: Tuple[Tuple[int, ...], ...]
    nablas: Tuple[LatticePolytope, ...]

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def d(self) -> int:
        return self.delta.ambient_dim

    @property
    def codim(self) -> int:
        return self.d - self.r

    def canonical(self) -> 'NefPartition':
        order = sorted(range(self.r), key=lambda j: part_sort_key(self.parts[j]))
        return NefPartition(
            self.delta,
            tuple(self.parts[j] for j in order),
            self.delta_star,
            tuple(self.phi[j] for j in order),
            tuple(self.nablas[j] for j in order),
        )

    def same_parts(self, other: 'NefPartition') -> bool:
        return sorted(part_sort_key(p) for p in self.parts) == sorted(part_sort_key(p) for p in other.parts)


def validate(parts: Sequence[LatticePolytope]) -> NefPartition:
    if not parts:
        raise InputError("a nef-partition needs at least one part")
    d = parts[0].ambient_dim
    if any(p.ambient_dim != d for p in parts):
        raise InputError("all parts must live in the same ambient dimension")

    delta = minkowski_sum_all(parts, d)
    if not is_reflexive(delta):
        raise NotReflexive(f"Minkowski sum of the {len(parts)} parts is not reflexive")
    delta_star = polar_dual(delta).polytope

    phi = []
    for j, part in enumerate(parts):
        row = []
        for i, e in enumerate(delta_star.vertices):
            value = support_value(part, e)
            if value not in (0, 1):
                raise NotNef(j, i, value, e)
            row.append(value)
        if not any(row):
            raise EmptyPart(j)
        phi.append(tuple(row))

    for i in range(len(delta_star.vertices)):
        if sum(row[i] for row in phi) != 1:
            raise InvariantViolation(f"phi column {i + 1} does not sum to 1")

    zero = (0,) * d
    nablas = tuple(
        hull_from_vertices([zero] + [e for e, flag in zip(delta_star.vertices, row) if flag == 1], d)
        for row in phi
    )
    logger.debug(f"Validated nef-partition: d={d}, r={len(parts)}, {len(delta_star.vertices)} rays")
    return NefPartition(delta, tuple(parts), delta_star, tuple(phi), nablas)


def dual_partition(np: NefPartition) -> NefPartition:
    try:
        dual = validate(np.nablas)
    except DomainError as e:
        raise InvariantViolation(f"dual nef-partition failed validation: {e}") from e

    conv_parts = hull_from_vertices([v for p in np.parts for v in p.vertices], np.d)
    if dual.delta_star != conv_parts:
        raise InvariantViolation("nabla* differs from Conv(Delta_1, ..., Delta_r)")
    conv_nablas = hull_from_vertices([v for p in np.nablas for v in p.vertices], np.d)
    if np.delta_star != conv_nablas:
        raise InvariantViolation("Delta* differs from Conv(nabla_1, ..., nabla_r)")
    return dual


def _set_partitions(n: int, r: int) -> Iterator[Tuple[int, ...]]:
    """Assignments of n items to exactly r unlabeled nonempty blocks (restricted growth strings)"""
    labels = [0] * n

    def extend(i: int, used: int):
        if n - i < r - used:
            return
        if i == n:
            if used == r:
                yield tuple(labels)
            return
        for block in range(min(used + 1, r)):
            labels[i] = block
            yield from extend(i + 1, max(used, block + 1))

    if n == 0:
        return
    yield from extend(0, 0)


def _candidate(delta: LatticePolytope, rays: Sequence[IntVector], assignment: Tuple[int, ...],
               r: int) -> Optional[NefPartition]:
    d = delta.ambient_dim
    parts = []
    for j in range(r):
        inequalities = [(e, 1 if assignment[i] == j else 0) for i, e in enumerate(rays)]
        vertices = vertices_of_inequalities(inequalities, d)
        if not vertices or any(x.denominator != 1 for v in vertices for x in v):
            return None
        parts.append(hull_from_vertices([tuple(int(x) for x in v) for v in vertices], d))
    if minkowski_sum_all(parts, d) != delta:
        return None
    try:
        return validate(parts).canonical()
    except DomainError:
        return None


def enumerate_partitions(delta: LatticePolytope, r: int, n_jobs: int = 1) -> List[NefPartition]:
    """All nef-partitions of delta into r parts, one per class under part permutation"""
    if not is_reflexive(delta):
        raise NotReflexive("nef-partitions are enumerated for reflexive polytopes only")
    rays = polar_dual(delta).polytope.vertices
    assignments = list(_set_partitions(len(rays), r)) if r >= 1 else []
    logger.info(f"Checking {len(assignments)} vertex assignments into {r} parts")

    candidates = Parallel(n_jobs=n_jobs, backend="threading")(
        delayed(_candidate)(delta, rays, a, r) for a in assignments
    )
    seen = set()
    results = []
    for np in candidates:
        if np is None:
            continue
        key = tuple(part_sort_key(p) for p in np.parts)
        if key in seen:
            continue
        seen.add(key)
        results.append(np)
    results.sort(key=lambda np: tuple(part_sort_key(p) for p in np.parts))
    logger.info(f"Found {len(results)} nef-partitions with r={r}")
    return results


def faces_at_boundary_point(np: NefPartition, v: Sequence[int]) -> List[Face]:
    """[Delta_1(v), ..., Delta_r(v)] for v in V(Delta*)"""
    v = tuple(v)
    if v not in set(boundary_lattice_points(np.delta_star)):
        raise FaceError(f"{list(v)} is not a boundary lattice point of Delta*")
    faces = [face_in_direction(p, v) for p in np.parts]
    gamma = minimal_face_containing(np.delta_star, v)
    gamma_dual = dual_face(np.delta_star, gamma)
    if minkowski_sum_all([f.polytope for f in faces], np.d) != gamma_dual.polytope:
        raise InvariantViolation(f"sum of the faces Delta_j(v) differs from Gamma*(v) at v={list(v)}")
    return faces


def support_sets(np: NefPartition) -> SupportSets:
    boundary_star = set(boundary_lattice_points(np.delta_star))
    nabla_zero = tuple(tuple(x for x in nabla.lattice_points if x in boundary_star) for nabla in np.nablas)

    nabla_star = hull_from_vertices([v for p in np.parts for v in p.vertices], np.d)
    boundary_nabla_star = set(boundary_lattice_points(nabla_star))
    delta_zero = tuple(tuple(x for x in part.lattice_points if x in boundary_nabla_star) for part in np.parts)
    return SupportSets(nabla_zero, delta_zero)


def vertex_assignment(np: NefPartition, strict: bool = False) -> List[List[IntVector]]:
    """Points of V(Delta*) grouped by the parts i with Gamma(v) a face of nabla_i.

    Canonical mode keeps only the smallest such i; strict mode keeps all of them.
    """
    groups: List[List[IntVector]] = [[] for _ in range(np.r)]
    for v in boundary_lattice_points(np.delta_star):
        owners = _gamma_owners(np, v)
        if not owners:
            raise InvariantViolation(f"Gamma({list(v)}) is not a face of any nabla_i")
        for i in (owners if strict else owners[:1]):
            groups[i].append(v)
    return groups


def _gamma_owners(np: NefPartition, v: IntVector) -> List[int]:
    gamma = minimal_face_containing(np.delta_star, v)
    return [i for i, nabla in enumerate(np.nablas) if all(nabla.contains(x) for x in gamma.vertices)]


def gamma_containment_check(np: NefPartition) -> List[IntVector]:
    """Points v of V(Delta*) whose minimal face lies in no nabla_i"""
    return [v for v in boundary_lattice_points(np.delta_star) if not _gamma_owners(np, v)]


def decompose(np: NefPartition) -> DecompositionReport:
    """Unique splitting into irreducible nef-partitions and the index of their lattices"""
    d = np.d
    zero = (0,) * d
    remaining = list(range(np.r))
    components = []
    while remaining:
        found = None
        for size in range(1, len(remaining) + 1):
            for subset in combinations(remaining, size):
                total = minkowski_sum_all([np.parts[j] for j in subset], d)
                if total.relative_interior_contains(zero):
                    found = (subset, total)
                    break
            if found:
                break
        if found is None:
            raise InvariantViolation(f"parts {[j + 1 for j in remaining]} do not contain 0 in a relative interior")
        subset, total = found
        basis, _ = saturated_row_basis(total.vertices, d)
        components.append(DecompositionComponent(subset, total, basis))
        remaining = [j for j in remaining if j not in subset]

    if sum(c.polytope.intrinsic_dim for c in components) != d:
        raise InvariantViolation("component dimensions do not add up to d")
    stacked = IntMatrix.from_rows([row for c in components for row in c.lattice_basis.to_rows()], cols=d)
    index = lattice_index(stacked)
    components.sort(key=lambda c: c.index_subset)
    logger.debug(f"Decomposition into {len(components)} components, index {index}")
    return DecompositionReport(tuple(components), index, index == 1)
