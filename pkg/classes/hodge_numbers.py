# =============================================================================
# classes/hodge_numbers.py
# Hodge-theoretic invariants of Calabi-Yau complete intersections
# =============================================================================
import logging
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from joblib import Parallel, delayed

from classes.data_models import ChiReport, ChiTerms, CIStatus, EPolynomial, HodgeReport
from classes.exceptions import InvariantViolation, PreconditionFailed
from classes.generators import check_degrees, pd_partition_parts
from classes.nef_partition import (
    NefPartition, dual_partition, faces_at_boundary_point, support_sets, validate, vertex_assignment,
)
from classes.polytope import (
    Face, LatticePolytope, boundary_lattice_points, dual_face, face_in_direction, is_minkowski_summand,
    is_reflexive, minimal_face_containing, minkowski_dim, minkowski_sum_all, polar_dual,
)

logger = logging.getLogger(__name__)


def _subsets(items: Sequence[int]):
    for size in range(len(items) + 1):
        yield from combinations(items, size)


def _sum(polys: Sequence[LatticePolytope], d: int) -> LatticePolytope:
    return minkowski_sum_all(list(polys), d)


# ---------------------------------------------------------------------------
# independence and classification
# ---------------------------------------------------------------------------

def _independence_margin(polys: Sequence[LatticePolytope]) -> int:
    """min over nonempty subsets S of dim(sum_S) - |S| + 1"""
    indices = range(len(polys))
    return min(minkowski_dim([polys[j] for j in subset]) - len(subset) + 1
               for size in range(1, len(polys) + 1) for subset in combinations(indices, size))


def k_independent(polys: Sequence[LatticePolytope], k: int) -> bool:
    """True iff no n-element subfamily has a sum of dimension < n + k - 1"""
    if len({p.ambient_dim for p in polys}) > 1:
        raise ValueError("k-independence needs a common ambient dimension")
    return _independence_margin(polys) >= k


def _e_coefficients(parts: Sequence[LatticePolytope], d: int) -> Tuple[int, ...]:
    r = len(parts)
    coefficients: Dict[int, int] = {}
    for subset in _subsets(range(r)):
        total = _sum([parts[j] for j in subset], d)
        if total.l_star == 0:
            continue
        exponent = total.intrinsic_dim - len(subset)
        if exponent < 0:
            raise InvariantViolation(f"negative exponent for parts {[j + 1 for j in subset]}")
        coefficients[exponent] = coefficients.get(exponent, 0) + total.l_star
    top = max(coefficients) if coefficients else 0
    return tuple(coefficients.get(q, 0) for q in range(top + 1))


def ci_status(parts: Sequence[LatticePolytope]) -> CIStatus:
    d = parts[0].ambient_dim
    r = len(parts)
    margin = _independence_margin(parts)
    max_k = max(margin, 0)

    positive = all(p.intrinsic_dim > 0 for p in parts)
    whole = _sum(parts, d)
    proper_empty = all(_sum([parts[j] for j in subset], d).l_star == 0
                       for size in range(1, r) for subset in combinations(range(r), size))
    if positive and whole.l_star == 1 and proper_empty and d >= r - 1:
        if d == r - 1:
            return CIStatus('empty', max_k)
        verdict = {0: 'twoPoints', 1: 'genusOneCurve'}.get(d - r, 'calabiYau')
        return CIStatus(verdict, max_k, _e_coefficients(parts, d), max(max_k - 2, 0))

    if max_k < 1:
        return CIStatus('empty', max_k)
    return CIStatus('irreducible' if max_k >= 2 else 'nonempty', max_k, None, max(max_k - 2, 0))


# ---------------------------------------------------------------------------
# E-polynomial and Euler characteristics
# ---------------------------------------------------------------------------

def e_polynomial(np: NefPartition) -> EPolynomial:
    coefficients = list(_e_coefficients(np.parts, np.d))
    coefficients += [0] * (np.codim + 1 - len(coefficients))
    # d = r collapses both unit terms into one constant 2
    ends = (1, 1) if np.codim > 0 else (2, 2)
    if len(coefficients) != np.codim + 1 or (coefficients[0], coefficients[-1]) != ends:
        raise InvariantViolation(f"E-polynomial {coefficients} is not of the form 1 + ... + t^{np.codim}")
    return EPolynomial(tuple(coefficients))


def big_nef_top_cohomology(np: NefPartition, i: int) -> int:
    """h^{d-r}(O(-Z_i)) = sum over J of (-1)^{r-|J|} l*(Delta_i + sum_J Delta_j)"""
    return sum((-1) ** (np.r - len(subset)) *
               _sum([np.parts[i]] + [np.parts[j] for j in subset], np.d).l_star
               for subset in _subsets(range(np.r)))


def chi_minus_z(np: NefPartition, i: int) -> int:
    """chi(O(-Z_i)) = sum over all J of (-1)^{|J|} b(Delta_i + sum_J Delta_j)"""
    if not 0 <= i < np.r:
        raise ValueError(f"part index {i + 1} out of range 1..{np.r}")
    value = sum((-1) ** len(subset) * _sum([np.parts[i]] + [np.parts[j] for j in subset], np.d).b
                for subset in _subsets(range(np.r)))
    if np.parts[i].is_full_dimensional:
        top = big_nef_top_cohomology(np, i)
        if value != (-1) ** np.codim * top:
            raise InvariantViolation(f"chi(O(-Z_{i + 1})) = {value} disagrees with top cohomology {top}")
    return value


def _slice_terms(np: NefPartition, v) -> Dict[Tuple[int, ...], int]:
    """b(sum_J Delta_j(v)) for every J, with the empty J contributing 1"""
    faces = faces_at_boundary_point(np, v)
    terms = {}
    for subset in _subsets(range(np.r)):
        terms[subset] = 1 if not subset else _sum([faces[j].polytope for j in subset], np.d).b
    return terms


def chi_divisor_slice(np: NefPartition, v) -> int:
    """chi(O_{D(v) ∩ V}) = sum over all J of (-1)^{|J|} b(sum_J Delta_j(v))"""
    return sum((-1) ** len(subset) * b for subset, b in _slice_terms(np, v).items())


def chi_omega1(np: NefPartition, strict: bool = False, n_jobs: int = 1) -> ChiReport:
    if np.codim < 1:
        raise PreconditionFailed("d - r >= 1", f"d={np.d}, r={np.r}")
    d = np.d
    ambient = d * e_polynomial(np).evaluate(-1)
    minus_z = [chi_minus_z(np, i) for i in range(np.r)]

    points = boundary_lattice_points(np.delta_star)
    slice_terms = Parallel(n_jobs=n_jobs, backend="threading")(
        delayed(_slice_terms)(np, v) for v in points
    )
    terms_at = dict(zip(points, slice_terms))
    slices = [sum((-1) ** len(s) * b for s, b in t.items()) for t in slice_terms]
    direct = ambient - sum(minus_z) - sum(slices)

    groups = vertex_assignment(np, strict=strict)
    outside = inside = 0
    for i, group in enumerate(groups):
        for v in group:
            for subset, b in terms_at[v].items():
                signed = (-1) ** (len(subset) + 1) * b
                if i in subset:
                    inside += signed
                else:
                    outside += signed
    terms = ChiTerms(ambient, -sum(minus_z), outside, inside)
    mode = 'strict' if strict else 'canonical'
    if not strict and terms.total != direct:
        raise InvariantViolation(f"regrouped chi {terms.total} differs from direct chi {direct}")
    logger.debug(f"chi(Omega^1) = {terms.total} ({mode}), terms {terms}")
    return ChiReport(terms.total, terms, mode, direct)


# ---------------------------------------------------------------------------
# interior-point correspondences
# ---------------------------------------------------------------------------

def interior_correspondence_check(np: NefPartition) -> List[Dict]:
    """Brute-force check of the two interior-point correspondences between a
    nef-partition and its dual; returns the counterexamples found."""
    dual_partition(np)
    d, r = np.d, np.r
    zero = (0,) * d
    sets = support_sets(np)
    violations: List[Dict] = []

    def record(kind, i, subset, w, detail, v=None):
        entry = {'kind': kind, 'i': i + 1, 'J': [j + 1 for j in subset], 'w': list(w), 'detail': detail}
        if v is not None:
            entry['v'] = list(v)
        violations.append(entry)

    for i in range(r):
        delta_zero = set(sets.delta_zero[i])
        with_i = [s for s in _subsets(range(r)) if i in s]

        for subset in with_i:
            lam = _sum([np.parts[i]] + [np.parts[j] for j in subset], d)
            candidates = {x for x in lam.interior_lattice_points if x != zero} | delta_zero
            for w in sorted(candidates):
                inside = lam.relative_interior_contains(w)
                rest = None
                if w in delta_zero:
                    rest = _sum([face_in_direction(np.nablas[j], w).polytope
                                 for j in range(r) if j not in subset], d)
                matches = rest is not None and rest.relative_interior_contains(zero)
                if inside != matches:
                    record('lambda', i, subset, w, f"relint {inside}, dual side {matches}")
                elif inside and lam.intrinsic_dim + rest.intrinsic_dim != d:
                    record('lambda-dim', i, subset, w,
                           f"dims {lam.intrinsic_dim} + {rest.intrinsic_dim} != {d}")

        for v in sets.nabla_zero[i]:
            faces = [face_in_direction(p, v).polytope for p in np.parts]
            for subset in with_i:
                lam = _sum([faces[j] for j in subset], d)
                candidates = set(lam.interior_lattice_points) | delta_zero
                for w in sorted(candidates):
                    inside = lam.relative_interior_contains(w)
                    rest = None
                    if w in delta_zero:
                        rest = _sum([face_in_direction(np.nablas[i], w).polytope] +
                                    [face_in_direction(np.nablas[j], w).polytope
                                     for j in range(r) if j not in subset], d)
                    matches = rest is not None and rest.relative_interior_contains(v)
                    if inside != matches:
                        record('slice', i, subset, w, f"relint {inside}, dual side {matches}", v)
                    elif inside and lam.intrinsic_dim + rest.intrinsic_dim != d - 1:
                        record('slice-dim', i, subset, w,
                               f"dims {lam.intrinsic_dim} + {rest.intrinsic_dim} != {d - 1}", v)
    if violations:
        logger.warning(f"{len(violations)} interior correspondence violations")
    return violations


# ---------------------------------------------------------------------------
# h^{1,q}
# ---------------------------------------------------------------------------

def slice_top_cohomology(np: NefPartition, face: Face) -> int:
    """sum over nonempty J of (-1)^{r-|J|} l*(sum_J Theta_j*) for a face Theta of Delta*"""
    direction = tuple(sum(col) for col in zip(*face.vertices))
    duals = [face_in_direction(p, direction).polytope for p in np.parts]
    return sum((-1) ** (np.r - len(subset)) * _sum([duals[j] for j in subset], np.d).l_star
               for subset in _subsets(range(np.r)) if subset)


def _check_ample(np: NefPartition):
    if np.codim < 3:
        raise PreconditionFailed("d - r >= 3", f"d={np.d}, r={np.r}")
    for i, part in enumerate(np.parts):
        if not part.is_full_dimensional or is_minkowski_summand(np.delta, part) is None \
                or is_minkowski_summand(part, np.delta) is None:
            raise PreconditionFailed("Delta_i and Delta are Minkowski summands of each other",
                                     f"fails for part {i + 1}")


def hodge_one_ample(np: NefPartition, n_jobs: int = 1) -> HodgeReport:
    _check_ample(np)
    d, r, m = np.d, np.r, np.codim
    proper = [f for f in np.delta_star.faces if not f.is_whole]

    def weighted(dim: int) -> int:
        total = 0
        for face in proper:
            if face.dim == dim:
                inner = face.polytope.l_star
                if inner:
                    total += inner * slice_top_cohomology(np, face)
        return total

    part_sums = sum(big_nef_top_cohomology(np, i) for i in range(r))
    vertex_brackets = sum(slice_top_cohomology(np, f) for f in proper if f.dim == 0)
    top = part_sums - d - vertex_brackets + weighted(1)

    low_faces = sum(1 for v in boundary_lattice_points(np.delta_star)
                    if minimal_face_containing(np.delta_star, v).dim <= m - 1)
    h1 = low_faces - d + weighted(m - 1)

    h = [0] * (m + 1)
    h[1] = h1
    for k in range(2, m - 1):
        h[k] = weighted(m - k - 1)
    h[m - 1] = top
    if any(x < 0 for x in h):
        raise InvariantViolation(f"negative Hodge number in {h}")

    terminal = all(f.polytope.l_star == 0 for f in proper if f.dim >= 1)
    notes = ("h^{1,1} counts distinct points of V(Delta*) on faces of Delta* of dim <= d-r-1; "
             "face brackets run over nonempty J; Delta_i and Delta are mutual Minkowski summands")
    report = HodgeReport(tuple(h), 'ampleTerminal' if terminal else 'amplePullback', notes)

    chi = chi_omega1(np, n_jobs=n_jobs).chi_omega1
    if report.euler_characteristic != chi:
        raise InvariantViolation(f"alternating sum {report.euler_characteristic} != chi(Omega^1) {chi}")
    logger.info(f"h^(1,q) = {list(h)} ({report.formula_used})")
    return report


def hodge_one_hypersurface(delta: LatticePolytope, n_jobs: int = 1) -> HodgeReport:
    if not is_reflexive(delta):
        raise PreconditionFailed("Delta reflexive")
    d = delta.ambient_dim
    if d < 4:
        raise PreconditionFailed("d >= 4", f"d={d}")
    star = polar_dual(delta).polytope

    by_codim: Dict[int, int] = {}
    for face in star.faces:
        if face.is_whole:
            continue
        codim = d - face.dim
        inner = face.polytope.l_star
        if inner:
            by_codim[codim] = by_codim.get(codim, 0) + inner * dual_face(star, face).polytope.l_star

    star_facets = sum(f.polytope.l_star for f in star.faces if f.dim == d - 1)
    delta_facets = sum(f.polytope.l_star for f in delta.faces if f.dim == d - 1)
    h = [0] * d
    h[1] = star.l - d - 1 - star_facets + by_codim.get(2, 0)
    for p in range(2, d - 2):
        h[p] = by_codim.get(p + 1, 0)
    h[d - 2] = delta.l - d - 1 - delta_facets + by_codim.get(d - 1, 0)
    if any(x < 0 for x in h):
        raise InvariantViolation(f"negative Hodge number in {h}")

    report = HodgeReport(tuple(h), 'hypersurface', "r = 1, d >= 4; faces paired with their duals")
    chi = chi_omega1(validate([delta]), n_jobs=n_jobs).chi_omega1
    if report.euler_characteristic != chi:
        raise InvariantViolation(f"alternating sum {report.euler_characteristic} != chi(Omega^1) {chi}")
    return report


def pd_vanishing_check(np: NefPartition) -> List[Dict]:
    """Vanishing of interior points on the dual side of a projective-space partition"""
    d, r = np.d, np.r
    everything = tuple(range(r))
    violations = []
    for i in range(r):
        for subset in _subsets(range(r)):
            total = _sum([np.nablas[i]] + [np.nablas[j] for j in subset], d)
            allowed = subset == everything or set(subset) | {i} == set(everything)
            if total.l_star and not allowed:
                violations.append({'kind': 'nabla-sum', 'i': i + 1, 'J': [j + 1 for j in subset],
                                   'lStar': total.l_star})
    nabla_star = dual_partition(np).delta_star
    for w in boundary_lattice_points(nabla_star):
        faces = [face_in_direction(nabla, w).polytope for nabla in np.nablas]
        for subset in _subsets(range(r)):
            if not subset:
                continue
            total = _sum([faces[j] for j in subset], d)
            if total.l_star and total.intrinsic_dim != 0:
                violations.append({'kind': 'nabla-faces', 'w': list(w), 'J': [j + 1 for j in subset],
                                   'lStar': total.l_star})
    return violations


def pd_mirror_hodge(degrees: Sequence[int], n_jobs: int = 1) -> Tuple[HodgeReport, HodgeReport]:
    """h^{1,q} of a complete intersection in P^d and of its mirror"""
    d = check_degrees(degrees)
    r = len(degrees)
    if d - r < 3:
        raise PreconditionFailed("d - r >= 3", f"degrees {list(degrees)} give d={d}, r={r}")
    np = validate(pd_partition_parts(degrees))
    v_report = hodge_one_ample(np, n_jobs=n_jobs)
    w_report = HodgeReport(tuple(reversed(v_report.h_one_q)), 'pdMirror',
                           "mirror numbers are the reversed h^{1,q} of V; sum of degrees = d + 1")

    m = np.codim
    count = -d + sum(nabla.l - 1 for nabla in np.nablas)
    if count != w_report.h_one_q[m - 1] or count != v_report.h_one_q[1]:
        raise InvariantViolation(f"mirror count {count} disagrees with h^1 = {v_report.h_one_q[1]}")

    chi_v = chi_omega1(np, n_jobs=n_jobs).chi_omega1
    chi_w = chi_omega1(dual_partition(np), n_jobs=n_jobs).chi_omega1
    if chi_v != (-1) ** m * chi_w:
        raise InvariantViolation(f"chi {chi_v} and mirror chi {chi_w} violate the duality sign")
    return v_report, w_report
