# =============================================================================
# runners/verify_suites.py
# verify all: duality identity suites over one nef-partition
# =============================================================================
import logging
from typing import Any, Callable, Dict, List, Tuple

from joblib import Parallel, delayed

from classes.config import ToolConfig
from classes.data_models import SuiteResult
from classes.exceptions import DomainError, InvariantViolation, PreconditionFailed
from classes.hodge_numbers import chi_omega1, e_polynomial, interior_correspondence_check, pd_vanishing_check
from classes.nef_partition import (
    NefPartition, decompose, dual_partition, gamma_containment_check, validate,
)
from classes.polytope import dual_face, is_reflexive, minkowski_sum_all, polar_dual
from runners.command_runner import make_report, run_guarded
from runners.nef_commands import load_partition

logger = logging.getLogger(__name__)


def suite_reflexive(np: NefPartition) -> SuiteResult:
    result = SuiteResult('reflexive', 'PASS')
    nabla = minkowski_sum_all(np.nablas, np.d)
    if not is_reflexive(np.delta):
        result.details.append("Delta is not reflexive")
    if not is_reflexive(nabla):
        result.details.append("nabla_1 + ... + nabla_r is not reflexive")
    elif polar_dual(nabla).polytope != dual_partition(np).delta_star:
        result.details.append("nabla* differs from the dual partition's reflexive dual")
    return result


def suite_hull_identities(np: NefPartition) -> SuiteResult:
    result = SuiteResult('hull-identities', 'PASS')
    dual = dual_partition(np)
    again = dual_partition(dual)
    if not again.same_parts(np):
        result.details.append("dualizing twice does not give back the original parts")
    return result


def suite_phi_columns(np: NefPartition) -> SuiteResult:
    result = SuiteResult('phi-columns', 'PASS')
    for i in range(len(np.delta_star.vertices)):
        column = [row[i] for row in np.phi]
        if sum(column) != 1 or any(x not in (0, 1) for x in column):
            result.details.append(f"column {i + 1} is {column}")
    return result


def suite_lattice_count(np: NefPartition) -> SuiteResult:
    result = SuiteResult('lattice-count', 'PASS')
    expected = sum(nabla.l for nabla in np.nablas) - np.r + 1
    if np.delta_star.l != expected:
        result.details.append(f"l(Delta*) = {np.delta_star.l}, sum l(nabla_i) - r + 1 = {expected}")
    return result


def suite_e_polynomial(np: NefPartition) -> SuiteResult:
    result = SuiteResult('e-polynomial', 'PASS')
    e = e_polynomial(np).coefficients
    e_dual = e_polynomial(dual_partition(np)).coefficients
    if e != e_dual:
        result.details.append(f"E(Delta) = {list(e)} but E(nabla) = {list(e_dual)}")
    if e != tuple(reversed(e)):
        result.details.append(f"coefficients {list(e)} are not palindromic")
    return result


def suite_chi_duality(np: NefPartition) -> SuiteResult:
    if np.codim < 1:
        return SuiteResult('chi-duality', 'SKIP', ["d - r < 1"])
    result = SuiteResult('chi-duality', 'PASS')
    chi = chi_omega1(np).chi_omega1
    chi_dual = chi_omega1(dual_partition(np)).chi_omega1
    if chi != (-1) ** np.codim * chi_dual:
        result.details.append(f"chi = {chi}, mirror chi = {chi_dual}, d - r = {np.codim}")
    return result


def suite_interior_correspondence(np: NefPartition) -> SuiteResult:
    result = SuiteResult('interior-correspondence', 'PASS')
    for v in interior_correspondence_check(np):
        result.details.append(str(v))
    return result


def suite_decompose_order(np: NefPartition) -> SuiteResult:
    result = SuiteResult('decompose-order', 'PASS')
    forward = decompose(np)
    backward = decompose(validate(list(reversed(np.parts))))
    key = lambda report: sorted((c.polytope.vertices for c in report.components))
    if key(forward) != key(backward) or forward.sublattice_index != backward.sublattice_index:
        result.details.append("decomposition depends on the order of the parts")
    return result


def suite_face_duality(np: NefPartition) -> SuiteResult:
    result = SuiteResult('face-duality', 'PASS')
    for face in np.delta.faces:
        if face.is_whole:
            continue
        dual = dual_face(np.delta, face)
        if face.dim + dual.dim != np.d - 1:
            result.details.append(f"face {list(face.vertex_indices)}: dims {face.dim} + {dual.dim}")
    return result


def suite_gamma_containment(np: NefPartition) -> SuiteResult:
    result = SuiteResult('gamma-containment', 'PASS')
    for v in gamma_containment_check(np):
        result.details.append(f"Gamma({list(v)}) lies in no nabla_i")
    return result


def suite_pd_vanishing(np: NefPartition) -> SuiteResult:
    if len(np.delta_star.vertices) != np.d + 1:
        return SuiteResult('pd-vanishing', 'SKIP', ["Delta* is not a simplex"])
    result = SuiteResult('pd-vanishing', 'PASS')
    for v in pd_vanishing_check(np):
        result.details.append(str(v))
    return result


SUITES: List[Tuple[str, Callable[[NefPartition], SuiteResult]]] = [
    ('reflexive', suite_reflexive),
    ('hull-identities', suite_hull_identities),
    ('phi-columns', suite_phi_columns),
    ('lattice-count', suite_lattice_count),
    ('e-polynomial', suite_e_polynomial),
    ('chi-duality', suite_chi_duality),
    ('interior-correspondence', suite_interior_correspondence),
    ('decompose-order', suite_decompose_order),
    ('face-duality', suite_face_duality),
    ('gamma-containment', suite_gamma_containment),
    ('pd-vanishing', suite_pd_vanishing),
]


def run_suite(name: str, suite: Callable[[NefPartition], SuiteResult], np: NefPartition) -> SuiteResult:
    try:
        result = suite(np)
    except InvariantViolation as e:
        result = SuiteResult(name, 'FAIL', [str(e)])
    except PreconditionFailed as e:
        result = SuiteResult(name, 'SKIP', [str(e)])
    except DomainError as e:
        result = SuiteResult(name, 'FAIL', [f"{type(e).__name__}: {e}"])
    if result.status == 'PASS' and result.details:
        result.status = 'FAIL'
    log = logger.info if result.status != 'FAIL' else logger.error
    log(f"suite {name}: {result.status}")
    return result


def run_all_suites(np: NefPartition, n_jobs: int = 1) -> List[SuiteResult]:
    return Parallel(n_jobs=n_jobs, backend="threading")(
        delayed(run_suite)(name, suite, np) for name, suite in SUITES
    )


def run_verify_all(path: str, command: List[str], config: ToolConfig) -> Dict[str, Any]:
    def body():
        data, np = load_partition(path)
        suites = run_all_suites(np.canonical(), n_jobs=config.threads)
        failed = [s.name for s in suites if s.status == 'FAIL']
        return make_report(command, data, {
            'suites': [s.to_dict() for s in suites],
            'passed': not failed,
        })

    outcome = run_guarded("verify all", body)
    if outcome['success'] and not outcome['model'].results['passed']:
        outcome.update(success=False, exit_code=3,
                       error=f"failed suites: {[s['name'] for s in outcome['model'].results['suites'] if s['status'] == 'FAIL']}")
    return outcome
