# =============================================================================
# runners/hodge_commands.py
# hodge e | chi | h1q | hypersurface | pd
# =============================================================================
import logging
from typing import Any, Dict, List, Optional, Sequence

from classes.config import ToolConfig
from classes.exceptions import InputError
from classes.file_models import parse_polytope_file, polytope_from_file, read_input
from classes.hodge_numbers import (
    chi_minus_z, chi_omega1, ci_status, e_polynomial, hodge_one_ample, hodge_one_hypersurface, pd_mirror_hodge,
)
from classes.polytope import polar_dual
from runners.command_runner import make_report, run_guarded
from runners.nef_commands import load_partition

logger = logging.getLogger(__name__)


def run_hodge_command(action: str, command: List[str], config: ToolConfig, path: Optional[str] = None,
                      degrees: Optional[Sequence[int]] = None, mirror: bool = False) -> Dict[str, Any]:
    def body():
        if action == 'pd':
            if not degrees:
                raise InputError("hodge pd needs a list of degrees")
            v_report, w_report = pd_mirror_hodge(degrees, n_jobs=config.threads)
            return make_report(command, ' '.join(str(k) for k in degrees), {
                'degrees': list(degrees),
                'vReport': v_report.to_dict(),
                'wReport': w_report.to_dict(),
            })

        if action == 'hypersurface':
            data = read_input(path)
            delta = polytope_from_file(parse_polytope_file(data))
            results = {'hodge': hodge_one_hypersurface(delta, n_jobs=config.threads).to_dict()}
            if mirror:
                results['mirror'] = hodge_one_hypersurface(polar_dual(delta).polytope,
                                                           n_jobs=config.threads).to_dict()
            return make_report(command, data, results)

        data, np = load_partition(path)
        np = np.canonical()
        if action == 'e':
            return make_report(command, data, {
                'ePolynomial': e_polynomial(np).to_dict(),
                'ciStatus': ci_status(np.parts).to_dict(),
            })
        if action == 'chi':
            report = chi_omega1(np, strict=config.strict_vertex_mode, n_jobs=config.threads)
            results = report.to_dict()
            results['chiMinusZ'] = [chi_minus_z(np, i) for i in range(np.r)]
            return make_report(command, data, results)
        if action == 'h1q':
            return make_report(command, data, hodge_one_ample(np, n_jobs=config.threads).to_dict())
        raise InputError(f"unknown hodge command {action!r}")

    return run_guarded(f"hodge {action}", body)
