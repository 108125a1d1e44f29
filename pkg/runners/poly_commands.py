# =============================================================================
# runners/poly_commands.py
# poly info | dual | points
# =============================================================================
import logging
from typing import Any, Dict, List

from classes.config import ToolConfig
from classes.exceptions import InputError
from classes.file_models import parse_polytope_file, polytope_from_file, polytope_to_file, read_input
from classes.polytope import facet_interior_sum, is_reflexive, polar_dual
from runners.command_runner import make_report, run_guarded

logger = logging.getLogger(__name__)


def _strings(points) -> List[List[str]]:
    return [[str(x) for x in p] for p in points]


def poly_info(p) -> Dict[str, Any]:
    reflexive = is_reflexive(p)
    return {
        'dim': p.ambient_dim,
        'intrinsicDim': p.intrinsic_dim,
        'vertexCount': len(p.vertices),
        'facetCount': len(p.facets) if p.is_full_dimensional else len(p.local_facets),
        'l': p.l,
        'lStar': p.l_star,
        'b': p.b,
        'reflexive': reflexive,
        'facetInteriorSum': facet_interior_sum(p) if p.intrinsic_dim >= 1 else 0,
    }


def run_poly_command(action: str, path: str, command: List[str], config: ToolConfig) -> Dict[str, Any]:
    def body():
        data = read_input(path)
        p = polytope_from_file(parse_polytope_file(data))

        if action == 'info':
            return make_report(command, data, poly_info(p))
        if action == 'points':
            return make_report(command, data, {
                'l': p.l,
                'lStar': p.l_star,
                'points': _strings(p.lattice_points),
                'interiorPoints': _strings(p.interior_lattice_points),
            })
        if action == 'dual':
            dual = polar_dual(p)
            if dual.is_lattice:
                return polytope_to_file(dual.polytope)
            # rational dual: report vertices as fractions instead of a polytope file
            return make_report(command, data, {
                'latticeFlag': False,
                'vertices': [[str(x) for x in v] for v in dual.vertices],
            })
        raise InputError(f"unknown poly command {action!r}")

    return run_guarded(f"poly {action}", body)
