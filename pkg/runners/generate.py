# =============================================================================
# runners/generate.py
# gen pd | product | diamond | halflattice
# =============================================================================
import logging
from typing import Any, Dict, List, Optional, Sequence

from classes.config import ToolConfig
from classes.exceptions import InputError
from classes.file_models import parse_polytope_file, partition_to_file, polytope_from_file, read_input
from classes.generators import diamond_split_parts, half_lattice_parts, pd_partition_parts, product_parts
from runners.command_runner import run_guarded

logger = logging.getLogger(__name__)


def run_generate(action: str, config: ToolConfig, degrees: Optional[Sequence[int]] = None,
                 factor_paths: Optional[List[str]] = None) -> Dict[str, Any]:
    def body():
        if action == 'pd':
            if not degrees:
                raise InputError("gen pd needs a list of degrees")
            parts = pd_partition_parts(degrees)
        elif action == 'product':
            if not factor_paths:
                raise InputError("gen product needs at least one factor file")
            factors = [polytope_from_file(parse_polytope_file(read_input(p))) for p in factor_paths]
            parts = product_parts(factors)
        elif action == 'diamond':
            parts = diamond_split_parts()
        elif action == 'halflattice':
            parts = half_lattice_parts()
        else:
            raise InputError(f"unknown gen command {action!r}")
        logger.info(f"Generated {len(parts)} parts in dimension {parts[0].ambient_dim}")
        return partition_to_file(parts)

    return run_guarded(f"gen {action}", body)
