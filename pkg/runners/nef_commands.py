# =============================================================================
# runners/nef_commands.py
# nef validate | dualize | enumerate | decompose
# =============================================================================
import logging
from typing import Any, Dict, List, Optional

from classes.config import ToolConfig
from classes.exceptions import InputError
from classes.file_models import (
    parse_partition_file, parse_polytope_file, partition_to_file, parts_from_file, polytope_from_file, read_input,
)
from classes.nef_partition import decompose, dual_partition, enumerate_partitions, validate
from runners.command_runner import make_report, run_guarded

logger = logging.getLogger(__name__)


def load_partition(path: str):
    """Read and validate a partition file; returns (raw bytes, NefPartition)"""
    data = read_input(path)
    return data, validate(parts_from_file(parse_partition_file(data)))


def validation_summary(np) -> Dict[str, Any]:
    canonical = np.canonical()
    return {
        'valid': True,
        'dim': np.d,
        'r': np.r,
        'rays': [[str(x) for x in e] for e in canonical.delta_star.vertices],
        'phi': [list(row) for row in canonical.phi],
        'nablaVertices': [[[str(x) for x in v] for v in nabla.vertices] for nabla in canonical.nablas],
    }


def run_nef_command(action: str, path: str, command: List[str], config: ToolConfig,
                    r: Optional[int] = None) -> Dict[str, Any]:
    def body():
        if action == 'enumerate':
            if r is None or r < 1:
                raise InputError("nef enumerate needs --parts r >= 1")
            data = read_input(path)
            delta = polytope_from_file(parse_polytope_file(data))
            found = enumerate_partitions(delta, r, n_jobs=config.threads)
            return make_report(command, data, {
                'r': r,
                'count': len(found),
                'partitions': [partition_to_file(np).model_dump(by_alias=True) for np in found],
            })

        data, np = load_partition(path)
        if action == 'validate':
            return make_report(command, data, validation_summary(np))
        if action == 'dualize':
            return partition_to_file(dual_partition(np).parts)
        if action == 'decompose':
            return make_report(command, data, decompose(np).to_dict())
        raise InputError(f"unknown nef command {action!r}")

    return run_guarded(f"nef {action}", body)
