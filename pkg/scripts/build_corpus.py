#!/usr/bin/env python3
"""Write the standard corpus of polytope and partition files into a folder."""
import argparse
import logging
import sys
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Dict, List, Tuple

# Ensure project root on path so we can import local modules
PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from classes.file_models import dump_model, partition_to_file, polytope_to_file  # noqa: E402
from classes.generators import (  # noqa: E402
    REFLEXIVE_POLYGONS, diamond_split_parts, half_lattice_parts, pd_partition_parts, polygon, product_parts,
)

logger = logging.getLogger(__name__)


def configure_logging(verbose: bool = False) -> None:
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(levelname)s - %(message)s"
    )


def degree_tuples(max_dim: int) -> List[Tuple[int, ...]]:
    """Nondecreasing degrees >= 2 with sum d + 1 for d <= max_dim"""
    found = []
    for total in range(2, max_dim + 2):
        for r in range(1, total // 2 + 1):
            for degrees in combinations_with_replacement(range(2, total + 1), r):
                if sum(degrees) == total:
                    found.append(degrees)
    return sorted(found, key=lambda t: (sum(t), t))


def corpus_files(max_dim: int) -> Dict[str, str]:
    files: Dict[str, str] = {}
    for name in sorted(REFLEXIVE_POLYGONS):
        files[f"polygon_{name}.json"] = dump_model(polytope_to_file(polygon(name)))
    for degrees in degree_tuples(max_dim):
        label = '_'.join(str(k) for k in degrees)
        files[f"pd_{label}.json"] = dump_model(partition_to_file(pd_partition_parts(degrees)))
    for first, second in combinations_with_replacement(sorted(REFLEXIVE_POLYGONS), 2):
        parts = product_parts([polygon(first), polygon(second)])
        files[f"product_{first}_{second}.json"] = dump_model(partition_to_file(parts))
    files["halflattice.json"] = dump_model(partition_to_file(half_lattice_parts()))
    files["diamond_split.json"] = dump_model(partition_to_file(diamond_split_parts()))
    return files


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("output_dir", nargs="?", default="corpus", help="Folder for the files (default corpus/)")
    parser.add_argument("--max-dim", type=int, default=7, help="Largest d for the P^d partitions (default 7)")
    parser.add_argument("--verbose", action="store_true", help="Enable debug logging")
    return parser.parse_args()


def main() -> int:
    args = parse_args()
    configure_logging(args.verbose)
    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)

    files = corpus_files(args.max_dim)
    for name, text in files.items():
        (out / name).write_text(text, encoding="utf-8")
        logger.debug("Wrote %s", name)
    logger.info("Wrote %d corpus files to %s", len(files), out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
