# =============================================================================
# classes/data_exporter.py
# =============================================================================
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import pandas as pd
from pydantic import BaseModel

from classes.file_models import ReportFile, dump_model

logger = logging.getLogger(__name__)

# list-valued results that get one named row per entry
_INDEXED_LABELS: Dict[str, Callable[[int], str]] = {
    'hOneQ': lambda q: f"h^{{{q},1}}",
    'coefficients': lambda q: f"E.c{q}",
    'hVector': lambda q: f"hVector.c{q}",
    'chiMinusZ': lambda i: f"chiMinusZ.{i + 1}",
}


def _scalar(value: Any) -> str:
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(',', ':'))
    return str(value)


def _is_scalar_list(value: List) -> bool:
    return all(not isinstance(x, (list, dict)) for x in value)


class DataExporter:
    """Render command results as canonical JSON or as a fixed-width table"""

    @staticmethod
    def flatten(results: Dict[str, Any], prefix: str = '') -> List[Tuple[str, str]]:
        """One (invariant, value) row per leaf of the results object"""
        rows = []
        for key, value in results.items():
            if key == 'suites' and isinstance(value, list):
                rows.extend((f"{prefix}suite.{s['name']}", s['status']) for s in value)
            elif isinstance(value, dict):
                rows.extend(DataExporter.flatten(value, f"{prefix}{key}."))
            elif isinstance(value, list) and key in _INDEXED_LABELS and _is_scalar_list(value):
                label = _INDEXED_LABELS[key]
                rows.extend((f"{prefix}{label(n)}", _scalar(x)) for n, x in enumerate(value))
            else:
                rows.append((f"{prefix}{key}", _scalar(value)))
        return rows

    @staticmethod
    def to_table(results: Dict[str, Any]) -> str:
        df = pd.DataFrame(DataExporter.flatten(results), columns=['invariant', 'value'])
        return df.to_string(index=False) + "\n"

    @staticmethod
    def render(model: BaseModel, output_format: str = 'json') -> str:
        if output_format == 'table':
            if isinstance(model, ReportFile):
                return DataExporter.to_table(model.results)
            return DataExporter.to_table(model.model_dump(by_alias=True))
        return dump_model(model)

    @staticmethod
    def write(text: str, out_path: Optional[str] = None):
        """Write to --out if given, otherwise to stdout"""
        if out_path:
            path = Path(out_path)
            if path.parent and not path.parent.exists():
                path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding='utf-8')
            logger.info(f"Wrote {len(text)} bytes to {path}")
        else:
            sys.stdout.write(text)
            sys.stdout.flush()
