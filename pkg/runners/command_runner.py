# =============================================================================
# runners/command_runner.py
# Shared error boundary for every CLI command
# =============================================================================
import logging
from typing import Any, Callable, Dict, List

from pydantic import BaseModel

from classes.exceptions import InvariantViolation, NefMirrorError
from classes.file_models import ReportFile, input_digest

logger = logging.getLogger(__name__)


def make_report(command: List[str], data, results: Dict[str, Any]) -> ReportFile:
    return ReportFile(command=list(command), input_digest=input_digest(data), results=results)


def run_guarded(name: str, action: Callable[[], BaseModel]) -> Dict[str, Any]:
    """Run a command body and translate its outcome into a result dict with an exit code"""
    logger.info(f"▶ Starting {name}")
    try:
        model = action()
        logger.info(f"✅ {name} completed")
        return {'success': True, 'model': model, 'exit_code': 0}
    except NefMirrorError as e:
        level = logging.ERROR if isinstance(e, InvariantViolation) else logging.WARNING
        logger.log(level, f"❌ {name} failed: {e}")
        return {'success': False, 'error': str(e), 'exit_code': e.exit_code, 'kind': type(e).__name__}
    except Exception as e:
        logger.error(f"❌ {name} failed unexpectedly: {e}", exc_info=True)
        return {'success': False, 'error': str(e), 'exit_code': 3, 'kind': type(e).__name__}
