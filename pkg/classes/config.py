# =============================================================================
# classes/config.py
# Tool configuration from environment variables
# =============================================================================
import logging
import os
from dataclasses import dataclass

from classes.exceptions import InputError

logger = logging.getLogger(__name__)

__version__ = "1.0.0"


@dataclass
class ToolConfig:
    """Runtime configuration data class"""
    threads: int = 1
    strict_vertex_mode: bool = False
    output_format: str = 'json'

    @classmethod
    def from_env(cls) -> 'ToolConfig':
        """Create config from environment variables"""
        raw = os.getenv('NEFMIRROR_THREADS', '1').strip()
        try:
            threads = int(raw)
        except ValueError:
            raise InputError(f"NEFMIRROR_THREADS must be an integer, got {raw!r}")
        if threads <= 0:
            threads = -1  # joblib: all cores
        return cls(threads=threads)
