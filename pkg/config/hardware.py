"""
Hardware Model Configuration
Loads the HardwareModel from a JSON file and keeps one cached instance per process.
"""

import json
import logging
from pathlib import Path
from typing import Optional, Union

from constraints.models import HardwareModel
from .settings import ADDER_HW_CONFIG

logger = logging.getLogger(__name__)

# Cached model and the path it came from ('' = built-in defaults)
_hardware_model: Optional[HardwareModel] = None
_hardware_path: Optional[str] = None


def load_hardware_model(path: Union[str, Path]) -> HardwareModel:
    """
    Load a hardware model from a JSON file.

    Missing keys take their defaults; unknown keys are rejected.

    Args:
        path: JSON file path

    Returns:
        HardwareModel instance

    Raises:
        FileNotFoundError: If the file does not exist
        ValueError: If the file is not a JSON object or holds invalid limits
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding='utf-8'))
    except json.JSONDecodeError as e:
        raise ValueError(f"Hardware config {path} is not valid JSON: {e}") from e

    if not isinstance(data, dict):
        raise ValueError(f"Hardware config {path} must hold a JSON object")

    model = HardwareModel.from_dict(data)
    logger.info(f"Loaded hardware model from {path}")
    return model


def get_hardware_model(path: Optional[Union[str, Path]] = None) -> HardwareModel:
    """
    Get the hardware model for a config path.

    Args:
        path: JSON file path; defaults to ADDER_HW_CONFIG (empty = built-in defaults)

    Returns:
        Cached HardwareModel (reloaded when the path changes)
    """
    global _hardware_model, _hardware_path

    resolved = str(path) if path is not None else ADDER_HW_CONFIG
    if _hardware_model is not None and _hardware_path == resolved:
        return _hardware_model

    _hardware_model = load_hardware_model(resolved) if resolved else HardwareModel()
    _hardware_path = resolved
    return _hardware_model


def reset_hardware_model() -> None:
    """Forget the cached model."""
    global _hardware_model, _hardware_path
    _hardware_model = None
    _hardware_path = None
