"""JSON reports and CSV scan grids."""

import json
from enum import Enum
from pathlib import Path
from typing import Any, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel

from backend.app.core.singletons import get_logger
from backend.app.explorer.scan import ScanResult

_logger = get_logger()

SCAN_COLUMNS = ["re(z)", "im(z)", "log_f"]


def to_jsonable(payload: Any) -> Any:
    """Recursively convert reports, enums, numpy and mpmath values into JSON types."""
    if isinstance(payload, BaseModel):
        return to_jsonable(payload.model_dump())
    if isinstance(payload, Enum):
        return payload.value
    if isinstance(payload, dict):
        return {str(k): to_jsonable(v) for k, v in payload.items()}
    if isinstance(payload, (list, tuple)):
        return [to_jsonable(v) for v in payload]
    if isinstance(payload, np.ndarray):
        return to_jsonable(payload.tolist())
    if isinstance(payload, (np.floating, np.integer)):
        return payload.item()
    if isinstance(payload, complex):
        return {"re": payload.real, "im": payload.imag}
    if isinstance(payload, (str, int, float, bool)) or payload is None:
        return payload
    return str(payload)


def dumps(payload: Any) -> str:
    return json.dumps(to_jsonable(payload), indent=2, sort_keys=True)


def write_json(payload: Any, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(payload))
    _logger.info(f"Report written to {path}")
    return path


def scan_frame(result: ScanResult) -> pd.DataFrame:
    return pd.DataFrame(result.rows(), columns=SCAN_COLUMNS)


def write_scan_csv(result: ScanResult, path: Union[str, Path]) -> Path:
    """Write ``re(z), im(z), log_f`` with 17 significant digits."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    scan_frame(result).to_csv(path, index=False, float_format="%.17g")
    _logger.info(f"Scan grid ({len(result.samples)} samples) written to {path}")
    return path
