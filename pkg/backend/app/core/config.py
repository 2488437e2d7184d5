"""Central configuration singleton for xopenergy."""

import os
from functools import lru_cache
from pathlib import Path
from typing import Optional

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class _Config(BaseSettings):
    # ---------------------- paths ---------------------- #
    BASE_DIR: Path = Path(__file__).resolve().parent.parent.parent.parent
    LOG_DIR: Path = Field(default_factory=lambda: Path(__file__).resolve().parent.parent.parent.parent / "logs")
    OUTPUT_DIR: Path = Field(default_factory=lambda: Path(__file__).resolve().parent.parent.parent.parent / "output")

    # -------------------- precision -------------------- #
    PRECISION_BITS: int = 53
    HIGH_PRECISION_BITS: int = 256

    # ------------------- root finding ------------------ #
    ROOT_TOL_53: float = 1e-13
    ROOT_TOL_256: float = 1e-30
    REAL_TAU: float = 1e-12
    ABERTH_MAX_SWEEPS: int = 200
    NEWTON_MAX_STEPS: int = 100
    ROOT_POLISH_WORKERS: int = 4

    # -------------- stieltjes relations ---------------- #
    COINCIDENCE_GUARD: float = 1e-13

    # --------------------- energy ---------------------- #
    HESSIAN_CLASS_TOL: float = 1e-9
    LOG_CONCAVITY_TOL: float = 1e-12
    PEARSON_TOL: float = 1e-10
    PEARSON_GRID_POINTS: int = 101
    CONDITION_GRID_POINTS: int = 2001
    UNBOUNDED_WINDOW: float = 8.0  # half-width used to sample unbounded domains
    BOUNDARY_OFFSET: float = 1e-6
    FD_GRADIENT_STEP: float = 1e-5
    FD_HESSIAN_STEP: float = 1e-4

    # ---------------------- scan ----------------------- #
    SCAN_WINDOW: float = 0.2
    SCAN_REAL_SAMPLES: int = 401
    SCAN_RADIUS: float = 0.05
    SCAN_CIRCLE_SAMPLES: int = 360
    SCAN_EPSILON: float = 1e-8

    # ------------------- multistart -------------------- #
    MULTISTART_STARTS: int = 50
    MULTISTART_SEED: int = 42
    MULTISTART_MAX_STEPS: int = 2000
    MULTISTART_GRAD_TOL: float = 1e-10
    MULTISTART_BOX_SCALE: float = 1.5
    MULTISTART_WORKERS: int = 4

    # ---------------- resources & misc ---------------- #
    LOG_LEVEL: str = "INFO"

    # -------------- enhanced logging settings ---------- #
    ENHANCED_LOGGING_ENABLED: bool = True
    LOG_STRUCTURED_FORMAT: bool = True
    LOG_CORRELATION_ENABLED: bool = True
    LOG_PERFORMANCE_TRACKING: bool = True
    LOG_MAX_FILE_SIZE_MB: int = 20
    LOG_ROTATION_BACKUP_COUNT: int = 3

    # pydantic-settings behavior
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",      # ignore unknown keys
        frozen=True          # make immutable
    )

    def root_tolerance(self, bits: int) -> float:
        """Default relative Newton tolerance for a working precision.

        53 and 256 bits use the configured values; other precisions scale
        as ``2**(-0.85*bits)`` clamped between the two.
        """
        if bits <= 53:
            return self.ROOT_TOL_53
        if bits >= 256:
            return self.ROOT_TOL_256
        scaled = 2.0 ** (-0.85 * bits)
        return min(self.ROOT_TOL_53, max(self.ROOT_TOL_256, scaled))


def _apply_yaml_overrides(cfg: _Config, yaml_path: Optional[Path]) -> _Config:
    """Return a *new* Config overridden by YAML if provided."""
    if yaml_path and Path(yaml_path).exists():
        try:
            data = yaml.safe_load(Path(yaml_path).read_text()) or {}
            update_data = {key.upper(): value for key, value in data.items()}
            # model_copy skips validation, so re-validate through the constructor
            return _Config(**{**cfg.model_dump(), **update_data})
        except Exception as e:
            print(f"Error loading YAML file: {e}")
    return cfg


CONFIG_ENV_VAR = "XOPENERGY_CONFIG"


@lru_cache
def get_config(yaml_path: Optional[Path] = None) -> _Config:
    """Return **singleton** Config; the YAML path defaults to $XOPENERGY_CONFIG."""
    yaml_path = yaml_path or os.environ.get(CONFIG_ENV_VAR)
    return _apply_yaml_overrides(_Config(), yaml_path)
