"""Configuration loader for pqfib."""

from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, List, Optional

import yaml


@dataclass
class PqfibConfig:
    """Type-safe configuration for pqfib."""

    # Series
    default_order: int = 12
    max_order: int = 64

    # Numerics
    quadrature_nodes: int = 128
    mp_dps: int = 64
    numeric_tolerance: float = 1e-12
    fourier_tolerance: float = 1e-8
    oracle_tolerance: float = 1e-10
    recovery_tolerance: float = 1e-8

    # Verification sweeps
    verify_n_max: int = 30
    verify_seed: int = 7
    random_parameter_sets: int = 10
    hypergeometric_n_max: int = 12
    genfunc_parameter_sets: int = 5
    fourier_n_max: int = 8
    recovery_n_max: int = 6

    # Logging
    log_dir: str = "./logs"
    log_enabled: bool = True

    def validate(self) -> List[str]:
        """Validate configuration and return list of errors."""
        errors = []

        if self.default_order < 1:
            errors.append("default_order must be >= 1")

        if not 1 <= self.max_order <= 64:
            errors.append("max_order must be between 1 and 64")

        if self.default_order > self.max_order:
            errors.append("default_order cannot exceed max_order")

        if self.quadrature_nodes < 2:
            errors.append("quadrature_nodes must be >= 2")

        if self.mp_dps < 16:
            errors.append("mp_dps must be >= 16")

        for name in ("numeric_tolerance", "fourier_tolerance", "oracle_tolerance", "recovery_tolerance"):
            if getattr(self, name) <= 0:
                errors.append(f"{name} must be > 0")

        for name in (
            "verify_n_max",
            "random_parameter_sets",
            "hypergeometric_n_max",
            "genfunc_parameter_sets",
            "fourier_n_max",
            "recovery_n_max",
        ):
            if getattr(self, name) < 0:
                errors.append(f"{name} must be >= 0")

        return errors


DEFAULT_CONFIG = {
    "default_order": 12,
    "quadrature_nodes": 128,
    "mp_dps": 64,
    "verify_seed": 7,
    "log_dir": "./logs",
}

CONFIG_FILENAME = "pqfib_config.yaml"


def find_config_file(start_path: str = ".") -> Optional[Path]:
    """
    Search for pqfib_config.yaml starting from start_path and walking up.

    Returns the path to the config file, or None if not found.
    """
    current = Path(start_path).resolve()

    for _ in range(20):  # Max depth
        config_path = current / CONFIG_FILENAME
        if config_path.exists():
            return config_path

        parent = current.parent
        if parent == current:
            break
        current = parent

    return None


def load_config(config_path: Optional[str] = None) -> dict[str, Any]:
    """
    Load configuration from YAML file.

    Args:
        config_path: Explicit path to config file. If None, searches for it.

    Returns:
        Merged config dict (defaults + file overrides)
    """
    config = DEFAULT_CONFIG.copy()

    path = Path(config_path) if config_path else find_config_file()

    if path and path.exists():
        try:
            with open(path, "r", encoding="utf-8") as f:
                file_config = yaml.safe_load(f) or {}
            if not isinstance(file_config, dict):
                raise yaml.YAMLError(f"top level of {path.name} must be a mapping")
            config.update(file_config)
            config["_config_file"] = str(path)
        except (yaml.YAMLError, OSError) as e:
            config["_config_error"] = str(e)
    else:
        config["_config_file"] = None
        if config_path:
            config["_config_error"] = f"config file not found: {config_path}"

    return config


def config_from_dict(config_dict: dict[str, Any]) -> PqfibConfig:
    """Copy the keys that name PqfibConfig fields onto a default instance."""
    config_obj = PqfibConfig()
    for f in fields(PqfibConfig):
        if f.name in config_dict:
            setattr(config_obj, f.name, config_dict[f.name])
    return config_obj


# Cached config instance
_config: Optional[dict[str, Any]] = None


def get_config(reload: bool = False) -> dict[str, Any]:
    """Get the cached config, loading if necessary."""
    global _config
    if _config is None or reload:
        _config = load_config()
    return _config


def get_typed_config(reload: bool = False) -> PqfibConfig:
    """Get type-safe config object."""
    return config_from_dict(get_config(reload=reload))


def validate_config(config_path: Optional[str] = None) -> tuple[bool, List[str]]:
    """Validate configuration file and return (is_valid, errors)."""
    try:
        config_dict = load_config(config_path)

        if "_config_error" in config_dict:
            return False, [f"YAML error: {config_dict['_config_error']}"]

        errors = config_from_dict(config_dict).validate()
        return len(errors) == 0, errors

    except Exception as e:
        return False, [f"Validation error: {e}"]
