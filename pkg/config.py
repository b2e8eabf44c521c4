"""
Central configuration for regtool.
Supports defaults, optional config file (YAML), and environment overrides.
"""
from __future__ import annotations

import os
from pathlib import Path
from typing import Any

from utils import env_str, get_logger

logger = get_logger(__name__)

# -----------------------------------------------------------------------------
# Defaults
# -----------------------------------------------------------------------------

DEFAULTS: dict[str, Any] = {
    "field": {
        "char": 2,
        "verify_chars": [2, 3],
    },
    "limits": {
        "max_vertices": 64,
    },
    "regularity": {
        "method": "auto",
        "max_degree": None,
        "verify_certificates": True,
    },
    "verify": {
        "trials": 20,
        "seed": 0,
        "n": 7,
        "workers": 1,
        "locality_max_face": 2,
    },
    "output": {
        "json_indent": 2,
    },
    "logging": {
        "level": "WARNING",
        "file": None,
    },
}

# -----------------------------------------------------------------------------
# Config file loading (optional YAML)
# -----------------------------------------------------------------------------

_config_overrides: dict[str, Any] = {}


def _deep_merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    out = dict(base)
    for k, v in override.items():
        if k in out and isinstance(out[k], dict) and isinstance(v, dict):
            out[k] = _deep_merge(out[k], v)
        else:
            out[k] = v
    return out


def load_config_file(path: str | Path | None = None) -> bool:
    """Load optional YAML config. Returns True if loaded."""
    if path is None:
        for p in (
            Path(os.getcwd()) / "regtool.yaml",
            Path(os.getcwd()) / "regtool.yml",
            Path.home() / ".regtool" / "config.yaml",
        ):
            if p.exists():
                path = p
                break
    if path is None:
        return False
    path = Path(path).expanduser()
    if not path.exists():
        return False
    try:
        import yaml
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except Exception as e:
        logger.warning("Ignoring config file %s: %s", path, e)
        return False
    if not isinstance(data, dict):
        logger.warning("Ignoring config file %s: top level is not a mapping", path)
        return False
    global _config_overrides
    _config_overrides = _deep_merge(_config_overrides, data)
    _apply_env()
    _refresh_constants()
    return True


def _default(key_path: str) -> Any:
    node: Any = DEFAULTS
    for k in key_path.split("."):
        node = node[k]
    return node


def get(key_path: str, default: Any = None) -> Any:
    """Get config value by dot path, e.g. 'verify.trials'."""
    merged: Any = _deep_merge(DEFAULTS, _config_overrides)
    for k in key_path.split("."):
        if isinstance(merged, dict) and k in merged:
            merged = merged[k]
        else:
            return default
    return merged


# -----------------------------------------------------------------------------
# Environment overrides (take precedence over file)
# -----------------------------------------------------------------------------

_ENV_KEYS: dict[str, tuple[str, type]] = {
    "field.char": ("REGTOOL_CHAR", int),
    "verify.workers": ("REGTOOL_WORKERS", int),
    "verify.seed": ("REGTOOL_SEED", int),
    "logging.level": ("REGTOOL_LOG_LEVEL", str),
}


def _env_overrides() -> dict[str, Any]:
    out: dict[str, Any] = {}
    for path, (key, cast) in _ENV_KEYS.items():
        raw = env_str(key)
        if not raw:
            continue
        try:
            out[path] = cast(raw)
        except ValueError:
            logger.warning("Ignoring %s=%r: expected %s", key, raw, cast.__name__)
    return out


def _apply_env() -> None:
    for path, value in _env_overrides().items():
        keys = path.split(".")
        d = _config_overrides
        for k in keys[:-1]:
            if not isinstance(d.get(k), dict):
                d[k] = {}
            d = d[k]
        d[keys[-1]] = value


def reset() -> None:
    """Drop file overrides and re-read the environment (tests)."""
    _config_overrides.clear()
    _apply_env()
    _refresh_constants()


# Apply env on import
_apply_env()

# -----------------------------------------------------------------------------
# Convenience constants
# -----------------------------------------------------------------------------

DEFAULT_CHAR: int
VERIFY_CHARS: tuple[int, ...]
MAX_VERTICES: int
DEFAULT_METHOD: str
VERIFY_CERTIFICATES: bool
VERIFY_TRIALS: int
VERIFY_SEED: int
VERIFY_N: int
VERIFY_WORKERS: int
LOCALITY_MAX_FACE: int
JSON_INDENT: int | None
LOG_LEVEL: str
LOG_FILE: str | None

CONSTANT_KEYS: dict[str, tuple[str, Any]] = {
    "DEFAULT_CHAR": ("field.char", int),
    "VERIFY_CHARS": ("field.verify_chars", lambda v: tuple(int(p) for p in v)),
    "MAX_VERTICES": ("limits.max_vertices", int),
    "DEFAULT_METHOD": ("regularity.method", str),
    "VERIFY_CERTIFICATES": ("regularity.verify_certificates", bool),
    "VERIFY_TRIALS": ("verify.trials", int),
    "VERIFY_SEED": ("verify.seed", int),
    "VERIFY_N": ("verify.n", int),
    "VERIFY_WORKERS": ("verify.workers", int),
    "LOCALITY_MAX_FACE": ("verify.locality_max_face", int),
    "JSON_INDENT": ("output.json_indent", lambda v: v),
    "LOG_LEVEL": ("logging.level", str),
    "LOG_FILE": ("logging.file", lambda v: v),
}


def _refresh_constants() -> None:
    """Recompute the module constants after the file or environment changed."""
    g = globals()
    for name, (path, cast) in CONSTANT_KEYS.items():
        try:
            g[name] = cast(get(path))
        except (TypeError, ValueError):
            logger.warning("Ignoring %s=%r: using the default", path, get(path))
            g[name] = cast(_default(path))


_refresh_constants()
