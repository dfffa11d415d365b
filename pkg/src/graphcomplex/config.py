"""Settings resolution: command-line flags > ``GC_*`` environment variables > key=value file > defaults."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Dict, Mapping, Optional

DEFAULTS = {
    "seed": "0",
    "jobs": str(os.cpu_count() or 1),
    "cache_dir": "",
    "trials": "10",
}
KEYS = tuple(DEFAULTS)


class ConfigError(ValueError):
    pass


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "graphcomplex"


def read_config_file(path) -> Dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = value.strip('"')
    return out


def resolve(flags: Mapping[str, Optional[str]], environ: Mapping[str, str] = None, config_path=None) -> Dict[str, str]:
    environ = os.environ if environ is None else environ
    settings = dict(DEFAULTS)
    path = config_path or environ.get("GC_CONFIG")
    if path is None and Path("gc.conf").is_file():
        path = "gc.conf"
    if path:
        settings.update(read_config_file(path))
    for key in KEYS:
        env = environ.get("GC_" + key.upper())
        if env is not None:
            settings[key] = env
    for key, value in flags.items():
        if value is not None:
            settings[key] = str(value)
    if not settings["cache_dir"]:
        settings["cache_dir"] = str(default_cache_dir())
    return settings
