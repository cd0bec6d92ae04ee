"""Disk cache for expensive group tables."""

import re
from pathlib import Path

from dw_motion.config import GROUP_CACHE_DIR


def ensure_cache_dirs() -> None:
    """Create cache directories if they don't exist."""
    GROUP_CACHE_DIR.mkdir(parents=True, exist_ok=True)


def get_group_cache_path(spec: str) -> Path:
    """Get cache path for a group's multiplication table.

    Args:
        spec: Group spec string, e.g. "SL3:3"

    Returns:
        Path like data/cache/groups/SL3_3.npz
    """
    safe = re.sub(r"[^A-Za-z0-9]+", "_", spec).strip("_")
    return GROUP_CACHE_DIR / f"{safe}.npz"
