"""Shipped fixtures and on-disk caches."""

from dw_motion.data.cache import ensure_cache_dirs, get_group_cache_path
from dw_motion.data.shipped import fixture_path, load_fixture_presentation

__all__ = [
    "ensure_cache_dirs",
    "get_group_cache_path",
    "fixture_path",
    "load_fixture_presentation",
]
