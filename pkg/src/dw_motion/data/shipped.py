"""Shipped triangulations and presentations."""

from pathlib import Path

from dw_motion.config import FIXTURES_DIR
from dw_motion.presentation.fp import Presentation
from dw_motion.presentation.parser import parse_presentation


def fixture_path(name: str) -> Path:
    """Path of a shipped fixture file, e.g. "torus7.json".

    Raises:
        FileNotFoundError: If no such fixture is shipped
    """
    path = FIXTURES_DIR / name
    if not path.exists():
        raise FileNotFoundError(f"No shipped fixture named {name!r}")
    return path


def load_fixture_presentation(name: str) -> Presentation:
    """Parse a shipped .pres file ("circle", "torus" or "t3")."""
    return parse_presentation(fixture_path(f"{name}.pres").read_text())
