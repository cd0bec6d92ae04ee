"""Central configuration for dw-motion."""

import os
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Project root (relative to this file)
PROJECT_ROOT = Path(__file__).parent.parent.parent

# Shipped data (triangulations, presentations)
PACKAGE_DIR = Path(__file__).parent
DATA_DIR = PACKAGE_DIR / "data"
FIXTURES_DIR = DATA_DIR / "fixtures"

# Cache directories
CACHE_DIR = Path(os.getenv("DWM_CACHE_DIR", PROJECT_ROOT / "data" / "cache"))
GROUP_CACHE_DIR = CACHE_DIR / "groups"

# Parallel workers (unset or 0 means executor default: all cores)
MAX_WORKERS: int | None = int(os.getenv("DWM_THREADS", "0")) or None

# Desk-scale limits
MAX_GROUP_ORDER = 10_000
COLORING_STATE_CAP = 2**24
ASSOCIATIVITY_EXHAUSTIVE_LIMIT = 200
ASSOCIATIVITY_SAMPLES = 20_000

# Floating tolerance for character identities
CHARACTER_TOLERANCE = 1e-9
