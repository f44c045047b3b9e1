import logging
import os
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Config:
    """
    Configuration for the toolkit.
    Every setting can be changed here or through a .env file.
    """

    # Resource caps for subset enumeration
    MAX_VOTERS = int(os.getenv("TEMPORAL_MAX_VOTERS", "24"))
    MAX_ROUNDS = int(os.getenv("TEMPORAL_MAX_ROUNDS", "24"))
    MAX_WORK = int(os.getenv("TEMPORAL_MAX_WORK", str(10 ** 10)))

    # Outcome enumeration workers
    THREADS = int(os.getenv("TEMPORAL_THREADS", "1"))

    # Lattice probing
    SEED = int(os.getenv("TEMPORAL_SEED", "2024"))
    TRIALS = int(os.getenv("TEMPORAL_TRIALS", "500"))

    # Fixtures
    CORPUS_DIR = os.getenv("TEMPORAL_CORPUS_DIR", str(Path(__file__).resolve().parent / "corpus"))

    LOG_LEVEL = os.getenv("TEMPORAL_LOG_LEVEL", "WARNING").upper()

    # Default generator settings for probes
    DEFAULT_GENERATOR = {
        "n": 5,
        "ell": 4,
        "m": 3,
        "density": 0.4,
    }

    @classmethod
    def limits(cls, max_work: int | None = None):
        """Build the resource caps, optionally overriding the work budget"""
        from src.errors import ResourceLimits

        return ResourceLimits(
            max_voters=cls.MAX_VOTERS,
            max_rounds=cls.MAX_ROUNDS,
            max_work=cls.MAX_WORK if max_work is None else max_work,
        )

    @classmethod
    def validate(cls):
        """Check that the configured values are usable"""
        for name in ("MAX_VOTERS", "MAX_ROUNDS", "MAX_WORK", "THREADS", "TRIALS"):
            value = getattr(cls, name)
            if value < 1:
                raise ValueError(f"TEMPORAL_{name} must be positive, got {value}")
        # logging.getLevelNamesMapping() is Python 3.11+; fall back to the same table on 3.10
        level_names = (
            logging.getLevelNamesMapping()
            if hasattr(logging, "getLevelNamesMapping")
            else dict(logging._nameToLevel)
        )
        if cls.LOG_LEVEL not in level_names:
            raise ValueError(f"Unknown log level: {cls.LOG_LEVEL}")
        return True
