"""
Configuration for the triality and spin-lifting toolkit.
"""
import logging
import os
import sys
from dotenv import load_dotenv

load_dotenv()


SCALAR_MODES = ("rational", "qhalf", "complex")


class Config:
    """Configuration class for scalar modes, numerics and I/O."""

    # Scalar field
    SCALAR_MODE = os.getenv("TRISPIN_SCALAR_MODE", "rational")
    EPS_NUM = float(os.getenv("TRISPIN_EPS_NUM", "1e-9"))

    # Euler products
    EULER_CUTOFF = int(os.getenv("TRISPIN_EULER_CUTOFF", "100000"))
    EULER_WORKERS = int(os.getenv("TRISPIN_EULER_WORKERS", "1"))
    EIGEN_BOUND_EXPONENT = float(os.getenv("TRISPIN_EIGEN_BOUND", "0.5"))

    # Sampling
    DEFAULT_PRIMES = [int(p) for p in os.getenv("TRISPIN_PRIMES", "2,3,5,7").split(",") if p.strip()]
    RANDOM_SEED = int(os.getenv("TRISPIN_RANDOM_SEED", "20240601"))

    # Logging
    LOG_LEVEL = os.getenv("TRISPIN_LOG_LEVEL", "WARNING")
    LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    # Data paths
    DATA_DIR = "data"
    SCHEMA_VERSION = "v1"

    @classmethod
    def validate(cls):
        """Validate configuration values."""
        if cls.SCALAR_MODE not in SCALAR_MODES:
            raise ValueError(
                f"TRISPIN_SCALAR_MODE must be one of {', '.join(SCALAR_MODES)}, got {cls.SCALAR_MODE!r}."
            )

        if cls.EPS_NUM <= 0:
            raise ValueError("TRISPIN_EPS_NUM must be positive.")

        if cls.EULER_CUTOFF < 2:
            raise ValueError("TRISPIN_EULER_CUTOFF must be at least 2.")

        if cls.EULER_WORKERS < 1:
            raise ValueError("TRISPIN_EULER_WORKERS must be at least 1.")

        return True

    @classmethod
    def configure_logging(cls, level: str = None):
        """Send library logs to stderr at the configured level."""
        logging.basicConfig(
            level=(level or cls.LOG_LEVEL).upper(),
            format=cls.LOG_FORMAT,
            stream=sys.stderr,
            force=True,
        )
