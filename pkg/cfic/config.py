# Runtime settings read from the environment (optionally from a local .env file).
import logging
import os

from dotenv import load_dotenv

load_dotenv()

# Node budget the CLI and the HTTP API hand to exact searches (library default is unlimited).
SEARCH_BUDGET = int(os.getenv("CFIC_SEARCH_BUDGET", "2000000"))

# Seed for generator anchors when none is given on the command line.
DEFAULT_SEED = int(os.getenv("CFIC_SEED", "0"))

LOG_LEVEL = os.getenv("CFIC_LOG_LEVEL", "WARNING").upper()

# Echoed in the X-Instance-Id header so several API replicas can be told apart.
INSTANCE_ID = os.getenv("INSTANCE_ID", "local")


def configure_logging(level: str | None = None) -> None:
    """Attach a stderr handler to the package logger."""
    logger = logging.getLogger("cfic")
    logger.setLevel(level or LOG_LEVEL)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
        logger.addHandler(handler)
