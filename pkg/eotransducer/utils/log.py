import logging
import os

FORMAT = "%(asctime)s [%(levelname)s] %(threadName)s: %(message)s"


def level():
    """
    level named by EOTRANSDUCER_LOG_LEVEL, INFO when unset or unknown
    """
    name = os.environ.get("EOTRANSDUCER_LOG_LEVEL", "INFO").upper()
    value = logging.getLevelName(name)
    return value if isinstance(value, int) else logging.INFO


def configure():
    logging.basicConfig(format=FORMAT, level=level())
