# core/logger.py
# Console logging in the project's status-emoji style. Everything goes to
# stderr so that JSON reports on stdout stay machine-readable.

import logging
import sys

_CONFIGURED = False

SUCCESS = "✅"
FAILURE = "❌"
WARNING = "⚠️"
START = "🚀"
DETAIL = "🔹"


def configure_logging(level: str = "INFO") -> None:
    global _CONFIGURED
    root = logging.getLogger("tpverify")
    if not _CONFIGURED:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(asctime)s %(name)s %(message)s", "%H:%M:%S"))
        root.addHandler(handler)
        root.propagate = False
        _CONFIGURED = True
    root.setLevel(level.upper())


def get_logger(name: str) -> logging.Logger:
    if not _CONFIGURED:
        configure_logging()
    return logging.getLogger(f"tpverify.{name}")
