# src/infrastructure/logging/setup.py
import logging
import sys

from pythonjsonlogger.json import JsonFormatter

_HANDLER_NAME = "qofc-cluster"


def configure_logging(level: str = "INFO", json_output: bool = True) -> None:
    """
    Install a single stderr handler on the root logger.

    Args:
        level: Logging level name
        json_output: Emit JSON lines instead of plain text
    """
    root = logging.getLogger()
    for handler in list(root.handlers):
        if handler.get_name() == _HANDLER_NAME:
            root.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.set_name(_HANDLER_NAME)
    if json_output:
        handler.setFormatter(
            JsonFormatter(
                "%(asctime)s %(levelname)s %(name)s %(message)s",
                rename_fields={"levelname": "level", "asctime": "timestamp"},
            ),
        )
    else:
        handler.setFormatter(
            logging.Formatter("%(asctime)s %(levelname)-8s %(name)s: %(message)s"),
        )
    root.addHandler(handler)
    root.setLevel(level.upper())
