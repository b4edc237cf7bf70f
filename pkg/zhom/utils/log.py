"""Logging for the ``zhom`` logger tree: a colour console handler on stderr and an optional daily log file.

Handlers hang off the ``zhom`` logger, never the root, so stdout stays reserved for command output.
"""

import json
import logging
import pathlib
from fractions import Fraction
from logging.handlers import TimedRotatingFileHandler
from typing import Literal

from colorlog import ColoredFormatter
from pydantic import BaseModel

from .env import EnvUtils

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]

PACKAGE_LOGGER = "zhom"
DIR_LOGS = pathlib.Path(EnvUtils.get_env("ZHOM_LOG_DIR", str(pathlib.Path(__file__).resolve().parents[2] / "logs")))

_CONSOLE_FORMAT = (
    "%(green)s%(asctime)s%(reset)s %(log_color)s%(levelname)-7s%(reset)s "
    "[%(blue)s%(name)s%(reset)s:%(lineno)d] %(message)s"
)
_FILE_FORMAT = "%(asctime)s %(levelname)s [%(name)s:%(lineno)d] %(message)s (%(threadName)s)"
_LOG_COLORS = {"DEBUG": "cyan", "INFO": "white", "WARNING": "yellow", "ERROR": "red", "CRITICAL": "red,bg_white"}

_configured = False


def _console_handler() -> logging.Handler:
    handler = logging.StreamHandler()
    handler.setFormatter(ColoredFormatter(_CONSOLE_FORMAT, log_colors=_LOG_COLORS))
    return handler


def _file_handler() -> logging.Handler:
    DIR_LOGS.mkdir(parents=True, exist_ok=True)
    handler = TimedRotatingFileHandler(DIR_LOGS / "zhom.log", when="midnight", backupCount=30, encoding="utf-8")
    handler.setFormatter(logging.Formatter(_FILE_FORMAT))
    return handler


def setup_logging(level: LogLevel = "WARNING") -> None:
    """Attach the handlers once; later calls only change the level.

    ``ZHOM_LOG_FILE=0`` turns the file handler off.
    """
    global _configured
    package = logging.getLogger(PACKAGE_LOGGER)
    package.setLevel(level)
    if _configured:
        return
    package.addHandler(_console_handler())
    if EnvUtils.get_flag("ZHOM_LOG_FILE", True):
        package.addHandler(_file_handler())
    _configured = True
    package.debug(f"logging at {level}, files in {DIR_LOGS}")


def set_log_level(level: LogLevel) -> None:
    logging.getLogger(PACKAGE_LOGGER).setLevel(level)


def get_logger(name: str, level: int | LogLevel | None = None) -> logging.Logger:
    """Logger ``name`` with an extra ``error_exc`` method that also logs the active traceback.

    Without ``level`` the logger inherits from the ``zhom`` logger.
    """
    logger = logging.getLogger(name)
    if level is not None:
        logger.setLevel(level)

    def error_exc(msg, *args, **kwargs):
        logger.error(msg, *args, exc_info=True, **kwargs)

    logger.error_exc = error_exc  # type: ignore[attr-defined]
    return logger


def _jsonable(obj: object) -> object:
    if isinstance(obj, BaseModel):
        return obj.model_dump(mode="json")
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    return str(obj)


def oneline_object(obj: object, limit: int = 100) -> str:
    """Compact JSON of ``obj`` cut to ``limit`` characters. Pydantic models (certificates, witnesses) are dumped
    field by field."""
    text = json.dumps(obj, ensure_ascii=False, default=_jsonable)
    return text if len(text) <= limit else f"{text[:limit]}..."
