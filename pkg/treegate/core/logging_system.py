"""
Logging system for treegate.

Records carry keyword context (tree, kind, branch, ...) next to the
event name. Outside debug mode they are emitted as one JSON object per
line on stderr, so stdout stays free for reports and transcripts.

Classes:
    ContextLogger: Logger with context support
    LoggingManager: Configures the ``treegate`` logger once
"""

from __future__ import annotations

import json
import logging
import logging.handlers
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import asdict, dataclass, field
from datetime import datetime
from typing import Any, Final

from treegate.core.config import ApplicationConfig, LoggingConfig, get_config

from .singleton import SingletonMeta

PACKAGE_LOGGER: Final = "treegate"
DEBUG_DATE_FORMAT: Final = "%Y-%m-%d %H:%M:%S"
LOG_FILE_MAX_BYTES: Final = 10_000_000
LOG_FILE_BACKUPS: Final = 5

# The statevector engine is the hot path
_QUIET_PACKAGES: Final = ("treegate.qsim",)
_VERBOSE_IN_DEBUG: Final = ("treegate.protocol", "treegate.oracle")

_log_context: ContextVar[dict[str, Any]] = ContextVar("log_context", default={})


@dataclass(slots=True)
class StructuredRecord:
    """One JSON log line."""

    ts: datetime
    level: str
    logger: str
    event: str
    source: str
    context: dict[str, Any] = field(default_factory=dict)
    error: dict[str, Any] | None = None

    @classmethod
    def from_record(
        cls, record: logging.LogRecord, formatter: logging.Formatter
    ) -> StructuredRecord:
        result = cls(
            ts=datetime.fromtimestamp(record.created),
            level=record.levelname,
            logger=record.name,
            event=record.getMessage(),
            source=f"{record.module}:{record.funcName}:{record.lineno}",
            context=dict(_log_context.get({})),
        )
        if record.exc_info and record.exc_info[0] is not None:
            result.error = {
                "type": record.exc_info[0].__name__,
                "message": str(record.exc_info[1]),
                "traceback": formatter.formatException(record.exc_info),
            }
        return result

    def to_json(self) -> str:
        data = asdict(self)
        data["ts"] = self.ts.isoformat()
        return json.dumps(data, ensure_ascii=False, default=str)


class JsonFormatter(logging.Formatter):
    """Formats standard log records as structured JSON."""

    def format(self, record: logging.LogRecord) -> str:
        return StructuredRecord.from_record(record, self).to_json()


class ContextLogger:
    """
    Logger with keyword context.

    Keyword arguments given to a logging call are merged into the
    ambient context for that one record:

        logger.info("branches enumerated", branches=256)
    """

    def __init__(self, name: str) -> None:
        self._logger = logging.getLogger(name)

    @property
    def name(self) -> str:
        return self._logger.name

    def debug(self, event: str, **context: Any) -> None:
        self._emit(logging.DEBUG, event, context)

    def info(self, event: str, **context: Any) -> None:
        self._emit(logging.INFO, event, context)

    def warning(self, event: str, **context: Any) -> None:
        self._emit(logging.WARNING, event, context)

    def error(self, event: str, **context: Any) -> None:
        self._emit(logging.ERROR, event, context)

    def exception(self, event: str, **context: Any) -> None:
        """Logs at error level with the active exception attached."""
        self._emit(logging.ERROR, event, context, exc_info=True)

    def is_enabled_for(self, level: int) -> bool:
        """Level guard for hot paths."""
        return self._logger.isEnabledFor(level)

    def _emit(
        self, level: int, event: str, context: dict[str, Any], exc_info: bool = False
    ) -> None:
        if not self._logger.isEnabledFor(level):
            return
        # stacklevel 3: caller -> level method -> _emit
        with log_context(**context):
            self._logger.log(level, event, exc_info=exc_info, stacklevel=3)

    @contextmanager
    def context(self, **context_data: Any) -> Iterator[None]:
        """Same as :func:`log_context`, bound to a logger for readability."""
        with log_context(**context_data):
            yield


def _console_handler(config: ApplicationConfig) -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(config.logging.level.value)
    if config.debug:
        handler.setFormatter(
            logging.Formatter(config.logging.format_string, datefmt=DEBUG_DATE_FORMAT)
        )
    else:
        handler.setFormatter(JsonFormatter())
    return handler


def _file_handler(logging_config: LoggingConfig) -> logging.Handler:
    handler = logging.handlers.RotatingFileHandler(
        logging_config.log_file,
        maxBytes=LOG_FILE_MAX_BYTES,
        backupCount=LOG_FILE_BACKUPS,
        encoding="utf-8",
    )
    handler.setLevel(logging_config.level.value)
    handler.setFormatter(JsonFormatter())
    return handler


class LoggingManager(metaclass=SingletonMeta):
    """
    Configures the ``treegate`` logger from :func:`get_config`.

    Construction installs the handlers; the metaclass makes sure that
    happens once per process until :meth:`reset`.
    """

    def __init__(self) -> None:
        config = get_config()
        package = logging.getLogger(PACKAGE_LOGGER)
        package.setLevel(config.logging.level.value)
        package.propagate = False

        for handler in package.handlers[:]:
            package.removeHandler(handler)
            handler.close()
        if config.logging.console_output:
            package.addHandler(_console_handler(config))
        if config.logging.log_file is not None:
            package.addHandler(_file_handler(config.logging))

        for name in _QUIET_PACKAGES:
            logging.getLogger(name).setLevel(logging.WARNING)
        for name in _VERBOSE_IN_DEBUG:
            logging.getLogger(name).setLevel(
                logging.DEBUG if config.debug else logging.NOTSET
            )

    @classmethod
    def get_logger(cls, name: str) -> ContextLogger:
        cls()
        return ContextLogger(name)

    @classmethod
    def reset(cls) -> None:
        """Forgets the configuration; the next logger request reconfigures."""
        SingletonMeta.reset_instance(cls)


def get_logger(name: str) -> ContextLogger:
    """
    Returns a logger for a module.

    Example:
        logger = get_logger(__name__)
        logger.info("transcript written", path=str(path))
    """
    return LoggingManager.get_logger(name)


@contextmanager
def log_context(**context_data: Any) -> Iterator[None]:
    """
    Ambient log context for every record emitted inside the block.

    Example:
        with log_context(tree="five-party", kind="cu"):
            logger.info("deriving corrections")
    """
    token = _log_context.set({**_log_context.get({}), **context_data})
    try:
        yield
    finally:
        _log_context.reset(token)
