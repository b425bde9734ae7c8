"""
Configuration for treegate.

Frozen dataclasses hold the configuration; values come from the
environment (optionally a `.env` file) with sensible defaults.

Classes:
    LoggingConfig: Logging system configuration
    SimulationConfig: Simulator and branch-enumeration settings
    ApplicationConfig: Global application configuration
    ConfigManager: Singleton access point
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Final

from dotenv import load_dotenv

from .singleton import SingletonMeta

DEFAULT_LOG_FORMAT: Final[str] = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Numerical tolerances
NORM_TOLERANCE: Final[float] = 1e-10
UNITARITY_TOLERANCE: Final[float] = 1e-10
IMPOSSIBLE_BRANCH_CUTOFF: Final[float] = 1e-12
FIDELITY_TOLERANCE: Final[float] = 1e-9
RETIREMENT_TOLERANCE: Final[float] = 1e-9

DEFAULT_SEED: Final[int] = 42
MAX_WORKERS_LIMIT: Final[int] = 64


class LogLevel(str, Enum):
    """Available log levels."""

    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


@dataclass(slots=True, frozen=True)
class LoggingConfig:
    """Configuration of the logging system."""

    level: LogLevel = LogLevel.WARNING
    format_string: str = DEFAULT_LOG_FORMAT
    log_file: Path | None = None
    console_output: bool = True

    def __post_init__(self) -> None:
        """Creates the log directory if needed."""
        if self.log_file is not None:
            self.log_file.parent.mkdir(parents=True, exist_ok=True)


@dataclass(slots=True, frozen=True)
class SimulationConfig:
    """
    Simulator settings.

    Attributes:
        max_workers: Threads used to fan out branch enumeration
        retire_qubits: Drop measured qubits from the register
        default_seed: Seed used when a sampled policy gives none
    """

    max_workers: int = 1
    retire_qubits: bool = True
    default_seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if not 1 <= self.max_workers <= MAX_WORKERS_LIMIT:
            raise ValueError(
                f"max_workers must be in [1, {MAX_WORKERS_LIMIT}], "
                f"got {self.max_workers}"
            )


@dataclass(slots=True, frozen=True)
class ApplicationConfig:
    """
    Global application configuration.

    Defaults can be overridden through environment variables.
    """

    app_name: str = "treegate"
    version: str = "0.1.0"
    debug: bool = False
    logging: LoggingConfig = field(default_factory=LoggingConfig)
    simulation: SimulationConfig = field(default_factory=SimulationConfig)

    @classmethod
    def from_environment(cls) -> ApplicationConfig:
        """
        Creates a configuration from environment variables.

        Supported variables:
        - TREEGATE_DEBUG: Enables debug mode
        - TREEGATE_LOG_LEVEL: Log level
        - TREEGATE_LOG_FILE: Log file
        - TREEGATE_THREADS: Worker threads for branch enumeration
        - TREEGATE_RETIRE: Qubit retirement after measurement
        - TREEGATE_SEED: Default sampling seed

        Returns:
            Configuration initialized from the environment
        """
        load_dotenv()

        debug = os.getenv("TREEGATE_DEBUG", "false").lower() == "true"

        log_level_str = os.getenv("TREEGATE_LOG_LEVEL", "WARNING").upper()
        log_level = (
            LogLevel(log_level_str)
            if log_level_str in LogLevel.__members__
            else LogLevel.WARNING
        )
        log_file_path = os.getenv("TREEGATE_LOG_FILE")
        log_file = Path(log_file_path) if log_file_path else None
        logging_config = LoggingConfig(level=log_level, log_file=log_file)

        simulation_config = SimulationConfig(
            max_workers=_env_int("TREEGATE_THREADS", 1, upper=MAX_WORKERS_LIMIT),
            retire_qubits=os.getenv("TREEGATE_RETIRE", "true").lower() != "false",
            default_seed=_env_int("TREEGATE_SEED", DEFAULT_SEED, lower=0),
        )

        return cls(
            debug=debug, logging=logging_config, simulation=simulation_config
        )


def _env_int(
    name: str, default: int, lower: int = 1, upper: int | None = None
) -> int:
    """Reads a bounded integer variable, falling back to the default."""
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    if value < lower or (upper is not None and value > upper):
        return default
    return value


class ConfigManager(metaclass=SingletonMeta):
    """Singleton holder of the application configuration."""

    def __init__(self) -> None:
        self._config_instance: ApplicationConfig | None = None

    def get_config(self) -> ApplicationConfig:
        """
        Returns the configuration, loading it lazily from the environment.

        Returns:
            Global application configuration
        """
        if self._config_instance is None:
            self._config_instance = ApplicationConfig.from_environment()
        return self._config_instance

    def reset_config(self) -> None:
        """Forgets the cached configuration (tests, reload)."""
        self._config_instance = None

    @classmethod
    def reset_instance(cls) -> None:
        """Drops the singleton instance."""
        SingletonMeta.reset_instance(cls)


def get_config() -> ApplicationConfig:
    """Returns the global application configuration."""
    return ConfigManager().get_config()


def reset_config() -> None:
    """Forgets the cached configuration."""
    ConfigManager().reset_config()
