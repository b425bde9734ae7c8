"""
Infrastructure shared by every treegate package.

Exposed:
    get_config, reset_config, ApplicationConfig: Configuration
    get_logger, log_context: Structured logging
    SingletonMeta: Thread-safe singleton metaclass
"""

from .config import ApplicationConfig, get_config, reset_config
from .logging_system import get_logger, log_context
from .singleton import SingletonMeta

__all__ = [
    "ApplicationConfig",
    "get_config",
    "reset_config",
    "get_logger",
    "log_context",
    "SingletonMeta",
]
