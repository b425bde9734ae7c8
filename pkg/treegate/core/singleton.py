"""
Singleton metaclass for process-wide managers.

Used by the configuration and logging managers so that every module of
treegate sees the same configuration.

Classes:
    SingletonMeta: Thread-safe metaclass implementing the singleton pattern
"""

import threading
from typing import Any


class SingletonMeta(type):
    """
    Thread-safe metaclass for implementing the singleton pattern.

    Attributes:
        _instances: Instances keyed by class
        _lock: Reentrant lock guarding instance creation; a manager may
            build another singleton from its constructor
    """

    _instances: dict[type, Any] = {}
    _lock = threading.RLock()

    def __call__(cls, *args, **kwargs):
        """Returns the unique instance of the class, creating it once."""
        if cls not in cls._instances:
            with cls._lock:
                # Double-check under the lock
                if cls not in cls._instances:
                    instance = super(SingletonMeta, cls).__call__(*args, **kwargs)
                    cls._instances[cls] = instance
        return cls._instances[cls]

    @classmethod
    def reset_instance(mcs, cls1: type) -> None:
        """
        Drops the singleton instance of a class.

        Args:
            cls1: The class whose instance should be reset
        """
        with mcs._lock:
            mcs._instances.pop(cls1, None)

    @classmethod
    def has_instance(mcs, cls1: type) -> bool:
        """Checks if an instance exists for a given class."""
        return cls1 in mcs._instances
