"""Singleton metaclass for TraceHankel project."""

import threading


class Singleton(type):
    """Metaclass for creating singleton classes."""

    _instances: dict = {}
    _lock = threading.Lock()

    def __call__(cls, *args, **kwargs):
        """Return the singleton instance of the class, creating it once per process."""
        with Singleton._lock:
            if cls not in cls._instances:
                cls._instances[cls] = super().__call__(*args, **kwargs)
        return cls._instances[cls]
