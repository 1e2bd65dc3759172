"""Shared exception types."""


class ParameterError(ValueError):
    """A domain parameter violates its invariants."""


class ConfigError(ParameterError):
    """A mission configuration file is malformed or invalid."""


class NoPathError(RuntimeError):
    """The goal is unreachable from the start at the given start time."""


class EngineError(RuntimeError):
    """Worker pool failure; carries the ids of tasks without a valid result."""

    def __init__(self, message, task_ids=()):
        super().__init__(message)
        self.task_ids = tuple(task_ids)
