"""Exception classes for fif-wavelet.

This module contains all custom exceptions used in fif-wavelet.
"""

# Import built-in modules
import json
from typing import Any, Dict, List, Optional


class FifWaveletError(Exception):
    """Base exception class for fif-wavelet.

    All exceptions in fif-wavelet should inherit from this class.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)


class ValidationError(FifWaveletError):
    """Raised when an interpolation problem or an input file is invalid.

    Args:
        message: Error message
        errors: Validation errors keyed by dotted field name
        data: Invalid data that caused the error
    """

    def __init__(self, message: str, errors: Optional[Dict[str, Any]] = None, data: Optional[Dict[str, Any]] = None):
        self.errors = errors or {}
        self.data = data or {}
        super().__init__(message)

    @classmethod
    def from_pydantic(cls, exception: Exception, source: str = "input") -> "ValidationError":
        """Create ValidationError from a pydantic validation error.

        Args:
            exception: Original pydantic ``ValidationError``
            source: Name of the validated object, used in the message

        Returns:
            ValidationError instance
        """
        errors: Dict[str, Any] = {}
        for item in getattr(exception, "errors", lambda: [])():
            field = ".".join(str(part) for part in item.get("loc", ())) or "<root>"
            errors[field] = item.get("msg", "invalid value")
        details = "; ".join(f"{field}: {msg}" for field, msg in errors.items())
        return cls(f"Invalid {source}: {details}", errors=errors)

    @classmethod
    def from_json_error(cls, exception: json.JSONDecodeError, source: str = "input") -> "ValidationError":
        """Create ValidationError from a JSON decoding error.

        Args:
            exception: Original JSON decoding error
            source: Path or name of the decoded document

        Returns:
            ValidationError instance
        """
        message = f"Malformed JSON in {source}, line {exception.lineno}, column {exception.colno}: {exception.msg}"
        return cls(message, errors={"line": exception.lineno, "column": exception.colno})


class ConfigurationError(FifWaveletError):
    """Raised when there is a configuration error.

    Args:
        message: Error message
        config_key: The configuration key that caused the error
        config_value: The invalid configuration value
    """

    def __init__(self, message: str, config_key: Optional[str] = None, config_value: Optional[Any] = None):
        self.config_key = config_key
        self.config_value = config_value
        super().__init__(message)


class DomainError(FifWaveletError):
    """Raised when an argument lies outside the domain of an operation.

    Args:
        message: Error message
        parameter: Name of the offending argument
        value: The offending value
    """

    def __init__(self, message: str, parameter: Optional[str] = None, value: Optional[Any] = None):
        self.parameter = parameter
        self.value = value
        super().__init__(message)


class ResourceError(FifWaveletError):
    """Raised when a computation would exceed its memory or enumeration budget.

    Args:
        message: Error message
        requested: Requested amount (points, tuples, ...)
        limit: The budget that was exceeded
    """

    def __init__(self, message: str, requested: Optional[int] = None, limit: Optional[int] = None):
        self.requested = requested
        self.limit = limit
        super().__init__(message)


class AccuracyError(FifWaveletError):
    """Raised when a resolution guard is violated and results would be unreliable.

    Args:
        message: Error message
        guard: Name of the violated guard
        value: The value that violated the guard
        limit: The guard threshold
    """

    def __init__(
        self,
        message: str,
        guard: Optional[str] = None,
        value: Optional[float] = None,
        limit: Optional[float] = None,
    ):
        self.guard = guard
        self.value = value
        self.limit = limit
        super().__init__(message)


class PreconditionError(FifWaveletError):
    """Raised when the hypotheses of a decay theorem do not hold for a problem.

    Args:
        message: Error message
        hypothesis: Short name of the failed hypothesis
        details: Additional error details
    """

    def __init__(self, message: str, hypothesis: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        self.hypothesis = hypothesis
        self.details = details or {}
        super().__init__(message)


class NoSuchMethodError(FifWaveletError):
    """Raised when a requested transform method is not registered.

    Args:
        message: Error message
        method_name: Name of the method that was not found
        available_methods: List of available method names
    """

    def __init__(
        self, message: str, method_name: Optional[str] = None, available_methods: Optional[List[str]] = None
    ):
        self.method_name = method_name
        self.available_methods = available_methods or []
        super().__init__(message)


class PluginError(FifWaveletError):
    """Raised when there is an error with a plugin.

    Args:
        message: Error message
        plugin_name: Name of the plugin that caused the error
        plugin_path: Entry point of the plugin
        details: Additional error details
    """

    def __init__(
        self,
        message: str,
        plugin_name: Optional[str] = None,
        plugin_path: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        self.plugin_name = plugin_name
        self.plugin_path = plugin_path
        self.details = details or {}
        super().__init__(message)
