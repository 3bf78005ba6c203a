"""
Custom exceptions and error handlers for icx.
Every exception carries the process exit code the CLI reports for it.
"""
import logging
import sys
from typing import Optional

import orjson

from constants import (
    EXIT_BUDGET_ERROR,
    EXIT_CONSTRUCTION_ERROR,
    EXIT_FAILURE,
    EXIT_INPUT_ERROR,
)

logger = logging.getLogger(__name__)


class IcxException(Exception):
    """Base icx exception class."""
    def __init__(self, message: str, exit_code: int = EXIT_FAILURE, error_code: str = None):
        self.message = message
        self.exit_code = exit_code
        self.error_code = error_code or f"ERR_{exit_code}"
        super().__init__(self.message)


class InputException(IcxException):
    """Invalid input: bad arguments, out-of-range indices, wrong graph kind."""
    def __init__(self, message: str, error_code: str = "INPUT_ERROR"):
        super().__init__(message, exit_code=EXIT_INPUT_ERROR, error_code=error_code)


class ParseException(InputException):
    """Malformed input file."""
    def __init__(self, line: int, message: str, source: Optional[str] = None):
        self.line = line
        self.source = source
        where = f"{source}:{line}" if source else f"line {line}"
        super().__init__(f"{where}: {message}", error_code="PARSE_ERROR")


class DimensionMismatchException(InputException):
    """Objects of incompatible sizes were combined."""
    def __init__(self, message: str):
        super().__init__(message, error_code="DIMENSION_MISMATCH")


class BudgetExceededException(IcxException):
    """An exact search would exceed its configured budget."""
    def __init__(self, resource: str, limit: int, actual: Optional[int] = None):
        self.resource = resource
        self.limit = limit
        message = f"{resource} exceeds the configured limit of {limit}"
        if actual is not None:
            message += f" (got {actual})"
        super().__init__(message, exit_code=EXIT_BUDGET_ERROR, error_code="BUDGET_EXCEEDED")


class ConstructionException(IcxException):
    """No verified code could be built within the retry budget."""
    def __init__(self, message: str, diagnostics: dict = None):
        super().__init__(message, exit_code=EXIT_CONSTRUCTION_ERROR, error_code="CONSTRUCTION_FAILED")
        self.diagnostics = diagnostics or {}


class VerificationFailedException(IcxException):
    """A code certificate does not satisfy the decodability condition."""
    def __init__(self, vertex: int, vector_index: int, reason: str):
        self.vertex = vertex
        self.vector_index = vector_index
        super().__init__(
            f"vertex {vertex + 1}, vector {vector_index}: {reason}",
            exit_code=EXIT_FAILURE,
            error_code="VERIFICATION_FAILED",
        )


class InternalInvariantError(IcxException):
    """A property that holds unconditionally was found violated (a bug)."""
    def __init__(self, message: str):
        super().__init__(message, exit_code=EXIT_FAILURE, error_code="INTERNAL_INVARIANT")


def _emit(payload: dict) -> None:
    sys.stderr.write(orjson.dumps(payload, option=orjson.OPT_SORT_KEYS).decode() + "\n")


def cli_exception_handler(exc: IcxException) -> int:
    """Handle icx exceptions: log, report JSON on stderr, return the exit code."""
    logger.error(f"icx error: {exc.message} (Code: {exc.error_code}, Exit: {exc.exit_code})")
    payload = {
        "detail": exc.message,
        "error_code": exc.error_code,
        "exit_code": exc.exit_code,
    }
    if isinstance(exc, ConstructionException) and exc.diagnostics:
        payload["diagnostics"] = exc.diagnostics
    _emit(payload)
    return exc.exit_code


def usage_error_handler(message: str) -> int:
    """Handle command line usage errors reported by click."""
    logger.warning(f"Usage error: {message}")
    _emit({"detail": message, "error_code": "USAGE_ERROR", "exit_code": EXIT_INPUT_ERROR})
    return EXIT_INPUT_ERROR


def general_exception_handler(exc: Exception) -> int:
    """Handle unexpected exceptions."""
    logger.exception(f"Unhandled exception: {type(exc).__name__}: {str(exc)}")
    _emit({"detail": "Internal error", "error_code": "INTERNAL_ERROR", "exit_code": EXIT_FAILURE})
    return EXIT_FAILURE
