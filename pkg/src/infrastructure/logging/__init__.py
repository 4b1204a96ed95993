"""Structured logging setup."""

from infrastructure.logging.setup import configure_logging

__all__ = ["configure_logging"]
