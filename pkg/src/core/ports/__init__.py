"""Core ports package initialization."""
