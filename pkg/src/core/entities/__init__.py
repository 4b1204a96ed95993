"""Core entities package initialization."""
