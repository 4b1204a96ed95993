"""Core use cases package initialization."""
