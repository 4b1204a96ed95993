"""Infrastructure package initialization."""
