"""Error handling package initialization."""
