"""HTTP service wrapping the core library (FastAPI)."""

from .app import app, create_app

__all__ = ["app", "create_app"]
