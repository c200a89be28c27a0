"""HTTP service layer: FastAPI application and its request/response models."""

from .app import app

__all__ = ["app"]
