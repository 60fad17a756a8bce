"""Command-line front end (``ringlab`` / ``python3 -m ringlab``)."""

from .main import main

__all__ = ["main"]
