"""Runtime limits.

``max_size`` is read from ``RINGLAB_MAX_SIZE`` unless overridden with
:func:`size_cap`.
"""

from __future__ import annotations

import contextlib
import contextvars
import os

DEFAULT_MAX_SIZE = 1 << 16
# rings at or below this size get full Cayley tables
TABLE_LIMIT = 4096
# triple-wise axiom checks run exhaustively at or below this size
EXHAUSTIVE_AXIOM_LIMIT = 512
AXIOM_SAMPLES = 100_000
ISOMORPHISM_LIMIT = 81

_override: contextvars.ContextVar[int | None] = contextvars.ContextVar("ringlab_max_size", default=None)


def max_size() -> int:
    value = _override.get()
    if value is not None:
        return value
    env = os.environ.get("RINGLAB_MAX_SIZE")
    if env:
        try:
            parsed = int(env)
        except ValueError:
            raise ValueError(f"RINGLAB_MAX_SIZE must be an integer, got {env!r}") from None
        if parsed < 1:
            raise ValueError("RINGLAB_MAX_SIZE must be positive")
        return parsed
    return DEFAULT_MAX_SIZE


@contextlib.contextmanager
def size_cap(limit: int):
    """Temporarily override the element-count cap."""
    if limit < 1:
        raise ValueError("size cap must be positive")
    token = _override.set(limit)
    try:
        yield
    finally:
        _override.reset(token)
