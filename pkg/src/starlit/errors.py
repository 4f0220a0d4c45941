from __future__ import annotations

from typing import Any


class InputError(ValueError):
    """Caller supplied data outside an operation's preconditions."""


class InternalInvariantError(RuntimeError):
    """A stage produced a state its correctness argument rules out.

    ``bundle`` carries whatever is needed to reproduce the failure; the
    driver fills in the graph, the lists and the stage log before the
    exception leaves the package.
    """

    def __init__(self, message: str, bundle: dict[str, Any] | None = None):
        super().__init__(message)
        self.bundle: dict[str, Any] = dict(bundle or {})
