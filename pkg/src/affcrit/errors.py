from __future__ import annotations


class PreconditionError(ValueError):
    """An operation was called with arguments outside its domain.

    The CLI maps this to exit status 2.
    """
