"""HTTP service wrapping the arrangement computations."""

from . import handlers, schemas

__all__ = ["handlers", "schemas"]
