"""Exact tropical intersection theory on matroid fans."""

__version__ = "0.1.0"
