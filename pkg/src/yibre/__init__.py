"""Exact-arithmetic constructors and identity checks for rime-type Yang-Baxter solutions."""

__version__ = "0.1.0"
