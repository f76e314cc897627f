"""Explainable similarity between two documents via weighted common n-grams."""

__version__ = "0.1.0"
