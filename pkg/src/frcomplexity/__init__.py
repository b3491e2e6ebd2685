"""Complexity measurement for French documents."""
__version__ = "0.1.0"
